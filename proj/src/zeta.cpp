#include "hyzeta/zeta.hpp"

#include <algorithm>

#include "hyzeta/errors.hpp"

namespace hyzeta {

TowerMat specializeParameter(const TowerExt& tw, const FrobSeries& fs, const ZqPoly& r,
                             const PrecisionProfile& prof, const TowerElem& z) {
    const UnramExt& Z = *tw.base();
    int m = 2 * fs.g;
    int top = std::min<int>(static_cast<int>(fs.Fprime.size()) - 1, prof.NGamma - 1);
    // baby-step/giant-step evaluation: the z-power table is shared by all entries,
    // so the per-coefficient work is a scalar-times-element product
    int blk = 1;
    while (blk * blk < top + 1) ++blk;
    std::vector<TowerElem> zpow(blk + 1);
    zpow[0] = tw.one();
    for (int i = 1; i <= blk; ++i) zpow[i] = tw.mul(zpow[i - 1], z);
    const TowerElem& zBlk = zpow[blk];
    int nblocks = (top + blk) / blk;
    TowerMat acc = TowerMat::zero(m);
    for (int j = nblocks - 1; j >= 0; --j) {
        for (int i = 0; i < m * m; ++i) {
            TowerElem t = tw.mul(acc.e[i], zBlk);
            for (int d = 0; d < blk; ++d) {
                int c = j * blk + d;
                if (c > top) break;
                const ZqElem& cf = fs.Fprime[c].e[i];
                if (cf.isZero()) continue;
                t = tw.add(t, tw.scalarZq(zpow[d], cf));
            }
            acc.e[i] = std::move(t);
        }
    }
    // divide by the unit r(z)^chi1
    TowerElem rz = tw.zero();
    for (int i = r.deg(); i >= 0; --i) rz = tw.add(tw.mul(rz, z), tw.fromZq(r.coeff(i)));
    if (rz.isZero() || rz.val() != 0)
        throw ParameterError("zeta", "parameter not admissible: r(z) is not a unit");
    TowerElem rinv = tw.inv(rz);
    TowerElem rpow = tw.one();
    {
        TowerElem base = rinv;
        int e = prof.chi1;
        while (e) {
            if (e & 1) rpow = tw.mul(rpow, base);
            base = tw.mul(base, base);
            e >>= 1;
        }
    }
    for (auto& e : acc.e) e = tw.mul(e, rpow);
    return acc;
}

TowerMat normFrobenius(const TowerExt& tw, const TowerMat& Fz, int n) {
    if (n <= 1) return Fz;
    // binary decomposition: Norm_2k = sigma^k(Norm_k) Norm_k, Norm_(k+1) = sigma^k(F) Norm_k
    int bits = 0;
    while ((n >> bits) > 1) ++bits;
    TowerMat acc = Fz;
    int len = 1;
    for (int i = bits - 1; i >= 0; --i) {
        acc = tw.mMul(tw.mSigmaPow(acc, len), acc);
        len *= 2;
        if ((n >> i) & 1) {
            acc = tw.mMul(tw.mSigmaPow(Fz, len), acc);
            len += 1;
        }
    }
    return acc;
}

TowerMat normFrobeniusNaive(const TowerExt& tw, const TowerMat& Fz, int n) {
    TowerMat acc = Fz;
    for (int i = 1; i < n; ++i) acc = tw.mMul(tw.mSigmaPow(Fz, i), acc);
    return acc;
}

namespace {

// one scalar residue out of a tower element that must be a Z2 constant mod 2^bits
BigInt towerConstResidue(const TowerExt& tw, const TowerElem& e, int bits) {
    const UnramExt& Z = *tw.base();
    const ZWork& W = Z.work();
    for (int i = 1; i < static_cast<int>(e.c.size()); ++i)
        if (e.c[i].val() < bits)
            throw PrecisionError("zeta", "characteristic coefficient is not in Z2 at precision");
    if (e.isZero()) return BigInt(0);
    const ZqElem& c0 = e.c.empty() ? ZqElem{} : e.c[0];
    for (int i = 1; i < static_cast<int>(c0.c.size()); ++i)
        if (c0.c[i].val() < bits)
            throw PrecisionError("zeta", "characteristic coefficient is not rational at precision");
    if (c0.c.empty()) return BigInt(0);
    const PadicScalar& s = c0.c[0];
    if (s.isZero() || s.val() >= bits) return BigInt(0);
    if (s.val() < 0) throw PrecisionError("zeta", "characteristic coefficient has a denominator");
    return BigInt::fromMagnitude(W.residue(s, bits), false);
}

using TPoly = std::vector<TowerElem>;  // polynomial in lambda over the tower

TPoly tpAdd(const TowerExt& tw, const TPoly& a, const TPoly& b) {
    TPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        TowerElem x = i < a.size() ? a[i] : tw.zero();
        if (i < b.size()) x = tw.add(x, b[i]);
        r[i] = x;
    }
    return r;
}

TPoly tpScale(const TowerExt& tw, const TPoly& a, const TowerElem& s) {
    TPoly r = a;
    for (auto& e : r) e = tw.mul(e, s);
    return r;
}

// multiply by (lambda - d)
TPoly tpShiftScale(const TowerExt& tw, const TPoly& a, const TowerElem& d) {
    TPoly r(a.size() + 1);
    for (size_t i = 0; i < a.size(); ++i) {
        r[i + 1] = tw.add(r[i + 1].isZero() ? tw.zero() : r[i + 1], a[i]);
        r[i] = tw.sub(r[i].isZero() ? tw.zero() : r[i], tw.mul(d, a[i]));
    }
    return r;
}

}  // namespace

std::vector<BigInt> charPolyDetIminusT(const TowerExt& tw, const TowerMat& A, int bits) {
    const UnramExt& Z = *tw.base();
    int m = A.n;
    std::int64_t v = tw.mVal(A);
    int e = v < 0 ? static_cast<int>(-v) : 0;
    TowerMat S = A;
    if (e) for (auto& x : S.e) x = tw.shift2(x, e);

    // Hessenberg form by similarity, pivoting on minimal valuation
    for (int col = 0; col + 2 < m; ++col) {
        int best = -1;
        std::int64_t bv = PadicScalar::kZeroVal;
        for (int r = col + 1; r < m; ++r) {
            std::int64_t val = S.at(r, col).val();
            if (val < bv) {
                bv = val;
                best = r;
            }
        }
        if (best < 0) continue;  // column already clear
        if (best != col + 1) {
            for (int j = 0; j < m; ++j) std::swap(S.at(best, j), S.at(col + 1, j));
            for (int i = 0; i < m; ++i) std::swap(S.at(i, best), S.at(i, col + 1));
        }
        TowerElem pinv = tw.inv(S.at(col + 1, col));
        for (int r = col + 2; r < m; ++r) {
            TowerElem f = tw.mul(S.at(r, col), pinv);
            if (f.isZero()) continue;
            for (int j = 0; j < m; ++j) S.at(r, j) = tw.sub(S.at(r, j), tw.mul(f, S.at(col + 1, j)));
            for (int i = 0; i < m; ++i) S.at(i, col + 1) = tw.add(S.at(i, col + 1), tw.mul(f, S.at(i, r)));
        }
    }

    // characteristic polynomials of leading principal minors:
    // p_k = (x - h_kk) p_(k-1) - sum_i h_ik (h_(i+1,i) ... h_(k,k-1)) p_(i-1)
    std::vector<TPoly> p(m + 1);
    p[0] = TPoly{tw.one()};
    for (int k = 1; k <= m; ++k) {
        TPoly cur = tpShiftScale(tw, p[k - 1], S.at(k - 1, k - 1));
        TowerElem sub = tw.one();
        for (int i = k - 1; i >= 1; --i) {
            // sub = h_(i+1,i) ... h_(k,k-1) built downward
            sub = tw.mul(sub, S.at(i, i - 1));
            TowerElem w = tw.mul(S.at(i - 1, k - 1), sub);
            cur = tpAdd(tw, cur, tpScale(tw, p[i - 1], tw.neg(w)));
        }
        p[k] = std::move(cur);
    }

    // det(I - A T): coefficient of T^i is a_(m-i) / 2^(e i), a = charpoly of S
    std::vector<BigInt> out(m + 1);
    for (int i = 0; i <= m; ++i) {
        TowerElem ai = p[m][m - i];
        TowerElem c = tw.shift2(ai, -e * i);
        if (c.val() < 0) throw PrecisionError("zeta", "characteristic coefficient has a denominator");
        out[i] = towerConstResidue(tw, c, bits);
    }
    return out;
}

std::vector<BigInt> charPolyCofactorOracle(const TowerExt& tw, const TowerMat& A, int bits) {
    // det(I - A T) by Leibniz over all permutations (division-free; m <= 6)
    int m = A.n;
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    TPoly acc(m + 1, tw.zero());
    std::vector<int> idx(m);
    // iterate permutations with parity tracking (Heap's algorithm is overkill; use std)
    std::vector<int> p = perm;
    auto parity = [](std::vector<int> q) {
        int sw = 0;
        for (size_t i = 0; i < q.size(); ++i)
            while (q[i] != static_cast<int>(i)) {
                std::swap(q[i], q[q[i]]);
                ++sw;
            }
        return sw % 2;
    };
    do {
        TPoly term{tw.one()};
        for (int i = 0; i < m; ++i) {
            // entry (I - A T)_(i, p[i]) = delta - A_(i,p) T
            TowerElem aij = tw.neg(A.at(i, p[i]));
            TPoly factor;
            if (p[i] == i) {
                factor = TPoly{tw.one(), aij};
            } else {
                factor = TPoly{tw.zero(), aij};
            }
            // term *= factor
            TPoly next(term.size() + factor.size() - 1, tw.zero());
            for (size_t x = 0; x < term.size(); ++x)
                for (size_t y = 0; y < factor.size(); ++y)
                    next[x + y] = tw.add(next[x + y], tw.mul(term[x], factor[y]));
            term = std::move(next);
            if (term.size() > static_cast<size_t>(m + 1)) term.resize(m + 1);
        }
        if (parity(p)) {
            for (auto& e : term) e = tw.neg(e);
        }
        acc = tpAdd(tw, acc, term);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<BigInt> out(m + 1);
    for (int i = 0; i <= m; ++i) out[i] = towerConstResidue(tw, acc[i], bits);
    return out;
}

ZetaNumerator completeByFunctionalEquation(const std::vector<BigInt>& c, int g, const BigInt& qn,
                                           int Nf) {
    // The Weil window can close at exactly |b_i| = 2^(Nf-1) (e.g. b_1 = -2 sqrt(qn)
    // with a n g even), where the symmetric residue mod 2^Nf is ambiguous. Two guard
    // bits break the tie; the pipeline carries far more precision than Nf here.
    int lift = Nf + 2;
    ZetaNumerator zn;
    zn.g = g;
    zn.qn = qn;
    zn.b.assign(2 * g + 1, BigInt(0));
    for (int i = 0; i <= g; ++i)
        zn.b[i] = BigInt::symmetricFromResidue(c[i].residueMod2k(lift), lift);
    if (!(zn.b[0] == BigInt(1)))
        throw PrecisionError("zeta", "precision or admissibility failure: constant term is not 1");
    for (int i = 0; i < g; ++i) zn.b[2 * g - i] = BigInt::pow(qn, g - i) * zn.b[i];
    // Weil coefficient bounds: b_i^2 <= binom(2g,i)^2 qn^i
    for (int i = 0; i <= 2 * g; ++i) {
        BigInt bound = BigInt::binomial(2 * g, i);
        bound = bound * bound * BigInt::pow(qn, i);
        if (bound < zn.b[i] * zn.b[i])
            throw PrecisionError("zeta", "precision or admissibility failure: Weil bound violated");
    }
    assembleZeta(zn);
    return zn;
}

void assembleZeta(ZetaNumerator& zn) {
    int g = zn.g;
    // power sums from e_i = (-1)^i b_i via Newton's identities
    std::vector<BigInt> e(2 * g + 1);
    for (int i = 0; i <= 2 * g; ++i) e[i] = (i % 2) ? -zn.b[i] : zn.b[i];
    std::vector<BigInt> s(2 * g + 1, BigInt(0));
    for (int m = 1; m <= 2 * g; ++m) {
        BigInt acc = (m % 2) ? e[m] * BigInt(m) : -(e[m] * BigInt(m));
        for (int i = 1; i < m; ++i) {
            BigInt t = e[i] * s[m - i];
            acc += (i % 2) ? t : -t;
        }
        s[m] = acc;
    }
    zn.counts.assign(2 * g, BigInt(0));
    for (int m = 1; m <= 2 * g; ++m) {
        zn.counts[m - 1] = BigInt::pow(zn.qn, m) + BigInt(1) - s[m];
        if (zn.counts[m - 1] < BigInt(1))
            throw PrecisionError("zeta", "precision or admissibility failure: nonpositive count");
        // |s_m| <= 2g sqrt(qn^m): s_m^2 <= 4g^2 qn^m
        if (BigInt(4 * g * g) * BigInt::pow(zn.qn, m) < s[m] * s[m])
            throw PrecisionError("zeta", "precision or admissibility failure: count out of range");
    }
}

std::string zetaRecord(const ZetaNumerator& zn) {
    std::string out = "P:";
    for (const auto& b : zn.b) out += " " + b.toDecimal();
    out += "\nzeta: P(T)/((1-T)(1-" + zn.qn.toDecimal() + "*T))\ncounts:";
    for (const auto& c : zn.counts) out += " " + c.toDecimal();
    out += "\n";
    return out;
}

}  // namespace hyzeta
