#include "hyzeta/family.hpp"

#include <algorithm>

namespace hyzeta {

static const ZqPoly kPZero{};

int ZqBiPoly::degG() const {
    int d = -1;
    for (const auto& c : cX) d = std::max(d, c.deg());
    return d;
}

const ZqPoly& ZqBiPoly::coeffX(int j) const {
    if (j < 0 || j >= static_cast<int>(cX.size())) return kPZero;
    return cX[j];
}

void ZqBiPoly::trim() {
    while (!cX.empty() && cX.back().isZero()) cX.pop_back();
}

ZqBiPoly biFromResidue(const UnramExt& zq, const FfBiPoly& p) {
    ZqBiPoly r;
    r.cX.resize(p.degX() + 1);
    for (int j = 0; j <= p.degX(); ++j) {
        const FfPoly& cj = p.coeffX(j);
        r.cX[j].c.resize(cj.degree() + 1);
        for (int i = 0; i <= cj.degree(); ++i) r.cX[j].c[i] = zq.liftResidue(cj.coeff(i));
        r.cX[j].trim();
    }
    r.trim();
    return r;
}

FfBiPoly biResidue(const UnramExt& zq, const ZqBiPoly& a) {
    const BinField* F = zq.residueField();
    std::vector<FfPoly> cs(a.cX.size(), FfPoly(F));
    for (size_t j = 0; j < a.cX.size(); ++j) {
        std::vector<Gf2Poly> g(a.cX[j].c.size());
        for (size_t i = 0; i < a.cX[j].c.size(); ++i) g[i] = zq.residue(a.cX[j].c[i]);
        cs[j] = FfPoly(F, std::move(g));
    }
    return FfBiPoly(F, std::move(cs));
}

ZqBiPoly biAdd(const UnramExt& zq, const ZqBiPoly& a, const ZqBiPoly& b) {
    ZqBiPoly r;
    r.cX.resize(std::max(a.cX.size(), b.cX.size()));
    for (size_t j = 0; j < r.cX.size(); ++j)
        r.cX[j] = zq.pAdd(a.coeffX(static_cast<int>(j)), b.coeffX(static_cast<int>(j)));
    r.trim();
    return r;
}

ZqBiPoly biSub(const UnramExt& zq, const ZqBiPoly& a, const ZqBiPoly& b) {
    ZqBiPoly r;
    r.cX.resize(std::max(a.cX.size(), b.cX.size()));
    for (size_t j = 0; j < r.cX.size(); ++j)
        r.cX[j] = zq.pSub(a.coeffX(static_cast<int>(j)), b.coeffX(static_cast<int>(j)));
    r.trim();
    return r;
}

ZqBiPoly biMul(const UnramExt& zq, const ZqBiPoly& a, const ZqBiPoly& b) {
    ZqBiPoly r;
    if (a.isZero() || b.isZero()) return r;
    r.cX.resize(a.cX.size() + b.cX.size() - 1);
    for (size_t i = 0; i < a.cX.size(); ++i) {
        if (a.cX[i].isZero()) continue;
        for (size_t j = 0; j < b.cX.size(); ++j)
            r.cX[i + j] = zq.pAdd(r.cX[i + j], zq.pMul(a.cX[i], b.cX[j]));
    }
    r.trim();
    return r;
}

ZqBiPoly biMulInt(const UnramExt& zq, const ZqBiPoly& a, std::int64_t k) {
    ZqBiPoly r = a;
    for (auto& c : r.cX) c = zq.pMulInt(c, k);
    r.trim();
    return r;
}

ZqBiPoly biScaleZq(const UnramExt& zq, const ZqBiPoly& a, const ZqElem& s) {
    ZqBiPoly r = a;
    for (auto& c : r.cX) c = zq.pScale(c, s);
    r.trim();
    return r;
}

ZqBiPoly biDerivX(const UnramExt& zq, const ZqBiPoly& a) {
    ZqBiPoly r;
    if (a.degX() < 1) return r;
    r.cX.resize(a.cX.size() - 1);
    for (int j = 1; j <= a.degX(); ++j) r.cX[j - 1] = zq.pMulInt(a.cX[j], j);
    r.trim();
    return r;
}

ZqBiPoly biDerivG(const UnramExt& zq, const ZqBiPoly& a) {
    ZqBiPoly r = a;
    for (auto& c : r.cX) c = zq.pDerivative(c);
    r.trim();
    return r;
}

void biDivmodX(const UnramExt& zq, const ZqBiPoly& a, const ZqBiPoly& b, ZqBiPoly& q, ZqBiPoly& r) {
    int db = b.degX();
    if (db < 0) throw std::invalid_argument("biDivmodX: division by zero");
    const ZqPoly& lead = b.coeffX(db);
    if (lead.deg() != 0 || lead.coeff(0).val() != 0)
        throw std::invalid_argument("biDivmodX: leading X-coefficient must be a Gamma-free unit");
    ZqElem leadInv = zq.inv(lead.coeff(0));
    r = a;
    q = ZqBiPoly{};
    if (r.degX() >= db) q.cX.assign(r.degX() - db + 1, ZqPoly{});
    while (r.degX() >= db) {
        int d = r.degX();
        ZqPoly f = zq.pScale(r.cX[d], leadInv);
        q.cX[d - db] = zq.pAdd(q.cX[d - db], f);
        for (int i = 0; i <= db; ++i)
            r.cX[d - db + i] = zq.pSub(r.cX[d - db + i], zq.pMul(f, b.coeffX(i)));
        r.trim();
        if (r.degX() == d) throw std::logic_error("biDivmodX: stuck");
    }
    q.trim();
}

ZqBiPoly biDivExactX(const UnramExt& zq, const ZqBiPoly& a, const ZqBiPoly& b) {
    ZqBiPoly q, r;
    biDivmodX(zq, a, b, q, r);
    if (!r.isZero()) throw std::domain_error("biDivExactX: division not exact");
    return q;
}

ZqPoly biAtGamma0(const UnramExt& zq, const ZqBiPoly& a) {
    (void)zq;
    ZqPoly r;
    r.c.resize(a.cX.size());
    for (size_t j = 0; j < a.cX.size(); ++j) r.c[j] = a.cX[j].coeff(0);
    r.trim();
    return r;
}

ZqPoly biAtGamma(const UnramExt& zq, const ZqBiPoly& a, const ZqElem& gamma) {
    ZqPoly r;
    r.c.resize(a.cX.size());
    for (size_t j = 0; j < a.cX.size(); ++j) r.c[j] = zq.pEval(a.cX[j], gamma);
    r.trim();
    return r;
}

bool biEq(const UnramExt& zq, const ZqBiPoly& a, const ZqBiPoly& b, int bits) {
    size_t m = std::max(a.cX.size(), b.cX.size());
    for (size_t j = 0; j < m; ++j)
        if (!zq.pEqMod(a.coeffX(static_cast<int>(j)), b.coeffX(static_cast<int>(j)), bits)) return false;
    return true;
}

// ---------------------------------------------------------------- validation

namespace {

// determinant of a square matrix of FfPoly by cofactor expansion (small sizes)
FfPoly detFfMat(const std::vector<std::vector<FfPoly>>& M, const BinField* F) {
    size_t n = M.size();
    if (n == 0) return FfPoly::constant(F, Gf2Poly::one());
    if (n == 1) return M[0][0];
    FfPoly det(F);
    for (size_t k = 0; k < n; ++k) {
        if (M[0][k].isZero()) continue;
        std::vector<std::vector<FfPoly>> minor(n - 1, std::vector<FfPoly>(n - 1, FfPoly(F)));
        for (size_t i = 1; i < n; ++i) {
            size_t cc = 0;
            for (size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                minor[i - 1][cc++] = M[i][j];
            }
        }
        det = det + M[0][k] * detFfMat(minor, F);  // char 2: signs are trivial
    }
    return det;
}

// resultant of monic-in-X H with B, over Fq[Gamma], via the multiplication matrix on Fq[G][X]/H
FfPoly resultantXBar(const FfBiPoly& H, const FfBiPoly& B) {
    const BinField* F = H.field();
    int s = H.degX();
    if (s == 0) return FfPoly::constant(F, Gf2Poly::one());
    FfBiPoly q, p;
    FfBiPoly::divmodX(B, H, q, p);
    std::vector<std::vector<FfPoly>> M(s, std::vector<FfPoly>(s, FfPoly(F)));
    FfBiPoly cur = p;
    for (int k = 0; k < s; ++k) {
        for (int j = 0; j < s; ++j) M[j][k] = cur.coeffX(j);
        if (k + 1 < s) {
            std::vector<FfPoly> sh(cur.degX() + 2, FfPoly(F));
            for (int j = 0; j <= cur.degX(); ++j) sh[j + 1] = cur.coeffX(j);
            FfBiPoly qq, rr;
            FfBiPoly::divmodX(FfBiPoly(F, std::move(sh)), H, qq, rr);
            cur = rr;
        }
    }
    return detFfMat(M, F);
}

// squarefree layers of a monic univariate h: layers[m] = product of factors with multiplicity > m
std::vector<FfPoly> squarefreeLayers(const FfPoly& h) {
    std::vector<FfPoly> layers;
    FfPoly cur = h.monic();
    while (cur.degree() > 0) {
        FfPoly rad = radicalAndMultiplicity(cur).first;
        layers.push_back(rad);
        cur = cur.divExact(rad).monic();
    }
    return layers;
}

}  // namespace

FamilyInput validateFamily(const RawFamily& raw) {
    FamilyInput fi;
    fi.Fq = raw.Fq;
    fi.a = raw.Fq->degree();
    fi.g = raw.genus;
    if (fi.g < 1) throw FamilyError("family", "genus must be at least 1");
    fi.Hbar = raw.H;
    fi.Qfbar = raw.Qf;
    fi.hbar = raw.h;
    const BinField* F = fi.Fq;

    if (fi.hbar.isZero()) throw FamilyError("family", "h is zero");
    fi.degXh = fi.hbar.degX();
    if (fi.degXh > fi.g)
        throw FamilyError("family", "deg_X h exceeds the genus (curve model not in required shape)");
    const FfPoly& hl = fi.hbar.coeffX(fi.degXh);
    if (hl.degree() != 0)
        throw FamilyError("family", "leading X-coefficient of h must be Gamma-free");

    if (fi.Hbar.isZero() || !fi.Hbar.isMonicInX())
        throw FamilyError("family", "H must be monic in X");
    fi.s = fi.Hbar.degX();
    fi.constantH = fi.s == 0;
    fi.eta = fi.constantH ? 0 : fi.Hbar.degG();

    int dQf = fi.Qfbar.degX();
    if (fi.Qfbar.isZero() || !(fi.Qfbar.coeffX(dQf).degree() == 0 &&
                               fi.Qfbar.coeffX(dQf).coeff(0) == Gf2Poly::one()))
        throw FamilyError("family", "Qf must be monic in X");

    fi.fbar = fi.Hbar * fi.Qfbar;
    if (fi.fbar.degX() != 2 * fi.g + 1 || !fi.fbar.isMonicInX())
        throw FamilyError("family", "degree of f wrong: H*Qf must be monic in X of degree 2g+1");

    // radical structure at the Gamma = 0 fiber
    FfPoly h0 = fi.hbar.evalG(Gf2Poly(), F, nullptr);
    if (h0.isZero()) throw FamilyError("family", "h vanishes on the Gamma=0 fiber");
    auto [rad0, mult0] = radicalAndMultiplicity(h0);
    fi.Dtilde = mult0;
    FfPoly H0 = fi.Hbar.evalG(Gf2Poly(), F, nullptr);
    if (!(H0.monic() == rad0))
        throw FamilyError("family", "H is not the radical of h (checked on the Gamma=0 fiber)");

    // h | H^Dtilde and H | h as bivariate polynomials
    FfBiPoly Hpow(F, {FfPoly::constant(F, Gf2Poly::one())});
    for (int i = 0; i < fi.Dtilde; ++i) Hpow = Hpow * fi.Hbar;
    {
        Gf2Poly cinv = F->inv(hl.coeff(0));
        std::vector<FfPoly> cs(fi.hbar.degX() + 1, FfPoly(F));
        for (int j = 0; j <= fi.hbar.degX(); ++j) cs[j] = fi.hbar.coeffX(j).scale(cinv);
        FfBiPoly hmon(F, std::move(cs));
        FfBiPoly q;
        if (!Hpow.dividesExactly(hmon, &q))
            throw FamilyError("family", "h does not divide H^Dtilde");
        std::vector<FfPoly> qs(q.degX() + 1, FfPoly(F));
        for (int j = 0; j <= q.degX(); ++j) qs[j] = q.coeffX(j).scale(cinv);
        fi.Qhbar = FfBiPoly(F, std::move(qs));
        FfBiPoly qh;
        if (!fi.hbar.dividesExactly(fi.Hbar, &qh))
            throw FamilyError("family", "H does not divide h");
        fi.QHbar = qh;
    }

    fi.kappa = std::max(fi.fbar.degG(), 2 * fi.hbar.degG());

    if (fi.constantH) {
        fi.rbar = FfPoly::constant(F, Gf2Poly::one());
    } else {
        FfBiPoly P = fi.Qfbar * fi.Hbar.derivativeX();
        fi.rbar = resultantXBar(fi.Hbar, P);
        if (fi.rbar.isZero())
            throw FamilyError("family", "resultant of H and Qf*H' vanishes identically");
        if (fi.rbar.coeff(0).isZero())
            throw FamilyError("family",
                              "Gamma=0 fiber not hyperelliptic: r(0) reduces to zero modulo 2");
    }
    return fi;
}

bool admissible(const FamilyInput& fi, const Gf2Poly& gamma, const BinField* bigF,
                const SubfieldEmbedding* emb) {
    if (fi.constantH) return true;
    Gf2Poly acc;
    for (int i = fi.rbar.degree(); i >= 0; --i) {
        acc = bigF->mul(acc, gamma);
        acc = acc + (emb ? emb->embed(fi.rbar.coeff(i)) : fi.rbar.coeff(i));
    }
    return !bigF->reduce(acc).isZero();
}

// ---------------------------------------------------------------- lifting

namespace {

ZqPoly detZqPolyMat(const UnramExt& zq, const std::vector<std::vector<ZqPoly>>& M) {
    size_t n = M.size();
    if (n == 0) {
        ZqPoly one;
        one.c.push_back(zq.one());
        return one;
    }
    if (n == 1) return M[0][0];
    ZqPoly det;
    for (size_t k = 0; k < n; ++k) {
        if (M[0][k].isZero()) continue;
        std::vector<std::vector<ZqPoly>> minor(n - 1, std::vector<ZqPoly>(n - 1));
        for (size_t i = 1; i < n; ++i) {
            size_t cc = 0;
            for (size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                minor[i - 1][cc++] = M[i][j];
            }
        }
        ZqPoly term = zq.pMul(M[0][k], detZqPolyMat(zq, minor));
        det = zq.pAdd(det, (k % 2) ? zq.pMulInt(term, -1) : term);
    }
    return det;
}

// multiplication-by-(B mod H) matrix on Zq[G][X]/H; column k is X^k * B mod H
std::vector<std::vector<ZqPoly>> multMatrix(const UnramExt& zq, const ZqBiPoly& H, const ZqBiPoly& B) {
    int s = H.degX();
    ZqBiPoly q, p;
    biDivmodX(zq, B, H, q, p);
    std::vector<std::vector<ZqPoly>> M(s, std::vector<ZqPoly>(s));
    ZqBiPoly cur = p;
    for (int k = 0; k < s; ++k) {
        for (int j = 0; j < s; ++j) M[j][k] = cur.coeffX(j);
        if (k + 1 < s) {
            ZqBiPoly shifted;
            shifted.cX.assign(cur.cX.size() + 1, ZqPoly{});
            for (size_t j = 0; j < cur.cX.size(); ++j) shifted.cX[j + 1] = cur.cX[j];
            ZqBiPoly qq, rr;
            biDivmodX(zq, shifted, H, qq, rr);
            cur = rr;
        }
    }
    return M;
}

}  // namespace

ZqPoly resultantX(const UnramExt& zq, const ZqBiPoly& A, const ZqBiPoly& B) {
    if (A.degX() == 0) {
        ZqPoly one;
        one.c.push_back(zq.one());
        return one;
    }
    return detZqPolyMat(zq, multMatrix(zq, A, B));
}

ZqMat sylvesterMat(const UnramExt& zq, const ZqPoly& A, const ZqPoly& B) {
    int m = A.deg(), n = B.deg();
    if (m < 0 || n < 0) throw std::invalid_argument("sylvesterMat: zero polynomial");
    ZqMat S = ZqMat::zero(m + n);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) S.at(r, r + i) = A.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) S.at(n + r, r + i) = B.coeff(n - i);
    (void)zq;
    return S;
}

LiftedFamily liftFamily(const FamilyInput& fi, const UnramExt* zq) {
    LiftedFamily lf;
    lf.zq = zq;
    lf.g = fi.g;
    lf.s = fi.s;
    lf.Dtilde = fi.Dtilde;
    lf.kappa = fi.kappa;
    lf.eta = fi.eta;
    lf.constantH = fi.constantH;
    const UnramExt& Z = *zq;
    const BinField* F = fi.Fq;

    lf.Qf = biFromResidue(Z, fi.Qfbar);

    // The divisor identities must hold exactly over Zq: h = H*QH and h*Qh = H^Dtilde.
    // For Gamma-free h they are arranged through the squarefree layers of h; otherwise
    // the lifted presentation must divide exactly as it stands.
    Gf2Poly cbar = fi.hbar.coeffX(fi.degXh).coeff(0);
    ZqElem c = Z.liftResidue(cbar);
    if (fi.hbar.degG() == 0 && fi.Hbar.degG() == 0) {
        FfPoly h0 = fi.hbar.evalG(Gf2Poly(), F, nullptr);
        std::vector<FfPoly> layersBar = squarefreeLayers(h0.scale(F->inv(cbar)));
        // S[m] = product of factors with multiplicity exactly m+1 = layer[m] / layer[m+1]
        std::vector<FfPoly> pieces(layersBar.size(), FfPoly(F));
        for (size_t m = 0; m < layersBar.size(); ++m) {
            FfPoly next = (m + 1 < layersBar.size()) ? layersBar[m + 1]
                                                     : FfPoly::constant(F, Gf2Poly::one());
            pieces[m] = layersBar[m].divExact(next).monic();
        }
        auto asBi = [&](const FfPoly& p) {
            std::vector<FfPoly> cs;
            for (int j = 0; j <= p.degree(); ++j) cs.push_back(FfPoly::constant(F, p.coeff(j)));
            return biFromResidue(Z, FfBiPoly(F, std::move(cs)));
        };
        ZqBiPoly one;
        one.cX.push_back(ZqPoly{});
        one.cX[0].c.push_back(Z.one());
        ZqBiPoly H = one, QH = one, Qh = one;
        for (size_t m = 0; m < pieces.size(); ++m) {
            ZqBiPoly Sm = asBi(pieces[m]);
            H = biMul(Z, H, Sm);
            for (size_t t = 0; t < m; ++t) QH = biMul(Z, QH, Sm);
            for (size_t t = m + 1; t < static_cast<size_t>(fi.Dtilde); ++t) Qh = biMul(Z, Qh, Sm);
        }
        lf.H = H;
        lf.QH = biScaleZq(Z, QH, c);
        lf.h = biMul(Z, lf.H, lf.QH);
        lf.Qh = biScaleZq(Z, Qh, Z.inv(c));
    } else {
        lf.H = biFromResidue(Z, fi.Hbar);
        lf.QH = biFromResidue(Z, fi.QHbar);
        lf.h = biMul(Z, lf.H, lf.QH);
        ZqBiPoly Hpow;
        Hpow.cX.push_back(ZqPoly{});
        Hpow.cX[0].c.push_back(Z.one());
        for (int i = 0; i < fi.Dtilde; ++i) Hpow = biMul(Z, Hpow, lf.H);
        try {
            lf.Qh = biDivExactX(Z, Hpow, lf.h);
        } catch (const std::exception&) {
            throw FamilyError("family",
                              "cannot lift h(X,Gamma) with exact divisor identities; "
                              "a Gamma-free h (or an exactly factoring presentation) is required");
        }
    }

    lf.f = biMul(Z, lf.H, lf.Qf);
    ZqBiPoly h2 = biMul(Z, lf.h, lf.h);
    lf.v = biAdd(Z, biMulInt(Z, lf.f, 4), h2);
    lf.u = biAdd(Z, biMulInt(Z, biDerivX(Z, lf.f), 2), biMul(Z, lf.h, biDerivX(Z, lf.h)));

    int checkBits = Z.work().relBits() - 8;
    if (!biEq(Z, biDerivX(Z, lf.v), biMulInt(Z, lf.u, 2), checkBits))
        throw std::logic_error("liftFamily: v' != 2u");
    if (!(biResidue(Z, lf.h) == fi.hbar)) throw std::logic_error("liftFamily: h does not lift hbar");
    if (!(biResidue(Z, lf.H) == fi.Hbar)) throw std::logic_error("liftFamily: H does not lift Hbar");

    if (fi.constantH) {
        lf.r.c.push_back(Z.one());
        lf.rho = 0;
        return lf;
    }

    ZqBiPoly Hprime = biDerivX(Z, lf.H);
    ZqBiPoly P = biMul(Z, lf.Qf, Hprime);
    lf.r = resultantX(Z, lf.H, P);
    lf.rho = lf.r.deg();
    ZqElem r0 = lf.r.coeff(0);
    if (r0.isZero() || r0.val() != 0)
        throw FamilyError("family", "Gamma=0 fiber not hyperelliptic: r(0) is not a 2-adic unit");

    // Bezout data: x = adj(M) e0 solves M x = r e0, i.e. bezB * P == r mod H
    auto M = multMatrix(Z, lf.H, P);
    int s = lf.s;
    lf.bezB.cX.assign(s, ZqPoly{});
    for (int i = 0; i < s; ++i) {
        std::vector<std::vector<ZqPoly>> minor(s - 1, std::vector<ZqPoly>(s - 1));
        for (int r = 1; r < s; ++r) {
            int cc = 0;
            for (int cidx = 0; cidx < s; ++cidx) {
                if (cidx == i) continue;
                minor[r - 1][cc++] = M[r][cidx];
            }
        }
        ZqPoly mi = detZqPolyMat(Z, minor);
        lf.bezB.cX[i] = (i % 2) ? Z.pMulInt(mi, -1) : mi;
    }
    lf.bezB.trim();
    ZqBiPoly rAsBi;
    rAsBi.cX.push_back(lf.r);
    ZqBiPoly num = biSub(Z, rAsBi, biMul(Z, lf.bezB, P));
    lf.bezA = biDivExactX(Z, num, lf.H);
    ZqBiPoly recon = biAdd(Z, biMul(Z, lf.bezA, lf.H), biMul(Z, lf.bezB, P));
    if (!biEq(Z, recon, rAsBi, checkBits)) throw std::logic_error("liftFamily: Bezout identity failed");
    return lf;
}

// ---------------------------------------------------------------- precision profile

namespace {

// smallest phi such that for all k in 0..64 with A(k) >= 1: phi + k - 3 >= log2(A(k))
int phiForBound(const std::vector<std::int64_t>& A) {
    for (int phi = 1; phi < 512; ++phi) {
        bool ok = true;
        for (size_t k = 0; k < A.size() && ok; ++k) {
            if (A[k] < 1) continue;
            int e = phi + static_cast<int>(k) - 3;
            if (e < 0)
                ok = false;
            else if (e < 62 && (static_cast<std::int64_t>(1) << e) < A[k])
                ok = false;
        }
        if (ok) return phi;
    }
    throw std::logic_error("phiForBound: no phi found");
}

int floorLog2(std::int64_t v) {
    int r = -1;
    while (v > 0) {
        v >>= 1;
        ++r;
    }
    return r;
}

}  // namespace

int newtonCountPoly(int target, int asS, int bsS, int g) {
    for (int M = std::max(target + 3, 4);; ++M) {
        int e = M - 3 - target;
        if (e < 0) continue;
        std::int64_t bound = static_cast<std::int64_t>(asS) * M + bsS + g + 1;
        if (e >= 62 || (static_cast<std::int64_t>(1) << e) >= bound) return M;
    }
}

int newtonCountDenom(int target) {
    for (int M = std::max(target + 3, 4);; ++M) {
        int e = M - 3 - target;
        if (e < 0) continue;
        if (e >= 62 || (static_cast<std::int64_t>(1) << e) >= M + 1) return M;
    }
}

PrecisionProfile precisionProfile(const FamilyInput& fi, int n, const ProfileOverrides& ov) {
    PrecisionProfile p;
    p.g = fi.g;
    p.a = fi.a;
    p.n = n;
    p.Dtilde = fi.Dtilde;
    p.kappa = fi.kappa;
    p.s = fi.s;
    p.eta = fi.eta;
    p.degXh = fi.degXh;
    int g = p.g;

    // phi: the two logarithmic valuation bounds for the reduced Frobenius image
    std::vector<std::int64_t> A1(65), A2(65);
    for (int k = 0; k <= 64; ++k) {
        A1[k] = static_cast<std::int64_t>(4 * g + 2) * k + 2 * g + 1;
        A2[k] = static_cast<std::int64_t>(4 * p.Dtilde) * k - 6 * p.Dtilde + 1;
    }
    p.phi = std::max(phiForBound(A1), phiForBound(A2));
    p.phi0 = p.phi * (2 * g - 1) + g;
    p.beta = 3 + floorLog2(5 * g + 1);
    p.betaD = 3 + floorLog2(5 * g);
    p.betaPrime = (2 * g - 1) * p.beta;
    p.alpha = (12 * g - 1) * p.beta + (10 * g - 1) * p.phi + 5 * g;

    // Nf: smallest integer >= log2 binom(2g,g) + 1 + a n g / 2, decided exactly
    BigInt binom = BigInt::binomial(2 * g, g);
    BigInt rhs = (binom * binom).shiftLeft(2 + p.a * n * g);
    int Nf = 1;
    while (BigInt::pow2(2 * Nf) < rhs) ++Nf;
    p.Nf = std::max(Nf, ov.minNf);
    p.N = std::max(p.Nf + p.a * n * p.phi + 2 * g * p.a * n * p.phi, ov.minN);
    p.N2 = std::max(p.N + 12 * g * p.beta + (10 * g - 1) * p.phi + 5 * g, ov.minN2) + ov.extraN2;

    p.asS = 2 * (2 * g + 1 - 2 * p.degXh);
    p.bsS = 7 * p.degXh - 3 * (2 * g + 1);
    p.atilde = 4 * p.Dtilde;
    p.btilde = -6 * p.Dtilde;

    p.MitN = newtonCountPoly(p.N, p.asS, p.bsS, g);
    p.MtitN = newtonCountDenom(p.N);
    p.chi1 = p.atilde * p.MtitN + p.btilde;
    p.M = p.chi1;

    // Gamma-degree growth constants of the Newton iterates
    int degXQh = fi.Qhbar.degX();
    int degGQh = fi.Qhbar.degG();
    int bracket = 0;
    if (p.eta > 0) bracket = (2 * (2 * g + 1) + 2 * degXQh + p.s - 1) / p.s + 3;
    p.omega = 2 * p.kappa + 2 * degGQh + bracket * p.eta;
    p.delta = p.omega - p.kappa;
    p.capA = p.omega + p.delta;
    p.capB = p.capA + p.delta;

    std::int64_t chi2poly = static_cast<std::int64_t>(p.capA) * p.MitN - p.capB +
                            (static_cast<std::int64_t>(p.asS) * p.MitN + p.bsS) * p.kappa;
    std::int64_t chi2den = static_cast<std::int64_t>(p.capA) * p.MtitN - p.capB +
                           2LL * g * p.kappa * p.chi1 +
                           static_cast<std::int64_t>(p.chi1) * (p.s + 2 * g) * p.kappa;
    std::int64_t chi2 = fi.constantH ? chi2poly : std::max(chi2poly, chi2den);
    if (chi2 < 0) chi2 = 0;
    p.chi2 = static_cast<int>(chi2);
    p.NGamma = std::max(p.chi2 + 1, ov.minNGamma);

    p.Mit = newtonCountPoly(p.N2, p.asS, p.bsS, g);
    p.Mtit = newtonCountDenom(p.N2);
    if (fi.constantH) p.Mtit = p.Mit;
    p.targetPrec = std::max(p.Mit, p.Mtit);

    int guard = p.phi + p.phi0 + 2 * g * p.beta + 64;
    p.relBits = ((p.N2 + guard + 63) / 64) * 64;
    if (p.relBits > 64 * PadicScalar::kMaxLimbs)
        throw PrecisionError("family", "working precision exceeds the scalar width limit");
    return p;
}

}  // namespace hyzeta
