#include "hyzeta/oracle.hpp"

#include "hyzeta/errors.hpp"

namespace hyzeta {

BigInt countPointsNaive(const FfPoly& h, const FfPoly& f) {
    const BinField* F = h.field() ? h.field() : f.field();
    if (F->degree() > 24) throw ParameterError("oracle", "field too large for enumeration");
    std::uint64_t size = F->size1();
    BigInt count(1);  // the point at infinity of the odd-degree model
    for (std::uint64_t i = 0; i < size; ++i) {
        Gf2Poly x = F->elementFromIndex(i);
        Gf2Poly hx = h.eval(x);
        Gf2Poly fx = f.eval(x);
        if (hx.isZero()) {
            count += BigInt(1);  // squaring is bijective: exactly one y with y^2 = f(x)
        } else {
            // substitute y = h(x) w: w^2 + w = f(x)/h(x)^2, solvable iff the trace is 0
            Gf2Poly rhs = F->mul(fx, F->inv(F->mul(hx, hx)));
            if (F->traceF2(rhs) == 0) count += BigInt(2);
        }
    }
    return count;
}

CountTable countCurve(const FfPoly& h, const FfPoly& f, int g) {
    const BinField* F = h.field() ? h.field() : f.field();
    int d = F->degree();
    CountTable ct;
    for (int m = 1; m <= g; ++m) {
        if (m == 1) {
            ct.counts.push_back(countPointsNaive(h, f));
            continue;
        }
        if (d * m > 24) throw ParameterError("oracle", "field too large for enumeration");
        BinField Fm{Gf2Poly::findIrreducible(d * m, 17)};
        SubfieldEmbedding emb = makeSubfieldEmbedding(&Fm, F);
        auto embedPoly = [&](const FfPoly& p) {
            std::vector<Gf2Poly> cs(p.degree() + 1);
            for (int i = 0; i <= p.degree(); ++i) cs[i] = emb.embed(p.coeff(i));
            return FfPoly(&Fm, std::move(cs));
        };
        ct.counts.push_back(countPointsNaive(embedPoly(h), embedPoly(f)));
    }
    return ct;
}

ZetaNumerator zetaFromCounts(const CountTable& counts, int g, const BigInt& qn) {
    if (static_cast<int>(counts.counts.size()) < g)
        throw ParameterError("oracle", "need counts up to m = g");
    // power sums s_m = qn^m + 1 - N_m; Newton gives e_1..e_g; b_i = (-1)^i e_i
    std::vector<BigInt> s(g + 1, BigInt(0)), e(g + 1, BigInt(0));
    e[0] = BigInt(1);
    for (int m = 1; m <= g; ++m) s[m] = BigInt::pow(qn, m) + BigInt(1) - counts.counts[m - 1];
    for (int k = 1; k <= g; ++k) {
        // k e_k = sum_(i=1..k) (-1)^(i-1) s_i e_(k-i)
        BigInt acc(0);
        for (int i = 1; i <= k; ++i) {
            BigInt t = s[i] * e[k - i];
            acc += (i % 2) ? t : -t;
        }
        try {
            e[k] = acc.divExact(k);
        } catch (const std::exception&) {
            throw OracleMismatchError("oracle", "inconsistent counts");
        }
    }
    std::vector<BigInt> c(g + 1);
    for (int i = 0; i <= g; ++i) c[i] = (i % 2) ? -e[i] : e[i];
    ZetaNumerator zn;
    zn.g = g;
    zn.qn = qn;
    zn.b.assign(2 * g + 1, BigInt(0));
    for (int i = 0; i <= g; ++i) zn.b[i] = c[i];
    for (int i = 0; i < g; ++i) zn.b[2 * g - i] = BigInt::pow(qn, g - i) * zn.b[i];
    try {
        assembleZeta(zn);
    } catch (const HyzetaError&) {
        throw OracleMismatchError("oracle", "inconsistent counts");
    }
    // the reconstructed numerator must reproduce the enumerated counts
    for (int m = 1; m <= g; ++m)
        if (!(zn.counts[m - 1] == counts.counts[m - 1]))
            throw OracleMismatchError("oracle", "inconsistent counts");
    return zn;
}

}  // namespace hyzeta
