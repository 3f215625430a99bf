#ifndef HYZETA_COHOMOLOGY_HPP
#define HYZETA_COHOMOLOGY_HPP

#include "hyzeta/family.hpp"

namespace hyzeta {

// Reduction of odd differentials P(X) Y dX onto the basis {X^i Y dX, i < 2g} by
// repeatedly subtracting multiples of alpha_j = X^j u + (j/3) X^(j-1) v (whose class
// vanishes). Two coefficient rings are used: polynomials in Gamma for the connection
// matrices and plain Zq elements for a specialized fiber.

struct GammaRing {
    const UnramExt* zq;
    using Elem = ZqPoly;
    static bool isZero(const Elem& e) { return e.isZero(); }
    Elem add(const Elem& a, const Elem& b) const { return zq->pAdd(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return zq->pSub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return zq->pMul(a, b); }
    Elem mulInt(const Elem& a, std::int64_t k) const { return zq->pMulInt(a, k); }
    Elem divInt(const Elem& a, std::int64_t k) const { return zq->pDivInt(a, k); }
    std::int64_t val(const Elem& e) const { return e.val(); }
};

struct FiberRing {
    const UnramExt* zq;
    using Elem = ZqElem;
    static bool isZero(const Elem& e) { return e.isZero(); }
    Elem add(const Elem& a, const Elem& b) const { return zq->add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return zq->sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return zq->mul(a, b); }
    Elem mulInt(const Elem& a, std::int64_t k) const { return zq->mulInt(a, k); }
    Elem divInt(const Elem& a, std::int64_t k) const { return zq->divInt(a, k); }
    std::int64_t val(const Elem& e) const { return e.val(); }
};

template <class R>
using XPoly = std::vector<typename R::Elem>;  // coefficient of X^i at index i

template <class R>
void xTrim(XPoly<R>& p) {
    while (!p.empty() && R::isZero(p.back())) p.pop_back();
}

// u = 2f' + h h' and v = 4f + h^2 of the family (or a fiber), as X-polynomials
template <class R>
struct ReductionBasis {
    int g = 0;
    XPoly<R> u, v;
};

struct ReduceStats {
    std::int64_t minValIn = 0;
    std::int64_t minValOut = 0;
    int steps = 0;
};

// coordinates of P(X) Y dX on {X^i Y dX}; P is consumed
template <class R>
std::vector<typename R::Elem> reducePolyY(const R& ring, const ReductionBasis<R>& basis,
                                          XPoly<R> P, ReduceStats* stats = nullptr) {
    const int g = basis.g;
    if (stats) {
        stats->minValIn = PadicScalar::kZeroVal;
        for (const auto& c : P) stats->minValIn = std::min(stats->minValIn, ring.val(c));
        stats->steps = 0;
    }
    xTrim<R>(P);
    while (static_cast<int>(P.size()) - 1 >= 2 * g) {
        int deg = static_cast<int>(P.size()) - 1;
        int j = deg - 2 * g;
        // leading coefficient of alpha_j is c_j = 2(2g+1) + 4j/3 = 2(3(2g+1)+2j)/3
        std::int64_t oddPart = 3LL * (2 * g + 1) + 2 * j;
        typename R::Elem lead = P.back();
        // subtract s*alpha_j with s = lead * 3 / (2 oddPart): X^j u picks up s,
        // X^(j-1) v picks up s*j/3
        typename R::Elem s = ring.divInt(ring.mulInt(lead, 3), 2 * oddPart);
        for (size_t t = 0; t < basis.u.size(); ++t)
            P[j + t] = ring.sub(P[j + t], ring.mul(s, basis.u[t]));
        if (j > 0) {
            typename R::Elem s2 = ring.divInt(ring.mulInt(lead, j), 2 * oddPart);
            for (size_t t = 0; t < basis.v.size(); ++t)
                P[j - 1 + t] = ring.sub(P[j - 1 + t], ring.mul(s2, basis.v[t]));
        }
        // cancellation is exact in value; the stored residue may keep junk in the
        // top bits of the floating window, far above the working precision
        if (!R::isZero(P[deg]) && ring.val(P[deg]) < ring.val(lead) + 32)
            throw std::logic_error("reducePolyY: leading term did not cancel");
        P.pop_back();
        xTrim<R>(P);
        if (stats) ++stats->steps;
    }
    P.resize(2 * g);
    if (stats) {
        stats->minValOut = PadicScalar::kZeroVal;
        for (const auto& c : P) stats->minValOut = std::min(stats->minValOut, ring.val(c));
    }
    return P;
}

// Connection data: (v b_i) = B (b_i) and nabla(v b_i) = D (b_i) in the odd part,
// entries polynomials in Gamma.
struct ConnectionMatrices {
    int g = 0;
    std::vector<std::vector<ZqPoly>> B, D;  // [row][col]
    int degB() const;
    int degD() const;
    std::int64_t valB() const;
    std::int64_t valD() const;
};

ConnectionMatrices computeConnectionMatrices(const LiftedFamily& lf);

// matrix of the Gamma^k-coefficients of a polynomial matrix
ZqMat matGammaCoeff(const UnramExt& zq, const std::vector<std::vector<ZqPoly>>& M, int k);
// specialization at gamma
ZqMat matGammaEval(const UnramExt& zq, const std::vector<std::vector<ZqPoly>>& M, const ZqElem& gamma);

// The Gamma-specialized fiber data needed by the denominator reduction and the
// Newton lift; built by frobzero but shared here for the reduction formula.
struct FiberCtx {
    const UnramExt* zq = nullptr;
    int g = 0, s = 0, Dtilde = 1;
    bool constantH = false;
    ZqPoly H, Qf, QH, h, f, u, v, Qh;
    ZqPoly bezA, bezB, P;  // P = Qf * H'
    ZqElem r0, r0inv;
    ZqPoly W1base, W1H, W2;  // -6Qf' - 3QH h', H' QH^2, 4Qf + QH h
    ReductionBasis<FiberRing> basis;
};

// Eliminate the H-denominator parts (levels[j] is the numerator of H^-(j+1), deg < s),
// discarding involution-invariant remainders; returns the accumulated polynomial
// Y-part including `polyPart`.
ZqPoly reduceHDenominators(const FiberCtx& fc, std::vector<ZqPoly> levels, ZqPoly polyPart);

// split C into H-adic digits: C = sum digits[m] H^m with deg digits[m] < s
std::vector<ZqPoly> splitByH(const UnramExt& zq, ZqPoly C, const ZqPoly& H);

}  // namespace hyzeta

#endif
