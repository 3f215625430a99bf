#ifndef HYZETA_FROBZERO_HPP
#define HYZETA_FROBZERO_HPP

#include "hyzeta/cohomology.hpp"

namespace hyzeta {

// Laurent series in H with X-digit numerators of degree < s; dig[i] sits at H^(lo+i).
struct HLaurent {
    int lo = 0;
    std::vector<ZqPoly> dig;
    bool isZero() const { return dig.empty(); }
    void trim();
    std::int64_t val() const;
};

// the Frobenius image of Y to the current accuracy: W = alpha + beta Y
struct FrobY {
    int accuracy = 0;      // W == F2(Y) mod 2^accuracy
    bool constantH = false;
    HLaurent alpha, beta;  // s >= 1 representation
    ZqPoly alphaP, betaP;  // s == 0 representation (plain X-polynomials)
};

struct FrobYStats {
    // per-iteration valuation of W_(k+1) - W_k (expected >= k)
    std::vector<std::int64_t> stepDiffVal;
    // valuation of the final sigma-twisted residual W^2 + h^sigma W - f^sigma
    std::int64_t finalResidualVal = 0;
    // H-adic window size in force at each step (for the k-minus-log bound)
    std::vector<std::int64_t> windowSize;
};

// family polynomials specialized at Gamma = 0, plus the reduction context
FiberCtx specializeAtZero(const LiftedFamily& lf);

// Newton lift of the Frobenius of Y on the fiber, to W == F2(Y) mod 2^targetPrec
FrobY newtonFrobeniusY(const FiberCtx& fc, const PrecisionProfile& prof, FrobYStats* stats = nullptr);

// rows of F(0): the class of F2(X^i Y dX) = 2 X^(2i+1) (alpha + beta Y) dX in the
// odd eigenspace, for i = 0..2g-1; checks ord >= -phi
ZqMat frobeniusMatrixZero(const FiberCtx& fc, const FrobY& W, const PrecisionProfile& prof);

}  // namespace hyzeta

#endif
