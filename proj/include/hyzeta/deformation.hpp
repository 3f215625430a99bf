#ifndef HYZETA_DEFORMATION_HPP
#define HYZETA_DEFORMATION_HPP

#include "hyzeta/cohomology.hpp"

namespace hyzeta {

// Power-series solution of the transported Frobenius: K with K_0 = r(0)^M F(0) B(0)^-1
// and F'(Gamma) = r(Gamma)^M F(Gamma) = K B, modulo (2^N2, Gamma^NGamma).
struct FrobSeries {
    int g = 0;
    int NGamma = 0;
    std::vector<ZqMat> K;       // K_0 .. K_(NGamma-1)
    std::vector<ZqMat> Fprime;  // (K B)_0 .. (K B)_(NGamma-1+degB): tail checks Prop-6 degree
    int chi2 = 0;
};

FrobSeries solveDeformation(const LiftedFamily& lf, const ConnectionMatrices& cm, const ZqMat& F0,
                            const PrecisionProfile& prof);

// minimum valuation of the Gamma-coefficients of the substituted equation
//   (r B^s) K' B + (r B^s) K D + (-M r' B^s + 2 Gamma r (B' - D)^s) K B
// over degrees 0..NGamma-2 (the solved range); test helper
std::int64_t deformationResidualVal(const LiftedFamily& lf, const ConnectionMatrices& cm,
                                    const FrobSeries& fs, const PrecisionProfile& prof);

// specialization F'(gamma) as a matrix over Zq (for the Prop-6 and Prop-5 suites)
ZqMat frobSeriesEval(const UnramExt& zq, const FrobSeries& fs, const ZqElem& gamma);

// minimum valuation of the coefficients of F' beyond Gamma-degree chi2 (the Prop-6
// degree check: these must vanish at working precision)
std::int64_t frobSeriesTailVal(const FrobSeries& fs);

}  // namespace hyzeta

#endif
