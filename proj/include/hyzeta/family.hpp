#ifndef HYZETA_FAMILY_HPP
#define HYZETA_FAMILY_HPP

#include <optional>

#include "hyzeta/errors.hpp"
#include "hyzeta/ffpoly.hpp"
#include "hyzeta/zq.hpp"

namespace hyzeta {

// Bivariate polynomial over Zq: cX[j] is the coefficient of X^j, a polynomial in Gamma.
struct ZqBiPoly {
    std::vector<ZqPoly> cX;
    bool isZero() const { return cX.empty(); }
    int degX() const { return static_cast<int>(cX.size()) - 1; }
    int degG() const;
    const ZqPoly& coeffX(int j) const;
    void trim();
};

ZqBiPoly biFromResidue(const UnramExt& zq, const FfBiPoly& p);  // 0/1 coefficient lift
ZqBiPoly biAdd(const UnramExt& zq, const ZqBiPoly& a, const ZqBiPoly& b);
ZqBiPoly biSub(const UnramExt& zq, const ZqBiPoly& a, const ZqBiPoly& b);
ZqBiPoly biMul(const UnramExt& zq, const ZqBiPoly& a, const ZqBiPoly& b);
ZqBiPoly biMulInt(const UnramExt& zq, const ZqBiPoly& a, std::int64_t k);
ZqBiPoly biScaleZq(const UnramExt& zq, const ZqBiPoly& a, const ZqElem& s);
ZqBiPoly biDerivX(const UnramExt& zq, const ZqBiPoly& a);
ZqBiPoly biDerivG(const UnramExt& zq, const ZqBiPoly& a);
// division in X; the divisor's leading X-coefficient must be a Gamma-free unit
void biDivmodX(const UnramExt& zq, const ZqBiPoly& a, const ZqBiPoly& b, ZqBiPoly& q, ZqBiPoly& r);
ZqBiPoly biDivExactX(const UnramExt& zq, const ZqBiPoly& a, const ZqBiPoly& b);
// specialize Gamma = 0; the result is a polynomial in X over Zq
ZqPoly biAtGamma0(const UnramExt& zq, const ZqBiPoly& a);
// specialize Gamma = gamma in Zq
ZqPoly biAtGamma(const UnramExt& zq, const ZqBiPoly& a, const ZqElem& gamma);
bool biEq(const UnramExt& zq, const ZqBiPoly& a, const ZqBiPoly& b, int bits);
FfBiPoly biResidue(const UnramExt& zq, const ZqBiPoly& a);

// Validated mod-2 family data of a one-parameter hyperelliptic family
//   Y^2 + hbar(X,G) Y = fbar(X,G),  fbar = Hbar Qfbar monic of degree 2g+1.
struct FamilyInput {
    const BinField* Fq = nullptr;
    int a = 0;
    int g = 0;
    FfBiPoly Hbar, Qfbar, hbar;
    FfBiPoly fbar;    // Hbar * Qfbar
    FfBiPoly QHbar;   // hbar / Hbar
    FfBiPoly Qhbar;   // Hbar^Dtilde / hbar
    int Dtilde = 1;
    bool constantH = false;  // s == 0: plus-eigenspace empty, no resultant needed
    int kappa = 0;           // max(deg_G f, 2 deg_G h)
    int s = 0;               // deg_X H
    int eta = 0;             // deg_G H
    int degXh = 0;
    FfPoly rbar;             // resultant mod 2, a polynomial in Gamma over Fq
};

// raw family description, as parsed from a family file
struct RawFamily {
    const BinField* Fq = nullptr;
    int genus = 0;
    FfBiPoly H, Qf, h;
};

FamilyInput validateFamily(const RawFamily& raw);

// lift admissibility: rbar(gamma) != 0 in the splitting field of gamma
bool admissible(const FamilyInput& fi, const Gf2Poly& gamma, const BinField* bigF,
                const SubfieldEmbedding* emb);

// Lifted family over Zq with the exact divisor identities
//   h = H * QH,  h * Qh = H^Dtilde,  f = H * Qf,  v = 4f + h^2,  u = 2f' + h h'.
struct LiftedFamily {
    const UnramExt* zq = nullptr;
    int g = 0, s = 0, Dtilde = 1, kappa = 0, eta = 0;
    bool constantH = false;
    ZqBiPoly H, Qf, h, QH, Qh, f, v, u;
    ZqPoly r;    // deformation resultant in Gamma
    int rho = 0; // deg_G r
    // Bezout data: r = bezA * H + bezB * (Qf H') with deg_X bezB < s (empty when s == 0)
    ZqBiPoly bezA, bezB;
};

LiftedFamily liftFamily(const FamilyInput& fi, const UnramExt* zq);

// resultant of monic-in-X A with B, with respect to X, over Zq[Gamma]
ZqPoly resultantX(const UnramExt& zq, const ZqBiPoly& A, const ZqBiPoly& B);

// Sylvester matrix of two univariate polynomials over Zq (resultant via mDet; used
// by the determinant identity checks where the inputs are not monic)
ZqMat sylvesterMat(const UnramExt& zq, const ZqPoly& A, const ZqPoly& B);

// All working-precision constants. Everything is pinned here, up front.
struct PrecisionProfile {
    int g = 0, a = 0, n = 0, Dtilde = 1, kappa = 0, s = 0, eta = 0, degXh = 0;
    int phi = 0, phi0 = 0;
    int Nf = 0, N = 0, N2 = 0, NGamma = 0;
    int beta = 0, betaD = 0, betaPrime = 0, alpha = 0;
    int chi1 = 0, chi2 = 0, M = 0;  // M == chi1, the power of r in F' = r^M F
    int asS = 0, bsS = 0, atilde = 0, btilde = 0;
    int omega = 0, delta = 0, capA = 0, capB = 0;
    int MitN = 0, MtitN = 0;    // Newton counts against N (size chi1, chi2)
    int Mit = 0, Mtit = 0;      // Newton counts against N2 (Gamma=0 lift)
    int targetPrec = 0;         // max(Mit, Mtit)
    int relBits = 0;            // scalar working width for the whole pipeline
};

struct ProfileOverrides {
    int minNf = 0, minN = 0, minN2 = 0, minNGamma = 0;
    int extraN2 = 0;  // reproducibility experiments: inflate N2 and the working width
};

PrecisionProfile precisionProfile(const FamilyInput& fi, int n, const ProfileOverrides& ov = {});

// smallest M with M - (3 + log2(as*M + bs + g + 1)) >= target
int newtonCountPoly(int target, int asS, int bsS, int g);
// smallest Mt with Mt - (3 + log2(Mt + 1)) >= target
int newtonCountDenom(int target);

}  // namespace hyzeta

#endif
