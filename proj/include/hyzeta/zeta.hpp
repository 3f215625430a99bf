#ifndef HYZETA_ZETA_HPP
#define HYZETA_ZETA_HPP

#include "hyzeta/bigint.hpp"
#include "hyzeta/deformation.hpp"

namespace hyzeta {

// Numerator P(T) = det(I - F T) of the zeta function, with the point counts it implies.
struct ZetaNumerator {
    int g = 0;
    BigInt qn;                   // field size 2^(a n)
    std::vector<BigInt> b;       // b_0 .. b_2g
    std::vector<BigInt> counts;  // projective counts over F_(qn^m), m = 1..2g
};

// F(z) = r(z)^-chi1 F'(z), entries in the tower; throws if r(z) is not a unit
TowerMat specializeParameter(const TowerExt& tw, const FrobSeries& fs, const ZqPoly& r,
                             const PrecisionProfile& prof, const TowerElem& z);

// product F^(sigma^(n-1)) ... F^sigma F by the doubling iteration
TowerMat normFrobenius(const TowerExt& tw, const TowerMat& Fz, int n);
// reference implementation for tests: the n-term product applied directly
TowerMat normFrobeniusNaive(const TowerExt& tw, const TowerMat& Fz, int n);

// coefficients c_0..c_2g of det(I - A T) mod 2^bits (residues, low g+1 trusted),
// by scaling to integrality and Hessenberg reduction
std::vector<BigInt> charPolyDetIminusT(const TowerExt& tw, const TowerMat& A, int bits);
// division-free cofactor-expansion oracle of the same quantity (tests)
std::vector<BigInt> charPolyCofactorOracle(const TowerExt& tw, const TowerMat& A, int bits);

// symmetric lift of c_0..c_g and completion by b_(2g-i) = qn^(g-i) b_i, with the
// Weil bound and count positivity checks
ZetaNumerator completeByFunctionalEquation(const std::vector<BigInt>& c, int g, const BigInt& qn,
                                           int Nf);

// point counts N_m = qn^m + 1 - s_m from the numerator (Newton identities); fills
// counts and validates the ZetaNumerator invariants
void assembleZeta(ZetaNumerator& zn);

// output record block (exact text contract: P / zeta / counts lines)
std::string zetaRecord(const ZetaNumerator& zn);

}  // namespace hyzeta

#endif
