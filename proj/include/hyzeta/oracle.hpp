#ifndef HYZETA_ORACLE_HPP
#define HYZETA_ORACLE_HPP

#include "hyzeta/ffpoly.hpp"
#include "hyzeta/zeta.hpp"

namespace hyzeta {

// Ground truth by exhaustive enumeration. Deliberately the dumbest possible code.

struct CountTable {
    std::vector<BigInt> counts;  // N_m for m = 1..g
};

// projective count of Y^2 + h(X) Y = f(X) over the coefficient field of h and f
// (one point at infinity in the odd-degree model); field degree must be <= 24
BigInt countPointsNaive(const FfPoly& h, const FfPoly& f);

// counts over extension fields F_(2^(d*m)) of the coefficient field, m = 1..g
CountTable countCurve(const FfPoly& h, const FfPoly& f, int g);

// Newton identities from counts to the numerator; completes by the functional
// equation and validates every invariant
ZetaNumerator zetaFromCounts(const CountTable& counts, int g, const BigInt& qn);

}  // namespace hyzeta

#endif
