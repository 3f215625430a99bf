#ifndef HYZETA_ZQ_HPP
#define HYZETA_ZQ_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyzeta/ffpoly.hpp"
#include "hyzeta/padic.hpp"

namespace hyzeta {

// Element of Z_q = Z_2[x]/chi, coefficients low-degree first, trailing zeros trimmed.
struct ZqElem {
    std::vector<PadicScalar> c;
    bool isZero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const PadicScalar& coeff(int i) const;
    // min valuation over coefficients (kZeroVal for zero)
    std::int64_t val() const;
    void trim();
};

// Polynomial over Z_q in one variable (serves both Gamma- and X-polynomials).
struct ZqPoly {
    std::vector<ZqElem> c;
    bool isZero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const ZqElem& coeff(int i) const;
    std::int64_t val() const;
    void trim();
};

// Square matrix over Z_q.
struct ZqMat {
    int n = 0;
    std::vector<ZqElem> e;  // row-major
    static ZqMat zero(int n) { return ZqMat{n, std::vector<ZqElem>(static_cast<size_t>(n) * n)}; }
    ZqElem& at(int i, int j) { return e[static_cast<size_t>(i) * n + j]; }
    const ZqElem& at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }
};

// The unramified extension Z_q of Z_2 presented by a Teichmuller modulus chi
// (monic, reduces to the residue field modulus, divides x^(2^a) - x).
class UnramExt {
  public:
    // lifts mbar (the modulus of Fq) to the Teichmuller modulus at the given policy
    UnramExt(const BinField* Fq, ZWork work);

    const BinField* residueField() const { return Fq_; }
    int a() const { return a_; }
    const ZWork& work() const { return work_; }
    const std::vector<PadicScalar>& chi() const { return chi_; }

    // --- scalar helpers on the base ring policy
    PadicScalar sAdd(const PadicScalar& x, const PadicScalar& y) const { return work_.add(x, y); }
    PadicScalar sMul(const PadicScalar& x, const PadicScalar& y) const { return work_.mul(x, y); }

    // --- Zq element operations
    ZqElem zero() const { return ZqElem{}; }
    ZqElem one() const;
    ZqElem fromInt(std::int64_t v) const;
    ZqElem fromScalar(const PadicScalar& s) const;
    // 0/1 lift of a residue-field element (coefficientwise)
    ZqElem liftResidue(const Gf2Poly& c) const;
    // reduction mod 2 into the residue field; valuations must be >= 0
    Gf2Poly residue(const ZqElem& e) const;

    ZqElem add(const ZqElem& x, const ZqElem& y) const;
    ZqElem sub(const ZqElem& x, const ZqElem& y) const;
    ZqElem neg(const ZqElem& x) const;
    ZqElem mul(const ZqElem& x, const ZqElem& y) const;
    ZqElem mul(const ZqElem& x, const ZqElem& y, const ZWork& w) const;  // explicit policy
    ZqElem scalarMul(const ZqElem& x, const PadicScalar& s) const;
    ZqElem mulInt(const ZqElem& x, std::int64_t k) const;
    ZqElem shift2(const ZqElem& x, int t) const;
    ZqElem divInt(const ZqElem& x, std::int64_t k) const;
    ZqElem clamp(const ZqElem& x, const ZWork& w) const;
    // inverse of a unit (valuation 0); throws otherwise
    ZqElem inv(const ZqElem& x) const;
    // Frobenius lift sigma (x -> x^2 mod chi on the class, identity on Z_2)
    ZqElem sigma(const ZqElem& x) const;
    ZqElem sigmaPow(ZqElem x, int k) const;
    bool eqMod(const ZqElem& x, const ZqElem& y, int bits) const;
    std::int64_t valDiff(const ZqElem& x, const ZqElem& y) const;

    // Teichmuller lift of a residue-field element (iterate q-th powers to the fixed point)
    ZqElem teichmullerLift(const Gf2Poly& gamma) const;

    // postcondition checker: x^(2^a) == x mod (chi, 2^bits)
    bool checkTeichmullerModulus(int bits) const;

    // reduce a raw coefficient vector (degree may exceed a-1) mod chi
    ZqElem reducePoly(std::vector<PadicScalar> raw) const;

    // --- polynomials over Zq
    ZqPoly pZero() const { return ZqPoly{}; }
    ZqPoly pAdd(const ZqPoly& x, const ZqPoly& y) const;
    ZqPoly pSub(const ZqPoly& x, const ZqPoly& y) const;
    ZqPoly pMul(const ZqPoly& x, const ZqPoly& y) const;
    ZqPoly pScale(const ZqPoly& x, const ZqElem& s) const;
    ZqPoly pMulInt(const ZqPoly& x, std::int64_t k) const;
    ZqPoly pDivInt(const ZqPoly& x, std::int64_t k) const;
    ZqPoly pShiftVar(const ZqPoly& x, int k) const;  // * var^k
    ZqPoly pDerivative(const ZqPoly& x) const;
    ZqElem pEval(const ZqPoly& x, const ZqElem& at) const;
    bool pEqMod(const ZqPoly& x, const ZqPoly& y, int bits) const;
    // division by a divisor monic in the variable; exact flavor throws on nonzero remainder
    void pDivmod(const ZqPoly& a, const ZqPoly& b, ZqPoly& q, ZqPoly& r) const;
    ZqPoly pDivExactMonic(const ZqPoly& a, const ZqPoly& b) const;
    // sigma applied to every coefficient
    ZqPoly pSigma(const ZqPoly& x) const;
    // substitute var -> var^2 (interleave zeros)
    ZqPoly pVarSquared(const ZqPoly& x) const;

    // --- matrices over Zq
    ZqMat mAdd(const ZqMat& A, const ZqMat& B) const;
    ZqMat mSub(const ZqMat& A, const ZqMat& B) const;
    ZqMat mMul(const ZqMat& A, const ZqMat& B) const;
    ZqMat mScaleInt(const ZqMat& A, std::int64_t k) const;
    ZqMat mScale(const ZqMat& A, const PadicScalar& s) const;
    ZqMat mScaleElem(const ZqMat& A, const ZqElem& e) const;
    ZqMat mSigma(const ZqMat& A) const;
    ZqMat mIdentity(int n) const;
    // inverse of a matrix whose determinant is a unit; Gaussian with minimal-valuation pivoting
    ZqMat mInv(const ZqMat& A) const;
    ZqElem mDet(const ZqMat& A) const;
    std::int64_t mVal(const ZqMat& A) const;
    bool mEqMod(const ZqMat& A, const ZqMat& B, int bits) const;

  private:
    void buildSigmaTable();
    const BinField* Fq_;
    int a_;
    ZWork work_;
    std::vector<PadicScalar> chi_;    // length a+1, monic
    std::vector<ZqElem> xSigmaPow_;   // (x^2)^i mod chi, i < a
};

// The tower Z_{q^n} = Z_q[z]/psi over an UnramExt, with psi a Teichmuller modulus.
struct TowerElem {
    std::vector<ZqElem> c;  // coefficients over Zq, low degree first, trimmed
    bool isZero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    std::int64_t val() const;
    void trim();
};

struct TowerMat {
    int n = 0;
    std::vector<TowerElem> e;
    static TowerMat zero(int n) { return TowerMat{n, std::vector<TowerElem>(static_cast<size_t>(n) * n)}; }
    TowerElem& at(int i, int j) { return e[static_cast<size_t>(i) * n + j]; }
    const TowerElem& at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }
};

class TowerExt {
  public:
    // psibar: monic irreducible polynomial over Fq (the residue field of zq)
    TowerExt(const UnramExt* zq, const FfPoly& psibar);

    const UnramExt* base() const { return zq_; }
    int n() const { return n_; }
    const std::vector<ZqElem>& psi() const { return psi_; }
    // the class of z, the Teichmuller lift of the defining root
    TowerElem zClass() const;

    TowerElem zero() const { return TowerElem{}; }
    TowerElem one() const;
    TowerElem fromZq(const ZqElem& e) const;
    TowerElem liftResidue(const FfPoly& rbar) const;   // 0/1 coefficient lift
    FfPoly residue(const TowerElem& e) const;

    TowerElem add(const TowerElem& x, const TowerElem& y) const;
    TowerElem sub(const TowerElem& x, const TowerElem& y) const;
    TowerElem neg(const TowerElem& x) const;
    TowerElem mul(const TowerElem& x, const TowerElem& y) const;
    TowerElem scalarZq(const TowerElem& x, const ZqElem& s) const;
    TowerElem shift2(const TowerElem& x, int t) const;
    TowerElem inv(const TowerElem& x) const;  // unit only
    bool eqMod(const TowerElem& x, const TowerElem& y, int bits) const;
    std::int64_t valDiff(const TowerElem& x, const TowerElem& y) const;

    // Frobenius sigma of the tower (sigma on Zq coefficients, z -> z^2 mod psi)
    TowerElem sigma(const TowerElem& x) const;
    TowerElem sigmaPow(TowerElem x, int k) const;

    // Teichmuller lift of an element of the residue field F_{q^n}
    TowerElem teichmullerLift(const FfPoly& gammabar) const;
    // z^(q^n) == z mod (psi, 2^bits)
    bool checkTeichmullerModulus(int bits) const;

    TowerMat mMul(const TowerMat& A, const TowerMat& B) const;
    TowerMat mSigmaPow(const TowerMat& A, int k) const;
    TowerMat mIdentity(int m) const;
    std::int64_t mVal(const TowerMat& A) const;

    TowerElem reducePoly(std::vector<ZqElem> raw) const;

  private:
    const UnramExt* zq_;
    int n_;
    std::vector<ZqElem> psi_;          // length n+1, monic over Zq
    FfPoly psibar_;                    // psi mod 2, kept for residue-field inverses
    std::vector<TowerElem> zSigmaPow_; // (z^2)^i mod psi, i < n
};

}  // namespace hyzeta

#endif
