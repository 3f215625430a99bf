#ifndef HYZETA_FFPOLY_HPP
#define HYZETA_FFPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "hyzeta/gf2.hpp"

namespace hyzeta {

// Univariate polynomial over a BinField, low degree first, no stored leading zeros.
class FfPoly {
  public:
    FfPoly() : F_(nullptr) {}
    explicit FfPoly(const BinField* F) : F_(F) {}
    FfPoly(const BinField* F, std::vector<Gf2Poly> coeffs);
    static FfPoly constant(const BinField* F, const Gf2Poly& c);
    static FfPoly x(const BinField* F);

    const BinField* field() const { return F_; }
    bool isZero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Gf2Poly& coeff(int i) const;
    const Gf2Poly& lead() const;
    bool isMonic() const;
    bool isOne() const;

    FfPoly operator+(const FfPoly& o) const;  // == subtraction in char 2
    FfPoly operator*(const FfPoly& o) const;
    FfPoly scale(const Gf2Poly& s) const;
    FfPoly shift(int k) const;  // * X^k
    friend bool operator==(const FfPoly& a, const FfPoly& b) { return a.c_ == b.c_; }

    static void divmod(const FfPoly& a, const FfPoly& b, FfPoly& q, FfPoly& r);
    FfPoly mod(const FfPoly& m) const;
    // exact division; throws if the remainder is nonzero
    FfPoly divExact(const FfPoly& b) const;
    FfPoly monic() const;
    FfPoly derivative() const;
    Gf2Poly eval(const Gf2Poly& x) const;
    // q-power Frobenius image of every coefficient, k times (q = field size)
    FfPoly powMod(std::uint64_t e, const FfPoly& m) const;
    // X^(2^e) mod m over this field
    static FfPoly xPow2e(int e, const FfPoly& m);

    bool irreducible() const;  // Rabin over F_q
    std::string toString(const std::string& var = "X") const;

  private:
    void trim();
    const BinField* F_;
    std::vector<Gf2Poly> c_;
};

FfPoly ffGcd(FfPoly a, FfPoly b);  // monic gcd; throws if both zero

// inverse of a modulo m (m irreducible or at least coprime to a)
FfPoly ffInvMod(const FfPoly& a, const FfPoly& m);

// radical (monic, squarefree, same irreducible factors) and largest multiplicity;
// char-2 squarefree decomposition via even/odd part splitting
std::pair<FfPoly, int> radicalAndMultiplicity(const FfPoly& h);

// coefficient-wise square root of a polynomial in X^2 (Frobenius inverse on coefficients)
FfPoly polySqrt(const FfPoly& p);

// a root of p in its own field; p must split completely (used for subfield embedding)
Gf2Poly findRootInField(const FfPoly& p, std::uint64_t seed = 7);

// Embedding data of F_q (defined by mq over F_2) inside the big field F: theta with mq(theta)=0,
// plus the change-of-basis solver expressing elements of F_2[theta] in F_q coordinates.
struct SubfieldEmbedding {
    const BinField* big = nullptr;
    const BinField* small_ = nullptr;
    Gf2Poly theta;                       // root of small_->modulus() in big
    std::vector<Gf2Poly> thetaPow;       // theta^i for i < a
    std::vector<std::vector<int>> solve; // a x (an) F_2 matrix: big coords -> small coords

    // image in the big field of an element of the small field
    Gf2Poly embed(const Gf2Poly& c) const;
    // preimage; throws if the element is not in the embedded subfield
    Gf2Poly project(const Gf2Poly& c) const;
};

SubfieldEmbedding makeSubfieldEmbedding(const BinField* big, const BinField* small_,
                                        std::uint64_t seed = 7);

// minimal polynomial of gamma over F_q, returned over the small field
FfPoly minimalPolynomial(const Gf2Poly& gamma, const SubfieldEmbedding& emb);

// Bivariate polynomial in (X, G) over a BinField: cX_[j] is the coefficient of X^j,
// a polynomial in G.
class FfBiPoly {
  public:
    FfBiPoly() : F_(nullptr) {}
    explicit FfBiPoly(const BinField* F) : F_(F) {}
    FfBiPoly(const BinField* F, std::vector<FfPoly> coeffsOfX);

    const BinField* field() const { return F_; }
    bool isZero() const { return cX_.empty(); }
    int degX() const { return static_cast<int>(cX_.size()) - 1; }
    int degG() const;
    const FfPoly& coeffX(int j) const;
    bool isMonicInX() const;

    FfBiPoly operator+(const FfBiPoly& o) const;
    FfBiPoly operator*(const FfBiPoly& o) const;
    friend bool operator==(const FfBiPoly& a, const FfBiPoly& b) { return a.cX_ == b.cX_; }

    // division in X by a divisor monic in X; coefficients stay polynomial in G
    static void divmodX(const FfBiPoly& a, const FfBiPoly& b, FfBiPoly& q, FfBiPoly& r);
    bool dividesExactly(const FfBiPoly& divisor, FfBiPoly* quotient = nullptr) const;

    FfBiPoly derivativeX() const;
    // specialize G = gamma, where gamma lives in a field containing F via emb
    // (emb may be null when gamma is in the base field itself)
    FfPoly evalG(const Gf2Poly& gamma, const BinField* bigF, const SubfieldEmbedding* emb) const;

    std::string toString() const;

  private:
    void trim();
    const BinField* F_;
    std::vector<FfPoly> cX_;
};

}  // namespace hyzeta

#endif
