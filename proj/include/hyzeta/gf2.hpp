#ifndef HYZETA_GF2_HPP
#define HYZETA_GF2_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hyzeta {

// Bit-packed polynomial over F_2, little-endian words, bit i = coefficient of x^i.
class Gf2Poly {
  public:
    Gf2Poly() = default;
    explicit Gf2Poly(std::uint64_t bits) {
        if (bits) w_.push_back(bits);
    }
    static Gf2Poly x(int i);
    static Gf2Poly one() { return Gf2Poly(1); }

    bool isZero() const { return w_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    bool bit(int i) const;
    void setBit(int i);
    std::uint64_t lowWord() const { return w_.empty() ? 0 : w_[0]; }

    Gf2Poly operator+(const Gf2Poly& o) const;  // == subtraction
    Gf2Poly operator*(const Gf2Poly& o) const;
    Gf2Poly shift(int k) const;  // * x^k
    friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) { return a.w_ == b.w_; }

    static void divmod(const Gf2Poly& a, const Gf2Poly& b, Gf2Poly& q, Gf2Poly& r);
    Gf2Poly mod(const Gf2Poly& m) const;
    static Gf2Poly gcd(Gf2Poly a, Gf2Poly b);
    Gf2Poly derivative() const;

    // x^(2^e) mod m, by repeated squaring
    static Gf2Poly xPow2e(int e, const Gf2Poly& m);
    static Gf2Poly mulMod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m);
    static Gf2Poly powMod(Gf2Poly base, std::uint64_t e, const Gf2Poly& m);

    bool irreducible() const;
    // deterministic irreducible polynomial of given degree (seeded search)
    static Gf2Poly findIrreducible(int degree, std::uint64_t seed = 1);

    std::string toString(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<std::uint64_t> w_;
};

// The field F_{2^deg} = F_2[t]/(modulus); elements are reduced Gf2Poly values.
class BinField {
  public:
    explicit BinField(Gf2Poly modulus);

    int degree() const { return deg_; }
    const Gf2Poly& modulus() const { return mod_; }
    std::uint64_t size1() const;  // 2^deg, throws if deg >= 63

    Gf2Poly reduce(const Gf2Poly& a) const { return a.mod(mod_); }
    Gf2Poly add(const Gf2Poly& a, const Gf2Poly& b) const { return a + b; }
    Gf2Poly mul(const Gf2Poly& a, const Gf2Poly& b) const { return Gf2Poly::mulMod(a, b, mod_); }
    Gf2Poly inv(const Gf2Poly& a) const;
    Gf2Poly pow(Gf2Poly a, std::uint64_t e) const;
    Gf2Poly frobenius(const Gf2Poly& a) const { return mul(a, a); }
    // a^(2^k)
    Gf2Poly frobeniusPow(Gf2Poly a, int k) const;
    // trace to F_2, as 0/1
    int traceF2(const Gf2Poly& a) const;
    // element with index i in the lexicographic enumeration (bits of i)
    Gf2Poly elementFromIndex(std::uint64_t i) const;

  private:
    Gf2Poly mod_;
    int deg_;
};

// xorshift generator for the deterministic searches (roots, irreducibles)
struct DetRng {
    std::uint64_t s;
    explicit DetRng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

}  // namespace hyzeta

#endif
