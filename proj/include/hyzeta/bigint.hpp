#ifndef HYZETA_BIGINT_HPP
#define HYZETA_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hyzeta {

// Arbitrary-size signed integer, just big enough for zeta numerators and
// point counts (coefficients up to a few hundred bits).
class BigInt {
  public:
    BigInt() = default;
    BigInt(std::int64_t v);
    static BigInt fromDecimal(const std::string& s);
    // value = (-1)^neg * sum mag[i] 2^(64 i), mag trimmed
    static BigInt fromMagnitude(std::vector<std::uint64_t> mag, bool neg);

    bool isZero() const { return mag_.empty(); }
    bool negative() const { return neg_; }
    const std::vector<std::uint64_t>& magnitude() const { return mag_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    // quotient of an exact division by a small integer; throws if not exact
    BigInt divExact(std::int64_t d) const;
    BigInt shiftLeft(int bits) const;
    BigInt abs() const;
    static BigInt pow2(int e);
    static BigInt pow(const BigInt& b, unsigned e);
    static BigInt binomial(unsigned n, unsigned k);

    // lowest `bits` bits of the value taken mod 2^bits (two's complement wrap)
    std::vector<std::uint64_t> residueMod2k(int bits) const;
    // symmetric representative of this mod 2^bits in (-2^(bits-1), 2^(bits-1)]
    static BigInt symmetricFromResidue(const std::vector<std::uint64_t>& res, int bits);

    int bitLength() const;  // of |x|; 0 for zero
    bool fitsInt64() const;
    std::int64_t toInt64() const;  // throws if out of range
    std::string toDecimal() const;

  private:
    static int cmpMag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
    static std::vector<std::uint64_t> addMag(const std::vector<std::uint64_t>& a,
                                             const std::vector<std::uint64_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint64_t> subMag(const std::vector<std::uint64_t>& a,
                                             const std::vector<std::uint64_t>& b);
    void trim();

    bool neg_ = false;
    std::vector<std::uint64_t> mag_;
};

}  // namespace hyzeta

#endif
