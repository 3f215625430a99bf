#ifndef HYZETA_PADIC_HPP
#define HYZETA_PADIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hyzeta/bigint.hpp"

namespace hyzeta {

// Truncated 2-adic scalar: value = 2^val * unit with unit odd, stored little-endian.
// The stored width is decided per operation by a ZWork policy (fixed relative width
// for the general pipeline, absolute caps for the integral Newton phase). A scalar
// whose unit is empty is the tracked zero.
class PadicScalar {
  public:
    static constexpr int kMaxLimbs = 16;
    static constexpr std::int32_t kZeroVal = 1 << 28;

    PadicScalar() = default;

    bool isZero() const { return n_ == 0; }
    std::int32_t val() const { return n_ == 0 ? kZeroVal : val_; }
    int limbs() const { return n_; }
    const std::uint64_t* units() const { return u_; }
    int storedBits() const { return 64 * n_; }

    std::string toString() const;          // "0" or "v<val>:<hex unit>"
    static PadicScalar parse(const std::string& s, int maxLimbs);

    friend bool operator==(const PadicScalar& a, const PadicScalar& b) {
        if (a.n_ != b.n_) return false;
        if (a.n_ == 0) return true;
        if (a.val_ != b.val_) return false;
        for (int i = 0; i < a.n_; ++i)
            if (a.u_[i] != b.u_[i]) return false;
        return true;
    }

  private:
    friend class ZWork;
    std::int32_t val_ = 0;
    std::int32_t n_ = 0;
    std::uint64_t u_[kMaxLimbs];
};

// Truncation policy + arithmetic for PadicScalar.
//   relBits: stored unit width (relative precision), limb-granular
//   absBits: results are only kept modulo 2^absBits (kNoCap disables)
class ZWork {
  public:
    static constexpr int kNoCap = 1 << 26;

    ZWork(int relBits, int absBits = kNoCap) : rel_(relBits), abs_(absBits) {}

    int relBits() const { return rel_; }
    int absBits() const { return abs_; }
    ZWork withAbs(int absBits) const { return ZWork(rel_, absBits); }

    // width in limbs available for a scalar of valuation v (0 => tracked zero)
    int widthLimbs(std::int64_t v) const;

    PadicScalar zero() const { return PadicScalar(); }
    PadicScalar one() const { return fromInt(1); }
    PadicScalar fromInt(std::int64_t v) const;
    // num / den with den odd or a power of two times odd
    PadicScalar fromRational(std::int64_t num, std::int64_t den) const;
    PadicScalar fromBig(const BigInt& v) const;

    PadicScalar add(const PadicScalar& a, const PadicScalar& b) const;
    PadicScalar sub(const PadicScalar& a, const PadicScalar& b) const;
    PadicScalar neg(const PadicScalar& a) const;
    PadicScalar mul(const PadicScalar& a, const PadicScalar& b) const;
    PadicScalar mulInt(const PadicScalar& a, std::int64_t c) const;
    // exact valuation shifts: multiply / divide by 2^t
    PadicScalar shift2(const PadicScalar& a, int t) const;
    // divide by an odd word
    PadicScalar divOdd(const PadicScalar& a, std::int64_t odd) const;
    // divide by an arbitrary nonzero integer (2-power part shifts the valuation)
    PadicScalar divInt(const PadicScalar& a, std::int64_t c) const;
    PadicScalar inv(const PadicScalar& a) const;
    // truncate an existing scalar to this policy
    PadicScalar clamp(const PadicScalar& a) const;

    // valuation of a - b (kZeroVal when equal at stored width)
    std::int64_t valDiff(const PadicScalar& a, const PadicScalar& b) const;
    bool eqMod(const PadicScalar& a, const PadicScalar& b, int bits) const;

    // value mod 2^bits as limbs; requires val >= 0 or zero
    std::vector<std::uint64_t> residue(const PadicScalar& a, int bits) const;

    // number of base multiplications issued through this policy family (global)
    static std::uint64_t mulCount();
    static void resetMulCount();

    // normalize a raw limb window anchored at 2^val into a scalar under this policy
    PadicScalar compose(std::int64_t val, const std::uint64_t* buf, int buflimbs) const {
        return make(val, buf, buflimbs);
    }

  private:
    PadicScalar make(std::int64_t val, const std::uint64_t* buf, int buflimbs) const;
    int rel_;
    int abs_;
};

// low `out` limbs of a*b (schoolbook, counted in the multiplication statistics)
void padicMulTrunc(const std::uint64_t* a, int na, const std::uint64_t* b, int nb,
                   std::uint64_t* r, int out);

}  // namespace hyzeta

#endif
