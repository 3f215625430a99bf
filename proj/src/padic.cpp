#include "hyzeta/padic.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace hyzeta {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace {

std::uint64_t g_mulCount = 0;

// low `out` limbs of a*b
void mulTrunc(const u64* a, int na, const u64* b, int nb, u64* r, int out) {
    std::memset(r, 0, sizeof(u64) * out);
    ++g_mulCount;
    for (int i = 0; i < na && i < out; ++i) {
        u64 carry = 0;
        int jmax = std::min(nb, out - i);
        for (int j = 0; j < jmax; ++j) {
            u128 cur = static_cast<u128>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        if (i + jmax < out) r[i + jmax] += carry;
    }
}

// inverse of odd `d` modulo 2^(64*out)
void invOdd(const u64* d, int nd, u64* r, int out) {
    u64 x = d[0];
    // Newton over one word first: 5 steps reach 64 bits
    u64 inv = x;  // correct mod 2^3 for odd x? use the classic trick: inv = x*(2-x*inv)
    for (int i = 0; i < 5; ++i) inv *= 2 - x * inv;
    std::vector<u64> cur(out, 0), tmp(2 * out, 0), prod(2 * out, 0);
    cur[0] = inv;
    int have = 1;
    while (have < out) {
        int want = std::min(out, 2 * have);
        // cur <- cur * (2 - d*cur) mod 2^(64*want)
        mulTrunc(d, std::min(nd, want), cur.data(), have, prod.data(), want);
        // tmp = 2 - prod
        std::fill(tmp.begin(), tmp.begin() + want, 0);
        tmp[0] = 2;
        u64 borrow = 0;
        for (int i = 0; i < want; ++i) {
            u64 v = tmp[i], s = v - prod[i] - borrow;
            borrow = (v < prod[i] + borrow) || (prod[i] == ~static_cast<u64>(0) && borrow) ? 1 : 0;
            tmp[i] = s;
        }
        mulTrunc(cur.data(), have, tmp.data(), want, prod.data(), want);
        std::copy(prod.begin(), prod.begin() + want, cur.begin());
        have = want;
    }
    std::copy(cur.begin(), cur.begin() + out, r);
}

int lowestSetBit(const u64* a, int n) {
    for (int i = 0; i < n; ++i)
        if (a[i]) return 64 * i + __builtin_ctzll(a[i]);
    return -1;
}

}  // namespace

void padicMulTrunc(const std::uint64_t* a, int na, const std::uint64_t* b, int nb,
                   std::uint64_t* r, int out) {
    mulTrunc(a, na, b, nb, r, out);
}

std::uint64_t ZWork::mulCount() { return g_mulCount; }
void ZWork::resetMulCount() { g_mulCount = 0; }

int ZWork::widthLimbs(std::int64_t v) const {
    std::int64_t bits = std::min<std::int64_t>(rel_, static_cast<std::int64_t>(abs_) - v);
    if (bits <= 0) return 0;
    int limbs = static_cast<int>((bits + 63) / 64);
    return std::min(limbs, PadicScalar::kMaxLimbs);
}

PadicScalar ZWork::make(std::int64_t val, const u64* buf, int buflimbs) const {
    int low = lowestSetBit(buf, buflimbs);
    if (low < 0) return PadicScalar();
    std::int64_t v = val + low;
    int width = widthLimbs(v);
    if (width == 0) return PadicScalar();
    PadicScalar r;
    r.val_ = static_cast<std::int32_t>(v);
    r.n_ = width;  // the buffer is the exact value of the stored representatives
    int word = low / 64, bit = low % 64;
    for (int i = 0; i < r.n_; ++i) {
        u64 lo = (word + i < buflimbs) ? buf[word + i] : 0;
        u64 hi = (word + i + 1 < buflimbs) ? buf[word + i + 1] : 0;
        r.u_[i] = bit ? ((lo >> bit) | (hi << (64 - bit))) : lo;
    }
    // drop leading zero limbs introduced by the shift
    while (r.n_ > 0 && r.u_[r.n_ - 1] == 0) --r.n_;
    if (r.n_ == 0) return PadicScalar();
    return r;
}

PadicScalar ZWork::fromInt(std::int64_t v) const {
    if (v == 0) return PadicScalar();
    bool neg = v < 0;
    u64 m = neg ? (~static_cast<u64>(v) + 1) : static_cast<u64>(v);
    int t = __builtin_ctzll(m);
    m >>= t;
    int width = widthLimbs(t);
    if (width == 0) return PadicScalar();
    PadicScalar r;
    r.val_ = t;
    r.n_ = width;
    r.u_[0] = m;
    for (int i = 1; i < width; ++i) r.u_[i] = 0;
    if (neg) {
        // two's complement over the stored window
        u64 carry = 1;
        for (int i = 0; i < width; ++i) {
            u64 x = ~r.u_[i];
            r.u_[i] = x + carry;
            carry = (r.u_[i] < x) ? 1 : 0;
        }
    }
    while (r.n_ > 0 && r.u_[r.n_ - 1] == 0) --r.n_;
    return r;
}

PadicScalar ZWork::fromBig(const BigInt& v) const {
    if (v.isZero()) return PadicScalar();
    const auto& mag = v.magnitude();
    std::vector<u64> buf(mag.begin(), mag.end());
    buf.resize(buf.size() + 1, 0);
    PadicScalar r = make(0, buf.data(), static_cast<int>(buf.size()));
    return v.negative() ? neg(r) : r;
}

PadicScalar ZWork::fromRational(std::int64_t num, std::int64_t den) const {
    if (den == 0) throw std::invalid_argument("PadicScalar: zero denominator");
    PadicScalar r = fromInt(num);
    return divInt(r, den);
}

PadicScalar ZWork::clamp(const PadicScalar& a) const {
    if (a.isZero()) return a;
    int width = widthLimbs(a.val());
    if (width == 0) return PadicScalar();
    if (a.n_ <= width) return a;
    PadicScalar r = a;
    r.n_ = width;
    while (r.n_ > 0 && r.u_[r.n_ - 1] == 0) --r.n_;
    return r;
}

PadicScalar ZWork::neg(const PadicScalar& a) const {
    if (a.isZero()) return a;
    PadicScalar r = a;
    // complement over the full policy width: the stored value is zero-extended,
    // so its negative carries 0xff limbs up to the window
    int width = std::max<int>(r.n_, widthLimbs(a.val_));
    for (int i = r.n_; i < width; ++i) r.u_[i] = 0;
    r.n_ = width;
    u64 carry = 1;
    for (int i = 0; i < r.n_; ++i) {
        u64 x = ~r.u_[i];
        r.u_[i] = x + carry;
        carry = (r.u_[i] < x) ? 1 : 0;
    }
    while (r.n_ > 0 && r.u_[r.n_ - 1] == 0) --r.n_;
    return r;
}

PadicScalar ZWork::add(const PadicScalar& a, const PadicScalar& b) const {
    if (a.isZero()) return clamp(b);
    if (b.isZero()) return clamp(a);
    std::int64_t va = a.val_, vb = b.val_;
    std::int64_t vmin = std::min(va, vb);
    int cap = widthLimbs(vmin);
    if (cap == 0) return PadicScalar();
    // work modulo 2^(vmin + 64*cap): carries beyond the window are dropped; the
    // buffer only needs to reach the operands' stored extents
    std::int64_t extA = (va - vmin) / 64 + a.n_ + 1;
    std::int64_t extB = (vb - vmin) / 64 + b.n_ + 1;
    int ext = static_cast<int>(std::min<std::int64_t>(std::max(extA, extB), cap));
    int buflimbs = std::min(ext, PadicScalar::kMaxLimbs + 2);
    u64 buf[PadicScalar::kMaxLimbs + 2];
    std::memset(buf, 0, sizeof(u64) * buflimbs);
    for (int pass = 0; pass < 2; ++pass) {
        const PadicScalar& s = pass ? b : a;
        std::int64_t off = (pass ? vb : va) - vmin;
        if (off >= 64LL * buflimbs) continue;
        int word = static_cast<int>(off / 64), bit = static_cast<int>(off % 64);
        u64 carry = 0;
        for (int i = 0; i + word < buflimbs; ++i) {
            u64 part = 0;
            if (i < s.n_) part = s.u_[i] << bit;
            if (bit && i > 0 && i - 1 < s.n_) part |= s.u_[i - 1] >> (64 - bit);
            u128 sum = static_cast<u128>(buf[i + word]) + part + carry;
            buf[i + word] = static_cast<u64>(sum);
            carry = static_cast<u64>(sum >> 64);
        }
    }
    return make(vmin, buf, buflimbs);
}

PadicScalar ZWork::sub(const PadicScalar& a, const PadicScalar& b) const { return add(a, neg(b)); }

PadicScalar ZWork::mul(const PadicScalar& a, const PadicScalar& b) const {
    if (a.isZero() || b.isZero()) return PadicScalar();
    std::int64_t v = static_cast<std::int64_t>(a.val_) + b.val_;
    int width = widthLimbs(v);
    if (width == 0) return PadicScalar();
    int out = std::min({width, PadicScalar::kMaxLimbs, a.n_ + b.n_});
    u64 buf[PadicScalar::kMaxLimbs];
    mulTrunc(a.u_, std::min<int>(a.n_, out), b.u_, std::min<int>(b.n_, out), buf, out);
    PadicScalar r;
    r.val_ = static_cast<std::int32_t>(v);
    r.n_ = out;
    std::memcpy(r.u_, buf, sizeof(u64) * out);
    while (r.n_ > 0 && r.u_[r.n_ - 1] == 0) --r.n_;
    return r;  // product of odd units is odd: no renormalization needed
}

PadicScalar ZWork::mulInt(const PadicScalar& a, std::int64_t c) const {
    if (c == 0 || a.isZero()) return PadicScalar();
    bool negc = c < 0;
    u64 m = negc ? (~static_cast<u64>(c) + 1) : static_cast<u64>(c);
    int t = __builtin_ctzll(m);
    m >>= t;
    std::int64_t v = static_cast<std::int64_t>(a.val_) + t;
    int width = widthLimbs(v);
    if (width == 0) return PadicScalar();
    int out = std::min({width, PadicScalar::kMaxLimbs, a.n_ + 1});
    PadicScalar r;
    r.val_ = static_cast<std::int32_t>(v);
    r.n_ = out;
    u64 carry = 0;
    for (int i = 0; i < out; ++i) {
        u128 cur = static_cast<u128>(i < a.n_ ? a.u_[i] : 0) * m + carry;
        r.u_[i] = static_cast<u64>(cur);
        carry = static_cast<u64>(cur >> 64);
    }
    while (r.n_ > 0 && r.u_[r.n_ - 1] == 0) --r.n_;
    return negc ? neg(r) : r;
}

PadicScalar ZWork::shift2(const PadicScalar& a, int t) const {
    if (a.isZero()) return a;
    PadicScalar r = a;
    r.val_ += t;
    return clamp(r);
}

PadicScalar ZWork::divOdd(const PadicScalar& a, std::int64_t odd) const {
    if (odd == 0) throw std::invalid_argument("divOdd: zero divisor");
    bool negd = odd < 0;
    u64 m = negd ? (~static_cast<u64>(odd) + 1) : static_cast<u64>(odd);
    if (!(m & 1)) throw std::invalid_argument("divOdd: divisor is even");
    if (a.isZero()) return a;
    int out = std::min(widthLimbs(a.val_), PadicScalar::kMaxLimbs);
    if (out == 0) return PadicScalar();
    u64 d[1] = {m};
    u64 inv[PadicScalar::kMaxLimbs];
    invOdd(d, 1, inv, out);
    u64 buf[PadicScalar::kMaxLimbs];
    mulTrunc(a.u_, std::min<int>(a.n_, out), inv, out, buf, out);
    PadicScalar r;
    r.val_ = a.val_;
    r.n_ = out;
    std::memcpy(r.u_, buf, sizeof(u64) * out);
    while (r.n_ > 0 && r.u_[r.n_ - 1] == 0) --r.n_;
    return negd ? neg(r) : r;
}

PadicScalar ZWork::divInt(const PadicScalar& a, std::int64_t c) const {
    if (c == 0) throw std::invalid_argument("divInt: zero divisor");
    bool negc = c < 0;
    u64 m = negc ? (~static_cast<u64>(c) + 1) : static_cast<u64>(c);
    int t = __builtin_ctzll(m);
    PadicScalar r = shift2(a, -t);
    r = divOdd(r, static_cast<std::int64_t>(m >> t));
    return negc ? neg(r) : r;
}

PadicScalar ZWork::inv(const PadicScalar& a) const {
    if (a.isZero()) throw std::domain_error("PadicScalar: inverse of zero");
    std::int64_t v = -static_cast<std::int64_t>(a.val_);
    int out = std::min(widthLimbs(v), PadicScalar::kMaxLimbs);
    if (out == 0) return PadicScalar();
    u64 buf[PadicScalar::kMaxLimbs];
    invOdd(a.u_, a.n_, buf, out);
    PadicScalar r;
    r.val_ = static_cast<std::int32_t>(v);
    r.n_ = out;
    std::memcpy(r.u_, buf, sizeof(u64) * out);
    while (r.n_ > 0 && r.u_[r.n_ - 1] == 0) --r.n_;
    return r;
}

std::int64_t ZWork::valDiff(const PadicScalar& a, const PadicScalar& b) const {
    PadicScalar d = sub(a, b);
    return d.val();
}

bool ZWork::eqMod(const PadicScalar& a, const PadicScalar& b, int bits) const {
    return valDiff(a, b) >= bits;
}

std::vector<u64> ZWork::residue(const PadicScalar& a, int bits) const {
    int words = (bits + 63) / 64;
    std::vector<u64> r(words, 0);
    if (a.isZero()) return r;
    if (a.val_ < 0) throw std::domain_error("residue: negative valuation");
    if (a.val_ < bits) {
        int word = a.val_ / 64, bit = a.val_ % 64;
        for (int i = 0; i + word < words; ++i) {
            u64 part = 0;
            if (i < a.n_) part = a.u_[i] << bit;
            if (bit && i > 0 && i - 1 < a.n_) part |= a.u_[i - 1] >> (64 - bit);
            r[i + word] |= part;
        }
    }
    int top = bits % 64;
    if (top) r[words - 1] &= (~static_cast<u64>(0)) >> (64 - top);
    return r;
}

std::string PadicScalar::toString() const {
    if (isZero()) return "0";
    std::string s = "v" + std::to_string(val_) + ":";
    static const char* hex = "0123456789abcdef";
    bool started = false;
    for (int i = n_; i-- > 0;) {
        for (int nib = 15; nib >= 0; --nib) {
            int d = static_cast<int>((u_[i] >> (4 * nib)) & 0xf);
            if (!started && d == 0 && !(i == 0 && nib == 0)) continue;
            started = true;
            s.push_back(hex[d]);
        }
    }
    return s;
}

PadicScalar PadicScalar::parse(const std::string& s, int maxLimbs) {
    if (s == "0") return PadicScalar();
    if (s.empty() || s[0] != 'v') throw std::invalid_argument("PadicScalar::parse: bad format");
    size_t colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("PadicScalar::parse: missing ':'");
    PadicScalar r;
    r.val_ = static_cast<std::int32_t>(std::stol(s.substr(1, colon - 1)));
    std::string hex = s.substr(colon + 1);
    int nibbles = static_cast<int>(hex.size());
    int limbs = (nibbles + 15) / 16;
    if (limbs > maxLimbs || limbs > kMaxLimbs) throw std::invalid_argument("PadicScalar::parse: too wide");
    r.n_ = limbs;
    std::memset(r.u_, 0, sizeof(r.u_));
    for (int i = 0; i < nibbles; ++i) {
        char c = hex[nibbles - 1 - i];
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else
            throw std::invalid_argument("PadicScalar::parse: bad hex digit");
        r.u_[i / 16] |= static_cast<u64>(d) << (4 * (i % 16));
    }
    while (r.n_ > 0 && r.u_[r.n_ - 1] == 0) --r.n_;
    if (r.n_ > 0 && !(r.u_[0] & 1)) throw std::invalid_argument("PadicScalar::parse: unit not odd");
    return r;
}

}  // namespace hyzeta
