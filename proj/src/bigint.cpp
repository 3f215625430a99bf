#include "hyzeta/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyzeta {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    neg_ = v < 0;
    u64 m = neg_ ? (~static_cast<u64>(v) + 1) : static_cast<u64>(v);
    mag_.push_back(m);
}

BigInt BigInt::fromMagnitude(std::vector<u64> mag, bool neg) {
    BigInt r;
    r.mag_ = std::move(mag);
    r.neg_ = neg;
    r.trim();
    return r;
}

BigInt BigInt::fromDecimal(const std::string& s) {
    BigInt r;
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    if (i == s.size()) throw std::invalid_argument("BigInt: empty decimal string");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad decimal digit");
        r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    r.neg_ = neg && !r.isZero();
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) neg_ = false;
}

int BigInt::cmpMag(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<u64> BigInt::addMag(const std::vector<u64>& a, const std::vector<u64>& b) {
    const std::vector<u64>& x = a.size() >= b.size() ? a : b;
    const std::vector<u64>& y = a.size() >= b.size() ? b : a;
    std::vector<u64> r(x.size() + 1, 0);
    u64 carry = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        u128 s = static_cast<u128>(x[i]) + (i < y.size() ? y[i] : 0) + carry;
        r[i] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
    }
    r[x.size()] = carry;
    return r;
}

std::vector<u64> BigInt::subMag(const std::vector<u64>& a, const std::vector<u64>& b) {
    std::vector<u64> r(a.size(), 0);
    u64 borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        u64 bi = i < b.size() ? b[i] : 0;
        u64 d = a[i] - bi - borrow;
        borrow = (a[i] < bi + borrow) || (bi == ~static_cast<u64>(0) && borrow) ? 1 : 0;
        r[i] = d;
    }
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.isZero()) r.neg_ = !r.neg_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (neg_ == o.neg_) {
        r.mag_ = addMag(mag_, o.mag_);
        r.neg_ = neg_;
    } else {
        int c = cmpMag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.mag_ = subMag(mag_, o.mag_);
            r.neg_ = neg_;
        } else {
            r.mag_ = subMag(o.mag_, mag_);
            r.neg_ = o.neg_;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (isZero() || o.isZero()) return BigInt();
    std::vector<u64> r(mag_.size() + o.mag_.size(), 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        u64 carry = 0;
        for (size_t j = 0; j < o.mag_.size(); ++j) {
            u128 cur = static_cast<u128>(mag_[i]) * o.mag_[j] + r[i + j] + carry;
            r[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        r[i + o.mag_.size()] += carry;
    }
    return fromMagnitude(std::move(r), neg_ != o.neg_);
}

bool BigInt::operator==(const BigInt& o) const { return neg_ == o.neg_ && mag_ == o.mag_; }

bool BigInt::operator<(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_;
    int c = cmpMag(mag_, o.mag_);
    return neg_ ? c > 0 : c < 0;
}

BigInt BigInt::divExact(std::int64_t d) const {
    if (d == 0) throw std::invalid_argument("BigInt: division by zero");
    bool dn = d < 0;
    u64 dm = dn ? (~static_cast<u64>(d) + 1) : static_cast<u64>(d);
    std::vector<u64> q(mag_.size(), 0);
    u64 rem = 0;
    for (size_t i = mag_.size(); i-- > 0;) {
        u128 cur = (static_cast<u128>(rem) << 64) | mag_[i];
        q[i] = static_cast<u64>(cur / dm);
        rem = static_cast<u64>(cur % dm);
    }
    if (rem != 0) throw std::domain_error("BigInt: division not exact");
    return fromMagnitude(std::move(q), neg_ != dn);
}

BigInt BigInt::shiftLeft(int bits) const {
    if (isZero() || bits == 0) return *this;
    if (bits < 0) throw std::invalid_argument("BigInt: negative shift");
    int words = bits / 64, rem = bits % 64;
    std::vector<u64> r(mag_.size() + words + 1, 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        r[i + words] |= mag_[i] << rem;
        if (rem) r[i + words + 1] |= mag_[i] >> (64 - rem);
    }
    return fromMagnitude(std::move(r), neg_);
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
}

BigInt BigInt::pow2(int e) { return BigInt(1).shiftLeft(e); }

BigInt BigInt::pow(const BigInt& b, unsigned e) {
    BigInt r(1), base = b;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

BigInt BigInt::binomial(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    BigInt r(1);
    for (unsigned i = 1; i <= k; ++i) r = (r * BigInt(static_cast<std::int64_t>(n - k + i))).divExact(i);
    return r;
}

std::vector<u64> BigInt::residueMod2k(int bits) const {
    int words = (bits + 63) / 64;
    std::vector<u64> r(words, 0);
    for (int i = 0; i < words && i < static_cast<int>(mag_.size()); ++i) r[i] = mag_[i];
    if (neg_) {
        // two's complement of the magnitude
        u64 carry = 1;
        for (int i = 0; i < words; ++i) {
            u64 v = ~r[i];
            u64 s = v + carry;
            carry = (s < v) ? 1 : 0;
            r[i] = s;
        }
    }
    int top = bits % 64;
    if (top) r[words - 1] &= (~static_cast<u64>(0)) >> (64 - top);
    return r;
}

BigInt BigInt::symmetricFromResidue(const std::vector<u64>& res, int bits) {
    std::vector<u64> r = res;
    int words = (bits + 63) / 64;
    r.resize(words, 0);
    int top = bits % 64;
    if (top) r[words - 1] &= (~static_cast<u64>(0)) >> (64 - top);
    BigInt v = fromMagnitude(r, false);
    BigInt half = pow2(bits - 1);
    if (v > half) return v - pow2(bits);  // representative in (-2^(bits-1), 2^(bits-1)]
    return v;
}

int BigInt::bitLength() const {
    if (mag_.empty()) return 0;
    u64 top = mag_.back();
    int b = 0;
    while (top) {
        ++b;
        top >>= 1;
    }
    return static_cast<int>(mag_.size() - 1) * 64 + b;
}

bool BigInt::fitsInt64() const {
    if (mag_.size() > 1) return false;
    if (mag_.empty()) return true;
    if (neg_) return mag_[0] <= (static_cast<u64>(1) << 63);
    return mag_[0] < (static_cast<u64>(1) << 63);
}

std::int64_t BigInt::toInt64() const {
    if (!fitsInt64()) throw std::domain_error("BigInt: does not fit int64");
    if (mag_.empty()) return 0;
    return neg_ ? -static_cast<std::int64_t>(mag_[0] - 1) - 1 : static_cast<std::int64_t>(mag_[0]);
}

std::string BigInt::toDecimal() const {
    if (isZero()) return "0";
    std::vector<u64> m = mag_;
    std::string digits;
    while (!m.empty()) {
        u64 rem = 0;
        for (size_t i = m.size(); i-- > 0;) {
            u128 cur = (static_cast<u128>(rem) << 64) | m[i];
            m[i] = static_cast<u64>(cur / 10);
            rem = static_cast<u64>(cur % 10);
        }
        digits.push_back(static_cast<char>('0' + rem));
        while (!m.empty() && m.back() == 0) m.pop_back();
    }
    if (neg_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace hyzeta
