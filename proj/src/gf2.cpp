#include "hyzeta/gf2.hpp"

#include <stdexcept>

namespace hyzeta {

void Gf2Poly::trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

Gf2Poly Gf2Poly::x(int i) {
    Gf2Poly p;
    p.setBit(i);
    return p;
}

int Gf2Poly::degree() const {
    if (w_.empty()) return -1;
    std::uint64_t top = w_.back();
    int b = 63;
    while (!(top >> b)) --b;
    return static_cast<int>(w_.size() - 1) * 64 + b;
}

bool Gf2Poly::bit(int i) const {
    size_t word = static_cast<size_t>(i) / 64;
    if (word >= w_.size()) return false;
    return (w_[word] >> (i % 64)) & 1;
}

void Gf2Poly::setBit(int i) {
    size_t word = static_cast<size_t>(i) / 64;
    if (word >= w_.size()) w_.resize(word + 1, 0);
    w_[word] ^= static_cast<std::uint64_t>(1) << (i % 64);
    trim();
}

Gf2Poly Gf2Poly::operator+(const Gf2Poly& o) const {
    Gf2Poly r;
    r.w_.resize(std::max(w_.size(), o.w_.size()), 0);
    for (size_t i = 0; i < r.w_.size(); ++i) {
        std::uint64_t a = i < w_.size() ? w_[i] : 0;
        std::uint64_t b = i < o.w_.size() ? o.w_[i] : 0;
        r.w_[i] = a ^ b;
    }
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::shift(int k) const {
    if (isZero() || k == 0) return *this;
    Gf2Poly r;
    int words = k / 64, rem = k % 64;
    r.w_.assign(w_.size() + words + 1, 0);
    for (size_t i = 0; i < w_.size(); ++i) {
        r.w_[i + words] ^= w_[i] << rem;
        if (rem) r.w_[i + words + 1] ^= w_[i] >> (64 - rem);
    }
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& o) const {
    if (isZero() || o.isZero()) return Gf2Poly();
    Gf2Poly r;
    r.w_.assign(w_.size() + o.w_.size(), 0);
    for (size_t i = 0; i < w_.size(); ++i) {
        std::uint64_t a = w_[i];
        while (a) {
            int b = __builtin_ctzll(a);
            a &= a - 1;
            int off = static_cast<int>(i) * 64 + b;
            int words = off / 64, rem = off % 64;
            for (size_t j = 0; j < o.w_.size(); ++j) {
                r.w_[j + words] ^= o.w_[j] << rem;
                if (rem) r.w_[j + words + 1] ^= o.w_[j] >> (64 - rem);
            }
        }
    }
    r.trim();
    return r;
}

void Gf2Poly::divmod(const Gf2Poly& a, const Gf2Poly& b, Gf2Poly& q, Gf2Poly& r) {
    if (b.isZero()) throw std::invalid_argument("Gf2Poly: division by zero");
    q = Gf2Poly();
    r = a;
    int db = b.degree();
    for (int d = r.degree(); d >= db; d = r.degree()) {
        q.setBit(d - db);
        r = r + b.shift(d - db);
    }
}

Gf2Poly Gf2Poly::mod(const Gf2Poly& m) const {
    Gf2Poly q, r;
    divmod(*this, m, q, r);
    return r;
}

Gf2Poly Gf2Poly::gcd(Gf2Poly a, Gf2Poly b) {
    while (!b.isZero()) {
        Gf2Poly r = a.mod(b);
        a = b;
        b = r;
    }
    return a;
}

Gf2Poly Gf2Poly::derivative() const {
    Gf2Poly r;
    for (int i = 1; i <= degree(); i += 2)
        if (bit(i)) r.setBit(i - 1);
    return r;
}

Gf2Poly Gf2Poly::mulMod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m) {
    return (a * b).mod(m);
}

Gf2Poly Gf2Poly::xPow2e(int e, const Gf2Poly& m) {
    Gf2Poly r = Gf2Poly::x(1).mod(m);
    for (int i = 0; i < e; ++i) r = mulMod(r, r, m);
    return r;
}

Gf2Poly Gf2Poly::powMod(Gf2Poly base, std::uint64_t e, const Gf2Poly& m) {
    Gf2Poly r = Gf2Poly::one().mod(m);
    base = base.mod(m);
    while (e) {
        if (e & 1) r = mulMod(r, base, m);
        base = mulMod(base, base, m);
        e >>= 1;
    }
    return r;
}

bool Gf2Poly::irreducible() const {
    int d = degree();
    if (d <= 0) return false;
    // Rabin: x^(2^d) == x mod f, and x^(2^(d/p)) - x coprime to f for primes p | d
    Gf2Poly xp = xPow2e(d, *this);
    if (!(xp == Gf2Poly::x(1).mod(*this))) return false;
    for (int p = 2; p <= d; ++p) {
        if (d % p) continue;
        bool prime = true;
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        Gf2Poly g = gcd(*this, xPow2e(d / p, *this) + Gf2Poly::x(1).mod(*this));
        if (g.degree() != 0) return false;
    }
    return true;
}

Gf2Poly Gf2Poly::findIrreducible(int degree, std::uint64_t seed) {
    if (degree < 1) throw std::invalid_argument("findIrreducible: degree < 1");
    if (degree == 1) return Gf2Poly::x(1) + Gf2Poly::one();
    DetRng rng(seed * 0x2545f4914f6cdd1dULL + degree);
    for (int tries = 0; tries < 100000; ++tries) {
        Gf2Poly p;
        p.setBit(degree);
        p.setBit(0);  // nonzero constant term
        for (int i = 1; i < degree; ++i)
            if (rng.next() & 1) p.setBit(i);
        if (p.irreducible()) return p;
    }
    throw std::runtime_error("findIrreducible: search failed");
}

std::string Gf2Poly::toString(const std::string& var) const {
    if (isZero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (!bit(i)) continue;
        if (!s.empty()) s += " + ";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += var;
        else
            s += var + "^" + std::to_string(i);
    }
    return s;
}

BinField::BinField(Gf2Poly modulus) : mod_(std::move(modulus)), deg_(mod_.degree()) {
    if (deg_ < 1) throw std::invalid_argument("BinField: modulus degree < 1");
    if (!mod_.irreducible()) throw std::invalid_argument("BinField: modulus not irreducible");
}

std::uint64_t BinField::size1() const {
    if (deg_ >= 63) throw std::domain_error("BinField: field too large to enumerate");
    return static_cast<std::uint64_t>(1) << deg_;
}

Gf2Poly BinField::inv(const Gf2Poly& a) const {
    Gf2Poly r = reduce(a);
    if (r.isZero()) throw std::invalid_argument("BinField: inverse of zero");
    // extended Euclid over F_2[t]
    Gf2Poly r0 = mod_, r1 = r, s0, s1 = Gf2Poly::one();
    while (!r1.isZero()) {
        Gf2Poly q, rem;
        Gf2Poly::divmod(r0, r1, q, rem);
        Gf2Poly s2 = s0 + q * s1;
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    // r0 == 1 since modulus is irreducible
    return reduce(s0);
}

Gf2Poly BinField::pow(Gf2Poly a, std::uint64_t e) const { return Gf2Poly::powMod(a, e, mod_); }

Gf2Poly BinField::frobeniusPow(Gf2Poly a, int k) const {
    for (int i = 0; i < k; ++i) a = mul(a, a);
    return a;
}

int BinField::traceF2(const Gf2Poly& a) const {
    Gf2Poly t = reduce(a), acc = t;
    for (int i = 1; i < deg_; ++i) {
        t = mul(t, t);
        acc = acc + t;
    }
    if (acc.isZero()) return 0;
    if (acc == Gf2Poly::one()) return 1;
    throw std::logic_error("BinField: trace not in F_2");
}

Gf2Poly BinField::elementFromIndex(std::uint64_t i) const {
    Gf2Poly p;
    int b = 0;
    while (i) {
        if (i & 1) p.setBit(b);
        i >>= 1;
        ++b;
    }
    if (p.degree() >= deg_) throw std::invalid_argument("elementFromIndex: index out of range");
    return p;
}

}  // namespace hyzeta
