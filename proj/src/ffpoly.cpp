#include "hyzeta/ffpoly.hpp"

#include <stdexcept>

namespace hyzeta {

static const Gf2Poly kZero{};

FfPoly::FfPoly(const BinField* F, std::vector<Gf2Poly> coeffs) : F_(F), c_(std::move(coeffs)) {
    for (auto& c : c_) c = F_->reduce(c);
    trim();
}

FfPoly FfPoly::constant(const BinField* F, const Gf2Poly& c) {
    return FfPoly(F, std::vector<Gf2Poly>{c});
}

FfPoly FfPoly::x(const BinField* F) {
    return FfPoly(F, std::vector<Gf2Poly>{Gf2Poly(), Gf2Poly::one()});
}

void FfPoly::trim() {
    while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

const Gf2Poly& FfPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const Gf2Poly& FfPoly::lead() const {
    if (c_.empty()) throw std::logic_error("FfPoly: lead of zero");
    return c_.back();
}

bool FfPoly::isMonic() const { return !c_.empty() && c_.back() == Gf2Poly::one(); }

bool FfPoly::isOne() const { return c_.size() == 1 && c_[0] == Gf2Poly::one(); }

FfPoly FfPoly::operator+(const FfPoly& o) const {
    const BinField* F = F_ ? F_ : o.F_;
    std::vector<Gf2Poly> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return FfPoly(F, std::move(r));
}

FfPoly FfPoly::operator*(const FfPoly& o) const {
    const BinField* F = F_ ? F_ : o.F_;
    if (isZero() || o.isZero()) return FfPoly(F);
    std::vector<Gf2Poly> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + F->mul(c_[i], o.c_[j]);
    return FfPoly(F, std::move(r));
}

FfPoly FfPoly::scale(const Gf2Poly& s) const {
    std::vector<Gf2Poly> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = F_->mul(c_[i], s);
    return FfPoly(F_, std::move(r));
}

FfPoly FfPoly::shift(int k) const {
    if (isZero()) return *this;
    std::vector<Gf2Poly> r(c_.size() + k);
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return FfPoly(F_, std::move(r));
}

void FfPoly::divmod(const FfPoly& a, const FfPoly& b, FfPoly& q, FfPoly& r) {
    if (b.isZero()) throw std::invalid_argument("FfPoly: division by zero");
    const BinField* F = b.F_;
    Gf2Poly leadInv = F->inv(b.lead());
    q = FfPoly(F);
    r = a;
    std::vector<Gf2Poly> qc;
    int db = b.degree();
    if (r.degree() >= db) qc.assign(r.degree() - db + 1, Gf2Poly());
    while (r.degree() >= db) {
        int d = r.degree();
        Gf2Poly f = F->mul(r.lead(), leadInv);
        qc[d - db] = f;
        r = r + b.scale(f).shift(d - db);
        if (r.degree() == d) throw std::logic_error("FfPoly: division failed to reduce degree");
    }
    q = FfPoly(F, std::move(qc));
}

FfPoly FfPoly::mod(const FfPoly& m) const {
    FfPoly q, r;
    divmod(*this, m, q, r);
    return r;
}

FfPoly FfPoly::divExact(const FfPoly& b) const {
    FfPoly q, r;
    divmod(*this, b, q, r);
    if (!r.isZero()) throw std::domain_error("FfPoly: division not exact");
    return q;
}

FfPoly FfPoly::monic() const {
    if (isZero()) return *this;
    return scale(F_->inv(lead()));
}

FfPoly FfPoly::derivative() const {
    if (degree() < 1) return FfPoly(F_);
    std::vector<Gf2Poly> r(c_.size() - 1);
    for (int i = 1; i <= degree(); ++i) {
        if (i % 2 == 1) r[i - 1] = c_[i];  // even multiples vanish in char 2
    }
    return FfPoly(F_, std::move(r));
}

Gf2Poly FfPoly::eval(const Gf2Poly& x) const {
    Gf2Poly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = F_->mul(acc, x) + c_[i];
    return F_->reduce(acc);
}

FfPoly FfPoly::powMod(std::uint64_t e, const FfPoly& m) const {
    FfPoly r = FfPoly::constant(F_, Gf2Poly::one());
    FfPoly base = mod(m);
    while (e) {
        if (e & 1) r = (r * base).mod(m);
        base = (base * base).mod(m);
        e >>= 1;
    }
    return r;
}

FfPoly FfPoly::xPow2e(int e, const FfPoly& m) {
    FfPoly r = FfPoly::x(m.field()).mod(m);
    for (int i = 0; i < e; ++i) r = (r * r).mod(m);
    return r;
}

bool FfPoly::irreducible() const {
    int d = degree();
    if (d <= 0) return false;
    int a = F_->degree();
    FfPoly xm = FfPoly::x(F_).mod(*this);
    if (!(xPow2e(a * d, *this) == xm)) return false;
    for (int p = 2; p <= d; ++p) {
        if (d % p) continue;
        bool prime = true;
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        FfPoly g = ffGcd(*this, xPow2e(a * (d / p), *this) + xm);
        if (g.degree() != 0) return false;
    }
    return true;
}

std::string FfPoly::toString(const std::string& var) const {
    if (isZero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const Gf2Poly& c = coeff(i);
        if (c.isZero()) continue;
        if (!s.empty()) s += " + ";
        std::string cs = c.toString("t");
        bool unitc = c == Gf2Poly::one();
        if (i == 0) {
            s += unitc ? "1" : "(" + cs + ")";
        } else {
            if (!unitc) s += "(" + cs + ")*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

FfPoly ffGcd(FfPoly a, FfPoly b) {
    if (a.isZero() && b.isZero()) throw std::invalid_argument("gcd undefined for two zero polynomials");
    while (!b.isZero()) {
        FfPoly r = a.mod(b);
        a = b;
        b = r;
    }
    return a.monic();
}

FfPoly ffInvMod(const FfPoly& a, const FfPoly& m) {
    FfPoly r0 = m, r1 = a.mod(m);
    if (r1.isZero()) throw std::invalid_argument("ffInvMod: not invertible");
    const BinField* F = m.field();
    FfPoly s0(F), s1 = FfPoly::constant(F, Gf2Poly::one());
    while (!r1.isZero()) {
        FfPoly q, rem;
        FfPoly::divmod(r0, r1, q, rem);
        FfPoly s2 = s0 + q * s1;
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r0.degree() != 0) throw std::invalid_argument("ffInvMod: inputs not coprime");
    return s0.scale(F->inv(r0.coeff(0))).mod(m);
}

FfPoly polySqrt(const FfPoly& p) {
    // p must have zero odd coefficients; sqrt takes X^(2i) -> X^i with coefficient sqrt
    const BinField* F = p.field();
    int a = F->degree();
    std::vector<Gf2Poly> r(p.degree() / 2 + 1);
    for (int i = 0; i <= p.degree(); ++i) {
        if (i % 2 == 1) {
            if (!p.coeff(i).isZero()) throw std::domain_error("polySqrt: polynomial is not a square");
        } else {
            r[i / 2] = F->frobeniusPow(p.coeff(i), a - 1);  // inverse Frobenius: c^(2^(a-1))
        }
    }
    return FfPoly(F, std::move(r));
}

std::pair<FfPoly, int> radicalAndMultiplicity(const FfPoly& h) {
    if (h.isZero()) throw std::invalid_argument("radical of the zero polynomial");
    const BinField* F = h.field();
    if (h.degree() == 0) return {FfPoly::constant(F, Gf2Poly::one()), 1};
    // split h = odd * even with even = g(X)^2 and gcd handling for char 2:
    // gcd(h, h') captures the part with multiplicity, recurse on the square root
    FfPoly hm = h.monic();
    FfPoly d = hm.derivative();
    if (d.isZero()) {
        // h is a perfect square
        auto [rad, mult] = radicalAndMultiplicity(polySqrt(hm));
        return {rad, 2 * mult};
    }
    FfPoly g = ffGcd(hm, d);
    if (g.degree() == 0) return {hm, 1};
    // w = h/g collects the odd-multiplicity factors once each; the rest sit in g
    FfPoly w = hm.divExact(g).monic();
    FfPoly radG = radicalAndMultiplicity(g).first;
    FfPoly rad = (w * radG).divExact(ffGcd(w, radG)).monic();
    // maximum multiplicity: smallest m with h | rad^m
    FfPoly pow = rad;
    int m = 1;
    while (true) {
        FfPoly q, r;
        FfPoly::divmod(pow, hm, q, r);
        if (r.isZero()) break;
        pow = pow * rad;
        ++m;
        if (m > h.degree() + 1) throw std::logic_error("radicalAndMultiplicity: runaway");
    }
    return {rad, m};
}

Gf2Poly findRootInField(const FfPoly& p, std::uint64_t seed) {
    const BinField* F = p.field();
    FfPoly f = p.monic();
    DetRng rng(seed ^ (static_cast<std::uint64_t>(F->degree()) << 32));
    int k = F->degree();
    while (f.degree() > 1) {
        // random F_2-trace splitter: T(Y) = sum (beta Y)^(2^i), gcd with f
        Gf2Poly beta;
        for (int b = 0; b < k; ++b)
            if (rng.next() & 1) beta.setBit(b);
        if (beta.isZero()) continue;
        FfPoly by = FfPoly(F, std::vector<Gf2Poly>{Gf2Poly(), beta});  // beta*Y
        FfPoly t = by.mod(f), acc = t;
        for (int i = 1; i < k; ++i) {
            t = (t * t).mod(f);
            acc = acc + t;
        }
        if (acc.isZero() || acc.degree() == 0) continue;
        FfPoly g = ffGcd(f, acc);
        if (g.degree() == 0 || g.degree() == f.degree()) continue;
        f = (2 * g.degree() <= f.degree()) ? g : f.divExact(g).monic();
    }
    if (f.degree() != 1) throw std::runtime_error("findRootInField: no root found");
    return F->reduce(f.coeff(0));  // root of monic X + c is c (char 2)
}

Gf2Poly SubfieldEmbedding::embed(const Gf2Poly& c) const {
    Gf2Poly acc;
    for (int i = 0; i <= c.degree(); ++i)
        if (c.bit(i)) acc = acc + thetaPow[i];
    return big->reduce(acc);
}

Gf2Poly SubfieldEmbedding::project(const Gf2Poly& c) const {
    int an = big->degree(), a = small_->degree();
    Gf2Poly out;
    // solve[] rows give small coordinates as F_2-linear functionals of big coordinates
    for (int r = 0; r < a; ++r) {
        int bit = 0;
        for (int j = 0; j < an; ++j)
            if (solve[r][j] && c.bit(j)) bit ^= 1;
        if (bit) out.setBit(r);
    }
    if (!(embed(out) == big->reduce(c))) throw std::domain_error("project: element not in subfield");
    return out;
}

SubfieldEmbedding makeSubfieldEmbedding(const BinField* big, const BinField* small_, std::uint64_t seed) {
    int an = big->degree(), a = small_->degree();
    if (an % a != 0) throw std::invalid_argument("subfield degree does not divide field degree");
    SubfieldEmbedding e;
    e.big = big;
    e.small_ = small_;
    if (a == 1) {
        e.theta = Gf2Poly::one();
    } else {
        // root of the small modulus viewed over the big field
        std::vector<Gf2Poly> cs(a + 1);
        for (int i = 0; i <= a; ++i)
            if (small_->modulus().bit(i)) cs[i] = Gf2Poly::one();
        e.theta = findRootInField(FfPoly(big, std::move(cs)), seed);
    }
    e.thetaPow.resize(a);
    e.thetaPow[0] = Gf2Poly::one();
    for (int i = 1; i < a; ++i) e.thetaPow[i] = big->mul(e.thetaPow[i - 1], e.theta);

    // Gaussian elimination over F_2: columns = theta^i in the big F_2-basis,
    // augmented with the identity to read off the projection functionals.
    std::vector<std::vector<int>> M(an, std::vector<int>(a + an, 0));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < an; ++j) M[j][i] = e.thetaPow[i].bit(j) ? 1 : 0;
    for (int j = 0; j < an; ++j) M[j][a + j] = 1;
    int row = 0;
    std::vector<int> pivotRowOfCol(a, -1);
    for (int col = 0; col < a && row < an; ++col) {
        int p = -1;
        for (int r = row; r < an; ++r)
            if (M[r][col]) {
                p = r;
                break;
            }
        if (p < 0) throw std::logic_error("subfield embedding: singular basis");
        std::swap(M[p], M[row]);
        for (int r = 0; r < an; ++r)
            if (r != row && M[r][col])
                for (int cidx = 0; cidx < a + an; ++cidx) M[r][cidx] ^= M[row][cidx];
        pivotRowOfCol[col] = row;
        ++row;
    }
    e.solve.assign(a, std::vector<int>(an, 0));
    for (int col = 0; col < a; ++col)
        for (int j = 0; j < an; ++j) e.solve[col][j] = M[pivotRowOfCol[col]][a + j];
    return e;
}

FfPoly minimalPolynomial(const Gf2Poly& gamma, const SubfieldEmbedding& emb) {
    const BinField* F = emb.big;
    int a = emb.small_->degree();
    // orbit of gamma under the q-power Frobenius
    std::vector<Gf2Poly> orbit;
    Gf2Poly g = F->reduce(gamma);
    Gf2Poly cur = g;
    do {
        orbit.push_back(cur);
        cur = F->frobeniusPow(cur, a);
    } while (!(cur == g));
    // psi(z) = prod (z - conj), expanded over the big field
    std::vector<Gf2Poly> psi{Gf2Poly::one()};
    for (const Gf2Poly& c : orbit) {
        std::vector<Gf2Poly> next(psi.size() + 1);
        for (size_t i = 0; i < psi.size(); ++i) {
            next[i + 1] = next[i + 1] + psi[i];
            next[i] = next[i] + F->mul(psi[i], c);  // -c == c
        }
        psi = std::move(next);
    }
    std::vector<Gf2Poly> smallCoeffs(psi.size());
    for (size_t i = 0; i < psi.size(); ++i) smallCoeffs[i] = emb.project(psi[i]);
    return FfPoly(emb.small_, std::move(smallCoeffs));
}

FfBiPoly::FfBiPoly(const BinField* F, std::vector<FfPoly> coeffsOfX) : F_(F), cX_(std::move(coeffsOfX)) {
    trim();
}

void FfBiPoly::trim() {
    while (!cX_.empty() && cX_.back().isZero()) cX_.pop_back();
}

int FfBiPoly::degG() const {
    int d = -1;
    for (const auto& c : cX_) d = std::max(d, c.degree());
    return d;
}

const FfPoly& FfBiPoly::coeffX(int j) const {
    static const FfPoly zero;
    if (j < 0 || j >= static_cast<int>(cX_.size())) return zero;
    return cX_[j];
}

bool FfBiPoly::isMonicInX() const {
    if (cX_.empty()) return false;
    return cX_.back().degree() == 0 && cX_.back().coeff(0) == Gf2Poly::one();
}

FfBiPoly FfBiPoly::operator+(const FfBiPoly& o) const {
    const BinField* F = F_ ? F_ : o.F_;
    std::vector<FfPoly> r(std::max(cX_.size(), o.cX_.size()), FfPoly(F));
    for (size_t j = 0; j < r.size(); ++j) r[j] = coeffX(static_cast<int>(j)) + o.coeffX(static_cast<int>(j));
    return FfBiPoly(F, std::move(r));
}

FfBiPoly FfBiPoly::operator*(const FfBiPoly& o) const {
    const BinField* F = F_ ? F_ : o.F_;
    if (isZero() || o.isZero()) return FfBiPoly(F);
    std::vector<FfPoly> r(cX_.size() + o.cX_.size() - 1, FfPoly(F));
    for (size_t i = 0; i < cX_.size(); ++i)
        for (size_t j = 0; j < o.cX_.size(); ++j) r[i + j] = r[i + j] + cX_[i] * o.cX_[j];
    return FfBiPoly(F, std::move(r));
}

void FfBiPoly::divmodX(const FfBiPoly& a, const FfBiPoly& b, FfBiPoly& q, FfBiPoly& r) {
    if (!b.isMonicInX()) throw std::invalid_argument("FfBiPoly::divmodX: divisor not monic in X");
    const BinField* F = b.F_;
    r = a;
    int db = b.degX();
    std::vector<FfPoly> qc;
    if (r.degX() >= db) qc.assign(r.degX() - db + 1, FfPoly(F));
    while (r.degX() >= db) {
        int d = r.degX();
        FfPoly f = r.coeffX(d);
        qc[d - db] = qc[d - db] + f;
        std::vector<FfPoly> sub(d + 1, FfPoly(F));
        for (int j = 0; j <= db; ++j) sub[j + d - db] = b.coeffX(j) * f;
        r = r + FfBiPoly(F, std::move(sub));
        if (r.degX() == d) throw std::logic_error("FfBiPoly: division failed to reduce degree");
    }
    q = FfBiPoly(F, std::move(qc));
}

bool FfBiPoly::dividesExactly(const FfBiPoly& divisor, FfBiPoly* quotient) const {
    FfBiPoly q, r;
    divmodX(*this, divisor, q, r);
    if (!r.isZero()) return false;
    if (quotient) *quotient = q;
    return true;
}

FfBiPoly FfBiPoly::derivativeX() const {
    if (degX() < 1) return FfBiPoly(F_);
    std::vector<FfPoly> r(cX_.size() - 1, FfPoly(F_));
    for (int j = 1; j <= degX(); ++j)
        if (j % 2 == 1) r[j - 1] = cX_[j];
    return FfBiPoly(F_, std::move(r));
}

FfPoly FfBiPoly::evalG(const Gf2Poly& gamma, const BinField* bigF, const SubfieldEmbedding* emb) const {
    std::vector<Gf2Poly> out(cX_.size());
    for (size_t j = 0; j < cX_.size(); ++j) {
        const FfPoly& cj = cX_[j];
        Gf2Poly acc;
        for (int i = cj.degree(); i >= 0; --i) {
            acc = bigF->mul(acc, gamma);
            acc = acc + (emb ? emb->embed(cj.coeff(i)) : cj.coeff(i));
        }
        out[j] = bigF->reduce(acc);
    }
    return FfPoly(bigF, std::move(out));
}

std::string FfBiPoly::toString() const {
    if (isZero()) return "0";
    std::string s;
    for (int j = degX(); j >= 0; --j) {
        if (coeffX(j).isZero()) continue;
        if (!s.empty()) s += " + ";
        std::string cs = coeffX(j).toString("G");
        if (j == 0) {
            s += "(" + cs + ")";
        } else {
            s += "(" + cs + ")*X";
            if (j > 1) s += "^" + std::to_string(j);
        }
    }
    return s;
}

}  // namespace hyzeta
