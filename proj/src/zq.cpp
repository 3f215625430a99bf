#include "hyzeta/zq.hpp"

#include <stdexcept>

namespace hyzeta {

static const PadicScalar kSZero{};
static const ZqElem kEZero{};

const PadicScalar& ZqElem::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return kSZero;
    return c[i];
}

std::int64_t ZqElem::val() const {
    std::int64_t v = PadicScalar::kZeroVal;
    for (const auto& s : c) v = std::min<std::int64_t>(v, s.val());
    return v;
}

void ZqElem::trim() {
    while (!c.empty() && c.back().isZero()) c.pop_back();
}

const ZqElem& ZqPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return kEZero;
    return c[i];
}

std::int64_t ZqPoly::val() const {
    std::int64_t v = PadicScalar::kZeroVal;
    for (const auto& e : c) v = std::min(v, e.val());
    return v;
}

void ZqPoly::trim() {
    while (!c.empty() && c.back().isZero()) c.pop_back();
}

std::int64_t TowerElem::val() const {
    std::int64_t v = PadicScalar::kZeroVal;
    for (const auto& e : c) v = std::min(v, e.val());
    return v;
}

void TowerElem::trim() {
    while (!c.empty() && c.back().isZero()) c.pop_back();
}

// ---------------------------------------------------------------- UnramExt

UnramExt::UnramExt(const BinField* Fq, ZWork work) : Fq_(Fq), a_(Fq->degree()), work_(work) {
    // 0/1 lift of the field modulus
    chi_.assign(a_ + 1, PadicScalar());
    for (int i = 0; i <= a_; ++i)
        if (Fq->modulus().bit(i)) chi_[i] = work_.one();

    // Graeffe-type functional equation: chi(x^2) = (-1)^a chi(x) chi(-x); one bit per pass.
    int W = work_.relBits();
    std::vector<PadicScalar> minusChi(a_ + 1);
    for (int m = 1; m < W; ++m) {
        for (int i = 0; i <= a_; ++i) minusChi[i] = (i % 2) ? work_.neg(chi_[i]) : chi_[i];
        // E = chi(x^2) - (-1)^a chi(x)*chi(-x), degree <= 2a (top term cancels)
        std::vector<PadicScalar> E(2 * a_ + 1);
        for (int i = 0; i <= a_; ++i) E[2 * i] = chi_[i];
        for (int i = 0; i <= a_; ++i)
            for (int j = 0; j <= a_; ++j) {
                PadicScalar t = work_.mul(chi_[i], minusChi[j]);
                if (a_ % 2) t = work_.neg(t);
                E[i + j] = work_.sub(E[i + j], t);
            }
        std::int64_t ev = PadicScalar::kZeroVal;
        for (const auto& s : E) ev = std::min<std::int64_t>(ev, s.val());
        if (ev >= W) break;
        if (ev < m) throw std::logic_error("teichmuller modulus: residual below expected accuracy");
        for (int i = 1; i <= 2 * a_; i += 2)
            if (E[i].val() == m) throw std::logic_error("teichmuller modulus: odd defect");
        // delta bits from the even part of E/2^m mod 2
        for (int i = 0; i < a_; ++i)
            if (E[2 * i].val() == m) chi_[i] = work_.add(chi_[i], work_.shift2(work_.one(), m));
    }
    if (!checkTeichmullerModulus(std::min(W - 1, work_.relBits() - 1)))
        throw std::logic_error("teichmuller modulus: divisibility check failed");
    buildSigmaTable();
}

void UnramExt::buildSigmaTable() {
    // (x^2)^i mod chi
    std::vector<PadicScalar> x2(3);
    x2[2] = work_.one();
    ZqElem s1 = reducePoly(std::move(x2));
    xSigmaPow_.assign(a_, ZqElem{});
    xSigmaPow_[0] = one();
    for (int i = 1; i < a_; ++i) xSigmaPow_[i] = mul(xSigmaPow_[i - 1], s1);
}

ZqElem UnramExt::one() const {
    ZqElem e;
    e.c.push_back(work_.one());
    return e;
}

ZqElem UnramExt::fromInt(std::int64_t v) const {
    ZqElem e;
    e.c.push_back(work_.fromInt(v));
    e.trim();
    return e;
}

ZqElem UnramExt::fromScalar(const PadicScalar& s) const {
    ZqElem e;
    e.c.push_back(s);
    e.trim();
    return e;
}

ZqElem UnramExt::liftResidue(const Gf2Poly& c) const {
    ZqElem e;
    e.c.assign(a_, PadicScalar());
    for (int i = 0; i < a_; ++i)
        if (c.bit(i)) e.c[i] = work_.one();
    e.trim();
    return e;
}

Gf2Poly UnramExt::residue(const ZqElem& e) const {
    Gf2Poly r;
    for (int i = 0; i < static_cast<int>(e.c.size()); ++i) {
        const PadicScalar& s = e.c[i];
        if (s.isZero()) continue;
        if (s.val() < 0) throw std::domain_error("residue: negative valuation");
        if (s.val() == 0) r.setBit(i);
    }
    return r;
}

ZqElem UnramExt::add(const ZqElem& x, const ZqElem& y) const {
    ZqElem r;
    r.c.resize(std::max(x.c.size(), y.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = work_.add(x.coeff(static_cast<int>(i)), y.coeff(static_cast<int>(i)));
    r.trim();
    return r;
}

ZqElem UnramExt::sub(const ZqElem& x, const ZqElem& y) const {
    ZqElem r;
    r.c.resize(std::max(x.c.size(), y.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = work_.sub(x.coeff(static_cast<int>(i)), y.coeff(static_cast<int>(i)));
    r.trim();
    return r;
}

ZqElem UnramExt::neg(const ZqElem& x) const {
    ZqElem r = x;
    for (auto& s : r.c) s = work_.neg(s);
    return r;
}

ZqElem UnramExt::reducePoly(std::vector<PadicScalar> raw) const {
    while (static_cast<int>(raw.size()) > a_) {
        int d = static_cast<int>(raw.size()) - 1;
        PadicScalar lead = raw.back();
        raw.pop_back();
        if (lead.isZero()) continue;
        for (int i = 0; i < a_; ++i)
            raw[d - a_ + i] = work_.sub(raw[d - a_ + i], work_.mul(lead, chi_[i]));
    }
    ZqElem e;
    e.c = std::move(raw);
    e.trim();
    return e;
}

ZqElem UnramExt::mul(const ZqElem& x, const ZqElem& y) const { return mul(x, y, work_); }

ZqElem UnramExt::mul(const ZqElem& x, const ZqElem& y, const ZWork& w) const {
    if (x.isZero() || y.isZero()) return ZqElem{};
    std::vector<PadicScalar> raw(x.c.size() + y.c.size() - 1);
    for (size_t i = 0; i < x.c.size(); ++i) {
        if (x.c[i].isZero()) continue;
        for (size_t j = 0; j < y.c.size(); ++j)
            raw[i + j] = w.add(raw[i + j], w.mul(x.c[i], y.c[j]));
    }
    // chi is 0/1 to full width, reduction with the ambient policy is fine
    while (static_cast<int>(raw.size()) > a_) {
        int d = static_cast<int>(raw.size()) - 1;
        PadicScalar lead = raw.back();
        raw.pop_back();
        if (lead.isZero()) continue;
        for (int i = 0; i < a_; ++i) raw[d - a_ + i] = w.sub(raw[d - a_ + i], w.mul(lead, chi_[i]));
    }
    ZqElem e;
    e.c = std::move(raw);
    e.trim();
    return e;
}

ZqElem UnramExt::scalarMul(const ZqElem& x, const PadicScalar& s) const {
    if (s.isZero()) return ZqElem{};
    ZqElem r = x;
    for (auto& ci : r.c) ci = work_.mul(ci, s);
    r.trim();
    return r;
}

ZqElem UnramExt::mulInt(const ZqElem& x, std::int64_t k) const {
    if (k == 0) return ZqElem{};
    ZqElem r = x;
    for (auto& ci : r.c) ci = work_.mulInt(ci, k);
    r.trim();
    return r;
}

ZqElem UnramExt::shift2(const ZqElem& x, int t) const {
    ZqElem r = x;
    for (auto& ci : r.c) ci = work_.shift2(ci, t);
    r.trim();
    return r;
}

ZqElem UnramExt::divInt(const ZqElem& x, std::int64_t k) const {
    ZqElem r = x;
    for (auto& ci : r.c) ci = work_.divInt(ci, k);
    r.trim();
    return r;
}

ZqElem UnramExt::clamp(const ZqElem& x, const ZWork& w) const {
    ZqElem r = x;
    for (auto& ci : r.c) ci = w.clamp(ci);
    r.trim();
    return r;
}

ZqElem UnramExt::inv(const ZqElem& x) const {
    if (x.isZero()) throw std::domain_error("Zq: inverse of zero");
    if (x.val() != 0) {
        // peel the 2-power content: x = 2^v u with u a unit
        std::int64_t v = x.val();
        if (v >= PadicScalar::kZeroVal) throw std::domain_error("Zq: inverse of zero");
        ZqElem u = shift2(x, static_cast<int>(-v));
        return shift2(inv(u), static_cast<int>(-v));
    }
    Gf2Poly rbar = residue(x);
    Gf2Poly ibar = Fq_->inv(rbar);
    ZqElem y = liftResidue(ibar);
    int W = work_.relBits();
    for (int have = 1; have < 2 * W; have *= 2) {
        // y <- y (2 - x y)
        ZqElem t = mul(x, y);
        t = sub(fromInt(2), t);
        y = mul(y, t);
    }
    return y;
}

ZqElem UnramExt::sigma(const ZqElem& x) const {
    ZqElem r;
    for (int i = 0; i < static_cast<int>(x.c.size()); ++i) {
        if (x.c[i].isZero()) continue;
        r = add(r, scalarMul(xSigmaPow_[i], x.c[i]));
    }
    return r;
}

ZqElem UnramExt::sigmaPow(ZqElem x, int k) const {
    k %= a_;
    if (k < 0) k += a_;
    for (int i = 0; i < k; ++i) x = sigma(x);
    return x;
}

bool UnramExt::eqMod(const ZqElem& x, const ZqElem& y, int bits) const {
    return valDiff(x, y) >= bits;
}

std::int64_t UnramExt::valDiff(const ZqElem& x, const ZqElem& y) const {
    return sub(x, y).val();
}

ZqElem UnramExt::teichmullerLift(const Gf2Poly& gamma) const {
    ZqElem w = liftResidue(Fq_->reduce(gamma));
    if (w.isZero()) return w;
    int maxPasses = work_.relBits() / std::max(1, a_) + 4;
    for (int pass = 0; pass < maxPasses; ++pass) {
        ZqElem next = w;
        for (int i = 0; i < a_; ++i) next = mul(next, next);
        if (eqMod(next, w, work_.relBits())) return next;
        w = next;
    }
    throw std::logic_error("teichmullerLift: no fixed point reached");
}

bool UnramExt::checkTeichmullerModulus(int bits) const {
    std::vector<PadicScalar> xraw(2);
    xraw[1] = work_.one();
    ZqElem x = reducePoly(std::move(xraw));
    ZqElem p = x;
    for (int i = 0; i < a_; ++i) p = mul(p, p);
    return eqMod(p, x, bits);
}

// ---------------------------------------------------------------- ZqPoly

ZqPoly UnramExt::pAdd(const ZqPoly& x, const ZqPoly& y) const {
    ZqPoly r;
    r.c.resize(std::max(x.c.size(), y.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = add(x.coeff(static_cast<int>(i)), y.coeff(static_cast<int>(i)));
    r.trim();
    return r;
}

ZqPoly UnramExt::pSub(const ZqPoly& x, const ZqPoly& y) const {
    ZqPoly r;
    r.c.resize(std::max(x.c.size(), y.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = sub(x.coeff(static_cast<int>(i)), y.coeff(static_cast<int>(i)));
    r.trim();
    return r;
}

ZqPoly UnramExt::pMul(const ZqPoly& x, const ZqPoly& y) const {
    if (x.isZero() || y.isZero()) return ZqPoly{};
    ZqPoly r;
    r.c.resize(x.c.size() + y.c.size() - 1);
    for (size_t i = 0; i < x.c.size(); ++i) {
        if (x.c[i].isZero()) continue;
        for (size_t j = 0; j < y.c.size(); ++j)
            r.c[i + j] = add(r.c[i + j], mul(x.c[i], y.c[j]));
    }
    r.trim();
    return r;
}

ZqPoly UnramExt::pScale(const ZqPoly& x, const ZqElem& s) const {
    ZqPoly r = x;
    for (auto& e : r.c) e = mul(e, s);
    r.trim();
    return r;
}

ZqPoly UnramExt::pMulInt(const ZqPoly& x, std::int64_t k) const {
    ZqPoly r = x;
    for (auto& e : r.c) e = mulInt(e, k);
    r.trim();
    return r;
}

ZqPoly UnramExt::pDivInt(const ZqPoly& x, std::int64_t k) const {
    ZqPoly r = x;
    for (auto& e : r.c) e = divInt(e, k);
    r.trim();
    return r;
}

ZqPoly UnramExt::pShiftVar(const ZqPoly& x, int k) const {
    if (x.isZero()) return x;
    ZqPoly r;
    r.c.assign(x.c.size() + k, ZqElem{});
    for (size_t i = 0; i < x.c.size(); ++i) r.c[i + k] = x.c[i];
    return r;
}

ZqPoly UnramExt::pDerivative(const ZqPoly& x) const {
    if (x.deg() < 1) return ZqPoly{};
    ZqPoly r;
    r.c.resize(x.c.size() - 1);
    for (int i = 1; i <= x.deg(); ++i) r.c[i - 1] = mulInt(x.c[i], i);
    r.trim();
    return r;
}

ZqElem UnramExt::pEval(const ZqPoly& x, const ZqElem& at) const {
    ZqElem acc;
    for (int i = x.deg(); i >= 0; --i) acc = add(mul(acc, at), x.coeff(i));
    return acc;
}

bool UnramExt::pEqMod(const ZqPoly& x, const ZqPoly& y, int bits) const {
    size_t m = std::max(x.c.size(), y.c.size());
    for (size_t i = 0; i < m; ++i)
        if (!eqMod(x.coeff(static_cast<int>(i)), y.coeff(static_cast<int>(i)), bits)) return false;
    return true;
}

void UnramExt::pDivmod(const ZqPoly& a, const ZqPoly& b, ZqPoly& q, ZqPoly& r) const {
    int db = b.deg();
    if (db < 0) throw std::invalid_argument("ZqPoly: division by zero");
    ZqElem lead = b.coeff(db);
    bool monic = lead.deg() == 0 && !lead.isZero() && lead.c[0].val() == 0;
    ZqElem leadInv = monic ? inv(lead) : ZqElem{};
    if (!monic) throw std::invalid_argument("ZqPoly: divisor must have unit leading coefficient");
    r = a;
    q = ZqPoly{};
    if (r.deg() >= db) q.c.assign(r.deg() - db + 1, ZqElem{});
    while (r.deg() >= db) {
        int d = r.deg();
        ZqElem f = mul(r.coeff(d), leadInv);
        q.c[d - db] = add(q.c[d - db], f);
        for (int i = 0; i <= db; ++i)
            r.c[d - db + i] = sub(r.c[d - db + i], mul(f, b.coeff(i)));
        r.trim();
        if (r.deg() == d) throw std::logic_error("ZqPoly: division stuck");
    }
    q.trim();
}

ZqPoly UnramExt::pDivExactMonic(const ZqPoly& a, const ZqPoly& b) const {
    ZqPoly q, r;
    pDivmod(a, b, q, r);
    if (!r.isZero()) throw std::domain_error("ZqPoly: division not exact");
    return q;
}

ZqPoly UnramExt::pSigma(const ZqPoly& x) const {
    ZqPoly r = x;
    for (auto& e : r.c) e = sigma(e);
    return r;
}

ZqPoly UnramExt::pVarSquared(const ZqPoly& x) const {
    if (x.isZero()) return x;
    ZqPoly r;
    r.c.assign(2 * x.c.size() - 1, ZqElem{});
    for (size_t i = 0; i < x.c.size(); ++i) r.c[2 * i] = x.c[i];
    return r;
}

// ---------------------------------------------------------------- ZqMat

ZqMat UnramExt::mAdd(const ZqMat& A, const ZqMat& B) const {
    ZqMat R = ZqMat::zero(A.n);
    for (size_t i = 0; i < R.e.size(); ++i) R.e[i] = add(A.e[i], B.e[i]);
    return R;
}

ZqMat UnramExt::mSub(const ZqMat& A, const ZqMat& B) const {
    ZqMat R = ZqMat::zero(A.n);
    for (size_t i = 0; i < R.e.size(); ++i) R.e[i] = sub(A.e[i], B.e[i]);
    return R;
}

ZqMat UnramExt::mMul(const ZqMat& A, const ZqMat& B) const {
    ZqMat R = ZqMat::zero(A.n);
    for (int i = 0; i < A.n; ++i)
        for (int k = 0; k < A.n; ++k) {
            const ZqElem& a = A.at(i, k);
            if (a.isZero()) continue;
            for (int j = 0; j < A.n; ++j)
                R.at(i, j) = add(R.at(i, j), mul(a, B.at(k, j)));
        }
    return R;
}

ZqMat UnramExt::mScaleInt(const ZqMat& A, std::int64_t k) const {
    ZqMat R = A;
    for (auto& e : R.e) e = mulInt(e, k);
    return R;
}

ZqMat UnramExt::mScale(const ZqMat& A, const PadicScalar& s) const {
    ZqMat R = A;
    for (auto& e : R.e) e = scalarMul(e, s);
    return R;
}

ZqMat UnramExt::mScaleElem(const ZqMat& A, const ZqElem& e) const {
    ZqMat R = A;
    for (auto& x : R.e) x = mul(x, e);
    return R;
}

ZqMat UnramExt::mSigma(const ZqMat& A) const {
    ZqMat R = A;
    for (auto& e : R.e) e = sigma(e);
    return R;
}

ZqMat UnramExt::mIdentity(int n) const {
    ZqMat R = ZqMat::zero(n);
    for (int i = 0; i < n; ++i) R.at(i, i) = one();
    return R;
}

ZqMat UnramExt::mInv(const ZqMat& A) const {
    int n = A.n;
    ZqMat L = A, R = mIdentity(n);
    for (int col = 0; col < n; ++col) {
        int best = -1;
        std::int64_t bestVal = PadicScalar::kZeroVal;
        for (int row = col; row < n; ++row) {
            std::int64_t v = L.at(row, col).val();
            if (v < bestVal) {
                bestVal = v;
                best = row;
            }
        }
        if (best < 0) throw std::domain_error("ZqMat: singular matrix");
        if (best != col)
            for (int j = 0; j < n; ++j) {
                std::swap(L.e[static_cast<size_t>(best) * n + j], L.e[static_cast<size_t>(col) * n + j]);
                std::swap(R.e[static_cast<size_t>(best) * n + j], R.e[static_cast<size_t>(col) * n + j]);
            }
        ZqElem pivInv = inv(L.at(col, col));
        for (int j = 0; j < n; ++j) {
            L.at(col, j) = mul(L.at(col, j), pivInv);
            R.at(col, j) = mul(R.at(col, j), pivInv);
        }
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            ZqElem f = L.at(row, col);
            if (f.isZero()) continue;
            for (int j = 0; j < n; ++j) {
                L.at(row, j) = sub(L.at(row, j), mul(f, L.at(col, j)));
                R.at(row, j) = sub(R.at(row, j), mul(f, R.at(col, j)));
            }
        }
    }
    return R;
}

ZqElem UnramExt::mDet(const ZqMat& A) const {
    int n = A.n;
    ZqMat L = A;
    ZqElem det = one();
    bool negSign = false;
    for (int col = 0; col < n; ++col) {
        int best = -1;
        std::int64_t bestVal = PadicScalar::kZeroVal;
        for (int row = col; row < n; ++row) {
            std::int64_t v = L.at(row, col).val();
            if (v < bestVal) {
                bestVal = v;
                best = row;
            }
        }
        if (best < 0) return ZqElem{};
        if (best != col) {
            negSign = !negSign;
            for (int j = 0; j < n; ++j)
                std::swap(L.e[static_cast<size_t>(best) * n + j], L.e[static_cast<size_t>(col) * n + j]);
        }
        ZqElem piv = L.at(col, col);
        det = mul(det, piv);
        ZqElem pivInv = inv(piv);
        for (int row = col + 1; row < n; ++row) {
            ZqElem f = mul(L.at(row, col), pivInv);
            if (f.isZero()) continue;
            for (int j = col; j < n; ++j) L.at(row, j) = sub(L.at(row, j), mul(f, L.at(col, j)));
        }
    }
    return negSign ? neg(det) : det;
}

std::int64_t UnramExt::mVal(const ZqMat& A) const {
    std::int64_t v = PadicScalar::kZeroVal;
    for (const auto& e : A.e) v = std::min(v, e.val());
    return v;
}

bool UnramExt::mEqMod(const ZqMat& A, const ZqMat& B, int bits) const {
    for (size_t i = 0; i < A.e.size(); ++i)
        if (!eqMod(A.e[i], B.e[i], bits)) return false;
    return true;
}

// ---------------------------------------------------------------- TowerExt

TowerExt::TowerExt(const UnramExt* zq, const FfPoly& psibar) : zq_(zq), n_(psibar.degree()) {
    if (!psibar.isMonic()) throw std::invalid_argument("TowerExt: psibar not monic");
    if (!((n_ == 1) || psibar.irreducible()))
        throw std::invalid_argument("TowerExt: modulus not irreducible");
    const ZWork& w = zq_->work();
    psi_.assign(n_ + 1, ZqElem{});
    for (int i = 0; i <= n_; ++i) psi_[i] = zq_->liftResidue(psibar.coeff(i));
    psibar_ = psibar;

    const BinField* Fq = zq_->residueField();
    int a = Fq->degree();
    int W = w.relBits();
    for (int m = 1; m < W; ++m) {
        // E = psi^sigma(z^2) - (-1)^n psi(z) psi(-z)
        std::vector<ZqElem> E(2 * n_ + 1);
        for (int i = 0; i <= n_; ++i) E[2 * i] = zq_->sigma(psi_[i]);
        for (int i = 0; i <= n_; ++i) {
            if (psi_[i].isZero()) continue;
            for (int j = 0; j <= n_; ++j) {
                ZqElem t = zq_->mul(psi_[i], psi_[j]);
                bool negTerm = ((j % 2) == 1) != ((n_ % 2) == 1);  // (-1)^j from psi(-z), (-1)^n overall
                if (!negTerm) t = zq_->neg(t);
                E[i + j] = zq_->add(E[i + j], t);
            }
        }
        std::int64_t ev = PadicScalar::kZeroVal;
        for (const auto& e : E) ev = std::min(ev, e.val());
        if (ev >= W) break;
        if (ev < m) throw std::logic_error("tower modulus: residual below expected accuracy");
        // solve delta over the residue field: deltabar^(sigma) (y) = Ebar(y), y = z^2 slot
        for (int i = 1; i <= 2 * n_; i += 2)
            if (E[i].val() == m) throw std::logic_error("tower modulus: odd defect");
        for (int i = 0; i < n_; ++i) {
            if (E[2 * i].val() != m) continue;
            Gf2Poly ebar = zq_->residue(zq_->shift2(E[2 * i], -m));
            if (ebar.isZero()) continue;
            // inverse Frobenius in Fq: c -> c^(2^(a-1))
            Gf2Poly dbar = Fq->frobeniusPow(ebar, a - 1);
            psi_[i] = zq_->add(psi_[i], zq_->shift2(zq_->liftResidue(dbar), m));
        }
    }
    if (!checkTeichmullerModulus(W - 1))
        throw std::logic_error("tower modulus: divisibility check failed");
    // (z^2)^i mod psi
    std::vector<ZqElem> z2(3);
    z2[2] = zq_->one();
    TowerElem s1 = reducePoly(std::move(z2));
    zSigmaPow_.assign(n_, TowerElem{});
    zSigmaPow_[0] = one();
    for (int i = 1; i < n_; ++i) zSigmaPow_[i] = mul(zSigmaPow_[i - 1], s1);
}

TowerElem TowerExt::zClass() const {
    std::vector<ZqElem> z(2);
    z[1] = zq_->one();
    return reducePoly(std::move(z));
}

TowerElem TowerExt::one() const {
    TowerElem e;
    e.c.push_back(zq_->one());
    return e;
}

TowerElem TowerExt::fromZq(const ZqElem& e) const {
    TowerElem t;
    t.c.push_back(e);
    t.trim();
    return t;
}

TowerElem TowerExt::liftResidue(const FfPoly& rbar) const {
    TowerElem t;
    t.c.resize(rbar.degree() + 1);
    for (int i = 0; i <= rbar.degree(); ++i) t.c[i] = zq_->liftResidue(rbar.coeff(i));
    t.trim();
    return t;
}

FfPoly TowerExt::residue(const TowerElem& e) const {
    std::vector<Gf2Poly> cs(e.c.size());
    for (size_t i = 0; i < e.c.size(); ++i) cs[i] = zq_->residue(e.c[i]);
    return FfPoly(zq_->residueField(), std::move(cs));
}

TowerElem TowerExt::reducePoly(std::vector<ZqElem> raw) const {
    while (static_cast<int>(raw.size()) > n_) {
        int d = static_cast<int>(raw.size()) - 1;
        ZqElem lead = raw.back();
        raw.pop_back();
        if (lead.isZero()) continue;
        for (int i = 0; i < n_; ++i)
            raw[d - n_ + i] = zq_->sub(raw[d - n_ + i], zq_->mul(lead, psi_[i]));
    }
    TowerElem t;
    t.c = std::move(raw);
    t.trim();
    return t;
}

TowerElem TowerExt::add(const TowerElem& x, const TowerElem& y) const {
    TowerElem r;
    r.c.resize(std::max(x.c.size(), y.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
        const ZqElem& a = i < x.c.size() ? x.c[i] : kEZero;
        const ZqElem& b = i < y.c.size() ? y.c[i] : kEZero;
        r.c[i] = zq_->add(a, b);
    }
    r.trim();
    return r;
}

TowerElem TowerExt::sub(const TowerElem& x, const TowerElem& y) const { return add(x, neg(y)); }

TowerElem TowerExt::neg(const TowerElem& x) const {
    TowerElem r = x;
    for (auto& e : r.c) e = zq_->neg(e);
    return r;
}

TowerElem TowerExt::mul(const TowerElem& x, const TowerElem& y) const {
    if (x.isZero() || y.isZero()) return TowerElem{};
    std::vector<ZqElem> raw(x.c.size() + y.c.size() - 1);
    for (size_t i = 0; i < x.c.size(); ++i) {
        if (x.c[i].isZero()) continue;
        for (size_t j = 0; j < y.c.size(); ++j)
            raw[i + j] = zq_->add(raw[i + j], zq_->mul(x.c[i], y.c[j]));
    }
    return reducePoly(std::move(raw));
}

TowerElem TowerExt::scalarZq(const TowerElem& x, const ZqElem& s) const {
    TowerElem r = x;
    for (auto& e : r.c) e = zq_->mul(e, s);
    r.trim();
    return r;
}

TowerElem TowerExt::shift2(const TowerElem& x, int t) const {
    TowerElem r = x;
    for (auto& e : r.c) e = zq_->shift2(e, t);
    r.trim();
    return r;
}

TowerElem TowerExt::inv(const TowerElem& x) const {
    if (x.isZero()) throw std::domain_error("Tower: inverse of zero");
    if (x.val() != 0) {
        std::int64_t v = x.val();
        if (v >= PadicScalar::kZeroVal) throw std::domain_error("Tower: inverse of zero");
        TowerElem u = shift2(x, static_cast<int>(-v));
        return shift2(inv(u), static_cast<int>(-v));
    }
    FfPoly rbar = residue(x);
    FfPoly ibar = ffInvMod(rbar, psibar_);
    TowerElem y = liftResidue(ibar);
    int W = zq_->work().relBits();
    for (int have = 1; have < 2 * W; have *= 2) {
        TowerElem t = mul(x, y);
        TowerElem two = fromZq(zq_->fromInt(2));
        y = mul(y, sub(two, t));
    }
    return y;
}

bool TowerExt::eqMod(const TowerElem& x, const TowerElem& y, int bits) const {
    return valDiff(x, y) >= bits;
}

std::int64_t TowerExt::valDiff(const TowerElem& x, const TowerElem& y) const {
    return sub(x, y).val();
}

TowerElem TowerExt::sigma(const TowerElem& x) const {
    TowerElem r;
    for (int i = 0; i < static_cast<int>(x.c.size()); ++i) {
        if (x.c[i].isZero()) continue;
        r = add(r, scalarZq(zSigmaPow_[i], zq_->sigma(x.c[i])));
    }
    return r;
}

TowerElem TowerExt::sigmaPow(TowerElem x, int k) const {
    int order = zq_->a() * n_;
    k %= order;
    if (k < 0) k += order;
    for (int i = 0; i < k; ++i) x = sigma(x);
    return x;
}

TowerElem TowerExt::teichmullerLift(const FfPoly& gammabar) const {
    TowerElem w = liftResidue(gammabar.mod(psibar_));
    if (w.isZero()) return w;
    int an = zq_->a() * n_;
    int maxPasses = zq_->work().relBits() / std::max(1, an) + 4;
    for (int pass = 0; pass < maxPasses; ++pass) {
        TowerElem next = w;
        for (int i = 0; i < an; ++i) next = mul(next, next);
        if (eqMod(next, w, zq_->work().relBits())) return next;
        w = next;
    }
    throw std::logic_error("tower teichmullerLift: no fixed point reached");
}

bool TowerExt::checkTeichmullerModulus(int bits) const {
    TowerElem z = zClass();
    TowerElem p = z;
    int an = zq_->a() * n_;
    for (int i = 0; i < an; ++i) p = mul(p, p);
    return eqMod(p, z, bits);
}

TowerMat TowerExt::mMul(const TowerMat& A, const TowerMat& B) const {
    TowerMat R = TowerMat::zero(A.n);
    for (int i = 0; i < A.n; ++i)
        for (int k = 0; k < A.n; ++k) {
            const TowerElem& a = A.at(i, k);
            if (a.isZero()) continue;
            for (int j = 0; j < A.n; ++j)
                R.at(i, j) = add(R.at(i, j), mul(a, B.at(k, j)));
        }
    return R;
}

TowerMat TowerExt::mSigmaPow(const TowerMat& A, int k) const {
    TowerMat R = A;
    for (auto& e : R.e) e = sigmaPow(e, k);
    return R;
}

TowerMat TowerExt::mIdentity(int m) const {
    TowerMat R = TowerMat::zero(m);
    for (int i = 0; i < m; ++i) R.at(i, i) = one();
    return R;
}

std::int64_t TowerExt::mVal(const TowerMat& A) const {
    std::int64_t v = PadicScalar::kZeroVal;
    for (const auto& e : A.e) v = std::min(v, e.val());
    return v;
}

}  // namespace hyzeta
