#include "hyzeta/frobzero.hpp"

namespace hyzeta {

void HLaurent::trim() {
    while (!dig.empty() && dig.back().isZero()) dig.pop_back();
    size_t skip = 0;
    while (skip < dig.size() && dig[skip].isZero()) ++skip;
    if (skip) {
        dig.erase(dig.begin(), dig.begin() + static_cast<long>(skip));
        lo += static_cast<int>(skip);
    }
    if (dig.empty()) lo = 0;
}

std::int64_t HLaurent::val() const {
    std::int64_t v = PadicScalar::kZeroVal;
    for (const auto& d : dig) v = std::min(v, d.val());
    return v;
}

namespace {

HLaurent seriesAdd(const UnramExt& Z, const HLaurent& a, const HLaurent& b) {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    HLaurent r;
    r.lo = std::min(a.lo, b.lo);
    int hi = std::max(a.lo + static_cast<int>(a.dig.size()), b.lo + static_cast<int>(b.dig.size()));
    r.dig.assign(hi - r.lo, ZqPoly{});
    for (size_t i = 0; i < a.dig.size(); ++i) r.dig[a.lo - r.lo + i] = a.dig[i];
    for (size_t i = 0; i < b.dig.size(); ++i)
        r.dig[b.lo - r.lo + i] = Z.pAdd(r.dig[b.lo - r.lo + i], b.dig[i]);
    r.trim();
    return r;
}

HLaurent seriesNeg(const UnramExt& Z, const HLaurent& a) {
    HLaurent r = a;
    for (auto& d : r.dig) d = Z.pMulInt(d, -1);
    return r;
}

// digit products with one carry split: dprod = d0 + d1 H
HLaurent seriesMul(const UnramExt& Z, const ZqPoly& H, const HLaurent& a, const HLaurent& b,
                   const ZWork& w) {
    HLaurent r;
    if (a.isZero() || b.isZero()) return r;
    r.lo = a.lo + b.lo;
    r.dig.assign(a.dig.size() + b.dig.size(), ZqPoly{});
    for (size_t i = 0; i < a.dig.size(); ++i) {
        if (a.dig[i].isZero()) continue;
        for (size_t j = 0; j < b.dig.size(); ++j) {
            if (b.dig[j].isZero()) continue;
            ZqPoly prod;
            prod.c.assign(a.dig[i].c.size() + b.dig[j].c.size() - 1, ZqElem{});
            for (size_t t = 0; t < a.dig[i].c.size(); ++t) {
                if (a.dig[i].c[t].isZero()) continue;
                for (size_t u = 0; u < b.dig[j].c.size(); ++u)
                    prod.c[t + u] = Z.add(prod.c[t + u], Z.mul(a.dig[i].c[t], b.dig[j].c[u], w));
            }
            prod.trim();
            if (prod.deg() >= H.deg()) {
                ZqPoly q, rem;
                Z.pDivmod(prod, H, q, rem);
                r.dig[i + j] = Z.pAdd(r.dig[i + j], rem);
                r.dig[i + j + 1] = Z.pAdd(r.dig[i + j + 1], q);
            } else {
                r.dig[i + j] = Z.pAdd(r.dig[i + j], prod);
            }
        }
    }
    r.trim();
    return r;
}

HLaurent seriesFromPoly(const UnramExt& Z, const ZqPoly& H, const ZqPoly& p) {
    HLaurent r;
    if (p.isZero()) return r;
    r.lo = 0;
    r.dig = splitByH(Z, p, H);
    r.trim();
    return r;
}

ZqPoly seriesPolyPart(const UnramExt& Z, const ZqPoly& H, const HLaurent& a) {
    // sum of dig[lvl] H^lvl over lvl >= 0, by Horner from the top
    ZqPoly acc;
    int hi = a.lo + static_cast<int>(a.dig.size()) - 1;
    for (int lvl = hi; lvl >= 0; --lvl) {
        acc = Z.pMul(acc, H);
        if (lvl >= a.lo) acc = Z.pAdd(acc, a.dig[lvl - a.lo]);
    }
    return acc;
}

// sigma-twist of a Gamma=0 X-polynomial: sigma on coefficients, X -> X^2
ZqPoly sigmaTwistX(const UnramExt& Z, const ZqPoly& p) {
    ZqPoly r;
    if (p.isZero()) return r;
    r.c.assign(2 * p.c.size() - 1, ZqElem{});
    for (size_t i = 0; i < p.c.size(); ++i) r.c[2 * i] = Z.sigma(p.c[i]);
    r.trim();
    return r;
}

// Flat H-adic series for the Newton loop: slot ((lev*s + x)*a + c) holds the c-th
// Zq-coordinate of the X^x coefficient of the numerator of H^(lo+lev). Keeping the
// grid contiguous with raw accumulation is what makes the lift affordable.
struct FlatSeries {
    int lo = 0, nlev = 0, s = 1, a = 1;
    std::vector<PadicScalar> v;
    std::vector<std::int32_t> levVal;  // per-level minimum valuation (kZeroVal if empty)

    PadicScalar* slot(int lev, int x) { return &v[(static_cast<size_t>(lev) * s + x) * a]; }
    const PadicScalar* slot(int lev, int x) const {
        return &v[(static_cast<size_t>(lev) * s + x) * a];
    }
    void refreshLevVal() {
        levVal.assign(nlev, 0);
        for (int l = 0; l < nlev; ++l) {
            std::int64_t m = PadicScalar::kZeroVal;
            for (int x = 0; x < s; ++x)
                for (int c = 0; c < a; ++c) m = std::min<std::int64_t>(m, slot(l, x)[c].val());
            levVal[l] = static_cast<std::int32_t>(std::min<std::int64_t>(m, PadicScalar::kZeroVal));
        }
    }
};

FlatSeries flatFrom(const UnramExt& Z, const HLaurent& h, int s) {
    FlatSeries f;
    f.lo = h.lo;
    f.nlev = static_cast<int>(h.dig.size());
    f.s = s;
    f.a = Z.a();
    f.v.assign(static_cast<size_t>(f.nlev) * s * f.a, PadicScalar());
    for (int l = 0; l < f.nlev; ++l)
        for (int x = 0; x <= h.dig[l].deg(); ++x) {
            const ZqElem& e = h.dig[l].coeff(x);
            for (int c = 0; c <= e.deg(); ++c) f.slot(l, x)[c] = e.c[c];
        }
    f.refreshLevVal();
    return f;
}

HLaurent flatTo(const UnramExt& Z, const FlatSeries& f) {
    (void)Z;
    HLaurent h;
    h.lo = f.lo;
    h.dig.assign(f.nlev, ZqPoly{});
    for (int l = 0; l < f.nlev; ++l) {
        ZqPoly& d = h.dig[l];
        d.c.assign(f.s, ZqElem{});
        for (int x = 0; x < f.s; ++x) {
            ZqElem e;
            e.c.assign(f.a, PadicScalar());
            for (int c = 0; c < f.a; ++c) e.c[c] = f.slot(l, x)[c];
            e.trim();
            d.c[x] = std::move(e);
        }
        d.trim();
    }
    h.trim();
    return h;
}

// Raw fixed-point accumulator: value = 2^base * w, normalized only when flushed.
struct Acc {
    std::int32_t base = 0;
    std::int32_t used = 0;  // limbs in w; 0 means empty
    std::uint64_t w[PadicScalar::kMaxLimbs + 2];

    void addShifted(const std::uint64_t* buf, int n, std::int64_t val, int capBits) {
        if (used == 0) {
            base = static_cast<std::int32_t>(val);
            int keep = std::min<int>(n, PadicScalar::kMaxLimbs + 2);
            for (int i = 0; i < keep; ++i) w[i] = buf[i];
            used = keep;
            while (used > 0 && w[used - 1] == 0) --used;
            if (used == 0) base = 0;
            return;
        }
        if (val < base) {
            // re-anchor: shift existing content up by (base - val) bits
            std::int64_t off = base - val;
            int words = static_cast<int>(off / 64), bits = static_cast<int>(off % 64);
            std::uint64_t tmp[PadicScalar::kMaxLimbs + 2] = {0};
            int cap = std::min<int>(PadicScalar::kMaxLimbs + 2,
                                    (capBits - static_cast<int>(val) + 63) / 64);
            for (int i = used - 1; i >= 0; --i) {
                int t = i + words;
                if (t < cap) tmp[t] |= bits ? (w[i] << bits) : w[i];
                if (bits && t + 1 < cap) tmp[t + 1] |= w[i] >> (64 - bits);
            }
            for (int i = 0; i < cap; ++i) w[i] = tmp[i];
            used = cap;
            base = static_cast<std::int32_t>(val);
            std::int64_t off2 = 0;
            (void)off2;
            addAligned(buf, n, 0, capBits);
            while (used > 0 && w[used - 1] == 0) --used;
            return;
        }
        addAligned(buf, n, val - base, capBits);
        while (used > 0 && w[used - 1] == 0) --used;
    }

    // add buf << off into w, truncated at capBits above base
    void addAligned(const std::uint64_t* buf, int n, std::int64_t off, int capBits) {
        int cap = std::min<int>(PadicScalar::kMaxLimbs + 2, (capBits - base + 63) / 64);
        int words = static_cast<int>(off / 64), bits = static_cast<int>(off % 64);
        if (words >= cap) return;
        if (used < cap) {
            for (int i = used; i < cap; ++i) w[i] = 0;
        }
        unsigned __int128 carry = 0;
        for (int i = 0; i + words < cap; ++i) {
            std::uint64_t part = 0;
            if (i < n) part = bits ? (buf[i] << bits) : buf[i];
            if (bits && i > 0 && i - 1 < n) part |= buf[i - 1] >> (64 - bits);
            if (part == 0 && carry == 0) {
                if (i >= n + 1) break;
                continue;
            }
            unsigned __int128 sum = static_cast<unsigned __int128>(w[i + words]) + part + carry;
            w[i + words] = static_cast<std::uint64_t>(sum);
            carry = sum >> 64;
        }
        used = std::max(used, std::min(cap, static_cast<int>(n + words + 2)));
        if (used > cap) used = cap;
    }

    PadicScalar flush(const ZWork& w_, std::int64_t coef = 1) const {
        if (used == 0) return PadicScalar();
        PadicScalar r = w_.compose(base, w, used);
        if (coef != 1) r = w_.mulInt(r, coef);
        return r;
    }
};

// out(+)= coef * A * B over the window [loMin, hiMax] at the given absolute cap;
// `out` is a grid of raw accumulators covering [outLo, outLo + outLev)
struct AccGrid {
    int lo = 0, nlev = 0, rawS = 1, rawA = 1;
    std::vector<Acc> v;
    Acc* slot(int lev, int x) { return &v[(static_cast<size_t>(lev - lo) * rawS + x) * rawA]; }
};

void flatMulAcc(const FlatSeries& A, const FlatSeries& B, bool negate, const ZWork& w,
                AccGrid& out) {
    if (A.nlev == 0 || B.nlev == 0) return;
    const int s = A.s, a = A.a;
    const std::int64_t cap = w.absBits();
    std::uint64_t buf[PadicScalar::kMaxLimbs];
    for (int la = 0; la < A.nlev; ++la) {
        if (A.levVal[la] >= cap) continue;
        for (int lb = 0; lb < B.nlev; ++lb) {
            if (static_cast<std::int64_t>(A.levVal[la]) + B.levVal[lb] >= cap) continue;
            int lev = A.lo + la + B.lo + lb;
            if (lev < out.lo || lev >= out.lo + out.nlev) continue;
            for (int xa = 0; xa < s; ++xa) {
                const PadicScalar* pa = A.slot(la, xa);
                for (int xb = 0; xb < s; ++xb) {
                    const PadicScalar* pb = B.slot(lb, xb);
                    Acc* po = out.slot(lev, xa + xb);
                    for (int ca = 0; ca < a; ++ca) {
                        if (pa[ca].isZero()) continue;
                        std::int64_t va = pa[ca].val();
                        for (int cb = 0; cb < a; ++cb) {
                            if (pb[cb].isZero()) continue;
                            std::int64_t pv = va + pb[cb].val();
                            if (pv >= cap) continue;
                            int outw = std::min<int>(
                                {static_cast<int>((cap - pv + 63) / 64),
                                 PadicScalar::kMaxLimbs, pa[ca].limbs() + pb[cb].limbs()});
                            padicMulTrunc(pa[ca].units(), std::min(pa[ca].limbs(), outw),
                                          pb[cb].units(), std::min(pb[cb].limbs(), outw), buf,
                                          outw);
                            if (negate) {
                                // two's complement over outw limbs, then let the wider
                                // accumulator absorb the sign block
                                std::uint64_t carry = 1;
                                int wide = static_cast<int>((cap - pv + 63) / 64);
                                wide = std::min(wide, PadicScalar::kMaxLimbs);
                                for (int i = outw; i < wide; ++i) buf[i] = 0;
                                for (int i = 0; i < wide; ++i) {
                                    std::uint64_t x = ~buf[i];
                                    buf[i] = x + carry;
                                    carry = (buf[i] < x) ? 1 : 0;
                                }
                                outw = wide;
                            }
                            po[ca + cb].addShifted(buf, outw, pv, static_cast<int>(cap));
                        }
                    }
                }
            }
        }
    }
}

// flush an accumulator grid into a FlatSeries over the window, reducing raw Zq
// coordinates mod chi and carrying X-degrees >= s into the next level
FlatSeries flushGrid(const UnramExt& Z, AccGrid& grid, const ZWork& w, int loMin, int hiMax,
                     const ZqPoly& H, int levShift) {
    const int a = Z.a();
    const int s = grid.rawS / 2 + 1;
    FlatSeries out;
    out.lo = loMin;
    out.nlev = hiMax - loMin + 1;
    out.s = s;
    out.a = a;
    out.v.assign(static_cast<size_t>(out.nlev) * s * a, PadicScalar());
    for (int lev = grid.lo; lev < grid.lo + grid.nlev; ++lev) {
        ZqPoly p;
        p.c.assign(grid.rawS, ZqElem{});
        bool any = false;
        for (int x = 0; x < grid.rawS; ++x) {
            Acc* raw = grid.slot(lev, x);
            std::vector<PadicScalar> rawVec(grid.rawA);
            bool nz = false;
            for (int c = 0; c < grid.rawA; ++c) {
                rawVec[c] = raw[c].flush(w);
                if (!rawVec[c].isZero()) nz = true;
            }
            if (!nz) continue;
            p.c[x] = Z.reducePoly(std::move(rawVec));
            any = any || !p.c[x].isZero();
        }
        if (!any) continue;
        p.trim();
        ZqPoly rem = p;
        if (p.deg() >= H.deg() && H.deg() >= 1) {
            ZqPoly q;
            Z.pDivmod(p, H, q, rem);
            if (lev + 1 < grid.lo + grid.nlev && !q.isZero()) {
                std::uint64_t one[1];
                for (int x = 0; x <= q.deg(); ++x) {
                    const ZqElem& e = q.coeff(x);
                    Acc* raw = grid.slot(lev + 1, x);
                    for (int c = 0; c <= e.deg(); ++c) {
                        if (e.c[c].isZero()) continue;
                        (void)one;
                        raw[c].addShifted(e.c[c].units(), e.c[c].limbs(), e.c[c].val(),
                                          static_cast<int>(w.absBits()));
                    }
                }
            }
        }
        int tlev = lev - levShift;
        if (tlev < loMin || tlev > hiMax || rem.isZero()) continue;
        for (int x = 0; x <= rem.deg(); ++x) {
            const ZqElem& e = rem.coeff(x);
            PadicScalar* po = out.slot(tlev - loMin, x);
            for (int c = 0; c <= e.deg(); ++c) po[c] = w.clamp(e.c[c]);
        }
    }
    out.refreshLevVal();
    return out;
}
}  // namespace

FiberCtx specializeAtZero(const LiftedFamily& lf) {
    const UnramExt& Z = *lf.zq;
    FiberCtx fc;
    fc.zq = lf.zq;
    fc.g = lf.g;
    fc.s = lf.s;
    fc.Dtilde = lf.Dtilde;
    fc.constantH = lf.constantH;
    fc.H = biAtGamma0(Z, lf.H);
    fc.Qf = biAtGamma0(Z, lf.Qf);
    fc.QH = biAtGamma0(Z, lf.QH);
    fc.h = biAtGamma0(Z, lf.h);
    fc.f = biAtGamma0(Z, lf.f);
    fc.u = biAtGamma0(Z, lf.u);
    fc.v = biAtGamma0(Z, lf.v);
    fc.Qh = biAtGamma0(Z, lf.Qh);
    fc.r0 = lf.r.coeff(0);
    if (fc.r0.isZero() || fc.r0.val() != 0)
        throw FamilyError("frobzero", "r(0) is not a unit");
    fc.r0inv = Z.inv(fc.r0);
    if (!fc.constantH) {
        fc.bezA = biAtGamma0(Z, lf.bezA);
        fc.bezB = biAtGamma0(Z, lf.bezB);
        fc.P = Z.pMul(fc.Qf, Z.pDerivative(fc.H));
        fc.W1H = Z.pMul(Z.pDerivative(fc.H), Z.pMul(fc.QH, fc.QH));
        fc.W1base = Z.pSub(Z.pMulInt(Z.pDerivative(fc.Qf), -6),
                           Z.pMulInt(Z.pMul(fc.QH, Z.pDerivative(fc.h)), 3));
        fc.W2 = Z.pAdd(Z.pMulInt(fc.Qf, 4), Z.pMul(fc.QH, fc.h));
    }
    fc.basis.g = lf.g;
    for (const auto& c : fc.u.c) fc.basis.u.push_back(c);
    for (const auto& c : fc.v.c) fc.basis.v.push_back(c);
    return fc;
}

FrobY newtonFrobeniusY(const FiberCtx& fc, const PrecisionProfile& prof, FrobYStats* stats) {
    const UnramExt& Z = *fc.zq;
    const int target = prof.targetPrec;
    FrobY W;
    W.constantH = fc.constantH;
    W.accuracy = 1;

    // constant H is handled on the same path: digits against Heff = X are plain
    // X-coefficients and the H^(-2D) shift degenerates to nothing
    ZqPoly Heff = fc.H;
    int levShift = 2 * fc.Dtilde;
    if (fc.constantH) {
        Heff.c.assign(2, ZqElem{});
        Heff.c[1] = Z.one();
        levShift = 0;
    }
    const int s = std::max(1, fc.s);

    ZqPoly hs = sigmaTwistX(Z, fc.h);  // h^sigma(X^2)
    ZqPoly fs = sigmaTwistX(Z, fc.f);
    ZqPoly h2 = Z.pMul(fc.h, fc.h);
    ZqPoly h2mhs = Z.pSub(h2, hs);
    ZqPoly qh2 = Z.pMul(fc.Qh, fc.Qh);
    if (fc.constantH) {
        // with H = 1 the iteration divides by h^2 = c^2 through Qh = c^-1 exactly
        ZqPoly check = Z.pMul(qh2, h2);
        ZqPoly one;
        one.c.push_back(Z.one());
        if (!Z.pEqMod(check, one, Z.work().relBits() - 8))
            throw std::logic_error("newtonFrobeniusY: Qh^2 h^2 != 1 for constant H");
    }

    HLaurent fse = seriesFromPoly(Z, Heff, fs);
    HLaurent fH = seriesFromPoly(Z, Heff, fc.f);
    HLaurent hH = seriesFromPoly(Z, Heff, fc.h);
    HLaurent h2mhsH = seriesFromPoly(Z, Heff, h2mhs);
    HLaurent qh2H = seriesFromPoly(Z, Heff, qh2);
    int qhHi = qh2H.lo + static_cast<int>(qh2H.dig.size()) - 1;

    FlatSeries fF = flatFrom(Z, fH, s), hF = flatFrom(Z, hH, s);
    FlatSeries h2mhsF = flatFrom(Z, h2mhsH, s), qh2F = flatFrom(Z, qh2H, s);
    FlatSeries fseF = flatFrom(Z, fse, s);
    FlatSeries A = fF;
    FlatSeries B = flatFrom(Z, hH, s);
    for (auto& sc : B.v) sc = Z.work().neg(sc);
    B.refreshLevVal();

    auto makeGrid = [&](int lo, int hi) {
        AccGrid g;
        g.lo = lo;
        g.nlev = hi - lo + 1;
        g.rawS = 2 * s - 1;
        g.rawA = 2 * Z.a() - 1;
        g.v.assign(static_cast<size_t>(g.nlev) * g.rawS * g.rawA, Acc{});
        return g;
    };
    auto addInto = [&](AccGrid& out, const FlatSeries& src, const ZWork& w) {
        for (int l = 0; l < src.nlev; ++l) {
            int lev = src.lo + l;
            if (lev < out.lo || lev >= out.lo + out.nlev) continue;
            for (int x = 0; x < src.s; ++x) {
                const PadicScalar* ps = src.slot(l, x);
                Acc* po = out.slot(lev, x);
                for (int c = 0; c < src.a; ++c)
                    if (!ps[c].isZero())
                        po[c].addShifted(ps[c].units(), ps[c].limbs(), ps[c].val(),
                                         static_cast<int>(w.absBits()));
            }
        }
    };
    auto diffVal = [&](const FlatSeries& x, const FlatSeries& y) {
        std::int64_t m = PadicScalar::kZeroVal;
        int lo = std::min(x.lo, y.lo), hi = std::max(x.lo + x.nlev, y.lo + y.nlev) - 1;
        ZWork w = Z.work();
        for (int lev = lo; lev <= hi; ++lev) {
            bool inx = lev >= x.lo && lev < x.lo + x.nlev;
            bool iny = lev >= y.lo && lev < y.lo + y.nlev;
            for (int t = 0; t < s * Z.a(); ++t) {
                const PadicScalar zero{};
                const PadicScalar& sx = inx ? x.slot(lev - x.lo, 0)[t] : zero;
                const PadicScalar& sy = iny ? y.slot(lev - y.lo, 0)[t] : zero;
                if (sx.isZero() && sy.isZero()) continue;
                m = std::min<std::int64_t>(m, w.sub(sx, sy).val());
            }
        }
        return m;
    };

    for (int k = 1; k < target; ++k) {
        ZWork w = Z.work().withAbs(k + 1);
        int loMin = fc.constantH ? 0 : -(prof.atilde * (k + 1) + prof.btilde);
        int hiMax = fc.constantH ? (prof.asS * (k + 1) + prof.bsS)
                                 : (prof.asS * (k + 1) + prof.bsS) / s + 1;
        // pre-shift, pre-Qh^2 window
        int iLo = loMin + levShift - std::max(qhHi, 0);
        int iHi = hiMax + levShift + 1;
        // T2 = B^2 as a flat series (reused twice)
        AccGrid gT2 = makeGrid(iLo, iHi);
        flatMulAcc(B, B, false, w, gT2);
        FlatSeries T2 = flushGrid(Z, gT2, w, iLo, iHi, Heff, 0);
        // Sa = f^sigma + (h^2 - h^sigma) A - A^2 - f B^2
        AccGrid gSa = makeGrid(iLo, iHi);
        flatMulAcc(A, A, true, w, gSa);
        flatMulAcc(fF, T2, true, w, gSa);
        flatMulAcc(h2mhsF, A, false, w, gSa);
        addInto(gSa, fseF, w);
        FlatSeries Sa = flushGrid(Z, gSa, w, iLo, iHi, Heff, 0);
        // Sb = (h^2 - h^sigma) B - 2AB + h B^2
        AccGrid gSb = makeGrid(iLo, iHi);
        FlatSeries A2 = A;
        for (auto& sc : A2.v) sc = w.mulInt(sc, 2);
        A2.refreshLevVal();
        flatMulAcc(A2, B, true, w, gSb);
        flatMulAcc(hF, T2, false, w, gSb);
        flatMulAcc(h2mhsF, B, false, w, gSb);
        FlatSeries Sb = flushGrid(Z, gSb, w, iLo, iHi, Heff, 0);
        // W <- Qh^2 * S / H^(2D)
        AccGrid gA = makeGrid(loMin + levShift, hiMax + levShift);
        flatMulAcc(qh2F, Sa, false, w, gA);
        FlatSeries na = flushGrid(Z, gA, w, loMin, hiMax, Heff, levShift);
        AccGrid gB = makeGrid(loMin + levShift, hiMax + levShift);
        flatMulAcc(qh2F, Sb, false, w, gB);
        FlatSeries nb = flushGrid(Z, gB, w, loMin, hiMax, Heff, levShift);
        if (stats) {
            std::int64_t dv = std::min(diffVal(na, A), diffVal(nb, B));
            stats->stepDiffVal.push_back(dv);
            stats->windowSize.push_back(hiMax - loMin + 1);
        }
        A = std::move(na);
        B = std::move(nb);
        W.accuracy = k + 1;
    }
    W.alpha = flatTo(Z, A);
    W.beta = flatTo(Z, B);
    if (fc.constantH) {
        // plain X-polynomial views (digits against X are the coefficients)
        W.alphaP = seriesPolyPart(Z, Heff, W.alpha);
        W.betaP = seriesPolyPart(Z, Heff, W.beta);
    }
    if (stats) {
        // full sigma-twisted residual W^2 + h^sigma W - f^sigma at the final accuracy
        ZWork w = Z.work().withAbs(target);
        HLaurent hsH = seriesFromPoly(Z, Heff, hs);
        HLaurent A2h = seriesMul(Z, Heff, W.alpha, W.alpha, w);
        HLaurent B2h = seriesMul(Z, Heff, W.beta, W.beta, w);
        HLaurent ABh = seriesMul(Z, Heff, W.alpha, W.beta, w);
        HLaurent fHs = seriesFromPoly(Z, Heff, fc.f);
        HLaurent hHs = seriesFromPoly(Z, Heff, fc.h);
        HLaurent ra = seriesAdd(Z, A2h, seriesMul(Z, Heff, fHs, B2h, w));
        ra = seriesAdd(Z, ra, seriesMul(Z, Heff, hsH, W.alpha, w));
        ra = seriesAdd(Z, ra, seriesNeg(Z, fse));
        HLaurent rb = seriesAdd(Z, ABh, ABh);
        rb = seriesAdd(Z, rb, seriesNeg(Z, seriesMul(Z, Heff, hHs, B2h, w)));
        rb = seriesAdd(Z, rb, seriesMul(Z, Heff, hsH, W.beta, w));
        stats->finalResidualVal = std::min(ra.val(), rb.val());
    }
    return W;
}

ZqMat frobeniusMatrixZero(const FiberCtx& fc, const FrobY& W, const PrecisionProfile& prof) {
    const UnramExt& Z = *fc.zq;
    int g = fc.g;
    ZqPoly Heff = fc.H;
    if (fc.constantH) {
        Heff.c.assign(2, ZqElem{});
        Heff.c[1] = Z.one();
    }
    ZqMat F0 = ZqMat::zero(2 * g);
    for (int i = 0; i < 2 * g; ++i) {
        // multiply the beta series by the monomial 2 X^(2i+1)
        ZqPoly mono;
        mono.c.assign(2 * i + 2, ZqElem{});
        mono.c[2 * i + 1] = Z.fromInt(2);
        HLaurent monoH = seriesFromPoly(Z, Heff, mono);
        HLaurent num = seriesMul(Z, Heff, monoH, W.beta, Z.work());
        // denominator levels feed the elimination; levels[m-1] = numerator of H^-m
        int maxDen = num.lo < 0 ? -num.lo : 0;
        std::vector<ZqPoly> levels(maxDen);
        for (int m = 1; m <= maxDen; ++m) {
            int idx = -m - num.lo;
            if (idx >= 0 && idx < static_cast<int>(num.dig.size())) levels[m - 1] = num.dig[idx];
        }
        ZqPoly polyPart = seriesPolyPart(Z, Heff, num);
        ZqPoly polyY = fc.constantH ? polyPart
                                    : reduceHDenominators(fc, std::move(levels), polyPart);
        auto row = reducePolyY(FiberRing{&Z}, fc.basis, polyY.c);
        for (int j = 0; j < 2 * g; ++j) F0.at(i, j) = row[j];
    }
    std::int64_t v = Z.mVal(F0);
    if (v < -prof.phi)
        throw PrecisionError("frobzero", "F(0) violates the phi valuation floor");
    return F0;
}

}  // namespace hyzeta
