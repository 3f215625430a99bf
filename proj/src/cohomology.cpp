#include "hyzeta/cohomology.hpp"

namespace hyzeta {

int ConnectionMatrices::degB() const {
    int d = -1;
    for (const auto& row : B)
        for (const auto& e : row) d = std::max(d, e.deg());
    return d;
}

int ConnectionMatrices::degD() const {
    int d = -1;
    for (const auto& row : D)
        for (const auto& e : row) d = std::max(d, e.deg());
    return d;
}

std::int64_t ConnectionMatrices::valB() const {
    std::int64_t v = PadicScalar::kZeroVal;
    for (const auto& row : B)
        for (const auto& e : row) v = std::min(v, e.val());
    return v;
}

std::int64_t ConnectionMatrices::valD() const {
    std::int64_t v = PadicScalar::kZeroVal;
    for (const auto& row : D)
        for (const auto& e : row) v = std::min(v, e.val());
    return v;
}

ConnectionMatrices computeConnectionMatrices(const LiftedFamily& lf) {
    const UnramExt& Z = *lf.zq;
    GammaRing ring{&Z};
    int g = lf.g;

    ReductionBasis<GammaRing> basis;
    basis.g = g;
    basis.u = lf.u.cX;
    basis.v = lf.v.cX;

    // Y-part of nabla(v X^i Y dX): (dv/dG + 2 df/dG + h dh/dG) X^i; the pure-X part
    // (f_G h - 2 f h_G) dX is exact and drops from the odd eigenspace
    ZqBiPoly vdot = biDerivG(Z, lf.v);
    ZqBiPoly w = biAdd(Z, vdot,
                       biAdd(Z, biMulInt(Z, biDerivG(Z, lf.f), 2),
                             biMul(Z, lf.h, biDerivG(Z, lf.h))));

    ConnectionMatrices cm;
    cm.g = g;
    cm.B.assign(2 * g, std::vector<ZqPoly>(2 * g));
    cm.D.assign(2 * g, std::vector<ZqPoly>(2 * g));
    for (int i = 0; i < 2 * g; ++i) {
        XPoly<GammaRing> p(basis.v.size() + i);
        for (size_t t = 0; t < basis.v.size(); ++t) p[t + i] = basis.v[t];
        cm.B[i] = reducePolyY(ring, basis, std::move(p));

        XPoly<GammaRing> q(w.cX.size() + i);
        for (size_t t = 0; t < w.cX.size(); ++t) q[t + i] = w.cX[t];
        cm.D[i] = reducePolyY(ring, basis, std::move(q));
    }

    ZqMat B0 = matGammaCoeff(Z, cm.B, 0);
    ZqElem det0 = Z.mDet(B0);
    if (det0.isZero() || det0.val() != 0)
        throw PrecisionError("cohomology", "det B(0) is not a 2-adic unit (invalid family or bug)");
    return cm;
}

ZqMat matGammaCoeff(const UnramExt& zq, const std::vector<std::vector<ZqPoly>>& M, int k) {
    (void)zq;
    int n = static_cast<int>(M.size());
    ZqMat R = ZqMat::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) R.at(i, j) = M[i][j].coeff(k);
    return R;
}

ZqMat matGammaEval(const UnramExt& zq, const std::vector<std::vector<ZqPoly>>& M, const ZqElem& gamma) {
    int n = static_cast<int>(M.size());
    ZqMat R = ZqMat::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) R.at(i, j) = zq.pEval(M[i][j], gamma);
    return R;
}

std::vector<ZqPoly> splitByH(const UnramExt& zq, ZqPoly C, const ZqPoly& H) {
    std::vector<ZqPoly> digits;
    if (H.deg() < 1) throw std::invalid_argument("splitByH: constant H");
    while (!C.isZero()) {
        ZqPoly q, r;
        zq.pDivmod(C, H, q, r);
        digits.push_back(r);
        C = q;
    }
    return digits;
}

ZqPoly reduceHDenominators(const FiberCtx& fc, std::vector<ZqPoly> levels, ZqPoly polyPart) {
    const UnramExt& Z = *fc.zq;
    if (fc.constantH || levels.empty()) return polyPart;
    // levels[idx] is the numerator of H^-(idx+1)
    for (int idx = static_cast<int>(levels.size()) - 1; idx >= 0; --idx) {
        int j = idx + 1;
        ZqPoly V = levels[idx];
        if (V.isZero()) continue;
        // write V r = A H + B (Qf H') by re-splitting the Bezout combination
        ZqPoly q, BV;
        Z.pDivmod(Z.pMul(V, fc.bezB), fc.H, q, BV);
        ZqPoly AV = Z.pAdd(Z.pMul(V, fc.bezA), Z.pMul(q, fc.P));
        // bracket = (B (j H' QH^2 - 6 Qf' - 3 QH h') - B' (4 Qf + QH h)) / (6 - 4j)
        ZqPoly W1 = Z.pAdd(Z.pMulInt(fc.W1H, j), fc.W1base);
        ZqPoly num = Z.pSub(Z.pMul(BV, W1), Z.pMul(Z.pDerivative(BV), fc.W2));
        ZqPoly bracket = Z.pDivInt(num, 6 - 4 * j);
        ZqPoly T = Z.pScale(Z.pAdd(AV, bracket), fc.r0inv);
        // T / H^(j-1): split into digits and push to shallower levels
        std::vector<ZqPoly> digits = splitByH(Z, T, fc.H);
        for (int m = 0; m < static_cast<int>(digits.size()); ++m) {
            int lvl = j - 1 - m;
            if (lvl >= 1) {
                if (lvl - 1 < static_cast<int>(levels.size()))
                    levels[lvl - 1] = Z.pAdd(levels[lvl - 1], digits[m]);
                else
                    throw std::logic_error("reduceHDenominators: level overflow");
            } else {
                // H^(-lvl) with lvl <= 0: polynomial contribution digits[m] * H^(m-j+1)
                ZqPoly contrib = digits[m];
                for (int t = 0; t < -lvl; ++t) contrib = Z.pMul(contrib, fc.H);
                polyPart = Z.pAdd(polyPart, contrib);
            }
        }
    }
    return polyPart;
}

}  // namespace hyzeta
