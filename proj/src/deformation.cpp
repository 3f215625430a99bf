#include "hyzeta/deformation.hpp"

namespace hyzeta {

namespace {

// coefficients of M(Gamma^2)-twisted-by-sigma times rpoly, as matrices per Gamma power
std::vector<ZqMat> twistTimes(const UnramExt& Z, const std::vector<ZqMat>& Mcoef,
                              const ZqPoly& rpoly, int shift, std::int64_t scale) {
    // result[t] = scale * sum_{2u + w + shift = t} sigma(M[u]) r[w]
    if (Mcoef.empty() || rpoly.isZero()) return {};
    int n = Mcoef[0].n;
    int deg = 2 * (static_cast<int>(Mcoef.size()) - 1) + rpoly.deg() + shift;
    std::vector<ZqMat> out(deg + 1, ZqMat::zero(n));
    for (size_t u = 0; u < Mcoef.size(); ++u) {
        ZqMat su = Z.mSigma(Mcoef[u]);
        if (scale != 1) su = Z.mScaleInt(su, scale);
        for (int w = 0; w <= rpoly.deg(); ++w) {
            const ZqElem& rw = rpoly.coeff(w);
            if (rw.isZero()) continue;
            int t = 2 * static_cast<int>(u) + w + shift;
            out[t] = Z.mAdd(out[t], Z.mScaleElem(su, rw));
        }
    }
    while (!out.empty()) {
        bool zero = true;
        for (const auto& e : out.back().e)
            if (!e.isZero()) zero = false;
        if (!zero) break;
        out.pop_back();
    }
    return out;
}

std::vector<ZqMat> gammaCoeffs(const UnramExt& Z, const std::vector<std::vector<ZqPoly>>& M,
                               int deg) {
    std::vector<ZqMat> out;
    for (int t = 0; t <= deg; ++t) out.push_back(matGammaCoeff(Z, M, t));
    return out;
}

std::vector<ZqMat> gammaDeriv(const UnramExt& Z, const std::vector<ZqMat>& M) {
    std::vector<ZqMat> out;
    for (size_t t = 1; t < M.size(); ++t) out.push_back(Z.mScaleInt(M[t], static_cast<int>(t)));
    return out;
}

ZqElem elemPow(const UnramExt& Z, ZqElem base, int e) {
    ZqElem r = Z.one();
    while (e) {
        if (e & 1) r = Z.mul(r, base);
        base = Z.mul(base, base);
        e >>= 1;
    }
    return r;
}

}  // namespace

FrobSeries solveDeformation(const LiftedFamily& lf, const ConnectionMatrices& cm, const ZqMat& F0,
                            const PrecisionProfile& prof) {
    const UnramExt& Z = *lf.zq;
    const ZWork& W = Z.work();
    int m = 2 * lf.g;
    int NG = prof.NGamma;

    int degB = std::max(cm.degB(), 0);
    std::vector<ZqMat> B = gammaCoeffs(Z, cm.B, degB);
    std::vector<ZqMat> D = gammaCoeffs(Z, cm.D, std::max(cm.degD(), 0));
    if (cm.degD() < 0) D.clear();
    std::vector<ZqMat> Bdot = gammaDeriv(Z, B);
    // Bdot - D
    std::vector<ZqMat> BdotMinusD(std::max(Bdot.size(), D.size()), ZqMat::zero(m));
    for (size_t t = 0; t < BdotMinusD.size(); ++t) {
        ZqMat x = t < Bdot.size() ? Bdot[t] : ZqMat::zero(m);
        if (t < D.size()) x = Z.mSub(x, D[t]);
        BdotMinusD[t] = x;
    }

    ZqPoly rdot = Z.pDerivative(lf.r);
    // P1 = r B^sigma(Gamma^2); P3 = -M r' B^sigma(Gamma^2) + 2 Gamma r (B'-D)^sigma(Gamma^2)
    std::vector<ZqMat> P1 = twistTimes(Z, B, lf.r, 0, 1);
    std::vector<ZqMat> P3;
    {
        std::vector<ZqMat> t1 =
            rdot.isZero() ? std::vector<ZqMat>{} : twistTimes(Z, B, rdot, 0, -prof.M);
        std::vector<ZqMat> t2 = BdotMinusD.empty()
                                    ? std::vector<ZqMat>{}
                                    : twistTimes(Z, BdotMinusD, lf.r, 1, 2);
        P3.assign(std::max(t1.size(), t2.size()), ZqMat::zero(m));
        for (size_t t = 0; t < P3.size(); ++t) {
            if (t < t1.size()) P3[t] = Z.mAdd(P3[t], t1[t]);
            if (t < t2.size()) P3[t] = Z.mAdd(P3[t], t2[t]);
        }
    }

    ZqMat B0 = B[0];
    ZqMat B0inv = Z.mInv(B0);
    ZqMat SB0inv = Z.mInv(Z.mSigma(B0));
    ZqElem r0 = lf.r.coeff(0);
    ZqElem r0inv = Z.inv(r0);
    ZqMat Linv = Z.mScaleElem(SB0inv, r0inv);

    FrobSeries fs;
    fs.g = lf.g;
    fs.NGamma = NG;
    fs.chi2 = prof.chi2;
    fs.K.assign(NG, ZqMat::zero(m));
    fs.K[0] = Z.mMul(Z.mScaleElem(F0, elemPow(Z, r0, prof.M)), B0inv);

    // running convolutions: C1 = P1 (*) K-dot, C2 = P1 (*) K, C3 = P3 (*) K
    std::vector<ZqMat> C1(NG, ZqMat::zero(m)), C2(NG, ZqMat::zero(m)), C3(NG, ZqMat::zero(m));
    auto contribute = [&](const ZqMat& Kj, int j) {
        for (size_t t = 0; t < P1.size(); ++t) {
            if (j >= 1 && static_cast<int>(t) + j - 1 < NG)
                C1[t + j - 1] = Z.mAdd(C1[t + j - 1], Z.mScaleInt(Z.mMul(P1[t], Kj), j));
            if (static_cast<int>(t) + j < NG) C2[t + j] = Z.mAdd(C2[t + j], Z.mMul(P1[t], Kj));
        }
        for (size_t t = 0; t < P3.size(); ++t)
            if (static_cast<int>(t) + j < NG) C3[t + j] = Z.mAdd(C3[t + j], Z.mMul(P3[t], Kj));
    };
    contribute(fs.K[0], 0);

    for (int k = 1; k < NG; ++k) {
        ZqMat S = ZqMat::zero(m);
        for (size_t l = 0; l < B.size(); ++l) {
            int idx = k - 1 - static_cast<int>(l);
            if (idx < 0) break;
            S = Z.mAdd(S, Z.mMul(Z.mAdd(C1[idx], C3[idx]), B[l]));
        }
        for (size_t l = 0; l < D.size(); ++l) {
            int idx = k - 1 - static_cast<int>(l);
            if (idx < 0) break;
            S = Z.mAdd(S, Z.mMul(C2[idx], D[l]));
        }
        ZqMat Kk = Z.mMul(Z.mMul(Linv, S), B0inv);
        Kk = Z.mScale(Kk, W.fromRational(-1, k));
        fs.K[k] = Kk;
        contribute(Kk, k);
    }

    // F' = K * B up to degree NGamma-1+degB; the tail beyond chi2 is the Prop-6 check
    fs.Fprime.assign(NG + degB, ZqMat::zero(m));
    for (int c = 0; c < NG + degB; ++c)
        for (size_t l = 0; l < B.size(); ++l) {
            int j = c - static_cast<int>(l);
            if (j < 0 || j >= NG) continue;
            fs.Fprime[c] = Z.mAdd(fs.Fprime[c], Z.mMul(fs.K[j], B[l]));
        }
    return fs;
}

std::int64_t deformationResidualVal(const LiftedFamily& lf, const ConnectionMatrices& cm,
                                    const FrobSeries& fs, const PrecisionProfile& prof) {
    const UnramExt& Z = *lf.zq;
    int m = 2 * lf.g;
    int NG = fs.NGamma;
    int degB = std::max(cm.degB(), 0);
    std::vector<ZqMat> B = gammaCoeffs(Z, cm.B, degB);
    std::vector<ZqMat> D = gammaCoeffs(Z, cm.D, std::max(cm.degD(), 0));
    if (cm.degD() < 0) D.clear();
    std::vector<ZqMat> Bdot = gammaDeriv(Z, B);
    std::vector<ZqMat> BdotMinusD(std::max(Bdot.size(), D.size()), ZqMat::zero(m));
    for (size_t t = 0; t < BdotMinusD.size(); ++t) {
        ZqMat x = t < Bdot.size() ? Bdot[t] : ZqMat::zero(m);
        if (t < D.size()) x = Z.mSub(x, D[t]);
        BdotMinusD[t] = x;
    }
    ZqPoly rdot = Z.pDerivative(lf.r);
    std::vector<ZqMat> P1 = twistTimes(Z, B, lf.r, 0, 1);
    std::vector<ZqMat> P3;
    {
        std::vector<ZqMat> t1 =
            rdot.isZero() ? std::vector<ZqMat>{} : twistTimes(Z, B, rdot, 0, -prof.M);
        std::vector<ZqMat> t2 =
            BdotMinusD.empty() ? std::vector<ZqMat>{} : twistTimes(Z, BdotMinusD, lf.r, 1, 2);
        P3.assign(std::max(t1.size(), t2.size()), ZqMat::zero(m));
        for (size_t t = 0; t < P3.size(); ++t) {
            if (t < t1.size()) P3[t] = Z.mAdd(P3[t], t1[t]);
            if (t < t2.size()) P3[t] = Z.mAdd(P3[t], t2[t]);
        }
    }
    std::int64_t worst = PadicScalar::kZeroVal;
    for (int c = 0; c <= NG - 2; ++c) {
        ZqMat acc = ZqMat::zero(m);
        // P1 K' B + P1 K D + P3 K B at Gamma^c
        for (size_t t = 0; t < P1.size(); ++t) {
            for (size_t l = 0; l < B.size(); ++l) {
                int j = c - static_cast<int>(t) - static_cast<int>(l) + 1;
                if (j >= 1 && j < NG)
                    acc = Z.mAdd(acc, Z.mScaleInt(Z.mMul(Z.mMul(P1[t], fs.K[j]), B[l]), j));
            }
            for (size_t l = 0; l < D.size(); ++l) {
                int j = c - static_cast<int>(t) - static_cast<int>(l);
                if (j >= 0 && j < NG) acc = Z.mAdd(acc, Z.mMul(Z.mMul(P1[t], fs.K[j]), D[l]));
            }
        }
        for (size_t t = 0; t < P3.size(); ++t)
            for (size_t l = 0; l < B.size(); ++l) {
                int j = c - static_cast<int>(t) - static_cast<int>(l);
                if (j >= 0 && j < NG) acc = Z.mAdd(acc, Z.mMul(Z.mMul(P3[t], fs.K[j]), B[l]));
            }
        worst = std::min(worst, Z.mVal(acc));
    }
    return worst;
}

ZqMat frobSeriesEval(const UnramExt& zq, const FrobSeries& fs, const ZqElem& gamma) {
    int m = 2 * fs.g;
    ZqMat acc = ZqMat::zero(m);
    for (int c = static_cast<int>(fs.Fprime.size()) - 1; c >= 0; --c) {
        ZqMat next = ZqMat::zero(m);
        for (int i = 0; i < m * m; ++i) next.e[i] = zq.add(zq.mul(acc.e[i], gamma), fs.Fprime[c].e[i]);
        acc = next;
    }
    return acc;
}

std::int64_t frobSeriesTailVal(const FrobSeries& fs) {
    std::int64_t v = PadicScalar::kZeroVal;
    for (size_t c = static_cast<size_t>(fs.chi2) + 1; c < fs.Fprime.size(); ++c)
        for (const auto& e : fs.Fprime[c].e) v = std::min(v, e.val());
    return v;
}

}  // namespace hyzeta
