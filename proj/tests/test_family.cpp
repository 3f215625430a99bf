#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hyzeta/family.hpp"

using namespace hyzeta;

namespace {

BinField F2{Gf2Poly(0b11)};

FfPoly up(std::initializer_list<std::uint64_t> coeffs) {
    std::vector<Gf2Poly> c;
    for (auto b : coeffs) c.push_back(Gf2Poly(b));
    return FfPoly(&F2, std::move(c));
}

// coefficient j (of X^j) is a polynomial in G given by bits: entry i -> G^i
FfBiPoly bi(std::initializer_list<FfPoly> coeffsOfX) {
    return FfBiPoly(&F2, coeffsOfX);
}

RawFamily runningFamily() {
    RawFamily raw;
    raw.Fq = &F2;
    raw.genus = 1;
    raw.H = bi({up({0}), up({1})});                      // X
    raw.Qf = bi({up({1}), up({1, 1}), up({1})});         // X^2 + (1+G)X + 1
    raw.h = bi({up({0}), up({1})});                      // X
    return raw;
}

RawFamily constantHFamily() {
    RawFamily raw;
    raw.Fq = &F2;
    raw.genus = 1;
    raw.H = bi({up({1})});                               // 1
    raw.Qf = bi({up({1}), up({0, 1}), up({0}), up({1})});  // X^3 + G X + 1
    raw.h = bi({up({1})});                               // 1
    return raw;
}

// integer polynomials in Gamma, for the Sylvester oracle
using IPoly = std::vector<long long>;
IPoly ipAdd(const IPoly& a, const IPoly& b) {
    IPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}
IPoly ipMul(const IPoly& a, const IPoly& b) {
    if (a.empty() || b.empty()) return {};
    IPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}
IPoly ipNeg(const IPoly& a) {
    IPoly r = a;
    for (auto& v : r) v = -v;
    return r;
}
IPoly sylDet(std::vector<std::vector<IPoly>> M) {
    size_t n = M.size();
    if (n == 1) return M[0][0];
    IPoly det;
    for (size_t k = 0; k < n; ++k) {
        std::vector<std::vector<IPoly>> minor(n - 1, std::vector<IPoly>(n - 1));
        for (size_t i = 1; i < n; ++i) {
            size_t cc = 0;
            for (size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                minor[i - 1][cc++] = M[i][j];
            }
        }
        IPoly t = ipMul(M[0][k], sylDet(minor));
        det = ipAdd(det, (k % 2) ? ipNeg(t) : t);
    }
    return det;
}

}  // namespace

TEST_CASE("validate: running family") {
    FamilyInput fi = validateFamily(runningFamily());
    CHECK(fi.Dtilde == 1);
    CHECK(fi.kappa == 1);
    CHECK(fi.s == 1);
    CHECK(fi.eta == 0);
    CHECK(!fi.constantH);
    // r = Res(X, Qf * 1) = Qf(0) = 1 mod 2
    CHECK(fi.rbar.degree() == 0);
}

TEST_CASE("validate: constant-h family uses the D=1 convention") {
    FamilyInput fi = validateFamily(constantHFamily());
    CHECK(fi.constantH);
    CHECK(fi.Dtilde == 1);
    CHECK(fi.s == 0);
    CHECK(fi.kappa == 1);
}

TEST_CASE("validate: coprimality failure is diagnosed") {
    RawFamily raw;
    raw.Fq = &F2;
    raw.genus = 1;
    raw.H = bi({up({0}), up({1})});               // X
    raw.Qf = bi({up({0}), up({1}), up({1})});     // X^2 + X
    raw.h = bi({up({0}), up({1})});               // X
    // for this family the resultant is the constant 0, so the identically-zero
    // diagnostic fires (r(0) = Qf(0) = 0 included)
    CHECK_THROWS_WITH_AS(validateFamily(raw), doctest::Contains("resultant"), FamilyError);
}

TEST_CASE("validate: assorted diagnostics") {
    RawFamily raw = runningFamily();
    raw.h = FfBiPoly(&F2);
    CHECK_THROWS_WITH_AS(validateFamily(raw), doctest::Contains("h is zero"), FamilyError);

    raw = runningFamily();
    raw.h = bi({up({0}), up({0}), up({1})});  // deg_X h = 2 > g
    CHECK_THROWS_AS(validateFamily(raw), FamilyError);

    raw = runningFamily();
    raw.H = bi({up({1}), up({1})});  // X + 1 is not the radical of X
    CHECK_THROWS_WITH_AS(validateFamily(raw), doctest::Contains("radical"), FamilyError);

    raw = runningFamily();
    raw.Qf = bi({up({1}), up({1})});  // f degree wrong
    CHECK_THROWS_WITH_AS(validateFamily(raw), doctest::Contains("degree of f"), FamilyError);
}

TEST_CASE("admissibility") {
    FamilyInput running = validateFamily(runningFamily());
    SUBCASE("r = 1: every parameter is admissible") {
        for (std::uint64_t i = 0; i < 2; ++i)
            CHECK(admissible(running, F2.elementFromIndex(i), &F2, nullptr));
    }
    SUBCASE("rbar = Gamma rejects 0, rbar = G^2+G+1 sees field structure") {
        FamilyInput fake = running;
        fake.rbar = up({0, 1});  // Gamma
        CHECK(!admissible(fake, Gf2Poly(), &F2, nullptr));
        CHECK(admissible(fake, Gf2Poly::one(), &F2, nullptr));
        fake.rbar = up({1, 1, 1});  // G^2 + G + 1
        BinField F4{Gf2Poly(0b111)};
        auto emb4 = makeSubfieldEmbedding(&F4, &F2);
        CHECK(!admissible(fake, Gf2Poly(0b10), &F4, &emb4));  // t in F_4 is a root
        BinField F8{Gf2Poly(0b1011)};
        auto emb8 = makeSubfieldEmbedding(&F8, &F2);
        CHECK(admissible(fake, Gf2Poly(0b10), &F8, &emb8));   // t in F_8 is not
    }
}

TEST_CASE("lift: exact divisor identities") {
    FamilyInput fi = validateFamily(runningFamily());
    UnramExt zq(&F2, ZWork(192));
    LiftedFamily lf = liftFamily(fi, &zq);
    // h = X lifts identically: H = X, QH = 1, Qh = 1
    CHECK(lf.H.degX() == 1);
    CHECK(lf.QH.degX() == 0);
    CHECK(lf.Qh.degX() == 0);
    CHECK(zq.pEqMod(lf.Qh.coeffX(0), lf.QH.coeffX(0), 190));
    // r(Gamma) = 1
    CHECK(lf.r.deg() == 0);
    CHECK(zq.eqMod(lf.r.coeff(0), zq.one(), 190));

    // h*Qh == H^Dtilde and h == H*QH exactly
    ZqBiPoly hQh = biMul(zq, lf.h, lf.Qh);
    CHECK(biEq(zq, hQh, lf.H, 190));
    CHECK(biEq(zq, lf.h, biMul(zq, lf.H, lf.QH), 190));
}

TEST_CASE("lift: h = X^2 gives QH = X, Qh = 1") {
    RawFamily raw;
    raw.Fq = &F2;
    raw.genus = 2;
    raw.H = bi({up({0}), up({1})});  // X
    // Qf = X^4 + G X^3 + X^2 + (1+G) X + (1+G)
    raw.Qf = bi({up({1, 1}), up({1, 1}), up({1}), up({0, 1}), up({1})});
    raw.h = bi({up({0}), up({0}), up({1})});  // X^2
    FamilyInput fi = validateFamily(raw);
    CHECK(fi.Dtilde == 2);
    UnramExt zq(&F2, ZWork(192));
    LiftedFamily lf = liftFamily(fi, &zq);
    CHECK(lf.QH.degX() == 1);   // X
    CHECK(lf.Qh.degX() == 0);   // 1
    ZqBiPoly H2 = biMul(zq, lf.H, lf.H);
    CHECK(biEq(zq, biMul(zq, lf.h, lf.Qh), H2, 190));
    // r = Qf(0, Gamma) = 1 + G
    CHECK(lf.r.deg() == 1);
}

TEST_CASE("deformation resultant against the Sylvester oracle") {
    UnramExt zq(&F2, ZWork(192));
    // H = X^2 + X + Gamma, over Zq the derivative is 2X + 1
    ZqBiPoly H;
    H.cX.resize(3);
    H.cX[0].c = {zq.fromInt(0), zq.one()};  // Gamma
    H.cX[0].trim();
    H.cX[1].c = {zq.one()};
    H.cX[2].c = {zq.one()};
    ZqBiPoly Hp = biDerivX(zq, H);

    SUBCASE("literal example: Res(X^2+X+Gamma, X) = Gamma") {
        ZqBiPoly X;
        X.cX.resize(2);
        X.cX[1].c = {zq.one()};
        ZqPoly r = resultantX(zq, H, X);
        CHECK(r.deg() == 1);
        CHECK(zq.eqMod(r.coeff(0), zq.zero(), 190));
        CHECK(zq.eqMod(r.coeff(1), zq.one(), 190));
    }
    SUBCASE("Qf = 1: Sylvester oracle gives 4 Gamma - 1") {
        // Syl(X^2+X+G, 2X+1): rows (1, 1, G), (2, 1, 0), (0, 2, 1) with Gamma entries
        IPoly one{1}, two{2}, G{0, 1};
        IPoly oracle = sylDet({{one, one, G}, {two, one, {}}, {{}, two, one}});
        REQUIRE(oracle.size() == 2);  // 4G - 1
        CHECK(oracle[0] == -1);
        CHECK(oracle[1] == 4);
        ZqPoly r = resultantX(zq, H, Hp);
        CHECK(r.deg() == 1);
        CHECK(zq.eqMod(r.coeff(0), zq.fromInt(-1), 190));
        CHECK(zq.eqMod(r.coeff(1), zq.fromInt(4), 190));
    }
    SUBCASE("Qf = X: resultant is Gamma(4 Gamma - 1)") {
        ZqBiPoly X;
        X.cX.resize(2);
        X.cX[1].c = {zq.one()};
        ZqPoly r = resultantX(zq, H, biMul(zq, X, Hp));
        CHECK(r.deg() == 2);
        CHECK(zq.eqMod(r.coeff(0), zq.zero(), 190));
        CHECK(zq.eqMod(r.coeff(1), zq.fromInt(-1), 190));
        CHECK(zq.eqMod(r.coeff(2), zq.fromInt(4), 190));
    }
}

TEST_CASE("bezout identity for a genus-2 family with nontrivial resultant") {
    RawFamily raw;
    raw.Fq = &F2;
    raw.genus = 2;
    raw.H = bi({up({0}), up({1}), up({1})});            // X^2 + X
    raw.Qf = bi({up({1}), up({1}), up({0, 1}), up({1})});  // X^3 + G X^2 + X + 1
    raw.h = bi({up({0}), up({1}), up({1})});            // X^2 + X (squarefree)
    FamilyInput fi = validateFamily(raw);
    CHECK(fi.Dtilde == 1);
    UnramExt zq(&F2, ZWork(256));
    LiftedFamily lf = liftFamily(fi, &zq);
    CHECK(lf.bezB.degX() < lf.s);
    // liftFamily already asserts r == bezA H + bezB Qf H'; sanity: r(0) unit
    CHECK(lf.r.coeff(0).val() == 0);
}

TEST_CASE("precision profile: frozen examples") {
    SUBCASE("Nf for g=1, a=1, n=1 is 3") {
        FamilyInput fi = validateFamily(runningFamily());
        PrecisionProfile p = precisionProfile(fi, 1);
        CHECK(p.Nf == 3);
    }
    SUBCASE("Nf for g=2, a=1, n=3 is 7") {
        RawFamily raw;
        raw.Fq = &F2;
        raw.genus = 2;
        raw.H = bi({up({0}), up({1})});
        raw.Qf = bi({up({1, 1}), up({1, 1}), up({1}), up({0, 1}), up({1})});
        raw.h = bi({up({0}), up({0}), up({1})});
        FamilyInput fi = validateFamily(raw);
        PrecisionProfile p = precisionProfile(fi, 3);
        CHECK(p.Nf == 7);
    }
    SUBCASE("phi = 6 for g=1, Dtilde=1, against the numeric minimization oracle") {
        FamilyInput fi = validateFamily(runningFamily());
        PrecisionProfile p = precisionProfile(fi, 1);
        CHECK(p.phi == 6);
        double m1 = 1e9, m2 = 1e9;
        int arg1 = -1;
        for (int k = 0; k <= 64; ++k) {
            double e1 = k - 3 - std::log2(6.0 * k + 3.0);
            if (e1 < m1) {
                m1 = e1;
                arg1 = k;
            }
            long long A2 = 4LL * k - 5;
            if (A2 >= 1) m2 = std::min(m2, k - 3 - std::log2(static_cast<double>(A2)));
        }
        CHECK(p.phi == static_cast<int>(std::ceil(-std::min(m1, m2))));
        // both expressions are increasing past the found minimum
        for (int k = arg1 + 1; k < 64; ++k) {
            double e1 = k - 3 - std::log2(6.0 * k + 3.0);
            double e1n = k + 1 - 3 - std::log2(6.0 * (k + 1) + 3.0);
            CHECK(e1n > e1);
        }
    }
    SUBCASE("g=1, a=1, n=5: N = 95 and N2 = 214") {
        FamilyInput fi = validateFamily(runningFamily());
        PrecisionProfile p = precisionProfile(fi, 5);
        CHECK(p.N == 95);
        CHECK(p.N2 == 214);
        CHECK(p.NGamma == p.chi2 + 1);
        CHECK(p.N2 >= p.N);
        CHECK(p.N >= p.Nf);
    }
    SUBCASE("overrides only increase") {
        FamilyInput fi = validateFamily(runningFamily());
        ProfileOverrides ov;
        ov.minN2 = 400;
        PrecisionProfile p = precisionProfile(fi, 1, ov);
        CHECK(p.N2 == 400);
        ov.minN2 = 1;
        p = precisionProfile(fi, 1, ov);
        CHECK(p.N2 > 1);
    }
}
