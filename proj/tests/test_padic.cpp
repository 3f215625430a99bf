#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyzeta/zq.hpp"

using namespace hyzeta;

TEST_CASE("scalar arithmetic: units, valuations, inverses") {
    ZWork W(256);
    SUBCASE("(a*b)*b^-1 == a for random units and non-units") {
        DetRng rng(11);
        for (int i = 0; i < 100; ++i) {
            std::int64_t av = static_cast<std::int64_t>(rng.next() % 2000) - 1000;
            std::int64_t bv = static_cast<std::int64_t>(rng.next() % 2000) - 1000;
            if (av == 0 || bv == 0) continue;
            PadicScalar a = W.fromInt(av), b = W.fromInt(bv);
            PadicScalar ab = W.mul(a, b);
            PadicScalar back = W.mul(ab, W.inv(b));
            CHECK(W.eqMod(back, a, 200));
        }
    }
    SUBCASE("valuation bookkeeping") {
        PadicScalar x = W.fromInt(48);  // 16 * 3
        CHECK(x.val() == 4);
        CHECK(W.divInt(x, 6).val() == 3);
        CHECK(W.fromRational(-1, 22).val() == -1);
        CHECK(W.mulInt(x, -4).val() == 6);
        CHECK(W.fromInt(0).isZero());
    }
    SUBCASE("addition with cancellation") {
        PadicScalar a = W.fromInt(7), b = W.fromInt(-7);
        CHECK(W.add(a, b).isZero());
        PadicScalar c = W.add(W.fromInt(5), W.fromInt(3));
        CHECK(c.val() == 3);
        CHECK(W.eqMod(c, W.fromInt(8), 250));
    }
    SUBCASE("rationals: -1/22 times 22 is -1") {
        PadicScalar r = W.fromRational(-1, 22);
        CHECK(W.eqMod(W.mulInt(r, 22), W.fromInt(-1), 240));
    }
    SUBCASE("string round trip") {
        PadicScalar r = W.fromRational(9, 11);
        PadicScalar back = PadicScalar::parse(r.toString(), PadicScalar::kMaxLimbs);
        CHECK(back == r);
    }
}

TEST_CASE("absolute caps truncate") {
    ZWork W(512, 10);  // everything mod 2^10
    PadicScalar x = W.fromInt(3 << 8);
    CHECK(!x.isZero());
    PadicScalar y = W.shift2(x, 3);  // val 11 >= cap
    CHECK(y.isZero());
}

TEST_CASE("teichmuller modulus of x^2+x+1 is itself") {
    BinField F4{Gf2Poly(0b111)};
    UnramExt zq(&F4, ZWork(128));
    // chi == x^2+x+1 exactly: the cyclotomic is already a Teichmuller modulus
    const auto& chi = zq.chi();
    REQUIRE(chi.size() == 3);
    ZWork W = zq.work();
    CHECK(W.eqMod(chi[0], W.one(), 120));
    CHECK(W.eqMod(chi[1], W.one(), 120));
    CHECK(W.eqMod(chi[2], W.one(), 120));
    CHECK(zq.checkTeichmullerModulus(120));
}

TEST_CASE("teichmuller modulus of x+1 is x-1") {
    BinField F2{Gf2Poly(0b11)};
    UnramExt zq(&F2, ZWork(128));
    const auto& chi = zq.chi();
    REQUIRE(chi.size() == 2);
    ZWork W = zq.work();
    CHECK(W.eqMod(chi[0], W.fromInt(-1), 120));
    CHECK(W.eqMod(chi[1], W.one(), 120));
    CHECK(zq.checkTeichmullerModulus(120));
}

TEST_CASE("teichmuller modulus of x^3+x+1 matches brute force at 5 bits") {
    // oracle: the unique monic cubic divisor of x^8 - x mod 32 congruent to
    // x^3+x+1 mod 2, found by exhaustive search over the 16^3 candidates
    int found = 0;
    int c0o = -1, c1o = -1, c2o = -1;
    for (int c0 = 1; c0 < 32; c0 += 2) {          // constant term lifts 1
        for (int c1 = 1; c1 < 32; c1 += 2) {      // x-coefficient lifts 1
            for (int c2 = 0; c2 < 32; c2 += 2) {  // x^2-coefficient lifts 0
                // compute x^8 mod (x^3 + c2 x^2 + c1 x + c0, 2^5) by squaring three times
                auto mulmod = [&](const int A[3], const int B[3], int R[3]) {
                    int t[5] = {0, 0, 0, 0, 0};
                    for (int i = 0; i < 3; ++i)
                        for (int j = 0; j < 3; ++j) t[i + j] = (t[i + j] + A[i] * B[j]) % 32;
                    for (int d = 4; d >= 3; --d) {
                        int lead = t[d] % 32;
                        t[d] = 0;
                        t[d - 1] = ((t[d - 1] - lead * c2) % 32 + 32 * 32) % 32;
                        t[d - 2] = ((t[d - 2] - lead * c1) % 32 + 32 * 32) % 32;
                        t[d - 3] = ((t[d - 3] - lead * c0) % 32 + 32 * 32) % 32;
                    }
                    R[0] = t[0];
                    R[1] = t[1];
                    R[2] = t[2];
                };
                int x1[3] = {0, 1, 0};
                int p[3];
                mulmod(x1, x1, p);       // x^2
                mulmod(p, p, p);         // x^4
                mulmod(p, p, p);         // x^8
                if (p[0] == 0 && p[1] == 1 && p[2] == 0) {
                    ++found;
                    c0o = c0;
                    c1o = c1;
                    c2o = c2;
                }
            }
        }
    }
    REQUIRE(found == 1);

    BinField F8{Gf2Poly(0b1011)};
    UnramExt zq(&F8, ZWork(64));
    ZWork W = zq.work();
    auto mod32 = [&](const PadicScalar& s) {
        auto r = W.residue(s, 5);
        return static_cast<int>(r[0]);
    };
    const auto& chi = zq.chi();
    REQUIRE(chi.size() == 4);
    CHECK(mod32(chi[0]) == c0o);
    CHECK(mod32(chi[1]) == c1o);
    CHECK(mod32(chi[2]) == c2o);
}

TEST_CASE("sigma is a ring morphism and sigma^a is the identity") {
    BinField F8{Gf2Poly(0b1011)};
    UnramExt zq(&F8, ZWork(192));
    DetRng rng(3);
    for (int i = 0; i < 100; ++i) {
        ZqElem x = zq.liftResidue(F8.elementFromIndex(rng.next() % 8));
        ZqElem y = zq.liftResidue(F8.elementFromIndex(rng.next() % 8));
        x = zq.add(x, zq.shift2(zq.liftResidue(F8.elementFromIndex(rng.next() % 8)), 1 + i % 5));
        y = zq.add(y, zq.shift2(zq.liftResidue(F8.elementFromIndex(rng.next() % 8)), 2));
        CHECK(zq.eqMod(zq.sigma(zq.mul(x, y)), zq.mul(zq.sigma(x), zq.sigma(y)), 180));
        CHECK(zq.eqMod(zq.sigma(zq.add(x, y)), zq.add(zq.sigma(x), zq.sigma(y)), 180));
        CHECK(zq.eqMod(zq.sigmaPow(x, 3), x, 180));
    }
}

TEST_CASE("teichmuller element lifts") {
    BinField F4{Gf2Poly(0b111)};
    UnramExt zq(&F4, ZWork(128));
    SUBCASE("1 lifts to 1") {
        CHECK(zq.eqMod(zq.teichmullerLift(Gf2Poly::one()), zq.one(), 120));
    }
    SUBCASE("t lifts to x") {
        std::vector<PadicScalar> xraw(2);
        xraw[1] = zq.work().one();
        ZqElem x = zq.reducePoly(std::move(xraw));
        CHECK(zq.eqMod(zq.teichmullerLift(Gf2Poly(0b10)), x, 120));
    }
    SUBCASE("t+1 lifts to x^2 mod chi = -x-1") {
        ZqElem w = zq.teichmullerLift(Gf2Poly(0b11));
        ZqElem expected;
        expected.c = {zq.work().fromInt(-1), zq.work().fromInt(-1)};
        CHECK(zq.eqMod(w, expected, 120));
    }
    SUBCASE("lift is idempotent under reduce-then-lift") {
        for (std::uint64_t i = 0; i < 4; ++i) {
            ZqElem w = zq.teichmullerLift(F4.elementFromIndex(i));
            if (w.isZero()) {
                CHECK(i == 0);
                continue;
            }
            CHECK(zq.eqMod(zq.teichmullerLift(zq.residue(w)), w, 120));
        }
    }
}

TEST_CASE("tower modulus examples") {
    BinField F2{Gf2Poly(0b11)};
    UnramExt zq(&F2, ZWork(64));
    SUBCASE("degree-1: z + c with -c the Teichmuller lift of cbar") {
        // psibar = z + 1 over F_2; the Teichmuller lift of 1 is 1, so psi = z - 1
        FfPoly psibar(&F2, {Gf2Poly::one(), Gf2Poly::one()});
        TowerExt tw(&zq, psibar);
        CHECK(zq.eqMod(tw.psi()[0], zq.fromInt(-1), 60));
        TowerElem z = tw.zClass();
        CHECK(tw.eqMod(z, tw.one(), 60));
    }
    SUBCASE("cyclotomic z^2+z+1 lifts to itself") {
        FfPoly psibar(&F2, {Gf2Poly::one(), Gf2Poly::one(), Gf2Poly::one()});
        TowerExt tw(&zq, psibar);
        CHECK(zq.eqMod(tw.psi()[0], zq.one(), 60));
        CHECK(zq.eqMod(tw.psi()[1], zq.one(), 60));
        CHECK(tw.checkTeichmullerModulus(60));
    }
    SUBCASE("z^3+z+1 at 5 bits equals the unram lift of x^3+x+1") {
        // same oracle as the cubic teichmuller_modulus example: over Z_2 the tower
        // construction and the unramified construction must agree coefficientwise
        FfPoly psibar(&F2, {Gf2Poly::one(), Gf2Poly::one(), Gf2Poly(), Gf2Poly::one()});
        TowerExt tw(&zq, psibar);
        BinField F8{Gf2Poly(0b1011)};
        UnramExt zq8(&F8, ZWork(64));
        for (int i = 0; i < 3; ++i) {
            auto a = zq.work().residue(tw.psi()[i].coeff(0), 5);
            auto b = zq8.work().residue(zq8.chi()[i], 5);
            CHECK(a[0] == b[0]);
        }
        CHECK(tw.checkTeichmullerModulus(60));
    }
}

TEST_CASE("tower sigma: k = 0 and k = a*n are the identity") {
    BinField F2{Gf2Poly(0b11)};
    UnramExt zq(&F2, ZWork(96));
    // z^5 + z^2 + 1 is irreducible over F_2
    FfPoly psibar(&F2, {Gf2Poly::one(), Gf2Poly(), Gf2Poly::one(), Gf2Poly(), Gf2Poly(), Gf2Poly::one()});
    REQUIRE(psibar.irreducible());
    TowerExt tw(&zq, psibar);
    TowerElem z = tw.zClass();
    CHECK(tw.eqMod(tw.sigmaPow(z, 0), z, 90));
    CHECK(tw.eqMod(tw.sigmaPow(z, 5), z, 90));
    // sigma(x) on the base is squaring on Teichmuller elements: sigma(z) = z^2
    CHECK(tw.eqMod(tw.sigma(z), tw.mul(z, z), 90));
    // tower teichmuller lift of the residue of z is z itself
    CHECK(tw.eqMod(tw.teichmullerLift(tw.residue(z)), z, 90));
}

TEST_CASE("teichmuller moduli divisibility at 256 bits") {
    BinField F4{Gf2Poly(0b111)};
    UnramExt zq(&F4, ZWork(256));
    CHECK(zq.checkTeichmullerModulus(256));
    BinField F2{Gf2Poly(0b11)};
    UnramExt z2(&F2, ZWork(256));
    FfPoly psibar(&F2, {Gf2Poly::one(), Gf2Poly::one(), Gf2Poly(), Gf2Poly(), Gf2Poly::one()});
    REQUIRE(psibar.irreducible());  // z^4 + z + 1
    TowerExt tw(&z2, psibar);
    CHECK(tw.checkTeichmullerModulus(255));
}
