#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyzeta/parser.hpp"
#include "hyzeta/pipeline.hpp"

using namespace hyzeta;

TEST_CASE("polynomial grammar") {
    BinField F2{Gf2Poly(0b11)};
    ParseVars vars;
    vars.allowX = true;
    vars.allowG = true;
    SUBCASE("the running Qf") {
        FfBiPoly p = parsePolynomial("X^2 + (1+G)*X + 1", &F2, vars);
        CHECK(p.degX() == 2);
        CHECK(p.degG() == 1);
        CHECK(p.isMonicInX());
        // coefficient of X^1 is 1 + G
        CHECK(p.coeffX(1).degree() == 1);
    }
    SUBCASE("coefficients over F_4 reduce mod the field modulus") {
        BinField F4{Gf2Poly(0b111)};
        FfBiPoly p = parsePolynomial("t*X + t^2", &F4, vars);
        CHECK(p.degX() == 1);
        // t^2 = t + 1 mod t^2+t+1
        CHECK(p.coeffX(0).coeff(0) == Gf2Poly(0b11));
        CHECK(p.coeffX(1).coeff(0) == Gf2Poly(0b10));
    }
    SUBCASE("unknown variable with position") {
        CHECK_THROWS_WITH_AS(parsePolynomial("X + Y", &F2, vars),
                             doctest::Contains("unknown variable 'Y'"), ParseError);
        ParseVars tOnly;
        CHECK_THROWS_WITH_AS(parsePolynomial("X", &F2, tOnly),
                             doctest::Contains("unknown variable 'X'"), ParseError);
    }
    SUBCASE("exponent overflow") {
        CHECK_THROWS_WITH_AS(parsePolynomial("X^999999999", &F2, vars),
                             doctest::Contains("exponent overflow"), ParseError);
    }
    SUBCASE("even constants vanish, minus acts as plus") {
        // 2X drops, 3 - 1 = 1 + 1 = 0 in characteristic 2
        CHECK(parsePolynomial("2*X + 3 - 1", &F2, vars).isZero());
        FfBiPoly p = parsePolynomial("X - G", &F2, vars);
        CHECK(p.degX() == 1);
        CHECK(p.degG() == 1);
    }
    SUBCASE("syntax error positions") {
        CHECK_THROWS_WITH_AS(parsePolynomial("X + ", &F2, vars),
                             doctest::Contains("position"), ParseError);
        CHECK_THROWS_WITH_AS(parsePolynomial("(X", &F2, vars), doctest::Contains("')'"),
                             ParseError);
    }
}

TEST_CASE("family file parsing") {
    std::string good =
        "# comment\n[field]\na = 1\nmodulus = t + 1\n[family]\ngenus = 1\nH = X\n"
        "Qf = X^2 + (1 + G)*X + 1\nh = X\n[options]\nN2 = 250\n";
    FamilySpec spec = parseFamilyFile(good);
    CHECK(spec.raw.genus == 1);
    CHECK(spec.overrides.minN2 == 250);
    FamilyInput fi = validateFamily(spec.raw);
    CHECK(fi.kappa == 1);

    CHECK_THROWS_AS(parseFamilyFile("[field]\na = 1\n"), ParseError);
    CHECK_THROWS_AS(parseFamilyFile("[bogus]\n"), ParseError);
    CHECK_THROWS_AS(parseFamilyFile(
                        "[field]\na = 2\nmodulus = t + 1\n[family]\ngenus = 1\nH = X\nQf = "
                        "X^2+X+1\nh = X\n"),
                    FamilyError);  // modulus degree mismatch
}
