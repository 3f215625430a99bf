#include "hyzeta/parser.hpp"

namespace hyzeta {

namespace {

struct Parser {
    const std::string& src;
    const BinField* F;
    const ParseVars& vars;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("parser", what + " at position " + std::to_string(pos + 1));
    }

    void skipWs() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
    }

    bool eat(char c) {
        skipWs();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skipWs();
        return pos < src.size() ? src[pos] : '\0';
    }

    FfBiPoly constant(const Gf2Poly& c) const {
        if (c.isZero()) return FfBiPoly(F);
        return FfBiPoly(F, {FfPoly::constant(F, F->reduce(c))});
    }

    std::uint64_t parseUint() {
        skipWs();
        if (pos >= src.size() || src[pos] < '0' || src[pos] > '9') fail("expected a number");
        std::uint64_t v = 0;
        while (pos < src.size() && src[pos] >= '0' && src[pos] <= '9') {
            v = v * 10 + static_cast<std::uint64_t>(src[pos] - '0');
            if (v > 10'000'000) fail("exponent overflow");
            ++pos;
        }
        return v;
    }

    FfBiPoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            FfBiPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == 'X') {
            if (!vars.allowX) fail("unknown variable 'X'");
            ++pos;
            return FfBiPoly(F, {FfPoly(F), FfPoly::constant(F, Gf2Poly::one())});
        }
        if (c == 'G') {
            if (!vars.allowG) fail("unknown variable 'G'");
            ++pos;
            return FfBiPoly(F, {FfPoly(F, {Gf2Poly(), Gf2Poly::one()})});
        }
        if (c == 't') {
            if (!vars.allowT) fail("unknown variable 't'");
            ++pos;
            return constant(Gf2Poly::x(1));
        }
        if (c >= '0' && c <= '9') {
            std::uint64_t v = parseUint();
            return constant((v % 2) ? Gf2Poly::one() : Gf2Poly());
        }
        if (c == '\0') fail("unexpected end of input");
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'))
            fail(std::string("unknown variable '") + c + "'");
        fail(std::string("unexpected character '") + c + "'");
    }

    FfBiPoly factor() {
        FfBiPoly base = atom();
        if (eat('^')) {
            std::uint64_t e = parseUint();
            if (e > 4096) fail("exponent overflow");
            FfBiPoly r = constant(Gf2Poly::one());
            FfBiPoly b = base;
            std::uint64_t k = e;
            while (k) {
                if (k & 1) r = r * b;
                b = b * b;
                k >>= 1;
                if (!k) break;
                if (b.degX() > 20000 || b.degG() > 20000) fail("exponent overflow");
            }
            return r;
        }
        return base;
    }

    FfBiPoly term() {
        FfBiPoly r = factor();
        while (eat('*')) r = r * factor();
        return r;
    }

    FfBiPoly expr() {
        // '-' is the same as '+' over characteristic-2 coefficients
        while (eat('+') || eat('-')) {
        }
        FfBiPoly r = term();
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                r = r + term();
            } else {
                break;
            }
        }
        return r;
    }
};

}  // namespace

FfBiPoly parsePolynomial(const std::string& src, const BinField* F, const ParseVars& vars) {
    Parser p{src, F, vars};
    FfBiPoly r = p.expr();
    p.skipWs();
    if (p.pos != src.size()) p.fail("trailing input");
    return r;
}

Gf2Poly parseF2Polynomial(const std::string& src) {
    // parse over F_2 with the variable renamed to G, then read off the bits
    BinField F2{Gf2Poly(0b11)};  // t + 1
    std::string swapped = src;
    for (auto& c : swapped)
        if (c == 't') c = 'G';
    ParseVars v2;
    v2.allowG = true;
    v2.allowT = false;
    FfBiPoly p = parsePolynomial(swapped, &F2, v2);
    if (p.degX() > 0) throw ParseError("parser", "unexpected variable in field modulus");
    Gf2Poly out;
    if (p.isZero()) return out;
    const FfPoly& inG = p.coeffX(0);
    for (int i = 0; i <= inG.degree(); ++i)
        if (!inG.coeff(i).isZero()) out.setBit(i);
    return out;
}

}  // namespace hyzeta
