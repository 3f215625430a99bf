#ifndef HYZETA_PARSER_HPP
#define HYZETA_PARSER_HPP

#include "hyzeta/errors.hpp"
#include "hyzeta/ffpoly.hpp"

namespace hyzeta {

// expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := atom ('^' uint)?; atom := 'X' | 'G' | 't' | uint | '(' expr ')'
// Coefficients live in characteristic 2, so '-' acts as '+'.
struct ParseVars {
    bool allowX = false;
    bool allowG = false;
    bool allowT = true;
};

FfBiPoly parsePolynomial(const std::string& src, const BinField* F, const ParseVars& vars);

// polynomial over F_2 in t (for field moduli)
Gf2Poly parseF2Polynomial(const std::string& src);

}  // namespace hyzeta

#endif
