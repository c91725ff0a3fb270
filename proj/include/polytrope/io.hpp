#pragma once

#include <string>

#include "polytrope/multipoly.hpp"

namespace polytrope {

// Canonical text rendering: terms in canonical order, coefficients as "p/q"
// or integer strings, variables as "a12"/"x12"/"t". parse(render(p)) == p.
std::string render(const QPoly& p);
std::string render(const XPoly& p);

std::string render_monomial(const Monomial& m, const VarSet& vars);

QPoly parse_poly(const std::string& text, const VarSet& vars);

}  // namespace polytrope
