#pragma once

#include <string>
#include <string_view>

#include "lscat/algebra.hpp"

namespace lscat {

// Grammar (whitespace between tokens is ignored, '#' starts a comment
// running to end of line):
//
//   polynomial := ["+"|"-"] term (("+"|"-") term)*
//   term       := coeff ["*"] factor ("*" factor)* | factor ("*" factor)* | coeff
//   factor     := name ["^" uint]
//   coeff      := uint ["/" uint]
//
// Odd generators listed out of canonical order are sorted with the Koszul
// sign. Throws ParseError with a 1-based column on syntax errors, unknown
// names and squared odd generators.
Element parse_element(std::string_view text, const AlgebraPtr& algebra);

// Canonical form: terms in MonomialOrder, factors in generator order,
// e.g. "-x2^2*x6^3*y15 + x2*x6^5*y5". Zero prints as "0".
std::string format_element(const Element& e);

std::string format_monomial(const Algebra& algebra, const Monomial& m);

}  // namespace lscat
