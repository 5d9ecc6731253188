#pragma once

#include <string_view>
#include <vector>

#include <flatlab/field.hpp>

namespace flatlab::cli {

/// Parses a univariate polynomial such as "x^3 + a^11*x^5 + x^48", where a
/// is the class of x in the field. Terms are separated by '+':
///   [c '*'] 'x' ['^' e]   with c one of 0, 1, a, a^k
///   a | a^k               the constant a^k
///   e                     a bare integer, shorthand for x^e
/// Throws ParseError.
std::vector<UnivariateTerm> parse_terms(std::string_view spec);

}  // namespace flatlab::cli
