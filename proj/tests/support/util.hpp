#pragma once

#include "rescalc/syntax.hpp"

namespace rescalc::testing {

inline Current cur(std::string_view src, int n) { return parse_current(src, n); }
inline Monomial mono(std::string_view src, int n) { return parse_monomial(src, n); }
inline MonIdeal ideal(std::string_view src, int n) { return parse_ideal(src, n); }

} // namespace rescalc::testing
