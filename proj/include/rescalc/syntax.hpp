#pragma once

// Text syntax for currents, constructible sets, monomials, ideals and modules.
//
//   current  := ['+'|'-'] term (('+'|'-') term)*
//   term     := rational | [rational ['*']] factor (['*'] factor)*
//   factor   := 'pv[1/' mono ']' | 'res[1/' mono ']' | var ['^' int]
//             | 'conj(' mono ')' | 'dz' int | 'dzb' int
//   set      := inter (('|' | '\') inter)*
//   inter    := unary ('&' unary)*
//   unary    := '~' unary | 'empty' | 'full' | 'V(' vars ')' | 'H(' var ')'
//             | 'W{' [int (',' int)*] '}' | '(' set ')'
//
// Variables are z1..zn; for n <= 4 the aliases z, w, u, v name z1..z4 and are
// also what the printers emit. The factors of a term act from the left, so
// res[1/z]*pv[1/z] is dbar[1/z] ^ [1/z] = dbar[1/z^2] while pv[1/z]*res[1/z] = 0.

#include "rescalc/constructible.hpp"
#include "rescalc/current.hpp"
#include "rescalc/monomial.hpp"
#include "rescalc/monomial_algebra.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace rescalc {

std::string var_name(int n, int index0);

Current parse_current(std::string_view src, int n);
SetExpr parse_set_expr(std::string_view src, int n);
OmegaSet parse_set(std::string_view src, int n);
Monomial parse_monomial(std::string_view src, int n);
// Ordered, not minimized; "0" is the empty list.
std::vector<Monomial> parse_monomial_list(std::string_view src, int n);
MonIdeal parse_ideal(std::string_view src, int n);
// Entries "e<i>: mono", comma separated; "e<i>: 0" declares a zero slot.
// The rank is the largest index mentioned, at least min_rank.
MonModule parse_module(std::string_view src, int n, int min_rank = 1);
Polynomial parse_polynomial(std::string_view src, int n);

std::string to_string(const Monomial& m);
std::string to_string(const Polynomial& p);
std::string to_string(const Current& t);
std::string to_string(const OmegaSet& w);
std::string to_string(const MonIdeal& i);
std::string to_string(const MonModule& m);
std::string to_string(MonPrime p, int n);

} // namespace rescalc
