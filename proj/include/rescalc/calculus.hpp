#pragma once

// Products of currents with holomorphic monomials and with the meromorphic
// currents [1/g], dbar[1/g] for monomial g. Both meromorphic products act from
// the left and are never commuted past one another.

#include "rescalc/current.hpp"
#include "rescalc/monomial.hpp"

#include <span>

namespace rescalc {

// m * T
Current mul_monomial(const Monomial& m, const Current& t);

// phi * T, distributing mul_monomial over the terms of phi.
Current mul_polynomial(const Polynomial& phi, const Current& t);

// [1/g] T
Current pv_mul(const Monomial& g, const Current& t);

// dbar[1/g] ^ T, fixed by the Leibniz rule:
//   dbar([1/g] T) = dbar[1/g] ^ T + [1/g] dbar T.
Current res_mul(const Monomial& g, const Current& t);

// dbar[1/f_1] ^ ... ^ dbar[1/f_q] ^ [1/f_{q+1}] ... [1/f_nu] alpha,
// built from the right. Requires 0 <= q <= f.size().
Current arm_product(std::span<const Monomial> f, int q, const PolyCoeff& alpha);

// dbar[1/f_1] ^ ... ^ dbar[1/f_q]; the empty product is 1.
Current coleff_herrera(int n, std::span<const Monomial> f);

// Codimension of the common zero set of the monomials, found by scanning the
// coordinate cells; returns n + 1 when the zero set is empty.
int common_zero_codim(int n, std::span<const Monomial> f);

bool is_monomial_complete_intersection(int n, std::span<const Monomial> f);

} // namespace rescalc
