#pragma once

// Numeric pairing of one-variable currents with test forms
//   psi = P(z, zbar) * b(|z|^2),   b(t) = exp(-1 / (1 - t)) for t < 1,
// which are smooth with support in the closed unit disc.
//
// Conventions (n = 1):
//   <[1/z^a] * c z^j zbar^k, psi dz ^ dzbar>  = PV int c z^j zbar^k psi / z^a dA
//   <dbar[1/z^a] * c z^j zbar^k, psi dz>      = PV int c z^j zbar^k d_zbar(psi) / z^a dA
// The principal value is taken over discs |z| > eps: the angular integral is
// done first with the trapezoid rule, which removes the singular modes.

#include "rescalc/current.hpp"

#include <complex>
#include <map>
#include <utility>

namespace rescalc::testing {

using cplx = std::complex<double>;

// Coefficients of z^j zbar^k.
using TestPoly = std::map<std::pair<int, int>, cplx>;

struct TestForm {
    TestPoly p;

    cplx value(cplx z) const;
    cplx dzbar(cplx z) const;
    // Closed form of d_z^k psi at 0: only the zbar-free part of P meets b(0) = 1/e.
    cplx dz_at_zero(int k) const;
};

TestPoly times(const TestPoly& p, int j, int k, cplx c = 1.0);

// PV int g(z) / z^a dA over the unit disc.
cplx pv_integral(const std::function<cplx(cplx)>& g, int a);

// Pairing of an engine current in one variable. PV-only and smooth terms pair
// with psi dz ^ dzbar, residue terms with psi dz; a current mixing both kinds
// is rejected.
cplx pair(const Current& t, const TestForm& psi);

} // namespace rescalc::testing
