#pragma once

#include <gmpxx.h>

#include <string>

namespace rescalc {

// Exact arbitrary-precision fraction, always kept in lowest terms.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational canonical(Rational r)
{
    r.canonicalize();
    return r;
}

// "p" or "p/q" with q > 0.
inline std::string to_string(const Rational& r)
{
    return r.get_str(10);
}

} // namespace rescalc
