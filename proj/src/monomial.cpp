#include "rescalc/monomial.hpp"

#include "rescalc/errors.hpp"

#include <algorithm>
#include <numeric>

namespace rescalc {

void check_dimension(int n)
{
    if (n < 1 || n > kMaxVars)
        throw PreconditionError("dimension must lie in [1, " + std::to_string(kMaxVars) + "], got " + std::to_string(n));
}

Monomial::Monomial(int n)
    : exps_(static_cast<std::size_t>(n), 0)
{
}

Monomial::Monomial(Exponents exps)
    : exps_(std::move(exps))
{
    for (auto e : exps_)
        if (e > kMaxExponent)
            throw PreconditionError("exponent " + std::to_string(e) + " exceeds limit");
}

Monomial Monomial::variable(int n, int index0, std::uint32_t power)
{
    Monomial m(n);
    m.exps_.at(static_cast<std::size_t>(index0)) = power;
    return m;
}

bool Monomial::is_one() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

std::uint32_t Monomial::degree() const
{
    return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

VarMask Monomial::support() const
{
    VarMask m = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0)
            m |= VarMask{1} << i;
    return m;
}

bool Monomial::divides(const Monomial& other) const
{
    if (n() != other.n())
        throw DimensionMismatch("monomials over different dimensions");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    if (n() != other.n())
        throw DimensionMismatch("monomials over different dimensions");
    Exponents e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = exps_[i] + other.exps_[i];
    return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    if (a.n() != b.n())
        throw DimensionMismatch("monomials over different dimensions");
    Exponents e(a.exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(e));
}

Polynomial::Polynomial(const Monomial& m, const Rational& c)
    : n_(m.n())
{
    add(m, c);
}

void Polynomial::add(const Monomial& m, const Rational& c)
{
    if (m.n() != n_)
        throw DimensionMismatch("polynomial term over wrong dimension");
    if (c == 0)
        return;
    const Rational v = canonical(c);
    auto [it, inserted] = terms_.try_emplace(m, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& other) const
{
    if (other.n_ != n_)
        throw DimensionMismatch("polynomials over different dimensions");
    Polynomial out = *this;
    for (const auto& [m, c] : other.terms_)
        out.add(m, c);
    return out;
}

Polynomial Polynomial::operator*(const Monomial& m) const
{
    Polynomial out(n_);
    for (const auto& [t, c] : terms_)
        out.add(t * m, c);
    return out;
}

} // namespace rescalc
