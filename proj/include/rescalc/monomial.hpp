#pragma once

#include "rescalc/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

namespace rescalc {

inline constexpr int kMaxVars = 16;
inline constexpr std::uint32_t kMaxExponent = 1u << 15;

using Exponents = std::vector<std::uint32_t>;

// Bit i-1 stands for the coordinate sigma_i.
using VarMask = std::uint32_t;

inline int popcount(VarMask m) { return __builtin_popcount(m); }

// Throws PreconditionError unless 1 <= n <= kMaxVars.
void check_dimension(int n);

// Holomorphic monomial sigma^gamma.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int n);
    explicit Monomial(Exponents exps);

    static Monomial variable(int n, int index0, std::uint32_t power = 1);

    int n() const { return static_cast<int>(exps_.size()); }
    const Exponents& exponents() const { return exps_; }
    std::uint32_t operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }

    bool is_one() const;
    std::uint32_t degree() const;
    VarMask support() const;
    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    friend Monomial lcm(const Monomial& a, const Monomial& b);

    auto operator<=>(const Monomial&) const = default;

private:
    Exponents exps_;
};

// Holomorphic polynomial with rational coefficients; zero coefficients are never stored.
class Polynomial {
public:
    explicit Polynomial(int n) : n_(n) {}
    Polynomial(const Monomial& m, const Rational& c = 1);

    int n() const { return n_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Monomial& m, const Rational& c);
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator*(const Monomial& m) const;
    bool operator==(const Polynomial&) const = default;

private:
    int n_;
    std::map<Monomial, Rational> terms_;
};

} // namespace rescalc
