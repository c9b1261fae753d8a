#pragma once

// Monomial ideals of C[sigma_1..sigma_n] (equally of the local ring at 0) and
// componentwise-monomial submodules of free modules of finite rank.

#include "rescalc/monomial.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace rescalc {

// Prime generated by the variables in `vars`; vars == 0 is the zero ideal.
struct MonPrime {
    VarMask vars = 0;

    int codim() const { return popcount(vars); }
    auto operator<=>(const MonPrime& o) const
    {
        if (auto c = codim() <=> o.codim(); c != 0)
            return c;
        return vars <=> o.vars;
    }
    bool operator==(const MonPrime&) const = default;
};

class MonIdeal {
public:
    // Zero ideal.
    explicit MonIdeal(int n);
    MonIdeal(int n, std::vector<Monomial> gens);

    static MonIdeal unit(int n);
    static MonIdeal prime(int n, MonPrime p);

    int n() const { return n_; }
    // Minimal generators, sorted.
    const std::vector<Monomial>& gens() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool is_proper() const { return !is_unit(); }

    bool contains(const Monomial& m) const;
    bool contains(const Polynomial& phi) const;
    bool contains(const MonIdeal& other) const;

    // Union of the generator supports.
    VarMask support() const;

    bool operator==(const MonIdeal&) const = default;

private:
    int n_;
    std::vector<Monomial> gens_;
};

MonIdeal operator+(const MonIdeal& a, const MonIdeal& b);
MonIdeal intersect(const MonIdeal& a, const MonIdeal& b);
MonIdeal intersect_all(int n, const std::vector<MonIdeal>& ideals);

// The prime if the (proper) ideal is primary, otherwise nothing.
std::optional<MonPrime> is_primary(const MonIdeal& ideal);

// Irredundant decomposition into ideals generated by pure powers.
std::vector<MonIdeal> irreducible_decomposition(const MonIdeal& ideal);

struct PrimaryComponent {
    MonPrime prime;
    MonIdeal ideal;
};

// Minimal primary decomposition obtained by splitting mixed generators
// (I = (I + (u)) ∩ (I + (v)) for m = u*v with disjoint supports) and grouping
// the irreducible pieces by radical. Components are sorted by prime.
std::vector<PrimaryComponent> primary_decomposition_oracle(const MonIdeal& ideal);

// Requires a proper, nonzero ideal.
std::vector<MonPrime> ass_primes(const MonIdeal& ideal);

// Componentwise monomial submodule  (+)_k I_k e_k  of a free module of rank r.
class MonModule {
public:
    MonModule(int n, std::vector<MonIdeal> slots);
    static MonModule full(int n, int rank);
    static MonModule from_ideal(const MonIdeal& ideal);

    int n() const { return n_; }
    int rank() const { return static_cast<int>(slots_.size()); }
    const std::vector<MonIdeal>& slots() const { return slots_; }
    const MonIdeal& slot(int k) const { return slots_.at(static_cast<std::size_t>(k)); }

    bool is_proper() const;
    bool contains(const std::vector<Polynomial>& phi) const;
    bool contains(const MonModule& other) const;

    bool operator==(const MonModule&) const = default;

private:
    int n_;
    std::vector<MonIdeal> slots_;
};

MonModule intersect(const MonModule& a, const MonModule& b);
MonModule intersect_all(int n, int rank, const std::vector<MonModule>& modules);

std::optional<MonPrime> is_primary(const MonModule& module);
std::vector<MonPrime> ass_primes(const MonModule& module);

struct ModuleComponent {
    MonPrime prime;
    MonModule module;
};

std::vector<ModuleComponent> primary_decomposition_oracle(const MonModule& module);

} // namespace rescalc
