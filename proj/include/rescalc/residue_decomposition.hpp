#pragma once

// Annihilators of (vector-valued) currents and the decomposition
// R = sum_p R^p over the associated primes of J = ann R, together with the
// checks that the annihilators of the pieces form a minimal primary
// decomposition of J.

#include "rescalc/constructible.hpp"
#include "rescalc/current.hpp"
#include "rescalc/errors.hpp"
#include "rescalc/monomial_algebra.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rescalc {

// Current with values in Hom(O^r, .): acts on a column (phi_1..phi_r) by
// sum_k phi_k * components[k].
class CurrentVector {
public:
    explicit CurrentVector(std::vector<Current> components);
    CurrentVector(const Current& single) : CurrentVector(std::vector<Current>{single}) {}

    int n() const { return components_.front().n(); }
    int rank() const { return static_cast<int>(components_.size()); }
    const std::vector<Current>& components() const { return components_; }
    const Current& operator[](int k) const { return components_.at(static_cast<std::size_t>(k)); }
    bool is_zero() const;

    CurrentVector operator+(const CurrentVector& o) const;
    CurrentVector operator-(const CurrentVector& o) const;
    bool operator==(const CurrentVector& o) const { return components_ == o.components_; }

private:
    std::vector<Current> components_;
};

CurrentVector restrict(const OmegaSet& w, const CurrentVector& t);
CurrentVector bidegree_part(const CurrentVector& t, int q);

// sum_k phi_k * T_k
Current apply(std::span<const Polynomial> phi, const CurrentVector& t);

bool kills(std::span<const Polynomial> phi, const CurrentVector& t);

// The annihilator contains a polynomial vector outside the monomial module
// spanned by the monomial killers.
class NonMonomialAnnihilator : public Error {
public:
    NonMonomialAnnihilator(std::vector<Polynomial> witness, std::string tag = {});

    const std::vector<Polynomial>& witness() const { return witness_; }
    const std::string& tag() const { return tag_; }

private:
    std::vector<Polynomial> witness_;
    std::string tag_;
};

// ann R differs from the module supplied as J.
class DualityMismatch : public Error {
public:
    DualityMismatch(MonModule expected, MonModule actual);

    const MonModule& expected() const { return expected_; }
    const MonModule& actual() const { return actual_; }

private:
    MonModule expected_;
    MonModule actual_;
};

struct AnnihilatorOptions {
    std::uint64_t seed = 0x5eed;
    int random_trials = 200;
};

// Per-variable exponent bound of the monomial search box.
std::vector<std::uint32_t> annihilator_search_bounds(const CurrentVector& t);

// Monomial annihilator of T, certified against non-monomial killers inside the
// search box (seeded random sparse trials, then an exact kernel computation
// over the rationals). Throws NonMonomialAnnihilator with a witness.
MonModule annihilator(const CurrentVector& t, const AnnihilatorOptions& opts = {});

// R 1_{V(p) \ union_{q in ass, q strictly contains p} V(q)}
CurrentVector r_p(const CurrentVector& r, MonPrime p, std::span<const MonPrime> ass);

// Coordinate varieties V(S') with S' strictly containing S_p on which T does
// not vanish; T has the SEP with respect to V(p) iff this is empty.
std::vector<VarMask> sep_violations(const CurrentVector& t, MonPrime p);
bool sep_check(const CurrentVector& t, MonPrime p);

struct LemmaBellResult {
    MonModule full;   // ann R^p
    MonModule lowest; // ann of the bidegree (0, codim p) part
    bool holds() const { return full == lowest; }
};

LemmaBellResult lemma_bell(const CurrentVector& rp, MonPrime p, const AnnihilatorOptions& opts = {});
bool lemma_bell_check(const CurrentVector& rp, MonPrime p, const AnnihilatorOptions& opts = {});

struct ComponentReport {
    MonPrime prime;
    CurrentVector rp;
    MonModule ann;                      // Q_p = ann R^p
    std::optional<MonPrime> primary_of; // prime of Q_p if primary
    bool primary_ok = false;
    MonModule others;                   // intersection of the other Q's
    bool minimal_ok = false;
    std::vector<VarMask> sep_failures;
    bool sep_ok = false;
    MonModule bell_lowest;              // ann of the lowest-bidegree part
    bool bell_ok = false;

    bool operator==(const ComponentReport&) const = default;
};

struct DecompositionReport {
    CurrentVector r;
    MonModule j;
    std::vector<MonPrime> ass;
    std::vector<ComponentReport> components; // sorted by prime
    CurrentVector sum_residual;              // sum_p R^p - R
    bool sum_ok = false;
    MonModule intersection;                  // intersection of all Q_p
    bool intersection_ok = false;

    bool primary_ok() const;
    bool minimality_ok() const;
    bool sep_ok() const;
    bool lemma_bell_ok() const;
    bool all_ok() const;

    bool operator==(const DecompositionReport&) const = default;
};

struct DecomposeOptions {
    AnnihilatorOptions annihilator;
    // Order in which the associated primes are processed; empty means ascending.
    std::vector<MonPrime> ass_order;
};

// Requires (0) not in Ass J and ann R == J (else DualityMismatch).
DecompositionReport decompose(const CurrentVector& r, const MonModule& j, const DecomposeOptions& opts = {});

// ann of the Coleff-Herrera product of a monomial complete intersection equals (f).
bool duality_check(int n, std::span<const Monomial> f, const AnnihilatorOptions& opts = {});

} // namespace rescalc
