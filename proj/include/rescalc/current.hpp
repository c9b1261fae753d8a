#pragma once

// Pseudomeromorphic currents in a fixed monomial chart.
//
// An elementary term is
//
//     c * sigma^alpha * conj(sigma)^beta * dsigma_D ^ A * prod_{i in PV} [1/sigma_i^a_i]
//
// where A is the wedge, ascending in the variable index, of the antiholomorphic
// one-forms dconj(sigma)_i (i in Dbar) and the residue factors dbar[1/sigma_i^a_i].
// All sign bookkeeping in this library refers to that ordering.

#include "rescalc/monomial.hpp"
#include "rescalc/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace rescalc {

enum class FactorKind : std::uint8_t { None, PV, Res };

struct Factor {
    FactorKind kind = FactorKind::None;
    std::uint32_t exp = 0;

    static Factor none() { return {}; }
    static Factor pv(std::uint32_t a) { return {FactorKind::PV, a}; }
    static Factor res(std::uint32_t a) { return {FactorKind::Res, a}; }

    auto operator<=>(const Factor&) const = default;
};

using FactorVector = std::vector<Factor>;

// One monomial piece of a polynomial-type form coefficient.
struct FormMonomial {
    Exponents alpha; // holomorphic exponents
    Exponents beta;  // antiholomorphic exponents
    VarMask dz = 0;
    VarMask dzb = 0;

    static FormMonomial unit(int n);
    int n() const { return static_cast<int>(alpha.size()); }

    auto operator<=>(const FormMonomial&) const = default;
};

class PolyCoeff {
public:
    explicit PolyCoeff(int n);
    static PolyCoeff scalar(int n, const Rational& c);

    int n() const { return n_; }
    bool is_zero() const { return pieces_.empty(); }
    const std::map<FormMonomial, Rational>& pieces() const { return pieces_; }

    void add(const FormMonomial& m, const Rational& c);

    bool operator==(const PolyCoeff&) const = default;

private:
    int n_;
    std::map<FormMonomial, Rational> pieces_;
};

struct Bidegree {
    int p = 0;
    int q = 0;
    auto operator<=>(const Bidegree&) const = default;
};

struct ElementaryTerm {
    FactorVector factors;
    PolyCoeff coeff;
};

class Current {
public:
    explicit Current(int n);
    static Current one(int n);
    static Current from_coeff(const PolyCoeff& coeff);

    int n() const { return n_; }
    const std::vector<ElementaryTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t piece_count() const;

    Current operator+(const Current& other) const;
    Current operator-(const Current& other) const;
    Current operator-() const;
    Current scaled(const Rational& c) const;

    bool operator==(const Current& other) const;

private:
    friend class TermAccumulator;

    int n_;
    std::vector<ElementaryTerm> terms_;
};

// Collects raw single-piece terms, reducing each one on entry, and produces the
// normal form. Reduction absorbs holomorphic coefficient powers into PV/Res
// factors and drops pieces that carry conj(sigma_i) or dconj(sigma_i) against
// a residue factor at i.
class TermAccumulator {
public:
    explicit TermAccumulator(int n);

    void add(FactorVector factors, FormMonomial mono, const Rational& c);
    void add(const Current& t, const Rational& scale = 1);

    Current finish() &&;

private:
    int n_;
    std::map<FactorVector, std::map<FormMonomial, Rational>> acc_;
};

// Visits every (factors, piece, scalar) triple of a normal-form current.
template <class F>
void for_each_piece(const Current& t, F&& f)
{
    for (const auto& term : t.terms())
        for (const auto& [mono, c] : term.coeff.pieces())
            f(term.factors, mono, c);
}

Current normalize(int n, std::span<const ElementaryTerm> raw);

VarMask residue_mask(const FactorVector& factors);
VarMask residue_signature(const ElementaryTerm& t);
int support_codim_lower_bound(const ElementaryTerm& t);

Bidegree bidegree(const FactorVector& factors, const FormMonomial& mono);

// Bidegrees occurring in the current, ascending.
std::vector<Bidegree> bidegrees(const Current& t);

Current bidegree_part(const Current& t, int q);

Current dbar(const Current& t);

// xi ^ T for a polynomial-type form xi.
Current wedge(const PolyCoeff& xi, const Current& t);

// Sign of the shuffle that sorts the concatenation left|right of two ascending
// index sets; 0 when they overlap.
int wedge_sign(VarMask left, VarMask right);

} // namespace rescalc
