#include "rescalc/current.hpp"

#include "rescalc/errors.hpp"

#include <algorithm>

namespace rescalc {

namespace {

void check_same_n(int a, int b)
{
    if (a != b)
        throw DimensionMismatch("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

// Applies the absorption and antiholomorphic-kill rules to one raw piece.
// Returns false if the piece is the zero current.
bool reduce(FactorVector& factors, FormMonomial& mono)
{
    for (std::size_t i = 0; i < factors.size(); ++i) {
        auto& f = factors[i];
        auto& a = mono.alpha[i];
        if (f.kind != FactorKind::None && a > 0) {
            if (a >= f.exp) {
                if (f.kind == FactorKind::Res)
                    return false;
                a -= f.exp;
                f = Factor::none();
            } else {
                f.exp -= a;
                a = 0;
            }
        }
        if (f.kind == FactorKind::Res) {
            VarMask bit = VarMask{1} << i;
            if (mono.beta[i] > 0 || (mono.dzb & bit))
                return false;
        }
    }
    return true;
}

void validate(int n, const FactorVector& factors, const FormMonomial& mono)
{
    check_same_n(n, static_cast<int>(factors.size()));
    check_same_n(n, static_cast<int>(mono.alpha.size()));
    check_same_n(n, static_cast<int>(mono.beta.size()));
    VarMask all = n >= 32 ? ~VarMask{0} : (VarMask{1} << n) - 1;
    if ((mono.dz | mono.dzb) & ~all)
        throw DimensionMismatch("form index outside the chart");
    for (const auto& f : factors) {
        if (f.kind == FactorKind::None && f.exp != 0)
            throw PreconditionError("factor without kind carries an exponent");
        if (f.kind != FactorKind::None && f.exp == 0)
            throw PreconditionError("PV/Res factor needs a positive exponent");
        if (f.exp > kMaxExponent)
            throw PreconditionError("factor exponent exceeds limit");
    }
    for (std::size_t i = 0; i < mono.alpha.size(); ++i)
        if (mono.alpha[i] > kMaxExponent || mono.beta[i] > kMaxExponent)
            throw PreconditionError("coefficient exponent exceeds limit");
}

int parity_sign(int k) { return (k & 1) ? -1 : 1; }

} // namespace

FormMonomial FormMonomial::unit(int n)
{
    FormMonomial m;
    m.alpha.assign(static_cast<std::size_t>(n), 0);
    m.beta.assign(static_cast<std::size_t>(n), 0);
    return m;
}

PolyCoeff::PolyCoeff(int n)
    : n_(n)
{
    check_dimension(n);
}

PolyCoeff PolyCoeff::scalar(int n, const Rational& c)
{
    PolyCoeff p(n);
    p.add(FormMonomial::unit(n), c);
    return p;
}

void PolyCoeff::add(const FormMonomial& m, const Rational& c)
{
    check_same_n(n_, m.n());
    check_same_n(n_, static_cast<int>(m.beta.size()));
    if (c == 0)
        return;
    const Rational v = canonical(c);
    auto [it, inserted] = pieces_.try_emplace(m, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0)
            pieces_.erase(it);
    }
}

Current::Current(int n)
    : n_(n)
{
    check_dimension(n);
}

Current Current::one(int n)
{
    return from_coeff(PolyCoeff::scalar(n, 1));
}

Current Current::from_coeff(const PolyCoeff& coeff)
{
    TermAccumulator acc(coeff.n());
    FactorVector none(static_cast<std::size_t>(coeff.n()));
    for (const auto& [m, c] : coeff.pieces())
        acc.add(none, m, c);
    return std::move(acc).finish();
}

std::size_t Current::piece_count() const
{
    std::size_t k = 0;
    for (const auto& t : terms_)
        k += t.coeff.pieces().size();
    return k;
}

Current Current::operator+(const Current& other) const
{
    check_same_n(n_, other.n_);
    TermAccumulator acc(n_);
    acc.add(*this);
    acc.add(other);
    return std::move(acc).finish();
}

Current Current::operator-(const Current& other) const
{
    check_same_n(n_, other.n_);
    TermAccumulator acc(n_);
    acc.add(*this);
    acc.add(other, -1);
    return std::move(acc).finish();
}

Current Current::operator-() const
{
    return scaled(-1);
}

Current Current::scaled(const Rational& c) const
{
    TermAccumulator acc(n_);
    acc.add(*this, c);
    return std::move(acc).finish();
}

bool Current::operator==(const Current& other) const
{
    if (n_ != other.n_ || terms_.size() != other.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].factors != other.terms_[i].factors || !(terms_[i].coeff == other.terms_[i].coeff))
            return false;
    return true;
}

TermAccumulator::TermAccumulator(int n)
    : n_(n)
{
    check_dimension(n);
}

void TermAccumulator::add(FactorVector factors, FormMonomial mono, const Rational& c)
{
    validate(n_, factors, mono);
    if (c == 0 || !reduce(factors, mono))
        return;
    auto& pieces = acc_[std::move(factors)];
    const Rational v = canonical(c);
    auto [it, inserted] = pieces.try_emplace(std::move(mono), v);
    if (!inserted)
        it->second += v;
}

void TermAccumulator::add(const Current& t, const Rational& scale)
{
    check_same_n(n_, t.n());
    if (scale == 0)
        return;
    const Rational s = canonical(scale);
    for_each_piece(t, [&](const FactorVector& f, const FormMonomial& m, const Rational& c) {
        auto& pieces = acc_[f];
        Rational v = c * s;
        auto [it, inserted] = pieces.try_emplace(m, v);
        if (!inserted)
            it->second += v;
    });
}

Current TermAccumulator::finish() &&
{
    Current out(n_);
    for (auto& [factors, pieces] : acc_) {
        PolyCoeff coeff(n_);
        for (auto& [m, c] : pieces)
            if (c != 0)
                coeff.add(m, c);
        if (!coeff.is_zero())
            out.terms_.push_back(ElementaryTerm{factors, std::move(coeff)});
    }
    acc_.clear();
    return out;
}

Current normalize(int n, std::span<const ElementaryTerm> raw)
{
    TermAccumulator acc(n);
    for (const auto& term : raw) {
        check_same_n(n, term.coeff.n());
        for (const auto& [m, c] : term.coeff.pieces())
            acc.add(term.factors, m, c);
    }
    return std::move(acc).finish();
}

VarMask residue_mask(const FactorVector& factors)
{
    VarMask m = 0;
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (factors[i].kind == FactorKind::Res)
            m |= VarMask{1} << i;
    return m;
}

VarMask residue_signature(const ElementaryTerm& t)
{
    return residue_mask(t.factors);
}

int support_codim_lower_bound(const ElementaryTerm& t)
{
    return popcount(residue_signature(t));
}

Bidegree bidegree(const FactorVector& factors, const FormMonomial& mono)
{
    return {popcount(mono.dz), popcount(mono.dzb) + popcount(residue_mask(factors))};
}

std::vector<Bidegree> bidegrees(const Current& t)
{
    std::vector<Bidegree> out;
    for_each_piece(t, [&](const FactorVector& f, const FormMonomial& m, const Rational&) {
        out.push_back(bidegree(f, m));
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Current bidegree_part(const Current& t, int q)
{
    TermAccumulator acc(t.n());
    for_each_piece(t, [&](const FactorVector& f, const FormMonomial& m, const Rational& c) {
        if (bidegree(f, m).q == q)
            acc.add(f, m, c);
    });
    return std::move(acc).finish();
}

int wedge_sign(VarMask left, VarMask right)
{
    if (left & right)
        return 0;
    int inversions = 0;
    for (VarMask l = left; l; l &= l - 1) {
        VarMask bit = l & -l;
        inversions += popcount(right & (bit - 1));
    }
    return parity_sign(inversions);
}

// dbar(f dsigma_D ^ A) = (-1)^|D| dsigma_D ^ dbar(f) ^ A, where f collects the scalar,
// the sigma/conj(sigma) monomial and the PV factors; dsigma_D and A are dbar-closed.
Current dbar(const Current& t)
{
    const int n = t.n();
    TermAccumulator acc(n);
    for_each_piece(t, [&](const FactorVector& f, const FormMonomial& m, const Rational& c) {
        const VarMask anti = m.dzb | residue_mask(f);
        const int base = parity_sign(popcount(m.dz));
        for (int j = 0; j < n; ++j) {
            const VarMask bit = VarMask{1} << j;
            if (anti & bit)
                continue;
            const int sign = base * parity_sign(popcount(anti & (bit - 1)));
            const auto uj = static_cast<std::size_t>(j);
            if (m.beta[uj] > 0) {
                FormMonomial m2 = m;
                m2.beta[uj] -= 1;
                m2.dzb |= bit;
                acc.add(f, std::move(m2), c * m.beta[uj] * sign);
            }
            if (f[uj].kind == FactorKind::PV) {
                FactorVector f2 = f;
                f2[uj].kind = FactorKind::Res;
                acc.add(std::move(f2), m, c * sign);
            }
        }
    });
    return std::move(acc).finish();
}

Current wedge(const PolyCoeff& xi, const Current& t)
{
    check_same_n(xi.n(), t.n());
    const int n = t.n();
    TermAccumulator acc(n);
    for_each_piece(t, [&](const FactorVector& f, const FormMonomial& m, const Rational& c) {
        const VarMask anti = m.dzb | residue_mask(f);
        for (const auto& [x, cx] : xi.pieces()) {
            const int s_dz = wedge_sign(x.dz, m.dz);
            const int s_dzb = wedge_sign(x.dzb, anti);
            if (s_dz == 0 || s_dzb == 0)
                continue;
            // move the holomorphic part of T left past the antiholomorphic part of xi
            const int s_cross = parity_sign(popcount(x.dzb) * popcount(m.dz));
            FormMonomial out = m;
            for (int i = 0; i < n; ++i) {
                const auto ui = static_cast<std::size_t>(i);
                out.alpha[ui] += x.alpha[ui];
                out.beta[ui] += x.beta[ui];
            }
            out.dz |= x.dz;
            out.dzb |= x.dzb;
            acc.add(f, std::move(out), c * cx * (s_dz * s_dzb * s_cross));
        }
    });
    return std::move(acc).finish();
}

} // namespace rescalc
