#include "rescalc/residue_decomposition.hpp"

#include "rescalc/calculus.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace rescalc {

namespace {

void check_rank(int a, int b)
{
    if (a != b)
        throw DimensionMismatch("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

std::string describe(MonPrime p)
{
    std::string s = "(";
    bool first = true;
    for (int i = 0; i < kMaxVars; ++i)
        if (p.vars & (VarMask{1} << i)) {
            s += (first ? "z" : ", z") + std::to_string(i + 1);
            first = false;
        }
    return s + ")";
}

// Monomials sigma^e with 0 <= e_i <= bound_i, in ascending total degree.
std::vector<Monomial> box(const std::vector<std::uint32_t>& bound)
{
    std::vector<Monomial> out;
    Exponents e(bound.size(), 0);
    while (true) {
        out.emplace_back(e);
        std::size_t i = 0;
        while (i < e.size() && e[i] == bound[i])
            e[i++] = 0;
        if (i == e.size())
            break;
        ++e[i];
    }
    std::stable_sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    return out;
}

using PieceKey = std::pair<FactorVector, FormMonomial>;
using SparseVec = std::map<int, Rational>;

class RowIndex {
public:
    int operator()(const FactorVector& f, const FormMonomial& m)
    {
        auto [it, inserted] = rows_.try_emplace(PieceKey{f, m}, static_cast<int>(rows_.size()));
        return it->second;
    }

private:
    std::map<PieceKey, int> rows_;
};

SparseVec to_sparse(const Current& t, RowIndex& rows)
{
    SparseVec v;
    for_each_piece(t, [&](const FactorVector& f, const FormMonomial& m, const Rational& c) { v[rows(f, m)] += c; });
    return v;
}

void axpy(SparseVec& y, const Rational& a, const SparseVec& x)
{
    for (const auto& [k, c] : x) {
        auto& slot = y[k];
        slot += a * c;
        if (slot == 0)
            y.erase(k);
    }
}

struct Column {
    int slot;
    Monomial mono;
    SparseVec image;
};

std::vector<Polynomial> witness_from(const std::vector<Column>& cols, const SparseVec& comb, int n, int rank)
{
    std::vector<Polynomial> w(static_cast<std::size_t>(rank), Polynomial(n));
    for (const auto& [j, c] : comb) {
        const auto& col = cols[static_cast<std::size_t>(j)];
        w[static_cast<std::size_t>(col.slot)].add(col.mono, c);
    }
    // Scale so the leading coefficient of the first nonzero slot is 1.
    for (const auto& p : w) {
        if (p.is_zero())
            continue;
        const Rational lead = p.terms().rbegin()->second;
        std::vector<Polynomial> scaled;
        for (const auto& q : w) {
            Polynomial r(n);
            for (const auto& [m, c] : q.terms())
                r.add(m, c / lead);
            scaled.push_back(std::move(r));
        }
        return scaled;
    }
    return w;
}

// Finds a nonzero rational combination of the columns with zero image.
std::optional<SparseVec> exact_kernel_vector(const std::vector<Column>& cols)
{
    struct Pivot {
        SparseVec vec;
        SparseVec comb;
    };
    std::map<int, Pivot> pivots; // keyed by leading row
    for (std::size_t j = 0; j < cols.size(); ++j) {
        SparseVec v = cols[j].image;
        SparseVec comb{{static_cast<int>(j), Rational(1)}};
        while (!v.empty()) {
            const int lead = v.begin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end())
                break;
            const Rational factor = -v.begin()->second / it->second.vec.begin()->second;
            axpy(v, factor, it->second.vec);
            axpy(comb, factor, it->second.comb);
        }
        if (v.empty())
            return comb;
        const int lead = v.begin()->first;
        pivots.emplace(lead, Pivot{std::move(v), std::move(comb)});
    }
    return std::nullopt;
}

} // namespace

CurrentVector::CurrentVector(std::vector<Current> components)
    : components_(std::move(components))
{
    if (components_.empty())
        throw PreconditionError("a current vector needs at least one component");
    for (const auto& c : components_)
        if (c.n() != components_.front().n())
            throw DimensionMismatch("current vector components over different dimensions");
}

bool CurrentVector::is_zero() const
{
    return std::all_of(components_.begin(), components_.end(), [](const Current& c) { return c.is_zero(); });
}

CurrentVector CurrentVector::operator+(const CurrentVector& o) const
{
    check_rank(rank(), o.rank());
    std::vector<Current> out;
    for (int k = 0; k < rank(); ++k)
        out.push_back((*this)[k] + o[k]);
    return CurrentVector(std::move(out));
}

CurrentVector CurrentVector::operator-(const CurrentVector& o) const
{
    check_rank(rank(), o.rank());
    std::vector<Current> out;
    for (int k = 0; k < rank(); ++k)
        out.push_back((*this)[k] - o[k]);
    return CurrentVector(std::move(out));
}

CurrentVector restrict(const OmegaSet& w, const CurrentVector& t)
{
    std::vector<Current> out;
    for (const auto& c : t.components())
        out.push_back(restrict(w, c));
    return CurrentVector(std::move(out));
}

CurrentVector bidegree_part(const CurrentVector& t, int q)
{
    std::vector<Current> out;
    for (const auto& c : t.components())
        out.push_back(bidegree_part(c, q));
    return CurrentVector(std::move(out));
}

Current apply(std::span<const Polynomial> phi, const CurrentVector& t)
{
    check_rank(static_cast<int>(phi.size()), t.rank());
    TermAccumulator acc(t.n());
    for (int k = 0; k < t.rank(); ++k)
        acc.add(mul_polynomial(phi[static_cast<std::size_t>(k)], t[k]));
    return std::move(acc).finish();
}

bool kills(std::span<const Polynomial> phi, const CurrentVector& t)
{
    return apply(phi, t).is_zero();
}

NonMonomialAnnihilator::NonMonomialAnnihilator(std::vector<Polynomial> witness, std::string tag)
    : Error("annihilator is not monomially generated" + (tag.empty() ? std::string{} : " (" + tag + ")"))
    , witness_(std::move(witness))
    , tag_(std::move(tag))
{
}

DualityMismatch::DualityMismatch(MonModule expected, MonModule actual)
    : Error("ann R differs from the given module")
    , expected_(std::move(expected))
    , actual_(std::move(actual))
{
}

std::vector<std::uint32_t> annihilator_search_bounds(const CurrentVector& t)
{
    const auto n = static_cast<std::size_t>(t.n());
    std::vector<std::uint32_t> max_res(n, 0), max_alpha(n, 0);
    for (const auto& c : t.components())
        for_each_piece(c, [&](const FactorVector& f, const FormMonomial& m, const Rational&) {
            for (std::size_t i = 0; i < n; ++i) {
                if (f[i].kind == FactorKind::Res)
                    max_res[i] = std::max(max_res[i], f[i].exp);
                max_alpha[i] = std::max(max_alpha[i], m.alpha[i]);
            }
        });
    std::vector<std::uint32_t> bound(n);
    for (std::size_t i = 0; i < n; ++i)
        bound[i] = max_res[i] + max_alpha[i] + 1;
    return bound;
}

MonModule annihilator(const CurrentVector& t, const AnnihilatorOptions& opts)
{
    const int n = t.n();
    if (t.is_zero())
        return MonModule::full(n, t.rank());

    const auto candidates = box(annihilator_search_bounds(t));
    std::vector<MonIdeal> slots;
    std::vector<Column> columns;
    RowIndex rows;
    for (int k = 0; k < t.rank(); ++k) {
        if (t[k].is_zero()) {
            slots.push_back(MonIdeal::unit(n));
            continue;
        }
        std::vector<Monomial> killers;
        std::vector<Column> survivors;
        for (const auto& m : candidates) {
            if (std::any_of(killers.begin(), killers.end(), [&](const Monomial& g) { return g.divides(m); }))
                continue;
            Current image = mul_monomial(m, t[k]);
            if (image.is_zero())
                killers.push_back(m);
            else
                survivors.push_back({k, m, to_sparse(image, rows)});
        }
        slots.emplace_back(n, std::move(killers));
        columns.insert(columns.end(), std::make_move_iterator(survivors.begin()), std::make_move_iterator(survivors.end()));
    }

    // Sparse random combinations first: cheap, and they catch binomial killers.
    if (columns.size() >= 2) {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<std::size_t> pick(0, columns.size() - 1);
        std::uniform_int_distribution<int> width(2, 3);
        std::uniform_int_distribution<int> coef(1, 3);
        std::bernoulli_distribution negate(0.5);
        for (int trial = 0; trial < opts.random_trials; ++trial) {
            SparseVec image, comb;
            const int w = width(rng);
            for (int s = 0; s < w; ++s) {
                const auto j = pick(rng);
                Rational c = coef(rng) * (negate(rng) ? -1 : 1);
                axpy(image, c, columns[j].image);
                axpy(comb, c, SparseVec{{static_cast<int>(j), Rational(1)}});
            }
            if (image.empty() && !comb.empty())
                throw NonMonomialAnnihilator(witness_from(columns, comb, n, t.rank()));
        }
    }
    if (auto comb = exact_kernel_vector(columns))
        throw NonMonomialAnnihilator(witness_from(columns, *comb, n, t.rank()));

    return MonModule(n, std::move(slots));
}

CurrentVector r_p(const CurrentVector& r, MonPrime p, std::span<const MonPrime> ass)
{
    if (p.vars == 0)
        throw PreconditionError("r_p: the zero prime is not supported");
    if (std::find(ass.begin(), ass.end(), p) == ass.end())
        throw PreconditionError("r_p: " + describe(p) + " is not among the associated primes");
    OmegaSet w = coord_variety(r.n(), p.vars);
    for (const auto& q : ass)
        if (q.vars != p.vars && (q.vars & p.vars) == p.vars)
            w = w - coord_variety(r.n(), q.vars);
    return restrict(w, r);
}

std::vector<VarMask> sep_violations(const CurrentVector& t, MonPrime p)
{
    std::vector<VarMask> out;
    const VarMask all = (VarMask{1} << t.n()) - 1;
    for (VarMask s = 0; s <= all; ++s) {
        if ((s & p.vars) != p.vars || s == p.vars)
            continue;
        if (!restrict(coord_variety(t.n(), s), t).is_zero())
            out.push_back(s);
    }
    return out;
}

bool sep_check(const CurrentVector& t, MonPrime p)
{
    return sep_violations(t, p).empty();
}

LemmaBellResult lemma_bell(const CurrentVector& rp, MonPrime p, const AnnihilatorOptions& opts)
{
    if (rp.is_zero())
        throw PreconditionError("lemma_bell_check needs a nonzero current");
    return {annihilator(rp, opts), annihilator(bidegree_part(rp, p.codim()), opts)};
}

bool lemma_bell_check(const CurrentVector& rp, MonPrime p, const AnnihilatorOptions& opts)
{
    return lemma_bell(rp, p, opts).holds();
}

bool DecompositionReport::primary_ok() const
{
    return std::all_of(components.begin(), components.end(), [](const auto& c) { return c.primary_ok; });
}

bool DecompositionReport::minimality_ok() const
{
    return std::all_of(components.begin(), components.end(), [](const auto& c) { return c.minimal_ok; });
}

bool DecompositionReport::sep_ok() const
{
    return std::all_of(components.begin(), components.end(), [](const auto& c) { return c.sep_ok; });
}

bool DecompositionReport::lemma_bell_ok() const
{
    return std::all_of(components.begin(), components.end(), [](const auto& c) { return c.bell_ok; });
}

bool DecompositionReport::all_ok() const
{
    return sum_ok && intersection_ok && primary_ok() && minimality_ok() && sep_ok() && lemma_bell_ok();
}

DecompositionReport decompose(const CurrentVector& r, const MonModule& j, const DecomposeOptions& opts)
{
    if (r.n() != j.n())
        throw DimensionMismatch("current and module over different dimensions");
    check_rank(r.rank(), j.rank());
    if (!j.is_proper())
        throw PreconditionError("decompose: J must be a proper submodule");
    const auto ass = ass_primes(j);
    if (std::find(ass.begin(), ass.end(), MonPrime{0}) != ass.end())
        throw PreconditionError("decompose: (0) is associated to J; only positive codimension is supported");

    MonModule ann = annihilator(r, opts.annihilator);
    if (!(ann == j))
        throw DualityMismatch(j, ann);

    std::vector<MonPrime> order = opts.ass_order.empty() ? ass : opts.ass_order;
    {
        auto sorted = order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != ass)
            throw PreconditionError("decompose: ass_order is not a permutation of Ass J");
    }

    DecompositionReport rep{r, j, ass, {}, r, false, j, false};
    for (MonPrime p : order) {
        ComponentReport c{p, r_p(r, p, ass), j, std::nullopt, false, j, false, {}, false, j, false};
        try {
            c.ann = annihilator(c.rp, opts.annihilator);
            if (!c.rp.is_zero())
                c.bell_lowest = annihilator(bidegree_part(c.rp, p.codim()), opts.annihilator);
        } catch (const NonMonomialAnnihilator& e) {
            throw NonMonomialAnnihilator(e.witness(), "component " + describe(p));
        }
        c.primary_of = c.ann.is_proper() ? is_primary(c.ann) : std::nullopt;
        c.primary_ok = c.primary_of == p;
        c.sep_failures = sep_violations(c.rp, p);
        c.sep_ok = c.sep_failures.empty();
        c.bell_ok = !c.rp.is_zero() && c.bell_lowest == c.ann;
        rep.components.push_back(std::move(c));
    }
    std::sort(rep.components.begin(), rep.components.end(),
              [](const ComponentReport& a, const ComponentReport& b) { return a.prime < b.prime; });

    CurrentVector sum = rep.components.front().rp;
    for (std::size_t k = 1; k < rep.components.size(); ++k)
        sum = sum + rep.components[k].rp;
    rep.sum_residual = sum - r;
    rep.sum_ok = rep.sum_residual.is_zero();

    std::vector<MonModule> qs;
    for (const auto& c : rep.components)
        qs.push_back(c.ann);
    rep.intersection = intersect_all(j.n(), j.rank(), qs);
    rep.intersection_ok = rep.intersection == j;

    for (std::size_t k = 0; k < rep.components.size(); ++k) {
        std::vector<MonModule> others;
        for (std::size_t l = 0; l < qs.size(); ++l)
            if (l != k)
                others.push_back(qs[l]);
        auto& c = rep.components[k];
        c.others = intersect_all(j.n(), j.rank(), others);
        c.minimal_ok = c.others.contains(j) && !(c.others == j);
    }
    return rep;
}

bool duality_check(int n, std::span<const Monomial> f, const AnnihilatorOptions& opts)
{
    if (!is_monomial_complete_intersection(n, f))
        throw PreconditionError("duality_check: the monomials do not form a complete intersection");
    MonIdeal expected(n, std::vector<Monomial>(f.begin(), f.end()));
    return annihilator(CurrentVector(coleff_herrera(n, f)), opts) == MonModule::from_ideal(expected);
}

} // namespace rescalc
