#include "rescalc/monomial_algebra.hpp"

#include "rescalc/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rescalc {

namespace {

std::vector<Monomial> minimize(std::vector<Monomial> gens)
{
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return a < b;
    });
    std::vector<Monomial> kept;
    for (auto& g : gens) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
        if (!redundant)
            kept.push_back(std::move(g));
    }
    // descending lex: z^2 before z*w before w
    std::sort(kept.begin(), kept.end(), std::greater<>());
    return kept;
}

bool is_pure_power(const Monomial& m)
{
    return popcount(m.support()) == 1;
}

void split(const MonIdeal& ideal, std::set<std::vector<Monomial>>& seen, std::vector<MonIdeal>& out)
{
    if (!seen.insert(ideal.gens()).second)
        return;
    for (const auto& g : ideal.gens()) {
        VarMask s = g.support();
        if (popcount(s) < 2)
            continue;
        const int i = __builtin_ctz(s);
        Monomial u = Monomial::variable(ideal.n(), i, g[i]);
        Exponents rest = g.exponents();
        rest[static_cast<std::size_t>(i)] = 0;
        Monomial v{std::move(rest)};
        split(ideal + MonIdeal(ideal.n(), {u}), seen, out);
        split(ideal + MonIdeal(ideal.n(), {v}), seen, out);
        return;
    }
    out.push_back(ideal);
}

void check_same_n(int a, int b)
{
    if (a != b)
        throw DimensionMismatch("ideals over different dimensions");
}

} // namespace

MonIdeal::MonIdeal(int n)
    : n_(n)
{
    check_dimension(n);
}

MonIdeal::MonIdeal(int n, std::vector<Monomial> gens)
    : n_(n)
{
    check_dimension(n);
    for (const auto& g : gens)
        if (g.n() != n)
            throw DimensionMismatch("generator over wrong dimension");
    gens_ = minimize(std::move(gens));
}

MonIdeal MonIdeal::unit(int n)
{
    return MonIdeal(n, {Monomial(n)});
}

MonIdeal MonIdeal::prime(int n, MonPrime p)
{
    std::vector<Monomial> gens;
    for (int i = 0; i < n; ++i)
        if (p.vars & (VarMask{1} << i))
            gens.push_back(Monomial::variable(n, i));
    return MonIdeal(n, std::move(gens));
}

bool MonIdeal::is_unit() const
{
    return gens_.size() == 1 && gens_.front().is_one();
}

bool MonIdeal::contains(const Monomial& m) const
{
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonIdeal::contains(const Polynomial& phi) const
{
    check_same_n(n_, phi.n());
    return std::all_of(phi.terms().begin(), phi.terms().end(), [&](const auto& t) { return contains(t.first); });
}

bool MonIdeal::contains(const MonIdeal& other) const
{
    check_same_n(n_, other.n_);
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

VarMask MonIdeal::support() const
{
    VarMask s = 0;
    for (const auto& g : gens_)
        s |= g.support();
    return s;
}

MonIdeal operator+(const MonIdeal& a, const MonIdeal& b)
{
    check_same_n(a.n(), b.n());
    std::vector<Monomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return MonIdeal(a.n(), std::move(gens));
}

MonIdeal intersect(const MonIdeal& a, const MonIdeal& b)
{
    check_same_n(a.n(), b.n());
    std::vector<Monomial> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const auto& u : a.gens())
        for (const auto& v : b.gens())
            gens.push_back(lcm(u, v));
    return MonIdeal(a.n(), std::move(gens));
}

MonIdeal intersect_all(int n, const std::vector<MonIdeal>& ideals)
{
    MonIdeal acc = MonIdeal::unit(n);
    for (const auto& i : ideals)
        acc = intersect(acc, i);
    return acc;
}

std::optional<MonPrime> is_primary(const MonIdeal& ideal)
{
    if (!ideal.is_proper())
        throw PreconditionError("is_primary: the unit ideal is not proper");
    VarMask pure = 0;
    for (const auto& g : ideal.gens())
        if (is_pure_power(g))
            pure |= g.support();
    const VarMask s = ideal.support();
    if ((s & ~pure) != 0)
        return std::nullopt;
    return MonPrime{s};
}

std::vector<MonIdeal> irreducible_decomposition(const MonIdeal& ideal)
{
    if (ideal.is_unit())
        return {};
    if (ideal.is_zero())
        return {ideal};
    std::set<std::vector<Monomial>> seen;
    std::vector<MonIdeal> pieces;
    split(ideal, seen, pieces);
    std::sort(pieces.begin(), pieces.end(), [](const MonIdeal& a, const MonIdeal& b) { return a.gens() < b.gens(); });
    pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
    // For irreducible monomial ideals, Q_j is redundant iff it contains some other Q_k.
    std::vector<MonIdeal> out;
    for (std::size_t j = 0; j < pieces.size(); ++j) {
        bool redundant = false;
        for (std::size_t k = 0; k < pieces.size() && !redundant; ++k)
            redundant = k != j && pieces[j].contains(pieces[k]);
        if (!redundant)
            out.push_back(pieces[j]);
    }
    return out;
}

std::vector<PrimaryComponent> primary_decomposition_oracle(const MonIdeal& ideal)
{
    if (!ideal.is_proper())
        throw PreconditionError("primary decomposition of the unit ideal");
    std::map<MonPrime, MonIdeal> grouped;
    for (const auto& q : irreducible_decomposition(ideal)) {
        MonPrime p{q.support()};
        auto it = grouped.find(p);
        if (it == grouped.end())
            grouped.emplace(p, q);
        else
            it->second = intersect(it->second, q);
    }
    std::vector<PrimaryComponent> comps;
    for (auto& [p, q] : grouped)
        comps.push_back({p, q});

    // Drop any component whose removal leaves the intersection unchanged.
    for (std::size_t j = 0; j < comps.size();) {
        std::vector<MonIdeal> others;
        for (std::size_t k = 0; k < comps.size(); ++k)
            if (k != j)
                others.push_back(comps[k].ideal);
        if (comps.size() > 1 && intersect_all(ideal.n(), others) == ideal)
            comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(j));
        else
            ++j;
    }
    return comps;
}

std::vector<MonPrime> ass_primes(const MonIdeal& ideal)
{
    if (ideal.is_zero())
        throw PreconditionError("ass_primes: zero ideal");
    if (ideal.is_unit())
        throw PreconditionError("ass_primes: unit ideal");
    std::vector<MonPrime> out;
    for (const auto& c : primary_decomposition_oracle(ideal))
        out.push_back(c.prime);
    return out;
}

MonModule::MonModule(int n, std::vector<MonIdeal> slots)
    : n_(n)
    , slots_(std::move(slots))
{
    check_dimension(n);
    if (slots_.empty())
        throw PreconditionError("module rank must be at least 1");
    for (const auto& s : slots_)
        check_same_n(n, s.n());
}

MonModule MonModule::full(int n, int rank)
{
    return MonModule(n, std::vector<MonIdeal>(static_cast<std::size_t>(rank), MonIdeal::unit(n)));
}

MonModule MonModule::from_ideal(const MonIdeal& ideal)
{
    return MonModule(ideal.n(), {ideal});
}

bool MonModule::is_proper() const
{
    return std::any_of(slots_.begin(), slots_.end(), [](const MonIdeal& s) { return s.is_proper(); });
}

bool MonModule::contains(const std::vector<Polynomial>& phi) const
{
    if (static_cast<int>(phi.size()) != rank())
        throw DimensionMismatch("vector length does not match module rank");
    for (std::size_t k = 0; k < phi.size(); ++k)
        if (!slots_[k].contains(phi[k]))
            return false;
    return true;
}

bool MonModule::contains(const MonModule& other) const
{
    if (other.rank() != rank())
        throw DimensionMismatch("module rank mismatch");
    for (std::size_t k = 0; k < slots_.size(); ++k)
        if (!slots_[k].contains(other.slots_[k]))
            return false;
    return true;
}

MonModule intersect(const MonModule& a, const MonModule& b)
{
    if (a.rank() != b.rank())
        throw DimensionMismatch("module rank mismatch");
    std::vector<MonIdeal> slots;
    for (int k = 0; k < a.rank(); ++k)
        slots.push_back(intersect(a.slot(k), b.slot(k)));
    return MonModule(a.n(), std::move(slots));
}

MonModule intersect_all(int n, int rank, const std::vector<MonModule>& modules)
{
    MonModule acc = MonModule::full(n, rank);
    for (const auto& m : modules)
        acc = intersect(acc, m);
    return acc;
}

std::vector<ModuleComponent> primary_decomposition_oracle(const MonModule& module)
{
    if (!module.is_proper())
        throw PreconditionError("primary decomposition of the full module");
    std::map<MonPrime, std::vector<MonIdeal>> comps;
    for (int k = 0; k < module.rank(); ++k) {
        const auto& slot = module.slot(k);
        if (!slot.is_proper())
            continue;
        for (const auto& c : primary_decomposition_oracle(slot)) {
            auto [it, inserted] = comps.try_emplace(
                c.prime, std::vector<MonIdeal>(static_cast<std::size_t>(module.rank()), MonIdeal::unit(module.n())));
            it->second[static_cast<std::size_t>(k)] = c.ideal;
        }
    }
    std::vector<ModuleComponent> out;
    for (auto& [p, slots] : comps)
        out.push_back({p, MonModule(module.n(), std::move(slots))});
    return out;
}

std::vector<MonPrime> ass_primes(const MonModule& module)
{
    if (!module.is_proper())
        throw PreconditionError("ass_primes: full module");
    std::vector<MonPrime> out;
    for (const auto& c : primary_decomposition_oracle(module))
        out.push_back(c.prime);
    return out;
}

std::optional<MonPrime> is_primary(const MonModule& module)
{
    auto ass = ass_primes(module);
    if (ass.size() == 1)
        return ass.front();
    return std::nullopt;
}

} // namespace rescalc
