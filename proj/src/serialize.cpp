#include "rescalc/serialize.hpp"

#include "rescalc/errors.hpp"

namespace rescalc {

namespace {

Json exps_json(const Exponents& e)
{
    Json a = Json::array();
    for (auto x : e)
        a.push_back(x);
    return a;
}

Exponents exps_from(const Json& j, int n)
{
    auto e = j.get<Exponents>();
    if (static_cast<int>(e.size()) != n)
        throw DimensionMismatch("exponent vector of wrong length in JSON");
    return e;
}

Json mask_json(VarMask m)
{
    Json a = Json::array();
    for (int i = 0; i < kMaxVars; ++i)
        if (m & (VarMask{1} << i))
            a.push_back(i + 1);
    return a;
}

VarMask mask_from(const Json& j)
{
    VarMask m = 0;
    for (int i : j.get<std::vector<int>>()) {
        if (i < 1 || i > kMaxVars)
            throw PreconditionError("variable index out of range in JSON");
        m |= VarMask{1} << (i - 1);
    }
    return m;
}

const char* kind_name(FactorKind k)
{
    return k == FactorKind::PV ? "pv" : "res";
}

FactorKind kind_from(const std::string& s)
{
    if (s == "pv")
        return FactorKind::PV;
    if (s == "res")
        return FactorKind::Res;
    throw PreconditionError("unknown factor kind '" + s + "' in JSON");
}

} // namespace

Json to_json(const Current& t)
{
    Json terms = Json::array();
    for (const auto& term : t.terms()) {
        Json coeff = Json::array();
        for (const auto& [m, c] : term.coeff.pieces())
            coeff.push_back({{"num", c.get_num().get_str()},
                             {"den", c.get_den().get_str()},
                             {"alpha", exps_json(m.alpha)},
                             {"beta", exps_json(m.beta)},
                             {"dz", mask_json(m.dz)},
                             {"dzb", mask_json(m.dzb)}});
        Json factors = Json::array();
        for (std::size_t i = 0; i < term.factors.size(); ++i)
            if (term.factors[i].kind != FactorKind::None)
                factors.push_back({{"var", i + 1}, {"kind", kind_name(term.factors[i].kind)}, {"exp", term.factors[i].exp}});
        terms.push_back({{"coeff", std::move(coeff)}, {"factors", std::move(factors)}});
    }
    return {{"terms", std::move(terms)}};
}

Current current_from_json(const Json& j, int n)
{
    TermAccumulator acc(n);
    for (const auto& term : j.at("terms")) {
        FactorVector f(static_cast<std::size_t>(n));
        for (const auto& fj : term.at("factors")) {
            const int v = fj.at("var").get<int>();
            if (v < 1 || v > n)
                throw DimensionMismatch("factor variable out of range in JSON");
            f[static_cast<std::size_t>(v - 1)] = Factor{kind_from(fj.at("kind").get<std::string>()), fj.at("exp").get<std::uint32_t>()};
        }
        for (const auto& pj : term.at("coeff")) {
            FormMonomial m;
            m.alpha = exps_from(pj.at("alpha"), n);
            m.beta = exps_from(pj.at("beta"), n);
            m.dz = mask_from(pj.at("dz"));
            m.dzb = mask_from(pj.at("dzb"));
            Rational c(mpz_class(pj.at("num").get<std::string>()), mpz_class(pj.at("den").get<std::string>()));
            c.canonicalize();
            acc.add(f, std::move(m), c);
        }
    }
    return std::move(acc).finish();
}

Json to_json(const CurrentVector& t)
{
    Json a = Json::array();
    for (const auto& c : t.components())
        a.push_back(to_json(c));
    return a;
}

CurrentVector current_vector_from_json(const Json& j, int n)
{
    std::vector<Current> comps;
    for (const auto& c : j)
        comps.push_back(current_from_json(c, n));
    return CurrentVector(std::move(comps));
}

Json to_json(const MonIdeal& ideal)
{
    Json a = Json::array();
    for (const auto& g : ideal.gens())
        a.push_back(exps_json(g.exponents()));
    return a;
}

MonIdeal ideal_from_json(const Json& j, int n)
{
    std::vector<Monomial> gens;
    for (const auto& g : j)
        gens.emplace_back(exps_from(g, n));
    return MonIdeal(n, std::move(gens));
}

Json to_json(const MonModule& m)
{
    Json a = Json::array();
    for (const auto& s : m.slots())
        a.push_back(to_json(s));
    return a;
}

MonModule module_from_json(const Json& j, int n)
{
    std::vector<MonIdeal> slots;
    for (const auto& s : j)
        slots.push_back(ideal_from_json(s, n));
    return MonModule(n, std::move(slots));
}

Json to_json(MonPrime p, int)
{
    return mask_json(p.vars);
}

MonPrime prime_from_json(const Json& j)
{
    return MonPrime{mask_from(j)};
}

Json to_json(const DecompositionReport& rep)
{
    const int n = rep.r.n();
    Json comps = Json::array();
    for (const auto& c : rep.components) {
        Json sep = Json::array();
        for (VarMask s : c.sep_failures)
            sep.push_back(mask_json(s));
        comps.push_back({{"prime", to_json(c.prime, n)},
                         {"rp", to_json(c.rp)},
                         {"ann", to_json(c.ann)},
                         {"primary_of", c.primary_of ? to_json(*c.primary_of, n) : Json(nullptr)},
                         {"primary_ok", c.primary_ok},
                         {"others", to_json(c.others)},
                         {"minimal_ok", c.minimal_ok},
                         {"sep_failures", std::move(sep)},
                         {"sep_ok", c.sep_ok},
                         {"bell_lowest", to_json(c.bell_lowest)},
                         {"bell_ok", c.bell_ok}});
    }
    Json ass = Json::array();
    for (auto p : rep.ass)
        ass.push_back(to_json(p, n));
    return {{"n", n},
            {"r", to_json(rep.r)},
            {"j", to_json(rep.j)},
            {"ass", std::move(ass)},
            {"components", std::move(comps)},
            {"sum_residual", to_json(rep.sum_residual)},
            {"sum_ok", rep.sum_ok},
            {"intersection", to_json(rep.intersection)},
            {"intersection_ok", rep.intersection_ok},
            {"verdicts",
             {{"sum_check", rep.sum_ok},
              {"primary_checks", rep.primary_ok()},
              {"intersection_check", rep.intersection_ok},
              {"minimality_check", rep.minimality_ok()},
              {"sep_checks", rep.sep_ok()},
              {"lemma_bell_checks", rep.lemma_bell_ok()}}}};
}

DecompositionReport report_from_json(const Json& j)
{
    const int n = j.at("n").get<int>();
    auto r = current_vector_from_json(j.at("r"), n);
    auto jm = module_from_json(j.at("j"), n);
    DecompositionReport rep{r, jm, {}, {}, current_vector_from_json(j.at("sum_residual"), n), j.at("sum_ok").get<bool>(),
                            module_from_json(j.at("intersection"), n), j.at("intersection_ok").get<bool>()};
    for (const auto& p : j.at("ass"))
        rep.ass.push_back(prime_from_json(p));
    for (const auto& cj : j.at("components")) {
        ComponentReport c{prime_from_json(cj.at("prime")),
                          current_vector_from_json(cj.at("rp"), n),
                          module_from_json(cj.at("ann"), n),
                          cj.at("primary_of").is_null() ? std::nullopt : std::optional<MonPrime>(prime_from_json(cj.at("primary_of"))),
                          cj.at("primary_ok").get<bool>(),
                          module_from_json(cj.at("others"), n),
                          cj.at("minimal_ok").get<bool>(),
                          {},
                          cj.at("sep_ok").get<bool>(),
                          module_from_json(cj.at("bell_lowest"), n),
                          cj.at("bell_ok").get<bool>()};
        for (const auto& s : cj.at("sep_failures"))
            c.sep_failures.push_back(mask_from(s));
        rep.components.push_back(std::move(c));
    }
    return rep;
}

Json envelope(const std::string& command, Json inputs, Json result)
{
    return {{"version", kJsonSchemaVersion}, {"command", command}, {"inputs", std::move(inputs)}, {"result", std::move(result)}};
}

} // namespace rescalc
