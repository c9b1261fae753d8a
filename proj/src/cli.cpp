#include "rescalc/cli.hpp"

#include "rescalc/calculus.hpp"
#include "rescalc/constructible.hpp"
#include "rescalc/errors.hpp"
#include "rescalc/residue_decomposition.hpp"
#include "rescalc/serialize.hpp"
#include "rescalc/syntax.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace rescalc::cli {

namespace {

struct Args {
    int n = 0;
    std::vector<std::string> currents;
    std::string ideal;
    std::string module;
    std::string set;
    int q = -1;
    bool json = false;
    std::uint64_t seed = AnnihilatorOptions{}.seed;
    std::string check;
};

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

class Runner {
public:
    Runner(const Args& a, std::ostream& out)
        : a_(a)
        , out_(out)
    {
        opts_.seed = a.seed;
    }

    int normalize()
    {
        Current t = single_current();
        emit("normalize", to_json(t), to_string(t));
        return kOk;
    }

    int restrict_cmd()
    {
        Current t = single_current();
        OmegaSet w = parse_set(require(a_.set, "--set"), a_.n);
        Current r = restrict(w, t);
        Json result = {{"omega", to_string(w)}, {"current", to_json(r)}};
        emit("restrict", result, to_string(r));
        return kOk;
    }

    int ann()
    {
        CurrentVector t = currents();
        MonModule m = annihilator(t, opts_);
        emit("ann", to_json(m), module_text(m));
        return kOk;
    }

    int ch()
    {
        auto f = parse_monomial_list(a_.ideal, a_.n);
        Current t = coleff_herrera(a_.n, f);
        Json result = {{"current", to_json(t)}, {"complete_intersection", is_monomial_complete_intersection(a_.n, f)}};
        emit("ch", result, to_string(t));
        return kOk;
    }

    int arm()
    {
        auto f = parse_monomial_list(require(a_.ideal, "--ideal"), a_.n);
        PolyCoeff alpha = PolyCoeff::scalar(a_.n, 1);
        if (!a_.currents.empty()) {
            Current c = single_current();
            alpha = PolyCoeff(a_.n);
            for (const auto& term : c.terms()) {
                if (std::any_of(term.factors.begin(), term.factors.end(), [](const Factor& x) { return x.kind != FactorKind::None; }))
                    throw PreconditionError("arm: the coefficient --current must be a smooth form without pv/res factors");
                for (const auto& [m, v] : term.coeff.pieces())
                    alpha.add(m, v);
            }
        }
        if (a_.q < 0)
            throw PreconditionError("arm: --q is required");
        Current t = arm_product(f, a_.q, alpha);
        emit("arm", to_json(t), to_string(t));
        return kOk;
    }

    int decompose_cmd(bool as_check)
    {
        CurrentVector r = currents();
        MonModule j = target_module(r.rank());
        DecompositionReport rep = decompose(r, j, DecomposeOptions{opts_, {}});
        const bool ok = rep.all_ok();
        if (a_.json) {
            out_ << envelope(as_check ? "check prima" : "decompose", inputs(), to_json(rep)).dump(2) << "\n";
        } else {
            print_report(rep);
        }
        return ok ? kOk : kVerificationFailed;
    }

    int primdec()
    {
        Json comps = Json::array();
        std::string text;
        if (!a_.module.empty()) {
            MonModule m = parse_module(a_.module, a_.n);
            for (const auto& c : primary_decomposition_oracle(m)) {
                comps.push_back({{"prime", to_json(c.prime, a_.n)}, {"component", to_json(c.module)}});
                text += to_string(c.prime, a_.n) + " : " + to_string(c.module) + "\n";
            }
        } else {
            MonIdeal i = parse_ideal(require(a_.ideal, "--ideal"), a_.n);
            for (const auto& c : primary_decomposition_oracle(i)) {
                comps.push_back({{"prime", to_json(c.prime, a_.n)}, {"component", to_json(c.ideal)}});
                text += to_string(c.prime, a_.n) + " : " + to_string(c.ideal) + "\n";
            }
        }
        if (!text.empty())
            text.pop_back();
        emit("primdec", comps, text);
        return kOk;
    }

    int check()
    {
        if (a_.check == "prima")
            return decompose_cmd(true);
        if (a_.check == "duality") {
            auto f = parse_monomial_list(require(a_.ideal, "--ideal"), a_.n);
            const bool ok = duality_check(a_.n, f, opts_);
            emit("check duality", Json{{"ok", ok}}, std::string("duality: ") + verdict(ok));
            return ok ? kOk : kVerificationFailed;
        }
        if (a_.check == "leibniz") {
            Current t = single_current();
            auto g = parse_monomial_list(require(a_.ideal, "--ideal"), a_.n);
            if (g.size() != 1)
                throw PreconditionError("check leibniz: --ideal must hold exactly one monomial g");
            const Current lhs1 = dbar(pv_mul(g[0], t));
            const Current rhs1 = res_mul(g[0], t) + pv_mul(g[0], dbar(t));
            const Current lhs2 = dbar(res_mul(g[0], t));
            const Current rhs2 = -res_mul(g[0], dbar(t));
            const bool ok1 = lhs1 == rhs1, ok2 = lhs2 == rhs2;
            Json result = {{"pv_rule", ok1}, {"res_rule", ok2}};
            std::string text = std::string("dbar([1/g]T) = dbar[1/g]^T + [1/g]dbar T: ") + verdict(ok1) +
                               "\ndbar(dbar[1/g]^T) = -dbar[1/g]^dbar T: " + verdict(ok2);
            if (!ok1)
                text += "\n  witness: " + to_string(lhs1 - rhs1);
            if (!ok2)
                text += "\n  witness: " + to_string(lhs2 - rhs2);
            emit("check leibniz", result, text);
            return ok1 && ok2 ? kOk : kVerificationFailed;
        }
        if (a_.check == "sep") {
            CurrentVector t = currents();
            MonIdeal pi = parse_ideal(require(a_.ideal, "--ideal"), a_.n);
            VarMask vars = 0;
            for (const auto& g : pi.gens()) {
                if (g.degree() != 1)
                    throw PreconditionError("check sep: --ideal must list variables generating a prime");
                vars |= g.support();
            }
            const MonPrime p{vars};
            const auto bad = sep_violations(t, p);
            Json jb = Json::array();
            std::string text = std::string("sep w.r.t. ") + to_string(p, a_.n) + ": " + verdict(bad.empty());
            for (VarMask s : bad) {
                jb.push_back(to_json(MonPrime{s}, a_.n));
                text += "\n  nonzero on V" + to_string(MonPrime{s}, a_.n);
            }
            emit("check sep", Json{{"ok", bad.empty()}, {"violations", jb}}, text);
            return bad.empty() ? kOk : kVerificationFailed;
        }
        throw PreconditionError("unknown check '" + a_.check + "'");
    }

    void nonmonomial(const NonMonomialAnnihilator& e)
    {
        std::string w;
        for (std::size_t k = 0; k < e.witness().size(); ++k)
            w += (k ? ", " : "") + to_string(e.witness()[k]);
        if (a_.json) {
            Json jw = Json::array();
            for (const auto& p : e.witness())
                jw.push_back(to_string(p));
            out_ << envelope("error", inputs(), Json{{"error", "NonMonomialAnnihilator"}, {"tag", e.tag()}, {"witness", jw}}).dump(2)
                 << "\n";
        } else {
            out_ << "NonMonomialAnnihilator" << (e.tag().empty() ? "" : " in " + e.tag()) << ": killer (" << w
                 << ") lies outside the monomial annihilator\n";
        }
    }

    void duality(const DualityMismatch& e)
    {
        if (a_.json) {
            out_ << envelope("error", inputs(),
                             Json{{"error", "DualityMismatch"}, {"expected", to_json(e.expected())}, {"actual", to_json(e.actual())}})
                        .dump(2)
                 << "\n";
        } else {
            out_ << "DualityMismatch: ann R = " << module_text(e.actual()) << " but J = " << module_text(e.expected()) << "\n";
        }
    }

private:
    static const std::string& require(const std::string& v, const char* flag)
    {
        if (v.empty())
            throw PreconditionError(std::string("missing ") + flag);
        return v;
    }

    Current single_current()
    {
        if (a_.currents.size() != 1)
            throw PreconditionError("expected exactly one --current");
        return parse_current(a_.currents.front(), a_.n);
    }

    CurrentVector currents()
    {
        if (a_.currents.empty())
            throw PreconditionError("missing --current");
        std::vector<Current> cs;
        for (const auto& s : a_.currents)
            cs.push_back(parse_current(s, a_.n));
        return CurrentVector(std::move(cs));
    }

    MonModule target_module(int rank)
    {
        if (!a_.module.empty())
            return parse_module(a_.module, a_.n, rank);
        if (rank != 1)
            throw PreconditionError("several --current components need --module");
        return MonModule::from_ideal(parse_ideal(require(a_.ideal, "--ideal"), a_.n));
    }

    std::string module_text(const MonModule& m) const
    {
        return m.rank() == 1 ? to_string(m.slot(0)) : to_string(m);
    }

    Json inputs() const
    {
        Json in = {{"n", a_.n}};
        if (!a_.currents.empty())
            in["current"] = a_.currents;
        if (!a_.ideal.empty())
            in["ideal"] = a_.ideal;
        if (!a_.module.empty())
            in["module"] = a_.module;
        if (!a_.set.empty())
            in["set"] = a_.set;
        if (a_.q >= 0)
            in["q"] = a_.q;
        return in;
    }

    void emit(const std::string& command, const Json& result, const std::string& text)
    {
        if (a_.json)
            out_ << envelope(command, inputs(), result).dump(2) << "\n";
        else
            out_ << text << "\n";
    }

    void print_report(const DecompositionReport& rep)
    {
        const int n = rep.r.n();
        out_ << "Ass J:";
        for (std::size_t k = 0; k < rep.ass.size(); ++k)
            out_ << (k ? ", " : " ") << to_string(rep.ass[k], n);
        out_ << "\n";
        for (const auto& c : rep.components) {
            out_ << "component " << to_string(c.prime, n) << ":\n";
            for (int k = 0; k < c.rp.rank(); ++k)
                out_ << "  R^p" << (c.rp.rank() > 1 ? "[e" + std::to_string(k + 1) + "]" : "") << " = " << to_string(c.rp[k]) << "\n";
            out_ << "  ann R^p = " << module_text(c.ann) << "\n";
            out_ << "  primary: " << verdict(c.primary_ok) << "\n";
            out_ << "  minimal: " << verdict(c.minimal_ok) << "\n";
            out_ << "  sep: " << verdict(c.sep_ok);
            for (VarMask s : c.sep_failures)
                out_ << " [nonzero on V" << to_string(MonPrime{s}, n) << "]";
            out_ << "\n";
            out_ << "  lowest bidegree: " << verdict(c.bell_ok);
            if (!c.bell_ok)
                out_ << " [ann of lowest part = " << module_text(c.bell_lowest) << "]";
            out_ << "\n";
        }
        out_ << "sum of R^p = R: " << verdict(rep.sum_ok) << "\n";
        out_ << "intersection = " << module_text(rep.intersection) << ": " << verdict(rep.intersection_ok) << "\n";
        out_ << "result: " << verdict(rep.all_ok()) << "\n";
    }

    const Args& a_;
    std::ostream& out_;
    AnnihilatorOptions opts_;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Args a;
    CLI::App app{"exact calculus of residue currents in monomial coordinates", "rescalc"};
    app.require_subcommand(1, 1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", a.n, "number of variables")->required()->check(CLI::Range(1, kMaxVars));
        sub->add_flag("--json", a.json, "structured output");
        sub->add_option("--seed", a.seed, "seed for randomized certification");
    };

    auto* normalize = app.add_subcommand("normalize", "print the normal form of a current");
    add_common(normalize);
    normalize->add_option("--current", a.currents, "current expression")->required();

    auto* restrict_sub = app.add_subcommand("restrict", "restrict a current to a constructible set");
    add_common(restrict_sub);
    restrict_sub->add_option("--current", a.currents)->required();
    restrict_sub->add_option("--set", a.set, "set expression")->required();

    auto* ann = app.add_subcommand("ann", "annihilator of a current (repeat --current for a vector)");
    add_common(ann);
    ann->add_option("--current", a.currents)->required();

    auto* ch = app.add_subcommand("ch", "Coleff-Herrera product of an ordered monomial list");
    add_common(ch);
    ch->add_option("--ideal", a.ideal, "ordered monomials f_1, ..., f_q")->required();

    auto* arm = app.add_subcommand("arm", "mixed residue/principal value product");
    add_common(arm);
    arm->add_option("--ideal", a.ideal, "ordered monomials f_1, ..., f_nu")->required();
    arm->add_option("--q", a.q, "number of residue factors")->required();
    arm->add_option("--current", a.currents, "smooth coefficient form (default 1)");

    auto* dec = app.add_subcommand("decompose", "decompose R over Ass J and verify the primary decomposition");
    add_common(dec);
    dec->add_option("--current", a.currents)->required();
    dec->add_option("--ideal", a.ideal);
    dec->add_option("--module", a.module);

    auto* primdec = app.add_subcommand("primdec", "minimal primary decomposition of a monomial ideal or module");
    add_common(primdec);
    primdec->add_option("--ideal", a.ideal);
    primdec->add_option("--module", a.module);

    auto* check = app.add_subcommand("check", "run one verification: leibniz, duality, prima or sep");
    add_common(check);
    check->add_option("which", a.check)->required()->check(CLI::IsMember({"leibniz", "duality", "prima", "sep"}));
    check->add_option("--current", a.currents);
    check->add_option("--ideal", a.ideal);
    check->add_option("--module", a.module);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    Runner r(a, out);
    try {
        if (*normalize)
            return r.normalize();
        if (*restrict_sub)
            return r.restrict_cmd();
        if (*ann)
            return r.ann();
        if (*ch)
            return r.ch();
        if (*arm)
            return r.arm();
        if (*dec)
            return r.decompose_cmd(false);
        if (*primdec)
            return r.primdec();
        if (*check)
            return r.check();
    } catch (const NonMonomialAnnihilator& e) {
        r.nonmonomial(e);
        return kVerificationFailed;
    } catch (const DualityMismatch& e) {
        r.duality(e);
        return kVerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

} // namespace rescalc::cli
