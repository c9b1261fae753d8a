#include "rescalc/syntax.hpp"

#include "rescalc/calculus.hpp"
#include "rescalc/errors.hpp"

#include <cctype>
#include <functional>
#include <optional>

namespace rescalc {

namespace {

constexpr const char* kAliases[] = {"z", "w", "u", "v"};

enum class Tok { Ident, Int, Sym, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t col;
};

std::vector<Token> lex(std::string_view src)
{
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        std::size_t j = i;
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j])))
                ++j;
            out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), line, col});
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            out.push_back({Tok::Int, std::string(src.substr(i, j - i)), line, col});
        } else if (std::string_view("+-*/^[](){},:~&|\\").find(c) != std::string_view::npos) {
            j = i + 1;
            out.push_back({Tok::Sym, std::string(1, c), line, col});
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        advance(j - i);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    Parser(std::string_view src, int n)
        : toks_(lex(src))
        , n_(n)
    {
        check_dimension(n);
    }

    const Token& peek() const { return toks_[pos_]; }
    bool at_sym(char c) const { return peek().kind == Tok::Sym && peek().text[0] == c; }
    bool at_end() const { return peek().kind == Tok::End; }
    bool at_ident(std::string_view s) const { return peek().kind == Tok::Ident && peek().text == s; }

    [[noreturn]] void fail(const std::string& msg, const Token& t) const { throw ParseError(msg, t.line, t.col); }
    [[noreturn]] void fail(const std::string& msg) const { fail(msg, peek()); }

    Token next() { return toks_[pos_++]; }

    void expect_sym(char c)
    {
        if (!at_sym(c))
            fail(std::string("expected '") + c + "'" + found());
        ++pos_;
    }

    void expect_end()
    {
        if (!at_end())
            fail("unexpected trailing input" + found());
    }

    std::string found() const
    {
        if (at_end())
            return ", found end of input";
        return ", found '" + peek().text + "'";
    }

    std::uint64_t integer(std::uint64_t limit, const char* what)
    {
        if (peek().kind != Tok::Int)
            fail(std::string("expected ") + what + found());
        const Token t = next();
        if (t.text.size() > 12 || std::stoull(t.text) > limit)
            fail(std::string(what) + " overflow", t);
        return std::stoull(t.text);
    }

    std::uint32_t exponent()
    {
        if (!at_sym('^'))
            return 1;
        next();
        auto e = integer(kMaxExponent, "exponent");
        if (e == 0)
            fail("exponent must be positive", toks_[pos_ - 1]);
        return static_cast<std::uint32_t>(e);
    }

    std::optional<int> var_index(const std::string& name) const
    {
        if (n_ <= 4)
            for (int i = 0; i < n_; ++i)
                if (name == kAliases[i])
                    return i;
        if (name.size() >= 2 && name[0] == 'z') {
            for (std::size_t k = 1; k < name.size(); ++k)
                if (!std::isdigit(static_cast<unsigned char>(name[k])))
                    return std::nullopt;
            if (name.size() > 4)
                return std::nullopt;
            return std::stoi(name.substr(1)) - 1;
        }
        return std::nullopt;
    }

    bool at_var() const
    {
        return peek().kind == Tok::Ident && var_index(peek().text).has_value();
    }

    int variable()
    {
        if (peek().kind != Tok::Ident)
            fail("expected a variable" + found());
        const Token t = next();
        auto idx = var_index(t.text);
        if (!idx)
            fail("unknown variable '" + t.text + "'", t);
        if (*idx < 0 || *idx >= n_)
            fail("variable '" + t.text + "' outside z1..z" + std::to_string(n_), t);
        return *idx;
    }

    // var ['^' int] ('*' var ['^' int])*  or  '1'
    Monomial monomial()
    {
        Monomial m(n_);
        if (peek().kind == Tok::Int && peek().text == "1") {
            next();
            return m;
        }
        Exponents e(static_cast<std::size_t>(n_), 0);
        while (true) {
            const Token at = peek();
            const int i = variable();
            const auto p = exponent();
            auto& slot = e[static_cast<std::size_t>(i)];
            if (slot + p > kMaxExponent)
                fail("exponent overflow", at);
            slot += p;
            if (!(at_sym('*') && toks_[pos_ + 1].kind == Tok::Ident && var_index(toks_[pos_ + 1].text)))
                break;
            next();
        }
        return Monomial(std::move(e));
    }

    Rational rational()
    {
        const Token t = next();
        Rational r(t.text, 10);
        if (at_sym('/') && toks_[pos_ + 1].kind == Tok::Int) {
            next();
            const Token d = next();
            Rational den(d.text, 10);
            if (den == 0)
                fail("zero denominator", d);
            r /= den;
        }
        r.canonicalize();
        return r;
    }

    std::optional<int> form_index(const std::string& name, std::string_view prefix) const
    {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
            return std::nullopt;
        for (std::size_t k = prefix.size(); k < name.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(name[k])))
                return std::nullopt;
        if (name.size() - prefix.size() > 3)
            return std::nullopt;
        return std::stoi(name.substr(prefix.size()));
    }

    using Action = std::function<Current(const Current&)>;

    Action factor()
    {
        const Token t = peek();
        if (t.kind != Tok::Ident)
            fail("expected a factor" + found());
        if (t.text == "pv" || t.text == "res") {
            next();
            expect_sym('[');
            if (!(peek().kind == Tok::Int && peek().text == "1"))
                fail("expected '1/' inside " + t.text + "[...]" + found());
            next();
            expect_sym('/');
            Monomial g = monomial();
            expect_sym(']');
            if (t.text == "pv")
                return [g](const Current& c) { return pv_mul(g, c); };
            return [g](const Current& c) { return res_mul(g, c); };
        }
        if (t.text == "conj") {
            next();
            expect_sym('(');
            Monomial g = monomial();
            expect_sym(')');
            const int n = n_;
            return [g, n](const Current& c) {
                PolyCoeff xi(n);
                FormMonomial m = FormMonomial::unit(n);
                m.beta = g.exponents();
                xi.add(m, 1);
                return wedge(xi, c);
            };
        }
        for (auto [prefix, anti] : {std::pair{std::string_view("dzb"), true}, std::pair{std::string_view("dz"), false}}) {
            if (auto idx = form_index(t.text, prefix)) {
                next();
                if (*idx < 1 || *idx > n_)
                    fail("form index outside 1.." + std::to_string(n_), t);
                const int n = n_;
                const VarMask bit = VarMask{1} << (*idx - 1);
                return [n, bit, anti = anti](const Current& c) {
                    PolyCoeff xi(n);
                    FormMonomial m = FormMonomial::unit(n);
                    (anti ? m.dzb : m.dz) = bit;
                    xi.add(m, 1);
                    return wedge(xi, c);
                };
            }
        }
        const int i = variable();
        const auto p = exponent();
        Monomial g = Monomial::variable(n_, i, p);
        return [g](const Current& c) { return mul_monomial(g, c); };
    }

    Current term()
    {
        Rational scale = 1;
        if (peek().kind == Tok::Int) {
            scale = rational();
            if (at_sym('*'))
                next();
            else if (at_end() || at_sym('+') || at_sym('-'))
                return Current::one(n_).scaled(scale);
        }
        std::vector<Action> actions;
        actions.push_back(factor());
        while (at_sym('*') || peek().kind == Tok::Ident) {
            if (at_sym('*'))
                next();
            actions.push_back(factor());
        }
        Current t = Current::one(n_);
        for (auto it = actions.rbegin(); it != actions.rend(); ++it)
            t = (*it)(t);
        return t.scaled(scale);
    }

    Current current()
    {
        TermAccumulator acc(n_);
        Rational sign = 1;
        if (at_sym('-') || at_sym('+'))
            sign = next().text == "-" ? -1 : 1;
        acc.add(term(), sign);
        while (at_sym('+') || at_sym('-')) {
            sign = next().text == "-" ? -1 : 1;
            acc.add(term(), sign);
        }
        expect_end();
        return std::move(acc).finish();
    }

    // ---- constructible sets ----

    SetExpr set_union()
    {
        SetExpr e = set_inter();
        while (at_sym('|') || at_sym('\\')) {
            const bool diff = next().text == "\\";
            SetExpr rhs = set_inter();
            e = diff ? e - rhs : e | rhs;
        }
        return e;
    }

    SetExpr set_inter()
    {
        SetExpr e = set_unary();
        while (at_sym('&')) {
            next();
            e = e & set_unary();
        }
        return e;
    }

    SetExpr set_unary()
    {
        if (at_sym('~')) {
            next();
            return ~set_unary();
        }
        if (at_sym('(')) {
            next();
            SetExpr e = set_union();
            expect_sym(')');
            return e;
        }
        if (at_ident("empty")) {
            next();
            return SetExpr::empty();
        }
        if (at_ident("full")) {
            next();
            return SetExpr::full();
        }
        if (at_ident("V")) {
            next();
            expect_sym('(');
            std::vector<int> idx{variable() + 1};
            while (at_sym(',')) {
                next();
                idx.push_back(variable() + 1);
            }
            expect_sym(')');
            return SetExpr::coord_variety(std::move(idx));
        }
        if (at_ident("H")) {
            next();
            expect_sym('(');
            const int i = variable() + 1;
            expect_sym(')');
            return SetExpr::hyperplane(i);
        }
        if (at_ident("W")) {
            next();
            expect_sym('{');
            std::vector<int> idx;
            if (!at_sym('}')) {
                while (true) {
                    const Token t = peek();
                    const auto i = integer(static_cast<std::uint64_t>(n_), "cell index");
                    if (i < 1)
                        fail("cell index must be at least 1", t);
                    idx.push_back(static_cast<int>(i));
                    if (!at_sym(','))
                        break;
                    next();
                }
            }
            expect_sym('}');
            return SetExpr::cell(std::move(idx));
        }
        fail("expected a set expression" + found());
    }

    // ---- ideals, modules, polynomials ----

    std::vector<Monomial> monomial_list()
    {
        std::vector<Monomial> out;
        if (peek().kind == Tok::Int && peek().text == "0" && toks_[pos_ + 1].kind == Tok::End) {
            next();
            return out;
        }
        out.push_back(monomial());
        while (at_sym(',')) {
            next();
            out.push_back(monomial());
        }
        expect_end();
        return out;
    }

    MonModule module(int min_rank)
    {
        std::vector<std::vector<Monomial>> slots;
        auto slot = [&](int k) -> std::vector<Monomial>& {
            if (static_cast<int>(slots.size()) <= k)
                slots.resize(static_cast<std::size_t>(k) + 1);
            return slots[static_cast<std::size_t>(k)];
        };
        while (true) {
            const Token t = peek();
            auto idx = t.kind == Tok::Ident ? form_index(t.text, "e") : std::nullopt;
            if (!idx || *idx < 1 || *idx > 64)
                fail("expected a basis tag e<i>" + found());
            next();
            expect_sym(':');
            auto& gens = slot(*idx - 1);
            if (peek().kind == Tok::Int && peek().text == "0")
                next();
            else
                gens.push_back(monomial());
            if (!at_sym(','))
                break;
            next();
        }
        expect_end();
        const auto rank = std::max<std::size_t>(slots.size(), static_cast<std::size_t>(min_rank));
        slots.resize(rank);
        std::vector<MonIdeal> ideals;
        for (auto& g : slots)
            ideals.emplace_back(n_, std::move(g));
        return MonModule(n_, std::move(ideals));
    }

    Polynomial polynomial()
    {
        Polynomial out(n_);
        Rational sign = 1;
        if (at_sym('-') || at_sym('+'))
            sign = next().text == "-" ? -1 : 1;
        while (true) {
            Rational c = 1;
            Monomial m(n_);
            if (peek().kind == Tok::Int) {
                c = rational();
                if (at_sym('*')) {
                    next();
                    m = monomial();
                }
            } else {
                m = monomial();
            }
            out.add(m, sign * c);
            if (!(at_sym('+') || at_sym('-')))
                break;
            sign = next().text == "-" ? -1 : 1;
        }
        expect_end();
        return out;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int n_;
};

std::string power(const std::string& base, std::uint32_t e)
{
    return e == 1 ? base : base + "^" + std::to_string(e);
}

std::string monomial_body(const Exponents& e)
{
    const int n = static_cast<int>(e.size());
    std::string s;
    for (int i = 0; i < n; ++i) {
        if (e[static_cast<std::size_t>(i)] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += power(var_name(n, i), e[static_cast<std::size_t>(i)]);
    }
    return s;
}

// Appends "<sign><magnitude>" handling the leading summand.
void append_summand(std::string& out, const Rational& c, const std::string& body)
{
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty())
        out += neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    if (body.empty())
        out += to_string(mag);
    else if (mag == 1)
        out += body;
    else
        out += to_string(mag) + "*" + body;
}

} // namespace

std::string var_name(int n, int index0)
{
    if (n <= 4)
        return kAliases[index0];
    return "z" + std::to_string(index0 + 1);
}

Current parse_current(std::string_view src, int n)
{
    return Parser(src, n).current();
}

SetExpr parse_set_expr(std::string_view src, int n)
{
    Parser p(src, n);
    SetExpr e = p.set_union();
    p.expect_end();
    return e;
}

OmegaSet parse_set(std::string_view src, int n)
{
    return omega_of(parse_set_expr(src, n), n);
}

Monomial parse_monomial(std::string_view src, int n)
{
    Parser p(src, n);
    Monomial m = p.monomial();
    p.expect_end();
    return m;
}

std::vector<Monomial> parse_monomial_list(std::string_view src, int n)
{
    return Parser(src, n).monomial_list();
}

MonIdeal parse_ideal(std::string_view src, int n)
{
    return MonIdeal(n, parse_monomial_list(src, n));
}

MonModule parse_module(std::string_view src, int n, int min_rank)
{
    return Parser(src, n).module(min_rank);
}

Polynomial parse_polynomial(std::string_view src, int n)
{
    return Parser(src, n).polynomial();
}

std::string to_string(const Monomial& m)
{
    auto s = monomial_body(m.exponents());
    return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    // highest monomial first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        append_summand(out, it->second, monomial_body(it->first.exponents()));
    return out;
}

std::string to_string(const Current& t)
{
    if (t.is_zero())
        return "0";
    const int n = t.n();
    std::string out;
    for_each_piece(t, [&](const FactorVector& f, const FormMonomial& m, const Rational& c) {
        std::vector<std::string> parts;
        if (auto hol = monomial_body(m.alpha); !hol.empty())
            parts.push_back(hol);
        if (auto anti = monomial_body(m.beta); !anti.empty())
            parts.push_back("conj(" + anti + ")");
        for (int i = 0; i < n; ++i)
            if (m.dz & (VarMask{1} << i))
                parts.push_back("dz" + std::to_string(i + 1));
        for (int i = 0; i < n; ++i) {
            const auto& fi = f[static_cast<std::size_t>(i)];
            if (m.dzb & (VarMask{1} << i))
                parts.push_back("dzb" + std::to_string(i + 1));
            else if (fi.kind == FactorKind::Res)
                parts.push_back("res[1/" + power(var_name(n, i), fi.exp) + "]");
        }
        for (int i = 0; i < n; ++i) {
            const auto& fi = f[static_cast<std::size_t>(i)];
            if (fi.kind == FactorKind::PV)
                parts.push_back("pv[1/" + power(var_name(n, i), fi.exp) + "]");
        }
        std::string body;
        for (const auto& p : parts)
            body += (body.empty() ? "" : "*") + p;
        append_summand(out, c, body);
    });
    return out;
}

std::string to_string(const OmegaSet& w)
{
    if (w.empty())
        return "empty";
    if (w.size() == (std::size_t{1} << w.n()))
        return "full";
    std::string out;
    for (VarMask c : w.cells()) {
        if (!out.empty())
            out += " | ";
        out += "W{";
        bool first = true;
        for (int i = 0; i < w.n(); ++i)
            if (c & (VarMask{1} << i)) {
                out += (first ? "" : ",") + std::to_string(i + 1);
                first = false;
            }
        out += "}";
    }
    return out;
}

std::string to_string(const MonIdeal& ideal)
{
    if (ideal.is_zero())
        return "0";
    std::string out;
    for (const auto& g : ideal.gens())
        out += (out.empty() ? "" : ", ") + to_string(g);
    return out;
}

std::string to_string(const MonModule& m)
{
    std::string out;
    for (int k = 0; k < m.rank(); ++k) {
        const std::string tag = "e" + std::to_string(k + 1) + ": ";
        if (m.slot(k).is_zero()) {
            out += (out.empty() ? "" : ", ") + tag + "0";
            continue;
        }
        for (const auto& g : m.slot(k).gens())
            out += (out.empty() ? "" : ", ") + tag + to_string(g);
    }
    return out;
}

std::string to_string(MonPrime p, int n)
{
    if (p.vars == 0)
        return "(0)";
    std::string out = "(";
    for (int i = 0; i < n; ++i)
        if (p.vars & (VarMask{1} << i))
            out += (out.size() > 1 ? ", " : "") + var_name(n, i);
    return out + ")";
}

} // namespace rescalc
