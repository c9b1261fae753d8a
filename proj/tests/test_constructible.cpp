#include "rescalc/calculus.hpp"
#include "rescalc/constructible.hpp"
#include "rescalc/errors.hpp"

#include "support/oracles.hpp"
#include "support/random.hpp"
#include "support/util.hpp"

#include <doctest.h>

using namespace rescalc;
using namespace rescalc::testing;

namespace {

OmegaSet cells(int n, std::initializer_list<VarMask> masks)
{
    OmegaSet w(n);
    for (auto m : masks)
        w.insert(m);
    return w;
}

SetExpr random_expr(Gen& g, int n, int depth)
{
    if (depth == 0 || g.coin(0.3)) {
        switch (g.uniform(0, 4)) {
        case 0: return SetExpr::hyperplane(g.uniform(1, n));
        case 1: {
            std::vector<int> s;
            for (int i = 1; i <= n; ++i)
                if (g.coin())
                    s.push_back(i);
            return SetExpr::coord_variety(s);
        }
        case 2: {
            std::vector<int> s;
            for (int i = 1; i <= n; ++i)
                if (g.coin())
                    s.push_back(i);
            return SetExpr::cell(s);
        }
        case 3: return SetExpr::empty();
        default: return SetExpr::full();
        }
    }
    SetExpr a = random_expr(g, n, depth - 1), b = random_expr(g, n, depth - 1);
    switch (g.uniform(0, 3)) {
    case 0: return ~a;
    case 1: return a & b;
    case 2: return a | b;
    default: return a - b;
    }
}

} // namespace

TEST_CASE("omega of simple set expressions")
{
    CHECK(omega_of(SetExpr::hyperplane(2), 2) == cells(2, {0b10, 0b11}));
    CHECK(omega_of(~SetExpr::full(), 3).empty());
    CHECK(omega_of(SetExpr::coord_variety({1}) - SetExpr::coord_variety({1, 2}), 2) == cells(2, {0b01}));
    CHECK(omega_of(SetExpr::coord_variety({}), 2) == OmegaSet::full(2));
    CHECK(coord_variety(3, 0b101) == cells(3, {0b101, 0b111}));
    CHECK_THROWS_AS(omega_of(SetExpr::hyperplane(3), 2), PreconditionError);
    CHECK_THROWS_AS(omega_of(SetExpr::cell({0}), 2), PreconditionError);
}

TEST_CASE("property: omega agrees with point evaluation at cell representatives")
{
    Gen g(21);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = g.uniform(1, 4);
        SetExpr e = random_expr(g, n, 3);
        OmegaSet w = omega_of(e, n);
        for (VarMask c = 0; c < (VarMask{1} << n); ++c)
            CHECK(w.contains(c) == point_in(e, c));
    }
}

TEST_CASE("restriction on the two-variable example")
{
    Current tau1 = cur("pv[1/z^3]", 2), tau2 = cur("pv[1/w]*res[1/z^2]", 2), tau3 = cur("res[1/z]*res[1/w^2]", 2);
    Current t = tau1 + tau2 + tau3;
    CHECK(restrict(omega_of(SetExpr::hyperplane(2), 2), t) == tau3);
    CHECK(restrict(cells(2, {0b00, 0b11}), t) == tau1 + tau3);
    CHECK(restrict(OmegaSet::full(2), t) == t);
    CHECK(restrict(OmegaSet(2), t).is_zero());
    CHECK_THROWS_AS(restrict(OmegaSet::full(3), t), DimensionMismatch);
}

TEST_CASE("min cell codimension")
{
    CHECK(min_cell_codim(cells(2, {0b11})) == 2);
    CHECK(min_cell_codim(cells(2, {0b00, 0b11})) == 0);
    CHECK(min_cell_codim(omega_of(SetExpr::hyperplane(1), 3)) == 1);
    CHECK_THROWS_AS(min_cell_codim(OmegaSet(2)), PreconditionError);
}

TEST_CASE("property: restriction axioms")
{
    Gen g(22);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = g.uniform(1, 4);
        Current t = g.current(n, 4);
        OmegaSet w = g.omega(n), v = g.omega(n);
        CHECK(restrict(~w, t) == t - restrict(w, t));
        CHECK(restrict(w & v, t) == restrict(w, restrict(v, t)));
        CHECK(restrict(w | v, t) == restrict(w, t) + restrict(v, t) - restrict(w & v, t));
        PolyCoeff xi = g.smooth(n, 2);
        CHECK(restrict(w, wedge(xi, t)) == wedge(xi, restrict(w, t)));
        const Monomial m = g.monomial(n, 3);
        CHECK(restrict(w, mul_monomial(m, t)) == mul_monomial(m, restrict(w, t)));
        CHECK(restrict(w, t).terms().size() <= t.terms().size());
    }
}
