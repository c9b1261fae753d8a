#include "rescalc/calculus.hpp"
#include "rescalc/current.hpp"
#include "rescalc/errors.hpp"

#include "support/random.hpp"
#include "support/util.hpp"

#include <doctest.h>

using namespace rescalc;
using namespace rescalc::testing;

namespace {

VarMask bit(int i1) { return VarMask{1} << (i1 - 1); }

std::vector<ElementaryTerm> raw_terms(const Current& t) { return t.terms(); }

} // namespace

TEST_CASE("normalize cancels, merges and applies the antiholomorphic rule")
{
    CHECK(cur("res[1/z] - res[1/z]", 1).is_zero());
    CHECK(cur("conj(z)*res[1/z]", 1).is_zero());
    CHECK(cur("dzb1*res[1/z]", 1).is_zero());
    CHECK(cur("2*pv[1/z] + 3*pv[1/z]", 1) == cur("5*pv[1/z]", 1));
    // conj at another variable survives
    CHECK_FALSE(cur("conj(w)*res[1/z]", 2).is_zero());
}

TEST_CASE("holomorphic factors are absorbed into pv and res")
{
    CHECK(cur("z^3*pv[1/z^2]", 1) == cur("z", 1));
    CHECK(cur("z*pv[1/z^2]", 1) == cur("pv[1/z]", 1));
    CHECK(cur("z^2*res[1/z^2]", 1).is_zero());
    CHECK(cur("z*res[1/z^3]", 1) == cur("res[1/z^2]", 1));
}

TEST_CASE("raw terms with non-reduced coefficients normalize the same way")
{
    TermAccumulator acc(1);
    FormMonomial m = FormMonomial::unit(1);
    m.alpha = {3};
    acc.add({Factor::pv(2)}, m, 1);
    CHECK(std::move(acc).finish() == cur("z", 1));

    TermAccumulator bad(2);
    CHECK_THROWS_AS(bad.add({Factor::pv(1)}, FormMonomial::unit(2), 1), DimensionMismatch);
    TermAccumulator zero_exp(1);
    CHECK_THROWS_AS(zero_exp.add({Factor{FactorKind::PV, 0}}, FormMonomial::unit(1), 1), PreconditionError);
}

TEST_CASE("residue signature and support bound")
{
    // the three terms of the two-variable restriction example
    Current t = cur("pv[1/z^3] + pv[1/w]*res[1/z^2] + res[1/z]*res[1/w^2]", 2);
    std::vector<VarMask> sigs;
    for (const auto& term : t.terms())
        sigs.push_back(residue_signature(term));
    std::sort(sigs.begin(), sigs.end());
    CHECK(sigs == std::vector<VarMask>{0, bit(1), bit(1) | bit(2)});

    for (const auto& term : t.terms())
        CHECK(support_codim_lower_bound(term) == popcount(residue_signature(term)));
}

TEST_CASE("bidegree extraction")
{
    Current r = cur("pv[1/w]*res[1/z] + res[1/z^2]*res[1/w]", 2);
    CHECK(bidegree_part(r, 1) == cur("pv[1/w]*res[1/z]", 2));
    CHECK(bidegree_part(r, 2) == cur("res[1/z^2]*res[1/w]", 2));
    CHECK(bidegree_part(r, 0).is_zero());
    CHECK(bidegree_part(Current(2), 1).is_zero());
    CHECK(bidegrees(cur("dz1*dzb2*res[1/z]", 2)) == std::vector<Bidegree>{{1, 2}});
}

TEST_CASE("dbar on single factors")
{
    CHECK(dbar(cur("pv[1/z]", 1)) == cur("res[1/z]", 1));
    CHECK(dbar(cur("res[1/z]", 1)).is_zero());
    CHECK(dbar(cur("res[1/z^2]*res[1/w]", 2)).is_zero());
    CHECK(dbar(cur("conj(z^2)", 1)) == cur("2*conj(z)*dzb1", 1));
    // d(zbar) against the residue at w picks up the ordering sign
    CHECK(dbar(cur("conj(z)*res[1/w]", 2)) == cur("dzb1*res[1/w]", 2));
    CHECK(dbar(cur("conj(w)*res[1/z]", 2)) == cur("-res[1/z]*dzb2", 2));
}

TEST_CASE("wedge sign convention")
{
    CHECK(wedge_sign(bit(1), bit(2)) == 1);
    CHECK(wedge_sign(bit(2), bit(1)) == -1);
    CHECK(wedge_sign(bit(1), bit(1)) == 0);
    CHECK(wedge_sign(bit(3), bit(1) | bit(2)) == 1);
    CHECK(wedge_sign(bit(2), bit(1) | bit(3)) == -1);
    CHECK(cur("dzb2*dzb1", 2) == cur("-dzb1*dzb2", 2));
    CHECK(cur("dz1*dz1", 2).is_zero());
}

TEST_CASE("property: normalize is idempotent")
{
    Gen g(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = g.uniform(1, 4);
        Current t = g.current(n, 4);
        auto terms = raw_terms(t);
        CHECK(normalize(n, terms) == t);
        // feeding the same terms twice doubles every coefficient
        auto twice = terms;
        twice.insert(twice.end(), terms.begin(), terms.end());
        CHECK(normalize(n, twice) == t.scaled(2));
    }
}

TEST_CASE("property: dbar squares to zero")
{
    Gen g(12);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = g.uniform(1, 4);
        Current t = g.current(n, 4);
        CHECK(dbar(dbar(t)).is_zero());
    }
}

TEST_CASE("property: form degree bounds the residue signature")
{
    Gen g(13);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = g.uniform(1, 4);
        Current t = g.current(n, 4);
        for_each_piece(t, [&](const FactorVector& f, const FormMonomial& m, const Rational&) {
            CHECK(bidegree(f, m).q >= popcount(residue_mask(f)));
        });
    }
}

TEST_CASE("property: conjugates and dzbar at a residue variable kill the term")
{
    Gen g(14);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = g.uniform(1, 4);
        Current t = g.current(n, 4);
        for (const auto& term : t.terms()) {
            Current single = normalize(n, std::vector<ElementaryTerm>{term});
            const VarMask sig = residue_signature(term);
            for (int i = 0; i < n; ++i) {
                if (!((sig >> i) & 1))
                    continue;
                PolyCoeff conj(n), form(n);
                FormMonomial a = FormMonomial::unit(n), b = FormMonomial::unit(n);
                a.beta[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(g.uniform(1, 3));
                b.dzb = VarMask{1} << i;
                conj.add(a, 1);
                form.add(b, 1);
                CHECK(wedge(conj, single).is_zero());
                CHECK(wedge(form, single).is_zero());
            }
        }
    }
}

TEST_CASE("current arithmetic")
{
    Current a = cur("pv[1/z] + res[1/w]", 2), b = cur("res[1/w] - z*conj(w)", 2);
    CHECK(a - b == cur("pv[1/z] + z*conj(w)", 2));
    CHECK(-a + a == Current(2));
    CHECK(a.scaled(0).is_zero());
    CHECK(Current::one(2).piece_count() == 1);
    CHECK_THROWS_AS(a + Current(3), DimensionMismatch);
}
