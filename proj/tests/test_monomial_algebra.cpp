#include "rescalc/errors.hpp"
#include "rescalc/monomial_algebra.hpp"

#include "support/oracles.hpp"
#include "support/random.hpp"
#include "support/util.hpp"

#include <doctest.h>

using namespace rescalc;
using namespace rescalc::testing;

namespace {

MonPrime prime(std::initializer_list<int> vars1)
{
    VarMask m = 0;
    for (int i : vars1)
        m |= VarMask{1} << (i - 1);
    return MonPrime{m};
}

MonIdeal permute(const MonIdeal& a, const std::vector<int>& perm)
{
    std::vector<Monomial> gens;
    for (const auto& g : a.gens()) {
        Exponents e(g.exponents().size());
        for (std::size_t i = 0; i < e.size(); ++i)
            e[static_cast<std::size_t>(perm[i])] = g.exponents()[i];
        gens.emplace_back(e);
    }
    return MonIdeal(a.n(), gens);
}

MonPrime permute(MonPrime p, const std::vector<int>& perm)
{
    VarMask m = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if ((p.vars >> i) & 1)
            m |= VarMask{1} << perm[i];
    return MonPrime{m};
}

} // namespace

TEST_CASE("membership")
{
    MonIdeal j = ideal("z^2, z*w", 2);
    CHECK(j.contains(mono("z*w^3", 2)));
    CHECK_FALSE(j.contains(mono("z", 2)));
    CHECK(j.contains(parse_polynomial("z^3 - 2*z*w", 2)));
    CHECK_FALSE(j.contains(parse_polynomial("z^3 + w", 2)));
    CHECK(intersect(ideal("z", 2), ideal("z^2, w", 2)).contains(mono("z*w", 2)));
    CHECK(MonIdeal(2).contains(Polynomial(2)));
}

TEST_CASE("generators are minimized and printed in a fixed order")
{
    CHECK(to_string(ideal("z*w, z^2, z^2*w", 2)) == "z^2, z*w");
    CHECK(to_string(MonIdeal(2)) == "0");
    CHECK(MonIdeal::unit(2).is_unit());
    CHECK(ideal("z^2, z*w", 2).support() == 0b11);
}

TEST_CASE("intersection")
{
    CHECK(intersect(ideal("z", 2), ideal("z^2, w", 2)) == ideal("z^2, z*w", 2));
    CHECK(intersect(ideal("z", 2), MonIdeal::unit(2)) == ideal("z", 2));
    CHECK(intersect(ideal("z", 2), MonIdeal(2)).is_zero());
    CHECK(ideal("z", 2) + ideal("w", 2) == ideal("z, w", 2));
    CHECK_THROWS_AS(intersect(ideal("z", 2), ideal("z", 3)), DimensionMismatch);
}

TEST_CASE("associated primes and primary tests")
{
    CHECK(ass_primes(ideal("z^2, z*w", 2)) == std::vector<MonPrime>{prime({1}), prime({1, 2})});
    CHECK(is_primary(ideal("z^2, w", 2)) == prime({1, 2}));
    CHECK_FALSE(is_primary(ideal("z^2, z*w", 2)).has_value());
    CHECK(is_primary(MonIdeal(2)) == MonPrime{0});
    CHECK_THROWS_AS(is_primary(MonIdeal::unit(2)), PreconditionError);
    CHECK_THROWS_AS(ass_primes(MonIdeal(2)), PreconditionError);
}

TEST_CASE("primary decomposition examples")
{
    auto comps = primary_decomposition_oracle(ideal("z^2, z*w", 2));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].prime == prime({1}));
    CHECK(comps[0].ideal == ideal("z", 2));
    CHECK(comps[1].prime == prime({1, 2}));
    CHECK(is_primary(comps[1].ideal) == prime({1, 2}));
    CHECK(intersect(comps[0].ideal, comps[1].ideal) == ideal("z^2, z*w", 2));

    auto single = primary_decomposition_oracle(ideal("z^3", 1));
    REQUIRE(single.size() == 1);
    CHECK(single[0].ideal == ideal("z^3", 1));
    CHECK_THROWS_AS(primary_decomposition_oracle(MonIdeal::unit(1)), PreconditionError);
}

TEST_CASE("modules")
{
    MonModule j(2, {ideal("z^2", 2), ideal("w", 2)});
    CHECK(ass_primes(j) == std::vector<MonPrime>{prime({1}), prime({2})});
    CHECK(j.contains(std::vector<Polynomial>{parse_polynomial("z^2*w", 2), parse_polynomial("w - w", 2)}));
    CHECK_FALSE(j.contains(std::vector<Polynomial>{parse_polynomial("z", 2), Polynomial(2)}));
    CHECK_THROWS_AS(j.contains(std::vector<Polynomial>{Polynomial(2)}), DimensionMismatch);
    CHECK_FALSE(MonModule::full(2, 1).is_proper());
    CHECK_THROWS_AS(primary_decomposition_oracle(MonModule::full(2, 1)), PreconditionError);
    CHECK_THROWS_AS(MonModule(2, {}), PreconditionError);

    // a zero slot makes (0) associated
    MonModule z(2, {ideal("z", 2), MonIdeal(2)});
    CHECK(ass_primes(z) == std::vector<MonPrime>{MonPrime{0}, prime({1})});

    // rank one agrees with the ideal versions
    MonIdeal i = ideal("z^2, z*w", 2);
    MonModule m = MonModule::from_ideal(i);
    CHECK(ass_primes(m) == ass_primes(i));
    CHECK(is_primary(m) == is_primary(i));
    auto mc = primary_decomposition_oracle(m);
    auto ic = primary_decomposition_oracle(i);
    REQUIRE(mc.size() == ic.size());
    for (std::size_t k = 0; k < mc.size(); ++k) {
        CHECK(mc[k].prime == ic[k].prime);
        CHECK(mc[k].module.slot(0) == ic[k].ideal);
    }
}

TEST_CASE("property: oracle decompositions are sound and irredundant")
{
    Gen g(41);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = g.uniform(1, 4);
        MonIdeal i = g.ideal(n, 6, 4);
        CAPTURE(to_string(i));
        auto comps = primary_decomposition_oracle(i);
        std::vector<MonIdeal> qs;
        for (const auto& c : comps) {
            qs.push_back(c.ideal);
            CHECK(is_primary(c.ideal) == c.prime);
            if (n <= 3)
                CHECK(primary_by_definition(c.ideal));
        }
        CHECK(same_ideal(intersect_all(n, qs), i));
        for (std::size_t a = 0; a < comps.size(); ++a)
            for (std::size_t b = a + 1; b < comps.size(); ++b)
                CHECK(comps[a].prime != comps[b].prime);
        for (std::size_t k = 0; k < qs.size(); ++k) {
            auto rest = qs;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
            CHECK_FALSE(same_ideal(intersect_all(n, rest), i));
        }
        if (n <= 3)
            CHECK(is_primary(i).has_value() == primary_by_definition(i));
    }
}

TEST_CASE("property: intersection by box enumeration")
{
    Gen g(42);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = g.uniform(1, 3);
        MonIdeal a = g.ideal(n, 4, 4), b = g.ideal(n, 4, 4);
        MonIdeal c = intersect(a, b);
        for_each_in_box(n, 8, [&](const Monomial& m) {
            CHECK(divisible_by_any(c.gens(), m) == (divisible_by_any(a.gens(), m) && divisible_by_any(b.gens(), m)));
        });
    }
}

TEST_CASE("property: isolated components are unique")
{
    Gen g(43);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = g.uniform(1, 4);
        MonIdeal i = g.ideal(n, 6, 4);
        auto first = primary_decomposition_oracle(i);
        // a second run on a reshuffled generator list
        auto gens = i.gens();
        std::shuffle(gens.begin(), gens.end(), g.engine());
        gens.push_back(gens.front() * g.monomial(n, 2));
        auto second = primary_decomposition_oracle(MonIdeal(n, gens));
        REQUIRE(first.size() == second.size());
        for (std::size_t k = 0; k < first.size(); ++k) {
            CHECK(first[k].prime == second[k].prime);
            bool isolated = true;
            for (const auto& other : first)
                if (other.prime != first[k].prime && (other.prime.vars & first[k].prime.vars) == other.prime.vars)
                    isolated = false;
            if (isolated)
                CHECK(first[k].ideal == second[k].ideal);
        }
    }
}

TEST_CASE("property: associated primes are permutation invariant")
{
    Gen g(44);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = g.uniform(2, 4);
        MonIdeal i = g.ideal(n, 6, 4);
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            perm[static_cast<std::size_t>(k)] = k;
        std::shuffle(perm.begin(), perm.end(), g.engine());
        std::vector<MonPrime> mapped;
        for (auto p : ass_primes(i))
            mapped.push_back(permute(p, perm));
        std::sort(mapped.begin(), mapped.end());
        CHECK(ass_primes(permute(i, perm)) == mapped);
    }
}
