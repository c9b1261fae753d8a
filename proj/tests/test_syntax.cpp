#include "rescalc/errors.hpp"
#include "rescalc/syntax.hpp"

#include "support/random.hpp"
#include "support/util.hpp"

#include <doctest.h>

using namespace rescalc;
using namespace rescalc::testing;

TEST_CASE("parse and print currents")
{
    CHECK(to_string(cur("pv[1/w]*res[1/z]", 2)) == "res[1/z]*pv[1/w]");
    CHECK(to_string(cur("res[1/z^2]*res[1/w]", 2)) == "res[1/z^2]*res[1/w]");
    CHECK(to_string(cur("0", 2)) == "0");
    CHECK(cur("0", 2).is_zero());
    CHECK(to_string(cur("-3/2*z*conj(w)*dz2*dzb1*pv[1/u]", 3)) == "-3/2*z*conj(w)*dz2*dzb1*pv[1/u]");
    CHECK(cur("z1*pv[1/z2]", 2) == cur("z*pv[1/w]", 2));
    CHECK(cur("pv[1/z] res[1/w]", 2) == cur("pv[1/z]*res[1/w]", 2));
    CHECK(cur("2 pv[1/z]", 1) == cur("2*pv[1/z]", 1));
}

TEST_CASE("parse errors carry positions")
{
    try {
        parse_current("pv[1/z] + res[1/q]", 2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 17);
    }
    CHECK_THROWS_AS(parse_current("pv[1/z", 1), ParseError);
    CHECK_THROWS_AS(parse_current("z^99999999", 1), Error);
    CHECK_THROWS_AS(parse_current("dz3", 2), ParseError);
    CHECK_THROWS_AS(parse_current("pv[2/z]", 1), ParseError);
    CHECK_THROWS_AS(parse_current("w", 1), ParseError);
    CHECK_THROWS_AS(parse_current("z7", 6), ParseError);
    CHECK_NOTHROW(parse_current("z5", 5));
    CHECK_THROWS_AS(parse_current("z # w", 2), ParseError);
}

TEST_CASE("set expressions")
{
    OmegaSet a = parse_set("V(z) \\ V(z,w)", 2);
    CHECK(a.cells() == std::vector<VarMask>{0b01});
    CHECK(parse_set("full", 3) == OmegaSet::full(3));
    CHECK(parse_set("H(z2)", 2).cells() == std::vector<VarMask>{0b10, 0b11});
    CHECK(parse_set("W{} | W{1,2}", 2).cells() == std::vector<VarMask>{0b00, 0b11});
    CHECK(parse_set("~empty & (H(z) | H(w))", 2).cells() == std::vector<VarMask>{0b01, 0b10, 0b11});
    CHECK(to_string(parse_set("W{} | W{1,2}", 2)) == "W{} | W{1,2}");
    CHECK(to_string(parse_set("empty", 2)) == "empty");
    CHECK_THROWS_AS(parse_set("W{3}", 2), Error);
    CHECK_THROWS_AS(parse_set("H(z", 2), ParseError);
}

TEST_CASE("ideals and modules")
{
    CHECK(to_string(ideal("z^2, z*w", 2)) == "z^2, z*w");
    CHECK(to_string(ideal("w, z^2", 2)) == "z^2, w");
    CHECK(parse_monomial_list("z^2, w, z^2", 2).size() == 3);
    CHECK(parse_monomial_list("0", 2).empty());
    MonModule m = parse_module("e1: z^2, e2: w", 2);
    CHECK(m.rank() == 2);
    CHECK(to_string(m) == "e1: z^2, e2: w");
    CHECK(parse_module("e2: 0", 2).rank() == 2);
    CHECK(parse_module("e2: 0", 2).slot(0).is_zero());
    CHECK(to_string(parse_module("e1: 1, e2: z*w, e2: w^2", 2)) == "e1: 1, e2: z*w, e2: w^2");
    CHECK(parse_module("e1: z", 2, 3).rank() == 3);
    CHECK(to_string(MonPrime{0b11}, 2) == "(z, w)");
    CHECK(to_string(MonPrime{0}, 2) == "(0)");
    CHECK(to_string(parse_polynomial("w - z + 1/2", 2)) == "-z + w + 1/2");
}

TEST_CASE("property: printing then parsing returns the same current")
{
    Gen g(61);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = g.uniform(1, 6);
        Current t = g.current(n, 4);
        const std::string s = to_string(t);
        CAPTURE(s);
        CHECK(parse_current(s, n) == t);
        CHECK(to_string(parse_current(s, n)) == s);
    }
}
