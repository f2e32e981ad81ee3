#include <doctest.h>

#include <onepoint/io.hpp>

#include "catalog.hpp"

using namespace onepoint;
using fixtures::form;
using fixtures::nat;

TEST_CASE("parse_json reports line and column")
{
    try {
        parse_json("{\n  \"ambient_rank\": 1,\n  \"generators\": [[1]\n}");
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(e.line() == 4);
        CHECK(e.column() >= 1);
    }
    CHECK(parse_json("[1, 2]").size() == 2);
}

TEST_CASE("rationals and vectors")
{
    CHECK(rational_to_json(Rational(-3, 4)) == "-3/4");
    CHECK(rational_to_json(Rational(5)) == "5");
    CHECK(rational_from_json(Json("6/4")) == Rational(3, 2));
    CHECK(rational_from_json(Json(7)) == 7);
    CHECK_THROWS(rational_from_json(Json("1/0")));
    CHECK_THROWS(rational_from_json(Json("abc")));
    CHECK_THROWS(rational_from_json(Json(0.5)));

    CHECK(vector_from_json(parse_json("[1,-2]"), 2) == LatticeVector{1, -2});
    CHECK(vector_to_json(LatticeVector{3, 0}).dump() == "[3,0]");
    CHECK_THROWS_AS(vector_from_json(parse_json("[1]"), 2), DimensionMismatch);
}

TEST_CASE("semigroup schema")
{
    auto s = semigroup_from_json(parse_json(R"({"ambient_rank": 1, "generators": [[2], [3]]})"));
    CHECK(s->hilbert_basis() == std::vector<LatticeVector>{LatticeVector{2}, LatticeVector{3}});
    CHECK(semigroup_from_json(semigroup_to_json(*s))->generators() == s->generators());

    CHECK_THROWS_AS(semigroup_from_json(parse_json(R"({"generators": [[1]]})")), InvalidArgument);
    CHECK_THROWS_AS(semigroup_from_json(parse_json(R"({"ambient_rank": 2, "generators": [[1]]})")), DimensionMismatch);
    CHECK_THROWS_AS(semigroup_from_json(parse_json(R"({"ambient_rank": 1, "generators": "x"})")), InvalidArgument);
}

TEST_CASE("element syntax")
{
    auto n = nat();
    AlgebraElement f = parse_element(n, "6*x^[1] - 6*x^inf", Carrier::compactified);
    CHECK(f.to_string() == "6*x^[1] - 6*x^inf");
    CHECK(parse_element(n, "x^3 − x^inf", Carrier::compactified) == parse_element(n, "x^[3] - x^inf", Carrier::compactified));
    CHECK(parse_element(n, "1/2 - x^2", Carrier::semigroup).to_string() == "1/2 - x^[2]");
    CHECK(parse_element(n, "0", Carrier::semigroup).is_zero());

    auto n2 = fixtures::nat2();
    CHECK(parse_element(n2, "3*x^[1,2]", Carrier::semigroup)
          == AlgebraElement::monomial(n2, LatticeVector{1, 2}, 3, Carrier::semigroup));
    CHECK_THROWS_AS(parse_element(n2, "x^3", Carrier::semigroup), ParseError);
    CHECK_THROWS_AS(parse_element(n, "x^inf", Carrier::semigroup), ParseError);
    CHECK_THROWS_AS(parse_element(fixtures::two_three(), "x^1", Carrier::semigroup), NotInSemigroup);
    CHECK_THROWS_AS(parse_element(n, "2*", Carrier::semigroup), ParseError);
    CHECK_THROWS_AS(parse_element(n, "x^[1", Carrier::semigroup), ParseError);
}

TEST_CASE("elements round trip")
{
    fixtures::Random rng(31);
    for (const auto &[name, s] : fixtures::pointed_catalog()) {
        CAPTURE(name);
        for (Carrier c : {Carrier::semigroup, Carrier::compactified}) {
            for (int k = 0; k < 30; ++k) {
                AlgebraElement f = rng.element(s, c);
                CHECK(element_from_json(s, element_to_json(f)) == f);
                CHECK(parse_element(s, f.to_string(), c) == f);
            }
        }
    }
}

TEST_CASE("derivation specs")
{
    auto n = nat();
    Json comp = parse_json(R"({"components": [{"degree": [-1], "phi": ["1"]}]})");
    // Carrier S unless asked for otherwise.
    CHECK(derivation_from_json(n, comp) == fixtures::homogeneous(n, LatticeVector{-1}, form({1}), Carrier::semigroup));
    Json lifted = parse_json(R"({"carrier": "S_inf", "components": [{"degree": [-1], "phi": [1]}]})");
    Derivation d = derivation_from_json(n, lifted);
    CHECK(d == fixtures::homogeneous(n, LatticeVector{-1}, form({1})));

    Json images = parse_json(R"({"images": {"[1]": "1 - x^inf"}})");
    CHECK(derivation_from_json(n, images) == d);
    Json two = parse_json(R"({"carrier": "S", "images": {"[1]": "x^2 + 3"}})");
    CHECK(derivation_from_json(n, two).num_components() == 2);

    CHECK_THROWS(derivation_from_json(n, parse_json(R"({"components": [], "images": {}})")));
    CHECK_THROWS(derivation_from_json(n, parse_json(R"({})")));
    CHECK_THROWS_AS(derivation_from_json(fixtures::two_three(), parse_json(R"({"components": [{"degree": [-1], "phi": [1]}]})")),
                    ClosureViolation);

    fixtures::Random rng(32);
    for (const auto &[name, s] : fixtures::pointed_catalog()) {
        CAPTURE(name);
        for (int k = 0; k < 20; ++k) {
            Derivation r = rng.derivation(s, k % 2 ? Carrier::semigroup : Carrier::compactified);
            CHECK(derivation_from_json(s, derivation_to_json(r)) == r);
        }
    }
}

TEST_CASE("quotients round trip")
{
    FiniteQuotient q = build_quotient(*fixtures::two_three(), 3);
    Json j = quotient_to_json(q);
    CHECK(j["elements"].back() == "inf");
    FiniteQuotient back = quotient_from_json(j);
    CHECK(back.elements() == q.elements());
    CHECK(back.table() == q.table());
    CHECK(back.level() == 3);
}

TEST_CASE("bounds")
{
    OracleBounds b = parse_bounds("2,5,7,3");
    CHECK(b == OracleBounds{2, 5, 7, 3});
    CHECK(bounds_from_json(bounds_to_json(b)) == b);
    CHECK_THROWS(parse_bounds("1,2,3"));
    CHECK_THROWS(parse_bounds("1,2,x,4"));
    CHECK_THROWS(parse_bounds("1,-2,3,4"));
}

TEST_CASE("verdicts round trip")
{
    for (const auto &entry : fixtures::classifier_catalog()) {
        CAPTURE(entry.name);
        IntegrabilityVerdict v = classify_integrable(fixtures::homogeneous(entry.s, entry.e, entry.phi));
        Json j = verdict_to_json(v, OracleBounds{});
        CHECK(j["verdict"] == verdict_name(v.verdict));
        CHECK(j["bounds"]["j_max"] == 8);
        IntegrabilityVerdict back = verdict_from_json(entry.s, j);
        CHECK(back.verdict == v.verdict);
        CHECK(back.branch == v.branch);
        CHECK(back.witness.has_value() == v.witness.has_value());
        if (v.witness) {
            CHECK(back.witness->element == v.witness->element);
            CHECK(back.witness->iterations == v.witness->iterations);
            CHECK(back.witness->level_i == v.witness->level_i);
            CHECK(back.witness->level_j == v.witness->level_j);
        }
    }
    IntegrabilityVerdict none = classify_integrable(Derivation(nat(), Carrier::compactified));
    Json j = verdict_to_json(none);
    CHECK(j["witness"].is_null());
    CHECK(j["verdict"] == "out-of-scope");
}
