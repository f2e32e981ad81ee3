#include <doctest.h>

#include "catalog.hpp"

using namespace onepoint;
using fixtures::form;
using fixtures::nat;

namespace
{

AlgebraElement x(const SemigroupPtr &s, long a, Carrier c = Carrier::compactified, Rational k = 1)
{
    return AlgebraElement::monomial(s, LatticeVector{a}, k, c);
}

AlgebraElement inf(const SemigroupPtr &s, Rational k = 1) { return AlgebraElement::infinity(s, k); }

Derivation d_dx(const SemigroupPtr &n, Carrier c = Carrier::compactified)
{
    return fixtures::homogeneous(n, LatticeVector{-1}, form({1}), c);
}

} // namespace

TEST_CASE("make_homogeneous")
{
    auto n = nat();
    Derivation d = d_dx(n, Carrier::semigroup);
    for (long a = 0; a <= 6; ++a) {
        CHECK(d.apply(x(n, a, Carrier::semigroup)) == (a == 0 ? AlgebraElement(n, Carrier::semigroup)
                                                              : x(n, a - 1, Carrier::semigroup, a)));
    }
    // Leibniz on x^2 * x^3.
    auto f = x(n, 2, Carrier::semigroup), g = x(n, 3, Carrier::semigroup);
    CHECK(d.apply(f * g) == f * d.apply(g) + g * d.apply(f));

    try {
        make_homogeneous(fixtures::two_three(), LatticeVector{-1}, form({1}));
        FAIL("expected ClosureViolation");
    } catch (const ClosureViolation &e) {
        CHECK(e.offending() == "[2]");
    }

    Derivation x2 = fixtures::homogeneous(n, LatticeVector{1}, form({1}), Carrier::semigroup);
    CHECK(x2.apply(x(n, 3, Carrier::semigroup)) == x(n, 4, Carrier::semigroup, 3));

    // phi vanishing on the offending generator is fine.
    CHECK_NOTHROW(make_homogeneous(fixtures::nat2(), LatticeVector{-1, 0}, form({1, 0})));
    CHECK_THROWS_AS(make_homogeneous(fixtures::nat2(), LatticeVector{-1, 0}, form({1, 1})), ClosureViolation);
    CHECK_THROWS_AS(make_homogeneous(fixtures::integers(), LatticeVector{1}, form({1})), NotPointed);
}

TEST_CASE("homogeneous degree and form are reported in ambient coordinates")
{
    auto w = fixtures::wedge();
    auto h = make_homogeneous(w, LatticeVector{1, 1}, form({0, 1}));
    CHECK(h.degree() == LatticeVector{1, 1});
    for (const auto &g : w->hilbert_basis()) {
        CHECK(h.form()(g) == pairing(g, LatticeVector{0, 1}));
    }
}

TEST_CASE("from_generator_images")
{
    auto n = nat();
    std::map<LatticeVector, AlgebraElement> images{
        {LatticeVector{1}, x(n, 2, Carrier::semigroup) + AlgebraElement::constant(n, 3)}};
    Derivation d = from_generator_images(n, images);
    REQUIRE(d.num_components() == 2);
    auto cs = d.components();
    CHECK(cs[0].degree() == LatticeVector{-1});
    CHECK(cs[0].form()(LatticeVector{1}) == 3);
    CHECK(cs[1].degree() == LatticeVector{1});
    CHECK(cs[1].form()(LatticeVector{1}) == 1);
    CHECK(d.apply(x(n, 2, Carrier::semigroup)) == 2 * x(n, 3, Carrier::semigroup) + 6 * x(n, 1, Carrier::semigroup));

    auto t = fixtures::two_three();
    std::map<LatticeVector, AlgebraElement> bad{{LatticeVector{2}, x(t, 2, Carrier::semigroup)},
                                                {LatticeVector{3}, AlgebraElement(t, Carrier::semigroup)}};
    CHECK_THROWS_AS(from_generator_images(t, bad), InconsistentImages);

    std::map<LatticeVector, AlgebraElement> zeros{{LatticeVector{2}, AlgebraElement(t, Carrier::semigroup)},
                                                  {LatticeVector{3}, AlgebraElement(t, Carrier::semigroup)}};
    CHECK(from_generator_images(t, zeros).is_zero());

    std::map<LatticeVector, AlgebraElement> off{{LatticeVector{4}, x(t, 4, Carrier::semigroup)}};
    CHECK_THROWS_AS(from_generator_images(t, off), InvalidArgument);
}

TEST_CASE("from_compactified_images")
{
    auto n = nat();
    Derivation d = from_compactified_images(n, {{LatticeVector{1}, AlgebraElement::constant(n, 1, Carrier::compactified) - inf(n)}});
    CHECK(d == d_dx(n));
    CHECK_THROWS_AS(from_compactified_images(n, {{LatticeVector{1}, AlgebraElement::constant(n, 1, Carrier::compactified)}}),
                    InconsistentImages);
}

TEST_CASE("apply and iterate on the compactification")
{
    auto n = nat();
    Derivation d = d_dx(n);
    CHECK(d.apply(x(n, 1)).to_string() == "1 - x^inf");
    CHECK(d.iterate(x(n, 3) - inf(n), 2) == 6 * (x(n, 1) - inf(n)));
    CHECK(d.apply(inf(n)).is_zero());
    CHECK(d.apply(AlgebraElement::constant(n, 1, Carrier::compactified)).is_zero());
    CHECK(d.iterate(x(n, 2), 0) == x(n, 2));
    CHECK_THROWS_AS(d.apply(x(n, 1, Carrier::semigroup)), CarrierMismatch);
    CHECK_THROWS_AS(d.iterate(x(n, 1), -1), InvalidArgument);
}

TEST_CASE("lift and project")
{
    auto n = nat();
    Derivation d = d_dx(n, Carrier::semigroup);
    CHECK(lift(d) == d_dx(n));
    CHECK(project(lift(d)) == d);
    CHECK(project(d_dx(n)).apply(x(n, 1, Carrier::semigroup)) == AlgebraElement::constant(n, 1));
    CHECK(lift(Derivation(n, Carrier::semigroup)).is_zero());
    CHECK(lift(Derivation(n, Carrier::semigroup)).carrier() == Carrier::compactified);
    CHECK_THROWS_AS(lift(d_dx(n)), CarrierMismatch);
    CHECK_THROWS_AS(project(d), CarrierMismatch);
}

TEST_CASE("is_lnd")
{
    auto n = nat();
    LndVerdict v = is_lnd(d_dx(n, Carrier::semigroup));
    CHECK(v.lnd);
    CHECK(v.method == LndVerdict::Method::closed_form);
    CHECK(v.ray == std::size_t(0));
    CHECK(v.scale == Rational(1));
    CHECK(d_dx(n, Carrier::semigroup).iterate(x(n, 4, Carrier::semigroup), 5).is_zero());

    LndVerdict w = is_lnd(fixtures::homogeneous(n, LatticeVector{1}, form({1}), Carrier::semigroup));
    CHECK_FALSE(w.lnd);
    REQUIRE(w.witness);
    CHECK(*w.witness == LatticeVector{1});
    CHECK(w.depth == 12);

    CHECK(is_lnd(Derivation(n, Carrier::semigroup)).lnd);
    CHECK(is_lnd(Derivation(n, Carrier::compactified)).lnd);
    CHECK(is_lnd(d_dx(n)).lnd);

    auto n2 = fixtures::nat2();
    CHECK(is_lnd(fixtures::homogeneous(n2, LatticeVector{-1, 0}, form({2, 0}), Carrier::semigroup)).scale == Rational(2));
    CHECK_FALSE(is_lnd(fixtures::homogeneous(n2, LatticeVector{0, 0}, form({1, 0}), Carrier::semigroup)).lnd);

    // Two nilpotent components that do not commute into a nilpotent sum.
    Derivation sum(n2, Carrier::semigroup,
                   {make_homogeneous(n2, LatticeVector{-1, 1}, form({1, 0})),
                    make_homogeneous(n2, LatticeVector{1, -1}, form({0, 1}))});
    LndVerdict o = is_lnd(sum);
    CHECK(o.method == LndVerdict::Method::bounded_oracle);
    CHECK_FALSE(o.lnd);
    // x d/dy + d/dx style sums that stay nilpotent.
    Derivation nil(n2, Carrier::semigroup,
                   {make_homogeneous(n2, LatticeVector{-1, 0}, form({1, 0})),
                    make_homogeneous(n2, LatticeVector{0, -1}, form({0, 1}))});
    CHECK(is_lnd(nil).lnd);
    CHECK(lnd_oracle(d_dx(n, Carrier::semigroup)).lnd);
}

TEST_CASE("iterate closed form matches composition")
{
    for (const auto &[name, s] : fixtures::pointed_catalog()) {
        CAPTURE(name);
        fixtures::Random rng(21);
        for (int k = 0; k < 20; ++k) {
            HomogeneousDerivation h = rng.homogeneous(s);
            Derivation d(s, Carrier::semigroup, {h});
            for (const auto &g : s->hilbert_basis_m()) {
                AlgebraElement f = AlgebraElement::monomial_m(s, g, 1, Carrier::semigroup);
                AlgebraElement it = f;
                for (long m = 1; m <= 8; ++m) {
                    it = d.apply(it);
                    Rational c = h.iterate_coefficient_m(g, m);
                    if (c == 0) {
                        CHECK(it.is_zero());
                    } else {
                        CHECK(it == AlgebraElement::monomial_m(s, g + Integer(m) * h.degree_m(), c, Carrier::semigroup));
                    }
                    CHECK(d.iterate(f, m) == it);
                }
            }
        }
    }
}

TEST_CASE("derivation properties on random inputs")
{
    fixtures::Random rng(22);
    for (const auto &[name, s] : fixtures::pointed_catalog()) {
        CAPTURE(name);
        for (int k = 0; k < 40; ++k) {
            Derivation base = rng.derivation(s, Carrier::semigroup);
            Derivation lifted = lift(base);
            for (Carrier c : {Carrier::semigroup, Carrier::compactified}) {
                const Derivation &d = c == Carrier::semigroup ? base : lifted;
                auto f = rng.element(s, c), g = rng.element(s, c);
                CHECK(d.apply(f * g) == f * d.apply(g) + g * d.apply(f));
            }
            CHECK(project(lifted) == base);
            CHECK(lifted.apply(AlgebraElement::infinity(s)).is_zero());
            auto f = rng.element(s, Carrier::compactified);
            AlgebraElement df = lifted.apply(f);
            CHECK(in_I_infty(df));
            AlgebraElement unit = AlgebraElement::constant(s, 1, Carrier::compactified)
                                  + AlgebraElement::infinity(s, rng.rational());
            CHECK(unit * df == df);

            if (!lifted.is_zero()) {
                bool two_terms = false;
                for (const auto &h : s->hilbert_basis()) {
                    two_terms = two_terms || lifted.apply(AlgebraElement::monomial(s, h, 1, Carrier::compactified)).num_terms() >= 2;
                }
                CHECK(two_terms);
            }

            // Each component moves every monomial by its own degree.
            for (const auto &h : base.components()) {
                Derivation single(s, Carrier::semigroup, {h});
                for (const auto &a : s->sublevel_m(3)) {
                    AlgebraElement img = single.apply(AlgebraElement::monomial_m(s, a, 1, Carrier::semigroup));
                    REQUIRE(img.num_terms() <= 1);
                    if (!img.is_zero()) {
                        CHECK(img.terms().begin()->first.vector() == a + h.degree_m());
                    }
                }
            }
        }
    }
}
