#include <doctest.h>

#include "catalog.hpp"

using namespace onepoint;

namespace
{

std::vector<LatticeVector> box_vectors(std::size_t rank, long b)
{
    std::vector<LatticeVector> out{LatticeVector(rank)};
    for (std::size_t k = 0; k < rank; ++k) {
        std::vector<LatticeVector> next;
        for (const auto &v : out) {
            for (long x = -b; x <= b; ++x) {
                LatticeVector w = v;
                w[k] = x;
                next.push_back(w);
            }
        }
        out = std::move(next);
    }
    return out;
}

} // namespace

TEST_CASE("lattice vectors")
{
    LatticeVector a{4, -6};
    CHECK(a.content() == 2);
    CHECK_FALSE(a.is_primitive());
    CHECK(a.primitive() == LatticeVector{2, -3});
    CHECK_FALSE(LatticeVector(2).is_primitive());
    CHECK(a.to_string() == "[4,-6]");
    CHECK(LatticeVector{1, 2} + LatticeVector{3, -1} == LatticeVector{4, 1});
    CHECK(Integer(3) * LatticeVector{1, -1} == LatticeVector{3, -3});
    CHECK(LatticeVector{0, 5} < LatticeVector{1, 0});
}

TEST_CASE("lattice_basis")
{
    auto b = lattice_basis({LatticeVector{2}, LatticeVector{3}});
    CHECK(b.rank() == 1);
    CHECK(b.vectors() == std::vector<LatticeVector>{LatticeVector{1}});

    b = lattice_basis({LatticeVector{1, 0}, LatticeVector{0, 1}});
    CHECK(b.rank() == 2);

    b = lattice_basis({LatticeVector{2, 0}, LatticeVector{0, 2}});
    CHECK(b.rank() == 2);
    CHECK(b.vectors() == std::vector<LatticeVector>{LatticeVector{2, 0}, LatticeVector{0, 2}});

    // Rank below the ambient rank.
    b = lattice_basis({LatticeVector{1, 1, 0}, LatticeVector{2, 2, 0}, LatticeVector{0, 0, 0}});
    CHECK(b.rank() == 1);
    CHECK(b.ambient_rank() == 3);

    CHECK_THROWS_AS(lattice_basis({LatticeVector{1}, LatticeVector{1, 2}}), DimensionMismatch);
    CHECK_THROWS_AS(lattice_basis({}), InvalidArgument);
}

TEST_CASE("in_lattice")
{
    auto b = lattice_basis({LatticeVector{2}, LatticeVector{3}});
    auto c = in_lattice(LatticeVector{1}, b);
    REQUIRE(c);
    CHECK(b.from_coordinates(*c) == LatticeVector{1});

    auto even = lattice_basis({LatticeVector{2, 0}, LatticeVector{0, 2}});
    CHECK_FALSE(in_lattice(LatticeVector{1, 0}, even));
    CHECK(in_lattice(LatticeVector{0, 0}, even));
    CHECK(in_lattice(LatticeVector{4, -2}, even));

    // Round trip through coordinates on a skew lattice.
    auto skew = lattice_basis({LatticeVector{3, 1}, LatticeVector{1, 2}});
    for (const auto &v : box_vectors(2, 4)) {
        auto coords = in_lattice(v, skew);
        if (coords) {
            CHECK(skew.from_coordinates(*coords) == v);
        }
    }
}

TEST_CASE("pairing")
{
    CHECK(pairing(LatticeVector{1, 2}, LatticeVector{3, 1}) == 5);
    CHECK(pairing(LatticeVector(2), LatticeVector{7, -3}) == 0);
    for (long k = -3; k <= 3; ++k) {
        CHECK(pairing(LatticeVector{-1, k}, LatticeVector{1, 0}) == -1);
    }
    CHECK_THROWS_AS(pairing(LatticeVector{1}, LatticeVector{1, 0}), DimensionMismatch);
}

TEST_CASE("linear forms restrict and extend")
{
    auto b = lattice_basis({LatticeVector{1, 1, 0}, LatticeVector{0, 1, 1}});
    LinearForm f = fixtures::form({2, -1, 3});
    LinearForm g = b.restrict(f);
    for (const auto &v : b.vectors()) {
        auto c = b.coordinates(v);
        REQUIRE(c);
        CHECK(g(*c) == f(v));
    }
    CHECK(b.restrict(b.extend(g)) == g);

    CHECK(fixtures::form({2, -4}).multiple_of(LatticeVector{1, -2}) == Rational(2));
    CHECK_FALSE(fixtures::form({2, 1}).multiple_of(LatticeVector{1, 0}));
}

TEST_CASE("exact linear algebra helpers")
{
    CHECK(determinant({}) == 1);
    CHECK(determinant({{Integer(2), Integer(1)}, {Integer(7), Integer(4)}}) == 1);
    CHECK(determinant({{Integer(1), Integer(2)}, {Integer(2), Integer(4)}}) == 0);
    CHECK(rational_rank({LatticeVector{1, 2}, LatticeVector{2, 4}, LatticeVector{0, 0}}) == 1);

    auto x = solve_linear({{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}}, {Rational(3), Rational(1)});
    REQUIRE(x);
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);
    CHECK_FALSE(solve_linear({{Rational(2)}, {Rational(3)}}, {Rational(1), Rational(0)}));
}

TEST_CASE("fourier-motzkin")
{
    // x + y = 1, x >= 0, y >= 0
    std::vector<LinearConstraint> eq{{{Rational(1), Rational(1)}, Rational(1)}};
    std::vector<LinearConstraint> le{{{Rational(-1), Rational(0)}, Rational(0)}, {{Rational(0), Rational(-1)}, Rational(0)}};
    CHECK(fourier_motzkin_feasible(2, eq, le));
    // ... and x + y <= -1 as well
    le.push_back({{Rational(1), Rational(1)}, Rational(-1)});
    CHECK_FALSE(fourier_motzkin_feasible(2, eq, le));

    CHECK(nonnegative_combination_exists({LatticeVector{1, 0}, LatticeVector{1, 2}}, LatticeVector{5, 1}));
    CHECK_FALSE(nonnegative_combination_exists({LatticeVector{1, 0}, LatticeVector{1, 2}}, LatticeVector{0, 1}));
}

TEST_CASE("dual rays")
{
    CHECK(dual_rays(Cone({LatticeVector{1, 0}, LatticeVector{0, 1}}))
          == std::vector<LatticeVector>{LatticeVector{0, 1}, LatticeVector{1, 0}});
    CHECK(dual_rays(Cone({LatticeVector{1}})) == std::vector<LatticeVector>{LatticeVector{1}});
    CHECK(dual_rays(Cone({LatticeVector{1, 0}, LatticeVector{1, 2}}))
          == std::vector<LatticeVector>{LatticeVector{0, 1}, LatticeVector{2, -1}});
    // Redundant generator in the interior.
    CHECK(dual_rays(Cone({LatticeVector{1, 0}, LatticeVector{1, 1}, LatticeVector{1, 2}}))
          == std::vector<LatticeVector>{LatticeVector{0, 1}, LatticeVector{2, -1}});
    CHECK_THROWS_AS(Cone({LatticeVector{1, 1}, LatticeVector{2, 2}}), RankDeficient);
}

TEST_CASE("dual rays satisfy the duality check")
{
    std::vector<std::vector<LatticeVector>> cones{
        {LatticeVector{1, 0}, LatticeVector{0, 1}},
        {LatticeVector{1, 0}, LatticeVector{1, 2}},
        {LatticeVector{1, 0, 0}, LatticeVector{0, 1, 0}, LatticeVector{0, 0, 1}, LatticeVector{1, 1, -1}},
        {LatticeVector{1, 0, 1}, LatticeVector{0, 1, 1}, LatticeVector{-1, 0, 1}, LatticeVector{0, -1, 1}},
    };
    for (const auto &gens : cones) {
        Cone c(gens);
        const std::size_t r = c.dim();
        for (const auto &u : c.dual_rays()) {
            CHECK(u.is_primitive());
            std::vector<LatticeVector> tight;
            for (const auto &g : gens) {
                CHECK(pairing(g, u) >= 0);
                if (pairing(g, u) == 0) {
                    tight.push_back(g);
                }
            }
            CHECK(rational_rank(tight) == r - 1);
        }
        // Strong convexity <=> the rays span and their sum is positive on generators.
        LatticeVector sum(r);
        for (const auto &u : c.dual_rays()) {
            sum += u;
        }
        bool positive = rational_rank(c.dual_rays()) == r;
        for (const auto &g : gens) {
            positive = positive && pairing(g, sum) > 0;
        }
        CHECK(is_strongly_convex(c) == positive);
    }
}

TEST_CASE("strong convexity")
{
    CHECK(is_strongly_convex(Cone({LatticeVector{1, 0}, LatticeVector{0, 1}})));
    CHECK_FALSE(is_strongly_convex(Cone({LatticeVector{1}, LatticeVector{-1}})));
    CHECK_FALSE(is_strongly_convex(Cone({LatticeVector{2}, LatticeVector{-3}})));
    CHECK_FALSE(is_strongly_convex(Cone({LatticeVector{1, 0}, LatticeVector{-1, 0}, LatticeVector{0, 1}})));
}

TEST_CASE("in_cone")
{
    Cone c({LatticeVector{1, 0}, LatticeVector{1, 2}});
    CHECK(in_cone(LatticeVector{5, 1}, c));
    CHECK(in_cone(LatticeVector{0, 0}, c));
    CHECK_FALSE(in_cone(LatticeVector{0, 1}, c));
    CHECK_FALSE(in_cone(LatticeVector{-1}, Cone({LatticeVector{1}})));
}

TEST_CASE("in_cone agrees with direct feasibility on catalog cones")
{
    for (const auto &[name, s] : fixtures::pointed_catalog()) {
        CAPTURE(name);
        const Cone &c = s->cone();
        for (const auto &v : box_vectors(c.dim(), 4)) {
            CHECK(in_cone(v, c) == nonnegative_combination_exists(c.generators(), v));
        }
    }
}

TEST_CASE("demazure roots")
{
    Cone half({LatticeVector{1}});
    CHECK(demazure_roots(half, 0, 3) == std::vector<LatticeVector>{LatticeVector{-1}});

    Cone quadrant({LatticeVector{1, 0}, LatticeVector{0, 1}});
    // Rays are sorted: index 1 is (1,0).
    REQUIRE(quadrant.dual_rays()[1] == LatticeVector{1, 0});
    CHECK(demazure_roots(quadrant, 1, 2)
          == std::vector<LatticeVector>{LatticeVector{-1, 0}, LatticeVector{-1, 1}, LatticeVector{-1, 2}});
    CHECK(demazure_roots(quadrant, 1, 1) == std::vector<LatticeVector>{LatticeVector{-1, 0}, LatticeVector{-1, 1}});
    CHECK(demazure_roots(quadrant, 1, 0).empty());

    CHECK_THROWS_AS(demazure_roots(quadrant, 2, 1), InvalidArgument);
    CHECK_THROWS_AS(demazure_roots(Cone({LatticeVector{1}, LatticeVector{-1}}), 0, 1), NotPointed);
}

TEST_CASE("demazure roots are exact and monotone in the box")
{
    Cone c({LatticeVector{1, 0}, LatticeVector{1, 2}});
    for (std::size_t k = 0; k < c.dual_rays().size(); ++k) {
        std::vector<LatticeVector> previous;
        for (long b = 0; b <= 5; ++b) {
            auto roots = demazure_roots(c, k, b);
            for (const auto &e : roots) {
                CHECK(e.max_abs() <= b);
                for (std::size_t l = 0; l < c.dual_rays().size(); ++l) {
                    if (l == k) {
                        CHECK(pairing(e, c.dual_rays()[l]) == -1);
                    } else {
                        CHECK(pairing(e, c.dual_rays()[l]) >= 0);
                    }
                }
            }
            for (const auto &e : previous) {
                CHECK(std::find(roots.begin(), roots.end(), e) != roots.end());
            }
            CHECK(std::is_sorted(roots.begin(), roots.end()));
            previous = roots;
        }
    }
}
