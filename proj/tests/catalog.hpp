// Shared fixtures for the test binaries: the catalog of semigroups and
// seeded random generators for elements and derivations.
#ifndef ONEPOINT_TESTS_CATALOG_HPP
#define ONEPOINT_TESTS_CATALOG_HPP

#include <random>
#include <string>
#include <vector>

#include <onepoint/classify.hpp>

namespace fixtures
{

using namespace onepoint;

inline SemigroupPtr nat() { return AffineSemigroup::build(1, {LatticeVector{1}}); }
inline SemigroupPtr nat2() { return AffineSemigroup::build(2, {LatticeVector{1, 0}, LatticeVector{0, 1}}); }
inline SemigroupPtr two_three() { return AffineSemigroup::build(1, {LatticeVector{2}, LatticeVector{3}}); }
inline SemigroupPtr wedge()
{
    return AffineSemigroup::build(2, {LatticeVector{1, 0}, LatticeVector{1, 1}, LatticeVector{1, 2}});
}
inline SemigroupPtr integers() { return AffineSemigroup::build(1, {LatticeVector{1}, LatticeVector{-1}}); }
inline SemigroupPtr two_minus_three() { return AffineSemigroup::build(1, {LatticeVector{2}, LatticeVector{-3}}); }

struct Named {
    std::string name;
    SemigroupPtr s;
};

inline std::vector<Named> pointed_catalog()
{
    return {{"N", nat()}, {"N^2", nat2()}, {"<2,3>", two_three()}, {"<(1,0),(1,1),(1,2)>", wedge()}};
}

inline LinearForm form(std::initializer_list<long> c)
{
    std::vector<Rational> q;
    for (long x : c) {
        q.emplace_back(x);
    }
    return LinearForm(std::move(q));
}

// Single homogeneous component x^a -> phi(a) x^(a+e), ambient coordinates.
inline Derivation homogeneous(const SemigroupPtr &s, const LatticeVector &e, const LinearForm &phi,
                              Carrier c = Carrier::compactified)
{
    return Derivation(s, c, {make_homogeneous(s, e, phi)});
}

// (S, e, phi) pairs of the classifier catalog.
struct CatalogEntry {
    std::string name;
    SemigroupPtr s;
    LatticeVector e;
    LinearForm phi;
};

inline std::vector<CatalogEntry> classifier_catalog()
{
    auto n = nat(), n2 = nat2(), t = two_three();
    std::vector<CatalogEntry> out;
    for (long e : {-1, 0, 1, 2}) {
        out.push_back({"N e=" + std::to_string(e), n, LatticeVector{e}, form({1})});
    }
    out.push_back({"N^2 e=(-1,0)", n2, LatticeVector{-1, 0}, form({1, 0})});
    out.push_back({"N^2 e=(1,0)", n2, LatticeVector{1, 0}, form({1, 0})});
    out.push_back({"N^2 e=(1,1)", n2, LatticeVector{1, 1}, form({1, 1})});
    out.push_back({"<2,3> e=2", t, LatticeVector{2}, form({1})});
    out.push_back({"<2,3> e=3", t, LatticeVector{3}, form({1})});
    return out;
}

class Random
{
public:
    explicit Random(unsigned seed) : m_gen(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(m_gen); }
    bool coin() { return uniform(0, 1) == 1; }

    template <class T>
    const T &pick(const std::vector<T> &v)
    {
        return v[std::size_t(uniform(0, long(v.size()) - 1))];
    }

    Rational rational()
    {
        Rational q(uniform(-5, 5), uniform(1, 3));
        q.canonicalize();
        return q;
    }

    Rational nonzero_rational()
    {
        Rational q = rational();
        return q == 0 ? Rational(1) : q;
    }

    AlgebraElement element(const SemigroupPtr &s, Carrier c, long max_terms = 4, long level = 3)
    {
        const auto pool = s->sublevel_m(level);
        AlgebraElement f(s, c);
        long terms = uniform(0, max_terms);
        for (long k = 0; k < terms; ++k) {
            if (c == Carrier::compactified && uniform(0, 4) == 0) {
                f += AlgebraElement::infinity(s, rational());
            } else {
                f += AlgebraElement::monomial_m(s, pick(pool), rational(), c);
            }
        }
        return f;
    }

    // Homogeneous component (M-coordinates) satisfying closure: a scaled root
    // (locally nilpotent), or a random degree in a small box with a random form.
    HomogeneousDerivation homogeneous(const SemigroupPtr &s)
    {
        const std::size_t r = s->rank();
        auto roots = s->roots_m(2);
        if (!roots.empty() && uniform(0, 2) == 0) {
            const Root &root = pick(roots);
            const auto &rho = s->dual_rays()[root.ray];
            return HomogeneousDerivation::make_m(s, root.degree, nonzero_rational() * LinearForm::from(rho));
        }
        for (int attempt = 0; attempt < 64; ++attempt) {
            LatticeVector e(r);
            for (std::size_t k = 0; k < r; ++k) {
                e[k] = uniform(-2, 2);
            }
            std::vector<Rational> phi;
            for (std::size_t k = 0; k < r; ++k) {
                phi.push_back(rational());
            }
            try {
                HomogeneousDerivation h = HomogeneousDerivation::make_m(s, e, LinearForm(phi));
                if (!h.form_m().is_zero()) {
                    return h;
                }
            } catch (const ClosureViolation &) {
            }
        }
        std::vector<Rational> phi(r, Rational(0));
        phi[0] = 1;
        return HomogeneousDerivation::make_m(s, LatticeVector(r), LinearForm(phi));
    }

    Derivation derivation(const SemigroupPtr &s, Carrier c, long max_components = 2)
    {
        std::vector<HomogeneousDerivation> hs;
        long k = uniform(1, max_components);
        for (long i = 0; i < k; ++i) {
            hs.push_back(homogeneous(s));
        }
        return Derivation(s, c, hs);
    }

private:
    std::mt19937 m_gen;
};

} // namespace fixtures

#endif
