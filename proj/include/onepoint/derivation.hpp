#ifndef ONEPOINT_DERIVATION_HPP
#define ONEPOINT_DERIVATION_HPP

#include <map>
#include <optional>
#include <vector>

#include <onepoint/algebra.hpp>

namespace onepoint
{

// x^a -> phi(a) x^(a+e) on C[S]. Construction checks that h + e lies in S for
// every Hilbert basis element h with phi(h) != 0, which is enough for the
// whole of S.
class HomogeneousDerivation
{
public:
    // Degree and form in ambient coordinates. Throws ClosureViolation, or
    // NotInSemigroup when e is not in the lattice M.
    static HomogeneousDerivation make(SemigroupPtr s, const LatticeVector &degree, const LinearForm &form);
    static HomogeneousDerivation make_m(SemigroupPtr s, LatticeVector degree, LinearForm form);

    const SemigroupPtr &semigroup_ptr() const { return m_semigroup; }
    const LatticeVector &degree_m() const { return m_degree; }
    const LinearForm &form_m() const { return m_form; }
    LatticeVector degree() const;
    // An ambient form restricting to form_m().
    LinearForm form() const;

    // Coefficient of x^(a+n e) in the n-th iterate applied to x^a: prod_{k<n} phi(a + k e).
    Rational iterate_coefficient_m(const LatticeVector &a, long n) const;

private:
    HomogeneousDerivation(SemigroupPtr s, LatticeVector degree, LinearForm form)
        : m_semigroup(std::move(s)), m_degree(std::move(degree)), m_form(std::move(form))
    {
    }

    SemigroupPtr m_semigroup;
    LatticeVector m_degree;
    LinearForm m_form;
};

inline HomogeneousDerivation make_homogeneous(SemigroupPtr s, const LatticeVector &degree, const LinearForm &form)
{
    return HomogeneousDerivation::make(std::move(s), degree, form);
}

// Derivation on C[S] or C[S_inf], held as its homogeneous decomposition with
// pairwise distinct degrees. Over C[S_inf] it is the lift
//   x^a -> (1 - x^inf) * (sum of components applied to x^a),  x^inf -> 0,
// so no inf data is stored.
class Derivation
{
public:
    // The zero derivation.
    Derivation(SemigroupPtr s, Carrier carrier);
    // Components of equal degree are added; zero components are dropped.
    Derivation(SemigroupPtr s, Carrier carrier, const std::vector<HomogeneousDerivation> &components);

    const AffineSemigroup &semigroup() const { return *m_semigroup; }
    const SemigroupPtr &semigroup_ptr() const { return m_semigroup; }
    Carrier carrier() const { return m_carrier; }
    bool is_zero() const { return m_components.empty(); }
    std::size_t num_components() const { return m_components.size(); }
    // Ordered by degree (M-coordinates).
    std::vector<HomogeneousDerivation> components() const;
    const std::map<LatticeVector, LinearForm> &component_map() const { return m_components; }

    // Throws CarrierMismatch.
    AlgebraElement apply(const AlgebraElement &f) const;
    AlgebraElement iterate(const AlgebraElement &f, long n) const;

    friend bool operator==(const Derivation &a, const Derivation &b)
    {
        return a.m_semigroup == b.m_semigroup && a.m_carrier == b.m_carrier && a.m_components == b.m_components;
    }

private:
    SemigroupPtr m_semigroup;
    Carrier m_carrier;
    std::map<LatticeVector, LinearForm> m_components;
};

inline AlgebraElement apply(const Derivation &d, const AlgebraElement &f) { return d.apply(f); }
inline AlgebraElement iterate(const Derivation &d, const AlgebraElement &f, long n) { return d.iterate(f, n); }

// Images of the Hilbert basis (ambient keys) in C[S]; missing keys map to 0.
// Throws InvalidArgument for keys outside the Hilbert basis, InconsistentImages
// when some degree admits no linear form matching the prescribed values.
Derivation from_generator_images(SemigroupPtr s, const std::map<LatticeVector, AlgebraElement> &images);
// Images in C[S_inf]. Each image must have coefficient sum zero; the result
// is the lift of the derivation given by the finite parts.
Derivation from_compactified_images(SemigroupPtr s, const std::map<LatticeVector, AlgebraElement> &images);

// Throws CarrierMismatch unless the input lives on C[S].
Derivation lift(const Derivation &d);
// Recovers the derivation on C[S] from the images of the Hilbert basis with
// their inf terms removed. Throws CarrierMismatch unless the input lives on C[S_inf].
Derivation project(const Derivation &d);

struct LndVerdict {
    enum class Method { closed_form, bounded_oracle };

    bool lnd = false;
    Method method = Method::closed_form;
    // Depth of the bounded iteration, 0 when none ran.
    long depth = 0;
    // Closed form: distinguished ray of the root and phi = scale * <., rho>.
    std::optional<std::size_t> ray;
    std::optional<Rational> scale;
    // Hilbert basis element (ambient) whose iterates stay nonzero up to depth.
    std::optional<LatticeVector> witness;
};

// Zero or a single component: LND iff the degree is a Demazure root of S and
// the form is proportional to the distinguished ray. Several components: the
// bounded oracle. Over C[S_inf] the verdict is that of the projection.
LndVerdict is_lnd(const Derivation &d, long depth = 12);
// Iterates d on every x^h, h in the Hilbert basis, up to depth.
LndVerdict lnd_oracle(const Derivation &d, long depth = 12);

} // namespace onepoint

#endif
