#ifndef ONEPOINT_ALGEBRA_HPP
#define ONEPOINT_ALGEBRA_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <onepoint/semigroup.hpp>

namespace onepoint
{

// Which algebra an element lives in: C[S] or C[S_inf].
enum class Carrier { semigroup, compactified };

const char *carrier_name(Carrier c);

// Exponent of a monomial: a lattice point of S (M-coordinates) or inf.
// inf orders after every lattice point.
class Exponent
{
public:
    explicit Exponent(LatticeVector m) : m_vector(std::move(m)) {}
    static Exponent infinity()
    {
        Exponent e;
        e.m_infinite = true;
        return e;
    }

    bool is_infinity() const { return m_infinite; }
    // Throws InvalidArgument for inf.
    const LatticeVector &vector() const;

    friend bool operator==(const Exponent &a, const Exponent &b)
    {
        return a.m_infinite == b.m_infinite && a.m_vector == b.m_vector;
    }
    friend bool operator<(const Exponent &a, const Exponent &b)
    {
        if (a.m_infinite != b.m_infinite) {
            return b.m_infinite;
        }
        return a.m_vector < b.m_vector;
    }

private:
    Exponent() = default;
    bool m_infinite = false;
    LatticeVector m_vector;
};

// Finite sum of c_a x^a (plus c x^inf over S_inf) with exact rational
// coefficients. No zero coefficient is ever stored. Requires a pointed S.
class AlgebraElement
{
public:
    using Terms = std::map<Exponent, Rational>;

    // The zero element.
    AlgebraElement(SemigroupPtr s, Carrier carrier);

    static AlgebraElement constant(SemigroupPtr s, const Rational &c, Carrier carrier = Carrier::semigroup);
    // c x^a for a in ambient coordinates. Throws NotInSemigroup.
    static AlgebraElement monomial(SemigroupPtr s, const LatticeVector &a, const Rational &c = 1,
                                   Carrier carrier = Carrier::semigroup);
    static AlgebraElement monomial_m(SemigroupPtr s, const LatticeVector &a, const Rational &c = 1,
                                     Carrier carrier = Carrier::semigroup);
    // c x^inf in C[S_inf].
    static AlgebraElement infinity(SemigroupPtr s, const Rational &c = 1);
    // Checks every exponent; inf is rejected over C[S].
    static AlgebraElement from_terms(SemigroupPtr s, Carrier carrier, const Terms &terms);

    const AffineSemigroup &semigroup() const { return *m_semigroup; }
    const SemigroupPtr &semigroup_ptr() const { return m_semigroup; }
    Carrier carrier() const { return m_carrier; }
    const Terms &terms() const { return m_terms; }
    std::size_t num_terms() const { return m_terms.size(); }
    bool is_zero() const { return m_terms.empty(); }

    Rational coefficient(const Exponent &e) const;
    Rational infinity_coefficient() const { return coefficient(Exponent::infinity()); }
    Rational coefficient_sum() const;
    // Drops the inf term; the carrier is kept.
    AlgebraElement finite_part() const;
    // Same element viewed in C[S_inf], or back in C[S] (throws if an inf term is present).
    AlgebraElement with_carrier(Carrier carrier) const;

    // Adds c x^e without a membership check; the caller guarantees e is in S
    // (or is inf over S_inf).
    void accumulate(const Exponent &e, const Rational &c);

    AlgebraElement &operator+=(const AlgebraElement &other);
    AlgebraElement &operator-=(const AlgebraElement &other);
    AlgebraElement &operator*=(const Rational &k);
    AlgebraElement operator-() const;
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement &b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement &b) { return a -= b; }
    friend AlgebraElement operator*(const Rational &k, AlgebraElement a) { return a *= k; }
    friend AlgebraElement operator*(const AlgebraElement &a, const AlgebraElement &b);
    friend bool operator==(const AlgebraElement &a, const AlgebraElement &b);
    friend bool operator!=(const AlgebraElement &a, const AlgebraElement &b) { return !(a == b); }

    // Terms ordered by (length, lexicographic exponent), inf last.
    std::vector<std::pair<Exponent, Rational>> ordered_terms() const;
    // "c1*x^[a1] + ... + c*x^inf", exponents in ambient coordinates.
    std::string to_string() const;

private:
    void check_compatible(const AlgebraElement &other) const;

    SemigroupPtr m_semigroup;
    Carrier m_carrier;
    Terms m_terms;
};

std::ostream &operator<<(std::ostream &os, const AlgebraElement &f);

// psi_i : C[S_inf] -> C[S_i]. The image is returned as an element of C[S_inf]
// supported on H_i and inf.
AlgebraElement psi(const AlgebraElement &f, long level);
// Product in C[S_i] of two elements supported on S_i.
AlgebraElement quotient_mul(const AlgebraElement &f, const AlgebraElement &g, long level);
// f in a_i = ker psi_i.
bool in_ideal(const AlgebraElement &f, long level);
// f x^inf = 0, i.e. the coefficients sum to zero.
bool in_I_infty(const AlgebraElement &f);

// Writes f as sum of lambda_b (x^b - x^inf) over b with s(b) > level, or
// returns nullopt when no such combination exists.
std::optional<std::vector<std::pair<LatticeVector, Rational>>> ideal_combination(const AlgebraElement &f,
                                                                                 long level);

// Truncation (f_0, ..., f_L) of an element of the completion: f_l lives in C[S_l].
struct CompletionTower {
    SemigroupPtr semigroup;
    std::vector<AlgebraElement> levels;
};

// Throws InvalidArgument if some level is not supported on S_l.
CompletionTower tower_truncate(SemigroupPtr s, const std::function<AlgebraElement(long)> &rule, long top_level);

struct TowerCompatibility {
    bool compatible = true;
    long witness_level = -1;
};
TowerCompatibility tower_compatible(const CompletionTower &tower);

struct TowerAlgebraicity {
    bool algebraic = false;
    // Smallest l such that the finite parts of levels l..L all coincide.
    long stabilized_at = 0;
};
// Throws IncompatibleTower.
TowerAlgebraicity tower_is_algebraic(const CompletionTower &tower);

} // namespace onepoint

#endif
