#ifndef ONEPOINT_LATTICE_HPP
#define ONEPOINT_LATTICE_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <onepoint/errors.hpp>

namespace onepoint
{

using Integer = mpz_class;
using Rational = mpq_class;

// Point of a lattice Z^n in exact integer coordinates. Used both for
// elements of M and for elements of the dual lattice N.
class LatticeVector
{
public:
    LatticeVector() = default;
    explicit LatticeVector(std::size_t rank) : m_coords(rank, Integer(0)) {}
    explicit LatticeVector(std::vector<Integer> coords) : m_coords(std::move(coords)) {}
    LatticeVector(std::initializer_list<long> coords);

    std::size_t rank() const { return m_coords.size(); }
    const std::vector<Integer> &coords() const { return m_coords; }
    const Integer &operator[](std::size_t i) const { return m_coords[i]; }
    Integer &operator[](std::size_t i) { return m_coords[i]; }

    bool is_zero() const;
    // gcd of the coordinates; 0 for the zero vector.
    Integer content() const;
    // Zero vector is never primitive.
    bool is_primitive() const { return content() == 1; }
    LatticeVector primitive() const;
    // Max-norm.
    Integer max_abs() const;

    LatticeVector &operator+=(const LatticeVector &other);
    LatticeVector &operator-=(const LatticeVector &other);
    LatticeVector operator-() const;
    friend LatticeVector operator+(LatticeVector a, const LatticeVector &b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector &b) { return a -= b; }
    friend LatticeVector operator*(const Integer &k, const LatticeVector &v);

    friend bool operator==(const LatticeVector &a, const LatticeVector &b) { return a.m_coords == b.m_coords; }
    friend bool operator!=(const LatticeVector &a, const LatticeVector &b) { return !(a == b); }
    // Lexicographic; vectors of different rank order by rank first.
    friend bool operator<(const LatticeVector &a, const LatticeVector &b);

    // "[1,-2,0]"
    std::string to_string() const;

private:
    std::vector<Integer> m_coords;
};

std::ostream &operator<<(std::ostream &os, const LatticeVector &v);

// <m,u>. Throws DimensionMismatch.
Integer pairing(const LatticeVector &m, const LatticeVector &u);

// Rational linear form on a lattice, stored by its coefficient vector.
class LinearForm
{
public:
    LinearForm() = default;
    explicit LinearForm(std::vector<Rational> coeffs) : m_coeffs(std::move(coeffs)) {}
    static LinearForm zero(std::size_t rank) { return LinearForm(std::vector<Rational>(rank, Rational(0))); }
    static LinearForm from(const LatticeVector &u);

    std::size_t rank() const { return m_coeffs.size(); }
    const std::vector<Rational> &coeffs() const { return m_coeffs; }
    bool is_zero() const;
    Rational operator()(const LatticeVector &m) const;

    LinearForm &operator+=(const LinearForm &other);
    friend LinearForm operator*(const Rational &k, const LinearForm &f);
    friend bool operator==(const LinearForm &a, const LinearForm &b) { return a.m_coeffs == b.m_coeffs; }

    // If this form equals lambda * <., u> for some rational lambda, returns lambda.
    std::optional<Rational> multiple_of(const LatticeVector &u) const;

    std::string to_string() const;

private:
    std::vector<Rational> m_coeffs;
};

// Basis of the subgroup of Z^n generated by a finite set of vectors, kept in
// row echelon (Hermite) form so that coordinates can be read off by
// back-substitution.
class LatticeBasis
{
public:
    LatticeBasis() = default;

    std::size_t rank() const { return m_rows.size(); }
    std::size_t ambient_rank() const { return m_ambient; }
    const std::vector<LatticeVector> &vectors() const { return m_rows; }

    // Integer coordinates of a in this basis, or nullopt if a is not in the span over Z.
    std::optional<LatticeVector> coordinates(const LatticeVector &a) const;
    LatticeVector from_coordinates(const LatticeVector &c) const;

    // Pulls an ambient linear form back to basis coordinates.
    LinearForm restrict(const LinearForm &ambient) const;
    // Some ambient form whose restriction is the given form (free directions set to zero).
    LinearForm extend(const LinearForm &on_basis) const;

private:
    friend LatticeBasis lattice_basis(const std::vector<LatticeVector> &generators);

    std::size_t m_ambient = 0;
    std::vector<LatticeVector> m_rows;
    std::vector<std::size_t> m_pivots;
};

// Throws DimensionMismatch, or InvalidArgument for an empty list.
LatticeBasis lattice_basis(const std::vector<LatticeVector> &generators);

// Returns the integer coordinates when a lies in the lattice.
std::optional<LatticeVector> in_lattice(const LatticeVector &a, const LatticeBasis &basis);

// Exact rational linear algebra helpers.
Integer determinant(std::vector<std::vector<Integer>> m);
std::size_t rational_rank(const std::vector<LatticeVector> &vectors);
// Some solution x of A x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

// Fourier-Motzkin feasibility of { x : eq_i . x = eq_rhs_i, le_j . x <= le_rhs_j }.
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Rational rhs;
};
bool fourier_motzkin_feasible(std::size_t num_vars, std::vector<LinearConstraint> equalities,
                              std::vector<LinearConstraint> inequalities);

// Does target = sum alpha_k g_k admit a rational solution with all alpha_k >= 0?
bool nonnegative_combination_exists(const std::vector<LatticeVector> &generators, const LatticeVector &target);

// Polyhedral cone generated by lattice vectors of full rational rank.
class Cone
{
public:
    // Throws RankDeficient when the generators do not span the ambient space.
    explicit Cone(std::vector<LatticeVector> generators);

    std::size_t dim() const { return m_dim; }
    const std::vector<LatticeVector> &generators() const { return m_generators; }
    // Primitive facet normals, sorted lexicographically.
    const std::vector<LatticeVector> &dual_rays() const { return m_dual_rays; }

private:
    std::size_t m_dim = 0;
    std::vector<LatticeVector> m_generators;
    std::vector<LatticeVector> m_dual_rays;
};

std::vector<LatticeVector> dual_rays(const Cone &cone);
// Decided by Fourier-Motzkin on sum alpha_k a_k = 0, alpha >= 0, sum alpha_k = 1.
bool is_strongly_convex(const Cone &cone);
// Decided through the dual rays.
bool in_cone(const LatticeVector &a, const Cone &cone);
// e with <e,rho> = -1 on the chosen dual ray, >= 0 on the others, max-norm <= box.
std::vector<LatticeVector> demazure_roots(const Cone &cone, std::size_t ray_index, long box);

} // namespace onepoint

#endif
