#ifndef ONEPOINT_SEMIGROUP_HPP
#define ONEPOINT_SEMIGROUP_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include <onepoint/lattice.hpp>

namespace onepoint
{

// Largest lattice rank M accepted at construction; facet enumeration is
// combinatorial in the rank.
inline constexpr std::size_t max_semigroup_rank = 6;

// a = sum over k of multiplicities[k] * hilbert_basis()[k].
struct Representation {
    std::map<std::size_t, Integer> multiplicities;

    Integer length() const;
};

// Demazure root: degree e (ambient coordinates) and the index of its
// distinguished dual ray.
struct Root {
    LatticeVector degree;
    std::size_t ray = 0;

    friend bool operator==(const Root &a, const Root &b) { return a.degree == b.degree && a.ray == b.ray; }
};

class AffineSemigroup;
using SemigroupPtr = std::shared_ptr<const AffineSemigroup>;

// Finitely generated submonoid S of Z^n. Every geometric computation is done
// in coordinates of the lattice M = ZS (the "M-coordinates", suffix _m);
// the public vector-valued API takes and returns ambient coordinates.
//
// Values are immutable after build(). The only mutable state is the memo
// table for the length function, which is guarded by a mutex.
class AffineSemigroup
{
    struct private_tag {
    };

public:
    AffineSemigroup(private_tag, std::size_t ambient_rank, std::vector<LatticeVector> generators);

    // Throws InvalidArgument (empty list, rank above max_semigroup_rank) or DimensionMismatch.
    static SemigroupPtr build(std::size_t ambient_rank, std::vector<LatticeVector> generators);

    std::size_t ambient_rank() const { return m_ambient_rank; }
    std::size_t rank() const { return m_basis.rank(); }
    // Deduplicated nonzero generators, in input order.
    const std::vector<LatticeVector> &generators() const { return m_generators; }
    const LatticeBasis &lattice() const { return m_basis; }
    // Cone of the generators in M-coordinates.
    const Cone &cone() const { return m_cone; }
    // Primitive facet normals of the cone, in coordinates dual to the M-basis.
    const std::vector<LatticeVector> &dual_rays() const { return m_cone.dual_rays(); }
    bool is_pointed() const { return m_pointed; }

    // u in N with <g,u> >= 1 on every generator. Throws NotPointed.
    const LatticeVector &positivity() const;
    // Sorted lexicographically (ambient coordinates). Throws NotPointed.
    const std::vector<LatticeVector> &hilbert_basis() const;
    const std::vector<LatticeVector> &hilbert_basis_m() const;

    std::optional<LatticeVector> to_m(const LatticeVector &ambient) const;
    LatticeVector from_m(const LatticeVector &coords) const;
    // <a,u> for a in M-coordinates.
    Integer height_m(const LatticeVector &a) const;
    // max over the Hilbert basis of <h,u>.
    const Integer &max_hilbert_height() const;

    // Some representation in the Hilbert basis, or nullopt if a is not in S.
    std::optional<Representation> member(const LatticeVector &a) const;
    bool contains(const LatticeVector &a) const;
    bool contains_m(const LatticeVector &a) const;

    // Ordered pairs (b, c) of elements of S with b + c = a. Throws NotInSemigroup.
    std::vector<std::pair<LatticeVector, LatticeVector>> decompositions(const LatticeVector &a) const;

    // Length function: the largest number of Hilbert basis summands of a.
    // Throws NotInSemigroup.
    long s_value(const LatticeVector &a) const;
    // nullopt when a is not in S.
    std::optional<long> s_value_m(const LatticeVector &a) const;

    // a in M and in the cone, i.e. a in the saturation.
    bool sat_member(const LatticeVector &a) const;
    bool sat_member_m(const LatticeVector &a) const;

    // Elements of S with <a,u> <= bound, M-coordinates, lexicographic.
    std::vector<LatticeVector> elements_up_to_height_m(const Integer &bound) const;
    // H_i = { a in S : s(a) <= i }, M-coordinates, ordered by (s, lexicographic).
    std::vector<LatticeVector> sublevel_m(long level) const;

    // Demazure roots of S within max-norm box (M-coordinates), grouped by ray.
    std::vector<Root> roots(long box) const;
    std::vector<Root> roots_m(long box) const;
    // Throws InvalidArgument when e is not a root within the box.
    bool is_root_reducible(const LatticeVector &e, long box) const;

private:
    void require_pointed(const char *op) const;
    long s_value_locked(const LatticeVector &a) const;

    std::size_t m_ambient_rank;
    std::vector<LatticeVector> m_generators;
    LatticeBasis m_basis;
    std::vector<LatticeVector> m_generators_m;
    Cone m_cone;
    bool m_pointed = false;
    LatticeVector m_positivity;
    std::vector<LatticeVector> m_hilbert;
    std::vector<LatticeVector> m_hilbert_m;
    Integer m_max_height;

    mutable std::mutex m_cache_mutex;
    mutable std::map<LatticeVector, long> m_s_cache;
};

// Free-function spellings of the semigroup operations.
inline bool is_pointed(const AffineSemigroup &s) { return s.is_pointed(); }
inline const std::vector<LatticeVector> &hilbert_basis(const AffineSemigroup &s) { return s.hilbert_basis(); }
inline long s_value(const AffineSemigroup &s, const LatticeVector &a) { return s.s_value(a); }
inline bool sat_member(const AffineSemigroup &s, const LatticeVector &a) { return s.sat_member(a); }

} // namespace onepoint

#endif
