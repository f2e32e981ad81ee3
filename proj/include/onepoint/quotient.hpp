#ifndef ONEPOINT_QUOTIENT_HPP
#define ONEPOINT_QUOTIENT_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <onepoint/semigroup.hpp>

namespace onepoint
{

// The finite semigroup S_i = H_i + {inf}: sums leaving H_i collapse to inf,
// inf is absorbing. Elements are addressed by slot; the last slot is inf.
class FiniteQuotient
{
public:
    using Slot = std::size_t;

    // table must be (n+1) x (n+1) over slots 0..n, where n = elements.size().
    // Only the shape is validated, so corrupted tables can be represented.
    FiniteQuotient(long level, std::vector<LatticeVector> elements, std::vector<std::vector<Slot>> table);

    long level() const { return m_level; }
    // Number of slots, including inf.
    std::size_t size() const { return m_elements.size() + 1; }
    Slot infinity() const { return m_elements.size(); }
    // H_i in ambient coordinates, ordered by (length, lexicographic in M).
    const std::vector<LatticeVector> &elements() const { return m_elements; }
    const std::vector<std::vector<Slot>> &table() const { return m_table; }

    Slot add(Slot a, Slot b) const { return m_table.at(a).at(b); }
    std::optional<Slot> index_of(const LatticeVector &a) const;
    // "[1,2]" or "inf".
    std::string slot_name(Slot s) const;

    std::optional<std::array<Slot, 3>> associativity_violation() const;
    std::optional<std::array<Slot, 2>> commutativity_violation() const;

    friend bool operator==(const FiniteQuotient &a, const FiniteQuotient &b)
    {
        return a.m_level == b.m_level && a.m_elements == b.m_elements && a.m_table == b.m_table;
    }

private:
    long m_level;
    std::vector<LatticeVector> m_elements;
    std::vector<std::vector<Slot>> m_table;
};

// Throws NotPointed; InvalidArgument for a negative level.
FiniteQuotient build_quotient(const AffineSemigroup &s, long level);

// The bonding map S_{i+1} -> S_i as a slot table: phi(a) = a if a in H_i, else inf.
std::vector<FiniteQuotient::Slot> phi(const FiniteQuotient &upper, const FiniteQuotient &lower);
std::vector<FiniteQuotient::Slot> phi(const AffineSemigroup &s, long level);

struct TowerReport {
    bool pass = true;
    // Which check failed: "associativity", "commutativity", "homomorphism",
    // "surjectivity", "nesting", "section", "thread".
    std::string failed_check;
    long level = -1;
    // Slot names of the counterexample (a triple for associativity).
    std::vector<std::string> witness;
    std::string message;
};

// Builds S_0..S_L and checks the tower; see check_tower(s, quotients).
TowerReport check_tower(const AffineSemigroup &s, long levels);
// quotients[i] is taken to be S_i. Checks each table is a commutative
// semigroup, each phi_i is a surjective homomorphism with the inclusion as a
// section, H_i is nested, and that every thread through the tower is constant
// from level s(a) on and inf below it.
TowerReport check_tower(const AffineSemigroup &s, const std::vector<FiniteQuotient> &quotients);

} // namespace onepoint

#endif
