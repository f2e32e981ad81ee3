#include <onepoint/quotient.hpp>

#include <map>
#include <set>

namespace onepoint
{

FiniteQuotient::FiniteQuotient(long level, std::vector<LatticeVector> elements, std::vector<std::vector<Slot>> table)
    : m_level(level), m_elements(std::move(elements)), m_table(std::move(table))
{
    const std::size_t n = size();
    if (m_table.size() != n) {
        throw InvalidArgument("quotient table has " + std::to_string(m_table.size()) + " rows, expected "
                              + std::to_string(n));
    }
    for (const auto &row : m_table) {
        if (row.size() != n) {
            throw InvalidArgument("quotient table row has wrong length");
        }
        for (Slot s : row) {
            if (s >= n) {
                throw InvalidArgument("quotient table entry out of range");
            }
        }
    }
}

std::optional<FiniteQuotient::Slot> FiniteQuotient::index_of(const LatticeVector &a) const
{
    for (std::size_t k = 0; k < m_elements.size(); ++k) {
        if (m_elements[k] == a) {
            return k;
        }
    }
    return std::nullopt;
}

std::string FiniteQuotient::slot_name(Slot s) const
{
    return s == infinity() ? std::string("inf") : m_elements.at(s).to_string();
}

std::optional<std::array<FiniteQuotient::Slot, 3>> FiniteQuotient::associativity_violation() const
{
    const std::size_t n = size();
    for (Slot x = 0; x < n; ++x) {
        for (Slot y = 0; y < n; ++y) {
            Slot xy = add(x, y);
            for (Slot z = 0; z < n; ++z) {
                if (add(xy, z) != add(x, add(y, z))) {
                    return std::array<Slot, 3>{x, y, z};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::array<FiniteQuotient::Slot, 2>> FiniteQuotient::commutativity_violation() const
{
    for (Slot x = 0; x < size(); ++x) {
        for (Slot y = x + 1; y < size(); ++y) {
            if (add(x, y) != add(y, x)) {
                return std::array<Slot, 2>{x, y};
            }
        }
    }
    return std::nullopt;
}

FiniteQuotient build_quotient(const AffineSemigroup &s, long level)
{
    if (level < 0) {
        throw InvalidArgument("quotient level must be nonnegative");
    }
    auto h_m = s.sublevel_m(level);
    std::map<LatticeVector, std::size_t> index;
    for (std::size_t k = 0; k < h_m.size(); ++k) {
        index.emplace(h_m[k], k);
    }
    const std::size_t inf = h_m.size();
    std::vector<std::vector<std::size_t>> table(inf + 1, std::vector<std::size_t>(inf + 1, inf));
    for (std::size_t x = 0; x < inf; ++x) {
        for (std::size_t y = 0; y < inf; ++y) {
            auto it = index.find(h_m[x] + h_m[y]);
            if (it != index.end()) {
                table[x][y] = it->second;
            }
        }
    }
    std::vector<LatticeVector> elements;
    elements.reserve(h_m.size());
    for (const auto &a : h_m) {
        elements.push_back(s.from_m(a));
    }
    return FiniteQuotient(level, std::move(elements), std::move(table));
}

std::vector<FiniteQuotient::Slot> phi(const FiniteQuotient &upper, const FiniteQuotient &lower)
{
    std::vector<FiniteQuotient::Slot> map(upper.size(), lower.infinity());
    for (std::size_t x = 0; x < upper.elements().size(); ++x) {
        if (auto y = lower.index_of(upper.elements()[x])) {
            map[x] = *y;
        }
    }
    return map;
}

std::vector<FiniteQuotient::Slot> phi(const AffineSemigroup &s, long level)
{
    return phi(build_quotient(s, level + 1), build_quotient(s, level));
}

TowerReport check_tower(const AffineSemigroup &s, long levels)
{
    if (levels < 1) {
        throw InvalidArgument("check_tower needs at least one level");
    }
    std::vector<FiniteQuotient> qs;
    for (long i = 0; i <= levels; ++i) {
        qs.push_back(build_quotient(s, i));
    }
    return check_tower(s, qs);
}

TowerReport check_tower(const AffineSemigroup &s, const std::vector<FiniteQuotient> &qs)
{
    TowerReport report;
    auto fail = [&](std::string check, long level, std::vector<std::string> witness, std::string message) {
        report.pass = false;
        report.failed_check = std::move(check);
        report.level = level;
        report.witness = std::move(witness);
        report.message = std::move(message);
        return report;
    };

    for (std::size_t i = 0; i < qs.size(); ++i) {
        const auto &q = qs[i];
        if (auto v = q.associativity_violation()) {
            auto [x, y, z] = *v;
            return fail("associativity", long(i), {q.slot_name(x), q.slot_name(y), q.slot_name(z)},
                        "(x+y)+z != x+(y+z)");
        }
        if (auto v = q.commutativity_violation()) {
            auto [x, y] = *v;
            return fail("commutativity", long(i), {q.slot_name(x), q.slot_name(y)}, "x+y != y+x");
        }
    }

    std::vector<std::vector<FiniteQuotient::Slot>> maps;
    for (std::size_t i = 0; i + 1 < qs.size(); ++i) {
        const auto &up = qs[i + 1];
        const auto &lo = qs[i];
        for (const auto &a : lo.elements()) {
            if (!up.index_of(a)) {
                return fail("nesting", long(i), {a.to_string()}, "H_i is not contained in H_{i+1}");
            }
        }
        auto map = phi(up, lo);
        std::vector<bool> hit(lo.size(), false);
        for (auto y : map) {
            hit[y] = true;
        }
        for (std::size_t y = 0; y < lo.size(); ++y) {
            if (!hit[y]) {
                return fail("surjectivity", long(i), {lo.slot_name(y)}, "phi_i misses an element");
            }
        }
        for (std::size_t x = 0; x < up.size(); ++x) {
            for (std::size_t y = 0; y < up.size(); ++y) {
                if (map[up.add(x, y)] != lo.add(map[x], map[y])) {
                    return fail("homomorphism", long(i), {up.slot_name(x), up.slot_name(y)},
                                "phi_i(x+y) != phi_i(x)+phi_i(y)");
                }
            }
        }
        for (std::size_t y = 0; y < lo.elements().size(); ++y) {
            if (map[*up.index_of(lo.elements()[y])] != y) {
                return fail("section", long(i), {lo.slot_name(y)}, "phi_i does not fix H_i");
            }
        }
        maps.push_back(std::move(map));
    }

    // Every compatible thread is determined by its top entry; check the trichotomy.
    if (!qs.empty()) {
        const long top = long(qs.size()) - 1;
        std::set<std::string> distinguished;
        for (std::size_t t = 0; t < qs.back().size(); ++t) {
            std::vector<FiniteQuotient::Slot> thread(qs.size());
            thread[top] = t;
            for (long i = top - 1; i >= 0; --i) {
                thread[i] = maps[i][thread[i + 1]];
            }
            if (t == qs.back().infinity()) {
                for (long i = 0; i <= top; ++i) {
                    if (thread[i] != qs[i].infinity()) {
                        return fail("thread", i, {qs[i].slot_name(thread[i])}, "thread of inf is not constant");
                    }
                }
                continue;
            }
            const LatticeVector &a = qs.back().elements()[t];
            const long l = s.s_value(a);
            for (long i = 0; i <= top; ++i) {
                bool ok = i < l ? thread[i] == qs[i].infinity()
                                : thread[i] != qs[i].infinity() && qs[i].elements()[thread[i]] == a;
                if (!ok) {
                    return fail("thread", i, {a.to_string(), qs[i].slot_name(thread[i])},
                                "thread is not inf below level s(a) and constant from it on");
                }
            }
            if (!distinguished.insert(a.to_string()).second) {
                return fail("thread", top, {a.to_string()}, "distinguished component is not unique");
            }
        }
    }
    return report;
}

} // namespace onepoint
