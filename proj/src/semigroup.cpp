#include <onepoint/semigroup.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace onepoint
{

Integer Representation::length() const
{
    Integer n(0);
    for (const auto &[k, m] : multiplicities) {
        n += m;
    }
    return n;
}

namespace
{

std::vector<LatticeVector> clean_generators(std::size_t ambient_rank, std::vector<LatticeVector> generators)
{
    std::vector<LatticeVector> out;
    std::set<LatticeVector> seen;
    for (auto &g : generators) {
        if (g.rank() != ambient_rank) {
            throw DimensionMismatch("generator " + g.to_string() + " does not have rank "
                                    + std::to_string(ambient_rank));
        }
        if (g.is_zero() || !seen.insert(g).second) {
            continue;
        }
        out.push_back(std::move(g));
    }
    if (out.empty()) {
        throw InvalidArgument("affine semigroup needs at least one nonzero generator");
    }
    return out;
}

std::vector<LatticeVector> to_coordinates(const LatticeBasis &basis, const std::vector<LatticeVector> &vs)
{
    std::vector<LatticeVector> out;
    out.reserve(vs.size());
    for (const auto &v : vs) {
        out.push_back(*basis.coordinates(v));
    }
    return out;
}

// Membership of target in the monoid generated by gens, for a functional u
// that is strictly positive on every generator.
bool generated_by(const std::vector<LatticeVector> &gens, const LatticeVector &u, const LatticeVector &target)
{
    std::set<LatticeVector> dead;
    std::function<bool(const LatticeVector &)> go = [&](const LatticeVector &a) -> bool {
        if (a.is_zero()) {
            return true;
        }
        Integer ha = pairing(a, u);
        if (ha <= 0 || dead.count(a)) {
            return false;
        }
        for (const auto &g : gens) {
            if (pairing(g, u) <= ha && go(a - g)) {
                return true;
            }
        }
        dead.insert(a);
        return false;
    };
    return go(target);
}

} // namespace

AffineSemigroup::AffineSemigroup(private_tag, std::size_t ambient_rank, std::vector<LatticeVector> generators)
    : m_ambient_rank(ambient_rank), m_generators(clean_generators(ambient_rank, std::move(generators))),
      m_basis(lattice_basis(m_generators)), m_generators_m(to_coordinates(m_basis, m_generators)),
      m_cone(m_generators_m)
{
    if (rank() > max_semigroup_rank) {
        throw InvalidArgument("semigroup rank " + std::to_string(rank()) + " exceeds the supported maximum "
                              + std::to_string(max_semigroup_rank));
    }
    m_pointed = is_strongly_convex(m_cone);
    if (!m_pointed) {
        return;
    }

    m_positivity = LatticeVector(rank());
    for (const auto &rho : m_cone.dual_rays()) {
        m_positivity += rho;
    }
    for (const auto &g : m_generators_m) {
        if (pairing(g, m_positivity) < 1) {
            throw Error("internal: sum of dual rays is not positive on generator " + from_m(g).to_string());
        }
    }

    // g is reducible iff g - g' is a nonzero element for some other generator g'.
    std::vector<LatticeVector> hilbert_m;
    for (std::size_t k = 0; k < m_generators_m.size(); ++k) {
        bool reducible = false;
        for (std::size_t l = 0; l < m_generators_m.size() && !reducible; ++l) {
            if (l == k) {
                continue;
            }
            LatticeVector diff = m_generators_m[k] - m_generators_m[l];
            reducible = !diff.is_zero() && generated_by(m_generators_m, m_positivity, diff);
        }
        if (!reducible) {
            hilbert_m.push_back(m_generators_m[k]);
        }
    }
    std::vector<std::pair<LatticeVector, LatticeVector>> both;
    for (auto &h : hilbert_m) {
        both.emplace_back(from_m(h), h);
    }
    std::sort(both.begin(), both.end());
    for (auto &[a, m] : both) {
        m_hilbert.push_back(a);
        m_hilbert_m.push_back(m);
    }
    m_max_height = 0;
    for (const auto &h : m_hilbert_m) {
        m_max_height = std::max(m_max_height, pairing(h, m_positivity));
    }
}

SemigroupPtr AffineSemigroup::build(std::size_t ambient_rank, std::vector<LatticeVector> generators)
{
    return std::make_shared<const AffineSemigroup>(private_tag{}, ambient_rank, std::move(generators));
}

void AffineSemigroup::require_pointed(const char *op) const
{
    if (!m_pointed) {
        throw NotPointed(std::string(op) + " requires a pointed semigroup");
    }
}

const LatticeVector &AffineSemigroup::positivity() const
{
    require_pointed("positivity");
    return m_positivity;
}

const std::vector<LatticeVector> &AffineSemigroup::hilbert_basis() const
{
    require_pointed("hilbert_basis");
    return m_hilbert;
}

const std::vector<LatticeVector> &AffineSemigroup::hilbert_basis_m() const
{
    require_pointed("hilbert_basis");
    return m_hilbert_m;
}

const Integer &AffineSemigroup::max_hilbert_height() const
{
    require_pointed("max_hilbert_height");
    return m_max_height;
}

std::optional<LatticeVector> AffineSemigroup::to_m(const LatticeVector &ambient) const
{
    return m_basis.coordinates(ambient);
}

LatticeVector AffineSemigroup::from_m(const LatticeVector &coords) const
{
    return m_basis.from_coordinates(coords);
}

Integer AffineSemigroup::height_m(const LatticeVector &a) const
{
    require_pointed("height");
    return pairing(a, m_positivity);
}

long AffineSemigroup::s_value_locked(const LatticeVector &a) const
{
    if (a.is_zero()) {
        return 0;
    }
    if (auto it = m_s_cache.find(a); it != m_s_cache.end()) {
        return it->second;
    }
    Integer ha = pairing(a, m_positivity);
    long best = -1;
    if (ha > 0) {
        for (const auto &h : m_hilbert_m) {
            if (pairing(h, m_positivity) > ha) {
                continue;
            }
            long sub = s_value_locked(a - h);
            if (sub >= 0) {
                best = std::max(best, sub + 1);
            }
        }
    }
    m_s_cache.emplace(a, best);
    return best;
}

std::optional<long> AffineSemigroup::s_value_m(const LatticeVector &a) const
{
    require_pointed("s_value");
    if (a.rank() != rank()) {
        throw DimensionMismatch("vector of rank " + std::to_string(a.rank()) + " for semigroup of rank "
                                + std::to_string(rank()));
    }
    std::lock_guard<std::mutex> lock(m_cache_mutex);
    long s = s_value_locked(a);
    if (s < 0) {
        return std::nullopt;
    }
    return s;
}

long AffineSemigroup::s_value(const LatticeVector &a) const
{
    require_pointed("s_value");
    auto m = to_m(a);
    std::optional<long> s = m ? s_value_m(*m) : std::nullopt;
    if (!s) {
        throw NotInSemigroup(a.to_string() + " is not an element of the semigroup");
    }
    return *s;
}

bool AffineSemigroup::contains_m(const LatticeVector &a) const
{
    return s_value_m(a).has_value();
}

bool AffineSemigroup::contains(const LatticeVector &a) const
{
    require_pointed("member");
    auto m = to_m(a);
    return m && contains_m(*m);
}

std::optional<Representation> AffineSemigroup::member(const LatticeVector &a) const
{
    require_pointed("member");
    auto m = to_m(a);
    if (!m || !contains_m(*m)) {
        return std::nullopt;
    }
    // Walk down a chain realizing the maximal length.
    Representation rep;
    LatticeVector residual = *m;
    while (!residual.is_zero()) {
        long s = *s_value_m(residual);
        for (std::size_t k = 0; k < m_hilbert_m.size(); ++k) {
            LatticeVector next = residual - m_hilbert_m[k];
            auto sn = s_value_m(next);
            if (sn && *sn == s - 1) {
                rep.multiplicities[k] += 1;
                residual = std::move(next);
                break;
            }
        }
    }
    return rep;
}

std::vector<LatticeVector> AffineSemigroup::elements_up_to_height_m(const Integer &bound) const
{
    require_pointed("elements_up_to_height");
    std::set<LatticeVector> seen;
    std::deque<LatticeVector> queue;
    LatticeVector zero(rank());
    if (bound >= 0) {
        seen.insert(zero);
        queue.push_back(zero);
    }
    while (!queue.empty()) {
        LatticeVector x = std::move(queue.front());
        queue.pop_front();
        for (const auto &h : m_hilbert_m) {
            LatticeVector y = x + h;
            if (pairing(y, m_positivity) <= bound && seen.insert(y).second) {
                queue.push_back(std::move(y));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<LatticeVector> AffineSemigroup::sublevel_m(long level) const
{
    require_pointed("sublevel");
    if (level < 0) {
        return {};
    }
    // s(a) <= i forces <a,u> <= i * max <h,u>.
    auto candidates = elements_up_to_height_m(Integer(level) * m_max_height);
    std::vector<std::pair<long, LatticeVector>> keyed;
    for (auto &a : candidates) {
        long s = *s_value_m(a);
        if (s <= level) {
            keyed.emplace_back(s, std::move(a));
        }
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<LatticeVector> out;
    out.reserve(keyed.size());
    for (auto &[s, a] : keyed) {
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<std::pair<LatticeVector, LatticeVector>> AffineSemigroup::decompositions(const LatticeVector &a) const
{
    require_pointed("decompositions");
    auto m = to_m(a);
    if (!m || !contains_m(*m)) {
        throw NotInSemigroup(a.to_string() + " is not an element of the semigroup");
    }
    std::vector<std::pair<LatticeVector, LatticeVector>> out;
    for (const auto &b : elements_up_to_height_m(height_m(*m))) {
        LatticeVector c = *m - b;
        if (contains_m(c)) {
            out.emplace_back(from_m(b), from_m(c));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool AffineSemigroup::sat_member_m(const LatticeVector &a) const
{
    return in_cone(a, m_cone);
}

bool AffineSemigroup::sat_member(const LatticeVector &a) const
{
    auto m = in_lattice(a, m_basis);
    return m && sat_member_m(*m);
}

std::vector<Root> AffineSemigroup::roots_m(long box) const
{
    require_pointed("roots");
    std::vector<Root> out;
    const auto &rays = m_cone.dual_rays();
    for (std::size_t k = 0; k < rays.size(); ++k) {
        for (auto &e : demazure_roots(m_cone, k, box)) {
            // C[S] is stabilized by the root derivation iff h + e lies in S for
            // every Hilbert basis element not killed by it.
            bool stable = std::all_of(m_hilbert_m.begin(), m_hilbert_m.end(), [&](const LatticeVector &h) {
                return pairing(h, rays[k]) == 0 || contains_m(h + e);
            });
            if (stable) {
                out.push_back({std::move(e), k});
            }
        }
    }
    return out;
}

std::vector<Root> AffineSemigroup::roots(long box) const
{
    auto out = roots_m(box);
    for (auto &r : out) {
        r.degree = from_m(r.degree);
    }
    return out;
}

bool AffineSemigroup::is_root_reducible(const LatticeVector &e, long box) const
{
    require_pointed("is_root_reducible");
    auto em = to_m(e);
    auto all = roots_m(box);
    bool found = em && std::any_of(all.begin(), all.end(), [&](const Root &r) { return r.degree == *em; });
    if (!found) {
        throw InvalidArgument(e.to_string() + " is not a root of the semigroup within box "
                              + std::to_string(box));
    }
    for (const auto &other : all) {
        if (other.degree == *em) {
            continue;
        }
        LatticeVector a = *em - other.degree;
        if (!a.is_zero() && contains_m(a)) {
            return true;
        }
    }
    return false;
}

} // namespace onepoint
