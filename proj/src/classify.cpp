#include <onepoint/classify.hpp>

#include <algorithm>
#include <map>

namespace onepoint
{

const char *verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::integrable:
        return "integrable";
    case Verdict::not_integrable:
        return "not-integrable";
    case Verdict::out_of_scope:
        break;
    }
    return "out-of-scope";
}

const char *branch_name(Branch b)
{
    return b == Branch::lnd ? "lnd" : "non-lnd";
}

bool verify_witness(const Derivation &d, const Witness &w)
{
    if (w.kind == Witness::Kind::p2) {
        return in_ideal(w.element, w.level_j) && !in_ideal(d.iterate(w.element, w.iterations), w.level_i);
    }
    if (w.iterations < 1) {
        return false;
    }
    AlgebraElement g = w.element;
    for (long k = 1; k <= w.iterations; ++k) {
        g = d.apply(g);
        if (in_ideal(g, w.level_i)) {
            return false;
        }
    }
    return true;
}

namespace
{

// Iterates of d on x^c - x^inf, shared between oracle passes.
class IterateCache
{
public:
    IterateCache(const Derivation &d, long n_max) : m_d(d), m_n_max(n_max) {}

    const std::vector<AlgebraElement> &binomial(const LatticeVector &c)
    {
        auto it = m_cache.find(c);
        if (it != m_cache.end()) {
            return it->second;
        }
        const auto &s = m_d.semigroup_ptr();
        std::vector<AlgebraElement> seq;
        seq.push_back(AlgebraElement::monomial_m(s, c, 1, Carrier::compactified) - AlgebraElement::infinity(s));
        for (long n = 1; n <= m_n_max; ++n) {
            seq.push_back(seq.back().is_zero() ? seq.back() : m_d.apply(seq.back()));
        }
        return m_cache.emplace(c, std::move(seq)).first->second;
    }

private:
    const Derivation &m_d;
    long m_n_max;
    std::map<LatticeVector, std::vector<AlgebraElement>> m_cache;
};

void require_lifted(const Derivation &d)
{
    if (d.carrier() != Carrier::compactified) {
        throw CarrierMismatch("expected a derivation on C[S_inf]");
    }
}

// Exponents x^b * (x^a - x^inf) -> a + b for the generators of a_j tested by
// the oracles: s(a) in (j, j + span], s(b) <= span.
std::vector<LatticeVector> test_exponents(const AffineSemigroup &s, long j, long span)
{
    std::vector<LatticeVector> gens;
    for (const auto &a : s.sublevel_m(j + span)) {
        if (*s.s_value_m(a) > j) {
            gens.push_back(a);
        }
    }
    std::vector<LatticeVector> out;
    for (const auto &b : s.sublevel_m(span)) {
        for (const auto &a : gens) {
            out.push_back(a + b);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

P2Result p2_with_cache(const Derivation &d, long i, const OracleBounds &bounds, IterateCache &cache)
{
    P2Result r;
    for (long j = 0; j <= bounds.j_max; ++j) {
        bool ok = true;
        for (const auto &c : test_exponents(d.semigroup(), j, bounds.gen_span)) {
            const auto &seq = cache.binomial(c);
            for (long n = 0; n <= bounds.n_max && ok; ++n) {
                if (!in_ideal(seq[n], i)) {
                    ok = false;
                    r.witness = Witness{Witness::Kind::p2, seq[0], n, i, j};
                }
            }
            if (!ok) {
                break;
            }
        }
        if (ok) {
            r.pass = true;
            r.j = j;
            r.witness.reset();
            return r;
        }
    }
    r.pass = false;
    r.j = bounds.j_max;
    return r;
}

ContinuityResult continuity_with_cache(const Derivation &d, const OracleBounds &bounds, IterateCache &cache)
{
    ContinuityResult r;
    for (long i = 0; i <= bounds.i_max; ++i) {
        long found = -1;
        for (long j = 0; j <= bounds.j_max && found < 0; ++j) {
            bool ok = true;
            for (const auto &c : test_exponents(d.semigroup(), j, bounds.gen_span)) {
                if (bounds.n_max >= 1 ? !in_ideal(cache.binomial(c)[1], i)
                                      : !in_ideal(d.apply(cache.binomial(c)[0]), i)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                found = j;
            }
        }
        if (found < 0) {
            r.pass = false;
            r.failing_level = i;
            return r;
        }
        r.j_per_level.push_back(found);
    }
    return r;
}

Witness lnd_witness(const Derivation &d, const LatticeVector &neg_e)
{
    const auto &s = d.semigroup_ptr();
    // The iterates walk x^((j+1)(-e)) down to x^(-e), which stays outside a_i.
    long i = *s->s_value_m(neg_e);
    long j = i + 1;
    AlgebraElement f = AlgebraElement::monomial_m(s, Integer(j + 1) * neg_e, 1, Carrier::compactified)
                       - AlgebraElement::infinity(s);
    return Witness{Witness::Kind::p2, std::move(f), j, i, j};
}

std::optional<Witness> degree_zero_witness(const Derivation &d, const LinearForm &phi)
{
    const auto &s = d.semigroup_ptr();
    for (const auto &h : s->hilbert_basis_m()) {
        if (phi(h) != 0) {
            // d^n(x^h) = phi(h)^n (x^h - x^inf), never in a_s(h).
            return Witness{Witness::Kind::p1, AlgebraElement::monomial_m(s, h, 1, Carrier::compactified),
                           OracleBounds{}.n_max, *s->s_value_m(h), -1};
        }
    }
    return std::nullopt;
}

std::string degree_list(const Derivation &d)
{
    std::string out;
    for (const auto &c : d.components()) {
        out += (out.empty() ? "" : ", ") + c.degree().to_string();
    }
    return out;
}

} // namespace

IntegrabilityVerdict classify_integrable(const Derivation &d)
{
    require_lifted(d);
    IntegrabilityVerdict v;
    if (d.is_zero()) {
        v.verdict = Verdict::out_of_scope;
        v.note = "the zero derivation has no homogeneous component";
        return v;
    }
    if (d.num_components() > 1) {
        v.verdict = Verdict::out_of_scope;
        v.note = "derivation has " + std::to_string(d.num_components()) + " homogeneous components of degrees "
                 + degree_list(d) + "; classify each component separately";
        return v;
    }

    const auto &s = d.semigroup();
    const auto &[e, phi] = *d.component_map().begin();
    if (is_lnd(d).lnd) {
        v.branch = Branch::lnd;
        LatticeVector neg = -e;
        if (!s.contains_m(neg)) {
            v.verdict = Verdict::integrable;
            v.criterion = "-e not in S";
            return v;
        }
        v.verdict = Verdict::not_integrable;
        v.criterion = "-e in S";
        v.witness = lnd_witness(d, neg);
    } else {
        v.branch = Branch::non_lnd;
        if (e.is_zero()) {
            v.verdict = Verdict::not_integrable;
            v.criterion = "e = 0";
            v.witness = degree_zero_witness(d, phi);
        } else if (s.contains_m(e)) {
            v.verdict = Verdict::integrable;
            v.criterion = "e in S\\{0}";
            return v;
        } else if (s.sat_member_m(e)) {
            // Iterates still raise the height, so s grows along every orbit.
            v.verdict = Verdict::integrable;
            v.criterion = "e in S^sat\\S";
            v.note = "e lies in the saturation of S but not in S";
            return v;
        } else {
            v.verdict = Verdict::not_integrable;
            v.criterion = "e not in cone(S)";
            IterateCache cache(d, OracleBounds{}.n_max);
            for (long i = 0; i <= OracleBounds{}.i_max && !v.witness; ++i) {
                v.witness = p2_with_cache(d, i, OracleBounds{}, cache).witness;
            }
            if (!v.witness) {
                v.note = "no witness found within default oracle bounds";
            }
            return v;
        }
    }
    if (!v.witness || !verify_witness(d, *v.witness)) {
        throw Error("internal: failed to certify not-integrable verdict for degree " + s.from_m(e).to_string());
    }
    return v;
}

P1Result oracle_p1(const Derivation &d, const AlgebraElement &f, const OracleBounds &bounds)
{
    require_lifted(d);
    AlgebraElement last = d.iterate(f, bounds.n_max);
    P1Result r;
    for (long i = 0; i <= bounds.i_max; ++i) {
        // n0 = n_max always qualifies once the last iterate is in a_i.
        if (!in_ideal(last, i)) {
            r.pass = false;
            r.failing_level = i;
            r.escaping_n = bounds.n_max;
            return r;
        }
    }
    return r;
}

P2Result oracle_p2(const Derivation &d, long i, const OracleBounds &bounds)
{
    require_lifted(d);
    IterateCache cache(d, bounds.n_max);
    return p2_with_cache(d, i, bounds, cache);
}

ContinuityResult oracle_continuity(const Derivation &d, const OracleBounds &bounds)
{
    require_lifted(d);
    IterateCache cache(d, bounds.n_max);
    return continuity_with_cache(d, bounds, cache);
}

OracleReport oracle_verdict(const Derivation &d, const OracleBounds &bounds, const Classifier &classifier)
{
    require_lifted(d);
    OracleReport r;
    r.bounds = bounds;
    r.verdict = classifier(d);

    IterateCache cache(d, bounds.n_max);
    auto cont = continuity_with_cache(d, bounds, cache);
    r.continuity = cont.pass;
    if (!cont.pass) {
        r.notes.push_back("continuity fails at level " + std::to_string(cont.failing_level));
    }

    r.p1 = true;
    const auto &s = d.semigroup_ptr();
    for (const auto &a : s->sublevel_m(bounds.gen_span)) {
        auto p1 = oracle_p1(d, AlgebraElement::monomial_m(s, a, 1, Carrier::compactified), bounds);
        if (!p1.pass) {
            r.p1 = false;
            r.notes.push_back("P.1 fails on x^" + s->from_m(a).to_string() + " at level "
                              + std::to_string(p1.failing_level));
            break;
        }
    }

    r.p2 = true;
    for (long i = 0; i <= bounds.i_max; ++i) {
        auto p2 = p2_with_cache(d, i, bounds, cache);
        if (!p2.pass) {
            r.p2 = false;
            r.oracle_witness = p2.witness;
            r.notes.push_back("P.2 fails at level " + std::to_string(i) + " for all j <= "
                              + std::to_string(bounds.j_max));
            break;
        }
    }

    r.oracle_integrable = r.continuity && r.p1 && r.p2;
    if (r.verdict.witness) {
        r.witness_verified = verify_witness(d, *r.verdict.witness);
    }
    if (r.verdict.verdict == Verdict::out_of_scope) {
        r.agree = true;
        r.notes.push_back(std::string("classifier reports out-of-scope; oracle says ")
                          + (r.oracle_integrable ? "integrable" : "not integrable") + " within bounds");
        return r;
    }
    const bool closed = r.verdict.verdict == Verdict::integrable;
    const bool certified = closed || (r.verdict.witness && r.witness_verified);
    r.agree = closed == r.oracle_integrable && certified;
    if (!r.agree) {
        r.notes.push_back(std::string("disagreement: classifier says ") + verdict_name(r.verdict.verdict)
                          + ", oracle says " + (r.oracle_integrable ? "integrable" : "not integrable"));
    }
    return r;
}

} // namespace onepoint
