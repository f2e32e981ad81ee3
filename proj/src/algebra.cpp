#include <onepoint/algebra.hpp>

#include <algorithm>
#include <ostream>

namespace onepoint
{

const char *carrier_name(Carrier c)
{
    return c == Carrier::semigroup ? "S" : "S_inf";
}

const LatticeVector &Exponent::vector() const
{
    if (m_infinite) {
        throw InvalidArgument("the exponent inf has no lattice coordinates");
    }
    return m_vector;
}

AlgebraElement::AlgebraElement(SemigroupPtr s, Carrier carrier) : m_semigroup(std::move(s)), m_carrier(carrier)
{
    if (!m_semigroup) {
        throw InvalidArgument("algebra element needs a semigroup");
    }
    if (!m_semigroup->is_pointed()) {
        throw NotPointed("semigroup algebras are only supported over pointed semigroups");
    }
}

AlgebraElement AlgebraElement::constant(SemigroupPtr s, const Rational &c, Carrier carrier)
{
    std::size_t r = s->rank();
    AlgebraElement f(std::move(s), carrier);
    f.accumulate(Exponent(LatticeVector(r)), c);
    return f;
}

AlgebraElement AlgebraElement::monomial_m(SemigroupPtr s, const LatticeVector &a, const Rational &c, Carrier carrier)
{
    if (!s->contains_m(a)) {
        throw NotInSemigroup("x^" + s->from_m(a).to_string() + " is not a monomial of the semigroup algebra");
    }
    AlgebraElement f(std::move(s), carrier);
    f.accumulate(Exponent(a), c);
    return f;
}

AlgebraElement AlgebraElement::monomial(SemigroupPtr s, const LatticeVector &a, const Rational &c, Carrier carrier)
{
    auto m = s->to_m(a);
    if (!m) {
        throw NotInSemigroup("x^" + a.to_string() + " is not a monomial of the semigroup algebra");
    }
    return monomial_m(std::move(s), *m, c, carrier);
}

AlgebraElement AlgebraElement::infinity(SemigroupPtr s, const Rational &c)
{
    AlgebraElement f(std::move(s), Carrier::compactified);
    f.accumulate(Exponent::infinity(), c);
    return f;
}

AlgebraElement AlgebraElement::from_terms(SemigroupPtr s, Carrier carrier, const Terms &terms)
{
    AlgebraElement f(std::move(s), carrier);
    for (const auto &[e, c] : terms) {
        if (e.is_infinity()) {
            if (carrier == Carrier::semigroup) {
                throw CarrierMismatch("x^inf is not an element of C[S]");
            }
        } else if (!f.m_semigroup->contains_m(e.vector())) {
            throw NotInSemigroup("x^" + f.m_semigroup->from_m(e.vector()).to_string()
                                 + " is not a monomial of the semigroup algebra");
        }
        f.accumulate(e, c);
    }
    return f;
}

Rational AlgebraElement::coefficient(const Exponent &e) const
{
    auto it = m_terms.find(e);
    return it == m_terms.end() ? Rational(0) : it->second;
}

Rational AlgebraElement::coefficient_sum() const
{
    Rational s(0);
    for (const auto &[e, c] : m_terms) {
        s += c;
    }
    return s;
}

AlgebraElement AlgebraElement::finite_part() const
{
    AlgebraElement f(*this);
    f.m_terms.erase(Exponent::infinity());
    return f;
}

AlgebraElement AlgebraElement::with_carrier(Carrier carrier) const
{
    if (carrier == Carrier::semigroup && m_terms.count(Exponent::infinity())) {
        throw CarrierMismatch("element with an x^inf term does not lie in C[S]");
    }
    AlgebraElement f(*this);
    f.m_carrier = carrier;
    return f;
}

void AlgebraElement::accumulate(const Exponent &e, const Rational &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = m_terms.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

void AlgebraElement::check_compatible(const AlgebraElement &other) const
{
    if (m_semigroup != other.m_semigroup) {
        throw CarrierMismatch("elements belong to different semigroup algebras");
    }
    if (m_carrier != other.m_carrier) {
        throw CarrierMismatch(std::string("cannot combine elements of C[") + carrier_name(m_carrier) + "] and C["
                              + carrier_name(other.m_carrier) + "]");
    }
}

AlgebraElement &AlgebraElement::operator+=(const AlgebraElement &other)
{
    check_compatible(other);
    for (const auto &[e, c] : other.m_terms) {
        accumulate(e, c);
    }
    return *this;
}

AlgebraElement &AlgebraElement::operator-=(const AlgebraElement &other)
{
    check_compatible(other);
    for (const auto &[e, c] : other.m_terms) {
        accumulate(e, -c);
    }
    return *this;
}

AlgebraElement &AlgebraElement::operator*=(const Rational &k)
{
    if (k == 0) {
        m_terms.clear();
        return *this;
    }
    for (auto &[e, c] : m_terms) {
        c *= k;
    }
    return *this;
}

AlgebraElement AlgebraElement::operator-() const
{
    AlgebraElement f(*this);
    f *= Rational(-1);
    return f;
}

AlgebraElement operator*(const AlgebraElement &a, const AlgebraElement &b)
{
    a.check_compatible(b);
    AlgebraElement out(a.m_semigroup, a.m_carrier);
    for (const auto &[ea, ca] : a.m_terms) {
        for (const auto &[eb, cb] : b.m_terms) {
            if (ea.is_infinity() || eb.is_infinity()) {
                out.accumulate(Exponent::infinity(), ca * cb);
            } else {
                out.accumulate(Exponent(ea.vector() + eb.vector()), ca * cb);
            }
        }
    }
    return out;
}

bool operator==(const AlgebraElement &a, const AlgebraElement &b)
{
    return a.m_semigroup == b.m_semigroup && a.m_carrier == b.m_carrier && a.m_terms == b.m_terms;
}

std::vector<std::pair<Exponent, Rational>> AlgebraElement::ordered_terms() const
{
    std::vector<std::pair<long, std::pair<Exponent, Rational>>> keyed;
    for (const auto &[e, c] : m_terms) {
        long s = e.is_infinity() ? 0 : *m_semigroup->s_value_m(e.vector());
        keyed.push_back({s, {e, c}});
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto &x, const auto &y) {
        bool xi = x.second.first.is_infinity(), yi = y.second.first.is_infinity();
        if (xi != yi) {
            return yi;
        }
        if (x.first != y.first) {
            return x.first < y.first;
        }
        return x.second.first < y.second.first;
    });
    std::vector<std::pair<Exponent, Rational>> out;
    for (auto &k : keyed) {
        out.push_back(std::move(k.second));
    }
    return out;
}

std::string AlgebraElement::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::string s;
    bool first = true;
    for (const auto &[e, c] : ordered_terms()) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) {
                s += "-";
            }
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        if (e.is_infinity()) {
            mono = "x^inf";
        } else if (!e.vector().is_zero()) {
            mono = "x^" + m_semigroup->from_m(e.vector()).to_string();
        }
        if (mono.empty()) {
            s += mag.get_str();
        } else if (mag == 1) {
            s += mono;
        } else {
            s += mag.get_str() + "*" + mono;
        }
    }
    return s;
}

std::ostream &operator<<(std::ostream &os, const AlgebraElement &f)
{
    return os << f.to_string();
}

// ---------------------------------------------------------------------------
// Quotient maps and ideals

namespace
{

void require_compactified(const AlgebraElement &f, const char *op)
{
    if (f.carrier() != Carrier::compactified) {
        throw CarrierMismatch(std::string(op) + " expects an element of C[S_inf]");
    }
}

} // namespace

AlgebraElement psi(const AlgebraElement &f, long level)
{
    require_compactified(f, "psi");
    AlgebraElement out(f.semigroup_ptr(), Carrier::compactified);
    for (const auto &[e, c] : f.terms()) {
        if (e.is_infinity() || *f.semigroup().s_value_m(e.vector()) > level) {
            out.accumulate(Exponent::infinity(), c);
        } else {
            out.accumulate(e, c);
        }
    }
    return out;
}

AlgebraElement quotient_mul(const AlgebraElement &f, const AlgebraElement &g, long level)
{
    return psi(f * g, level);
}

bool in_ideal(const AlgebraElement &f, long level)
{
    return psi(f, level).is_zero();
}

bool in_I_infty(const AlgebraElement &f)
{
    require_compactified(f, "in_I_infty");
    return f.coefficient_sum() == 0;
}

std::optional<std::vector<std::pair<LatticeVector, Rational>>> ideal_combination(const AlgebraElement &f, long level)
{
    require_compactified(f, "ideal_combination");
    std::vector<std::pair<LatticeVector, Rational>> combination;
    AlgebraElement residual = f;
    for (const auto &[e, c] : f.terms()) {
        if (e.is_infinity() || *f.semigroup().s_value_m(e.vector()) <= level) {
            continue;
        }
        AlgebraElement generator = AlgebraElement::monomial_m(f.semigroup_ptr(), e.vector(), 1, Carrier::compactified)
                                   - AlgebraElement::infinity(f.semigroup_ptr());
        residual -= c * generator;
        combination.emplace_back(f.semigroup().from_m(e.vector()), c);
    }
    if (!residual.is_zero()) {
        return std::nullopt;
    }
    return combination;
}

// ---------------------------------------------------------------------------
// Completion towers

CompletionTower tower_truncate(SemigroupPtr s, const std::function<AlgebraElement(long)> &rule, long top_level)
{
    if (top_level < 0) {
        throw InvalidArgument("tower truncation level must be nonnegative");
    }
    CompletionTower t{s, {}};
    for (long l = 0; l <= top_level; ++l) {
        AlgebraElement f = rule(l);
        if (f.semigroup_ptr() != s || f.carrier() != Carrier::compactified) {
            throw InvalidArgument("tower level " + std::to_string(l) + " is not an element of C[S_inf]");
        }
        for (const auto &[e, c] : f.terms()) {
            if (!e.is_infinity() && *s->s_value_m(e.vector()) > l) {
                throw InvalidArgument("tower level " + std::to_string(l) + " has x^" + s->from_m(e.vector()).to_string()
                                      + " outside S_" + std::to_string(l));
            }
        }
        t.levels.push_back(std::move(f));
    }
    return t;
}

TowerCompatibility tower_compatible(const CompletionTower &tower)
{
    for (std::size_t l = 1; l < tower.levels.size(); ++l) {
        if (psi(tower.levels[l], long(l) - 1) != tower.levels[l - 1]) {
            return {false, long(l)};
        }
    }
    return {};
}

TowerAlgebraicity tower_is_algebraic(const CompletionTower &tower)
{
    if (tower.levels.empty()) {
        throw InvalidArgument("empty tower");
    }
    auto compat = tower_compatible(tower);
    if (!compat.compatible) {
        throw IncompatibleTower("tower levels disagree at level " + std::to_string(compat.witness_level),
                                compat.witness_level);
    }
    const long top = long(tower.levels.size()) - 1;
    const AlgebraElement tail = tower.levels.back().finite_part();
    long l = top;
    while (l > 0 && tower.levels[l - 1].finite_part() == tail) {
        --l;
    }
    return {l < top, l};
}

} // namespace onepoint
