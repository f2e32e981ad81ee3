#include <onepoint/derivation.hpp>

namespace onepoint
{

HomogeneousDerivation HomogeneousDerivation::make_m(SemigroupPtr s, LatticeVector degree, LinearForm form)
{
    if (degree.rank() != s->rank() || form.rank() != s->rank()) {
        throw DimensionMismatch("degree and form must have the lattice rank " + std::to_string(s->rank()));
    }
    for (const auto &h : s->hilbert_basis_m()) {
        if (form(h) != 0 && !s->contains_m(h + degree)) {
            std::string hs = s->from_m(h).to_string();
            throw ClosureViolation("derivation of degree " + s->from_m(degree).to_string() + " sends x^" + hs
                                       + " outside C[S]: " + s->from_m(h + degree).to_string()
                                       + " is not in S",
                                   hs);
        }
    }
    return HomogeneousDerivation(std::move(s), std::move(degree), std::move(form));
}

HomogeneousDerivation HomogeneousDerivation::make(SemigroupPtr s, const LatticeVector &degree, const LinearForm &form)
{
    auto e = s->to_m(degree);
    if (!e) {
        throw NotInSemigroup("degree " + degree.to_string() + " is not in the lattice generated by S");
    }
    LinearForm f = s->lattice().restrict(form);
    return make_m(std::move(s), std::move(*e), std::move(f));
}

LatticeVector HomogeneousDerivation::degree() const
{
    return m_semigroup->from_m(m_degree);
}

LinearForm HomogeneousDerivation::form() const
{
    return m_semigroup->lattice().extend(m_form);
}

Rational HomogeneousDerivation::iterate_coefficient_m(const LatticeVector &a, long n) const
{
    Rational c(1);
    LatticeVector b = a;
    for (long k = 0; k < n; ++k) {
        c *= m_form(b);
        if (c == 0) {
            break;
        }
        b += m_degree;
    }
    return c;
}

// ---------------------------------------------------------------------------

Derivation::Derivation(SemigroupPtr s, Carrier carrier) : m_semigroup(std::move(s)), m_carrier(carrier)
{
    if (!m_semigroup->is_pointed()) {
        throw NotPointed("derivations are only supported over pointed semigroups");
    }
}

Derivation::Derivation(SemigroupPtr s, Carrier carrier, const std::vector<HomogeneousDerivation> &components)
    : Derivation(std::move(s), carrier)
{
    for (const auto &c : components) {
        if (c.semigroup_ptr() != m_semigroup) {
            throw CarrierMismatch("component belongs to a different semigroup");
        }
        auto [it, inserted] = m_components.emplace(c.degree_m(), c.form_m());
        if (!inserted) {
            it->second += c.form_m();
        }
    }
    std::erase_if(m_components, [](const auto &kv) { return kv.second.is_zero(); });
}

std::vector<HomogeneousDerivation> Derivation::components() const
{
    std::vector<HomogeneousDerivation> out;
    for (const auto &[e, phi] : m_components) {
        // Already validated when the derivation was assembled.
        out.push_back(HomogeneousDerivation::make_m(m_semigroup, e, phi));
    }
    return out;
}

AlgebraElement Derivation::apply(const AlgebraElement &f) const
{
    if (f.semigroup_ptr() != m_semigroup) {
        throw CarrierMismatch("element belongs to a different semigroup algebra");
    }
    if (f.carrier() != m_carrier) {
        throw CarrierMismatch(std::string("derivation on C[") + carrier_name(m_carrier) + "] applied to element of C["
                              + carrier_name(f.carrier()) + "]");
    }
    const bool lifted = m_carrier == Carrier::compactified;
    AlgebraElement out(m_semigroup, m_carrier);
    for (const auto &[exp, c] : f.terms()) {
        if (exp.is_infinity()) {
            continue;
        }
        for (const auto &[e, phi] : m_components) {
            Rational v = phi(exp.vector());
            if (v == 0) {
                continue;
            }
            v *= c;
            out.accumulate(Exponent(exp.vector() + e), v);
            if (lifted) {
                out.accumulate(Exponent::infinity(), -v);
            }
        }
    }
    return out;
}

AlgebraElement Derivation::iterate(const AlgebraElement &f, long n) const
{
    if (n < 0) {
        throw InvalidArgument("iteration count must be nonnegative");
    }
    AlgebraElement g = f;
    for (long k = 0; k < n && !g.is_zero(); ++k) {
        g = apply(g);
    }
    if (n > 0 && g.is_zero()) {
        // Keep the carrier check even when the loop stops early.
        (void)apply(g);
    }
    return g;
}

// ---------------------------------------------------------------------------

Derivation from_generator_images(SemigroupPtr s, const std::map<LatticeVector, AlgebraElement> &images)
{
    const auto &hilbert = s->hilbert_basis();
    const auto &hilbert_m = s->hilbert_basis_m();
    // degree -> (Hilbert index -> prescribed value of phi_e)
    std::map<LatticeVector, std::map<std::size_t, Rational>> values;
    for (const auto &[h, image] : images) {
        std::size_t k = 0;
        while (k < hilbert.size() && hilbert[k] != h) {
            ++k;
        }
        if (k == hilbert.size()) {
            throw InvalidArgument(h.to_string() + " is not a Hilbert basis element; images must be given on the "
                                                  "Hilbert basis");
        }
        if (image.semigroup_ptr() != s || image.carrier() != Carrier::semigroup) {
            throw CarrierMismatch("generator image must be an element of C[S]");
        }
        for (const auto &[exp, c] : image.terms()) {
            values[exp.vector() - hilbert_m[k]][k] = c;
        }
    }

    std::vector<HomogeneousDerivation> components;
    for (const auto &[e, vals] : values) {
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (std::size_t k = 0; k < hilbert_m.size(); ++k) {
            std::vector<Rational> row;
            for (const auto &x : hilbert_m[k].coords()) {
                row.emplace_back(x);
            }
            rows.push_back(std::move(row));
            auto it = vals.find(k);
            rhs.push_back(it == vals.end() ? Rational(0) : it->second);
        }
        auto phi = solve_linear(std::move(rows), std::move(rhs));
        if (!phi) {
            std::string detail;
            for (std::size_t k = 0; k < hilbert.size(); ++k) {
                auto it = vals.find(k);
                detail += (k ? ", " : "") + std::string("phi(") + hilbert[k].to_string()
                          + ")=" + (it == vals.end() ? std::string("0") : it->second.get_str());
            }
            throw InconsistentImages("no linear form of degree " + s->from_m(e).to_string() + " satisfies " + detail);
        }
        components.push_back(HomogeneousDerivation::make_m(s, e, LinearForm(std::move(*phi))));
    }
    return Derivation(s, Carrier::semigroup, components);
}

Derivation from_compactified_images(SemigroupPtr s, const std::map<LatticeVector, AlgebraElement> &images)
{
    std::map<LatticeVector, AlgebraElement> finite;
    for (const auto &[h, image] : images) {
        if (image.semigroup_ptr() != s || image.carrier() != Carrier::compactified) {
            throw CarrierMismatch("generator image must be an element of C[S_inf]");
        }
        if (!in_I_infty(image)) {
            throw InconsistentImages("image of x^" + h.to_string() + " is " + image.to_string()
                                     + ", which does not annihilate x^inf");
        }
        finite.emplace(h, image.finite_part().with_carrier(Carrier::semigroup));
    }
    Derivation d = lift(from_generator_images(s, finite));
    for (const auto &[h, image] : images) {
        if (d.apply(AlgebraElement::monomial(s, h, 1, Carrier::compactified)) != image) {
            throw InconsistentImages("image of x^" + h.to_string() + " is not the lift of its finite part");
        }
    }
    return d;
}

Derivation lift(const Derivation &d)
{
    if (d.carrier() != Carrier::semigroup) {
        throw CarrierMismatch("lift expects a derivation on C[S]");
    }
    return Derivation(d.semigroup_ptr(), Carrier::compactified, d.components());
}

Derivation project(const Derivation &d)
{
    if (d.carrier() != Carrier::compactified) {
        throw CarrierMismatch("project expects a derivation on C[S_inf]");
    }
    const auto &s = d.semigroup_ptr();
    std::map<LatticeVector, AlgebraElement> images;
    for (const auto &h : s->hilbert_basis()) {
        AlgebraElement image = d.apply(AlgebraElement::monomial(s, h, 1, Carrier::compactified));
        images.emplace(h, image.finite_part().with_carrier(Carrier::semigroup));
    }
    return from_generator_images(s, images);
}

// ---------------------------------------------------------------------------

LndVerdict lnd_oracle(const Derivation &d, long depth)
{
    LndVerdict v;
    v.method = LndVerdict::Method::bounded_oracle;
    v.depth = depth;
    v.lnd = true;
    const auto &s = d.semigroup_ptr();
    for (const auto &h : s->hilbert_basis()) {
        AlgebraElement f = d.iterate(AlgebraElement::monomial(s, h, 1, d.carrier()), depth);
        if (!f.is_zero()) {
            v.lnd = false;
            v.witness = h;
            break;
        }
    }
    return v;
}

LndVerdict is_lnd(const Derivation &d, long depth)
{
    if (d.carrier() == Carrier::compactified) {
        return is_lnd(project(d), depth);
    }
    if (d.is_zero()) {
        return LndVerdict{true, LndVerdict::Method::closed_form, 0, std::nullopt, std::nullopt, std::nullopt};
    }
    if (d.num_components() > 1) {
        return lnd_oracle(d, depth);
    }

    const auto &[e, phi] = *d.component_map().begin();
    const auto &rays = d.semigroup().dual_rays();
    for (std::size_t k = 0; k < rays.size(); ++k) {
        if (pairing(e, rays[k]) != -1) {
            continue;
        }
        bool root = true;
        for (std::size_t l = 0; l < rays.size() && root; ++l) {
            root = l == k || pairing(e, rays[l]) >= 0;
        }
        if (!root) {
            continue;
        }
        if (auto lambda = phi.multiple_of(rays[k])) {
            // Closure of the component is exactly the stabilization condition
            // for this root, so e is a root of S.
            return LndVerdict{true, LndVerdict::Method::closed_form, 0, k, *lambda, std::nullopt};
        }
    }
    // Not of root type; attach a nonvanishing orbit as evidence.
    LndVerdict v = lnd_oracle(d, depth);
    v.lnd = false;
    v.method = LndVerdict::Method::closed_form;
    return v;
}

} // namespace onepoint
