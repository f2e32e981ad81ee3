#include <onepoint/lattice.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace onepoint
{

LatticeVector::LatticeVector(std::initializer_list<long> coords)
{
    m_coords.reserve(coords.size());
    for (long c : coords) {
        m_coords.emplace_back(c);
    }
}

bool LatticeVector::is_zero() const
{
    return std::all_of(m_coords.begin(), m_coords.end(), [](const Integer &c) { return c == 0; });
}

Integer LatticeVector::content() const
{
    Integer g(0);
    for (const auto &c : m_coords) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    return g;
}

LatticeVector LatticeVector::primitive() const
{
    Integer g = content();
    if (g == 0) {
        throw InvalidArgument("zero vector has no primitive representative");
    }
    LatticeVector out(*this);
    for (auto &c : out.m_coords) {
        c /= g;
    }
    return out;
}

Integer LatticeVector::max_abs() const
{
    Integer m(0);
    for (const auto &c : m_coords) {
        Integer a = abs(c);
        if (a > m) {
            m = a;
        }
    }
    return m;
}

LatticeVector &LatticeVector::operator+=(const LatticeVector &other)
{
    if (rank() != other.rank()) {
        throw DimensionMismatch("vector ranks differ: " + std::to_string(rank()) + " vs "
                                + std::to_string(other.rank()));
    }
    for (std::size_t i = 0; i < rank(); ++i) {
        m_coords[i] += other.m_coords[i];
    }
    return *this;
}

LatticeVector &LatticeVector::operator-=(const LatticeVector &other)
{
    if (rank() != other.rank()) {
        throw DimensionMismatch("vector ranks differ: " + std::to_string(rank()) + " vs "
                                + std::to_string(other.rank()));
    }
    for (std::size_t i = 0; i < rank(); ++i) {
        m_coords[i] -= other.m_coords[i];
    }
    return *this;
}

LatticeVector LatticeVector::operator-() const
{
    LatticeVector out(*this);
    for (auto &c : out.m_coords) {
        c = -c;
    }
    return out;
}

LatticeVector operator*(const Integer &k, const LatticeVector &v)
{
    LatticeVector out(v);
    for (auto &c : out.m_coords) {
        c *= k;
    }
    return out;
}

bool operator<(const LatticeVector &a, const LatticeVector &b)
{
    if (a.rank() != b.rank()) {
        return a.rank() < b.rank();
    }
    for (std::size_t i = 0; i < a.rank(); ++i) {
        int c = cmp(a.m_coords[i], b.m_coords[i]);
        if (c != 0) {
            return c < 0;
        }
    }
    return false;
}

std::string LatticeVector::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < m_coords.size(); ++i) {
        if (i) {
            s += ",";
        }
        s += m_coords[i].get_str();
    }
    return s + "]";
}

std::ostream &operator<<(std::ostream &os, const LatticeVector &v)
{
    return os << v.to_string();
}

Integer pairing(const LatticeVector &m, const LatticeVector &u)
{
    if (m.rank() != u.rank()) {
        throw DimensionMismatch("pairing of rank " + std::to_string(m.rank()) + " with rank "
                                + std::to_string(u.rank()));
    }
    Integer s(0);
    for (std::size_t i = 0; i < m.rank(); ++i) {
        s += m[i] * u[i];
    }
    return s;
}

// ---------------------------------------------------------------------------
// LinearForm

LinearForm LinearForm::from(const LatticeVector &u)
{
    std::vector<Rational> c;
    c.reserve(u.rank());
    for (const auto &x : u.coords()) {
        c.emplace_back(x);
    }
    return LinearForm(std::move(c));
}

bool LinearForm::is_zero() const
{
    return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const Rational &c) { return c == 0; });
}

Rational LinearForm::operator()(const LatticeVector &m) const
{
    if (m.rank() != rank()) {
        throw DimensionMismatch("linear form of rank " + std::to_string(rank()) + " applied to rank "
                                + std::to_string(m.rank()));
    }
    Rational s(0);
    for (std::size_t i = 0; i < rank(); ++i) {
        if (m[i] != 0) {
            s += m_coeffs[i] * m[i];
        }
    }
    return s;
}

LinearForm &LinearForm::operator+=(const LinearForm &other)
{
    if (rank() != other.rank()) {
        throw DimensionMismatch("linear form ranks differ");
    }
    for (std::size_t i = 0; i < rank(); ++i) {
        m_coeffs[i] += other.m_coeffs[i];
    }
    return *this;
}

LinearForm operator*(const Rational &k, const LinearForm &f)
{
    LinearForm out(f);
    for (auto &c : out.m_coeffs) {
        c *= k;
    }
    return out;
}

std::optional<Rational> LinearForm::multiple_of(const LatticeVector &u) const
{
    if (u.rank() != rank()) {
        throw DimensionMismatch("linear form ranks differ");
    }
    if (is_zero()) {
        return Rational(0);
    }
    std::optional<Rational> lambda;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (u[i] != 0) {
            lambda = m_coeffs[i] / Rational(u[i]);
            break;
        }
    }
    if (!lambda) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i < rank(); ++i) {
        if (m_coeffs[i] != *lambda * u[i]) {
            return std::nullopt;
        }
    }
    return lambda;
}

std::string LinearForm::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
        if (i) {
            s += ",";
        }
        s += m_coeffs[i].get_str();
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// Lattice bases

namespace
{

void check_uniform(const std::vector<LatticeVector> &vs)
{
    for (const auto &v : vs) {
        if (v.rank() != vs.front().rank()) {
            throw DimensionMismatch("generators have mixed ranks " + std::to_string(vs.front().rank()) + " and "
                                    + std::to_string(v.rank()));
        }
    }
}

} // namespace

LatticeBasis lattice_basis(const std::vector<LatticeVector> &generators)
{
    if (generators.empty()) {
        throw InvalidArgument("lattice_basis: empty generator list");
    }
    check_uniform(generators);
    const std::size_t n = generators.front().rank();
    std::vector<LatticeVector> rows = generators;
    std::vector<std::size_t> pivots;
    std::size_t p = 0;

    for (std::size_t col = 0; col < n && p < rows.size(); ++col) {
        bool have_pivot = false;
        while (true) {
            // Smallest nonzero entry in this column becomes the pivot candidate.
            std::size_t best = rows.size();
            for (std::size_t r = p; r < rows.size(); ++r) {
                if (rows[r][col] != 0 && (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col]))) {
                    best = r;
                }
            }
            if (best == rows.size()) {
                break;
            }
            have_pivot = true;
            std::swap(rows[p], rows[best]);
            bool clean = true;
            for (std::size_t r = p + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) {
                    continue;
                }
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[p][col].get_mpz_t());
                rows[r] -= q * rows[p];
                if (rows[r][col] != 0) {
                    clean = false;
                }
            }
            if (clean) {
                break;
            }
        }
        if (!have_pivot) {
            continue;
        }
        if (rows[p][col] < 0) {
            rows[p] = -rows[p];
        }
        for (std::size_t r = 0; r < p; ++r) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[p][col].get_mpz_t());
            if (q != 0) {
                rows[r] -= q * rows[p];
            }
        }
        pivots.push_back(col);
        ++p;
    }
    rows.resize(p);

    LatticeBasis b;
    b.m_ambient = n;
    b.m_rows = std::move(rows);
    b.m_pivots = std::move(pivots);
    return b;
}

std::optional<LatticeVector> LatticeBasis::coordinates(const LatticeVector &a) const
{
    if (a.rank() != m_ambient) {
        throw DimensionMismatch("vector of rank " + std::to_string(a.rank()) + " against lattice in rank "
                                + std::to_string(m_ambient));
    }
    LatticeVector residual(a);
    LatticeVector c(rank());
    for (std::size_t k = 0; k < rank(); ++k) {
        const Integer &pivot = m_rows[k][m_pivots[k]];
        const Integer &entry = residual[m_pivots[k]];
        if (!mpz_divisible_p(entry.get_mpz_t(), pivot.get_mpz_t())) {
            return std::nullopt;
        }
        c[k] = entry / pivot;
        if (c[k] != 0) {
            residual -= c[k] * m_rows[k];
        }
    }
    if (!residual.is_zero()) {
        return std::nullopt;
    }
    return c;
}

LatticeVector LatticeBasis::from_coordinates(const LatticeVector &c) const
{
    if (c.rank() != rank()) {
        throw DimensionMismatch("coordinate vector of rank " + std::to_string(c.rank()) + " for basis of rank "
                                + std::to_string(rank()));
    }
    LatticeVector a(m_ambient);
    for (std::size_t k = 0; k < rank(); ++k) {
        if (c[k] != 0) {
            a += c[k] * m_rows[k];
        }
    }
    return a;
}

LinearForm LatticeBasis::restrict(const LinearForm &ambient) const
{
    if (ambient.rank() != m_ambient) {
        throw DimensionMismatch("linear form of rank " + std::to_string(ambient.rank()) + " in ambient rank "
                                + std::to_string(m_ambient));
    }
    std::vector<Rational> c;
    c.reserve(rank());
    for (const auto &row : m_rows) {
        c.push_back(ambient(row));
    }
    return LinearForm(std::move(c));
}

LinearForm LatticeBasis::extend(const LinearForm &on_basis) const
{
    if (on_basis.rank() != rank()) {
        throw DimensionMismatch("linear form of rank " + std::to_string(on_basis.rank()) + " for basis of rank "
                                + std::to_string(rank()));
    }
    std::vector<std::vector<Rational>> a;
    for (const auto &row : m_rows) {
        std::vector<Rational> r;
        for (const auto &x : row.coords()) {
            r.emplace_back(x);
        }
        a.push_back(std::move(r));
    }
    auto x = solve_linear(std::move(a), on_basis.coeffs());
    // Basis rows are independent, so the system is always solvable.
    return LinearForm(std::move(*x));
}

std::optional<LatticeVector> in_lattice(const LatticeVector &a, const LatticeBasis &basis)
{
    return basis.coordinates(a);
}

// ---------------------------------------------------------------------------
// Linear algebra

Integer determinant(std::vector<std::vector<Integer>> m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return Integer(1);
    }
    // Bareiss fraction-free elimination.
    int sign = 1;
    Integer prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) {
                ++swap_row;
            }
            if (swap_row == n) {
                return Integer(0);
            }
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

namespace
{

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>> &a, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0) {
            ++piv;
        }
        if (piv == a.size()) {
            continue;
        }
        std::swap(a[r], a[piv]);
        Rational inv = 1 / a[r][c];
        for (auto &x : a[r]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) {
                continue;
            }
            Rational f = a[i][c];
            for (std::size_t j = 0; j < a[i].size(); ++j) {
                a[i][j] -= f * a[r][j];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rational_rank(const std::vector<LatticeVector> &vectors)
{
    if (vectors.empty()) {
        return 0;
    }
    check_uniform(vectors);
    std::vector<std::vector<Rational>> a;
    for (const auto &v : vectors) {
        std::vector<Rational> row;
        for (const auto &x : v.coords()) {
            row.emplace_back(x);
        }
        a.push_back(std::move(row));
    }
    return rref(a, vectors.front().rank()).size();
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    if (a.size() != b.size()) {
        throw DimensionMismatch("solve_linear: row count differs from right-hand side");
    }
    std::size_t ncols = a.empty() ? 0 : a.front().size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != ncols) {
            throw DimensionMismatch("solve_linear: ragged matrix");
        }
        a[i].push_back(b[i]);
    }
    auto pivots = rref(a, ncols);
    for (std::size_t i = pivots.size(); i < a.size(); ++i) {
        if (a[i][ncols] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Rational> x(ncols, Rational(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        x[pivots[k]] = a[k][ncols];
    }
    return x;
}

namespace
{

// Scales so the first nonzero coefficient has absolute value one.
void normalize(LinearConstraint &c)
{
    for (const auto &x : c.coeffs) {
        if (x != 0) {
            Rational s = abs(x);
            for (auto &y : c.coeffs) {
                y /= s;
            }
            c.rhs /= s;
            return;
        }
    }
}

bool trivial(const LinearConstraint &c)
{
    return std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Rational &x) { return x == 0; });
}

} // namespace

bool fourier_motzkin_feasible(std::size_t num_vars, std::vector<LinearConstraint> equalities,
                              std::vector<LinearConstraint> inequalities)
{
    for (const auto &c : equalities) {
        if (c.coeffs.size() != num_vars) {
            throw DimensionMismatch("constraint width differs from variable count");
        }
    }
    for (const auto &c : inequalities) {
        if (c.coeffs.size() != num_vars) {
            throw DimensionMismatch("constraint width differs from variable count");
        }
    }

    // Substitute equalities away first.
    for (std::size_t e = 0; e < equalities.size(); ++e) {
        const LinearConstraint eq = equalities[e];
        std::size_t k = 0;
        while (k < num_vars && eq.coeffs[k] == 0) {
            ++k;
        }
        if (k == num_vars) {
            if (eq.rhs != 0) {
                return false;
            }
            continue;
        }
        auto eliminate = [&](LinearConstraint &c) {
            if (c.coeffs[k] == 0) {
                return;
            }
            Rational f = c.coeffs[k] / eq.coeffs[k];
            for (std::size_t j = 0; j < num_vars; ++j) {
                c.coeffs[j] -= f * eq.coeffs[j];
            }
            c.rhs -= f * eq.rhs;
        };
        for (std::size_t o = e + 1; o < equalities.size(); ++o) {
            eliminate(equalities[o]);
        }
        for (auto &c : inequalities) {
            eliminate(c);
        }
    }

    for (std::size_t k = 0; k < num_vars; ++k) {
        std::vector<LinearConstraint> pos, neg, next;
        for (auto &c : inequalities) {
            int s = sgn(c.coeffs[k]);
            if (s > 0) {
                pos.push_back(std::move(c));
            } else if (s < 0) {
                neg.push_back(std::move(c));
            } else {
                next.push_back(std::move(c));
            }
        }
        for (const auto &p : pos) {
            for (const auto &q : neg) {
                LinearConstraint c;
                Rational fp = 1 / p.coeffs[k];
                Rational fq = -1 / q.coeffs[k];
                c.coeffs.resize(num_vars);
                for (std::size_t j = 0; j < num_vars; ++j) {
                    c.coeffs[j] = fp * p.coeffs[j] + fq * q.coeffs[j];
                }
                c.coeffs[k] = 0;
                c.rhs = fp * p.rhs + fq * q.rhs;
                next.push_back(std::move(c));
            }
        }
        // Drop constant rows (checking them) and duplicates, keeping the tightest bound.
        std::set<std::vector<Rational>> seen;
        std::vector<LinearConstraint> dedup;
        for (auto &c : next) {
            if (trivial(c)) {
                if (c.rhs < 0) {
                    return false;
                }
                continue;
            }
            normalize(c);
            dedup.push_back(std::move(c));
        }
        std::sort(dedup.begin(), dedup.end(), [](const LinearConstraint &a, const LinearConstraint &b) {
            if (a.coeffs != b.coeffs) {
                return a.coeffs < b.coeffs;
            }
            return a.rhs < b.rhs;
        });
        inequalities.clear();
        for (auto &c : dedup) {
            if (seen.insert(c.coeffs).second) {
                inequalities.push_back(std::move(c));
            }
        }
    }
    for (const auto &c : inequalities) {
        if (c.rhs < 0) {
            return false;
        }
    }
    return true;
}

bool nonnegative_combination_exists(const std::vector<LatticeVector> &generators, const LatticeVector &target)
{
    if (generators.empty()) {
        return target.is_zero();
    }
    check_uniform(generators);
    if (target.rank() != generators.front().rank()) {
        throw DimensionMismatch("target rank differs from generator rank");
    }
    const std::size_t nv = generators.size();
    std::vector<LinearConstraint> eqs, ineqs;
    for (std::size_t i = 0; i < target.rank(); ++i) {
        LinearConstraint c;
        for (const auto &g : generators) {
            c.coeffs.emplace_back(g[i]);
        }
        c.rhs = target[i];
        eqs.push_back(std::move(c));
    }
    for (std::size_t k = 0; k < nv; ++k) {
        LinearConstraint c{std::vector<Rational>(nv, Rational(0)), Rational(0)};
        c.coeffs[k] = -1;
        ineqs.push_back(std::move(c));
    }
    return fourier_motzkin_feasible(nv, std::move(eqs), std::move(ineqs));
}

// ---------------------------------------------------------------------------
// Cones

Cone::Cone(std::vector<LatticeVector> generators) : m_generators(std::move(generators))
{
    if (m_generators.empty()) {
        throw InvalidArgument("cone: empty generator list");
    }
    check_uniform(m_generators);
    m_dim = m_generators.front().rank();
    if (rational_rank(m_generators) != m_dim) {
        throw RankDeficient("cone generators do not span a space of dimension " + std::to_string(m_dim)
                            + "; pass to lattice coordinates first");
    }

    const std::size_t r = m_dim;
    const std::size_t n = m_generators.size();
    std::set<LatticeVector> rays;
    std::vector<std::size_t> idx(r - 1);
    for (std::size_t i = 0; i + 1 < r; ++i) {
        idx[i] = i;
    }
    auto consider = [&]() {
        // Generalized cross product of the chosen r-1 generators.
        LatticeVector normal(r);
        for (std::size_t col = 0; col < r; ++col) {
            std::vector<std::vector<Integer>> minor;
            for (std::size_t s : idx) {
                std::vector<Integer> row;
                for (std::size_t j = 0; j < r; ++j) {
                    if (j != col) {
                        row.push_back(m_generators[s][j]);
                    }
                }
                minor.push_back(std::move(row));
            }
            Integer d = determinant(std::move(minor));
            normal[col] = (col % 2 == 0) ? d : Integer(-d);
        }
        if (normal.is_zero()) {
            return;
        }
        normal = normal.primitive();
        bool nonneg = true, nonpos = true;
        for (const auto &g : m_generators) {
            int s = sgn(pairing(g, normal));
            nonneg = nonneg && s >= 0;
            nonpos = nonpos && s <= 0;
        }
        if (nonneg) {
            rays.insert(normal);
        } else if (nonpos) {
            rays.insert(-normal);
        }
    };
    if (r - 1 <= n) {
        while (true) {
            consider();
            // Next combination in lexicographic order.
            std::size_t k = r - 1;
            while (k > 0 && idx[k - 1] == n - (r - 1) + (k - 1)) {
                --k;
            }
            if (k == 0) {
                break;
            }
            ++idx[k - 1];
            for (std::size_t j = k; j < r - 1; ++j) {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    m_dual_rays.assign(rays.begin(), rays.end());
}

std::vector<LatticeVector> dual_rays(const Cone &cone)
{
    return cone.dual_rays();
}

bool is_strongly_convex(const Cone &cone)
{
    const auto &gens = cone.generators();
    const std::size_t nv = gens.size();
    std::vector<LinearConstraint> eqs, ineqs;
    for (std::size_t i = 0; i < cone.dim(); ++i) {
        LinearConstraint c;
        for (const auto &g : gens) {
            c.coeffs.emplace_back(g[i]);
        }
        c.rhs = 0;
        eqs.push_back(std::move(c));
    }
    eqs.push_back({std::vector<Rational>(nv, Rational(1)), Rational(1)});
    for (std::size_t k = 0; k < nv; ++k) {
        LinearConstraint c{std::vector<Rational>(nv, Rational(0)), Rational(0)};
        c.coeffs[k] = -1;
        ineqs.push_back(std::move(c));
    }
    return !fourier_motzkin_feasible(nv, std::move(eqs), std::move(ineqs));
}

bool in_cone(const LatticeVector &a, const Cone &cone)
{
    if (a.rank() != cone.dim()) {
        throw DimensionMismatch("vector rank differs from cone dimension");
    }
    return std::all_of(cone.dual_rays().begin(), cone.dual_rays().end(),
                       [&](const LatticeVector &u) { return pairing(a, u) >= 0; });
}

std::vector<LatticeVector> demazure_roots(const Cone &cone, std::size_t ray_index, long box)
{
    if (!is_strongly_convex(cone)) {
        throw NotPointed("demazure_roots: cone is not strongly convex");
    }
    const auto &rays = cone.dual_rays();
    if (ray_index >= rays.size()) {
        throw InvalidArgument("demazure_roots: ray index " + std::to_string(ray_index) + " out of range (cone has "
                              + std::to_string(rays.size()) + " rays)");
    }
    std::vector<LatticeVector> out;
    if (box < 0) {
        return out;
    }
    const std::size_t r = cone.dim();
    LatticeVector e(r);
    for (std::size_t i = 0; i < r; ++i) {
        e[i] = -box;
    }
    while (true) {
        bool ok = pairing(e, rays[ray_index]) == -1;
        for (std::size_t k = 0; ok && k < rays.size(); ++k) {
            if (k != ray_index && pairing(e, rays[k]) < 0) {
                ok = false;
            }
        }
        if (ok) {
            out.push_back(e);
        }
        // Odometer with the last coordinate fastest gives lexicographic order.
        std::size_t i = r;
        while (i > 0 && e[i - 1] == box) {
            e[i - 1] = -box;
            --i;
        }
        if (i == 0) {
            break;
        }
        ++e[i - 1];
    }
    return out;
}

} // namespace onepoint
