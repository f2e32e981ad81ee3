#include <onepoint/io.hpp>

#include <cctype>
#include <sstream>

namespace onepoint
{

namespace
{

// 1-based line and column (in code points) of a byte offset.
std::pair<std::size_t, std::size_t> locate(const std::string &text, std::size_t byte)
{
    std::size_t line = 1, column = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        unsigned char c = text[k];
        if (c == '\n') {
            ++line;
            column = 1;
        } else if ((c & 0xC0) != 0x80) {
            ++column;
        }
    }
    return {line, column};
}

Integer integer_from_json(const Json &j)
{
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Integer(std::to_string(j.get<unsigned long long>()))
                                      : Integer(std::to_string(j.get<long long>()));
    }
    if (j.is_string()) {
        Integer z;
        const auto &s = j.get_ref<const std::string &>();
        if (s.empty() || z.set_str(s, 10) != 0) {
            throw InvalidArgument("not an integer: \"" + s + "\"");
        }
        return z;
    }
    throw InvalidArgument("expected an integer, got " + j.dump());
}

Json integer_to_json(const Integer &z)
{
    if (z.fits_slong_p()) {
        return Json(z.get_si());
    }
    return Json(z.get_str());
}

const Json &require(const Json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidArgument(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

Carrier carrier_from_json(const Json &j)
{
    if (j == "S") {
        return Carrier::semigroup;
    }
    if (j == "S_inf") {
        return Carrier::compactified;
    }
    throw InvalidArgument("carrier must be \"S\" or \"S_inf\", got " + j.dump());
}

// Recursive-descent reader for the element syntax.
class ElementParser
{
public:
    ElementParser(const SemigroupPtr &s, const std::string &text) : m_s(s), m_text(text) {}

    AlgebraElement::Terms parse(bool allow_inf)
    {
        AlgebraElement::Terms terms;
        auto add = [&terms](Exponent e, const Rational &c) {
            auto [it, inserted] = terms.emplace(e, c);
            if (!inserted) {
                it->second += c;
            }
        };
        skip_ws();
        int sign = 1;
        if (auto m = minus_len()) {
            sign = -1;
            m_pos += m;
        } else if (peek() == '+') {
            ++m_pos;
        }
        do {
            skip_ws();
            auto [e, c] = term(allow_inf);
            add(std::move(e), sign * c);
            skip_ws();
            if (m_pos == m_text.size()) {
                break;
            }
            if (peek() == '+') {
                sign = 1;
                ++m_pos;
            } else if (auto m = minus_len()) {
                sign = -1;
                m_pos += m;
            } else {
                fail("expected '+' or '-'");
            }
        } while (true);
        std::erase_if(terms, [](const auto &kv) { return kv.second == 0; });
        return terms;
    }

private:
    [[noreturn]] void fail(const std::string &what) const
    {
        auto [line, column] = locate(m_text, m_pos);
        throw ParseError("bad element \"" + m_text + "\": " + what, line, column);
    }

    char peek() const { return m_pos < m_text.size() ? m_text[m_pos] : '\0'; }

    std::size_t minus_len() const
    {
        if (peek() == '-') {
            return 1;
        }
        if (m_text.compare(m_pos, 3, "\xE2\x88\x92") == 0) {
            return 3;
        }
        return 0;
    }

    void skip_ws()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }

    std::string digits()
    {
        std::size_t start = m_pos;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            ++m_pos;
        }
        if (start == m_pos) {
            fail("expected a number");
        }
        return m_text.substr(start, m_pos - start);
    }

    Integer signed_integer()
    {
        skip_ws();
        bool neg = false;
        if (auto m = minus_len()) {
            neg = true;
            m_pos += m;
        }
        Integer z(digits());
        return neg ? Integer(-z) : z;
    }

    std::pair<Exponent, Rational> term(bool allow_inf)
    {
        Rational c(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            if (peek() == '/') {
                ++m_pos;
                std::string den = digits();
                if (Integer(den) == 0) {
                    fail("zero denominator");
                }
                c = Rational(Integer(num), Integer(den));
                c.canonicalize();
            } else {
                c = Rational(Integer(num));
            }
            have_coeff = true;
            skip_ws();
            if (peek() != '*') {
                return {Exponent(LatticeVector(m_s->rank())), c};
            }
            ++m_pos;
            skip_ws();
        }
        if (peek() != 'x') {
            fail(have_coeff ? "expected a monomial after '*'" : "expected a coefficient or monomial");
        }
        ++m_pos;
        skip_ws();
        if (peek() != '^') {
            fail("expected '^'");
        }
        ++m_pos;
        skip_ws();
        if (m_text.compare(m_pos, 3, "inf") == 0) {
            if (!allow_inf) {
                fail("x^inf is not an element of C[S]");
            }
            m_pos += 3;
            return {Exponent::infinity(), c};
        }
        std::size_t at = m_pos;
        std::vector<Integer> coords;
        if (peek() == '[') {
            ++m_pos;
            coords.push_back(signed_integer());
            skip_ws();
            while (peek() == ',') {
                ++m_pos;
                coords.push_back(signed_integer());
                skip_ws();
            }
            if (peek() != ']') {
                fail("expected ']'");
            }
            ++m_pos;
        } else {
            coords.push_back(signed_integer());
        }
        if (coords.size() != m_s->ambient_rank()) {
            m_pos = at;
            fail("exponent has " + std::to_string(coords.size()) + " coordinates, expected "
                 + std::to_string(m_s->ambient_rank()));
        }
        LatticeVector a(std::move(coords));
        auto m = m_s->to_m(a);
        if (!m) {
            throw NotInSemigroup("x^" + a.to_string() + " is not a monomial of the semigroup algebra");
        }
        return {Exponent(std::move(*m)), c};
    }

    const SemigroupPtr &m_s;
    const std::string &m_text;
    std::size_t m_pos = 0;
};

} // namespace

Json parse_json(const std::string &text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        auto [line, column] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
        std::string what = e.what();
        // Drop the library's "[json.exception.parse_error.101] " prefix.
        if (auto p = what.find("] "); p != std::string::npos) {
            what = what.substr(p + 2);
        }
        throw ParseError("malformed JSON: " + what, line, column);
    }
}

Json rational_to_json(const Rational &q)
{
    return Json(q.get_str());
}

Rational rational_from_json(const Json &j)
{
    if (j.is_number_integer()) {
        return Rational(integer_from_json(j));
    }
    if (j.is_string()) {
        const auto &s = j.get_ref<const std::string &>();
        auto slash = s.find('/');
        Integer num, den(1);
        if (s.empty() || num.set_str(s.substr(0, slash), 10) != 0
            || (slash != std::string::npos && den.set_str(s.substr(slash + 1), 10) != 0)) {
            throw InvalidArgument("not a rational number: \"" + s + "\"");
        }
        if (den == 0) {
            throw InvalidArgument("zero denominator in \"" + s + "\"");
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    throw InvalidArgument("expected a rational number, got " + j.dump());
}

Json vector_to_json(const LatticeVector &v)
{
    Json out = Json::array();
    for (const auto &x : v.coords()) {
        out.push_back(integer_to_json(x));
    }
    return out;
}

LatticeVector vector_from_json(const Json &j, std::size_t rank)
{
    if (!j.is_array()) {
        throw InvalidArgument("expected an integer array, got " + j.dump());
    }
    if (j.size() != rank) {
        throw DimensionMismatch("vector " + j.dump() + " has " + std::to_string(j.size()) + " entries, expected "
                                + std::to_string(rank));
    }
    std::vector<Integer> coords;
    for (const auto &x : j) {
        coords.push_back(integer_from_json(x));
    }
    return LatticeVector(std::move(coords));
}

SemigroupPtr semigroup_from_json(const Json &j)
{
    const Json &r = require(j, "ambient_rank");
    if (!r.is_number_integer() || r.get<long long>() < 1) {
        throw InvalidArgument("ambient_rank must be a positive integer");
    }
    std::size_t rank = r.get<std::size_t>();
    const Json &gens = require(j, "generators");
    if (!gens.is_array()) {
        throw InvalidArgument("generators must be an array");
    }
    std::vector<LatticeVector> vs;
    for (const auto &g : gens) {
        vs.push_back(vector_from_json(g, rank));
    }
    return AffineSemigroup::build(rank, std::move(vs));
}

Json semigroup_to_json(const AffineSemigroup &s)
{
    Json gens = Json::array();
    for (const auto &g : s.generators()) {
        gens.push_back(vector_to_json(g));
    }
    return Json{{"ambient_rank", s.ambient_rank()}, {"generators", gens}};
}

AlgebraElement parse_element(SemigroupPtr s, const std::string &text, Carrier carrier)
{
    ElementParser p(s, text);
    auto terms = p.parse(carrier == Carrier::compactified);
    return AlgebraElement::from_terms(std::move(s), carrier, terms);
}

Json element_to_json(const AlgebraElement &f)
{
    Json terms = Json::array();
    for (const auto &[e, c] : f.ordered_terms()) {
        Json exp = e.is_infinity() ? Json("inf") : vector_to_json(f.semigroup().from_m(e.vector()));
        terms.push_back(Json{{"exponent", exp}, {"coefficient", rational_to_json(c)}});
    }
    return Json{{"carrier", carrier_name(f.carrier())}, {"terms", terms}, {"text", f.to_string()}};
}

AlgebraElement element_from_json(SemigroupPtr s, const Json &j)
{
    Carrier carrier = carrier_from_json(require(j, "carrier"));
    AlgebraElement::Terms terms;
    for (const auto &t : require(j, "terms")) {
        const Json &exp = require(t, "exponent");
        Rational c = rational_from_json(require(t, "coefficient"));
        if (exp == "inf") {
            terms[Exponent::infinity()] += c;
            continue;
        }
        LatticeVector a = vector_from_json(exp, s->ambient_rank());
        auto m = s->to_m(a);
        if (!m) {
            throw NotInSemigroup("x^" + a.to_string() + " is not a monomial of the semigroup algebra");
        }
        terms[Exponent(std::move(*m))] += c;
    }
    std::erase_if(terms, [](const auto &kv) { return kv.second == 0; });
    return AlgebraElement::from_terms(std::move(s), carrier, terms);
}

Derivation derivation_from_json(SemigroupPtr s, const Json &j)
{
    if (!j.is_object()) {
        throw InvalidArgument("derivation spec must be a JSON object");
    }
    const bool has_components = j.contains("components");
    const bool has_images = j.contains("images");
    if (has_components == has_images) {
        throw InvalidArgument("derivation spec needs exactly one of \"components\" or \"images\"");
    }
    std::optional<Carrier> carrier;
    if (j.contains("carrier")) {
        carrier = carrier_from_json(j.at("carrier"));
    }

    if (has_components) {
        const Json &comps = j.at("components");
        if (!comps.is_array()) {
            throw InvalidArgument("components must be an array");
        }
        std::vector<HomogeneousDerivation> hs;
        for (const auto &c : comps) {
            LatticeVector e = vector_from_json(require(c, "degree"), s->ambient_rank());
            const Json &phi = require(c, "phi");
            if (!phi.is_array() || phi.size() != s->ambient_rank()) {
                throw DimensionMismatch("phi must be an array of " + std::to_string(s->ambient_rank())
                                        + " rationals");
            }
            std::vector<Rational> coeffs;
            for (const auto &x : phi) {
                coeffs.push_back(rational_from_json(x));
            }
            hs.push_back(HomogeneousDerivation::make(s, e, LinearForm(std::move(coeffs))));
        }
        return Derivation(s, carrier.value_or(Carrier::semigroup), hs);
    }

    const Json &imgs = j.at("images");
    if (!imgs.is_object()) {
        throw InvalidArgument("images must be an object mapping \"[h]\" to element strings");
    }
    std::map<LatticeVector, std::string> raw;
    bool mentions_inf = false;
    for (const auto &[key, value] : imgs.items()) {
        if (!value.is_string()) {
            throw InvalidArgument("image of " + key + " must be an element string");
        }
        LatticeVector h = vector_from_json(parse_json(key), s->ambient_rank());
        const auto &text = value.get_ref<const std::string &>();
        mentions_inf = mentions_inf || text.find("inf") != std::string::npos;
        raw.emplace(std::move(h), text);
    }
    if (mentions_inf && carrier == Carrier::semigroup) {
        throw CarrierMismatch("images mention x^inf but the carrier is S");
    }
    if (mentions_inf) {
        std::map<LatticeVector, AlgebraElement> images;
        for (const auto &[h, text] : raw) {
            images.emplace(h, parse_element(s, text, Carrier::compactified));
        }
        return from_compactified_images(s, images);
    }
    std::map<LatticeVector, AlgebraElement> images;
    for (const auto &[h, text] : raw) {
        images.emplace(h, parse_element(s, text, Carrier::semigroup));
    }
    Derivation d = from_generator_images(s, images);
    return carrier == Carrier::compactified ? lift(d) : d;
}

Json derivation_to_json(const Derivation &d)
{
    Json comps = Json::array();
    for (const auto &c : d.components()) {
        Json phi = Json::array();
        const LinearForm form = c.form();
        for (const auto &q : form.coeffs()) {
            phi.push_back(rational_to_json(q));
        }
        comps.push_back(Json{{"degree", vector_to_json(c.degree())}, {"phi", phi}});
    }
    return Json{{"carrier", carrier_name(d.carrier())}, {"components", comps}};
}

Json quotient_to_json(const FiniteQuotient &q)
{
    Json elements = Json::array();
    for (const auto &a : q.elements()) {
        elements.push_back(vector_to_json(a));
    }
    elements.push_back("inf");
    Json table = Json::array();
    for (FiniteQuotient::Slot a = 0; a < q.size(); ++a) {
        Json row = Json::array();
        for (FiniteQuotient::Slot b = 0; b < q.size(); ++b) {
            FiniteQuotient::Slot c = q.add(a, b);
            row.push_back(c == q.infinity() ? Json("inf") : vector_to_json(q.elements()[c]));
        }
        table.push_back(std::move(row));
    }
    return Json{{"level", q.level()}, {"elements", elements}, {"table", table}};
}

FiniteQuotient quotient_from_json(const Json &j)
{
    long level = require(j, "level").get<long>();
    const Json &elems = require(j, "elements");
    if (!elems.is_array() || elems.empty() || elems.back() != "inf") {
        throw InvalidArgument("elements must be an array ending in \"inf\"");
    }
    std::vector<LatticeVector> elements;
    for (std::size_t k = 0; k + 1 < elems.size(); ++k) {
        const Json &e = elems[k];
        elements.push_back(vector_from_json(e, e.is_array() ? e.size() : 0));
    }
    auto slot_of = [&](const Json &v) -> FiniteQuotient::Slot {
        for (std::size_t k = 0; k < elems.size(); ++k) {
            if (elems[k] == v) {
                return k;
            }
        }
        throw InvalidArgument("table entry " + v.dump() + " is not a listed element");
    };
    std::vector<std::vector<FiniteQuotient::Slot>> table;
    for (const auto &row : require(j, "table")) {
        std::vector<FiniteQuotient::Slot> r;
        for (const auto &v : row) {
            r.push_back(slot_of(v));
        }
        table.push_back(std::move(r));
    }
    return FiniteQuotient(level, std::move(elements), std::move(table));
}

Json bounds_to_json(const OracleBounds &b)
{
    return Json{{"i_max", b.i_max}, {"j_max", b.j_max}, {"n_max", b.n_max}, {"gen_span", b.gen_span}};
}

OracleBounds bounds_from_json(const Json &j)
{
    OracleBounds b;
    b.i_max = require(j, "i_max").get<long>();
    b.j_max = require(j, "j_max").get<long>();
    b.n_max = require(j, "n_max").get<long>();
    b.gen_span = require(j, "gen_span").get<long>();
    return b;
}

OracleBounds parse_bounds(const std::string &text)
{
    std::vector<long> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long x = -1;
        try {
            x = std::stol(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != item.size() || x < 0) {
            throw ParseError("bounds must be four nonnegative integers i,j,n,span", 1,
                             text.find(item) == std::string::npos ? 1 : text.find(item) + 1);
        }
        v.push_back(x);
    }
    if (v.size() != 4) {
        throw ParseError("bounds must be four nonnegative integers i,j,n,span", 1, 1);
    }
    return OracleBounds{v[0], v[1], v[2], v[3]};
}

Json witness_to_json(const Witness &w)
{
    return Json{{"kind", w.kind == Witness::Kind::p1 ? "p1" : "p2"},
                {"element", w.element.to_string()},
                {"iterations", w.iterations},
                {"i", w.level_i},
                {"j", w.level_j < 0 ? Json(nullptr) : Json(w.level_j)}};
}

Witness witness_from_json(SemigroupPtr s, const Json &j)
{
    const Json &kind = require(j, "kind");
    if (kind != "p1" && kind != "p2") {
        throw InvalidArgument("witness kind must be \"p1\" or \"p2\"");
    }
    const Json &jj = require(j, "j");
    return Witness{kind == "p1" ? Witness::Kind::p1 : Witness::Kind::p2,
                   parse_element(std::move(s), require(j, "element").get<std::string>(), Carrier::compactified),
                   require(j, "iterations").get<long>(), require(j, "i").get<long>(),
                   jj.is_null() ? -1 : jj.get<long>()};
}

Json verdict_to_json(const IntegrabilityVerdict &v, const std::optional<OracleBounds> &bounds)
{
    Json out{{"verdict", verdict_name(v.verdict)},
             {"branch", v.branch ? Json(branch_name(*v.branch)) : Json(nullptr)},
             {"witness", v.witness ? witness_to_json(*v.witness) : Json(nullptr)},
             {"criterion", v.criterion},
             {"note", v.note},
             {"bounds", bounds ? bounds_to_json(*bounds) : Json(nullptr)}};
    return out;
}

IntegrabilityVerdict verdict_from_json(SemigroupPtr s, const Json &j)
{
    IntegrabilityVerdict v;
    const Json &verdict = require(j, "verdict");
    if (verdict == "integrable") {
        v.verdict = Verdict::integrable;
    } else if (verdict == "not-integrable") {
        v.verdict = Verdict::not_integrable;
    } else if (verdict == "out-of-scope") {
        v.verdict = Verdict::out_of_scope;
    } else {
        throw InvalidArgument("unknown verdict " + verdict.dump());
    }
    const Json &branch = require(j, "branch");
    if (branch == "lnd") {
        v.branch = Branch::lnd;
    } else if (branch == "non-lnd") {
        v.branch = Branch::non_lnd;
    } else if (!branch.is_null()) {
        throw InvalidArgument("unknown branch " + branch.dump());
    }
    if (const Json &w = require(j, "witness"); !w.is_null()) {
        v.witness = witness_from_json(std::move(s), w);
    }
    v.criterion = j.value("criterion", "");
    v.note = j.value("note", "");
    return v;
}

Json tower_report_to_json(const TowerReport &r)
{
    return Json{{"pass", r.pass},
                {"failed_check", r.pass ? Json(nullptr) : Json(r.failed_check)},
                {"level", r.pass ? Json(nullptr) : Json(r.level)},
                {"witness", r.witness},
                {"message", r.message}};
}

} // namespace onepoint
