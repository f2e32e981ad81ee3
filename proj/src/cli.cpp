#include <onepoint/cli.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <onepoint/io.hpp>

namespace onepoint
{

namespace
{

struct Options {
    bool json = false;
    long box = 3;
    std::string bounds;
    std::string input = "-";
    std::string derivation;
    std::string element;
    std::string on = "S_inf";
    long level = -1;
    long iterations = 1;
    bool verify = false;
};

// Raised for input that cannot be read as a file.
class InputError : public Error
{
public:
    using Error::Error;
};

std::string slurp(const std::string &path, std::istream &in)
{
    std::stringstream ss;
    if (path == "-") {
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) {
        throw InputError("cannot open " + path);
    }
    ss << f.rdbuf();
    return ss.str();
}

// Inline JSON if it looks like an object, else a file path.
std::string inline_or_file(const std::string &arg, std::istream &in)
{
    auto p = arg.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && arg[p] == '{') {
        return arg;
    }
    return slurp(arg, in);
}

SemigroupPtr read_semigroup(const Options &o, std::istream &in)
{
    return semigroup_from_json(parse_json(slurp(o.input, in)));
}

Derivation read_derivation(const Options &o, const SemigroupPtr &s, std::istream &in)
{
    if (o.derivation.empty()) {
        throw InvalidArgument("--derivation is required");
    }
    return derivation_from_json(s, parse_json(inline_or_file(o.derivation, in)));
}

Derivation on_carrier(Derivation d, Carrier c)
{
    if (d.carrier() == c) {
        return d;
    }
    return c == Carrier::compactified ? lift(d) : project(d);
}

void require_pointed(const AffineSemigroup &s)
{
    if (!s.is_pointed()) {
        throw NotPointed("the semigroup is not pointed");
    }
}

std::string vec_list(const Json &arr)
{
    std::string out;
    for (const auto &v : arr) {
        out += (out.empty() ? "" : " ") + v.dump();
    }
    return out.empty() ? "(none)" : out;
}

// ---------------------------------------------------------------------------

int cmd_analyze(const Options &o, std::istream &in, std::ostream &out)
{
    auto s = read_semigroup(o, in);
    const long level = o.level < 0 ? 3 : o.level;
    Json basis = Json::array();
    for (const auto &b : s->lattice().vectors()) {
        basis.push_back(vector_to_json(b));
    }
    Json rays = Json::array();
    for (const auto &u : s->dual_rays()) {
        rays.push_back(vector_to_json(u));
    }
    Json report{{"ambient_rank", s->ambient_rank()},
                {"generators", semigroup_to_json(*s)["generators"]},
                {"rank", s->rank()},
                {"lattice_basis", basis},
                {"pointed", s->is_pointed()},
                {"dual_rays", rays}};
    if (s->is_pointed()) {
        Json hilbert = Json::array();
        for (const auto &h : s->hilbert_basis()) {
            hilbert.push_back(vector_to_json(h));
        }
        Json table = Json::array();
        for (const auto &a : s->sublevel_m(level)) {
            table.push_back(Json{{"element", vector_to_json(s->from_m(a))}, {"s", *s->s_value_m(a)}});
        }
        report["positivity"] = vector_to_json(s->positivity());
        report["hilbert_basis"] = hilbert;
        report["s_table_level"] = level;
        report["s_table"] = table;
    } else {
        report["note"] = "S is not pointed, so S_inf is not a topological semigroup";
    }

    if (o.json) {
        out << report.dump(2) << "\n";
        return exit_ok;
    }
    out << "generators:    " << vec_list(report["generators"]) << "\n";
    out << "rank:          " << s->rank() << " (lattice basis " << vec_list(basis) << ")\n";
    out << "pointed:       " << (s->is_pointed() ? "yes" : "no") << "\n";
    out << "dual rays:     " << vec_list(rays) << "\n";
    if (s->is_pointed()) {
        out << "hilbert basis: " << vec_list(report["hilbert_basis"]) << "\n";
        out << "positivity:    " << report["positivity"].dump() << "\n";
        out << "s values up to " << level << ":\n";
        for (const auto &row : report["s_table"]) {
            out << "  " << row["element"].dump() << "  s=" << row["s"] << "\n";
        }
    } else {
        out << "note:          " << report["note"].get<std::string>() << "\n";
    }
    return exit_ok;
}

int cmd_roots(const Options &o, std::istream &in, std::ostream &out)
{
    auto s = read_semigroup(o, in);
    require_pointed(*s);
    Json roots = Json::array();
    for (const auto &r : s->roots(o.box)) {
        roots.push_back(Json{{"degree", vector_to_json(r.degree)},
                             {"ray_index", r.ray},
                             {"ray", vector_to_json(s->dual_rays()[r.ray])},
                             {"reducible", s->is_root_reducible(r.degree, o.box)},
                             {"minus_e_in_S", s->contains(-r.degree)}});
    }
    Json report{{"box", o.box}, {"roots", roots}};
    if (o.json) {
        out << report.dump(2) << "\n";
        return exit_ok;
    }
    if (roots.empty()) {
        out << "no roots within box " << o.box << "\n";
    }
    for (const auto &r : roots) {
        out << r["degree"].dump() << "  ray " << r["ray"].dump() << (r["reducible"].get<bool>() ? "  reducible" : "")
            << (r["minus_e_in_S"].get<bool>() ? "  -e in S" : "") << "\n";
    }
    return exit_ok;
}

int cmd_classify(const Options &o, std::istream &in, std::ostream &out, std::ostream &err)
{
    auto s = read_semigroup(o, in);
    require_pointed(*s);
    OracleBounds bounds = o.bounds.empty() ? OracleBounds{} : parse_bounds(o.bounds);
    Derivation d = on_carrier(read_derivation(o, s, in), Carrier::compactified);
    IntegrabilityVerdict v = classify_integrable(d);

    Json report = verdict_to_json(v, o.verify ? std::optional<OracleBounds>(bounds) : std::nullopt);
    int code = exit_ok;
    if (v.verdict == Verdict::out_of_scope) {
        err << "out of scope: " << v.note << "\n";
        code = exit_out_of_scope;
    }
    if (o.verify) {
        OracleReport r = oracle_verdict(d, bounds);
        report["oracle"] = Json{{"continuity", r.continuity},
                                {"p1", r.p1},
                                {"p2", r.p2},
                                {"integrable", r.oracle_integrable},
                                {"witness_verified", r.witness_verified},
                                {"agree", r.agree},
                                {"witness", r.oracle_witness ? witness_to_json(*r.oracle_witness) : Json(nullptr)},
                                {"notes", r.notes}};
        if (!r.agree) {
            err << "verification mismatch between classifier and oracle\n";
            code = exit_mismatch;
        }
    }

    if (o.json) {
        out << report.dump(2) << "\n";
        return code;
    }
    out << "verdict:   " << report["verdict"].get<std::string>() << "\n";
    if (v.branch) {
        out << "branch:    " << branch_name(*v.branch) << "\n";
    }
    if (!v.criterion.empty()) {
        out << "criterion: " << v.criterion << "\n";
    }
    if (v.witness) {
        const auto &w = *v.witness;
        out << "witness:   f = " << w.element.to_string() << ", n = " << w.iterations << ", i = " << w.level_i;
        if (w.level_j >= 0) {
            out << ", j = " << w.level_j;
        }
        out << " (" << (w.kind == Witness::Kind::p1 ? "P.1" : "P.2") << ")\n";
    }
    if (!v.note.empty()) {
        out << "note:      " << v.note << "\n";
    }
    if (o.verify) {
        const Json &r = report["oracle"];
        out << "oracle:    continuity=" << r["continuity"] << " p1=" << r["p1"] << " p2=" << r["p2"]
            << " agree=" << r["agree"] << "\n";
    }
    return code;
}

int cmd_quotient(const Options &o, std::istream &in, std::ostream &out)
{
    auto s = read_semigroup(o, in);
    require_pointed(*s);
    FiniteQuotient q = build_quotient(*s, o.level < 0 ? 3 : o.level);
    if (o.json) {
        out << quotient_to_json(q).dump(2) << "\n";
        return exit_ok;
    }
    std::vector<std::string> names;
    std::size_t width = 0;
    for (FiniteQuotient::Slot a = 0; a < q.size(); ++a) {
        names.push_back(q.slot_name(a));
        width = std::max(width, names.back().size());
    }
    auto pad = [width](const std::string &t) { return t + std::string(width - t.size() + 1, ' '); };
    out << "S_" << q.level() << " (" << q.size() << " elements)\n" << pad("+") << "|";
    for (const auto &n : names) {
        out << " " << pad(n);
    }
    out << "\n";
    for (FiniteQuotient::Slot a = 0; a < q.size(); ++a) {
        out << pad(names[a]) << "|";
        for (FiniteQuotient::Slot b = 0; b < q.size(); ++b) {
            out << " " << pad(names[q.add(a, b)]);
        }
        out << "\n";
    }
    return exit_ok;
}

int cmd_apply(const Options &o, std::istream &in, std::ostream &out)
{
    auto s = read_semigroup(o, in);
    require_pointed(*s);
    if (o.on != "S" && o.on != "S_inf") {
        throw InvalidArgument("--on must be S or S_inf");
    }
    if (o.element.empty()) {
        throw InvalidArgument("--element is required");
    }
    if (o.iterations < 0) {
        throw InvalidArgument("--iterate must be nonnegative");
    }
    Carrier c = o.on == "S" ? Carrier::semigroup : Carrier::compactified;
    Derivation d = on_carrier(read_derivation(o, s, in), c);
    AlgebraElement f = parse_element(s, o.element, c);
    AlgebraElement g = d.iterate(f, o.iterations);
    if (o.json) {
        Json report = element_to_json(g);
        report["iterations"] = o.iterations;
        out << report.dump(2) << "\n";
    } else {
        out << g.to_string() << "\n";
    }
    return exit_ok;
}

int cmd_verify_tower(const Options &o, std::istream &in, std::ostream &out, std::ostream &err)
{
    auto s = read_semigroup(o, in);
    require_pointed(*s);
    const long levels = o.level < 0 ? 4 : o.level;
    TowerReport r = check_tower(*s, levels);
    if (o.json) {
        Json report = tower_report_to_json(r);
        report["levels"] = levels;
        out << report.dump(2) << "\n";
    } else if (r.pass) {
        out << "tower S_0..S_" << levels << ": ok\n";
    } else {
        out << "tower S_0..S_" << levels << ": " << r.failed_check << " fails at level " << r.level << ": "
            << r.message << "\n";
    }
    if (!r.pass) {
        err << "tower check failed\n";
        return exit_mismatch;
    }
    return exit_ok;
}

int cmd_tower_example(const Options &o, std::ostream &out)
{
    const long top = o.level < 0 ? 5 : o.level;
    auto s = AffineSemigroup::build(1, {LatticeVector{1}});
    // f_l = 2^-l x^inf + sum_{k<=l} 2^-k x^k
    auto rule = [&s](long l) {
        AlgebraElement f = AlgebraElement::infinity(s, Rational(1, Integer(1) << l));
        for (long k = 0; k <= l; ++k) {
            f += AlgebraElement::monomial(s, LatticeVector{k}, Rational(1, Integer(1) << k), Carrier::compactified);
        }
        return f;
    };
    CompletionTower t = tower_truncate(s, rule, top);
    TowerCompatibility compat = tower_compatible(t);
    Json levels = Json::array();
    for (const auto &f : t.levels) {
        levels.push_back(f.to_string());
    }
    Json report{{"semigroup", semigroup_to_json(*s)}, {"levels", levels}, {"compatible", compat.compatible}};
    if (compat.compatible) {
        TowerAlgebraicity alg = tower_is_algebraic(t);
        report["algebraic"] = alg.algebraic;
        report["stabilized_at"] = alg.stabilized_at;
    } else {
        report["witness_level"] = compat.witness_level;
    }
    if (o.json) {
        out << report.dump(2) << "\n";
        return exit_ok;
    }
    for (std::size_t l = 0; l < t.levels.size(); ++l) {
        out << "f_" << l << " = " << t.levels[l].to_string() << "\n";
    }
    out << "compatible: " << (compat.compatible ? "yes" : "no") << "\n";
    if (compat.compatible) {
        out << "algebraic:  " << (report["algebraic"].get<bool>() ? "yes" : "no") << "\n";
    }
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Affine semigroups, their one-point compactifications and derivations", "onepoint"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "Emit JSON");
    app.add_option("--box", o.box, "Max-norm box for root enumeration")->check(CLI::NonNegativeNumber);
    app.add_option("--bounds", o.bounds, "Oracle bounds i,j,n,span");

    auto input = [&o](CLI::App *sub) {
        sub->add_option("input", o.input, "Semigroup spec (JSON file, - for stdin)");
    };
    auto *analyze = app.add_subcommand("analyze", "Pointedness, Hilbert basis, dual rays, length table");
    input(analyze);
    analyze->add_option("--level", o.level, "Largest length in the table");
    auto *roots = app.add_subcommand("roots", "Demazure roots of S within --box");
    input(roots);
    auto *classify = app.add_subcommand("classify", "Topological integrability of a quasi-homogeneous derivation");
    input(classify);
    classify->add_option("--derivation,-d", o.derivation, "Derivation spec (JSON file or inline JSON)");
    classify->add_flag("--verify", o.verify, "Cross-check with the bounded oracle");
    auto *quotient = app.add_subcommand("quotient", "Addition table of S_i");
    input(quotient);
    quotient->add_option("--level", o.level, "Level i");
    auto *apply = app.add_subcommand("apply", "Apply a derivation to an element");
    input(apply);
    apply->add_option("--derivation,-d", o.derivation, "Derivation spec (JSON file or inline JSON)");
    apply->add_option("--element,-e", o.element, "Element, e.g. \"2*x^[1,0] - x^inf\"");
    apply->add_option("--iterate,-n", o.iterations, "Number of applications");
    apply->add_option("--on", o.on, "Carrier: S or S_inf");
    auto *tower = app.add_subcommand("verify-tower", "Check the quotient tower S_0..S_L");
    input(tower);
    tower->add_option("--level", o.level, "Top level L");
    auto *example = app.add_subcommand("tower-example", "Compatible, non-algebraic completion tower over N");
    example->add_option("--level", o.level, "Top level L");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    }

    try {
        if (analyze->parsed()) {
            return cmd_analyze(o, in, out);
        }
        if (roots->parsed()) {
            return cmd_roots(o, in, out);
        }
        if (classify->parsed()) {
            return cmd_classify(o, in, out, err);
        }
        if (quotient->parsed()) {
            return cmd_quotient(o, in, out);
        }
        if (apply->parsed()) {
            return cmd_apply(o, in, out);
        }
        if (tower->parsed()) {
            return cmd_verify_tower(o, in, out, err);
        }
        return cmd_tower_example(o, out);
    } catch (const NotPointed &e) {
        err << "error: " << e.what() << "\n";
        return exit_not_pointed;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const InvalidArgument &e) {
        err << "invalid input: " << e.what() << "\n";
        return exit_parse;
    } catch (const DimensionMismatch &e) {
        err << "invalid input: " << e.what() << "\n";
        return exit_parse;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    } catch (const nlohmann::json::exception &e) {
        err << "invalid input: " << e.what() << "\n";
        return exit_parse;
    }
}

} // namespace onepoint
