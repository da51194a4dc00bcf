#include "edcert/cli/app.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "edcert/certify.hpp"
#include "edcert/cli/certificate_json.hpp"
#include "edcert/cli/newton_svg.hpp"
#include "edcert/cli/poly_text.hpp"
#include "edcert/oracle.hpp"

namespace edcert::cli {

namespace {

struct Options {
    std::string poly, poly_b, prime, matrix, primes, svg, json;
    std::optional<std::size_t> degree;
    unsigned t_height = 8;
    unsigned threads = 1;
    bool strict = false;
    bool audit = false;
};

std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

std::string int_poly_text(const oracle::IntPoly& f) {
    std::vector<Rational> c(f.begin(), f.end());
    return format_poly(FormalPoly(std::move(c)));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
}

FactorEffort effort_from_env() {
    FactorEffort effort;
    if (const char* cap = std::getenv("EDCERT_RHO_ITERATIONS")) {
        try {
            effort.rho_iterations = std::stoul(cap);
        } catch (const std::exception&) {
            throw std::invalid_argument("EDCERT_RHO_ITERATIONS must be a positive integer");
        }
    }
    return effort;
}

int cmd_ed_check(const Options& o, std::ostream& out) {
    const FormalPoly a = parse_poly(o.poly, o.degree);
    const PAdic v(parse_bigint(o.prime));
    const EDReport r = o.strict ? is_ed_strict(a, v) : is_ed(a, v);
    out << "polynomial: " << format_poly(a) << " (formal degree " << a.formal_degree() << ")\n"
        << "prime: " << to_string(v.prime()) << (o.strict ? " (strict D2)" : "") << "\n"
        << "D0: " << pass_fail(r.d0) << "\n"
        << "D1: " << pass_fail(r.d1);
    if (r.gcd_value) out << " (gcd " << *r.gcd_value << ")";
    out << "\nD2: " << pass_fail(r.d2);
    if (r.failing_index) out << " (index " << *r.failing_index << ")";
    out << "\nverdict: " << (r.verdict ? "Eisenstein-Dumas" : "not Eisenstein-Dumas") << "\n";
    return r.verdict ? exit_true : exit_false;
}

int cmd_newton(const Options& o, std::ostream& out) {
    const FormalPoly a = parse_poly(o.poly, o.degree);
    const PAdic v(parse_bigint(o.prime));
    const NewtonPolygon np = newton_polygon(a, v);
    out << "vertices:";
    for (const auto& p : np.vertices) out << " (" << p.index << "," << p.value << ")";
    out << "\nslopes:";
    for (const auto& s : np.segments) out << " " << s.slope << " x" << s.length;
    out << "\n";
    if (!o.svg.empty()) {
        write_file(o.svg, newton_svg(a, v));
        out << "svg: " << o.svg << "\n";
    }
    return exit_true;
}

int cmd_act(const Options& o, std::ostream& out) {
    const FormalPoly a = parse_poly(o.poly, o.degree);
    const FormalPoly b = act(a, parse_matrix(o.matrix));
    out << format_poly(b) << " (formal degree " << b.formal_degree() << ")\n";
    return exit_true;
}

int cmd_certify(const Options& o, std::ostream& out) {
    const FormalPoly a = parse_poly(o.poly, o.degree);
    SearchConfig config;
    config.t_candidates = height_grid(o.t_height);
    config.extra_primes = parse_int_list(o.primes);
    config.effort = effort_from_env();
    config.threads = o.threads;
    const Certificate cert = certify_search(a, config);

    if (cert.verdict == Verdict::irreducible) {
        out << "irreducible at p = " << to_string(*cert.prime) << " (stage " << static_cast<int>(*cert.stage)
            << ": " << to_string(*cert.stage) << ")\n"
            << "transform: " << *cert.transform << "\n"
            << "witness: " << format_poly(*cert.witness) << " (formal degree " << cert.witness->formal_degree()
            << ")\n";
    } else {
        out << "inconclusive" << (cert.candidates_complete ? "" : ", candidate set possibly incomplete") << "\n";
    }
    if (o.audit || cert.verdict == Verdict::inconclusive) {
        for (const AuditEntry& e : cert.audit)
            out << "  p = " << to_string(e.prime) << ", stage " << static_cast<int>(e.stage) << " ("
                << to_string(e.stage) << "): " << e.reason << "\n";
    }
    if (!o.json.empty()) {
        write_file(o.json, to_json(cert).dump(2) + "\n");
        out << "json: " << o.json << "\n";
    }
    return cert.verdict == Verdict::irreducible ? exit_true : exit_false;
}

int cmd_dumas(const Options& o, std::ostream& out) {
    const FormalPoly a = parse_poly(o.poly);
    const FormalPoly b = parse_poly(o.poly_b);
    const PAdic v(parse_bigint(o.prime));
    const bool holds = dumas_concat_holds(a, b, v);
    auto show = [&](const char* label, const std::vector<Segment>& segs) {
        out << label;
        for (const auto& s : segs) out << " " << s.slope << " x" << s.length;
        out << "\n";
    };
    show("product slopes:", newton_polygon(mul(a, b), v).segments);
    show("merged slopes: ", merge_slopes(newton_polygon(a, v).segments, newton_polygon(b, v).segments));
    out << (holds ? "holds" : "fails") << "\n";
    return holds ? exit_true : exit_false;
}

int cmd_verify(const Options& o, std::ostream& out) {
    std::ifstream f(o.json);
    if (!f) throw std::invalid_argument("cannot read " + o.json);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    const VerifyResult r = verify_json(doc);
    out << (r.ok ? "valid: " : "invalid: ") << r.reason << "\n";
    return r.ok ? exit_true : exit_false;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const FormalPoly a = parse_poly(o.poly, o.degree);
    const oracle::OracleVerdict r = oracle::brute_irreducible(a);
    if (r.irreducible) {
        out << "irreducible\n";
        return exit_true;
    }
    out << "reducible: (" << int_poly_text(r.factors->first) << ") * (" << int_poly_text(r.factors->second)
        << ")\n";
    return exit_false;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Eisenstein-Dumas irreducibility certificates for polynomials over Q", "edcert"};
    app.require_subcommand(1);
    Options o;

    auto add_degree = [&](CLI::App* sub) {
        sub->add_option("--degree", o.degree, "Formal degree override (at least the actual degree)");
    };

    auto* ed = app.add_subcommand("ed-check", "Check (D0), (D1), (D2) at a prime");
    ed->add_option("--poly", o.poly, "Polynomial, e.g. \"x^2+4x+8\"")->required();
    ed->add_option("--prime", o.prime, "Prime p of the valuation")->required();
    ed->add_flag("--strict", o.strict, "Use the strict interior inequality");
    add_degree(ed);

    auto* newton = app.add_subcommand("newton", "Print the Newton polygon at a prime");
    newton->add_option("--poly", o.poly, "Polynomial")->required();
    newton->add_option("--prime", o.prime, "Prime p")->required();
    newton->add_option("--svg", o.svg, "Write an SVG plot to this file");
    add_degree(newton);

    auto* actc = app.add_subcommand("act", "Apply a 2x2 matrix to a polynomial");
    actc->add_option("--poly", o.poly, "Polynomial")->required();
    actc->add_option("--matrix", o.matrix, "Matrix \"a,b;c,d\"")->required();
    add_degree(actc);

    auto* cert = app.add_subcommand("certify", "Search for an Eisenstein-Dumas certificate");
    cert->add_option("--poly", o.poly, "Polynomial")->required();
    cert->add_option("--t-height", o.t_height, "Height bound of the one-parameter grid")->capture_default_str();
    cert->add_option("--primes", o.primes, "Extra primes to try, comma separated");
    cert->add_option("--json", o.json, "Write the certificate as JSON");
    cert->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    cert->add_flag("--audit", o.audit, "Print the audit trail even on success");

    auto* dumas = app.add_subcommand("dumas", "Check the Newton polygon of a product");
    dumas->add_option("--polyA", o.poly, "First factor")->required();
    dumas->add_option("--polyB", o.poly_b, "Second factor")->required();
    dumas->add_option("--prime", o.prime, "Prime p")->required();

    auto* verify = app.add_subcommand("verify", "Re-check a JSON certificate");
    verify->add_option("--json", o.json, "Certificate file")->required();

    auto* orc = app.add_subcommand("oracle", "Brute-force irreducibility (degree <= 6)");
    orc->group("");
    orc->add_option("--poly", o.poly, "Polynomial")->required();
    add_degree(orc);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_true;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (ed->parsed()) return cmd_ed_check(o, out);
        if (newton->parsed()) return cmd_newton(o, out);
        if (actc->parsed()) return cmd_act(o, out);
        if (cert->parsed()) return cmd_certify(o, out);
        if (dumas->parsed()) return cmd_dumas(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (orc->parsed()) return cmd_oracle(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace edcert::cli
