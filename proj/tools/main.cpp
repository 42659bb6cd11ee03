// congr: exact congruence-invariant toolkit over Q and GF(p).
//
// Subcommands compute the invariant on matrix documents, run seeded property
// batteries, enumerate congruence orbits over small prime fields, and decide
// zeropotent-algebra isomorphism by brute force. Reports are JSON on stdout;
// diagnostics go to stderr.
//
// Exit codes: 0 = success / all properties hold, 1 = a property violation was
// found, 2 = input or usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <congr/congr.hpp>

namespace {

constexpr std::uint64_t kDefaultSeed = 0xC0FFEE; // documented fixed default

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw congr::ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

congr::Matrix load_matrix(const std::string& path) {
    return congr::matrix_from_json_text(read_file(path));
}

/// --field flag grammar: "rational" or "gf:<p>".
congr::FieldDescriptor parse_field_flag(const std::string& text) {
    if (text == "rational") return congr::FieldDescriptor::rational();
    if (text.rfind("gf:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw congr::ParseError("bad modulus in field '" + text + "'");
        unsigned long p = 0;
        try {
            p = std::stoul(digits);
        } catch (const std::exception&) {
            throw congr::ParseError("bad modulus in field '" + text + "'");
        }
        if (p >= (1ull << 31))
            throw congr::UnsupportedFieldError("modulus out of range: " + digits);
        return congr::FieldDescriptor::prime(static_cast<std::uint32_t>(p));
    }
    throw congr::ParseError("field must be 'rational' or 'gf:<p>', got '" + text + "'");
}

void emit(const congr::Json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_sigma(const std::string& path) {
    const congr::Matrix a = load_matrix(path);
    const congr::Scalar t = congr::sigma(a, congr::SigmaMode::TraceForm);
    const congr::Scalar c = congr::sigma(a, congr::SigmaMode::CofactorForm);
    const congr::Scalar j = congr::sigma(a, congr::SigmaMode::AdjugateForm);
    const bool agreement = t == c && t == j;
    emit(congr::Json{{"field", congr::field_to_json(a.field())},
                     {"n", a.dim()},
                     {"trace_form", t.str()},
                     {"cofactor_form", c.str()},
                     {"adjugate_form", j.str()},
                     {"agreement", agreement}});
    if (!agreement) std::cerr << "sigma modes disagree\n";
    return agreement ? 0 : 1;
}

int run_props(const std::string& path, std::uint64_t seed) {
    const congr::Matrix a = load_matrix(path);
    bool failed = false;
    for (const congr::PropCheckLine& line : congr::check_basic_identities_on(a, seed)) {
        if (!line.applicable) {
            std::cout << line.name << ": SKIP\n";
            continue;
        }
        std::cout << line.name << ": " << (line.pass ? "PASS" : "FAIL") << "\n";
        failed = failed || !line.pass;
    }
    return failed ? 1 : 0;
}

int run_kappa(const std::string& path) {
    const congr::Matrix a = load_matrix(path);
    const congr::Scalar k = congr::kappa(a);
    const congr::Scalar ke = congr::kappa_explicit(a);
    const bool agreement = k == ke;
    emit(congr::Json{{"field", congr::field_to_json(a.field())},
                     {"kappa", k.str()},
                     {"kappa_explicit", ke.str()},
                     {"agreement", agreement}});
    if (!agreement) std::cerr << "kappa routes disagree\n";
    return agreement ? 0 : 1;
}

int run_canon(const std::string& a_text, const std::string& b_text,
              const std::string& c_text, const std::string& field_text) {
    const congr::FieldDescriptor f = parse_field_flag(field_text);
    const congr::Scalar a = congr::parse_scalar(f, a_text);
    const congr::Scalar b = congr::parse_scalar(f, b_text);
    const congr::Scalar c = congr::parse_scalar(f, c_text);
    emit(congr::Json{{"matrix", congr::matrix_to_json(congr::canonical_form(a, b, c))},
                     {"D", congr::d_invariant(a, b, c).str()}});
    return 0;
}

int run_fuzz_cmd(int n, std::uint64_t count, std::uint64_t seed,
                 const std::string& field_text, std::int64_t bound) {
    congr::FuzzOptions opts;
    opts.n = n;
    opts.count = count;
    opts.seed = seed;
    opts.field = parse_field_flag(field_text);
    opts.bound = bound;
    const congr::CheckReport report = congr::run_fuzz(opts);
    emit(congr::check_report_to_json(report));
    if (!report.passed()) {
        const congr::CheckViolation& first = report.violations.front();
        std::cerr << "violation: " << first.property << " at trial " << first.trial
                  << ": " << first.detail.dump() << "\n";
        return 1;
    }
    return 0;
}

int run_orbits(int n, std::uint32_t p, bool allow_large) {
    const congr::OrbitReport report = congr::congruence_orbits(n, p, allow_large);
    emit(congr::orbit_report_to_json(report));
    if (!report.violations.empty()) {
        std::cerr << report.violations.size() << " orbit(s) with non-constant sigma\n";
        return 1;
    }
    return 0;
}

int run_iso(const std::string& path_a, const std::string& path_b, std::uint32_t max_p) {
    const congr::ZeropotentAlgebra3 a{load_matrix(path_a)};
    const congr::ZeropotentAlgebra3 b{load_matrix(path_b)};
    const congr::IsoResult r = congr::is_isomorphic_bruteforce(a, b, {max_p});
    emit(congr::Json{
        {"isomorphic", r.isomorphic},
        {"witness", r.witness ? congr::matrix_to_json(*r.witness) : congr::Json(nullptr)}});
    return 0;
}

int run_explore_reduction(std::uint32_t p, std::uint64_t sample, std::uint64_t seed,
                          bool sampled) {
    const congr::ReductionMode mode = sampled ? congr::ReductionMode::sample(sample, seed)
                                              : congr::ReductionMode::all();
    const congr::ReductionReport report = congr::explore_reduction(p, mode);
    emit(congr::reduction_report_to_json(report));
    for (const congr::ReductionTriple& t : report.triples) {
        if (t.found && !t.revalidated) {
            std::cerr << "witness failed revalidation at (" << t.a << "," << t.b << ","
                      << t.c << ")\n";
            return 1;
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact congruence-invariant toolkit over Q and GF(p)"};
    app.require_subcommand(1);

    std::string file_a, file_b, sa, sb, sc;
    std::string field_text = "rational";
    int n = 3;
    std::uint32_t p = 3;
    std::uint32_t iso_max_p = 5;
    std::uint64_t count = 100;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t sample = 0;
    std::int64_t bound = 9;
    bool allow_large = false;

    CLI::App* sigma = app.add_subcommand(
        "sigma", "Invariant of a matrix document, via all three routes");
    sigma->add_option("file", file_a, "matrix JSON document")->required();

    CLI::App* props = app.add_subcommand(
        "props", "Check the basic invariant identities on one matrix");
    props->add_option("file", file_a, "matrix JSON document")->required();
    props->add_option("--seed", seed, "seed for the scaling identity draw");

    CLI::App* kappa = app.add_subcommand(
        "kappa", "kappa of a 3x3 document, direct and explicit-polynomial routes");
    kappa->add_option("file", file_a, "matrix JSON document")->required();

    CLI::App* canon = app.add_subcommand(
        "canon", "Canonical form A(a,b,c) and its D value (use -- before "
                 "negative entries)");
    canon->add_option("a", sa, "first parameter")->required();
    canon->add_option("b", sb, "second parameter")->required();
    canon->add_option("c", sc, "third parameter")->required();
    canon->add_option("--field", field_text, "rational or gf:<p>");

    CLI::App* fuzz = app.add_subcommand(
        "fuzz", "Seeded random battery: congruence invariance and the basic "
                "identities");
    fuzz->add_option("--n", n, "matrix dimension");
    fuzz->add_option("--count", count, "trials per family");
    fuzz->add_option("--seed", seed, "stream seed");
    fuzz->add_option("--field", field_text, "rational or gf:<p>");
    fuzz->add_option("--bound", bound, "entry bound for rational draws");

    CLI::App* orbits = app.add_subcommand(
        "orbits", "Congruence orbit partition of GL(n,p) with per-orbit sigma");
    orbits->add_option("--n", n, "matrix dimension (<= 3)")->required();
    orbits->add_option("--p", p, "prime modulus")->required();
    orbits->add_flag("--allow-large", allow_large, "permit p = 7 (slow)");

    CLI::App* iso = app.add_subcommand(
        "iso", "Brute-force isomorphism test of two structure-matrix documents");
    iso->add_option("file_a", file_a, "matrix JSON document")->required();
    iso->add_option("file_b", file_b, "matrix JSON document")->required();
    iso->add_option("--p", iso_max_p, "modulus cap for the search (<= 7)");

    CLI::App* reduction = app.add_subcommand(
        "explore-reduction", "Search GF(p) for canonical-form reduction witnesses");
    reduction->add_option("--p", p, "prime modulus (<= 5)")->required();
    reduction->add_option("--sample", sample, "sample this many triples");
    reduction->add_option("--seed", seed, "seed for --sample");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (sigma->parsed()) return run_sigma(file_a);
        if (props->parsed()) return run_props(file_a, seed);
        if (kappa->parsed()) return run_kappa(file_a);
        if (canon->parsed()) return run_canon(sa, sb, sc, field_text);
        if (fuzz->parsed()) return run_fuzz_cmd(n, count, seed, field_text, bound);
        if (orbits->parsed()) return run_orbits(n, p, allow_large);
        if (iso->parsed()) return run_iso(file_a, file_b, iso_max_p);
        if (reduction->parsed())
            return run_explore_reduction(p, sample, seed, reduction->count("--sample") > 0);
    } catch (const congr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
