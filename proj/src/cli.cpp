#include "polydom/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "polydom/bounds.hpp"
#include "polydom/certificates.hpp"
#include "polydom/errors.hpp"
#include "polydom/formats.hpp"
#include "polydom/report.hpp"
#include "polydom/solver.hpp"

namespace polydom::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string family;
    int n = 0;
    std::string n_range;
    std::string variant;
    std::string method = "dp";
    std::string format;
    std::string out;
    std::string graph_file;
    std::string labels_file;
    std::uint64_t budget = kDefaultNodeBudget;
};

FamilyKind family_of(const std::string& tag) {
    if (auto f = parse_family(tag)) return *f;
    throw UsageError("unknown family '" + tag + "' (expected An, Rn, Sn, Tn, Qn or Tn2p)");
}

Variant variant_of(const std::string& tag) {
    if (auto v = parse_variant(tag)) return *v;
    throw UsageError("unknown variant '" + tag + "' (expected srd or strd)");
}

std::pair<int, int> range_of(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("--n-range expects lo:hi");
    try {
        std::size_t used = 0;
        int lo = std::stoi(text.substr(0, colon), &used);
        if (used != colon) throw UsageError("--n-range expects lo:hi");
        std::string rest = text.substr(colon + 1);
        int hi = std::stoi(rest, &used);
        if (used != rest.size()) throw UsageError("--n-range expects lo:hi");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("--n-range expects lo:hi");
    }
}

unsigned thread_count() {
    const char* env = std::getenv("POLYDOM_THREADS");
    if (!env || !*env) return 0;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v > 4096) throw UsageError(std::string("POLYDOM_THREADS must be a thread count (got '") + env + "')");
    return static_cast<unsigned>(v);
}

ProfileDpOptions dp_options() {
    ProfileDpOptions o;
    o.threads = thread_count();
    return o;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!(file << text) || !file.flush()) throw UsageError("cannot write " + path);
}

std::string covered_list() {
    std::string s;
    for (const CertificateDomain& d : covered_combinations())
        s += "  " + std::string(family_tag(d.family)) + " " + std::string(variant_tag(d.variant)) + " (n >= " +
             std::to_string(d.min_n) + ")\n";
    return s;
}

int cmd_gen(const Options& o, std::ostream& out) {
    const PolytopeGraph g = generate(family_of(o.family), o.n);
    std::string format = o.format.empty() ? "edgelist" : o.format;
    if (format == "edgelist") emit(o.out, write_edgelist(g), out);
    else if (format == "dot") emit(o.out, write_dot(g), out);
    else throw UsageError("--format for gen is edgelist or dot");
    return kOk;
}

int cmd_cert(const Options& o, std::ostream& out, std::ostream& err) {
    const FamilyKind family = family_of(o.family);
    const Variant variant = variant_of(o.variant);
    std::optional<Certificate> cert;
    try {
        cert = certificate_for(family, variant, o.n);
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return kUsage;
    }
    if (!cert) {
        err << "no construction for " << family_tag(family) << " " << variant_tag(variant) << "; covered:\n" << covered_list();
        return kUsage;
    }
    const PolytopeGraph g = generate(family, o.n);
    const bool ok = is_admissible(g, cert->labeling, variant);
    emit(o.out, write_labeling(g, cert->labeling, variant, cert->source()), out);
    std::ostream& summary = o.out.empty() || o.out == "-" ? err : out;
    summary << family_tag(family) << " n=" << o.n << " " << variant_tag(variant) << " source=" << cert->source()
            << " weight=" << cert->claimed_weight << " " << (ok ? "admissible" : "INADMISSIBLE") << "\n";
    return ok && cert->labeling.weight() == cert->claimed_weight ? kOk : kInadmissible;
}

int cmd_verify(const Options& o, std::ostream& out) {
    PolytopeGraph g = read_edgelist(read_file(o.graph_file));
    ParsedLabeling parsed = read_labeling(read_file(o.labels_file), g);
    const Variant variant = o.variant.empty() ? parsed.header.variant : variant_of(o.variant);
    const auto violations = validate(g, parsed.labeling, variant);
    for (const Violation& v : violations) out << describe(v) << "\n";
    out << (violations.empty() ? "admissible" : "inadmissible") << " weight=" << parsed.labeling.weight()
        << " violations=" << violations.size() << "\n";
    return violations.empty() ? kOk : kInadmissible;
}

void print_result(const SolveResult& r, std::ostream& out) {
    out << "method=" << method_name(r.method) << " ";
    if (r.gamma) out << "gamma=" << *r.gamma;
    else out << "gamma=inconclusive";
    out << " nodes=" << r.stats.nodes;
    if (r.method == SolveMethod::ProfileDP) out << " states=" << r.stats.states << " seeds=" << r.stats.seeds;
    out << " elapsed_ms=" << std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count() << "\n";
}

int cmd_solve(const Options& o, std::ostream& out) {
    const FamilyKind family = family_of(o.family);
    const Variant variant = variant_of(o.variant);
    const PolytopeGraph g = generate(family, o.n);
    if (o.method != "dp" && o.method != "bruteforce" && o.method != "both") throw UsageError("--method is dp, bruteforce or both");
    const std::string format = o.format.empty() ? "text" : o.format;
    if (format != "text" && format != "json") throw UsageError("--format for solve is text or json");

    std::vector<SolveResult> results;
    if (o.method != "dp") results.push_back(solve_bruteforce(g, variant, o.budget));
    if (o.method != "bruteforce") results.push_back(solve_profile_dp(g, variant, dp_options()));

    std::optional<int> gamma;
    const LabelFunction* witness = nullptr;
    for (const SolveResult& r : results)
        if (r.gamma) {
            gamma = r.gamma;
            witness = &*r.witness;
        }
    int code = gamma ? kOk : kInconclusive;
    std::string agreement;
    if (results.size() == 2) {
        if (!results[0].gamma) agreement = "skipped";
        else if (*results[0].gamma == *results[1].gamma) agreement = "agree";
        else agreement = "DISAGREE";
        if (agreement == "skipped") code = kInconclusive;
        if (agreement == "DISAGREE") code = kContradiction;
    }
    const ReportRecord record = make_record(family, o.n, variant, gamma);
    if (record.status == ReportStatus::Contradiction) code = kContradiction;

    if (format == "json") {
        nlohmann::json j = to_json(record);
        out << j.dump(2) << "\n";
    } else {
        for (const SolveResult& r : results) print_result(r, out);
        if (!agreement.empty()) out << "agreement=" << agreement << "\n";
        out << "status=" << status_name(record.status) << "\n";
    }
    if (witness && !o.out.empty()) {
        emit(o.out, write_labeling(g, *witness, variant, std::string(method_name(results.back().method))), out);
        if (format == "text") out << "witness=" << o.out << "\n";
    } else if (witness && format == "text") {
        out << write_labeling(g, *witness, variant);
    }
    return code;
}

int cmd_bounds(const Options& o, std::ostream& out) {
    const FamilyKind family = family_of(o.family);
    const Variant variant = variant_of(o.variant);
    const PolytopeGraph g = generate(family, o.n);
    const DegreeProfile p = degree_profile(g);
    const ReportRecord record = make_record(family, o.n, variant, std::nullopt);
    const std::string format = o.format.empty() ? "text" : o.format;
    if (format == "json") {
        nlohmann::json j = to_json(record);
        j.erase("gamma");
        j.erase("status");
        out << j.dump(2) << "\n";
        return kOk;
    }
    if (format != "text") throw UsageError("--format for bounds is text or json");
    out << "profile min_degree=" << p.min_degree << " max_degree=" << p.max_degree << " vertices=" << p.vertex_count << "\n";
    for (const BoundValue& b : record.general_bounds) {
        out << (b.kind == BoundKind::UpperGeneralStrd ? "general upper " : "general lower ");
        if (b.applicable) out << to_string(*b.value);
        else out << "n/a";
        out << " (" << b.reason << ")\n";
    }
    for (const BoundAnnotation& a : record.annotations) out << "quoted " << a.text() << "\n";
    const TheoremBounds& t = record.theorem;
    if (t.applicable)
        out << t.theorem << " lower=" << to_string(t.lower) << " sharpened=" << t.lower_sharpened << " upper=" << to_string(t.upper)
            << (t.exact ? " exact" : "") << "\n";
    else
        out << "theorem n/a (" << t.reason << ")\n";
    for (const BoundCombination& c : lower_bound_combinations()) {
        if (c.family != family || c.variant != variant) continue;
        try {
            CombinationResult r = verify_multiplier_combination(family, variant, c.rows);
            out << "combination " << c.theorem << " coefficient=" << to_string(r.coefficient) << (r.exact ? " telescopes" : " dominates")
                << (r.coefficient == c.expected ? "" : " MISMATCH") << "\n";
        } catch (const CombinationError& e) {
            out << "combination " << c.theorem << " failed: " << e.what() << "\n";
        }
    }
    return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
    const FamilyKind family = family_of(o.family);
    const Variant variant = variant_of(o.variant);
    auto [lo, hi] = range_of(o.n_range);
    if (lo <= hi && lo < kMinColumns) throw UsageError("n below minimum " + std::to_string(kMinColumns));
    nlohmann::json records = nlohmann::json::array();
    bool contradiction = false;
    for (int n = lo; n <= hi; ++n) {
        const SolveResult r = solve_profile_dp(generate(family, n), variant, dp_options());
        const ReportRecord record = make_record(family, n, variant, r.gamma);
        contradiction = contradiction || record.status == ReportStatus::Contradiction;
        records.push_back(to_json(record));
    }
    emit(o.out, records.dump(2) + "\n", out);
    return contradiction ? kContradiction : kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Signed (total) Roman domination on convex polytope graphs", "polydom"};
    app.require_subcommand(1);
    Options o;

    auto add_family = [&](CLI::App* c) { c->add_option("--family", o.family, "An, Rn, Sn, Tn, Qn or Tn2p")->required(); };
    auto add_n = [&](CLI::App* c) { c->add_option("--n", o.n, "number of columns")->required(); };
    auto add_variant = [&](CLI::App* c, bool required) {
        auto* opt = c->add_option("--variant", o.variant, "srd or strd");
        if (required) opt->required();
    };

    auto* gen = app.add_subcommand("gen", "write a generated graph");
    add_family(gen);
    add_n(gen);
    gen->add_option("--format", o.format, "edgelist (default) or dot");
    gen->add_option("--out", o.out, "output file (default stdout)");

    auto* cert = app.add_subcommand("cert", "write the construction labeling and check it");
    add_family(cert);
    add_n(cert);
    add_variant(cert, true);
    cert->add_option("--out", o.out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "check a labeling file against an edge list");
    verify->add_option("graph", o.graph_file, "edge list file")->required();
    verify->add_option("labels", o.labels_file, "labeling file")->required();
    add_variant(verify, false);

    auto* solve = app.add_subcommand("solve", "compute the exact minimum weight");
    add_family(solve);
    add_n(solve);
    add_variant(solve, true);
    solve->add_option("--method", o.method, "dp (default), bruteforce or both");
    solve->add_option("--budget", o.budget, "brute-force node budget");
    solve->add_option("--format", o.format, "text (default) or json");
    solve->add_option("--out", o.out, "witness labeling file");

    auto* bounds = app.add_subcommand("bounds", "evaluate general and per-family bounds");
    add_family(bounds);
    add_n(bounds);
    add_variant(bounds, true);
    bounds->add_option("--format", o.format, "text (default) or json");

    auto* table = app.add_subcommand("table", "solve a range of n and write JSON records");
    add_family(table);
    add_variant(table, true);
    table->add_option("--n-range", o.n_range, "lo:hi inclusive")->required();
    table->add_option("--out", o.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*gen) return cmd_gen(o, out);
        if (*cert) return cmd_cert(o, out, err);
        if (*verify) return cmd_verify(o, out);
        if (*solve) return cmd_solve(o, out);
        if (*bounds) return cmd_bounds(o, out);
        if (*table) return cmd_table(o, out);
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace polydom::cli
