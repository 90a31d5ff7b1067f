// egt: exact α₁ / τ / τ_B solver and conjecture verification harness.
//
// Exit codes: 0 clean, 1 violations found, 2 input error, 3 capacity error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "egt/edge_set.hpp"
#include "egt/graph6.hpp"
#include "egt/harness.hpp"
#include "egt/report.hpp"
#include "egt/solvers.hpp"
#include "json.hpp"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunSettings {
    std::string input;
    std::string output;
    std::string manifest;
    std::string format = "csv";
    std::string variant = "both";
    bool strict = true;
    bool resume = false;
    int workers = 0;
    std::size_t max_graphs = 0;
    int maxcut_limit = 28;
};

void add_run_options(CLI::App *cmd, RunSettings &s) {
    cmd->add_option("--output,-o", s.output, "Report file (default: stdout)");
    cmd->add_option("--manifest", s.manifest, "Manifest file (default: <output>.manifest.json)");
    cmd->add_option("--format", s.format, "Report format")->check(CLI::IsMember({"csv", "text"}));
    cmd->add_flag("--strict,!--lenient", s.strict, "Abort on the first malformed graph6 line (default)");
    cmd->add_option("--workers,-j", s.workers,
                    std::string("Worker threads (default: $") + egt::kWorkersEnv + " or all cores)");
    cmd->add_option("--max-graphs", s.max_graphs, "Stop after this many graph lines (checkpoint)");
    cmd->add_flag("--resume", s.resume, "Continue an interrupted run from its manifest");
    cmd->add_option("--maxcut-limit", s.maxcut_limit, "Largest n for exact max-cut enumeration")
        ->check(CLI::Range(1, 40));
}

std::string manifest_path(const RunSettings &s) {
    if (!s.manifest.empty()) return s.manifest;
    if (!s.output.empty()) return s.output + ".manifest.json";
    return {};
}

egt::VerifyOptions verify_options(const RunSettings &s) {
    egt::VerifyOptions o;
    o.solver.maxcut_limit = s.maxcut_limit;
    o.variant = egt::parse_variant(s.variant);
    o.workers = s.workers;
    o.max_graphs = s.max_graphs;
    o.audit_sink = &std::cerr;
    return o;
}

/// Opens the report sink and restores the previous manifest when resuming.
struct ReportSink {
    std::ofstream file;
    std::ostream *out = &std::cout;
    std::optional<egt::ReportWriter> writer;
    egt::RunManifest previous;

    ReportSink(const RunSettings &s, const std::string &command, const std::string &source) {
        const auto format = egt::parse_report_format(s.format);
        bool header = true;
        if (s.resume) {
            if (s.output.empty()) throw InputError("--resume needs --output");
            previous = egt::read_manifest(manifest_path(s));
            if (previous.command != command || previous.source != source)
                throw InputError("manifest was written by a different command or input");
            if (previous.complete) throw InputError("manifest marks the run as complete");
            file.open(s.output, std::ios::app);
            header = false;
        } else {
            previous.command = command;
            previous.source = source;
            if (!s.output.empty()) file.open(s.output, std::ios::trunc);
        }
        if (!s.output.empty()) {
            if (!file) throw InputError("cannot open report " + s.output);
            out = &file;
        }
        writer.emplace(*out, format, header);
    }
};

int finish(const RunSettings &s, const egt::RunManifest &m) {
    if (const auto path = manifest_path(s); !path.empty()) egt::write_manifest(path, m);
    std::cerr << "processed " << m.processed << ", skipped " << m.skipped << ", violations "
              << m.violations << ", sharp_egt " << m.sharp_egt << ", sharp_bip " << m.sharp_bip;
    for (const auto &[name, count] : m.eliminated) std::cerr << ", " << name << " " << count;
    if (m.parse_errors) std::cerr << ", parse errors " << m.parse_errors;
    if (m.capacity_skips) std::cerr << ", capacity skips " << m.capacity_skips;
    std::cerr << " (" << m.wall_seconds << " s)\n";
    if (m.violations > 0) return kExitViolation;
    if (m.capacity_skips > 0) return kExitCapacity;
    return kExitClean;
}

std::string edges_text(const egt::Graph &g, const egt::EdgeSet &x) {
    std::string out;
    for (auto [u, v] : egt::edge_pairs(egt::EdgeIndex(g), x))
        out += (out.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
    return out.empty() ? "-" : out;
}

int cmd_invariants(const std::string &text, int maxcut_limit) {
    const egt::Graph g = egt::parse_graph6(text);
    egt::SolverOptions options;
    options.maxcut_limit = maxcut_limit;
    const auto a = egt::alpha1_exact(g);
    const auto t = egt::tau_exact(g);
    const auto b = egt::taub_exact(g, options);
    const long n2 = static_cast<long>(g.order()) * g.order();
    std::cout << "n " << g.order() << " m " << g.size() << '\n';
    std::cout << "alpha1 " << a.value << " [" << edges_text(g, a.witness) << "] nodes " << a.nodes_explored
              << '\n';
    std::cout << "tau " << t.value << " [" << edges_text(g, t.witness) << "] nodes " << t.nodes_explored
              << '\n';
    std::cout << "taub " << b.value << " [" << edges_text(g, b.witness) << "]\n";
    const long slack_egt = n2 - 4L * (a.value + t.value);
    const long slack_bip = n2 - 4L * (a.value + b.value);
    std::cout << "slack_egt " << slack_egt << " slack_bip " << slack_bip << '\n';
    return (slack_egt < 0 || slack_bip < 0) ? kExitViolation : kExitClean;
}

int cmd_verify(const RunSettings &s) {
    std::ifstream in(s.input);
    if (!in) throw InputError("cannot open input " + s.input);
    ReportSink sink(s, "verify", s.input);
    auto source = egt::graph6_source(in, s.strict);
    const auto m = egt::verify(*source, verify_options(s), *sink.writer, sink.previous);
    return finish(s, m);
}

int cmd_hunt(const RunSettings &s, int n, const std::string &filters) {
    egt::HuntOptions h;
    h.n = n;
    h.filters = egt::parse_hunt_filters(filters);
    h.verify = verify_options(s);
    std::ifstream in;
    std::unique_ptr<egt::GraphSource> source;
    std::string source_id;
    if (s.input.empty()) {
        source = std::make_unique<egt::LabeledEnumeration>(n);
        source_id = "labeled:" + std::to_string(n);
    } else {
        in.open(s.input);
        if (!in) throw InputError("cannot open input " + s.input);
        source = egt::graph6_source(in, s.strict);
        source_id = s.input;
    }
    ReportSink sink(s, "hunt", source_id);
    const auto m = egt::hunt(*source, h, *sink.writer, sink.previous);
    return finish(s, m);
}

int cmd_families(int max_n, const RunSettings &s) {
    egt::VerifyOptions o = verify_options(s);
    const auto format = egt::parse_report_format(s.format);
    std::ofstream file;
    std::ostream *out = &std::cout;
    if (!s.output.empty()) {
        file.open(s.output, std::ios::trunc);
        if (!file) throw InputError("cannot open report " + s.output);
        out = &file;
    }
    egt::ReportWriter writer(*out, format);
    int not_sharp = 0;
    for (const auto &fr : egt::family_sweep(max_n, o)) {
        writer.write(fr.record);
        if (!fr.record.has(egt::Flag::SharpEgt)) {
            ++not_sharp;
            std::cerr << "not sharp: blocks";
            for (int r : fr.blocks) std::cerr << ' ' << r;
            std::cerr << " slack_egt " << fr.record.slack_egt << '\n';
        }
    }
    return not_sharp > 0 ? kExitViolation : kExitClean;
}

int cmd_audit(const std::string &text, int maxcut_limit) {
    egt::SolverOptions options;
    options.maxcut_limit = maxcut_limit;
    const auto report = egt::audit_graph(egt::parse_graph6(text), options);
    egt::print_audit(report, std::cout);
    return egt::violates(report.record, egt::Variant::Both) ? kExitViolation : kExitClean;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact triangle-independent / triangle-cover / bipartization solver"};
    app.require_subcommand(1);

    std::string graph6;
    int maxcut_limit = 28;
    auto *invariants = app.add_subcommand("invariants", "Solve alpha1, tau and taub for one graph6 string");
    invariants->add_option("graph6", graph6, "Graph in graph6 format")->required();
    invariants->add_option("--maxcut-limit", maxcut_limit, "Largest n for exact max-cut");

    RunSettings verify_settings;
    auto *verify = app.add_subcommand("verify", "Verify both inequalities over a graph6 file");
    verify->add_option("--input,-i", verify_settings.input, "graph6 file")->required();
    verify->add_option("--variant", verify_settings.variant, "Which inequality counts as a violation")
        ->check(CLI::IsMember({"egt", "bip", "both"}));
    add_run_options(verify, verify_settings);

    RunSettings hunt_settings;
    int hunt_n = 0;
    std::string hunt_filters = "mindeg,triangular,dense-cut";
    auto *hunt = app.add_subcommand("hunt", "Filter minimal-counterexample candidates, then verify");
    hunt->add_option("--n", hunt_n, "Vertex count")->required()->check(CLI::Range(0, 64));
    hunt->add_option("--filters", hunt_filters,
                     "Comma list of mindeg,triangular,k4minus,clique-extension,dense-cut");
    hunt->add_option("--input,-i", hunt_settings.input, "graph6 file (default: labeled enumeration)");
    hunt->add_option("--variant", hunt_settings.variant, "Which inequality counts as a violation")
        ->check(CLI::IsMember({"egt", "bip", "both"}));
    add_run_options(hunt, hunt_settings);

    RunSettings family_settings;
    int max_n = 10;
    auto *families = app.add_subcommand("families", "Verify sharpness on K_{r1,r1} v ... v K_{rt,rt}");
    families->add_option("--max-n", max_n, "Largest vertex count")->required()->check(CLI::Range(2, 64));
    families->add_option("--output,-o", family_settings.output, "Report file (default: stdout)");
    families->add_option("--format", family_settings.format, "Report format")
        ->check(CLI::IsMember({"csv", "text"}));
    families->add_option("--maxcut-limit", family_settings.maxcut_limit, "Largest n for exact max-cut");

    auto *audit = app.add_subcommand("audit", "Dump every structural check for one graph");
    audit->add_option("graph6", graph6, "Graph in graph6 format")->required();
    audit->add_option("--maxcut-limit", maxcut_limit, "Largest n for exact max-cut");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitClean : kExitInput;
    }

    try {
        if (*invariants) return cmd_invariants(graph6, maxcut_limit);
        if (*verify) return cmd_verify(verify_settings);
        if (*hunt) return cmd_hunt(hunt_settings, hunt_n, hunt_filters);
        if (*families) return cmd_families(max_n, family_settings);
        if (*audit) return cmd_audit(graph6, maxcut_limit);
    } catch (const egt::Graph6Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == egt::Graph6ErrorKind::CapacityExceeded ? kExitCapacity : kExitInput;
    } catch (const egt::CapacityError &e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "error: bad manifest: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
