#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "egt/graph.hpp"
#include "egt/graph6.hpp"
#include "egt/report.hpp"
#include "egt/solvers.hpp"
#include "egt/structure.hpp"

namespace egt {

enum class Variant { Egt, Bip, Both };

Variant parse_variant(std::string_view name);
std::string_view to_string(Variant v);

/// Environment variable that overrides the worker count when none is given.
inline constexpr const char *kWorkersEnv = "EGT_WORKERS";

/// Worker count: explicit value if positive, else $EGT_WORKERS, else hardware threads.
int resolve_workers(int requested);

struct VerifyOptions {
    SolverOptions solver;
    Variant variant = Variant::Both;
    int workers = 0;
    /// Stop after this many graph lines (0 = no limit); used to checkpoint long runs.
    std::size_t max_graphs = 0;
    /// Re-solve violations with the brute-force oracle before reporting them.
    bool oracle_recheck = true;
    BruteForceLimits oracle_limits;
    /// Receives the full structural audit of every violating graph.
    std::ostream *audit_sink = nullptr;
};

/// Checkpoint and summary of a run, persisted next to the report.
struct RunManifest {
    int schema_version = kReportSchemaVersion;
    std::string command;
    std::string source;
    std::string filter_config;
    std::uint64_t processed = 0;
    std::uint64_t skipped = 0;
    std::uint64_t violations = 0;
    std::uint64_t sharp_egt = 0;
    std::uint64_t sharp_bip = 0;
    std::uint64_t parse_errors = 0;
    std::uint64_t capacity_skips = 0;
    std::map<std::string, std::uint64_t> eliminated;  // hunt: graphs removed per filter
    double wall_seconds = 0;
    /// Lines (or enumeration positions) consumed; resume continues after this point.
    std::uint64_t cursor = 0;
    bool complete = false;
};

std::string manifest_to_text(const RunManifest &m);
RunManifest manifest_from_text(const std::string &text);
void write_manifest(const std::string &path, const RunManifest &m);
RunManifest read_manifest(const std::string &path);

/// Computes the record for one graph: invariants, slacks, and flags.
VerificationRecord make_record(const Graph &g, std::string graph6, const VerifyOptions &options = {});

/// True when the record violates the conjecture(s) selected by variant.
bool violates(const VerificationRecord &r, Variant variant);

/// Source of graphs for the pipeline: a graph6 stream or a generator.
class GraphSource {
public:
    struct Item {
        std::uint64_t position = 0;  // line number or 1-based enumeration index
        std::string text;
        std::optional<Graph> graph;
        std::optional<Graph6Error> error;
    };

    virtual ~GraphSource() = default;
    virtual std::optional<Item> next() = 0;
    /// Advances so that the next item comes after position.
    virtual void skip_to(std::uint64_t position) = 0;
    /// Positions consumed so far (comparable with RunManifest::cursor).
    virtual std::uint64_t consumed() const = 0;
};

std::unique_ptr<GraphSource> graph6_source(std::istream &in, bool strict);

/// Every labeled simple graph on n ≤ 7 vertices, edge-subset masks in increasing order
/// (bit i of the mask is the i-th pair in lexicographic order).
class LabeledEnumeration : public GraphSource {
public:
    static constexpr int kMaxOrder = 7;

    explicit LabeledEnumeration(int n);

    std::uint64_t count() const { return total_; }
    std::optional<Graph> next_graph();

    std::optional<Item> next() override;
    void skip_to(std::uint64_t position) override { mask_ = std::min(position, total_); }
    std::uint64_t consumed() const override { return mask_; }

private:
    int n_;
    std::vector<std::pair<int, int>> pairs_;
    std::uint64_t total_;
    std::uint64_t mask_ = 0;
};

/// Streams every graph through make_record and writes records to the report in
/// input order. The returned manifest continues `previous` (counts accumulate).
RunManifest verify(GraphSource &source, const VerifyOptions &options, ReportWriter &report,
                   RunManifest previous = {});

enum class HuntFilter { Mindeg, Triangular, K4Minus, CliqueExtension, DenseCut };

std::string_view to_string(HuntFilter f);
HuntFilter parse_hunt_filter(std::string_view name);

/// Comma-separated filter names, returned in the fixed cheapest-first order.
std::vector<HuntFilter> parse_hunt_filters(std::string_view list);
std::vector<HuntFilter> default_hunt_filters();

struct HuntOptions {
    int n = 0;
    std::vector<HuntFilter> filters = default_hunt_filters();
    DenseCutMode dense_cut = DenseCutMode::sampled();
    VerifyOptions verify;
};

/// First filter g fails, or nullopt when g survives all of them.
std::optional<HuntFilter> first_failed_filter(const Graph &g, const HuntOptions &options);

/// Keeps graphs of order n passing every filter and writes their records.
RunManifest hunt(GraphSource &source, const HuntOptions &options, ReportWriter &report,
                 RunManifest previous = {});

/// Multisets r₁ ≥ … ≥ r_t ≥ 1 with Σ 2rᵢ ≤ max_n, in lexicographic order.
std::vector<std::vector<int>> sharpness_multisets(int max_n);

struct FamilyRecord {
    std::vector<int> blocks;
    VerificationRecord record;
};

std::vector<FamilyRecord> family_sweep(int max_n, const VerifyOptions &options = {});

struct SingletonSlacks {
    int vertex = 0;
    InequalityCheck peel;       // α₁+τ cut inequality
    InequalityCheck denseboth;  // α₁+τ_B cut inequality, doubled, A = α₁ witness
};

struct AuditReport {
    Graph graph;
    std::string graph6;
    SolveResult alpha1, tau, taub;
    VerificationRecord record;
    StructureProfile profile;
    std::vector<VertexSet> cliques;
    std::vector<SingletonSlacks> singletons;
};

/// Full structural dump; the dense-cut audit is exhaustive for n ≤ 20.
AuditReport audit_graph(const Graph &g, const SolverOptions &options = {});
void print_audit(const AuditReport &a, std::ostream &out);

}  // namespace egt
