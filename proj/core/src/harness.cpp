#include "egt/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace egt {

Variant parse_variant(std::string_view name) {
    if (name == "egt") return Variant::Egt;
    if (name == "bip") return Variant::Bip;
    if (name == "both") return Variant::Both;
    throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

std::string_view to_string(Variant v) {
    switch (v) {
    case Variant::Egt: return "egt";
    case Variant::Bip: return "bip";
    case Variant::Both: return "both";
    }
    return "?";
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char *env = std::getenv(kWorkersEnv)) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------------------
// Manifest

std::string manifest_to_text(const RunManifest &m) {
    nlohmann::ordered_json j;
    j["schema_version"] = m.schema_version;
    j["command"] = m.command;
    j["source"] = m.source;
    j["filter_config"] = m.filter_config;
    j["processed"] = m.processed;
    j["skipped"] = m.skipped;
    j["violations"] = m.violations;
    j["sharp_egt"] = m.sharp_egt;
    j["sharp_bip"] = m.sharp_bip;
    j["parse_errors"] = m.parse_errors;
    j["capacity_skips"] = m.capacity_skips;
    j["eliminated"] = m.eliminated;
    j["wall_seconds"] = m.wall_seconds;
    j["cursor"] = m.cursor;
    j["complete"] = m.complete;
    return j.dump(2) + "\n";
}

RunManifest manifest_from_text(const std::string &text) {
    const auto j = nlohmann::json::parse(text);
    RunManifest m;
    m.schema_version = j.at("schema_version").get<int>();
    if (m.schema_version != kReportSchemaVersion)
        throw std::runtime_error("manifest schema version " + std::to_string(m.schema_version) +
                                 " not supported");
    m.command = j.at("command").get<std::string>();
    m.source = j.at("source").get<std::string>();
    m.filter_config = j.at("filter_config").get<std::string>();
    m.processed = j.at("processed").get<std::uint64_t>();
    m.skipped = j.at("skipped").get<std::uint64_t>();
    m.violations = j.at("violations").get<std::uint64_t>();
    m.sharp_egt = j.at("sharp_egt").get<std::uint64_t>();
    m.sharp_bip = j.at("sharp_bip").get<std::uint64_t>();
    m.parse_errors = j.at("parse_errors").get<std::uint64_t>();
    m.capacity_skips = j.at("capacity_skips").get<std::uint64_t>();
    m.eliminated = j.at("eliminated").get<std::map<std::string, std::uint64_t>>();
    m.wall_seconds = j.at("wall_seconds").get<double>();
    m.cursor = j.at("cursor").get<std::uint64_t>();
    m.complete = j.at("complete").get<bool>();
    return m;
}

void write_manifest(const std::string &path, const RunManifest &m) {
    std::ofstream out(path, std::ios::trunc);
    out << manifest_to_text(m);
    if (!out) throw std::runtime_error("cannot write manifest " + path);
}

RunManifest read_manifest(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read manifest " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return manifest_from_text(buf.str());
}

// ---------------------------------------------------------------------------
// Records

namespace {

void fill_slacks(VerificationRecord &r) {
    const long n2 = static_cast<long>(r.n) * r.n;
    r.slack_egt = n2 - 4L * (r.alpha1 + r.tau);
    r.slack_bip = n2 - 4L * (r.alpha1 + r.taub);
    if (r.slack_egt < 0) r.set(Flag::EgtViolation);
    if (r.slack_bip < 0) r.set(Flag::BipViolation);
    if (r.slack_egt == 0) r.set(Flag::SharpEgt);
    if (r.slack_bip == 0) r.set(Flag::SharpBip);
    if (r.slack_egt >= 1 && r.slack_egt <= 3) r.set(Flag::NearSharpEgt);
    if (r.slack_bip >= 1 && r.slack_bip <= 3) r.set(Flag::NearSharpBip);
}

}  // namespace

VerificationRecord make_record(const Graph &g, std::string graph6, const VerifyOptions &options) {
    VerificationRecord r;
    r.graph6 = std::move(graph6);
    r.n = g.order();
    r.m = g.size();
    const Invariants inv = compute_invariants(g, options.solver);
    r.alpha1 = inv.alpha1;
    r.tau = inv.tau;
    r.taub = inv.taub;
    fill_slacks(r);
    if (is_triangular(g)) r.set(Flag::Triangular);
    if (mindeg_filter(g)) r.set(Flag::MindegPass);
    if (!has_induced_k4_minus(g)) r.set(Flag::K4MinusFree);

    const bool violation = r.has(Flag::EgtViolation) || r.has(Flag::BipViolation);
    if (violation && options.oracle_recheck && r.m <= options.oracle_limits.max_edges &&
        r.n <= options.oracle_limits.max_vertices) {
        const int a = brute_force(g, Invariant::Alpha1, options.oracle_limits).value;
        const int t = brute_force(g, Invariant::Tau, options.oracle_limits).value;
        const int b = brute_force(g, Invariant::Taub, options.oracle_limits).value;
        if (a != r.alpha1 || t != r.tau || b != r.taub)
            throw std::logic_error("solver disagrees with brute-force oracle on " + r.graph6);
        r.set(Flag::OracleConfirmed);
    }
    return r;
}

bool violates(const VerificationRecord &r, Variant variant) {
    switch (variant) {
    case Variant::Egt: return r.has(Flag::EgtViolation);
    case Variant::Bip: return r.has(Flag::BipViolation);
    case Variant::Both: return r.has(Flag::EgtViolation) || r.has(Flag::BipViolation);
    }
    return false;
}

// ---------------------------------------------------------------------------
// Sources

namespace {

class Graph6Source : public GraphSource {
public:
    Graph6Source(std::istream &in, bool strict) : stream_(in, strict) {}

    std::optional<Item> next() override {
        auto item = stream_.next();
        if (!item) return std::nullopt;
        Item out{item->line, item->text, std::nullopt, std::nullopt};
        if (item->ok())
            out.graph = item->graph();
        else
            out.error = item->error();
        return out;
    }
    void skip_to(std::uint64_t position) override { stream_.skip_to(position); }
    std::uint64_t consumed() const override { return stream_.lines_read(); }

private:
    GraphStream stream_;
};

}  // namespace

std::unique_ptr<GraphSource> graph6_source(std::istream &in, bool strict) {
    return std::make_unique<Graph6Source>(in, strict);
}

LabeledEnumeration::LabeledEnumeration(int n) : n_(n) {
    if (n < 0 || n > kMaxOrder)
        throw CapacityError("labeled enumeration limited to n <= " + std::to_string(kMaxOrder));
    pairs_ = complete(n).edges();
    total_ = std::uint64_t{1} << pairs_.size();
}

std::optional<Graph> LabeledEnumeration::next_graph() {
    if (mask_ >= total_) return std::nullopt;
    Graph g(n_);
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        if ((mask_ >> i) & 1U) g.add_edge(pairs_[i].first, pairs_[i].second);
    ++mask_;
    return g;
}

std::optional<GraphSource::Item> LabeledEnumeration::next() {
    auto g = next_graph();
    if (!g) return std::nullopt;
    return Item{mask_, encode_graph6(*g), std::move(*g), std::nullopt};
}

// ---------------------------------------------------------------------------
// Pipeline

namespace {

struct Outcome {
    enum class Kind { Record, ParseError, Capacity, Filtered, WrongOrder } kind = Kind::Record;
    VerificationRecord record;
    std::string reason;
};

/// Pulls items in batches, processes each batch across the worker pool, and emits
/// results strictly in input order.
template <typename Process>
RunManifest run_pipeline(GraphSource &source, const VerifyOptions &options, ReportWriter &report,
                         RunManifest manifest, Process &&process) {
    const auto start = std::chrono::steady_clock::now();
    source.skip_to(manifest.cursor);
    const int workers = resolve_workers(options.workers);
    const std::size_t batch_size = 64 * static_cast<std::size_t>(workers);
    std::size_t taken = 0;
    bool exhausted = false;

    std::vector<GraphSource::Item> batch;
    std::vector<Outcome> results;
    while (!exhausted) {
        const std::uint64_t before = source.consumed();
        batch.clear();
        while (batch.size() < batch_size) {
            if (options.max_graphs != 0 && taken == options.max_graphs) break;
            auto item = source.next();
            if (!item) {
                exhausted = true;
                break;
            }
            batch.push_back(std::move(*item));
            ++taken;
        }
        if (batch.empty() && !exhausted) break;

        results.assign(batch.size(), Outcome{});
        auto work = [&](std::size_t i) {
            const auto &item = batch[i];
            Outcome &out = results[i];
            if (item.error) {
                out.kind = Outcome::Kind::ParseError;
                out.reason = item.error->what();
                return;
            }
            try {
                process(*item.graph, item.text, out);
            } catch (const CapacityError &e) {
                out.kind = Outcome::Kind::Capacity;
                out.reason = e.what();
            }
        };

        if (workers <= 1 || batch.size() <= 1) {
            for (std::size_t i = 0; i < batch.size(); ++i) work(i);
        } else {
            std::atomic<std::size_t> cursor{0};
            std::exception_ptr failure;
            std::mutex failure_mutex;
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) {
                pool.emplace_back([&] {
                    for (std::size_t i; (i = cursor.fetch_add(1)) < batch.size();) {
                        try {
                            work(i);
                        } catch (...) {
                            std::lock_guard lock(failure_mutex);
                            if (!failure) failure = std::current_exception();
                        }
                    }
                });
            }
            for (auto &t : pool) t.join();
            if (failure) std::rethrow_exception(failure);
        }

        std::uint64_t processed_now = 0;
        for (std::size_t i = 0; i < batch.size(); ++i) {
            Outcome &out = results[i];
            switch (out.kind) {
            case Outcome::Kind::Record: {
                ++processed_now;
                const auto &r = out.record;
                if (violates(r, options.variant)) {
                    ++manifest.violations;
                    if (options.audit_sink) print_audit(audit_graph(*batch[i].graph, options.solver),
                                                        *options.audit_sink);
                }
                if (r.has(Flag::SharpEgt)) ++manifest.sharp_egt;
                if (r.has(Flag::SharpBip)) ++manifest.sharp_bip;
                report.write(r);
                break;
            }
            case Outcome::Kind::ParseError: ++manifest.parse_errors; break;
            case Outcome::Kind::Capacity: ++manifest.capacity_skips; break;
            case Outcome::Kind::Filtered: ++manifest.eliminated[out.reason]; break;
            case Outcome::Kind::WrongOrder: ++manifest.eliminated["order"]; break;
            }
        }
        manifest.processed += processed_now;
        manifest.skipped += (source.consumed() - before) - processed_now;
        manifest.cursor = source.consumed();
    }
    manifest.complete = exhausted;
    manifest.wall_seconds +=
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return manifest;
}

std::string verify_config(const VerifyOptions &o) {
    return "variant=" + std::string(to_string(o.variant)) +
           ";maxcut_limit=" + std::to_string(o.solver.maxcut_limit) +
           ";oracle_recheck=" + (o.oracle_recheck ? "on" : "off");
}

}  // namespace

RunManifest verify(GraphSource &source, const VerifyOptions &options, ReportWriter &report,
                   RunManifest previous) {
    if (previous.command.empty()) previous.command = "verify";
    previous.filter_config = verify_config(options);
    return run_pipeline(source, options, report, std::move(previous),
                        [&](const Graph &g, const std::string &text, Outcome &out) {
                            out.record = make_record(g, text, options);
                        });
}

// ---------------------------------------------------------------------------
// Hunt

std::string_view to_string(HuntFilter f) {
    switch (f) {
    case HuntFilter::Mindeg: return "mindeg";
    case HuntFilter::Triangular: return "triangular";
    case HuntFilter::K4Minus: return "k4minus";
    case HuntFilter::CliqueExtension: return "clique-extension";
    case HuntFilter::DenseCut: return "dense-cut";
    }
    return "?";
}

HuntFilter parse_hunt_filter(std::string_view name) {
    for (auto f : {HuntFilter::Mindeg, HuntFilter::Triangular, HuntFilter::K4Minus,
                   HuntFilter::CliqueExtension, HuntFilter::DenseCut})
        if (to_string(f) == name) return f;
    throw std::invalid_argument("unknown hunt filter '" + std::string(name) + "'");
}

std::vector<HuntFilter> parse_hunt_filters(std::string_view list) {
    std::vector<HuntFilter> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const auto end = std::min(list.find(',', start), list.size());
        const auto name = list.substr(start, end - start);
        if (!name.empty()) out.push_back(parse_hunt_filter(name));
        start = end + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<HuntFilter> default_hunt_filters() {
    return {HuntFilter::Mindeg, HuntFilter::Triangular, HuntFilter::DenseCut};
}

std::optional<HuntFilter> first_failed_filter(const Graph &g, const HuntOptions &options) {
    for (HuntFilter f : options.filters) {
        bool pass = true;
        switch (f) {
        case HuntFilter::Mindeg: pass = mindeg_filter(g); break;
        case HuntFilter::Triangular: pass = is_triangular(g); break;
        case HuntFilter::K4Minus: pass = has_induced_k4_minus(g); break;
        case HuntFilter::CliqueExtension:
            for (VertexSet c : maximal_cliques(g)) {
                // A complete graph satisfies both conjectures, so it is never minimal.
                if (c == g.vertices() || !clique_extension_check(g, c).extends) {
                    pass = false;
                    break;
                }
            }
            break;
        case HuntFilter::DenseCut:
            pass = dense_cut_audit(g, options.dense_cut).status != DenseCutStatus::Refuted;
            break;
        }
        if (!pass) return f;
    }
    return std::nullopt;
}

RunManifest hunt(GraphSource &source, const HuntOptions &options, ReportWriter &report,
                 RunManifest previous) {
    if (previous.command.empty()) previous.command = "hunt";
    std::string filters;
    for (HuntFilter f : options.filters) {
        if (!filters.empty()) filters += ',';
        filters += to_string(f);
    }
    const bool sampled = options.dense_cut.kind == DenseCutMode::Kind::Sampled;
    previous.filter_config =
        "n=" + std::to_string(options.n) + ";filters=" + filters + ";order=cheapest-first" +
        ";dense_cut=" +
        (sampled ? "sampled(singletons,neighbourhoods,closed-neighbourhoods,maximal-cliques+" +
                       std::to_string(options.dense_cut.extra_samples) + " random;heuristic)"
                 : std::string("exhaustive")) +
        ";" + verify_config(options.verify);
    return run_pipeline(source, options.verify, report, std::move(previous),
                        [&](const Graph &g, const std::string &text, Outcome &out) {
                            if (g.order() != options.n) {
                                out.kind = Outcome::Kind::WrongOrder;
                                return;
                            }
                            if (auto failed = first_failed_filter(g, options)) {
                                out.kind = Outcome::Kind::Filtered;
                                out.reason = std::string(to_string(*failed));
                                return;
                            }
                            out.record = make_record(g, text, options.verify);
                        });
}

// ---------------------------------------------------------------------------
// Families

namespace {

void multisets_from(int largest, int budget, std::vector<int> &prefix,
                    std::vector<std::vector<int>> &out) {
    for (int r = 1; r <= std::min(largest, budget); ++r) {
        prefix.push_back(r);
        out.push_back(prefix);
        multisets_from(r, budget - r, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> sharpness_multisets(int max_n) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    const int budget = std::min(max_n, kMaxVertices) / 2;
    for (int first = 1; first <= budget; ++first) {
        prefix = {first};
        out.push_back(prefix);
        multisets_from(first, budget - first, prefix, out);
    }
    return out;
}

std::vector<FamilyRecord> family_sweep(int max_n, const VerifyOptions &options) {
    std::vector<FamilyRecord> out;
    for (auto &blocks : sharpness_multisets(max_n)) {
        const Graph g = sharpness_family(blocks);
        out.push_back({blocks, make_record(g, encode_graph6(g), options)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Audit

AuditReport audit_graph(const Graph &g, const SolverOptions &options) {
    AuditReport a;
    a.graph = g;
    a.graph6 = encode_graph6(g);
    a.alpha1 = alpha1_exact(g);
    a.tau = tau_exact(g);
    a.taub = taub_exact(g, options);
    VerifyOptions vo;
    vo.solver = options;
    vo.oracle_recheck = false;
    a.record = make_record(g, a.graph6, vo);
    a.profile = structure_profile(
        g, g.order() <= kExhaustiveCutLimit ? DenseCutMode::exhaustive() : DenseCutMode::sampled());
    a.cliques = maximal_cliques(g);
    if (g.order() >= 2) {
        for (int v = 0; v < g.order(); ++v) {
            const VertexSet s = VertexSet::of({v});
            const CutValues values = cut_values(g, s, options);
            a.singletons.push_back(
                {v, check_peel(g, s, values), check_denseboth(g, s, a.alpha1.witness, values)});
        }
    }
    return a;
}

namespace {

std::string set_text(VertexSet s) {
    std::string out = "{";
    for (int v : s.members()) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
}

std::string edges_text(const Graph &g, const EdgeSet &x) {
    std::string out;
    for (auto [u, v] : edge_pairs(EdgeIndex(g), x))
        out += (out.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
    return out.empty() ? "-" : out;
}

const char *yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

void print_audit(const AuditReport &a, std::ostream &out) {
    const auto &r = a.record;
    const auto &p = a.profile;
    out << "graph6: " << a.graph6 << '\n';
    out << "n: " << r.n << "  m: " << r.m << '\n';
    out << "alpha1: " << a.alpha1.value << "  witness: " << edges_text(a.graph, a.alpha1.witness) << '\n';
    out << "tau: " << a.tau.value << "  witness: " << edges_text(a.graph, a.tau.witness) << '\n';
    out << "taub: " << a.taub.value << "  witness: " << edges_text(a.graph, a.taub.witness);
    if (a.taub.bipartition) out << "  side: " << set_text(*a.taub.bipartition);
    out << '\n';
    out << "slack_egt: " << r.slack_egt << "  slack_bip: " << r.slack_bip << '\n';
    out << "flags: " << format_flags(r.flags) << '\n';
    out << "triangular: " << yes_no(p.is_triangular) << '\n';
    out << "min_degree: " << p.min_degree << '\n';
    out << "mindeg_pass: " << yes_no(p.passes_mindeg_filter) << '\n';
    out << "has_induced_k4_minus: " << yes_no(p.has_induced_k4_minus);
    if (p.k4_minus_witness) {
        const auto &q = *p.k4_minus_witness;
        out << "  witness: " << q[0] << ' ' << q[1] << ' ' << q[2] << ' ' << q[3];
    }
    out << '\n';
    out << "dense_cut: " << to_string(p.dense_cut.status) << "  cuts_checked: " << p.dense_cut.cuts_checked
        << "  mode: " << (r.n <= kExhaustiveCutLimit ? "exhaustive" : "sampled");
    if (p.dense_cut.refutation) {
        const auto &c = *p.dense_cut.refutation;
        out << "  S: " << set_text(c.s) << "  2|cut|: " << c.twice_cut << " <= " << c.threshold;
    }
    out << '\n';
    out << "maximal_cliques: " << a.cliques.size() << '\n';
    for (VertexSet c : a.cliques) {
        out << "  " << set_text(c) << ": ";
        if (c == a.graph.vertices()) {
            out << "whole vertex set\n";
            continue;
        }
        const auto it = std::find_if(p.clique_extensions.begin(), p.clique_extensions.end(),
                                     [&](const CliqueExtension &e) { return e.clique == c; });
        if (it->extends) {
            out << "extends via " << it->vertex << '\n';
        } else {
            out << "fails; closest:";
            for (int v : it->closest) out << ' ' << v;
            out << '\n';
        }
    }
    for (const auto &s : a.singletons) {
        out << "singleton " << s.vertex << ": peel " << s.peel.lhs << " <= " << s.peel.rhs
            << " (slack " << s.peel.slack() << ")  denseboth*2 " << s.denseboth.lhs << " <= "
            << s.denseboth.rhs << " (slack " << s.denseboth.slack() << ")\n";
    }
}

}  // namespace egt
