#pragma once

#include <chrono>
#include <deque>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "connset/generators.hpp"
#include "connset/pipeline.hpp"
#include "connset/statements.hpp"

namespace connset {

namespace cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failure = 1;
inline constexpr int exit_parse_error = 2;
inline constexpr int exit_budget_exceeded = 3;
inline constexpr int exit_unknown_statement = 4;

struct RunConfig {
    std::string input = "-";            // file path or "-" for stdin
    std::string format = "graph6";      // graph6 | edges | family
    std::vector<std::string> statements{"all"};
    int workers = 1;
    std::uint64_t budget = WorkBudget{}.limit;
    std::string out = "-";              // file path or "-" for stdout
    std::string output_format;          // json | jsonl | csv (per-command default)
    bool with_profile = false;
    bool with_near_tree = false;
    std::string objective = "D";        // A | D
    std::string direction = "min";      // min | max
    const StatementRegistry* registry = nullptr;  // tests may inject; default standard()
};

struct StreamItem {
    Graph graph;
    std::string id;      // graph6 (always) — regenerated for non-graph6 sources
    std::string source;  // family spec string when generated
};

// Sequential reader over the configured input: graph6 lines, one edge-list
// graph, or family-spec lines expanded in order.
class GraphSource {
  public:
    GraphSource(const RunConfig& cfg, std::istream& in) : cfg_(cfg), in_(in) {}

    std::optional<StreamItem> next() {
        if (cfg_.format == "edges") {
            if (edges_done_) return std::nullopt;
            edges_done_ = true;
            std::ostringstream all;
            all << in_.rdbuf();
            Graph g = parse_edge_list(all.str());
            StreamItem item{std::move(g), "", ""};
            item.id = encode_graph6(item.graph);
            return item;
        }
        if (cfg_.format == "family") {
            while (pending_.empty()) {
                std::string line;
                if (!std::getline(in_, line)) return std::nullopt;
                ++line_no_;
                while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
                if (line.empty() || line[0] == '#') continue;
                try {
                    for (auto& spec : expand_family_spec(line)) pending_.push_back(std::move(spec));
                } catch (const error& e) {
                    fail(e.code(), "line " + std::to_string(line_no_) + ": " + e.what());
                }
            }
            FamilySpec spec = std::move(pending_.front());
            pending_.pop_front();
            StreamItem item{generate(spec), "", family_spec_to_string(spec)};
            item.id = encode_graph6(item.graph);
            return item;
        }
        // graph6 stream: one record per line
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty() || line == graph6_header) continue;
            try {
                Graph g = parse_graph6(line);
                std::string id = line;
                if (id.rfind(graph6_header, 0) == 0) id = id.substr(graph6_header.size());
                return StreamItem{std::move(g), std::move(id), ""};
            } catch (const error& e) {
                fail(e.code(), "line " + std::to_string(line_no_) + ": " + e.what());
            }
        }
        return std::nullopt;
    }

  private:
    const RunConfig& cfg_;
    std::istream& in_;
    std::size_t line_no_ = 0;
    bool edges_done_ = false;
    std::deque<FamilySpec> pending_;
};

inline int exit_code_for(const error& e) {
    switch (e.code()) {
        case errc::budget_exceeded:
            return exit_budget_exceeded;
        case errc::unknown_statement:
            return exit_unknown_statement;
        default:
            return exit_parse_error;
    }
}

namespace detail {

// Exact per-graph record; disconnected inputs are summed over components
// (each component computed by the engine), with no near-tree class.
struct ComputeRecord {
    int n = 0;
    Int count;
    Int total;
    Rat average;
    Rat density;
    bool connected = true;
    std::vector<Int> profile;
    NearTreeClass near_tree = NearTreeClass::tree;
};

inline ComputeRecord compute_record(const Graph& g, const RunConfig& cfg) {
    ComputeRecord rec;
    rec.n = g.order();
    WorkBudget budget{cfg.budget, 0};
    rec.connected = is_connected(g);
    if (rec.connected) {
        ConnStats s = stats(g, budget);
        rec.count = std::move(s.count);
        rec.total = std::move(s.total);
        rec.average = std::move(s.average);
        rec.density = std::move(s.density);
        if (cfg.with_near_tree) rec.near_tree = classify_near_tree(g);
        if (cfg.with_profile) rec.profile = vertex_profile(g, budget);
    } else {
        Int count = 0, total = 0;
        for (const auto& comp : connected_components(g)) {
            ConnStats s = stats(induced_subgraph(g, comp), budget);
            count += s.count;
            total += s.total;
        }
        rec.average = Rat(total, count);
        rec.density = Rat(total, count * g.order());
        rec.count = std::move(count);
        rec.total = std::move(total);
        if (cfg.with_profile) {
            rec.profile.assign(static_cast<std::size_t>(g.order()), Int(0));
            for (const auto& comp : connected_components(g)) {
                const Graph gi = induced_subgraph(g, comp);
                for (std::size_t i = 0; i < comp.size(); ++i)
                    rec.profile[static_cast<std::size_t>(comp[i])] =
                        rooted_count(gi, static_cast<int>(i), budget).first;
            }
        }
    }
    return rec;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    return out + "\"";
}

}  // namespace detail

inline int cmd_compute(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& diag) {
    const std::string fmt = cfg.output_format.empty() ? "jsonl" : cfg.output_format;
    GraphSource source(cfg, in);
    bool first = true;
    try {
        if (fmt == "json") out << "[";
        if (fmt == "csv") {
            out << "index,n,N,S,A,D";
            if (cfg.with_near_tree) out << ",near_tree_class";
            out << "\n";
        }
        for_each_ordered<StreamItem>(
            cfg.workers, [&]() { return source.next(); },
            [&](StreamItem&& item, std::size_t index) -> std::string {
                const auto rec = detail::compute_record(item.graph, cfg);
                if (fmt == "csv") {
                    std::string row = std::to_string(index) + "," + std::to_string(rec.n) + "," +
                                      to_decimal(rec.count) + "," + to_decimal(rec.total) + "," +
                                      to_fraction(rec.average) + "," + to_fraction(rec.density);
                    if (cfg.with_near_tree)
                        row += std::string(",") +
                               (rec.connected ? near_tree_class_name(rec.near_tree) : "");
                    return row + "\n";
                }
                nlohmann::ordered_json j;
                j["n"] = rec.n;
                j["N"] = to_decimal(rec.count);
                j["S"] = to_decimal(rec.total);
                j["A"] = to_fraction(rec.average);
                j["D"] = to_fraction(rec.density);
                if (cfg.with_profile) {
                    auto arr = nlohmann::ordered_json::array();
                    for (const Int& v : rec.profile) arr.push_back(to_decimal(v));
                    j["vertex_profile"] = arr;
                }
                if (cfg.with_near_tree) {
                    if (rec.connected)
                        j["near_tree_class"] = near_tree_class_name(rec.near_tree);
                    else
                        j["near_tree_class"] = nullptr;
                }
                if (!item.source.empty()) j["source"] = item.source;
                return j.dump() + "\n";
            },
            [&](const std::string& chunk) {
                if (fmt == "json") {
                    out << (first ? "\n" : ",\n");
                    first = false;
                    out << chunk.substr(0, chunk.size() - 1);
                } else {
                    out << chunk;
                }
            });
        if (fmt == "json") out << (first ? "]" : "\n]") << "\n";
        out.flush();
        return exit_ok;
    } catch (const error& e) {
        diag << e.what() << "\n";
        return exit_code_for(e);
    }
}

inline int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& diag) {
    const StatementRegistry standard_registry = StatementRegistry::standard();
    const StatementRegistry& registry = cfg.registry ? *cfg.registry : standard_registry;
    std::vector<std::string> ids;
    if (cfg.statements.size() == 1 && cfg.statements[0] == "all") {
        ids = registry.ids();
    } else {
        ids = cfg.statements;
        std::sort(ids.begin(), ids.end());
        for (const auto& id : ids)
            if (registry.find(id) == nullptr) {
                diag << "unknown statement \"" << id << "\"\n";
                return exit_unknown_statement;
            }
    }

    struct Tally {
        std::size_t graphs = 0, pass = 0, fail = 0, not_applicable = 0, findings = 0;
        double total_ms = 0, max_ms = 0;
        std::mutex mutex;
    } tally;

    GraphSource source(cfg, in);
    try {
        for_each_ordered<StreamItem>(
            cfg.workers, [&]() { return source.next(); },
            [&](StreamItem&& item, std::size_t index) -> std::string {
                const auto t0 = std::chrono::steady_clock::now();
                auto rows = run_statements_on_graph(item.graph, static_cast<std::int64_t>(index), item.id,
                                                    ids, registry, cfg.budget);
                const double ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                std::string chunk;
                std::size_t pass = 0, failed = 0, na = 0, findings = 0;
                for (const auto& r : rows) {
                    switch (r.status) {
                        case CheckStatus::pass: ++pass; break;
                        case CheckStatus::fail: ++failed; break;
                        case CheckStatus::not_applicable: ++na; break;
                    }
                    if (r.witness.contains("finding")) ++findings;
                    chunk += r.to_json().dump() + "\n";
                }
                {
                    std::lock_guard lock(tally.mutex);
                    ++tally.graphs;
                    tally.pass += pass;
                    tally.fail += failed;
                    tally.not_applicable += na;
                    tally.findings += findings;
                    tally.total_ms += ms;
                    tally.max_ms = std::max(tally.max_ms, ms);
                }
                return chunk;
            },
            [&](const std::string& chunk) { out << chunk; });
    } catch (const error& e) {
        diag << e.what() << "\n";
        return exit_code_for(e);
    }

    nlohmann::ordered_json summary;
    summary["summary"]["graphs"] = tally.graphs;
    summary["summary"]["pass"] = tally.pass;
    summary["summary"]["fail"] = tally.fail;
    summary["summary"]["not_applicable"] = tally.not_applicable;
    summary["summary"]["findings"] = tally.findings;
    summary["summary"]["total_runtime_ms"] = static_cast<std::int64_t>(tally.total_ms);
    summary["summary"]["max_runtime_ms"] = static_cast<std::int64_t>(tally.max_ms);
    out << summary.dump() << "\n";
    out.flush();
    return tally.fail > 0 ? exit_verification_failure : exit_ok;
}

inline int cmd_search(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& diag) {
    const std::string fmt = cfg.output_format.empty() ? "json" : cfg.output_format;
    const bool maximize = cfg.direction == "max";
    const bool use_average = cfg.objective == "A";

    struct Record {
        std::size_t index;
        std::string graph6;
        std::string source;
        Rat value;
    };
    std::vector<Record> records;
    std::vector<Record> findings;
    std::optional<Rat> best;
    std::size_t scanned = 0;

    GraphSource source(cfg, in);
    try {
        for_each_ordered<StreamItem>(
            cfg.workers, [&]() { return source.next(); },
            [&](StreamItem&& item, std::size_t) -> std::string {
                WorkBudget budget{cfg.budget, 0};
                Int count = 0, total = 0;
                for (const auto& comp : connected_components(item.graph)) {
                    ConnStats s = stats(induced_subgraph(item.graph, comp), budget);
                    count += s.count;
                    total += s.total;
                }
                const Rat average(total, count);
                const Rat density(total, count * item.graph.order());
                const Rat value = use_average ? average : density;
                const bool flagged = min_degree(item.graph) >= 3 && 2 * total <= Int(item.graph.order()) * count;
                // serialize the reduction inputs; the sink applies them in order
                nlohmann::ordered_json j;
                j["graph6"] = item.id;
                if (!item.source.empty()) j["source"] = item.source;
                j["value_num"] = to_decimal(boost::multiprecision::numerator(value));
                j["value_den"] = to_decimal(boost::multiprecision::denominator(value));
                j["finding"] = flagged;
                return j.dump();
            },
            [&](const std::string& chunk) {
                const auto j = nlohmann::ordered_json::parse(chunk);
                Record rec;
                rec.index = scanned++;
                rec.graph6 = j["graph6"].get<std::string>();
                if (j.contains("source")) rec.source = j["source"].get<std::string>();
                rec.value = Rat(Int(j["value_num"].get<std::string>()), Int(j["value_den"].get<std::string>()));
                if (j["finding"].get<bool>()) findings.push_back(rec);
                if (!best || rec.value == *best) {
                    if (!best) best = rec.value;
                    records.push_back(std::move(rec));
                } else if (maximize ? rec.value > *best : rec.value < *best) {
                    best = rec.value;
                    records.clear();
                    records.push_back(std::move(rec));
                }
            });
    } catch (const error& e) {
        diag << e.what() << "\n";
        return exit_code_for(e);
    }

    auto record_json = [](const Record& r) {
        nlohmann::ordered_json j;
        j["graph_index"] = r.index;
        j["graph6"] = r.graph6;
        if (!r.source.empty()) j["source"] = r.source;
        j["value"] = to_fraction(r.value);
        return j;
    };

    if (fmt == "csv") {
        out << "kind,graph_index,graph6,source,value\n";
        for (const auto& r : records)
            out << "record," << r.index << "," << r.graph6 << "," << detail::csv_escape(r.source) << ","
                << to_fraction(r.value) << "\n";
        for (const auto& r : findings)
            out << "finding," << r.index << "," << r.graph6 << "," << detail::csv_escape(r.source) << ","
                << to_fraction(r.value) << "\n";
    } else if (fmt == "jsonl") {
        for (const auto& r : records) {
            auto j = record_json(r);
            j["kind"] = "record";
            out << j.dump() << "\n";
        }
        for (const auto& r : findings) {
            auto j = record_json(r);
            j["kind"] = "finding";
            out << j.dump() << "\n";
        }
    } else {
        nlohmann::ordered_json j;
        j["objective"] = cfg.objective;
        j["direction"] = cfg.direction;
        j["scanned"] = scanned;
        j["records"] = nlohmann::ordered_json::array();
        for (const auto& r : records) j["records"].push_back(record_json(r));
        j["findings"] = nlohmann::ordered_json::array();
        for (const auto& r : findings) j["findings"].push_back(record_json(r));
        out << j.dump(2) << "\n";
    }
    out.flush();
    return exit_ok;
}

inline int cmd_bench(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& diag) {
    GraphSource source(cfg, in);
    std::size_t graphs = 0;
    double total_ms = 0, max_ms = 0;
    try {
        while (auto item = source.next()) {
            WorkBudget budget{cfg.budget, 0};
            const auto t0 = std::chrono::steady_clock::now();
            for (const auto& comp : connected_components(item->graph))
                stats(induced_subgraph(item->graph, comp), budget);
            const double ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            ++graphs;
            total_ms += ms;
            max_ms = std::max(max_ms, ms);
        }
    } catch (const error& e) {
        diag << e.what() << "\n";
        return exit_code_for(e);
    }
    nlohmann::ordered_json j;
    j["graphs"] = graphs;
    j["total_ms"] = total_ms;
    j["max_ms"] = max_ms;
    j["mean_ms"] = graphs ? total_ms / static_cast<double>(graphs) : 0.0;
    out << j.dump() << "\n";
    out.flush();
    return exit_ok;
}

// Dispatches one fully-parsed configuration, resolving input/output streams.
inline int dispatch(const std::string& command, const RunConfig& cfg) {
    std::ifstream fin;
    std::istream* in = &std::cin;
    if (cfg.input != "-") {
        fin.open(cfg.input);
        if (!fin) {
            std::cerr << "cannot open input " << cfg.input << "\n";
            return exit_parse_error;
        }
        in = &fin;
    }
    std::ofstream fout;
    std::ostream* out = &std::cout;
    if (cfg.out != "-") {
        fout.open(cfg.out);
        if (!fout) {
            std::cerr << "cannot open output " << cfg.out << "\n";
            return exit_parse_error;
        }
        out = &fout;
    }
    if (command == "compute") return cmd_compute(cfg, *in, *out, std::cerr);
    if (command == "verify") return cmd_verify(cfg, *in, *out, std::cerr);
    if (command == "search") return cmd_search(cfg, *in, *out, std::cerr);
    if (command == "bench") return cmd_bench(cfg, *in, *out, std::cerr);
    std::cerr << "unknown command " << command << "\n";
    return exit_parse_error;
}

}  // namespace cli

}  // namespace connset
