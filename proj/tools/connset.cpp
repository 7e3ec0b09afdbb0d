#include <limits>

#include <CLI11.hpp>

#include "connset/connset.hpp"

namespace {

void add_common_options(CLI::App* sub, connset::cli::RunConfig& cfg) {
    sub->add_option("--input", cfg.input, "input path, or - for stdin")->capture_default_str();
    sub->add_option("--format", cfg.format, "graph6 | edges | family")
        ->check(CLI::IsMember({"graph6", "edges", "family"}))
        ->capture_default_str();
    sub->add_option("--workers", cfg.workers, "worker threads (>= 1)")
        ->check(CLI::Range(1, 1024))
        ->capture_default_str();
    sub->add_option("--budget", cfg.budget, "work budget in recursion nodes")
        ->check(CLI::Range(std::uint64_t(1), std::numeric_limits<std::uint64_t>::max()))
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "output path, or - for stdout")->capture_default_str();
    sub->add_option("--output-format", cfg.output_format, "json | jsonl | csv")
        ->check(CLI::IsMember({"json", "jsonl", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact statistics and verification for connected vertex sets of graphs"};
    app.require_subcommand(1);

    connset::cli::RunConfig cfg;
    std::string statements = "all";

    auto* compute = app.add_subcommand("compute", "per-graph N, S, A, D and optional extras");
    add_common_options(compute, cfg);
    compute->add_flag("--profile", cfg.with_profile, "include the per-vertex rooted counts");
    compute->add_flag("--near-tree", cfg.with_near_tree, "include the near-tree classification");

    auto* verify = app.add_subcommand("verify", "run the statement suite over a graph stream");
    add_common_options(verify, cfg);
    verify->add_option("--statements", statements, "comma-separated statement ids, or all")->capture_default_str();

    auto* search = app.add_subcommand("search", "scan a stream for extremal A or D");
    add_common_options(search, cfg);
    search->add_option("--objective", cfg.objective, "A | D")
        ->check(CLI::IsMember({"A", "D"}))
        ->capture_default_str();
    search->add_option("--direction", cfg.direction, "min | max")
        ->check(CLI::IsMember({"min", "max"}))
        ->capture_default_str();

    auto* bench = app.add_subcommand("bench", "time the engine over a graph stream");
    add_common_options(bench, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    cfg.statements.clear();
    std::size_t start = 0;
    while (start <= statements.size()) {
        std::size_t comma = statements.find(',', start);
        if (comma == std::string::npos) comma = statements.size();
        std::string id = statements.substr(start, comma - start);
        if (!id.empty()) cfg.statements.push_back(id);
        start = comma + 1;
    }
    if (cfg.statements.empty()) cfg.statements.push_back("all");

    const char* command = compute->parsed() ? "compute" : verify->parsed() ? "verify" : search->parsed() ? "search" : "bench";
    (void)bench;
    return connset::cli::dispatch(command, cfg);
}
