#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "connset/graph.hpp"

namespace connset {

// Fixed PRNG so identical specs reproduce identical labeled graphs on every
// platform: splitmix64 steps, bounded draws by plain modulo. Both choices
// are part of the documented generator contract.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

enum class Family {
    path,
    cycle,
    complete,
    complete_bipartite,
    star,
    spider,
    caterpillar,
    baton,
    cograph_random,
    block_graph_random,
    connected_gnm,
    cubic_random,
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::star: return "star";
        case Family::spider: return "spider";
        case Family::caterpillar: return "caterpillar";
        case Family::baton: return "baton";
        case Family::cograph_random: return "cograph_random";
        case Family::block_graph_random: return "block_graph_random";
        case Family::connected_gnm: return "connected_gnm";
        case Family::cubic_random: return "cubic_random";
    }
    return "unknown";
}

struct FamilySpec {
    Family family = Family::path;
    std::map<std::string, long long> params;
    std::uint64_t seed = 0;

    long long param(const std::string& key) const {
        auto it = params.find(key);
        if (it == params.end()) fail(errc::invalid_params, "missing parameter \"" + key + "\" for " + family_name(family));
        return it->second;
    }
};

inline std::string family_spec_to_string(const FamilySpec& spec) {
    std::string out = family_name(spec.family);
    char sep = ':';
    for (const auto& kv : spec.params) {
        out += sep;
        out += kv.first + "=" + std::to_string(kv.second);
        sep = ',';
    }
    if (spec.seed != 0 || spec.family == Family::cograph_random || spec.family == Family::block_graph_random ||
        spec.family == Family::connected_gnm || spec.family == Family::cubic_random) {
        out += sep;
        out += "seed=" + std::to_string(spec.seed);
    }
    return out;
}

namespace detail {

inline Family family_from_name(std::string_view name) {
    for (Family f : {Family::path, Family::cycle, Family::complete, Family::complete_bipartite, Family::star,
                     Family::spider, Family::caterpillar, Family::baton, Family::cograph_random,
                     Family::block_graph_random, Family::connected_gnm, Family::cubic_random})
        if (name == family_name(f)) return f;
    fail(errc::invalid_params, "unknown family \"" + std::string(name) + "\"");
}

// Recursive union/join construction; the top operation is forced to a join
// so the result is connected. Offsets keep labels canonical: the first part
// occupies the lower ids.
inline void build_cograph(Graph& g, int offset, int n, SplitMix64& rng, bool force_join) {
    if (n == 1) return;
    const int a = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    const int b = n - a;
    const bool join = force_join || rng.below(2) == 0;
    build_cograph(g, offset, a, rng, false);
    build_cograph(g, offset + a, b, rng, false);
    if (join)
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v) g.add_edge(offset + u, offset + a + v);
}

}  // namespace detail

// Deterministic construction; identical (family, params, seed) always yields
// an identical labeled graph.
inline Graph generate(const FamilySpec& spec) {
    auto need = [&](long long value, long long lo, const char* what) {
        if (value < lo) fail(errc::invalid_params, std::string(what) + " for " + family_name(spec.family));
        if (value > Graph::max_order) fail(errc::graph_too_large, "parameter exceeds the order cap");
        return static_cast<int>(value);
    };

    switch (spec.family) {
        case Family::path: {
            const int n = need(spec.param("n"), 1, "n must be at least 1");
            Graph g(n);
            for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
            return g;
        }
        case Family::cycle: {
            const int n = need(spec.param("n"), 3, "n must be at least 3");
            Graph g(n);
            for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
            g.add_edge(n - 1, 0);
            return g;
        }
        case Family::complete: {
            const int n = need(spec.param("n"), 1, "n must be at least 1");
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
            return g;
        }
        case Family::complete_bipartite: {
            const int a = need(spec.param("a"), 1, "a must be at least 1");
            const int b = need(spec.param("b"), 1, "b must be at least 1");
            if (a + b > Graph::max_order) fail(errc::graph_too_large, "order cap exceeded");
            Graph g(a + b);
            for (int u = 0; u < a; ++u)
                for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
            return g;
        }
        case Family::star: {
            const int m = need(spec.param("m"), 1, "m must be at least 1");
            if (m + 1 > Graph::max_order) fail(errc::graph_too_large, "order cap exceeded");
            Graph g(m + 1);
            for (int v = 1; v <= m; ++v) g.add_edge(0, v);
            return g;
        }
        case Family::spider: {
            const int legs = need(spec.param("legs"), 1, "legs must be at least 1");
            const int len = need(spec.param("len"), 1, "len must be at least 1");
            const long long n = 1LL + static_cast<long long>(legs) * len;
            if (n > Graph::max_order) fail(errc::graph_too_large, "order cap exceeded");
            Graph g(static_cast<int>(n));
            for (int l = 0; l < legs; ++l) {
                int prev = 0;
                for (int k = 0; k < len; ++k) {
                    int v = 1 + l * len + k;
                    g.add_edge(prev, v);
                    prev = v;
                }
            }
            return g;
        }
        case Family::caterpillar: {
            // spine of s vertices, k pendant legs on every spine vertex
            const int s = need(spec.param("s"), 1, "s must be at least 1");
            const int k = need(spec.param("k"), 0, "k must be nonnegative");
            const long long n = static_cast<long long>(s) * (1 + k);
            if (n > Graph::max_order) fail(errc::graph_too_large, "order cap exceeded");
            Graph g(static_cast<int>(n));
            for (int v = 1; v < s; ++v) g.add_edge(v - 1, v);
            for (int v = 0; v < s; ++v)
                for (int j = 0; j < k; ++j) g.add_edge(v, s + v * k + j);
            return g;
        }
        case Family::baton: {
            // path on L vertices with k pendant leaves on each endpoint
            const int len = need(spec.param("L"), 2, "L must be at least 2");
            const int k = need(spec.param("k"), 0, "k must be nonnegative");
            const long long n = len + 2LL * k;
            if (n > Graph::max_order) fail(errc::graph_too_large, "order cap exceeded");
            Graph g(static_cast<int>(n));
            for (int v = 1; v < len; ++v) g.add_edge(v - 1, v);
            for (int j = 0; j < k; ++j) g.add_edge(0, len + j);
            for (int j = 0; j < k; ++j) g.add_edge(len - 1, len + k + j);
            return g;
        }
        case Family::cograph_random: {
            const int n = need(spec.param("n"), 1, "n must be at least 1");
            SplitMix64 rng(spec.seed);
            Graph g(n);
            detail::build_cograph(g, 0, n, rng, true);
            return g;
        }
        case Family::block_graph_random: {
            // complete blocks glued one by one at already-placed vertices
            const int n = need(spec.param("n"), 1, "n must be at least 1");
            SplitMix64 rng(spec.seed);
            Graph g(n);
            int placed = 1;
            while (placed < n) {
                const int host = static_cast<int>(rng.below(static_cast<std::uint64_t>(placed)));
                const int budget_left = n - placed;
                const int extra = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(4, budget_left))));
                std::vector<int> block{host};
                for (int j = 0; j < extra; ++j) block.push_back(placed + j);
                for (std::size_t i = 0; i < block.size(); ++i)
                    for (std::size_t j = i + 1; j < block.size(); ++j) g.add_edge(block[i], block[j]);
                placed += extra;
            }
            return g;
        }
        case Family::connected_gnm: {
            const int n = need(spec.param("n"), 1, "n must be at least 1");
            const long long m = spec.param("m");
            const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
            if (m < n - 1 || m > max_edges)
                fail(errc::invalid_params, "m must lie between n-1 and n(n-1)/2");
            SplitMix64 rng(spec.seed);
            Graph g(n);
            if (n > 1) {
                // uniform labeled spanning tree from a random Pruefer sequence
                std::vector<int> pruefer(static_cast<std::size_t>(std::max(0, n - 2)));
                for (auto& v : pruefer) v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                std::vector<int> deg(static_cast<std::size_t>(n), 1);
                for (int v : pruefer) ++deg[static_cast<std::size_t>(v)];
                int ptr = 0;
                while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
                int leaf = ptr;
                for (int v : pruefer) {
                    g.add_edge(leaf, v);
                    if (--deg[static_cast<std::size_t>(v)] == 1 && v < ptr) {
                        leaf = v;
                    } else {
                        ++ptr;
                        while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
                        leaf = ptr;
                    }
                }
                g.add_edge(leaf, n - 1);
            }
            // extra edges sampled without replacement from the non-tree slots
            std::vector<std::pair<int, int>> pool;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!g.has_edge(u, v)) pool.emplace_back(u, v);
            long long extra = m - (n - 1);
            for (long long e = 0; e < extra; ++e) {
                const std::size_t pick = e + rng.below(pool.size() - static_cast<std::size_t>(e));
                std::swap(pool[static_cast<std::size_t>(e)], pool[pick]);
                g.add_edge(pool[static_cast<std::size_t>(e)].first, pool[static_cast<std::size_t>(e)].second);
            }
            return g;
        }
        case Family::cubic_random: {
            const int n = need(spec.param("n"), 4, "n must be at least 4");
            if (n % 2 != 0) fail(errc::invalid_params, "cubic graphs need even n");
            SplitMix64 rng(spec.seed);
            // pairing model on 3n stubs, retried until simple and connected
            for (int attempt = 0; attempt < 1'000'000; ++attempt) {
                std::vector<int> stubs;
                stubs.reserve(static_cast<std::size_t>(3 * n));
                for (int v = 0; v < n; ++v)
                    for (int c = 0; c < 3; ++c) stubs.push_back(v);
                for (std::size_t i = stubs.size(); i-- > 1;)
                    std::swap(stubs[i], stubs[rng.below(i + 1)]);
                Graph g(n);
                bool ok = true;
                for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
                    const int u = stubs[i], v = stubs[i + 1];
                    if (u == v || g.has_edge(u, v)) {
                        ok = false;
                    } else {
                        g.add_edge(u, v);
                    }
                }
                if (ok && is_connected(g)) return g;
            }
            fail(errc::invalid_params, "pairing model failed to produce a simple connected cubic graph");
        }
    }
    fail(errc::invalid_params, "unhandled family");
}

// Parses "family:key=value,key=value" where each value is an integer, a
// range "a..b", a stepped range "a..b..s", or the name of another key
// (linking the two, e.g. "baton:k=2..8,L=k"). Ranges expand to one spec per
// combination, nested in the order the keys appear.
inline std::vector<FamilySpec> expand_family_spec(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    const std::size_t colon = text.find(':');
    const Family family = detail::family_from_name(trim(text.substr(0, colon)));

    struct Range {
        std::string key;
        long long lo = 0, hi = 0, step = 1;
        std::string link;  // when nonempty, this key copies another key's value
    };
    std::vector<Range> ranges;

    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (!rest.empty()) {
            std::size_t comma = rest.find(',');
            std::string_view item = trim(rest.substr(0, comma));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            if (item.empty()) continue;
            const std::size_t eq = item.find('=');
            if (eq == std::string_view::npos) fail(errc::invalid_params, "expected key=value in family spec");
            Range r;
            r.key = std::string(trim(item.substr(0, eq)));
            std::string_view value = trim(item.substr(eq + 1));
            auto parse_ll = [&](std::string_view tok) {
                if (tok.empty()) fail(errc::invalid_params, "empty number in family spec");
                bool neg = tok.front() == '-';
                if (neg) tok.remove_prefix(1);
                long long v = 0;
                for (char c : tok) {
                    if (c < '0' || c > '9') fail(errc::invalid_params, "bad number in family spec");
                    v = v * 10 + (c - '0');
                }
                return neg ? -v : v;
            };
            if (!value.empty() && (std::isalpha(static_cast<unsigned char>(value.front())) || value.front() == '_')) {
                r.link = std::string(value);
                ranges.push_back(std::move(r));
                continue;
            }
            const std::size_t dots = value.find("..");
            if (dots == std::string_view::npos) {
                r.lo = r.hi = parse_ll(value);
            } else {
                r.lo = parse_ll(value.substr(0, dots));
                std::string_view tail = value.substr(dots + 2);
                const std::size_t dots2 = tail.find("..");
                if (dots2 == std::string_view::npos) {
                    r.hi = parse_ll(tail);
                } else {
                    r.hi = parse_ll(tail.substr(0, dots2));
                    r.step = parse_ll(tail.substr(dots2 + 2));
                    if (r.step < 1) fail(errc::invalid_params, "range step must be positive");
                }
            }
            if (r.hi < r.lo) fail(errc::invalid_params, "empty range in family spec");
            ranges.push_back(std::move(r));
        }
    }

    std::vector<FamilySpec> out;
    std::vector<long long> current(ranges.size());
    auto emit = [&]() {
        FamilySpec spec;
        spec.family = family;
        for (std::size_t i = 0; i < ranges.size(); ++i) {
            long long v = current[i];
            if (!ranges[i].link.empty()) {
                bool resolved = false;
                for (std::size_t j = 0; j < ranges.size(); ++j)
                    if (ranges[j].key == ranges[i].link && ranges[j].link.empty()) {
                        v = current[j];
                        resolved = true;
                    }
                if (!resolved) fail(errc::invalid_params, "linked parameter \"" + ranges[i].link + "\" not found");
            }
            if (ranges[i].key == "seed")
                spec.seed = static_cast<std::uint64_t>(v);
            else
                spec.params[ranges[i].key] = v;
        }
        out.push_back(std::move(spec));
    };
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == ranges.size()) {
            emit();
            return;
        }
        if (!ranges[i].link.empty()) {
            rec(i + 1);
            return;
        }
        for (long long v = ranges[i].lo; v <= ranges[i].hi; v += ranges[i].step) {
            current[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

inline FamilySpec parse_family_spec(std::string_view text) {
    auto specs = expand_family_spec(text);
    if (specs.size() != 1) fail(errc::invalid_params, "expected a single spec without ranges");
    return specs.front();
}

// Lazily yields one graph per expanded spec, in declaration order.
class FamilyStream {
  public:
    explicit FamilyStream(std::vector<FamilySpec> specs) : specs_(std::move(specs)) {}

    bool done() const { return pos_ >= specs_.size(); }

    std::pair<FamilySpec, Graph> next() {
        if (done()) fail(errc::invalid_params, "family stream exhausted");
        const FamilySpec& spec = specs_[pos_++];
        return {spec, generate(spec)};
    }

  private:
    std::vector<FamilySpec> specs_;
    std::size_t pos_ = 0;
};

}  // namespace connset
