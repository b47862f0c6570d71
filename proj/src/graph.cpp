#include "graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace qx {

namespace {

std::uint64_t edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

// Sequential stub matching: repeatedly draw a random stub pair, rejecting
// pairs that would form a self-loop or duplicate edge; restart the whole
// attempt on a dead end. Handles dense degree sequences (up to complete
// graphs) that whole-matching rejection cannot reach.
std::vector<Edge> match_stubs(const std::vector<int>& degrees,
                              std::mt19937_64& rng, int attempt_cap,
                              const char* what) {
    std::vector<int> stubs;
    for (std::size_t v = 0; v < degrees.size(); ++v)
        for (int k = 0; k < degrees[v]; ++k) stubs.push_back(static_cast<int>(v));
    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);

    for (int attempt = 0; attempt < attempt_cap; ++attempt) {
        std::vector<int> pool = stubs;
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(stubs.size());
        edges.clear();
        bool dead_end = false;
        while (pool.size() > 1) {
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            bool found = false;
            std::size_t i = 0, j = 0;
            for (int tries = 0; tries < 64; ++tries) {
                i = pick(rng);
                j = pick(rng);
                if (i == j || pool[i] == pool[j]) continue;
                if (seen.count(edge_key(pool[i], pool[j]))) continue;
                found = true;
                break;
            }
            if (!found) {
                // Exact scan: draw uniformly among the still-valid pairs.
                std::vector<std::pair<std::size_t, std::size_t>> valid;
                for (std::size_t a = 0; a < pool.size(); ++a)
                    for (std::size_t b = a + 1; b < pool.size(); ++b)
                        if (pool[a] != pool[b] &&
                            !seen.count(edge_key(pool[a], pool[b])))
                            valid.push_back({a, b});
                if (valid.empty()) {
                    dead_end = true;
                    break;
                }
                std::uniform_int_distribution<std::size_t> choose(0, valid.size() - 1);
                std::tie(i, j) = valid[choose(rng)];
                found = true;
            }
            int u = pool[i], v = pool[j];
            seen.insert(edge_key(u, v));
            edges.emplace_back(std::min(u, v), std::max(u, v));
            if (i < j) std::swap(i, j);
            pool[i] = pool.back();
            pool.pop_back();
            pool[j] = pool.back();
            pool.pop_back();
        }
        if (!dead_end) return edges;
    }
    throw Error(ErrorKind::generation,
                std::string(what) + " failed to produce a simple graph in " +
                    std::to_string(attempt_cap) + " attempts");
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw Error(ErrorKind::parameter, "node count must be nonnegative");
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (auto& [u, v] : edges) {
        if (u == v)
            throw Error(ErrorKind::parameter,
                        "self-loop at node " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::parameter,
                        "edge endpoint out of range: " + std::to_string(u) + " " +
                            std::to_string(v));
        if (u > v) std::swap(u, v);
        if (!seen.insert(edge_key(u, v)).second)
            throw Error(ErrorKind::parameter,
                        "duplicate edge " + std::to_string(u) + " " +
                            std::to_string(v));
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int probe = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nb.begin(), nb.end(), probe);
}

Graph random_regular(int n, int d, Seed seed) {
    if (n < 0 || d < 0)
        throw Error(ErrorKind::parameter, "n and d must be nonnegative");
    if (d >= n)
        throw Error(ErrorKind::parameter,
                    "infeasible regular graph: d = " + std::to_string(d) +
                        " >= n = " + std::to_string(n));
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw Error(ErrorKind::parameter,
                    "infeasible regular graph: n*d is odd");

    auto rng = make_rng(seed);
    std::vector<int> degrees(n, d);
    return Graph(n, match_stubs(degrees, rng, 10000, "regular pairing model"));
}

Graph random_bounded(int n, int m, int d_max, Seed seed) {
    if (n < 0 || m < 0 || d_max < 0)
        throw Error(ErrorKind::parameter, "n, m, d_max must be nonnegative");
    long long max_by_degree = static_cast<long long>(n) * d_max / 2;
    long long max_simple = static_cast<long long>(n) * (n - 1) / 2;
    if (m > max_by_degree || m > max_simple)
        throw Error(ErrorKind::parameter,
                    "infeasible edge count m = " + std::to_string(m) +
                        " for n = " + std::to_string(n) +
                        ", d_max = " + std::to_string(d_max));

    auto rng = make_rng(seed);
    const int restart_cap = 1000;
    std::vector<Edge> all_pairs;
    all_pairs.reserve(static_cast<std::size_t>(max_simple));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);

    std::vector<int> degree(n, 0);
    std::vector<char> used(all_pairs.size(), 0);
    std::vector<int> feasible;
    for (int attempt = 0; attempt < restart_cap; ++attempt) {
        std::fill(degree.begin(), degree.end(), 0);
        std::fill(used.begin(), used.end(), 0);
        std::vector<Edge> edges;
        edges.reserve(m);
        while (static_cast<int>(edges.size()) < m) {
            feasible.clear();
            for (std::size_t i = 0; i < all_pairs.size(); ++i) {
                if (used[i]) continue;
                const auto& [u, v] = all_pairs[i];
                if (degree[u] < d_max && degree[v] < d_max) feasible.push_back(static_cast<int>(i));
            }
            if (feasible.empty()) break;
            std::uniform_int_distribution<std::size_t> pick(0, feasible.size() - 1);
            int i = feasible[pick(rng)];
            used[i] = 1;
            const auto& [u, v] = all_pairs[i];
            ++degree[u];
            ++degree[v];
            edges.push_back(all_pairs[i]);
        }
        if (static_cast<int>(edges.size()) == m) return Graph(n, std::move(edges));
    }
    throw Error(ErrorKind::generation,
                "bounded-degree sampling dead-ended in 1000 restarts");
}

Graph random_with_degrees(const std::vector<int>& degrees, Seed seed) {
    int n = static_cast<int>(degrees.size());
    long long total = 0;
    for (int d : degrees) {
        if (d < 0 || d >= n)
            throw Error(ErrorKind::parameter, "degree out of range");
        total += d;
    }
    if (total % 2 != 0)
        throw Error(ErrorKind::parameter, "degree sum must be even");

    auto rng = make_rng(seed);
    return Graph(n, match_stubs(degrees, rng, 10000, "degree-sequence pairing"));
}

Graph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    long long n = -1;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;

    auto fail = [&](const std::string& what) -> void {
        throw Error(ErrorKind::parse,
                    "line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n) || n < 0) fail("expected nonnegative node count");
            std::string rest;
            if (fields >> rest) fail("unexpected token after node count");
            continue;
        }
        long long u, v;
        if (!(fields >> u >> v)) fail("expected edge \"u v\"");
        std::string rest;
        if (fields >> rest) fail("unexpected token after edge");
        if (u == v) fail("self-loop at node " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail("endpoint out of range [0, " + std::to_string(n) + ")");
        int a = static_cast<int>(std::min(u, v));
        int b = static_cast<int>(std::max(u, v));
        if (!seen.insert(edge_key(a, b)).second)
            fail("duplicate edge " + std::to_string(a) + " " + std::to_string(b));
        edges.emplace_back(a, b);
    }
    if (n < 0) {
        ++line_no;
        fail("missing node count");
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.num_nodes() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace qx
