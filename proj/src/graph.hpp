#pragma once

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"

namespace qx {

using Edge = std::pair<int, int>;  // stored normalized, first < second

// Undirected simple graph over dense node indices 0..n-1. Immutable after
// construction and safe to share across threads. Isolated nodes are allowed.
class Graph {
public:
    Graph() = default;

    // Validates simplicity (no self-loops, no duplicates, endpoints < n),
    // normalizes edges to u < v, and sorts them lexicographically.
    Graph(int n, std::vector<Edge> edges);

    int num_nodes() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;            // sorted lexicographically
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

// d-regular graph via the pairing (configuration) model with rejection of
// self-loops and multi-edges. Retry cap 10,000 attempts.
Graph random_regular(int n, int d, Seed seed);

// Exactly m edges, all degrees <= d_max. Each step draws uniformly from the
// currently feasible candidate edges; restarts on dead ends.
Graph random_bounded(int n, int m, int d_max, Seed seed);

// Pairing model for an explicit degree sequence (sum must be even).
Graph random_with_degrees(const std::vector<int>& degrees, Seed seed);

// Edge-list text format: first line = node count, then one "u v" line per
// edge with u < v, sorted lexicographically. The reader skips blank lines and
// lines starting with '#'.
Graph read_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

}  // namespace qx
