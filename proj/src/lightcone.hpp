#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "graph.hpp"

namespace qx {

// The subgraph that determines one edge expectation at depth p: all edges of
// the parent graph incident to a vertex within distance p-1 of the edge's
// endpoints, relabeled to dense indices.
struct Lightcone {
    Graph subgraph;
    Edge central_edge;              // inside subgraph
    Edge origin;                    // edge in the parent graph
    int depth = 1;
    std::vector<int> parent_nodes;  // subgraph index -> parent index
};

// Isomorphism class of a p=1 lightcone: a double star on the central edge
// with t shared pendant neighbors. (d1, d2, t) determines the lightcone up
// to isomorphism, so no general graph-isomorphism machinery is needed.
struct LightconeClass {
    int d1 = 1;  // degree of first central node, d1 <= d2
    int d2 = 1;
    int t = 0;   // common neighbors of the central pair

    auto operator<=>(const LightconeClass&) const = default;

    bool valid() const { return 1 <= d1 && d1 <= d2 && 0 <= t && t <= d1 - 1; }
    int node_count() const { return 2 + t + (d1 - 1 - t) + (d2 - 1 - t); }

    std::string token() const;  // "d1-d2-t"
    static LightconeClass from_token(const std::string& token);
};

struct ClassHistogram {
    std::map<LightconeClass, int> counts;  // ordered by (d1, d2, t)
    int total = 0;                         // = |E| of the parent graph
};

// Edges of g incident to a vertex within BFS distance p-1 of {j, k}.
Lightcone extract(const Graph& g, Edge edge, int p);

// (min degree, max degree, shared neighbors) of the central pair, measured
// inside the lightcone. Defined for depth 1 only.
LightconeClass classify(const Lightcone& lc);

// p=1 shortcut reading degrees and common neighbors off the parent graph.
LightconeClass classify_edge(const Graph& g, Edge edge);

// Smallest graph whose p=1 lightcone at its central edge has class c:
// central edge (0, 1), t shared neighbors, d1-1-t pendants on node 0 and
// d2-1-t pendants on node 1.
Lightcone realize(const LightconeClass& c);

// All classes (d, d, t) with 2 <= d <= d_max, 0 <= t <= d-1, ordered by (d, t).
std::vector<LightconeClass> enumerate_regular(int d_max);

// All classes with 1 <= d1 <= d2 <= d_max, 0 <= t <= d1-1, ordered by
// (d1, d2, t).
std::vector<LightconeClass> enumerate_general(int d_max);

// Per-edge p=1 classes tallied over all edges of g.
ClassHistogram histogram(const Graph& g);

}  // namespace qx
