#pragma once

#include <vector>

#include "graph.hpp"

namespace qx::testing {

inline Graph cycle(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({std::min(i, (i + 1) % n),
                                                 std::max(i, (i + 1) % n)});
    return Graph(n, std::move(edges));
}

inline Graph path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

inline Graph complete(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
    return Graph(a + b, std::move(edges));
}

inline Graph single_edge() { return Graph(2, {{0, 1}}); }

// Outer 5-cycle, inner pentagram, spokes.
inline Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)});
        edges.push_back({i, i + 5});
        int a = 5 + i, b = 5 + (i + 2) % 5;
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return Graph(10, std::move(edges));
}

}  // namespace qx::testing
