#include "lightcone.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace qx {

std::string LightconeClass::token() const {
    return std::to_string(d1) + "-" + std::to_string(d2) + "-" + std::to_string(t);
}

LightconeClass LightconeClass::from_token(const std::string& token) {
    LightconeClass c;
    char dash1 = 0, dash2 = 0;
    std::istringstream in(token);
    if (!(in >> c.d1 >> dash1 >> c.d2 >> dash2 >> c.t) || dash1 != '-' ||
        dash2 != '-' || in.rdbuf()->in_avail() != 0)
        throw Error(ErrorKind::parse, "malformed class token: " + token);
    if (!c.valid())
        throw Error(ErrorKind::parameter, "invalid lightcone class: " + token);
    return c;
}

Lightcone extract(const Graph& g, Edge edge, int p) {
    auto [j, k] = edge;
    if (!g.has_edge(j, k))
        throw Error(ErrorKind::parameter,
                    "edge " + std::to_string(j) + " " + std::to_string(k) +
                        " not in graph");
    if (p < 1) throw Error(ErrorKind::parameter, "depth p must be >= 1");
    if (j > k) std::swap(j, k);

    // BFS from {j, k} out to distance p-1.
    std::vector<int> dist(g.num_nodes(), -1);
    std::queue<int> frontier;
    dist[j] = dist[k] = 0;
    frontier.push(j);
    frontier.push(k);
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop();
        if (dist[v] == p - 1) continue;
        for (int u : g.neighbors(v)) {
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                frontier.push(u);
            }
        }
    }

    std::vector<Edge> kept;
    for (const auto& [u, v] : g.edges()) {
        bool u_in = dist[u] >= 0 && dist[u] <= p - 1;
        bool v_in = dist[v] >= 0 && dist[v] <= p - 1;
        if (u_in || v_in) kept.push_back({u, v});
    }

    // Dense relabeling over the endpoints of the kept edges.
    std::vector<int> to_local(g.num_nodes(), -1);
    Lightcone lc;
    lc.origin = {j, k};
    lc.depth = p;
    auto local = [&](int v) {
        if (to_local[v] < 0) {
            to_local[v] = static_cast<int>(lc.parent_nodes.size());
            lc.parent_nodes.push_back(v);
        }
        return to_local[v];
    };
    local(j);
    local(k);
    std::vector<Edge> local_edges;
    local_edges.reserve(kept.size());
    for (const auto& [u, v] : kept) {
        int a = local(u), b = local(v);
        local_edges.push_back({std::min(a, b), std::max(a, b)});
    }
    lc.subgraph = Graph(static_cast<int>(lc.parent_nodes.size()), std::move(local_edges));
    lc.central_edge = {to_local[j] < to_local[k] ? to_local[j] : to_local[k],
                       to_local[j] < to_local[k] ? to_local[k] : to_local[j]};
    return lc;
}

LightconeClass classify(const Lightcone& lc) {
    if (lc.depth != 1)
        throw Error(ErrorKind::unsupported_depth,
                    "classification is defined for p = 1 lightcones only");
    auto [j, k] = lc.central_edge;
    const Graph& s = lc.subgraph;
    int dj = s.degree(j), dk = s.degree(k);
    const auto& nj = s.neighbors(j);
    const auto& nk = s.neighbors(k);
    std::vector<int> common;
    std::set_intersection(nj.begin(), nj.end(), nk.begin(), nk.end(),
                          std::back_inserter(common));
    LightconeClass c;
    c.d1 = std::min(dj, dk);
    c.d2 = std::max(dj, dk);
    c.t = static_cast<int>(common.size());
    return c;
}

LightconeClass classify_edge(const Graph& g, Edge edge) {
    auto [j, k] = edge;
    if (!g.has_edge(j, k))
        throw Error(ErrorKind::parameter,
                    "edge " + std::to_string(j) + " " + std::to_string(k) +
                        " not in graph");
    const auto& nj = g.neighbors(j);
    const auto& nk = g.neighbors(k);
    std::vector<int> common;
    std::set_intersection(nj.begin(), nj.end(), nk.begin(), nk.end(),
                          std::back_inserter(common));
    LightconeClass c;
    c.d1 = std::min(g.degree(j), g.degree(k));
    c.d2 = std::max(g.degree(j), g.degree(k));
    c.t = static_cast<int>(common.size());
    return c;
}

Lightcone realize(const LightconeClass& c) {
    if (!c.valid())
        throw Error(ErrorKind::parameter, "invalid lightcone class: " + c.token());
    std::vector<Edge> edges;
    edges.push_back({0, 1});
    int next = 2;
    for (int i = 0; i < c.t; ++i, ++next) {
        edges.push_back({0, next});
        edges.push_back({1, next});
    }
    for (int i = 0; i < c.d1 - 1 - c.t; ++i, ++next) edges.push_back({0, next});
    for (int i = 0; i < c.d2 - 1 - c.t; ++i, ++next) edges.push_back({1, next});

    Lightcone lc;
    lc.subgraph = Graph(next, std::move(edges));
    lc.central_edge = {0, 1};
    lc.origin = {0, 1};
    lc.depth = 1;
    lc.parent_nodes.resize(next);
    for (int v = 0; v < next; ++v) lc.parent_nodes[v] = v;
    return lc;
}

std::vector<LightconeClass> enumerate_regular(int d_max) {
    if (d_max < 2)
        throw Error(ErrorKind::parameter, "enumerate_regular requires d_max >= 2");
    std::vector<LightconeClass> out;
    for (int d = 2; d <= d_max; ++d)
        for (int t = 0; t <= d - 1; ++t) out.push_back({d, d, t});
    return out;
}

std::vector<LightconeClass> enumerate_general(int d_max) {
    if (d_max < 1)
        throw Error(ErrorKind::parameter, "enumerate_general requires d_max >= 1");
    std::vector<LightconeClass> out;
    for (int d1 = 1; d1 <= d_max; ++d1)
        for (int d2 = d1; d2 <= d_max; ++d2)
            for (int t = 0; t <= d1 - 1; ++t) out.push_back({d1, d2, t});
    return out;
}

ClassHistogram histogram(const Graph& g) {
    ClassHistogram h;
    for (const auto& e : g.edges()) {
        ++h.counts[classify_edge(g, e)];
        ++h.total;
    }
    return h;
}

}  // namespace qx
