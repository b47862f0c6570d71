#include "maxcut.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

namespace qx {

int cut_value(const Graph& g, const std::vector<std::uint8_t>& assignment) {
    if (static_cast<int>(assignment.size()) != g.num_nodes())
        throw Error(ErrorKind::parameter, "assignment size must equal node count");
    int cut = 0;
    for (const auto& [u, v] : g.edges())
        if (assignment[u] != assignment[v]) ++cut;
    return cut;
}

CutSolution brute_force(const Graph& g) {
    const int n = g.num_nodes();
    if (n > 28)
        throw Error(ErrorKind::capacity,
                    "brute force capped at 28 nodes, got " + std::to_string(n));
    CutSolution best;
    best.assignment.assign(std::max(n, 0), 0);
    if (n <= 1) return best;

    std::vector<std::uint8_t> side(n, 0);
    int cut = 0;
    best.value = 0;
    // Gray-code walk over the sides of nodes 1..n-1; node 0 stays on side 0.
    const std::uint64_t total = std::uint64_t(1) << (n - 1);
    for (std::uint64_t i = 1; i < total; ++i) {
        int v = std::countr_zero(i) + 1;
        for (int u : g.neighbors(v))
            cut += (side[u] == side[v]) ? 1 : -1;
        side[v] ^= 1;
        if (cut > best.value) {
            best.value = cut;
            best.assignment = side;
        }
    }
    return best;
}

namespace {

struct BnbState {
    const Graph& g;
    std::vector<int> order;            // branch order: degree desc, index asc
    std::vector<std::uint8_t> side;
    std::vector<char> decided;
    std::vector<int> a0, a1;           // decided neighbors on each side
    int decided_cut = 0;
    int frontier_best = 0;             // sum over undecided v of max(a0, a1)
    int undecided_edges = 0;           // edges with both endpoints undecided
    CutSolution incumbent;
    int abandoned_bound = 0;           // max bound of subtrees cut off by time
    bool timed_out = false;
    std::uint64_t visited = 0;
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline = false;

    explicit BnbState(const Graph& graph)
        : g(graph),
          side(graph.num_nodes(), 0),
          decided(graph.num_nodes(), 0),
          a0(graph.num_nodes(), 0),
          a1(graph.num_nodes(), 0) {
        order.resize(g.num_nodes());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return g.degree(a) > g.degree(b);
        });
        undecided_edges = g.num_edges();
    }

    int bound() const { return decided_cut + frontier_best + undecided_edges; }

    void decide(int v, int s) {
        decided[v] = 1;
        side[v] = static_cast<std::uint8_t>(s);
        frontier_best -= std::max(a0[v], a1[v]);
        decided_cut += (s == 0) ? a1[v] : a0[v];
        for (int u : g.neighbors(v)) {
            if (decided[u]) continue;
            frontier_best -= std::max(a0[u], a1[u]);
            (s == 0 ? a0[u] : a1[u]) += 1;
            frontier_best += std::max(a0[u], a1[u]);
            --undecided_edges;
        }
    }

    void undo(int v, int s) {
        for (int u : g.neighbors(v)) {
            if (decided[u]) continue;
            frontier_best -= std::max(a0[u], a1[u]);
            (s == 0 ? a0[u] : a1[u]) -= 1;
            frontier_best += std::max(a0[u], a1[u]);
            ++undecided_edges;
        }
        decided_cut -= (s == 0) ? a1[v] : a0[v];
        frontier_best += std::max(a0[v], a1[v]);
        decided[v] = 0;
    }

    void dfs(int depth) {
        ++visited;
        if (has_deadline && (visited & 1023) == 0 &&
            std::chrono::steady_clock::now() >= deadline)
            timed_out = true;
        if (timed_out) {
            abandoned_bound = std::max(abandoned_bound, bound());
            return;
        }
        if (depth == g.num_nodes()) {
            if (decided_cut > incumbent.value) {
                incumbent.value = decided_cut;
                incumbent.assignment = side;
            }
            return;
        }
        if (bound() <= incumbent.value) return;

        const int v = order[depth];
        // Try the side that cuts more decided edges first; ties go to side 0.
        const int first = (a1[v] >= a0[v]) ? 0 : 1;
        for (int child = 0; child < 2; ++child) {
            const int s = child == 0 ? first : 1 - first;
            decide(v, s);
            dfs(depth + 1);
            undo(v, s);
            if (timed_out) {
                // The sibling subtree is abandoned; record its valid bound.
                if (child == 0) {
                    decide(v, 1 - s);
                    abandoned_bound = std::max(abandoned_bound, bound());
                    undo(v, 1 - s);
                }
                return;
            }
        }
    }
};

CutSolution greedy_local_search(const Graph& g, const std::vector<int>& order) {
    const int n = g.num_nodes();
    CutSolution sol;
    sol.assignment.assign(n, 0);
    std::vector<char> placed(n, 0);
    for (int v : order) {
        int cut0 = 0, cut1 = 0;
        for (int u : g.neighbors(v)) {
            if (!placed[u]) continue;
            (sol.assignment[u] == 1 ? cut0 : cut1) += 1;
        }
        sol.assignment[v] = (cut1 > cut0) ? 1 : 0;
        placed[v] = 1;
    }
    // Single-flip passes until no move improves the cut.
    bool improved = true;
    while (improved) {
        improved = false;
        for (int v = 0; v < n; ++v) {
            int gain = 0;
            for (int u : g.neighbors(v))
                gain += (sol.assignment[u] == sol.assignment[v]) ? 1 : -1;
            if (gain > 0) {
                sol.assignment[v] ^= 1;
                improved = true;
            }
        }
    }
    sol.value = cut_value(g, sol.assignment);
    return sol;
}

}  // namespace

BnbResult branch_and_bound(const Graph& g, double time_budget_seconds) {
    BnbResult result;
    if (g.num_nodes() == 0) {
        result.optimal = true;
        return result;
    }

    BnbState state(g);
    if (time_budget_seconds >= 0) {
        state.has_deadline = true;
        state.deadline = std::chrono::steady_clock::now() +
                         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(time_budget_seconds));
    }
    state.incumbent = greedy_local_search(g, state.order);

    // Symmetry: the first branched node stays on side 0.
    const int root = state.order[0];
    state.decide(root, 0);
    state.dfs(1);
    state.undo(root, 0);

    result.cut = state.incumbent;
    result.optimal = !state.timed_out;
    result.upper_bound = result.optimal
                             ? state.incumbent.value
                             : std::max(state.incumbent.value, state.abandoned_bound);
    result.nodes_explored = state.visited;
    return result;
}

}  // namespace qx
