#include <algorithm>
#include <cmath>
#include <complex>

#include "qaoa.hpp"

namespace qx {

namespace {

using c64 = std::complex<double>;

constexpr int kNodeCap = 24;

void check_theta(const ParamPoint& theta) {
    if (theta.gamma.size() != theta.beta.size())
        throw Error(ErrorKind::parameter, "gamma and beta must have equal length");
    if (theta.gamma.empty())
        throw Error(ErrorKind::parameter, "at least one layer required");
    for (double x : theta.gamma)
        if (!std::isfinite(x))
            throw Error(ErrorKind::numerical, "non-finite gamma");
    for (double x : theta.beta)
        if (!std::isfinite(x))
            throw Error(ErrorKind::numerical, "non-finite beta");
}

class DenseState {
public:
    explicit DenseState(int nq) : nq_(nq) {
        amp_.assign(std::size_t(1) << nq_,
                    c64(1.0 / std::sqrt(static_cast<double>(std::size_t(1) << nq_)), 0.0));
    }

    void apply_cost_edge(int u, int v, double gamma) {
        // exp(-i gamma (1 - Z_u Z_v) / 2): phase e^{-i gamma} where bits differ.
        const c64 ph = std::polar(1.0, -gamma);
        const std::size_t bu = std::size_t(1) << u;
        const std::size_t bv = std::size_t(1) << v;
        for (std::size_t k = 0; k < amp_.size(); ++k) {
            if (((k & bu) != 0) != ((k & bv) != 0)) amp_[k] *= ph;
        }
    }

    void apply_mixer_qubit(int q, double beta) {
        // exp(-i beta X) = cos(beta) I - i sin(beta) X, applied in place.
        const double c = std::cos(beta);
        const c64 mis(0.0, -std::sin(beta));
        const std::size_t bq = std::size_t(1) << q;
        for (std::size_t k = 0; k < amp_.size(); ++k) {
            if (k & bq) continue;
            const c64 a0 = amp_[k];
            const c64 a1 = amp_[k | bq];
            amp_[k] = c * a0 + mis * a1;
            amp_[k | bq] = c * a1 + mis * a0;
        }
    }

    double zz(int j, int k) const {
        const std::size_t bj = std::size_t(1) << j;
        const std::size_t bk = std::size_t(1) << k;
        double acc = 0.0;
        for (std::size_t i = 0; i < amp_.size(); ++i) {
            const double p = std::norm(amp_[i]);
            acc += (((i & bj) != 0) != ((i & bk) != 0)) ? -p : p;
        }
        return acc;
    }

private:
    int nq_;
    std::vector<c64> amp_;
};

double evolve_zz(const Graph& g, Edge central, const ParamPoint& theta,
                 const sv::GateRef* shifted, double delta) {
    check_theta(theta);
    if (g.num_nodes() > kNodeCap)
        throw Error(ErrorKind::capacity,
                    "statevector backend capped at " + std::to_string(kNodeCap) +
                        " nodes, got " + std::to_string(g.num_nodes()));
    DenseState state(g.num_nodes());
    const auto& edges = g.edges();
    for (int layer = 1; layer <= theta.p(); ++layer) {
        const double gamma = theta.gamma[layer - 1];
        const double beta = theta.beta[layer - 1];
        for (int ei = 0; ei < g.num_edges(); ++ei) {
            double a = gamma;
            if (shifted && shifted->layer == layer && !shifted->mixer &&
                shifted->index == ei)
                a += delta;
            state.apply_cost_edge(edges[ei].first, edges[ei].second, a);
        }
        for (int q = 0; q < g.num_nodes(); ++q) {
            double b = beta;
            if (shifted && shifted->layer == layer && shifted->mixer &&
                shifted->index == q)
                b += delta;
            state.apply_mixer_qubit(q, b);
        }
    }
    return state.zz(central.first, central.second);
}

}  // namespace

EdgeExpectation edge_expectation_sv(const Lightcone& lc, const ParamPoint& theta) {
    double e = evolve_zz(lc.subgraph, lc.central_edge, theta, nullptr, 0.0);
    return {e, (1.0 - e) / 2.0};
}

namespace sv {

double graph_energy_dense(const Graph& g, const ParamPoint& theta) {
    check_theta(theta);
    if (g.num_nodes() > kNodeCap)
        throw Error(ErrorKind::capacity,
                    "dense evaluation capped at " + std::to_string(kNodeCap) +
                        " nodes");
    DenseState state(g.num_nodes());
    for (int layer = 1; layer <= theta.p(); ++layer) {
        for (const auto& [u, v] : g.edges())
            state.apply_cost_edge(u, v, theta.gamma[layer - 1]);
        for (int q = 0; q < g.num_nodes(); ++q)
            state.apply_mixer_qubit(q, theta.beta[layer - 1]);
    }
    double sum = 0.0;
    for (const auto& [u, v] : g.edges()) sum += state.zz(u, v);
    return g.num_edges() / 2.0 - sum / 2.0;
}

double zz_expectation_shifted(const Graph& g, Edge central, const ParamPoint& theta,
                              const GateRef& gate, double delta) {
    return evolve_zz(g, central, theta, &gate, delta);
}

std::vector<double> zz_gradient_shift(const Graph& g, Edge central,
                                      const ParamPoint& theta) {
    // Per-gate shift rules: a cost gate exp(-i a (1-ZZ)/2) contributes
    // (f(a+pi/2) - f(a-pi/2)) / 2, a mixer gate exp(-i b X) contributes
    // f(b+pi/4) - f(b-pi/4). The layer derivative sums its gates.
    const int p = theta.p();
    std::vector<double> grad(2 * p, 0.0);
    const double half_pi = std::acos(-1.0) / 2.0;
    const double quarter_pi = half_pi / 2.0;
    for (int layer = 1; layer <= p; ++layer) {
        double dg = 0.0;
        for (int ei = 0; ei < g.num_edges(); ++ei) {
            GateRef gate{layer, false, ei};
            dg += 0.5 * (evolve_zz(g, central, theta, &gate, half_pi) -
                         evolve_zz(g, central, theta, &gate, -half_pi));
        }
        double db = 0.0;
        for (int q = 0; q < g.num_nodes(); ++q) {
            GateRef gate{layer, true, q};
            db += evolve_zz(g, central, theta, &gate, quarter_pi) -
                  evolve_zz(g, central, theta, &gate, -quarter_pi);
        }
        grad[layer - 1] = dg;
        grad[p + layer - 1] = db;
    }
    return grad;
}

}  // namespace sv

}  // namespace qx
