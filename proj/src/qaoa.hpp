#pragma once

#include <vector>

#include "lightcone.hpp"

namespace qx {

// One (gamma, beta) pair per layer, angles in radians. No range restriction:
// the objective is 2*pi-periodic in gamma and pi-periodic in beta under the
// gate convention fixed below.
struct ParamPoint {
    std::vector<double> gamma;
    std::vector<double> beta;

    int p() const { return static_cast<int>(gamma.size()); }
    static ParamPoint single(double g, double b) { return {{g}, {b}}; }

    bool operator==(const ParamPoint&) const = default;
};

struct EdgeExpectation {
    double e = 0.0;             // <Z_j Z_k>, in [-1, 1]
    double contribution = 0.5;  // (1 - e) / 2, in [0, 1]
};

struct EnergyReport {
    double energy = 0.0;                     // |E|/2 - (1/2) sum e_jk
    std::vector<EdgeExpectation> edge_terms; // aligned with Graph::edges()
    int m = 0;
};

enum class Backend { fast, statevector, tensornet };

// Gate convention, fixed throughout: U_C(gamma) = exp(-i gamma C) with
// C = sum over edges of (1 - Z_j Z_k) / 2, U_B(beta) = exp(-i beta B) with
// B = sum of single-qubit X. Initial state is the uniform superposition.
// Alternative ZZ-only phase conventions rescale gamma by 2 and would shift
// every reported angle.

// Dense statevector evaluation of <Z_j Z_k> on the lightcone subgraph.
// Capacity cap: 24 nodes.
EdgeExpectation edge_expectation_sv(const Lightcone& lc, const ParamPoint& theta);

// p=1 closed form in (d1, d2, t); matches the statevector within 1e-10.
EdgeExpectation edge_expectation_fast(const LightconeClass& c, const ParamPoint& theta);
double contribution_fast(const LightconeClass& c, double gamma, double beta);

// Tensor-network evaluation (declared here, implemented in tensornet.cpp).
EdgeExpectation edge_expectation_tn(const Lightcone& lc, const ParamPoint& theta,
                                    Seed seed);

// Whole-graph energy by lightcone decomposition; never materializes a 2^N
// state for the whole graph. For Backend::fast, p must be 1 and equal
// classes share one evaluation.
EnergyReport energy(const Graph& g, const ParamPoint& theta,
                    Backend backend = Backend::fast, int jobs = 1);

struct LandscapeGrid {
    std::vector<double> gammas;
    std::vector<double> betas;
    std::vector<std::vector<double>> values;  // values[gi][bi] = contribution
};

// Central-edge contribution of class c over a (gamma, beta) grid.
LandscapeGrid landscape(const LightconeClass& c, std::vector<double> gammas,
                        std::vector<double> betas);

// n points covering [lo, hi): lo + i * (hi - lo) / n.
std::vector<double> grid_points(double lo, double hi, int n);

namespace sv {

// Test-grade oracle: evolves the full 2^n state of g and sums all edge
// expectations directly. Same 24-node cap as the lightcone path.
double graph_energy_dense(const Graph& g, const ParamPoint& theta);

// <Z_j Z_k> with a single gate's angle shifted by delta; used by the
// parameter-shift gradient. Layers are 1-based in GateRef.
struct GateRef {
    int layer = 1;
    bool mixer = false;  // false: cost gate (index = edge), true: mixer (index = qubit)
    int index = 0;
};
double zz_expectation_shifted(const Graph& g, Edge central, const ParamPoint& theta,
                              const GateRef& gate, double delta);

// Exact gradient of <Z_j Z_k> via per-gate parameter shifts:
// layout [d/dgamma_1..p, d/dbeta_1..p].
std::vector<double> zz_gradient_shift(const Graph& g, Edge central,
                                      const ParamPoint& theta);

}  // namespace sv

}  // namespace qx
