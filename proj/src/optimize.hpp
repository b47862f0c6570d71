#pragma once

#include <functional>

#include "qaoa.hpp"

namespace qx {

struct OptimizerConfig {
    int steps = 200;
    int restarts = 20;
    double learning_rate = 0.05;
    double rms_decay = 0.9;
    double rms_epsilon = 1e-8;
    double grad_step = 1e-6;  // central-difference half-width
    Seed seed{};
    // Initial points are drawn uniformly from gamma in [0, 2pi), beta in
    // [0, pi): one full period of the objective under the fixed convention.
};

struct RestartOutcome {
    ParamPoint point;
    double value = 0.0;
    bool ok = true;  // false: non-finite objective encountered, excluded from best
};

struct OptimResult {
    ParamPoint best;
    double best_value = 0.0;
    std::vector<RestartOutcome> all_restarts;
    std::vector<double> trace;  // per-step values of the best restart
};

using Objective = std::function<double(const ParamPoint&)>;

// Central finite differences at half-width h, layout
// [d/dgamma_1..p, d/dbeta_1..p].
std::vector<double> gradient(const Objective& objective, const ParamPoint& theta,
                             double h = 1e-6);

// Multistart RMSProp ascent: for each restart, theta_0 uniform in the init
// box (seed derived per restart index, so serial and parallel runs agree),
// then `steps` updates theta += lr * g / sqrt(v + eps) with v the decayed
// squared-gradient accumulator. Each restart reports the best point seen
// along its trajectory. Restarts that hit a non-finite objective are marked
// failed and excluded from the best.
OptimResult rmsprop_maximize(const Objective& objective, const OptimizerConfig& cfg,
                             int p = 1, int jobs = 1);

// Objective = central-edge contribution of realize(c).
OptimResult optimize_class(const LightconeClass& c, const OptimizerConfig& cfg);

// Objective = whole-graph energy under the given backend.
OptimResult optimize_graph(const Graph& g, const OptimizerConfig& cfg,
                           Backend backend = Backend::fast);

}  // namespace qx
