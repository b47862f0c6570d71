#include "optimize.hpp"

#include <cmath>

#include "parallel.hpp"

namespace qx {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.1415926535897932384626433832795;

void check_cfg(const OptimizerConfig& cfg) {
    if (cfg.steps < 0)
        throw Error(ErrorKind::parameter, "steps must be >= 0");
    if (cfg.restarts < 1)
        throw Error(ErrorKind::parameter, "restarts must be >= 1");
    if (!(cfg.learning_rate > 0))
        throw Error(ErrorKind::parameter, "learning_rate must be positive");
    if (!(cfg.grad_step > 0))
        throw Error(ErrorKind::parameter, "grad_step must be positive");
}

struct RestartRun {
    RestartOutcome outcome;
    std::vector<double> trace;
};

RestartRun run_restart(const Objective& objective, const OptimizerConfig& cfg,
                       int p, Seed restart_seed) {
    auto rng = make_rng(restart_seed);
    std::uniform_real_distribution<double> gamma_init(0.0, kTwoPi);
    std::uniform_real_distribution<double> beta_init(0.0, kPi);

    ParamPoint theta;
    theta.gamma.resize(p);
    theta.beta.resize(p);
    for (int l = 0; l < p; ++l) theta.gamma[l] = gamma_init(rng);
    for (int l = 0; l < p; ++l) theta.beta[l] = beta_init(rng);

    RestartRun run;
    double value = objective(theta);
    run.trace.push_back(value);
    if (!std::isfinite(value)) {
        run.outcome = {theta, value, false};
        return run;
    }
    run.outcome = {theta, value, true};

    std::vector<double> v(2 * p, 0.0);  // squared-gradient accumulator
    for (int step = 0; step < cfg.steps; ++step) {
        std::vector<double> g = gradient(objective, theta, cfg.grad_step);
        bool finite = true;
        for (int i = 0; i < 2 * p; ++i) {
            if (!std::isfinite(g[i])) {
                finite = false;
                break;
            }
            v[i] = cfg.rms_decay * v[i] + (1.0 - cfg.rms_decay) * g[i] * g[i];
            double delta = cfg.learning_rate * g[i] / std::sqrt(v[i] + cfg.rms_epsilon);
            if (i < p)
                theta.gamma[i] += delta;
            else
                theta.beta[i - p] += delta;
        }
        if (!finite) {
            run.outcome.ok = false;
            return run;
        }
        value = objective(theta);
        run.trace.push_back(value);
        if (!std::isfinite(value)) {
            run.outcome.ok = false;
            return run;
        }
        if (value > run.outcome.value) {
            run.outcome.value = value;
            run.outcome.point = theta;
        }
    }
    return run;
}

}  // namespace

std::vector<double> gradient(const Objective& objective, const ParamPoint& theta,
                             double h) {
    if (theta.gamma.size() != theta.beta.size())
        throw Error(ErrorKind::parameter, "gamma and beta must have equal length");
    if (!(h > 0)) throw Error(ErrorKind::parameter, "grad_step must be positive");
    const int p = theta.p();
    std::vector<double> grad(2 * p, 0.0);
    ParamPoint probe = theta;
    auto component = [&](double* slot) {
        const double saved = *slot;
        *slot = saved + h;
        double hi = objective(probe);
        *slot = saved - h;
        double lo = objective(probe);
        *slot = saved;
        if (!std::isfinite(hi) || !std::isfinite(lo))
            throw Error(ErrorKind::numerical, "non-finite objective in gradient");
        return (hi - lo) / (2.0 * h);
    };
    for (int l = 0; l < p; ++l) grad[l] = component(&probe.gamma[l]);
    for (int l = 0; l < p; ++l) grad[p + l] = component(&probe.beta[l]);
    return grad;
}

OptimResult rmsprop_maximize(const Objective& objective, const OptimizerConfig& cfg,
                             int p, int jobs) {
    check_cfg(cfg);
    if (p < 1) throw Error(ErrorKind::parameter, "p must be >= 1");

    std::vector<RestartRun> runs(cfg.restarts);
    parallel_for(cfg.restarts, jobs, [&](int r) {
        runs[r] = run_restart(objective, cfg, p, derive(cfg.seed, r));
    });

    OptimResult result;
    result.all_restarts.reserve(cfg.restarts);
    int best_index = -1;
    for (int r = 0; r < cfg.restarts; ++r) {
        result.all_restarts.push_back(runs[r].outcome);
        if (!runs[r].outcome.ok) continue;
        if (best_index < 0 || runs[r].outcome.value > result.best_value) {
            best_index = r;
            result.best_value = runs[r].outcome.value;
        }
    }
    if (best_index < 0)
        throw Error(ErrorKind::numerical, "every restart hit a non-finite objective");
    result.best = runs[best_index].outcome.point;
    result.trace = std::move(runs[best_index].trace);
    return result;
}

OptimResult optimize_class(const LightconeClass& c, const OptimizerConfig& cfg) {
    if (!c.valid())
        throw Error(ErrorKind::parameter, "invalid lightcone class: " + c.token());
    Objective objective = [c](const ParamPoint& theta) {
        return contribution_fast(c, theta.gamma[0], theta.beta[0]);
    };
    return rmsprop_maximize(objective, cfg, 1);
}

OptimResult optimize_graph(const Graph& g, const OptimizerConfig& cfg,
                           Backend backend) {
    Objective objective = [&g, backend](const ParamPoint& theta) {
        return energy(g, theta, backend).energy;
    };
    return rmsprop_maximize(objective, cfg, 1);
}

}  // namespace qx
