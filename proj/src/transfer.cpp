#include "transfer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "parallel.hpp"

namespace qx {

namespace {

std::uint64_t class_stream(const LightconeClass& c) {
    // Stable per-class stream id, independent of the class list ordering.
    return splitmix64((std::uint64_t(c.d1) << 32) ^ (std::uint64_t(c.d2) << 16) ^
                      std::uint64_t(c.t));
}

OptimizerConfig class_cfg(const OptimizerConfig& cfg, const LightconeClass& c) {
    OptimizerConfig derived = cfg;
    derived.seed = Seed{splitmix64(cfg.seed.value ^ class_stream(c))};
    return derived;
}

struct ClassOptimum {
    std::vector<ParamPoint> optima;  // successful restarts only
    double max_value = 0.0;
};

ClassOptimum optimize_for_transfer(const LightconeClass& c, const OptimizerConfig& cfg) {
    OptimResult res = optimize_class(c, class_cfg(cfg, c));
    ClassOptimum out;
    for (const auto& r : res.all_restarts)
        if (r.ok) out.optima.push_back(r.point);
    out.max_value = res.best_value;
    return out;
}

double mean_over_max(const ClassOptimum& donor, const LightconeClass& acceptor,
                     double acceptor_max) {
    if (!(acceptor_max > 0))
        throw Error(ErrorKind::numerical,
                    "degenerate acceptor: nonpositive maximum contribution");
    double sum = 0.0;
    for (const auto& theta : donor.optima)
        sum += contribution_fast(acceptor, theta.gamma[0], theta.beta[0]);
    return sum / static_cast<double>(donor.optima.size()) / acceptor_max;
}

int find_class(const TransferMap& map, const LightconeClass& c) {
    auto it = std::find(map.classes.begin(), map.classes.end(), c);
    if (it == map.classes.end())
        throw Error(ErrorKind::coverage,
                    "class " + c.token() + " is not covered by the map");
    return static_cast<int>(it - map.classes.begin());
}

GraphSummary summarize(const Graph& g, const std::string& id, const OptimResult& opt,
                       const BnbResult& mc) {
    GraphSummary s;
    s.id = id;
    s.nodes = g.num_nodes();
    s.edges = g.num_edges();
    for (const auto& [cls, count] : histogram(g).counts) s.classes.push_back({cls, count});
    s.theta = opt.best;
    s.energy = opt.best_value;
    s.maxcut = mc.cut.value;
    s.maxcut_optimal = mc.optimal;
    s.ratio = s.maxcut > 0 ? s.energy / s.maxcut : 0.0;
    return s;
}

}  // namespace

TransferCoefficient coefficient(const LightconeClass& donor,
                                const LightconeClass& acceptor,
                                const OptimizerConfig& cfg) {
    ClassOptimum d = optimize_for_transfer(donor, cfg);
    ClassOptimum a = optimize_for_transfer(acceptor, cfg);
    TransferCoefficient out;
    out.donor = donor;
    out.acceptor = acceptor;
    out.donor_optima = d.optima;
    out.acceptor_max = a.max_value;
    out.value = mean_over_max(d, acceptor, a.max_value);
    return out;
}

TransferMap build_map(const std::vector<LightconeClass>& classes,
                      const OptimizerConfig& cfg, int jobs) {
    if (classes.empty())
        throw Error(ErrorKind::parameter, "class list must be nonempty");
    const int n = static_cast<int>(classes.size());
    std::vector<ClassOptimum> optima(n);
    parallel_for(n, jobs, [&](int i) {
        optima[i] = optimize_for_transfer(classes[i], cfg);
    });

    TransferMap map;
    map.classes = classes;
    map.config = cfg;
    map.matrix.assign(n, std::vector<double>(n, 0.0));
    parallel_for(n, jobs, [&](int donor) {
        for (int acceptor = 0; acceptor < n; ++acceptor)
            map.matrix[donor][acceptor] = mean_over_max(
                optima[donor], classes[acceptor], optima[acceptor].max_value);
    });
    return map;
}

ParitySummary parity_summary(const TransferMap& map) {
    for (const auto& c : map.classes)
        if (c.d1 != c.d2)
            throw Error(ErrorKind::parameter,
                        "parity summary is defined for regular-class maps");
    ParitySummary s;
    int n_oo = 0, n_ee = 0, n_oe = 0, n_eo = 0;
    const int n = static_cast<int>(map.classes.size());
    for (int i = 0; i < n; ++i) {
        const bool donor_odd = map.classes[i].d1 % 2 == 1;
        for (int j = 0; j < n; ++j) {
            const bool acceptor_odd = map.classes[j].d1 % 2 == 1;
            const double v = map.matrix[i][j];
            if (donor_odd && acceptor_odd) {
                s.odd_odd += v;
                ++n_oo;
            } else if (!donor_odd && !acceptor_odd) {
                s.even_even += v;
                ++n_ee;
            } else if (donor_odd) {
                s.odd_even += v;
                ++n_oe;
            } else {
                s.even_odd += v;
                ++n_eo;
            }
        }
    }
    if (n_oo) s.odd_odd /= n_oo;
    if (n_ee) s.even_even /= n_ee;
    if (n_oe) s.odd_even /= n_oe;
    if (n_eo) s.even_odd /= n_eo;
    return s;
}

SufficiencyResult check_sufficient(const Graph& donor, const Graph& acceptor,
                                   const TransferMap& map, double threshold) {
    SufficiencyResult out;
    if (acceptor.num_edges() == 0) {
        // Nothing to transfer to: vacuously sufficient.
        out.ok = true;
        return out;
    }
    std::vector<int> donor_classes, acceptor_classes;
    for (const auto& [c, count] : histogram(donor).counts)
        donor_classes.push_back(find_class(map, c));
    for (const auto& [c, count] : histogram(acceptor).counts)
        acceptor_classes.push_back(find_class(map, c));

    // Track the worst pair over all three conditions; it is the witness.
    double worst = std::numeric_limits<double>::infinity();
    std::optional<TransferWitness> worst_witness;
    auto scan = [&](const std::vector<int>& from, const std::vector<int>& to,
                    const char* context) {
        for (int i : from)
            for (int j : to)
                if (map.matrix[i][j] < worst) {
                    worst = map.matrix[i][j];
                    worst_witness = TransferWitness{map.classes[i], map.classes[j],
                                                    worst, context};
                }
    };
    scan(donor_classes, donor_classes, "donor-internal");
    scan(acceptor_classes, acceptor_classes, "acceptor-internal");
    scan(donor_classes, acceptor_classes, "cross");
    out.ok = worst >= threshold;
    if (!out.ok) out.witness = std::move(worst_witness);
    return out;
}

ExperimentReport run_experiment(const Graph& donor, const Graph& acceptor,
                                const OptimizerConfig& cfg,
                                double maxcut_budget_seconds,
                                const std::string& donor_id,
                                const std::string& acceptor_id) {
    OptimizerConfig donor_cfg = cfg;
    donor_cfg.seed = derive(cfg.seed, 1);
    OptimizerConfig acceptor_cfg = cfg;
    acceptor_cfg.seed = derive(cfg.seed, 2);

    OptimResult donor_opt = optimize_graph(donor, donor_cfg);
    OptimResult acceptor_opt = optimize_graph(acceptor, acceptor_cfg);
    BnbResult donor_mc = branch_and_bound(donor, maxcut_budget_seconds);
    BnbResult acceptor_mc = branch_and_bound(acceptor, maxcut_budget_seconds);

    ExperimentReport rep;
    rep.donor = summarize(donor, donor_id, donor_opt, donor_mc);
    rep.acceptor = summarize(acceptor, acceptor_id, acceptor_opt, acceptor_mc);
    rep.transferred_energy = energy(acceptor, donor_opt.best).energy;
    rep.ratios_are_lower_bounds = !acceptor_mc.optimal;
    if (acceptor_mc.cut.value > 0) {
        rep.transferred_ratio = rep.transferred_energy / acceptor_mc.cut.value;
        if (rep.acceptor.ratio > 0)
            rep.ratio_delta_percent = 100.0 *
                                      (rep.transferred_ratio - rep.acceptor.ratio) /
                                      rep.acceptor.ratio;
    }
    return rep;
}

DonorSearchResult find_donor(const Graph& acceptor, const std::vector<Graph>& pool,
                             const TransferMap& map, double threshold) {
    if (pool.empty())
        throw Error(ErrorKind::parameter, "candidate pool must be nonempty");

    std::vector<int> order(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (pool[a].num_nodes() != pool[b].num_nodes())
            return pool[a].num_nodes() < pool[b].num_nodes();
        return pool[a].num_edges() < pool[b].num_edges();
    });

    DonorSearchResult out;
    for (int i : order) {
        SufficiencyResult check = check_sufficient(pool[i], acceptor, map, threshold);
        if (check.ok) {
            out.found = true;
            out.index = i;
            return out;
        }
        if (out.near_miss_index < 0 || check.witness->value > out.near_miss_value) {
            out.near_miss_index = i;
            out.near_miss_value = check.witness->value;
            out.witness = check.witness;
        }
    }
    return out;
}

}  // namespace qx
