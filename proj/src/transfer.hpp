#pragma once

#include <optional>
#include <string>

#include "maxcut.hpp"
#include "optimize.hpp"

namespace qx {

// Directional transferability of optimized parameters between two lightcone
// classes: mean acceptor contribution over the donor's multistart optima,
// divided by the acceptor's own multistart maximum. Can dip below 0 when a
// donor optimum lands worse than random on the acceptor.
struct TransferCoefficient {
    LightconeClass donor;
    LightconeClass acceptor;
    double value = 0.0;
    std::vector<ParamPoint> donor_optima;  // one per successful restart
    double acceptor_max = 0.0;
};

struct TransferMap {
    std::vector<LightconeClass> classes;
    std::vector<std::vector<double>> matrix;  // matrix[donor][acceptor]
    OptimizerConfig config;
};

struct ParitySummary {
    double odd_odd = 0.0;
    double even_even = 0.0;
    double odd_even = 0.0;
    double even_odd = 0.0;
};

struct TransferWitness {
    LightconeClass donor;
    LightconeClass acceptor;
    double value = 0.0;
    std::string context;  // "donor-internal", "acceptor-internal", "cross"
};

struct SufficiencyResult {
    bool ok = false;
    std::optional<TransferWitness> witness;  // failing pair when !ok
};

struct GraphSummary {
    std::string id;
    int nodes = 0;
    int edges = 0;
    std::vector<std::pair<LightconeClass, int>> classes;  // histogram
    ParamPoint theta;
    double energy = 0.0;
    int maxcut = 0;
    bool maxcut_optimal = false;
    double ratio = 0.0;
};

struct ExperimentReport {
    GraphSummary donor;
    GraphSummary acceptor;
    double transferred_energy = 0.0;
    double transferred_ratio = 0.0;
    double ratio_delta_percent = 0.0;  // 100 * (transferred - optimized) / optimized
    bool ratios_are_lower_bounds = false;  // acceptor maxcut not certified optimal
};

struct DonorSearchResult {
    bool found = false;
    int index = -1;                 // into the candidate pool
    int near_miss_index = -1;       // best failing candidate
    double near_miss_value = 0.0;   // its worst required coefficient
    std::optional<TransferWitness> witness;
};

// Donor class optimized with cfg (seed derived from the class token, so a
// map cell and a standalone coefficient agree); acceptor contribution
// evaluated at each restart optimum.
TransferCoefficient coefficient(const LightconeClass& donor,
                                const LightconeClass& acceptor,
                                const OptimizerConfig& cfg);

// Full directional map. Each class is optimized once and reused across its
// donor row and as the acceptor maximum of its column.
TransferMap build_map(const std::vector<LightconeClass>& classes,
                      const OptimizerConfig& cfg, int jobs = 1);

// Block means over degree parity; defined for maps over regular classes.
ParitySummary parity_summary(const TransferMap& map);

// The three sufficient conditions: every donor-internal, acceptor-internal,
// and donor-to-acceptor class pair must reach the threshold.
SufficiencyResult check_sufficient(const Graph& donor, const Graph& acceptor,
                                   const TransferMap& map, double threshold);

// Optimize the donor, evaluate its best parameters on the acceptor, compare
// with direct acceptor optimization, and report approximation ratios against
// the exact MaxCut optimum.
ExperimentReport run_experiment(const Graph& donor, const Graph& acceptor,
                                const OptimizerConfig& cfg,
                                double maxcut_budget_seconds = 600.0,
                                const std::string& donor_id = "donor",
                                const std::string& acceptor_id = "acceptor");

// Smallest pool candidate passing check_sufficient; ties broken by fewest
// edges, then lowest pool index.
DonorSearchResult find_donor(const Graph& acceptor, const std::vector<Graph>& pool,
                             const TransferMap& map, double threshold);

}  // namespace qx
