#pragma once

#include <complex>

#include "qaoa.hpp"

namespace qx::tn {

// Dense tensor over binary indices. `idx` is sorted ascending; bit i of a
// table position holds the value of idx[i].
struct Tensor {
    std::vector<int> idx;
    std::vector<std::complex<double>> vals;  // size 1 << idx.size()
};

struct TensorNetwork {
    std::vector<Tensor> tensors;
    int index_count = 0;  // indices are 0..index_count-1; none left open
};

struct ContractionPlan {
    std::vector<int> order;  // elimination order over all indices
    int width = 0;           // max merged-bucket arity along the order
};

struct ContractStats {
    int width = 0;                     // realized max merged arity
    std::size_t peak_table_elems = 0;  // largest single table allocated
    std::size_t peak_live_elems = 0;   // peak total size of live intermediates
};

// Network for <Z_j Z_k> on the lightcone under the fixed gate convention.
// Diagonal cost gates attach to existing qubit wire indices and introduce
// none of their own; only mixers advance a wire. Per qubit the wire carries
// 2p+1 indices (ket chain 0..p, bra chain 0..p-1, top index shared), so the
// index count is independent of the edge count.
TensorNetwork build(const Lightcone& lc, const ParamPoint& theta);

// `repeats` randomized greedy passes; each pass repeatedly eliminates the
// index minimizing (resulting bucket arity + temperature * Gumbel noise).
// Returns the plan with the smallest width. Deterministic given seed;
// temperature 0 is pure greedy with index-id tie-breaking.
ContractionPlan order_rgreedy(const TensorNetwork& tn, double temperature,
                              int repeats, Seed seed);

// Width that bucket elimination under `order` would realize, without
// touching any value tables.
int simulate_width(const TensorNetwork& tn, const std::vector<int>& order);

// Bucket elimination: merges every tensor containing the eliminated index,
// sums it out, and files the result under its lowest-ordered remaining
// index. Refuses plans with width > 30 before allocating anything.
std::complex<double> contract(const TensorNetwork& tn, const ContractionPlan& plan,
                              ContractStats* stats = nullptr);

// rgreedy plan width of every edge's lightcone network at depth p.
std::vector<int> width_profile(const Graph& g, int p, Seed seed, int jobs = 1);

}  // namespace qx::tn
