#include "tensornet.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "parallel.hpp"

namespace qx::tn {

namespace {

using c64 = std::complex<double>;

constexpr int kWidthCap = 30;

Tensor make_tensor(std::vector<int> idx, std::vector<c64> vals) {
    // Canonicalize to ascending index order, permuting the table to match.
    Tensor t{std::move(idx), std::move(vals)};
    std::vector<int> perm(t.idx.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b) { return t.idx[a] < t.idx[b]; });
    bool sorted = true;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i)) sorted = false;
    if (sorted) return t;

    std::vector<int> new_idx(t.idx.size());
    for (std::size_t i = 0; i < perm.size(); ++i) new_idx[i] = t.idx[perm[i]];
    std::vector<c64> new_vals(t.vals.size());
    for (std::size_t pos = 0; pos < t.vals.size(); ++pos) {
        std::size_t old_pos = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            if (pos & (std::size_t(1) << i)) old_pos |= std::size_t(1) << perm[i];
        new_vals[pos] = t.vals[old_pos];
    }
    return {std::move(new_idx), std::move(new_vals)};
}

// Bitset over index ids, sized for one network.
struct IndexSet {
    std::vector<std::uint64_t> words;

    explicit IndexSet(int bits) : words((bits + 63) / 64, 0) {}
    void set(int i) { words[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void clear(int i) { words[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    void or_with(const IndexSet& o) {
        for (std::size_t w = 0; w < words.size(); ++w) words[w] |= o.words[w];
    }
    int count() const {
        int c = 0;
        for (auto w : words) c += std::popcount(w);
        return c;
    }
    void for_each(const std::function<void(int)>& fn) const {
        for (std::size_t w = 0; w < words.size(); ++w) {
            std::uint64_t bits = words[w];
            while (bits) {
                int b = std::countr_zero(bits);
                fn(static_cast<int>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }
};

// Shared simulation core: runs bucket elimination on index sets only.
// choose(remaining, union_size_of) -> next index; returns realized width.
template <typename Chooser>
int eliminate(const TensorNetwork& tn, Chooser&& choose, std::vector<int>* order_out) {
    const int n_idx = tn.index_count;
    std::vector<IndexSet> sets;
    std::vector<char> alive;
    std::vector<std::vector<int>> idx2sets(n_idx);
    for (const auto& t : tn.tensors) {
        if (t.idx.empty()) continue;
        IndexSet s(n_idx);
        for (int i : t.idx) s.set(i);
        int id = static_cast<int>(sets.size());
        sets.push_back(std::move(s));
        alive.push_back(1);
        for (int i : t.idx) idx2sets[i].push_back(id);
    }

    std::vector<char> remaining(n_idx, 1);
    auto union_of = [&](int i) {
        IndexSet u(n_idx);
        u.set(i);
        for (int sid : idx2sets[i])
            if (alive[sid]) u.or_with(sets[sid]);
        return u;
    };

    int width = 0;
    for (int step = 0; step < n_idx; ++step) {
        int pick = choose(remaining, [&](int i) { return union_of(i).count(); });
        IndexSet u = union_of(pick);
        width = std::max(width, u.count());
        for (int sid : idx2sets[pick]) alive[sid] = 0;
        u.clear(pick);
        remaining[pick] = 0;
        if (u.count() > 0) {
            int id = static_cast<int>(sets.size());
            sets.push_back(u);
            alive.push_back(1);
            sets.back().for_each([&](int i) { idx2sets[i].push_back(id); });
        }
        if (order_out) order_out->push_back(pick);
    }
    return width;
}

}  // namespace

TensorNetwork build(const Lightcone& lc, const ParamPoint& theta) {
    if (theta.gamma.size() != theta.beta.size())
        throw Error(ErrorKind::parameter, "gamma and beta must have equal length");
    const int p = theta.p();
    if (p < 1) throw Error(ErrorKind::parameter, "at least one layer required");

    const Graph& g = lc.subgraph;
    const int n = g.num_nodes();
    const int stride = 2 * p + 1;
    // Wire layout per qubit q: ket indices q*stride + l for l = 0..p (l = p is
    // the shared top index), bra indices q*stride + p + 1 + l for l = 0..p-1.
    auto ket = [&](int q, int l) { return q * stride + l; };
    auto bra = [&](int q, int l) {
        return l == p ? ket(q, p) : q * stride + p + 1 + l;
    };

    TensorNetwork net;
    net.index_count = n * stride;
    const c64 amp(1.0 / std::sqrt(2.0), 0.0);
    for (int q = 0; q < n; ++q) {
        net.tensors.push_back(make_tensor({ket(q, 0)}, {amp, amp}));
        net.tensors.push_back(make_tensor({bra(q, 0)}, {amp, amp}));
    }
    for (int l = 1; l <= p; ++l) {
        const double gamma = theta.gamma[l - 1];
        const double beta = theta.beta[l - 1];
        const c64 ph = std::polar(1.0, -gamma);
        for (const auto& [u, v] : g.edges()) {
            net.tensors.push_back(make_tensor({ket(u, l - 1), ket(v, l - 1)},
                                              {1.0, ph, ph, 1.0}));
            net.tensors.push_back(make_tensor({bra(u, l - 1), bra(v, l - 1)},
                                              {1.0, std::conj(ph), std::conj(ph), 1.0}));
        }
        const c64 diag(std::cos(beta), 0.0);
        const c64 off(0.0, -std::sin(beta));
        for (int q = 0; q < n; ++q) {
            net.tensors.push_back(
                make_tensor({ket(q, l - 1), ket(q, l)}, {diag, off, off, diag}));
            net.tensors.push_back(make_tensor({bra(q, l - 1), bra(q, l)},
                                              {diag, std::conj(off), std::conj(off), diag}));
        }
    }
    auto [j, k] = lc.central_edge;
    net.tensors.push_back(make_tensor({ket(j, p)}, {1.0, -1.0}));
    net.tensors.push_back(make_tensor({ket(k, p)}, {1.0, -1.0}));
    return net;
}

ContractionPlan order_rgreedy(const TensorNetwork& tn, double temperature,
                              int repeats, Seed seed) {
    if (temperature < 0)
        throw Error(ErrorKind::parameter, "temperature must be >= 0");
    if (repeats < 1)
        throw Error(ErrorKind::parameter, "repeats must be >= 1");

    auto rng = make_rng(seed);
    std::uniform_real_distribution<double> unit(std::nextafter(0.0, 1.0), 1.0);

    ContractionPlan best;
    best.width = tn.index_count + 1;
    for (int pass = 0; pass < repeats; ++pass) {
        std::vector<int> order;
        order.reserve(tn.index_count);
        int width = eliminate(
            tn,
            [&](const std::vector<char>& remaining, auto&& union_size) {
                int pick = -1;
                double best_cost = 0.0;
                for (int i = 0; i < static_cast<int>(remaining.size()); ++i) {
                    if (!remaining[i]) continue;
                    double cost = union_size(i) - 1;
                    if (temperature > 0)
                        cost += temperature * -std::log(-std::log(unit(rng)));
                    if (pick < 0 || cost < best_cost) {
                        pick = i;
                        best_cost = cost;
                    }
                }
                return pick;
            },
            &order);
        if (width < best.width) {
            best.width = width;
            best.order = std::move(order);
        }
    }
    if (tn.index_count == 0) best.width = 0;
    return best;
}

int simulate_width(const TensorNetwork& tn, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != tn.index_count)
        throw Error(ErrorKind::parameter, "order must cover every index");
    std::size_t at = 0;
    return eliminate(
        tn,
        [&](const std::vector<char>& remaining, auto&&) {
            int pick = order[at++];
            if (pick < 0 || pick >= static_cast<int>(remaining.size()) ||
                !remaining[pick])
                throw Error(ErrorKind::parameter, "order is not a permutation");
            return pick;
        },
        nullptr);
}

std::complex<double> contract(const TensorNetwork& tn, const ContractionPlan& plan,
                              ContractStats* stats) {
    if (static_cast<int>(plan.order.size()) != tn.index_count)
        throw Error(ErrorKind::parameter, "plan must cover every index");
    if (plan.width > kWidthCap)
        throw Error(ErrorKind::capacity,
                    "contraction width " + std::to_string(plan.width) +
                        " exceeds cap " + std::to_string(kWidthCap));

    ContractStats local;
    std::size_t live = 0;
    auto on_alloc = [&](std::size_t elems) {
        live += elems;
        local.peak_table_elems = std::max(local.peak_table_elems, elems);
        local.peak_live_elems = std::max(local.peak_live_elems, live);
    };
    auto on_free = [&](std::size_t elems) { live -= elems; };

    std::vector<int> rank(tn.index_count, -1);
    for (std::size_t r = 0; r < plan.order.size(); ++r) {
        int i = plan.order[r];
        if (i < 0 || i >= tn.index_count || rank[i] >= 0)
            throw Error(ErrorKind::parameter, "plan order is not a permutation");
        rank[i] = static_cast<int>(r);
    }

    // Bucket r holds tensors whose lowest-ordered index is plan.order[r].
    struct Entry {
        Tensor t;
        bool owned;  // allocated during contraction (counted in `live`)
    };
    std::vector<std::vector<Entry>> buckets(tn.index_count);
    c64 scalar(1.0, 0.0);
    auto file_tensor = [&](Tensor&& t) {
        if (t.idx.empty()) {
            scalar *= t.vals[0];
            on_free(t.vals.size());
            return;
        }
        int r = rank[t.idx[0]];
        for (int i : t.idx) r = std::min(r, rank[i]);
        buckets[r].push_back({std::move(t), true});
    };
    for (const auto& t : tn.tensors) {
        if (t.idx.empty()) {
            scalar *= t.vals[0];
            continue;
        }
        int r = rank[t.idx[0]];
        for (int i : t.idx) r = std::min(r, rank[i]);
        buckets[r].push_back({t, false});
    }

    auto merge = [&](const Tensor& a, const Tensor& b) {
        std::vector<int> idx;
        std::set_union(a.idx.begin(), a.idx.end(), b.idx.begin(), b.idx.end(),
                       std::back_inserter(idx));
        if (static_cast<int>(idx.size()) > kWidthCap)
            throw Error(ErrorKind::capacity, "intermediate exceeds width cap");
        // Bit selectors from the union position into each operand's table.
        std::vector<std::pair<std::size_t, std::size_t>> sel(idx.size(), {0, 0});
        {
            std::size_t ai = 0, bi = 0;
            for (std::size_t u = 0; u < idx.size(); ++u) {
                if (ai < a.idx.size() && a.idx[ai] == idx[u])
                    sel[u].first = std::size_t(1) << ai++;
                if (bi < b.idx.size() && b.idx[bi] == idx[u])
                    sel[u].second = std::size_t(1) << bi++;
            }
        }
        Tensor out;
        out.idx = std::move(idx);
        out.vals.resize(std::size_t(1) << out.idx.size());
        on_alloc(out.vals.size());
        for (std::size_t pos = 0; pos < out.vals.size(); ++pos) {
            std::size_t pa = 0, pb = 0;
            for (std::size_t u = 0; u < out.idx.size(); ++u) {
                if (pos & (std::size_t(1) << u)) {
                    pa |= sel[u].first;
                    pb |= sel[u].second;
                }
            }
            out.vals[pos] = a.vals[pa] * b.vals[pb];
        }
        return out;
    };

    for (int r = 0; r < tn.index_count; ++r) {
        if (buckets[r].empty()) continue;
        const int eliminated = plan.order[r];

        Tensor acc = std::move(buckets[r][0].t);
        bool acc_owned = buckets[r][0].owned;
        for (std::size_t k = 1; k < buckets[r].size(); ++k) {
            Tensor next = merge(acc, buckets[r][k].t);
            if (acc_owned) on_free(acc.vals.size());
            if (buckets[r][k].owned) on_free(buckets[r][k].t.vals.size());
            acc = std::move(next);
            acc_owned = true;
        }
        local.width = std::max(local.width, static_cast<int>(acc.idx.size()));
        buckets[r].clear();

        // Sum out the eliminated index.
        auto it = std::find(acc.idx.begin(), acc.idx.end(), eliminated);
        if (it == acc.idx.end())
            throw Error(ErrorKind::parameter, "bucket tensor missing its index");
        const std::size_t slot = static_cast<std::size_t>(it - acc.idx.begin());
        Tensor summed;
        summed.idx.assign(acc.idx.begin(), acc.idx.end());
        summed.idx.erase(summed.idx.begin() + slot);
        summed.vals.resize(std::size_t(1) << summed.idx.size());
        on_alloc(summed.vals.size());
        const std::size_t low_mask = (std::size_t(1) << slot) - 1;
        for (std::size_t pos = 0; pos < summed.vals.size(); ++pos) {
            std::size_t base = (pos & low_mask) | ((pos & ~low_mask) << 1);
            summed.vals[pos] =
                acc.vals[base] + acc.vals[base | (std::size_t(1) << slot)];
        }
        if (acc_owned) on_free(acc.vals.size());
        file_tensor(std::move(summed));
    }

    if (stats) *stats = local;
    return scalar;
}

EdgeExpectation contract_lightcone(const Lightcone& lc, const ParamPoint& theta,
                                   Seed seed) {
    TensorNetwork net = build(lc, theta);
    ContractionPlan plan = order_rgreedy(net, 0.01, 10, seed);
    c64 value = contract(net, plan);
    return {value.real(), (1.0 - value.real()) / 2.0};
}

std::vector<int> width_profile(const Graph& g, int p, Seed seed, int jobs) {
    if (p < 1) throw Error(ErrorKind::parameter, "depth p must be >= 1");
    // Plan widths do not depend on the angles; any fixed point will do.
    ParamPoint theta;
    theta.gamma.assign(p, 0.7);
    theta.beta.assign(p, 0.4);
    std::vector<int> widths(g.num_edges(), 0);
    parallel_for(g.num_edges(), jobs, [&](int i) {
        Lightcone lc = extract(g, g.edges()[i], p);
        TensorNetwork net = build(lc, theta);
        widths[i] = order_rgreedy(net, 0.01, 10, derive(seed, i)).width;
    });
    return widths;
}

}  // namespace qx::tn

namespace qx {

EdgeExpectation edge_expectation_tn(const Lightcone& lc, const ParamPoint& theta,
                                    Seed seed) {
    return tn::contract_lightcone(lc, theta, seed);
}

}  // namespace qx
