#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tensornet.hpp"
#include "test_util.hpp"

using namespace qx;
using tn::ContractionPlan;
using tn::ContractStats;
using tn::TensorNetwork;

namespace {

ParamPoint random_theta(std::mt19937_64& rng, int p = 1) {
    std::uniform_real_distribution<double> g(0.0, 2 * M_PI);
    std::uniform_real_distribution<double> b(0.0, M_PI);
    ParamPoint theta;
    for (int l = 0; l < p; ++l) {
        theta.gamma.push_back(g(rng));
        theta.beta.push_back(b(rng));
    }
    return theta;
}

double contract_value(const TensorNetwork& net, Seed seed) {
    return tn::contract(net, tn::order_rgreedy(net, 0.01, 10, seed)).real();
}

// Tensor network whose index-interaction graph is the given tree: one
// 2-index all-ones tensor per tree edge.
TensorNetwork tree_network(const std::vector<Edge>& tree_edges, int n_idx) {
    TensorNetwork net;
    net.index_count = n_idx;
    for (const auto& [a, b] : tree_edges)
        net.tensors.push_back({{a, b}, {1.0, 1.0, 1.0, 1.0}});
    return net;
}

int min_width_over_all_orders(const TensorNetwork& net) {
    std::vector<int> order(net.index_count);
    std::iota(order.begin(), order.end(), 0);
    int best = net.index_count + 1;
    do {
        best = std::min(best, tn::simulate_width(net, order));
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

}  // namespace

TEST_CASE("network value equals the statevector expectation") {
    auto rng = make_rng(Seed{17});
    SUBCASE("single edge, p = 1, fixed and random points") {
        Lightcone lc = realize({1, 1, 0});
        ParamPoint fixed = ParamPoint::single(M_PI / 2, M_PI / 8);
        double sv_val = edge_expectation_sv(lc, fixed).e;
        CHECK(std::abs(contract_value(tn::build(lc, fixed), Seed{1}) - sv_val) < 1e-12);
        for (int k = 0; k < 10; ++k) {
            ParamPoint theta = random_theta(rng);
            CHECK(std::abs(contract_value(tn::build(lc, theta), Seed{k}) -
                           edge_expectation_sv(lc, theta).e) < 1e-12);
        }
    }
    SUBCASE("gamma = 0 contracts to zero") {
        Lightcone lc = realize({3, 3, 1});
        CHECK(std::abs(contract_value(tn::build(lc, ParamPoint::single(0.0, 0.9)),
                                      Seed{2})) < 1e-12);
    }
    SUBCASE("(3,3,0), p = 1") {
        Lightcone lc = realize({3, 3, 0});
        ParamPoint theta = ParamPoint::single(0.8, 0.35);
        CHECK(std::abs(contract_value(tn::build(lc, theta), Seed{3}) -
                       edge_expectation_sv(lc, theta).e) < 1e-12);
    }
    SUBCASE("all classes up to degree 6, 5 random points each") {
        double worst = 0.0;
        for (const auto& c : enumerate_general(6)) {
            Lightcone lc = realize(c);
            for (int k = 0; k < 5; ++k) {
                ParamPoint theta = random_theta(rng);
                worst = std::max(worst,
                                 std::abs(contract_value(tn::build(lc, theta),
                                                         Seed{c.d1 * 100u + k}) -
                                          edge_expectation_sv(lc, theta).e));
            }
        }
        CHECK(worst < 1e-8);
    }
    SUBCASE("p = 2 lightcone against the statevector") {
        Graph g = testing::cycle(8);
        ParamPoint theta = random_theta(rng, 2);
        Lightcone lc = extract(g, {0, 1}, 2);
        CHECK(std::abs(contract_value(tn::build(lc, theta), Seed{4}) -
                       edge_expectation_sv(lc, theta).e) < 1e-10);
    }
}

TEST_CASE("index count is set by qubits and depth, not by diagonal gates") {
    for (const auto& c : enumerate_general(5)) {
        Lightcone lc = realize(c);
        TensorNetwork net = tn::build(lc, ParamPoint::single(0.5, 0.25));
        CHECK(net.index_count == 3 * c.node_count());
        std::vector<char> touched(net.index_count, 0);
        for (const auto& t : net.tensors)
            for (int i : t.idx) touched[i] = 1;
        CHECK(std::count(touched.begin(), touched.end(), 1) == net.index_count);
    }
}

TEST_CASE("contraction value is order-invariant") {
    auto rng = make_rng(Seed{23});
    Lightcone lc = realize({4, 4, 2});
    ParamPoint theta = ParamPoint::single(1.1, 0.6);
    TensorNetwork net = tn::build(lc, theta);
    double reference = edge_expectation_sv(lc, theta).e;
    std::vector<int> order(net.index_count);
    std::iota(order.begin(), order.end(), 0);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(order.begin(), order.end(), rng);
        ContractionPlan plan{order, tn::simulate_width(net, order)};
        CHECK(std::abs(tn::contract(net, plan).real() - reference) < 1e-10);
    }
}

TEST_CASE("rgreedy ordering") {
    SUBCASE("temperature 0 with one repeat is plain greedy and deterministic") {
        TensorNetwork net = tn::build(realize({3, 3, 2}), ParamPoint::single(0.7, 0.3));
        ContractionPlan a = tn::order_rgreedy(net, 0.0, 1, Seed{1});
        ContractionPlan b = tn::order_rgreedy(net, 0.0, 1, Seed{99});
        CHECK(a.order == b.order);  // no noise, so the seed cannot matter
        CHECK(a.width == tn::simulate_width(net, a.order));
    }
    SUBCASE("defaults are reproducible for a fixed seed") {
        TensorNetwork net = tn::build(realize({5, 5, 2}), ParamPoint::single(0.7, 0.3));
        ContractionPlan a = tn::order_rgreedy(net, 0.01, 10, Seed{7});
        ContractionPlan b = tn::order_rgreedy(net, 0.01, 10, Seed{7});
        CHECK(a.order == b.order);
        CHECK(a.width == b.width);
    }
    SUBCASE("tree-shaped networks eliminate at width <= 2") {
        std::vector<std::vector<Edge>> trees = {
            {{0, 1}},                                     // single edge
            {{0, 1}, {1, 2}, {2, 3}},                     // path
            {{0, 1}, {0, 2}, {0, 3}, {0, 4}},             // star
            {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}},     // binary-ish
            {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}, {5, 6}, {5, 7}},
        };
        for (const auto& edges : trees) {
            int n_idx = 0;
            for (const auto& [a, b] : edges) n_idx = std::max({n_idx, a + 1, b + 1});
            TensorNetwork net = tree_network(edges, n_idx);
            ContractionPlan plan = tn::order_rgreedy(net, 0.01, 10, Seed{5});
            CHECK(plan.width <= 2);
            if (n_idx <= 8) CHECK(plan.width == min_width_over_all_orders(net));
        }
    }
}

TEST_CASE("contract tracks width and memory") {
    Lightcone lc = realize({3, 3, 2});
    ParamPoint theta = ParamPoint::single(0.9, 0.4);
    TensorNetwork net = tn::build(lc, theta);
    ContractionPlan plan = tn::order_rgreedy(net, 0.01, 10, Seed{11});
    ContractStats stats;
    tn::contract(net, plan, &stats);
    CHECK(stats.width == plan.width);
    CHECK(stats.peak_table_elems == (std::size_t(1) << stats.width));
    // Peak live memory is the widest tensor, plus at most one merge operand
    // of comparable size, plus pending results parked in later buckets.
    CHECK(stats.peak_live_elems >= stats.peak_table_elems);
    CHECK(stats.peak_live_elems <= 3 * (std::size_t(1) << stats.width));

    SUBCASE("width cap rejects oversized plans before allocating") {
        ContractionPlan oversized = plan;
        oversized.width = 31;
        CHECK_THROWS_AS(tn::contract(net, oversized), Error);
    }
    SUBCASE("empty network contracts to the product of scalars") {
        TensorNetwork scalars;
        scalars.index_count = 0;
        scalars.tensors.push_back({{}, {2.0}});
        scalars.tensors.push_back({{}, {-3.0}});
        ContractionPlan empty{{}, 0};
        CHECK(tn::contract(scalars, empty).real() == doctest::Approx(-6.0));
    }
}

TEST_CASE("width profile of 3-regular graphs stays at or below 5 for p = 1") {
    for (std::uint64_t s : {1ull, 2ull}) {
        Graph g = random_regular(16, 3, Seed{s});
        std::vector<int> widths = tn::width_profile(g, 1, Seed{s});
        REQUIRE(widths.size() == static_cast<std::size_t>(g.num_edges()));
        CHECK(*std::max_element(widths.begin(), widths.end()) <= 5);
    }
    SUBCASE("trees contract at width <= 3 for p = 1") {
        for (int n : {6, 10, 14}) {
            std::vector<int> widths = tn::width_profile(testing::path(n), 1, Seed{3});
            CHECK(*std::max_element(widths.begin(), widths.end()) <= 3);
        }
    }
    SUBCASE("p = 2 widths are finite and recorded") {
        Graph g = random_regular(14, 3, Seed{4});
        std::vector<int> widths = tn::width_profile(g, 2, Seed{4});
        for (int w : widths) {
            CHECK(w >= 1);
            CHECK(w <= 30);
        }
    }
}
