#include <doctest.h>

#include <cmath>

#include "optimize.hpp"
#include "test_util.hpp"

using namespace qx;

TEST_CASE("finite-difference gradients") {
    SUBCASE("constant objective has zero gradient") {
        Objective constant = [](const ParamPoint&) { return 3.5; };
        auto g = gradient(constant, ParamPoint::single(0.7, 0.2));
        CHECK(g[0] == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(g[1] == doctest::Approx(0.0).epsilon(1e-9));
    }
    SUBCASE("single-edge contribution at gamma = 0 is flat along beta") {
        Objective edge = [](const ParamPoint& t) {
            return contribution_fast({1, 1, 0}, t.gamma[0], t.beta[0]);
        };
        auto g = gradient(edge, ParamPoint::single(0.0, 0.37));
        CHECK(std::abs(g[1]) < 1e-9);
    }
    SUBCASE("parameter-shift gradient agrees with finite differences") {
        Lightcone lc = realize({1, 1, 0});
        Objective edge = [&](const ParamPoint& t) {
            return edge_expectation_sv(lc, t).e;
        };
        ParamPoint at = ParamPoint::single(M_PI / 2, M_PI / 8);
        auto fd = gradient(edge, at, 1e-6);
        auto shift = sv::zz_gradient_shift(lc.subgraph, lc.central_edge, at);
        for (int i = 0; i < 2; ++i) {
            double scale = std::max(1.0, std::abs(fd[i]));
            CHECK(std::abs(shift[i] - fd[i]) / scale < 1e-5);
        }

        // And off the special point, for a class with triangles.
        Lightcone lc2 = realize({3, 3, 1});
        Objective edge2 = [&](const ParamPoint& t) {
            return edge_expectation_sv(lc2, t).e;
        };
        ParamPoint at2 = ParamPoint::single(0.83, 0.41);
        auto fd2 = gradient(edge2, at2, 1e-6);
        auto shift2 = sv::zz_gradient_shift(lc2.subgraph, lc2.central_edge, at2);
        for (int i = 0; i < 2; ++i) {
            double scale = std::max(1.0, std::abs(fd2[i]));
            CHECK(std::abs(shift2[i] - fd2[i]) / scale < 1e-5);
        }
    }
}

TEST_CASE("rmsprop_maximize") {
    OptimizerConfig cfg;
    cfg.seed = Seed{42};

    SUBCASE("concave quadratic converges to its maximum") {
        Objective quad = [](const ParamPoint& t) {
            double dg = t.gamma[0] - 1.0;
            double db = t.beta[0] - 0.5;
            return -(dg * dg) - (db * db);
        };
        OptimResult res = rmsprop_maximize(quad, cfg);
        CHECK(res.best.gamma[0] == doctest::Approx(1.0).epsilon(1e-3));
        CHECK(res.best.beta[0] == doctest::Approx(0.5).epsilon(1e-3));
        CHECK(res.best_value == doctest::Approx(0.0).epsilon(1e-5));
    }

    SUBCASE("steps = 0 returns the best initial point") {
        Objective quad = [](const ParamPoint& t) { return -t.gamma[0]; };
        OptimizerConfig frozen = cfg;
        frozen.steps = 0;
        OptimResult res = rmsprop_maximize(quad, frozen);
        CHECK(res.all_restarts.size() == 20);
        double best = -1e9;
        for (const auto& r : res.all_restarts) {
            CHECK(r.value == -r.point.gamma[0]);
            best = std::max(best, r.value);
        }
        CHECK(res.best_value == best);
        CHECK(res.trace.size() == 1);
    }

    SUBCASE("determinism and multistart dominance") {
        Objective obj = [](const ParamPoint& t) {
            return contribution_fast({3, 3, 0}, t.gamma[0], t.beta[0]);
        };
        OptimResult a = rmsprop_maximize(obj, cfg);
        OptimResult b = rmsprop_maximize(obj, cfg);
        CHECK(a.best_value == b.best_value);
        CHECK(a.best == b.best);
        REQUIRE(a.all_restarts.size() == b.all_restarts.size());
        for (std::size_t i = 0; i < a.all_restarts.size(); ++i)
            CHECK(a.all_restarts[i].value == b.all_restarts[i].value);

        OptimizerConfig single = cfg;
        single.restarts = 1;
        OptimResult one = rmsprop_maximize(obj, single);
        CHECK(a.best_value >= one.best_value);
        CHECK(one.all_restarts[0].value == a.all_restarts[0].value);

        // Parallel restarts see the same derived seeds.
        OptimResult parallel = rmsprop_maximize(obj, cfg, 1, 2);
        CHECK(parallel.best_value == a.best_value);
        CHECK(parallel.best == a.best);
    }

    SUBCASE("ascent sanity: final best never falls below the initial value") {
        Objective obj = [](const ParamPoint& t) {
            return contribution_fast({4, 4, 1}, t.gamma[0], t.beta[0]);
        };
        OptimResult res = rmsprop_maximize(obj, cfg);
        CHECK(res.best_value >= res.trace.front());
    }

    SUBCASE("non-finite regions mark restarts failed instead of poisoning best") {
        Objective partial = [](const ParamPoint& t) {
            if (t.gamma[0] > M_PI) return std::nan("");
            return -(t.gamma[0] - 1.0) * (t.gamma[0] - 1.0);
        };
        OptimResult res = rmsprop_maximize(partial, cfg);
        bool any_failed = false;
        for (const auto& r : res.all_restarts) any_failed |= !r.ok;
        CHECK(any_failed);  // half the init box starts above pi
        CHECK(std::isfinite(res.best_value));
        CHECK(res.best_value <= 0.0);
    }

    SUBCASE("invalid configs are rejected") {
        OptimizerConfig bad = cfg;
        bad.restarts = 0;
        Objective obj = [](const ParamPoint&) { return 0.0; };
        CHECK_THROWS_AS(rmsprop_maximize(obj, bad), Error);
        bad = cfg;
        bad.learning_rate = 0.0;
        CHECK_THROWS_AS(rmsprop_maximize(obj, bad), Error);
    }
}

TEST_CASE("class and graph objectives") {
    OptimizerConfig cfg;
    cfg.seed = Seed{7};

    SUBCASE("the single-edge class reaches 1.0") {
        OptimResult res = optimize_class({1, 1, 0}, cfg);
        CHECK(res.best_value == doctest::Approx(1.0).epsilon(1e-4));
    }

    SUBCASE("optimizing a single-edge graph equals optimizing its class") {
        OptimResult cls = optimize_class({1, 1, 0}, cfg);
        OptimResult graph = optimize_graph(testing::single_edge(), cfg);
        CHECK(graph.best_value == doctest::Approx(cls.best_value).epsilon(1e-12));
    }

    SUBCASE("(3,3,0) optimum matches the dense-grid argmax within a grid step") {
        OptimResult res = optimize_class({3, 3, 0}, cfg);
        double best_grid = 0.0;
        for (int gi = 0; gi < 101; ++gi)
            for (int bi = 0; bi < 101; ++bi)
                best_grid = std::max(best_grid,
                                     contribution_fast({3, 3, 0}, 2 * M_PI * gi / 101,
                                                       M_PI * bi / 101));
        CHECK(res.best_value >= best_grid - 1e-6);
        CHECK(res.best_value <= best_grid + 0.01);  // one grid step of slack
    }

    SUBCASE("fast and statevector graph objectives agree") {
        Graph g = random_regular(8, 3, Seed{3});
        OptimizerConfig quick = cfg;
        quick.restarts = 4;
        quick.steps = 60;
        OptimResult fast = optimize_graph(g, quick, Backend::fast);
        OptimResult dense = optimize_graph(g, quick, Backend::statevector);
        CHECK(fast.best_value == doctest::Approx(dense.best_value).epsilon(1e-8));
    }
}
