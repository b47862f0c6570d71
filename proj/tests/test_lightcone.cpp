#include <doctest.h>

#include <algorithm>
#include <set>

#include "lightcone.hpp"
#include "test_util.hpp"

using namespace qx;

namespace {

// Independent oracle: all-pairs distances by Floyd-Warshall, then the edges
// with an endpoint within distance p-1 of {j, k}.
std::set<Edge> lightcone_edges_oracle(const Graph& g, Edge e, int p) {
    const int n = g.num_nodes();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) dist[v][v] = 0;
    for (const auto& [u, v] : g.edges()) dist[u][v] = dist[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);

    std::set<Edge> expected;
    for (const auto& [u, v] : g.edges()) {
        int du = std::min(dist[u][e.first], dist[u][e.second]);
        int dv = std::min(dist[v][e.first], dist[v][e.second]);
        if (du <= p - 1 || dv <= p - 1) expected.insert({u, v});
    }
    return expected;
}

std::set<Edge> lightcone_edges_in_parent(const Lightcone& lc) {
    std::set<Edge> got;
    for (const auto& [u, v] : lc.subgraph.edges()) {
        int a = lc.parent_nodes[u], b = lc.parent_nodes[v];
        got.insert({std::min(a, b), std::max(a, b)});
    }
    return got;
}

}  // namespace

TEST_CASE("extract matches the distance rule on named graphs") {
    SUBCASE("triangle is its own lightcone") {
        Lightcone lc = extract(testing::complete(3), {0, 1}, 1);
        CHECK(lc.subgraph.num_edges() == 3);
        CHECK(classify(lc) == LightconeClass{2, 2, 1});
    }
    SUBCASE("K4 lightcones are (3,3,2)") {
        Graph k4 = testing::complete(4);
        for (const auto& e : k4.edges())
            CHECK(classify(extract(k4, e, 1)) == LightconeClass{3, 3, 2});
    }
    SUBCASE("6-cycle lightcone is the 4-node path with class (2,2,0)") {
        Lightcone lc = extract(testing::cycle(6), {0, 1}, 1);
        CHECK(lc.subgraph.num_nodes() == 4);
        CHECK(lc.subgraph.num_edges() == 3);
        CHECK(classify(lc) == LightconeClass{2, 2, 0});
        CHECK(lightcone_edges_in_parent(lc) ==
              lightcone_edges_oracle(testing::cycle(6), {0, 1}, 1));
    }
    SUBCASE("Petersen is triangle-free, so every class is (3,3,0)") {
        Graph p = testing::petersen();
        for (const auto& e : p.edges()) {
            const auto& nj = p.neighbors(e.first);
            const auto& nk = p.neighbors(e.second);
            std::vector<int> common;
            std::set_intersection(nj.begin(), nj.end(), nk.begin(), nk.end(),
                                  std::back_inserter(common));
            REQUIRE(common.empty());
            CHECK(classify(extract(p, e, 1)) == LightconeClass{3, 3, 0});
        }
    }
    SUBCASE("absent edge is rejected") {
        CHECK_THROWS_AS(extract(testing::cycle(6), {0, 3}, 1), Error);
    }
}

TEST_CASE("extract equals the brute-force distance oracle on random graphs") {
    for (std::uint64_t s = 0; s < 12; ++s) {
        Graph g = random_bounded(12, 18, 5, Seed{s});
        for (int p = 1; p <= 3; ++p) {
            for (const auto& e : g.edges()) {
                Lightcone lc = extract(g, e, p);
                CHECK(lightcone_edges_in_parent(lc) == lightcone_edges_oracle(g, e, p));
                CHECK(lc.subgraph.has_edge(lc.central_edge.first, lc.central_edge.second));
            }
        }
    }
}

TEST_CASE("classify is restricted to depth 1") {
    Lightcone lc = extract(testing::cycle(8), {0, 1}, 2);
    CHECK_THROWS_AS(classify(lc), Error);
    try {
        classify(lc);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::unsupported_depth);
    }
}

TEST_CASE("realize constructs the canonical class representative") {
    SUBCASE("(1,1,0) is a single edge") {
        Lightcone lc = realize({1, 1, 0});
        CHECK(lc.subgraph.num_nodes() == 2);
        CHECK(lc.subgraph.num_edges() == 1);
    }
    SUBCASE("(3,3,2) has 4 nodes and no edge between shared neighbors") {
        Lightcone lc = realize({3, 3, 2});
        CHECK(lc.subgraph.num_nodes() == 4);
        CHECK(lc.subgraph.num_edges() == 5);
        CHECK_FALSE(lc.subgraph.has_edge(2, 3));
    }
    SUBCASE("classify(realize(c)) == c for all d1, d2 <= 8") {
        for (const auto& c : enumerate_general(8)) {
            Lightcone lc = realize(c);
            CHECK(classify(lc) == c);
            CHECK(lc.subgraph.num_nodes() == c.node_count());
        }
    }
    SUBCASE("invalid class is rejected") {
        CHECK_THROWS_AS(realize({2, 1, 0}), Error);
        CHECK_THROWS_AS(realize({2, 2, 2}), Error);
        CHECK_THROWS_AS(realize({0, 1, 0}), Error);
    }
}

TEST_CASE("class enumeration counts") {
    SUBCASE("regular: 35 classes up to degree 8, 3 of them for d = 3") {
        auto classes = enumerate_regular(8);
        CHECK(classes.size() == 35);
        int d3 = 0;
        for (const auto& c : classes)
            if (c.d1 == 3) ++d3;
        CHECK(d3 == 3);
        CHECK(std::is_sorted(classes.begin(), classes.end()));
    }
    SUBCASE("regular: length is the sum of d over 2..d_max") {
        for (int d_max = 2; d_max <= 10; ++d_max) {
            std::size_t expected = 0;
            for (int d = 2; d <= d_max; ++d) expected += d;
            CHECK(enumerate_regular(d_max).size() == expected);
        }
    }
    SUBCASE("regular: d_max = 2") {
        auto classes = enumerate_regular(2);
        REQUIRE(classes.size() == 2);
        CHECK(classes[0] == LightconeClass{2, 2, 0});
        CHECK(classes[1] == LightconeClass{2, 2, 1});
    }
    SUBCASE("general: d_max = 1 and d_max = 2") {
        auto one = enumerate_general(1);
        REQUIRE(one.size() == 1);
        CHECK(one[0] == LightconeClass{1, 1, 0});
        auto two = enumerate_general(2);
        REQUIRE(two.size() == 4);
        CHECK(two == std::vector<LightconeClass>{
                         {1, 1, 0}, {1, 2, 0}, {2, 2, 0}, {2, 2, 1}});
    }
    SUBCASE("general: exhaustive count oracle") {
        for (int d_max = 1; d_max <= 8; ++d_max) {
            std::size_t expected = 0;
            for (int d1 = 1; d1 <= d_max; ++d1)
                for (int d2 = d1; d2 <= d_max; ++d2)
                    for (int t = 0; t <= d1 - 1; ++t) ++expected;
            CHECK(enumerate_general(d_max).size() == expected);
        }
        // The stated rule yields 56 classes at d_max = 6; dropping the six
        // degree-1 classes would leave 50.
        CHECK(enumerate_general(6).size() == 56);
    }
}

TEST_CASE("class tokens round trip") {
    for (const auto& c : enumerate_general(6))
        CHECK(LightconeClass::from_token(c.token()) == c);
    CHECK_THROWS_AS(LightconeClass::from_token("3-3"), Error);
    CHECK_THROWS_AS(LightconeClass::from_token("3-3-9"), Error);
    CHECK_THROWS_AS(LightconeClass::from_token("junk"), Error);
}

TEST_CASE("histogram tallies classes over all edges") {
    SUBCASE("triangle") {
        ClassHistogram h = histogram(testing::complete(3));
        REQUIRE(h.counts.size() == 1);
        CHECK(h.counts.at({2, 2, 1}) == 3);
        CHECK(h.total == 3);
    }
    SUBCASE("K4") {
        ClassHistogram h = histogram(testing::complete(4));
        REQUIRE(h.counts.size() == 1);
        CHECK(h.counts.at({3, 3, 2}) == 6);
    }
    SUBCASE("6-cycle") {
        ClassHistogram h = histogram(testing::cycle(6));
        CHECK(h.counts.at({2, 2, 0}) == 6);
    }
    SUBCASE("counts sum to |E| and survive relabeling") {
        Graph g = random_bounded(10, 16, 5, Seed{3});
        ClassHistogram h = histogram(g);
        int sum = 0;
        for (const auto& [c, count] : h.counts) sum += count;
        CHECK(sum == g.num_edges());

        // Relabel v -> n-1-v.
        std::vector<Edge> relabeled;
        int n = g.num_nodes();
        for (const auto& [u, v] : g.edges()) {
            int a = n - 1 - u, b = n - 1 - v;
            relabeled.push_back({std::min(a, b), std::max(a, b)});
        }
        ClassHistogram h2 = histogram(Graph(n, std::move(relabeled)));
        CHECK(h.counts == h2.counts);
    }
}
