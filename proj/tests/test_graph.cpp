#include <doctest.h>

#include <numeric>
#include <set>

#include "test_util.hpp"

using namespace qx;

namespace {

bool is_regular(const Graph& g, int d) {
    for (int v = 0; v < g.num_nodes(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

int degree_sum(const Graph& g) {
    int sum = 0;
    for (int v = 0; v < g.num_nodes(); ++v) sum += g.degree(v);
    return sum;
}

}  // namespace

TEST_CASE("random_regular produces d-regular simple graphs") {
    Graph g = random_regular(6, 3, Seed{1});
    CHECK(g.num_edges() == 9);
    CHECK(is_regular(g, 3));

    SUBCASE("K4 is the unique 3-regular graph on 4 nodes") {
        for (std::uint64_t s : {0ull, 7ull, 123ull}) {
            Graph k4 = random_regular(4, 3, Seed{s});
            CHECK(k4 == testing::complete(4));
        }
    }

    SUBCASE("infeasible parameters are rejected") {
        CHECK_THROWS_AS(random_regular(5, 3, Seed{0}), Error);  // n*d odd
        CHECK_THROWS_AS(random_regular(4, 4, Seed{0}), Error);  // d >= n
        try {
            random_regular(5, 3, Seed{0});
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::parameter);
        }
    }
}

TEST_CASE("random_regular regularity sweep") {
    // 100 seeded draws spread over (n, d) in {6..32} x {3..8}.
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 100; ++seed) {
        int n = 6 + static_cast<int>(seed % 27);
        int d = 3 + static_cast<int>(seed % 6);
        if (d >= n || (n * d) % 2 != 0) continue;
        Graph g = random_regular(n, d, Seed{seed});
        CHECK(is_regular(g, d));
        CHECK(degree_sum(g) == 2 * g.num_edges());
        ++checked;
    }
}

TEST_CASE("generators are deterministic in the seed") {
    CHECK(random_regular(12, 3, Seed{42}) == random_regular(12, 3, Seed{42}));
    CHECK(random_bounded(10, 14, 4, Seed{9}) == random_bounded(10, 14, 4, Seed{9}));
    CHECK(random_with_degrees({3, 3, 5, 5, 3, 3}, Seed{5}) ==
          random_with_degrees({3, 3, 5, 5, 3, 3}, Seed{5}));
}

TEST_CASE("random_bounded respects the edge count and degree cap") {
    Graph g = random_bounded(6, 10, 5, Seed{7});
    CHECK(g.num_nodes() == 6);
    CHECK(g.num_edges() == 10);
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) <= 5);

    SUBCASE("forced triangle") {
        for (std::uint64_t s : {0ull, 3ull, 99ull})
            CHECK(random_bounded(3, 3, 2, Seed{s}) == testing::complete(3));
    }

    SUBCASE("infeasible edge count") {
        CHECK_THROWS_AS(random_bounded(4, 7, 6, Seed{0}), Error);   // > n(n-1)/2
        CHECK_THROWS_AS(random_bounded(6, 10, 3, Seed{0}), Error);  // > n*dmax/2
    }
}

TEST_CASE("random_with_degrees hits the requested sequence") {
    std::vector<int> degrees{5, 3, 3, 3, 3, 3};
    Graph g = random_with_degrees(degrees, Seed{11});
    for (std::size_t v = 0; v < degrees.size(); ++v)
        CHECK(g.degree(static_cast<int>(v)) == degrees[v]);
    CHECK_THROWS_AS(random_with_degrees({3, 3, 3}, Seed{0}), Error);  // odd sum
}

TEST_CASE("edge-list round trips and parse failures") {
    Graph p3 = read_edge_list("3\n0 1\n1 2\n");
    CHECK(p3 == testing::path(3));

    CHECK(write_edge_list(testing::complete(3)) == "3\n0 1\n0 2\n1 2\n");

    SUBCASE("round trip over random graphs") {
        for (std::uint64_t s = 0; s < 8; ++s) {
            Graph g = random_bounded(9, 12, 5, Seed{s});
            CHECK(read_edge_list(write_edge_list(g)) == g);
        }
    }

    SUBCASE("errors carry line numbers") {
        auto message_of = [](const std::string& text) {
            try {
                read_edge_list(text);
            } catch (const Error& e) {
                CHECK(e.kind() == ErrorKind::parse);
                return std::string(e.what());
            }
            return std::string();
        };
        CHECK(message_of("2\n0 0\n").find("line 2") != std::string::npos);
        CHECK(message_of("3\n0 1\n0 1\n").find("line 3") != std::string::npos);
        CHECK(message_of("3\n0 x\n").find("line 2") != std::string::npos);
        CHECK(message_of("3\n0 1 junk\n").find("line 2") != std::string::npos);
        CHECK(message_of("2\n0 5\n").find("line 2") != std::string::npos);
        CHECK(message_of("").find("line 1") != std::string::npos);
    }

    SUBCASE("comment and blank lines are skipped") {
        Graph g = read_edge_list("# a comment\n\n3\n0 1\n# another\n1 2\n");
        CHECK(g == testing::path(3));
    }
}

TEST_CASE("graph construction rejects invalid edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);
}

TEST_CASE("isolated nodes are allowed") {
    Graph g(4, {{0, 1}});
    CHECK(g.degree(2) == 0);
    CHECK(g.degree(3) == 0);
    CHECK(g.num_edges() == 1);
}
