#include <doctest.h>

#include <random>

#include "smallminors/graph.hpp"
#include "smallminors/minor_search.hpp"
#include "smallminors/oracle.hpp"

using namespace smallminors;

namespace {

Graph graph_from_mask(int n, std::uint32_t mask) {
    std::vector<Edge> e;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1u) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph two_k4_sharing_edge() {
    // {0,1,2,3} and {0,1,4,5}
    return Graph::from_edges(6, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {1, 4},
                                                  {1, 5}, {4, 5}});
}

}  // namespace

TEST_SUITE("graph") {
    TEST_CASE("construction merges duplicates and rejects loops") {
        Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 0}, {1, 2}});
        CHECK(g.m() == 2);
        CHECK_THROWS_AS(Graph::from_edges(2, std::vector<Edge>{{1, 1}}), std::invalid_argument);
        CHECK_THROWS_AS(Graph::from_edges(2, std::vector<Edge>{{0, 2}}), std::invalid_argument);
    }

    TEST_CASE("average degree is exact") {
        CHECK(average_degree(complete_graph(5)) == Rational(4));
        CHECK(average_degree(path_graph(3)) == Rational(4, 3));
        CHECK_THROWS(average_degree(Graph(0)));
    }

    TEST_CASE("induced subgraphs keep ids") {
        Graph g = cycle_graph(6);
        std::vector<Vertex> keep{5, 1, 2};
        Graph h = g.induced(keep);
        CHECK(h.n() == 3);
        CHECK(h.id(0) == 1);
        CHECK(h.id(2) == 5);
        CHECK(h.m() == 1);
        CHECK(*h.index_of(5) == 2);
        CHECK_FALSE(h.index_of(3));
    }

    TEST_CASE("bfs and balls") {
        Graph g = path_graph(5);
        BfsTree t = bfs_tree(g, 0);
        CHECK(t.max_depth() == 4);
        CHECK(t.is_ancestor(1, 3));
        CHECK_FALSE(t.is_ancestor(3, 1));
        CHECK(ball(g, 2, 1) == VertexSet{1, 2, 3});
        CHECK(diameter(g) == 4);
    }

    TEST_CASE("fundamental cycles are short") {
        std::mt19937_64 rng(7);
        for (int rep = 0; rep < 1000; ++rep) {
            std::uniform_int_distribution<int> pick(0, 19);
            std::vector<Edge> e;
            for (int i = 1; i < 20; ++i) e.emplace_back(i, std::uniform_int_distribution<int>(0, i - 1)(rng));
            for (int i = 0; i < 6; ++i) {
                int u = pick(rng), v = pick(rng);
                if (u != v) e.emplace_back(u, v);
            }
            Graph g = Graph::from_edges(20, e);
            BfsTree t = bfs_tree(g, 0);
            for (auto [u, v] : g.edges()) {
                if (t.in_tree(u, v)) continue;
                auto c = fundamental_cycle(t, u, v);
                REQUIRE(c.front() == u);
                REQUIRE(c.back() == v);
                REQUIRE(static_cast<int>(c.size()) <= 2 * t.max_depth() + 1);
                for (std::size_t i = 0; i + 1 < c.size(); ++i) REQUIRE(g.adjacent(c[i], c[i + 1]));
            }
        }
    }

    TEST_CASE("validate_model names the broken clause") {
        Graph g = complete_graph(4);
        KtModel m{4, {{0}, {1}, {2}, {3}}};
        CHECK(validate_model(g, m));
        KtModel overlap{4, {{0, 1}, {1}, {2}, {3}}};
        CHECK(validate_model(g, overlap).violation.find("overlap") != std::string::npos);
        KtModel few{4, {{0}, {1}, {2}}};
        CHECK_FALSE(validate_model(g, few));
        Graph p = path_graph(4);
        KtModel split{2, {{0, 2}, {1}}};
        CHECK(validate_model(p, split).violation.find("not connected") != std::string::npos);
        KtModel apart{2, {{0}, {3}}};
        CHECK(validate_model(p, apart).violation.find("not adjacent") != std::string::npos);
    }

    TEST_CASE("cut vertices and cut pairs") {
        CHECK(cut_vertices(path_graph(4)) == VertexSet{1, 2});
        CHECK(cut_vertices(cycle_graph(4)).empty());
        auto pairs = cut_pairs(cycle_graph(4));
        CHECK(pairs == std::vector<Edge>{{0, 2}, {1, 3}});
        auto two = cut_pairs(two_k4_sharing_edge());
        CHECK(two == std::vector<Edge>{{0, 1}});
        CHECK_THROWS(cut_vertices(Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}})));
    }

    TEST_CASE("cut pairs match the definition") {
        std::mt19937_64 rng(3);
        for (int rep = 0; rep < 50; ++rep) {
            Graph g = graph_from_mask(7, static_cast<std::uint32_t>(rng()) & ((1u << 21) - 1));
            if (!is_connected(g)) continue;
            auto pairs = cut_pairs(g);
            for (Vertex a = 0; a < 7; ++a)
                for (Vertex b = a + 1; b < 7; ++b) {
                    std::vector<Vertex> rm{a, b};
                    bool disconnects = !is_connected(g.without(rm));
                    bool listed = std::find(pairs.begin(), pairs.end(), Edge{a, b}) != pairs.end();
                    REQUIRE(disconnects == listed);
                }
        }
    }

    TEST_CASE("separation at a cut") {
        Graph g = two_k4_sharing_edge();
        std::vector<Vertex> cut{0, 1};
        Separation s = separation_at(g, cut);
        CHECK(s.cut == VertexSet{0, 1});
        CHECK(s.side1.size() + s.side2.size() == 8);
    }

    TEST_CASE("k4 minor test agrees with brute force on small graphs") {
        CHECK(has_k4_minor(complete_graph(4)));
        CHECK_FALSE(has_k4_minor(cycle_graph(9)));
        for (int n = 4; n <= 6; ++n) {
            const std::uint32_t limit = 1u << (n * (n - 1) / 2);
            for (std::uint32_t mask = 0; mask < limit; ++mask) {
                Graph g = graph_from_mask(n, mask);
                REQUIRE(has_k4_minor(g) == min_kt_model(g, 4, n).min_size.has_value());
            }
        }
    }

    TEST_CASE("k4 minor test on random 8-vertex graphs") {
        std::mt19937_64 rng(11);
        for (int rep = 0; rep < 3000; ++rep) {
            Graph g = graph_from_mask(8, static_cast<std::uint32_t>(rng()) & ((1u << 28) - 1) &
                                             static_cast<std::uint32_t>(rng()));
            REQUIRE(has_k4_minor(g) == find_kt_model(g, 4).has_value());
        }
    }

    TEST_CASE("densest component") {
        Graph g = Graph::from_edges(7, std::vector<Edge>{{0, 1}, {2, 3}, {2, 4}, {3, 4}, {5, 6}});
        CHECK(densest_component(g) == VertexSet{2, 3, 4});
    }
}
