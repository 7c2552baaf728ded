#include <doctest.h>

#include <cmath>
#include <random>

#include "smallminors/bounds.hpp"
#include "smallminors/dense_minors.hpp"
#include "smallminors/generators.hpp"
#include "smallminors/minor_search.hpp"
#include "smallminors/oracle.hpp"

using namespace smallminors;

namespace {

Graph disjoint_union(const Graph &a, int copies) {
    std::vector<Edge> e;
    for (int c = 0; c < copies; ++c)
        for (auto [u, v] : a.edges()) e.emplace_back(u + c * a.n(), v + c * a.n());
    return Graph::from_edges(a.n() * copies, e);
}

bool all_branches_at_least_two(const KtModel &m) {
    for (const auto &b : m.branch_sets)
        if (b.size() < 2) return false;
    return true;
}

}  // namespace

TEST_SUITE("bounds") {
    TEST_CASE("coefficients") {
        CHECK(p_coefficient(Rational(8), Rational(4)) == doctest::Approx(4.0));
        CHECK(girth_coefficient(Rational(2)) == doctest::Approx(2 * 4.0 + 1));
        CHECK(h_k4(Rational(1)) > 0);
        CHECK(h_kt(2, Rational(1), KtVariant::strong) == doctest::Approx(2.0));
        for (int t = 2; t < 7; ++t) CHECK(h_kt(t, Rational(1), KtVariant::strong) < h_kt(t + 1, Rational(1), KtVariant::strong));
        CHECK(kt_density_threshold(4, Rational(1), KtVariant::strong) == Rational(9));
        CHECK(kt_density_threshold(4, Rational(1), KtVariant::weak) == Rational(17));
        CHECK_THROWS(BoundProfile(Rational(2), Rational(3)));
        CHECK(within_log_bound(8.0, 1.0, 256.0));
        CHECK_FALSE(within_log_bound(8.0001, 1.0, 256.0));
    }
}

TEST_SUITE("dense_minors") {
    TEST_CASE("dense subgraph of a clique is the clique") {
        auto r = dense_low_diameter_subgraph(complete_graph(10), Rational(9), Rational(5));
        CHECK(r.vertices.size() == 10);
        CHECK(r.diameter == 1);
    }

    TEST_CASE("dense subgraph ignores a pendant path") {
        std::vector<Edge> e = complete_graph(5).edges();
        for (int i = 4; i < 24; ++i) e.emplace_back(i, i + 1);
        Graph g = Graph::from_edges(25, e);
        Rational d(12, 5), dp(11, 5);
        REQUIRE(average_degree(g) >= d);
        auto r = dense_low_diameter_subgraph(g, d, dp);
        Graph h = g.induced(g.to_local(r.vertices));
        CHECK(average_degree(h) >= dp);
        for (Vertex v = 0; v < 5; ++v) CHECK(std::binary_search(r.vertices.begin(), r.vertices.end(), v));
        CHECK(diameter(h) <= p_coefficient(d, dp) * std::log2(25.0));
        CHECK_THROWS_AS(dense_low_diameter_subgraph(cycle_graph(100), Rational(2), Rational(2)), std::invalid_argument);
    }

    TEST_CASE("dense subgraph guarantees on random graphs") {
        std::mt19937_64 rng(5);
        for (int rep = 0; rep < 1000; ++rep) {
            int n = std::uniform_int_distribution<int>(20, 80)(rng);
            Graph g = random_gnm(n, 3 * n, rng());
            Rational d = average_degree(g), dp = d / Rational(2) + Rational(1);
            if (!(dp >= Rational(2)) || !(d > dp)) continue;
            auto r = dense_low_diameter_subgraph(g, d, dp);
            Graph h = g.induced(g.to_local(r.vertices));
            REQUIRE(average_degree(h) >= dp);
            REQUIRE(is_connected(h));
            REQUIRE(diameter(h) <= p_coefficient(d, dp) * std::log2(n) + 1e-9);
        }
    }

    TEST_CASE("short cycles") {
        auto c = short_cycle(complete_graph(4), Rational(1));
        CHECK(c.size() == 3);
        std::vector<Edge> e = cycle_graph(50).edges();
        e.emplace_back(0, 25);
        Graph g = Graph::from_edges(50, e);
        Rational eps = average_degree(g) - Rational(2);
        auto d = short_cycle(g, eps);
        CHECK(d.size() >= static_cast<std::size_t>(*girth_exact(g)));
        CHECK(d.size() <= 2 * p_coefficient(Rational(2) + eps, Rational(2)) * std::log2(50.0) + 1);
        CHECK_THROWS_AS(short_cycle(path_graph(10), Rational(1)), PreconditionError);
    }

    TEST_CASE("certificate extraction") {
        std::vector<Vertex> all{0, 1, 2, 3};
        auto m = extract_model_from_certificate(complete_graph(4), all, 4);
        CHECK(m.total_size() == 4);
        std::vector<Vertex> five{0, 1, 2, 3, 4};
        CHECK_THROWS_AS(extract_model_from_certificate(cycle_graph(5), five, 4), InvariantError);
    }

    TEST_CASE("small k4 model") {
        CHECK_THROWS_AS(small_k4_model(complete_graph(5), Rational(1)), PreconditionError);
        auto m = small_k4_model(complete_graph(6), Rational(1));
        CHECK(validate_model(complete_graph(6), m));
        CHECK(m.total_size() >= 4);
        CHECK_THROWS_AS(small_k4_model(cycle_square(24).graph(), Rational(1, 100)), PreconditionError);
        Graph g = random_gnm(4096, 5 * 2048, 42);
        auto big = small_k4_model(g, Rational(1));
        CHECK(validate_model(g, big));
        CHECK(big.total_size() <= h_k4(Rational(1)) * 12);
    }

    TEST_CASE("nice k3 models") {
        auto m = nice_k3_model(complete_graph(6), Rational(1));
        CHECK(validate_model(complete_graph(6), m));
        CHECK(all_branches_at_least_two(m));
        CHECK(m.total_size() == 6);
        CHECK_THROWS_AS(nice_k3_model(disjoint_union(complete_graph(5), 3), Rational(1, 10)), PreconditionError);
        // K4 with a pendant path w, w' on vertex 0: the three other vertices can go
        std::vector<Edge> e = complete_graph(4).edges();
        e.emplace_back(0, 4);
        e.emplace_back(4, 5);
        Graph g = Graph::from_edges(6, e);
        auto out = nice_k3_around_k4(g, std::vector<Vertex>{0, 1, 2, 3});
        REQUIRE(std::holds_alternative<VertexSet>(out));
        CHECK(std::get<VertexSet>(out) == VertexSet{1, 2, 3});
        // w joined to 0 and 1
        e.emplace_back(1, 4);
        Graph g2 = Graph::from_edges(6, e);
        auto out2 = nice_k3_around_k4(g2, std::vector<Vertex>{0, 1, 2, 3});
        REQUIRE(std::holds_alternative<KtModel>(out2));
        const KtModel &pm = std::get<KtModel>(out2);
        CHECK(validate_model(g2, pm));
        CHECK(all_branches_at_least_two(pm));
        CHECK(pm.branch_sets[0] == VertexSet{4, 5});
        // K4-free input
        Graph c = cycle_square(12).graph();
        auto refined = nice_k3_from_k4_model(c, *find_kt_model(c, 4));
        CHECK(validate_model(c, refined));
        CHECK(all_branches_at_least_two(refined));
    }

    TEST_CASE("small kt models") {
        auto p = small_kt_model(cycle_square(8).graph(), 2, Rational(1), KtVariant::strong);
        CHECK(p.total_size() == 4);
        auto m = small_kt_model(complete_graph(10), 4, Rational(1), KtVariant::strong);
        CHECK(validate_model(complete_graph(10), m));
        CHECK(all_branches_at_least_two(m));
        CHECK(m.total_size() <= 10);
        CHECK_THROWS_AS(small_kt_model(complete_graph(10), 4, Rational(1), KtVariant::weak), PreconditionError);
        Graph g = random_gnm(2048, 17 * 1024, 9);
        auto k5 = small_kt_model(g, 5, Rational(1, 2), KtVariant::strong);
        CHECK(validate_model(g, k5));
        CHECK(all_branches_at_least_two(k5));
        CHECK(within_log_bound(static_cast<double>(k5.total_size()), h_kt(5, Rational(1, 2), KtVariant::strong), 2048));
    }

    TEST_CASE("high girth minors") {
        Graph pet = high_girth_regular(10, 3, 5, 1);
        auto h0 = high_girth_dense_minor(pet, 0);
        CHECK(h0.minor.n() == 10);
        CHECK(h0.minor.min_degree() == 3);
        auto m0 = high_girth_kt_model(pet, 0);
        CHECK(m0.t == 2);
        CHECK(validate_model(pet, m0));
        CHECK(high_girth_clique_order(4, 0) == 2);
        CHECK(high_girth_clique_order(3, 1) == 3);
        auto m1 = high_girth_kt_model(complete_graph(5), 0);
        CHECK(m1.t == 2);
        Graph g = high_girth_regular(400, 3, 11, 3, 2000000);
        REQUIRE(*girth_exact(g) >= 11);
        auto h1 = high_girth_dense_minor(g, 1);
        CHECK(h1.minor.min_degree() >= 6);
        auto k3 = high_girth_kt_model(g, 1);
        CHECK(k3.t == 3);
        CHECK(validate_model(g, k3));
        CHECK_THROWS_AS(high_girth_dense_minor(pet, 1), PreconditionError);
    }
}
