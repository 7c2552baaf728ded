#include <doctest.h>

#include "smallminors/generators.hpp"
#include "smallminors/minor_search.hpp"

using namespace smallminors;

namespace {

// each edge of K4 subdivided once
Graph subdivided_k4() {
    std::vector<Edge> e;
    int next = 4;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) {
            e.emplace_back(u, next);
            e.emplace_back(next, v);
            ++next;
        }
    return Graph::from_edges(next, e);
}

}  // namespace

TEST_SUITE("minor_search") {
    TEST_CASE("kt minor decisions") {
        CHECK(has_kt_minor(complete_graph(5), 5));
        CHECK_FALSE(has_kt_minor(complete_graph(4), 5));
        CHECK(has_kt_minor(cycle_graph(5), 3));
        CHECK_FALSE(has_kt_minor(path_graph(6), 3));
        CHECK(has_kt_minor(path_graph(2), 2));
        // Petersen graph has a K5 minor
        CHECK(has_kt_minor(high_girth_regular(10, 3, 5, 1), 5));
        CHECK_FALSE(has_kt_minor(cycle_square(8).graph(), 5));
    }

    TEST_CASE("spanning models use every vertex") {
        auto m = spanning_kt_model(subdivided_k4(), 4);
        REQUIRE(m);
        CHECK(m->total_size() == 10);
        CHECK(validate_model(subdivided_k4(), *m));
        CHECK_FALSE(spanning_kt_model(cycle_graph(5), 4));
    }

    TEST_CASE("find_kt_model returns valid models") {
        for (int t = 2; t <= 5; ++t) {
            auto m = find_kt_model(complete_graph(6), t);
            REQUIRE(m);
            CHECK(validate_model(complete_graph(6), *m));
        }
        CHECK_FALSE(find_kt_model(cycle_graph(12), 4));
        auto m = find_kt_model(cycle_square(12).graph(), 4);
        REQUIRE(m);
        CHECK(validate_model(cycle_square(12).graph(), *m));
    }

    TEST_CASE("quotient graph") {
        Graph q = quotient(cycle_graph(6), {{0, 1}, {2, 3}, {4, 5}});
        CHECK(q.n() == 3);
        CHECK(q.m() == 3);
    }
}
