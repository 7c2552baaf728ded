#include <doctest.h>

#include "smallminors/generators.hpp"
#include "smallminors/oracle.hpp"

using namespace smallminors;

TEST_SUITE("oracle") {
    TEST_CASE("minimum models") {
        CHECK(*min_kt_model(complete_graph(4), 4).min_size == 4);
        CHECK(*min_kt_model(cycle_graph(5), 3).min_size == 5);
        CHECK_FALSE(min_kt_model(cycle_graph(8), 4).min_size);
        // frozen goldens
        CHECK(*min_kt_model(cycle_square(8).graph(), 4).min_size == 6);
        CHECK(*min_kt_model(cycle_square(10).graph(), 4).min_size == 7);
        CHECK(*min_kt_model(cycle_square(12).graph(), 4).min_size == 8);
        auto r = min_kt_model(snub_dodecahedron().graph(), 4, 8);
        CHECK(*r.min_size == 8);
        CHECK(validate_model(snub_dodecahedron().graph(), *r.witness));
        CHECK_FALSE(min_kt_model(snub_dodecahedron().graph(), 4, 7).min_size);
    }

    TEST_CASE("contraction oracle agrees") {
        CHECK(min_kt_model_by_contraction(cycle_square(8).graph(), 4) == 6);
        CHECK(min_kt_model_by_contraction(complete_graph(5), 5) == 5);
        CHECK_FALSE(min_kt_model_by_contraction(cycle_graph(6), 4));
        CHECK(min_kt_model_by_contraction(high_girth_regular(10, 3, 5, 1), 5) ==
              min_kt_model(high_girth_regular(10, 3, 5, 1), 5).min_size);
    }

    TEST_CASE("girth") {
        CHECK(girth_exact(cycle_graph(7)) == 7);
        CHECK_FALSE(girth_exact(path_graph(9)));
        CHECK(girth_exact(high_girth_regular(10, 3, 5, 1)) == 5);
        CHECK(girth_exact(complete_graph(4)) == 3);
    }

    TEST_CASE("connected subset counts") {
        // path P4: 4 singletons, 3 pairs, 2 triples, 1 whole
        CHECK(count_connected_subsets(path_graph(4), 4) == std::vector<std::uint64_t>{0, 4, 3, 2, 1});
        // K4: all subsets are connected
        CHECK(count_connected_subsets(complete_graph(4), 4) == std::vector<std::uint64_t>{0, 4, 6, 4, 1});
        // cycle C6: 6 of each size below 6, then 1
        CHECK(count_connected_subsets(cycle_graph(6), 6) == std::vector<std::uint64_t>{0, 6, 6, 6, 6, 6, 1});
    }

    TEST_CASE("technical inequality instances") {
        std::vector<int> f1{3, 3, 3, 3, 5};
        auto a = face_inequality_instance(Rational(30), f1);
        CHECK(a.hypothesis);
        CHECK(a.conclusion);
        std::vector<int> f2{3, 3, 3};
        CHECK_FALSE(face_inequality_instance(Rational(3), f2).hypothesis);
        std::vector<int> f3{3, 3, 3, 7};
        auto b = face_inequality_surface_instance(Rational(30), f3);
        CHECK(b.hypothesis);
        CHECK(b.conclusion);
        std::vector<int> bad{2, 3, 3};
        CHECK_THROWS(face_inequality_instance(Rational(3), bad));
    }

    TEST_CASE("sweeps pass") {
        CHECK(check_face_inequality(Rational(60), 10, 40).pass);
        CHECK(check_face_inequality_surface(Rational(60), 10, 40).pass);
    }
}

TEST_SUITE("oracle") {
    TEST_CASE("graph catalog sizes") {
        const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044};
        const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
        for (int n = 1; n <= 7; ++n) {
            CAPTURE(n);
            CHECK(graph_catalog(n, false).size() == all[n - 1]);
            CHECK(graph_catalog(n, true).size() == connected[n - 1]);
        }
    }
}
