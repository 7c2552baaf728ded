#include <doctest.h>

#include <sstream>

#include "smallminors/generators.hpp"
#include "smallminors/io.hpp"

using namespace smallminors;

TEST_SUITE("io") {
    TEST_CASE("edge list round trip") {
        Graph g = cycle_square(10).graph();
        std::stringstream s;
        write_edge_list(s, g);
        Graph h = read_edge_list(s);
        CHECK(h.n() == g.n());
        CHECK(h.edges() == g.edges());
    }

    TEST_CASE("edge list comments and errors") {
        std::istringstream ok("# triangle\n3 3\n0 1 # first\n1 2\n\n2 0\n");
        CHECK(read_edge_list(ok).m() == 3);
        std::istringstream short_list("3 3\n0 1\n");
        CHECK_THROWS_AS(read_edge_list(short_list), FormatError);
        std::istringstream range("2 1\n0 2\n");
        CHECK_THROWS_AS(read_edge_list(range), FormatError);
        std::istringstream junk("a b\n");
        CHECK_THROWS_AS(read_edge_list(junk), FormatError);
        std::istringstream dup("2 2\n0 1\n1 0\n");
        CHECK_THROWS_AS(read_edge_list(dup), FormatError);
    }

    TEST_CASE("embedding round trip keeps faces and signs") {
        for (const EmbeddedGraph &e : {snub_dodecahedron(), cycle_square_plus_matching(12), toroidal_grid(4)}) {
            std::stringstream s;
            write_embedding(s, e);
            EmbeddedGraph f = read_embedding(s);
            CHECK(f.euler_genus() == e.euler_genus());
            CHECK(f.faces().size() == e.faces().size());
            CHECK(f.orientable_signs() == e.orientable_signs());
        }
    }

    TEST_CASE("embedding parser validates") {
        std::istringstream asym("3 3\n0: 1 2\n1: 2 0\n2: 0\n");
        CHECK_THROWS_AS(read_embedding(asym), FormatError);
        std::istringstream genus("3 3 2\n0: 1 2\n1: 2 0\n2: 0 1\n");
        CHECK_THROWS_AS(read_embedding(genus), FormatError);
        std::istringstream sign("3 3\n0: 1- 2\n1: 2 0\n2: 0 1\n");
        CHECK_THROWS_AS(read_embedding(sign), FormatError);
        std::istringstream tri("3 3 0\n0: 1 2\n1: 2 0\n2: 0 1\n");
        CHECK(read_embedding(tri).faces().size() == 2);
        std::istringstream twisted("3 3\n0: 1- 2\n1: 2 0-\n2: 0 1\n");
        CHECK(read_embedding(twisted).euler_genus() == 1);
    }

    TEST_CASE("certificate round trip") {
        KtModel m{4, {{0}, {1, 2}, {3}, {4, 5, 6}}};
        std::stringstream s;
        write_certificate(s, m);
        CHECK(s.str().rfind("t 4 size 7\n", 0) == 0);
        KtModel r = read_certificate(s);
        CHECK(r.t == 4);
        CHECK(r.branch_sets == m.branch_sets);
        std::istringstream lie("t 2 size 3\n0\n1\n");
        CHECK_THROWS_AS(read_certificate(lie), FormatError);
    }
}
