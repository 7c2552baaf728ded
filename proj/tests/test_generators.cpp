#include <doctest.h>

#include <map>

#include "smallminors/generators.hpp"
#include "smallminors/oracle.hpp"

using namespace smallminors;

namespace {

std::map<std::size_t, int> face_census(const EmbeddedGraph &e) {
    std::map<std::size_t, int> c;
    for (const Face &f : e.faces()) ++c[f.length()];
    return c;
}

void check_euler(const EmbeddedGraph &e) {
    const std::int64_t n = e.n(), m = e.graph().m(), f = static_cast<std::int64_t>(e.faces().size());
    CHECK(n - m + f == 2 - e.euler_genus());
    std::size_t sides = 0;
    for (const Face &face : e.faces()) sides += face.length();
    CHECK(sides == static_cast<std::size_t>(2 * m));
}

}  // namespace

TEST_SUITE("generators") {
    TEST_CASE("square of an even cycle") {
        EmbeddedGraph c = cycle_square(8);
        CHECK(c.n() == 8);
        CHECK(c.graph().m() == 16);
        CHECK(c.graph().min_degree() == 4);
        CHECK(c.graph().max_degree() == 4);
        CHECK(c.euler_genus() == 0);
        EmbeddedGraph c24 = cycle_square(24);
        CHECK(c24.graph().m() == 48);
        CHECK(face_census(c24) == std::map<std::size_t, int>{{3, 24}, {12, 2}});
        check_euler(c24);
        CHECK_THROWS_AS(cycle_square(6), std::invalid_argument);
        CHECK_THROWS_AS(cycle_square(9), std::invalid_argument);
    }

    TEST_CASE("two consecutive deletions leave no k4 minor") {
        for (int len : {8, 10, 12, 14}) {
            Graph g = cycle_square(len).graph();
            for (Vertex i = 0; i < len; ++i) {
                std::vector<Vertex> rm{i, (i + 1) % len};
                REQUIRE_FALSE(has_k4_minor(g.without(rm)));
            }
        }
    }

    TEST_CASE("snub dodecahedron") {
        EmbeddedGraph s = snub_dodecahedron();
        CHECK(s.n() == 60);
        CHECK(s.graph().m() == 150);
        CHECK(s.faces().size() == 92);
        CHECK(s.euler_genus() == 0);
        CHECK(face_census(s) == std::map<std::size_t, int>{{3, 80}, {5, 12}});
        CHECK(s.graph().min_degree() == 5);
        CHECK(s.graph().max_degree() == 5);
        for (Vertex v = 0; v < 60; ++v) {
            int pentagons = 0;
            for (int f : s.faces_at(v)) pentagons += s.faces()[f].length() == 5;
            REQUIRE(pentagons == 1);
        }
    }

    TEST_CASE("icosahedron and dodecahedron") {
        EmbeddedGraph i = icosahedron();
        CHECK(i.n() == 12);
        CHECK(i.graph().m() == 30);
        CHECK(face_census(i) == std::map<std::size_t, int>{{3, 20}});
        CHECK(face_census(dodecahedron()) == std::map<std::size_t, int>{{5, 12}});
    }

    TEST_CASE("planar 4+eps gadget") {
        EmbeddedGraph g0 = planar_4plus_eps_gadget(0);
        CHECK(average_degree(g0.graph()) == Rational(5));
        EmbeddedGraph g2 = planar_4plus_eps_gadget(2);
        CHECK(g2.n() == 180);
        CHECK(average_degree(g2.graph()) == Rational(4) + Rational(1, 3));
        CHECK(g2.euler_genus() == 0);
        int deg5 = 0, deg4 = 0;
        for (Vertex v = 0; v < g2.n(); ++v) (g2.graph().degree(v) == 5 ? deg5 : deg4)++;
        CHECK(deg5 == 60);
        CHECK(deg4 == 120);
        for (int k : {1, 3, 4}) CHECK(average_degree(planar_4plus_eps_gadget(k).graph()) == Rational(4) + Rational(1, k + 1));
        CHECK_THROWS_AS(planar_4plus_eps_gadget(-1), std::invalid_argument);
        CHECK_THROWS_AS(planar_4plus_eps_gadget(1, icosahedron()), std::invalid_argument);
    }

    TEST_CASE("bouquet") {
        EmbeddedGraph b = genus_bouquet(2, 2);
        CHECK(b.n() == 5);
        CHECK(b.graph().m() == 6);
        CHECK(b.faces().size() == 1);
        CHECK(b.euler_genus() == 2);
        CHECK(b.orientable_signs());
        CHECK_THROWS_AS(genus_bouquet(3, 2), std::invalid_argument);
        CHECK_THROWS_AS(genus_bouquet(2, 1), std::invalid_argument);
    }

    TEST_CASE("one-face degree-4 surface graphs") {
        EmbeddedGraph e = surface_one_face_degree4(2, 1);
        CHECK(e.n() == 8);
        CHECK(average_degree(e.graph()) == Rational(9, 2));
        for (auto [g, k] : {std::pair{2, 1}, std::pair{3, 2}, std::pair{4, 2}, std::pair{5, 0}, std::pair{6, 3}}) {
            EmbeddedGraph s = surface_one_face_degree4(g, k);
            CAPTURE(g);
            CAPTURE(k);
            CHECK(s.n() == 2 * g * (k + 1));
            CHECK(average_degree(s.graph()) == Rational(4) + Rational(1, k + 1));
            for (Vertex v = 0; v < s.n(); ++v) REQUIRE(s.sees(v).size() == static_cast<std::size_t>(s.n() - 1));
            check_euler(s);
        }
        CHECK_THROWS_AS(surface_one_face_degree4(2, -1), std::invalid_argument);
    }

    TEST_CASE("square of a cycle plus a matching") {
        for (int len : {10, 12, 24}) {
            EmbeddedGraph e = cycle_square_plus_matching(len);
            CAPTURE(len);
            CHECK(e.graph().min_degree() == 5);
            CHECK(e.graph().max_degree() == 5);
            for (Vertex v = 0; v < e.n(); ++v) {
                std::size_t longest = 0;
                for (int f : e.faces_at(v)) longest = std::max(longest, e.faces()[f].length());
                REQUIRE(longest >= static_cast<std::size_t>(len / 2));
            }
            check_euler(e);
        }
        CHECK_THROWS_AS(cycle_square_plus_matching(13), std::invalid_argument);
    }

    TEST_CASE("toroidal grid") {
        EmbeddedGraph t = toroidal_grid(12);
        CHECK(t.n() == 36);
        CHECK(t.graph().m() == 108);
        CHECK(t.faces().size() == 72);
        CHECK(t.euler_genus() == 2);
        CHECK(t.orientable_signs());
        CHECK(t.graph().min_degree() == 6);
        CHECK(t.graph().max_degree() == 6);
        CHECK_THROWS_AS(toroidal_grid(2), std::invalid_argument);
    }

    TEST_CASE("high girth regular graphs") {
        Graph p = high_girth_regular(10, 3, 5, 1);
        CHECK(p.m() == 15);
        CHECK(girth_exact(p) == 5);
        Graph any = high_girth_regular(12, 4, 3, 2);
        CHECK(any.min_degree() == 4);
        CHECK(any.max_degree() == 4);
        CHECK_THROWS_AS(high_girth_regular(10, 2, 5), std::invalid_argument);
        CHECK_THROWS_AS(high_girth_regular(10, 3, 9, 1, 2000), std::runtime_error);
        CHECK(high_girth_regular(50, 3, 6, 7).edges() == high_girth_regular(50, 3, 6, 7).edges());
    }

    TEST_CASE("random plane graphs") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            EmbeddedGraph e = random_plane_graph(30, 60, seed);
            REQUIRE(e.euler_genus() == 0);
            REQUIRE(e.graph().m() == 60);
            check_euler(e);
        }
        EmbeddedGraph t = random_plane_graph(20, 54, 4);
        for (const Face &f : t.faces()) CHECK(f.length() == 3);
        CHECK_THROWS_AS(random_plane_graph(10, 25, 1), std::invalid_argument);
        CHECK_THROWS_AS(random_plane_graph(10, 8, 1), std::invalid_argument);
    }

    TEST_CASE("random gnm") {
        Graph g = random_gnm(100, 250, 3);
        CHECK(g.m() == 250);
        CHECK(random_gnm(100, 250, 3).edges() == g.edges());
        CHECK_THROWS(random_gnm(4, 7, 1));
    }
}
