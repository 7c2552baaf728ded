#include <doctest.h>

#include "corpus.hpp"
#include "smallminors/embedded.hpp"
#include "smallminors/oracle.hpp"

using namespace smallminors;

TEST_SUITE("embedded") {
    TEST_CASE("face tracing on small plane graphs") {
        EmbeddedGraph k4 = planar_k4();
        CHECK(k4.faces().size() == 4);
        for (const Face &f : k4.faces()) CHECK(f.length() == 3);
        CHECK(k4.euler_genus() == 0);
        EmbeddedGraph q = cube();
        CHECK(q.faces().size() == 6);
        for (const Face &f : q.faces()) CHECK(f.length() == 4);
    }

    TEST_CASE("rotation validation") {
        Graph t = complete_graph(3);
        CHECK_THROWS_AS(EmbeddedGraph(t, {{1, 2}, {0, 2}, {0}}), std::invalid_argument);
        CHECK_THROWS_AS(EmbeddedGraph(t, {{1, 2}, {0, 2}, {0, 1}}, {{1, -1}, {1, 1}, {1, 1}}), std::invalid_argument);
        Graph two = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
        CHECK_THROWS_AS(EmbeddedGraph(two, {{1}, {0}, {3}, {2}}), PreconditionError);
    }

    TEST_CASE("bouquet has one face") {
        for (auto [g, k] : {std::pair{2, 2}, std::pair{4, 3}, std::pair{6, 2}}) {
            EmbeddedGraph b = genus_bouquet(g, k);
            REQUIRE(b.faces().size() == 1);
            CHECK(b.euler_genus() == g);
            CHECK(b.faces()[0].length() == static_cast<std::size_t>(2 * g * (k + 1)));
            CHECK(b.faces_at(0).size() == static_cast<std::size_t>(2 * g));
        }
    }

    TEST_CASE("faces at a vertex count its degree") {
        for (const auto &[name, e] : corpus::embeddings()) {
            CAPTURE(name);
            for (Vertex v = 0; v < e.n(); ++v) REQUIRE(e.faces_at(v).size() == static_cast<std::size_t>(e.graph().degree(v)));
        }
    }

    TEST_CASE("visibility counts") {
        for (int n : {4, 5, 12}) {
            EmbeddedGraph c = cycle_square(2 * n);
            for (Vertex v = 0; v < c.n(); ++v) REQUIRE(c.sees(v).size() == static_cast<std::size_t>(n + 1));
        }
        EmbeddedGraph k4 = planar_k4();
        CHECK(k4.sees(0) == VertexSet{1, 2, 3});
        CHECK(k4.sees_upper_bound(0) == 3);
        EmbeddedGraph s = snub_dodecahedron();
        for (Vertex v = 0; v < s.n(); ++v) {
            REQUIRE(s.sees(v).size() == 7);
            REQUIRE(s.sees_upper_bound(v) == 7);
        }
        EmbeddedGraph q = cube();
        for (Vertex v = 0; v < q.n(); ++v) CHECK(q.sees(v).size() == 6);
    }

    TEST_CASE("triangulations see exactly their neighbours") {
        for (const auto &[name, e] : corpus::embeddings()) {
            bool tri = true;
            for (const Face &f : e.faces()) tri = tri && f.length() == 3;
            if (!tri || e.euler_genus() != 0) continue;
            CAPTURE(name);
            for (Vertex v = 0; v < e.n(); ++v) {
                auto nb = e.graph().neighbors(v);
                REQUIRE(e.sees(v) == VertexSet(nb.begin(), nb.end()));
            }
        }
    }

    TEST_CASE("deleting a vertex keeps a valid embedding of no larger genus") {
        for (const auto &[name, e] : corpus::embeddings()) {
            CAPTURE(name);
            for (Vertex v = 0; v < e.n(); v += 7) {
                std::vector<Vertex> rm{v};
                if (!is_connected(e.graph().without(rm))) continue;
                EmbeddedGraph h = e.without(rm);
                REQUIRE(h.euler_genus() <= e.euler_genus());
            }
        }
    }

    TEST_CASE("visibility wheel") {
        EmbeddedGraph w = wheel(5);
        KtModel m = visibility_wheel_k4(w, 0);
        CHECK(validate_model(w.graph(), m));
        CHECK(m.total_size() <= 6);
        // dropping any rim vertex leaves a fan, so the whole wheel is needed
        CHECK(*min_kt_model(w.graph(), 4).min_size == 6);
        KtModel k = visibility_wheel_k4(planar_k4(), 2);
        CHECK(k.total_size() == 4);
        EmbeddedGraph c = cycle_square(8);
        KtModel cm = visibility_wheel_k4(c, 0);
        CHECK(validate_model(c.graph(), cm));
        CHECK(cm.total_size() <= 1 + c.sees(0).size());
        CHECK_THROWS_WITH_AS(visibility_wheel_k4(plane_cycle(5), 0), doctest::Contains("degree"), PreconditionError);
        CHECK_THROWS_WITH_AS(visibility_wheel_k4(toroidal_grid(3), 0), doctest::Contains("genus"), PreconditionError);
    }

    TEST_CASE("cut pair rejection") {
        // {1, 2} separates {0, 3} from {4, 5}
        std::vector<std::vector<Vertex>> faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {4, 2, 1}, {4, 5, 2}, {4, 1, 5},
                                                  {1, 3, 2, 5}};
        EmbeddedGraph e = embedding_from_faces(6, faces);
        REQUIRE(e.euler_genus() == 0);
        CHECK_THROWS_WITH_AS(visibility_wheel_k4(e, 1), doctest::Contains("cut-pair"), PreconditionError);
    }

    TEST_CASE("dual of the icosahedron") {
        EmbeddedGraph d = dodecahedron();
        CHECK(d.n() == 20);
        CHECK(d.graph().m() == 30);
        CHECK(d.faces().size() == 12);
        CHECK(d.graph().min_degree() == 3);
    }
}
