#ifndef SMALLMINORS_GENERATORS_HPP
#define SMALLMINORS_GENERATORS_HPP

#include <cstdint>
#include <optional>

#include "smallminors/embedded.hpp"

namespace smallminors {

/// Square of the cycle on `length` vertices, embedded in the plane with the
/// even vertices on an inner face and the odd ones on the outer face.
EmbeddedGraph cycle_square(int length);

EmbeddedGraph icosahedron();
EmbeddedGraph dodecahedron();
/// 60 vertices, 5-regular, 80 triangles and 12 pentagons.
EmbeddedGraph snub_dodecahedron();
/// Cube Q3, planar.
EmbeddedGraph cube();
/// Wheel with `spokes` rim vertices; the hub is vertex 0.
EmbeddedGraph wheel(int spokes);
/// Plane cycle.
EmbeddedGraph plane_cycle(int n);

/// Every vertex of the cubic plane base becomes a triangle and every edge a
/// triangulated strip with 2k inner vertices. Average degree 4 + 1/(k+1).
/// Base defaults to the dodecahedron; it must be cubic with faces of length >= 5.
EmbeddedGraph planar_4plus_eps_gadget(int k, const std::optional<EmbeddedGraph> &base = std::nullopt);

/// g cycles of length k+1 through one vertex, embedded with a single face
/// (orientable, Euler genus g). g even, k >= 2.
EmbeddedGraph genus_bouquet(int g, int k);

/// Square of the cycle on 2g(k+1) vertices plus g extra edges, embedded so
/// one face passes through every vertex. 2g vertices of degree 5.
EmbeddedGraph surface_one_face_degree4(int g, int k);

/// Square of the cycle on `length` vertices plus a perfect matching; 5-regular,
/// every vertex on a facial walk of length >= length / 2.
EmbeddedGraph cycle_square_plus_matching(int length);

/// 6-regular triangulation of the torus with 3 rows and n columns.
EmbeddedGraph toroidal_grid(int n);

/// Random d-regular graph with girth >= girth_target, built by random edge
/// insertion and edge swaps. Throws std::runtime_error when the iteration
/// budget runs out.
Graph high_girth_regular(int n, int d, int girth_target, std::uint64_t seed = 1, int budget = 200000);

/// Random plane graph: a stacked triangulation on n >= 3 vertices (each new
/// vertex goes into a random triangle) thinned by deleting random edges that
/// keep it connected, down to m edges. m must lie in [n - 1, 3n - 6].
EmbeddedGraph random_plane_graph(int n, std::int64_t m, std::uint64_t seed);

/// Uniform G(n, m) graph (simple).
Graph random_gnm(int n, std::int64_t m, std::uint64_t seed);

}  // namespace smallminors

#endif
