#ifndef SMALLMINORS_DENSE_MINORS_HPP
#define SMALLMINORS_DENSE_MINORS_HPP

#include <optional>
#include <variant>
#include <vector>

#include "smallminors/bounds.hpp"
#include "smallminors/graph.hpp"

namespace smallminors {

/// Connected subgraph of bounded diameter that keeps a prescribed density.
struct DenseSubgraphResult {
    VertexSet vertices;          // ids of the input graph, ascending
    Rational average_degree;     // of the induced subgraph, exact
    Vertex center = -1;          // id of the ball center
    int radius = 0;              // the subgraph is the radius-ball around center
    std::optional<int> diameter; // exact, computed when the subgraph is small enough
    int balls_grown = 0;
    int recursions = 0;

    int diameter_bound() const { return 2 * radius; }
};

/// Grows balls around the lowest vertex until the growth ratio drops below
/// d/d'; returns the ball when it is dense enough and otherwise discards the
/// inner ball and repeats. Requires d > d' >= 2 and average degree >= d.
DenseSubgraphResult dense_low_diameter_subgraph(const Graph &g, const Rational &d, const Rational &d_prime);

/// Cycle (ids, in order) of length <= 2 p(2+eps, 2) log2|G| + 1.
std::vector<Vertex> short_cycle(const Graph &g, const Rational &eps);

/// K_t-model inside g[cert]; throws InvariantError("certificate invalid") when
/// the certificate does not contain a K_t minor. cert holds ids of g.
KtModel extract_model_from_certificate(const Graph &g, std::span<const Vertex> cert, int t);

/// K4-model of size <= h_k4(eps) log2|G| for average degree >= 4 + eps.
KtModel small_k4_model(const Graph &g, const Rational &eps);

/// Outcome of the K4-subgraph case analysis used by nice_k3_model: either
/// a finished model, or three vertices whose removal keeps the density.
using K4CaseOutcome = std::variant<KtModel, VertexSet>;

/// Case analysis around a K4 subgraph with vertex ids x (connected g with at
/// least 6 vertices).
K4CaseOutcome nice_k3_around_k4(const Graph &g, std::span<const Vertex> x);

/// Refines a K4-model of a connected K4-free graph with at least 6 vertices
/// into a K3-model whose branch sets all have two or more vertices.
KtModel nice_k3_from_k4_model(const Graph &g, const KtModel &k4);

/// K3-model with every branch set of size >= 2, for average degree >= 4 + eps.
KtModel nice_k3_model(const Graph &g, const Rational &eps);

/// K_t-model with every branch set of size >= 2 and total size <= h_kt log2|G|.
KtModel small_kt_model(const Graph &g, int t, const Rational &eps, KtVariant variant);

/// Minor of a high-girth graph with bounded-radius branch sets.
struct HighGirthMinor {
    Graph minor;                          // vertex i is branch set i
    std::vector<int> branch_of;           // per local vertex of g
    VertexSet centers;                    // local vertex of g per branch set
    std::vector<std::vector<Vertex>> path_to_center;  // per local vertex, v .. center
    int min_degree_target = 0;            // r (r-1)^k
};

HighGirthMinor high_girth_dense_minor(const Graph &g, int k);

/// Largest t with r (r-1)^k >= 2^(t-1) + 1 (0 when none).
int high_girth_clique_order(int r, int k);

/// K_t-model for the clique order above, lifted from the dense minor.
KtModel high_girth_kt_model(const Graph &g, int k);

}  // namespace smallminors

#endif
