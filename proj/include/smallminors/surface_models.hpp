#ifndef SMALLMINORS_SURFACE_MODELS_HPP
#define SMALLMINORS_SURFACE_MODELS_HPP

#include <optional>
#include <vector>

#include "smallminors/embedded.hpp"

namespace smallminors {

enum class ChargeScheme {
    deg5,     // 2 - deg + sum 2/|f|
    avg4eps,  // (8+2e) - (8+3e) deg + (24+6e) sum 1/|f|
    genus,    // avg4eps plus (24+6e) g/|G|
    blind240  // 240 - 120 deg + 240 g/|G| + 240 sum 1/|f|
};

const char *to_string(ChargeScheme s);

struct ChargeReport {
    ChargeScheme scheme = ChargeScheme::deg5;
    Rational eps;
    std::vector<Rational> charges;     // per local vertex
    Rational total;
    Rational closed_form;              // value forced by Euler's formula
    std::optional<Rational> lower_bound;  // 2(24+6e) for the eps schemes
    std::optional<Rational> alpha;        // 6 + 24/e

    bool identity_holds() const { return total == closed_form; }
};

ChargeReport charge_report(const EmbeddedGraph &e, ChargeScheme scheme, const Rational &eps = Rational(0));

struct VisibilityResult {
    Vertex vertex = -1;       // local index
    std::size_t sees = 0;     // |sees(v)|
    std::int64_t face_sum = 0;  // sum over faces at v of |f| - 2
    int bound = 0;
    ChargeReport report;
};

/// A vertex that sees at most 7 (deg5), 1 + ceil(8/e) (avg4eps) or
/// 2 + ceil(12/e) (genus) others. Among vertices of positive charge the one
/// seeing fewest is returned.
VisibilityResult low_visibility_vertex(const EmbeddedGraph &e, ChargeScheme scheme, const Rational &eps = Rational(0));

struct BlindEdge {
    Edge edge;             // ids
    std::size_t sees_u = 0;
    std::size_t sees_v = 0;
    int bound = 0;         // 11 on the sphere, 12 otherwise
    ChargeReport report;
};

BlindEdge blind_edge(const EmbeddedGraph &e);

/// Cycle (ids) of length <= 1 + ceil(4/e) from a shortest facial walk.
std::vector<Vertex> planar_short_face_cycle(const EmbeddedGraph &e, const Rational &eps);
/// A face of length <= (4/e + 2)(g + 1); vertices are local indices.
Face surface_short_face(const EmbeddedGraph &e, const Rational &eps);
/// Cycle (ids) of length <= h(e) log2(g + 2).
std::vector<Vertex> surface_girth_cycle(const EmbeddedGraph &e, const Rational &eps);

/// Some cycle inside a closed walk (by cancelling backtracks); empty if none.
std::vector<Vertex> cycle_in_closed_walk(std::span<const Vertex> walk);

enum class PlanarMode { deg5, avg };

/// K4-model with <= 8 (deg5) or <= 2 + ceil(8/e) (avg) vertices in a
/// 3-connected plane graph.
KtModel planar_3conn_k4(const EmbeddedGraph &e, PlanarMode mode, const Rational &eps = Rational(0));

/// K4-model with <= ceil(8/e) + ceil(2/e) vertices for a plane graph with
/// 2m > (4+e)(n-2).
KtModel planar_general_k4(const EmbeddedGraph &e, const Rational &eps);

/// K4-model for a 3-connected embedded graph of facewidth >= 3 (caller's
/// assertion) and average degree >= 4 + e.
KtModel surface_k4(const EmbeddedGraph &e, const Rational &eps);

bool is_three_connected(const Graph &g);

}  // namespace smallminors

#endif
