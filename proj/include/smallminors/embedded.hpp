#ifndef SMALLMINORS_EMBEDDED_HPP
#define SMALLMINORS_EMBEDDED_HPP

#include <optional>
#include <vector>

#include "smallminors/graph.hpp"

namespace smallminors {

/// Closed facial walk. walk[i] is the vertex the walk leaves along its i-th
/// edge side, so |f| = walk.size() counts vertices with multiplicity.
struct Face {
    std::vector<Vertex> walk;
    std::size_t length() const { return walk.size(); }
    bool is_simple_cycle() const;
};

/// A connected graph with a rotation system and edge signs (-1 marks an
/// edge that flips local orientation; all +1 for orientable embeddings).
/// Faces are traced at construction and the Euler identity is checked.
class EmbeddedGraph {
public:
    /// rotation[v] lists the neighbours of v in cyclic order (local indices).
    /// signs, when given, is parallel to rotation and must be symmetric.
    EmbeddedGraph(Graph g, std::vector<std::vector<Vertex>> rotation, std::vector<std::vector<int>> signs = {});

    const Graph &graph() const { return graph_; }
    int n() const { return graph_.n(); }
    std::span<const Vertex> rotation(Vertex v) const { return rotation_[v]; }
    int sign(Vertex v, std::size_t i) const { return signs_[v][i]; }
    int edge_sign(Vertex u, Vertex v) const;
    bool orientable_signs() const;

    const std::vector<Face> &faces() const { return faces_; }
    int euler_genus() const { return euler_genus_; }

    /// Indices into faces(), one entry per occurrence of v (|result| = deg v).
    std::vector<int> faces_at(Vertex v) const;
    /// Every other vertex on a face through v, ascending.
    VertexSet sees(Vertex v) const;
    /// Sum over faces at v (with multiplicity) of |f| - 2.
    std::int64_t sees_upper_bound(Vertex v) const;

    /// Restriction of the rotation system to the induced subgraph on `keep`
    /// (local indices). The result must be connected.
    EmbeddedGraph induced(std::span<const Vertex> keep) const;
    EmbeddedGraph without(std::span<const Vertex> removed) const;

    /// Neighbour following w in the rotation at v.
    Vertex rotation_successor(Vertex v, Vertex w) const;
    /// Index of the face that traverses the directed edge u -> v (either orientation state).
    std::optional<int> face_with_dart(Vertex u, Vertex v) const;

private:
    std::size_t slot(Vertex v, Vertex w) const;
    void trace();

    Graph graph_;
    std::vector<std::vector<Vertex>> rotation_;
    std::vector<std::vector<int>> signs_;
    std::vector<Face> faces_;
    std::vector<std::vector<std::pair<int, int>>> face_of_slot_;  // per (v, slot): face index, per orientation
    int euler_genus_ = 0;
};

/// Orientable embedding whose faces are the given closed walks (any
/// orientation each; they are oriented consistently here). Every edge must
/// lie on exactly two face sides. Throws std::invalid_argument otherwise.
EmbeddedGraph embedding_from_faces(int n, const std::vector<std::vector<Vertex>> &faces);

/// Dual of an orientable embedding; vertex i is face i. The dual must be simple.
EmbeddedGraph dual(const EmbeddedGraph &e);

/// Planar rotation system for K4 drawn as a triangle with a centre vertex.
EmbeddedGraph planar_k4();

/// Returns the K4-model inside {v} and the vertices v sees, for a plane
/// graph where deg(v) >= 3 and v lies in no cut-vertex or cut-pair
/// separation. The face of G - v that contained v must be a simple cycle.
KtModel visibility_wheel_k4(const EmbeddedGraph &e, Vertex v);

/// Same wheel extraction without the plane precondition; used on surfaces
/// where facewidth guarantees the simple boundary. Throws PreconditionError
/// naming the failed condition.
KtModel wheel_k4_around(const EmbeddedGraph &e, Vertex v);

/// True when some w makes {v, w} a separating pair (G connected).
bool in_cut_pair(const Graph &g, Vertex v);

}  // namespace smallminors

#endif
