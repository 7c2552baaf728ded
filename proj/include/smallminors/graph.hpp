#ifndef SMALLMINORS_GRAPH_HPP
#define SMALLMINORS_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "smallminors/rational.hpp"

namespace smallminors {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;

/// An input did not meet a documented precondition (density, degree, genus...).
/// The message names the violated condition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal invariant the theory guarantees did not hold; signals a bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Simple undirected graph with sorted adjacency lists.
///
/// Every vertex carries a stable id. Graphs built from an edge list use ids
/// 0..n-1; induced and edge subgraphs inherit the ids of the vertices they
/// keep, and keep them in ascending order, so "lowest local index" and
/// "lowest id" always agree.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Builds a graph on vertices 0..n-1. Duplicate edges are merged; self
    /// loops and out-of-range endpoints throw std::invalid_argument.
    static Graph from_edges(int n, std::span<const Edge> edges);

    int n() const { return static_cast<int>(adj_.size()); }
    std::int64_t m() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int min_degree() const;
    int max_degree() const;
    bool adjacent(Vertex u, Vertex v) const;

    Vertex id(Vertex v) const { return ids_[v]; }
    std::span<const Vertex> ids() const { return ids_; }
    /// Local index of a vertex id, if present.
    std::optional<Vertex> index_of(Vertex id) const;
    /// Maps local indices to ids.
    VertexSet to_ids(std::span<const Vertex> local) const;
    /// Maps ids to local indices; throws std::out_of_range on an unknown id.
    VertexSet to_local(std::span<const Vertex> ids) const;

    /// All edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    /// Subgraph induced by the given local vertices (any order, no duplicates).
    Graph induced(std::span<const Vertex> vertices) const;
    /// Spanning subgraph keeping every vertex and only the listed edges.
    Graph edge_subgraph(std::span<const Edge> kept) const;
    /// Induced subgraph on all vertices except the given ones.
    Graph without(std::span<const Vertex> removed) const;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Vertex> ids_;
    std::int64_t m_ = 0;
};

/// t disjoint connected branch sets, pairwise joined by an edge. Entries are
/// vertex ids of the graph the model lives in.
struct KtModel {
    int t = 0;
    std::vector<VertexSet> branch_sets;

    std::size_t total_size() const;
    /// Sorts each branch set; the order of the sets is left alone.
    void normalize();
};

/// Rooted BFS forest from one vertex or from an adjacent pair.
struct BfsTree {
    std::vector<Vertex> roots;
    std::vector<Vertex> parent;  // -1 for roots and unreachable vertices
    std::vector<int> depth;      // -1 for unreachable vertices

    int max_depth() const;
    int edge_depth(Vertex u, Vertex v) const;
    bool in_tree(Vertex u, Vertex v) const;
    /// True when a lies on the tree path from b to its root (a == b counts).
    bool is_ancestor(Vertex a, Vertex b) const;
    /// Vertices from v up to and including its root.
    std::vector<Vertex> path_to_root(Vertex v) const;
};

struct Separation {
    VertexSet side1;
    VertexSet side2;
    VertexSet cut;
};

struct ModelCheck {
    bool ok = true;
    std::string violation;
    explicit operator bool() const { return ok; }
};

/// 2m/n exactly. Throws std::invalid_argument("empty") for n = 0.
Rational average_degree(const Graph &g);

BfsTree bfs_tree(const Graph &g, std::span<const Vertex> roots);
BfsTree bfs_tree(const Graph &g, Vertex root);

/// Vertices within distance k of v, ascending.
VertexSet ball(const Graph &g, Vertex v, int k);

/// Vertex sequence of the unique cycle in tree + (u, v); starts at u, ends at v.
std::vector<Vertex> fundamental_cycle(const BfsTree &tree, Vertex u, Vertex v);

/// Checks the model definition inside g. Throws std::out_of_range when a
/// branch set names an id that is not in g.
ModelCheck validate_model(const Graph &g, const KtModel &model);

std::vector<VertexSet> connected_components(const Graph &g);
bool is_connected(const Graph &g);
/// Connectivity of the subgraph induced by the given local vertices.
bool is_connected_subset(const Graph &g, std::span<const Vertex> vertices);

/// Articulation points (local indices, ascending). Requires a connected graph.
VertexSet cut_vertices(const Graph &g);
/// All pairs {v, w} (v < w) whose removal disconnects g, by brute force.
std::vector<Edge> cut_pairs(const Graph &g);
/// The separation of order |cut| obtained by splitting g - cut at its first
/// component (the one containing the lowest vertex).
Separation separation_at(const Graph &g, std::span<const Vertex> cut);

/// Exact K4-minor test by series-parallel reduction.
bool has_k4_minor(const Graph &g);

/// Eccentricity-based diameter of a connected graph (BFS from every vertex).
int diameter(const Graph &g);

/// Component with the largest m/n, ties to the lowest contained vertex.
VertexSet densest_component(const Graph &g);

/// Path P_n, cycle C_n and complete graph K_n on vertices 0..n-1.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

}  // namespace smallminors

#endif
