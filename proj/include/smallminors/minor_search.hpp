#ifndef SMALLMINORS_MINOR_SEARCH_HPP
#define SMALLMINORS_MINOR_SEARCH_HPP

#include <optional>

#include "smallminors/graph.hpp"

namespace smallminors {

/// Exact K_t-minor test. Linear-ish for t <= 4 (forest / series-parallel
/// reduction); exhaustive branch-set assignment for t >= 5, which is only
/// accepted for graphs with at most 16 vertices.
bool has_kt_minor(const Graph &g, int t);

/// A K_t-model that uses every vertex of g, by partition search with
/// symmetry breaking. Returns nullopt when none exists. Branch sets are ids.
std::optional<KtModel> spanning_kt_model(const Graph &g, int t);

/// Some K_t-model of g (branch sets as ids), or nullopt if g has no K_t
/// minor. Works by greedy vertex deletion, edge deletion, then edge
/// contraction, keeping the minor alive at every step.
std::optional<KtModel> find_kt_model(const Graph &g, int t);

/// Graph whose vertices are the given disjoint connected groups of g, two
/// groups adjacent when some edge joins them. Vertex i of the result has id i.
Graph quotient(const Graph &g, const std::vector<VertexSet> &groups);

}  // namespace smallminors

#endif
