#ifndef SMALLMINORS_ORACLE_HPP
#define SMALLMINORS_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "smallminors/graph.hpp"

namespace smallminors {

/// Exact girth by BFS from every vertex; nullopt for forests.
std::optional<int> girth_exact(const Graph &g);
/// Same result, roots distributed over OpenMP threads.
std::optional<int> girth_exact_parallel(const Graph &g);

/// Calls visit for every connected vertex set of exactly `size` vertices
/// whose lowest vertex is `anchor` (local indices, unsorted). Each set is
/// produced once. Returning true from visit stops the enumeration; the
/// function then returns true.
bool for_each_connected_subset(const Graph &g, Vertex anchor, int size,
                               const std::function<bool(std::span<const Vertex>)> &visit);

/// Number of connected vertex sets of each size 1..max_size.
std::vector<std::uint64_t> count_connected_subsets(const Graph &g, int max_size);

struct OracleResult {
    std::optional<std::size_t> min_size;  // nullopt: no model of size <= cap
    std::optional<KtModel> witness;       // ids of g
    std::uint64_t subsets_examined = 0;
    int cap = 0;
};

constexpr int kDefaultOracleCap = 12;

/// Minimum total size of a K_t-model with at most `cap` vertices, by
/// enumerating connected vertex sets in ascending size.
OracleResult min_kt_model(const Graph &g, int t, int cap = kDefaultOracleCap);
/// Same search with anchors spread over OpenMP threads; identical result.
OracleResult min_kt_model_parallel(const Graph &g, int t, int cap = kDefaultOracleCap);

/// Independent second oracle: explores every sequence of vertex-group
/// deletions and contractions from the singleton partition. Only for graphs
/// with at most 10 vertices.
std::optional<std::size_t> min_kt_model_by_contraction(const Graph &g, int t);

/// One representative per isomorphism class of graphs on n <= 7 vertices,
/// optionally only the connected ones.
std::vector<Graph> graph_catalog(int n, bool connected_only);

struct TechnicalInstance {
    bool hypothesis = false;
    bool conclusion = false;
};

/// Evaluates one instance of the face-length inequality used by the
/// (4+eps) visibility scan: sum 1/f_i > (1/3 + 1/alpha) d - 1/3 implies
/// sum (f_i - 2) <= ceil(alpha/3) - 1.
TechnicalInstance face_inequality_instance(const Rational &alpha, std::span<const int> faces);
/// The surface variant: sum 1/f_i > (1/3 + 1/alpha)(d - 1) implies
/// sum (f_i - 2) <= ceil(alpha/2) - 1.
TechnicalInstance face_inequality_surface_instance(const Rational &alpha, std::span<const int> faces);

struct SweepResult {
    bool pass = true;
    std::optional<Rational> alpha;           // counterexample, when !pass
    std::vector<int> faces;
    std::uint64_t hypothesis_instances = 0;  // tuples satisfying the hypothesis
    std::uint64_t alphas = 0;
};

/// Exhaustive sweep over alpha in {1/2, 1, 3/2, ..., alpha_max}, 3 <= d <= d_max
/// and non-decreasing face lengths 3 <= f_i <= f_max.
SweepResult check_face_inequality(const Rational &alpha_max, int d_max, int f_max);
SweepResult check_face_inequality_surface(const Rational &alpha_max, int d_max, int f_max);
/// Alphas spread over OpenMP threads; identical result.
SweepResult check_face_inequality_parallel(const Rational &alpha_max, int d_max, int f_max);
SweepResult check_face_inequality_surface_parallel(const Rational &alpha_max, int d_max, int f_max);

}  // namespace smallminors

#endif
