#include "smallminors/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <limits>
#include <set>

#include "smallminors/minor_search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace smallminors {

namespace {

int girth_from(const Graph &g, Vertex root, int best) {
    std::vector<int> dist(g.n(), -1);
    std::vector<Vertex> parent(g.n(), -1);
    std::deque<Vertex> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        if (2 * dist[u] + 1 >= best) break;
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            } else if (w != parent[u]) {
                best = std::min(best, dist[u] + dist[w] + 1);
            }
        }
    }
    return best;
}

// K_t-minor test on an induced subgraph given by bit masks (at most 64 vertices).
bool mask_has_kt_minor(const std::vector<std::uint64_t> &adj_in, int t) {
    const int s = static_cast<int>(adj_in.size());
    int edges2 = 0;
    for (auto a : adj_in) edges2 += std::popcount(a);
    const int m = edges2 / 2;
    if (t <= 1) return s >= 1;
    if (t == 2) return m >= 1;
    if (t == 3) return m >= s;  // connected set: a cycle iff m >= n
    if (t == 4) {
        if (m > 2 * s - 3) return true;
        std::vector<std::uint64_t> adj = adj_in;
        std::uint64_t alive = s == 64 ? ~0ULL : ((1ULL << s) - 1);
        bool changed = true;
        while (changed && alive) {
            changed = false;
            for (int v = 0; v < s; ++v) {
                if (!(alive >> v & 1)) continue;
                std::uint64_t nb = adj[v] & alive;
                int deg = std::popcount(nb);
                if (deg > 2) continue;
                alive &= ~(1ULL << v);
                if (deg == 2) {
                    int a = std::countr_zero(nb);
                    int b = std::countr_zero(nb & (nb - 1));
                    adj[a] |= 1ULL << b;
                    adj[b] |= 1ULL << a;
                }
                changed = true;
            }
        }
        return alive != 0;
    }
    return false;  // callers route t >= 5 elsewhere
}

class SubsetEnumerator {
public:
    SubsetEnumerator(const Graph &g, Vertex anchor, int size,
                     const std::function<bool(std::span<const Vertex>)> &visit)
        : g_(g), anchor_(anchor), size_(size), visit_(visit), cover_(g.n(), 0) {}

    bool run() {
        if (size_ < 1) return false;
        add(anchor_);
        VertexSet ext;
        for (Vertex w : g_.neighbors(anchor_))
            if (w > anchor_) ext.push_back(w);
        bool stop = extend(ext);
        remove(anchor_);
        return stop;
    }

private:
    void add(Vertex v) {
        current_.push_back(v);
        ++cover_[v];
        for (Vertex w : g_.neighbors(v)) ++cover_[w];
    }
    void remove(Vertex v) {
        current_.pop_back();
        --cover_[v];
        for (Vertex w : g_.neighbors(v)) --cover_[w];
    }

    bool extend(VertexSet ext) {
        if (static_cast<int>(current_.size()) == size_) return visit_(current_);
        while (!ext.empty()) {
            Vertex w = ext.back();
            ext.pop_back();
            VertexSet next = ext;
            for (Vertex u : g_.neighbors(w))
                if (u > anchor_ && cover_[u] == 0) next.push_back(u);
            add(w);
            bool stop = extend(std::move(next));
            remove(w);
            if (stop) return true;
        }
        return false;
    }

    const Graph &g_;
    Vertex anchor_;
    int size_;
    const std::function<bool(std::span<const Vertex>)> &visit_;
    std::vector<int> cover_;  // closed-neighbourhood hits from the current set
    VertexSet current_;
};

struct AnchorHit {
    bool found = false;
    VertexSet subset;
    std::uint64_t examined = 0;
};

bool subset_has_minor(const Graph &g, std::span<const Vertex> subset, int t) {
    if (t >= 5 || subset.size() > 64) return has_kt_minor(g.induced(subset), t);
    std::vector<std::uint64_t> adj(subset.size(), 0);
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            if (g.adjacent(subset[i], subset[j])) {
                adj[i] |= 1ULL << j;
                adj[j] |= 1ULL << i;
            }
    return mask_has_kt_minor(adj, t);
}

AnchorHit search_anchor(const Graph &g, Vertex anchor, int size, int t) {
    AnchorHit hit;
    for_each_connected_subset(g, anchor, size, [&](std::span<const Vertex> s) {
        ++hit.examined;
        if (subset_has_minor(g, s, t)) {
            hit.found = true;
            hit.subset.assign(s.begin(), s.end());
            return true;
        }
        return false;
    });
    return hit;
}

OracleResult finish(const Graph &g, int t, int size, VertexSet subset, OracleResult result) {
    result.min_size = static_cast<std::size_t>(size);
    Graph h = g.induced(subset);
    auto model = spanning_kt_model(h, t);
    if (!model) throw InvariantError("oracle: minor-bearing subset without a spanning model");
    result.witness = std::move(*model);
    return result;
}

template <bool Parallel>
OracleResult min_kt_model_impl(const Graph &g, int t, int cap) {
    if (t < 1) throw std::invalid_argument("oracle: t must be positive");
    OracleResult result;
    result.cap = cap;
    const int n = g.n();
    for (int size = t; size <= std::min(cap, n); ++size) {
        std::vector<AnchorHit> hits(n);
        if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
            for (int a = 0; a < n; ++a) hits[a] = search_anchor(g, a, size, t);
        } else {
            for (int a = 0; a < n; ++a) {
                hits[a] = search_anchor(g, a, size, t);
                if (hits[a].found) break;
            }
        }
        for (int a = 0; a < n; ++a) {
            result.subsets_examined += hits[a].examined;
            if (hits[a].found) {
                if constexpr (Parallel) {
                    // count only what the serial scan would have touched
                    result.subsets_examined = 0;
                    for (int b = 0; b <= a; ++b) result.subsets_examined += hits[b].examined;
                }
                return finish(g, t, size, hits[a].subset, std::move(result));
            }
        }
    }
    return result;
}

// Sum over a multiset with an upper-bound prune on the hypothesis side.
template <typename Hypothesis, typename Conclusion>
void sweep_faces(int d, int f_max, const Hypothesis &threshold, const Conclusion &limit, std::vector<int> &faces,
                 Rational partial, int min_face, SweepResult &out, const Rational &alpha) {
    const int placed = static_cast<int>(faces.size());
    if (!out.pass) return;
    if (placed == d) {
        if (partial > threshold) {
            ++out.hypothesis_instances;
            std::int64_t excess = 0;
            for (int f : faces) excess += f - 2;
            if (excess > limit) {
                out.pass = false;
                out.alpha = alpha;
                out.faces = faces;
            }
        }
        return;
    }
    for (int f = min_face; f <= f_max; ++f) {
        // remaining faces are all >= f, so the sum can grow by at most (d - placed)/f
        Rational best_case = partial + Rational(d - placed, f);
        if (!(best_case > threshold)) break;
        faces.push_back(f);
        sweep_faces(d, f_max, threshold, limit, faces, partial + Rational(1, f), f, out, alpha);
        faces.pop_back();
        if (!out.pass) return;
    }
}

enum class Variant { a1, a2 };

Rational hypothesis_threshold(Variant v, const Rational &alpha, int d) {
    Rational c = Rational(1, 3) + Rational(1) / alpha;
    return v == Variant::a1 ? c * Rational(d) - Rational(1, 3) : c * Rational(d - 1);
}

std::int64_t conclusion_limit(Variant v, const Rational &alpha) {
    return (v == Variant::a1 ? (alpha / Rational(3)).ceil() : (alpha / Rational(2)).ceil()) - 1;
}

SweepResult sweep(Variant v, const Rational &alpha_max, int d_max, int f_max, bool parallel) {
    const std::int64_t steps = (alpha_max * Rational(2)).floor();
    std::vector<SweepResult> per_alpha(static_cast<std::size_t>(std::max<std::int64_t>(steps, 0)));
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (std::int64_t s = 1; s <= steps; ++s) {
        Rational alpha(s, 2);
        SweepResult &r = per_alpha[s - 1];
        for (int d = 3; d <= d_max && r.pass; ++d) {
            std::vector<int> faces;
            sweep_faces(d, f_max, hypothesis_threshold(v, alpha, d), conclusion_limit(v, alpha), faces, Rational(0), 3,
                        r, alpha);
        }
    }
    SweepResult out;
    out.alphas = static_cast<std::uint64_t>(per_alpha.size());
    for (auto &r : per_alpha) {
        out.hypothesis_instances += r.hypothesis_instances;
        if (!r.pass && out.pass) {
            out.pass = false;
            out.alpha = r.alpha;
            out.faces = r.faces;
        }
    }
    return out;
}

TechnicalInstance evaluate(Variant v, const Rational &alpha, std::span<const int> faces) {
    Rational sum(0);
    std::int64_t excess = 0;
    for (int f : faces) {
        if (f < 3) throw std::invalid_argument("face lengths must be at least 3");
        sum += Rational(1, f);
        excess += f - 2;
    }
    TechnicalInstance out;
    out.hypothesis = sum > hypothesis_threshold(v, alpha, static_cast<int>(faces.size()));
    out.conclusion = excess <= conclusion_limit(v, alpha);
    return out;
}

}  // namespace

std::optional<int> girth_exact(const Graph &g) {
    int best = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < g.n(); ++v) best = girth_from(g, v, best);
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::optional<int> girth_exact_parallel(const Graph &g) {
    int best = std::numeric_limits<int>::max();
#pragma omp parallel for reduction(min : best) schedule(dynamic, 64)
    for (Vertex v = 0; v < g.n(); ++v) best = std::min(best, girth_from(g, v, best));
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

bool for_each_connected_subset(const Graph &g, Vertex anchor, int size,
                               const std::function<bool(std::span<const Vertex>)> &visit) {
    return SubsetEnumerator(g, anchor, size, visit).run();
}

std::vector<std::uint64_t> count_connected_subsets(const Graph &g, int max_size) {
    std::vector<std::uint64_t> counts(max_size + 1, 0);
    for (int s = 1; s <= max_size; ++s)
        for (Vertex a = 0; a < g.n(); ++a)
            for_each_connected_subset(g, a, s, [&](std::span<const Vertex>) {
                ++counts[s];
                return false;
            });
    return counts;
}

namespace {

// smallest edge code over vertex orders sorted by decreasing degree
std::uint32_t canonical_code(int n, const std::array<std::uint8_t, 8> &adj) {
    std::array<int, 8> deg{}, perm{};
    for (int v = 0; v < n; ++v) {
        deg[v] = std::popcount(static_cast<unsigned>(adj[v]));
        perm[v] = v;
    }
    std::sort(perm.begin(), perm.begin() + n);
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    do {
        bool sorted = true;
        for (int i = 0; i + 1 < n && sorted; ++i) sorted = deg[perm[i]] >= deg[perm[i + 1]];
        if (!sorted) continue;
        std::uint32_t code = 0;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (adj[perm[i]] >> perm[j] & 1) code |= 1u << bit;
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return best;
}

Graph decode(int n, std::uint32_t code) {
    std::vector<Edge> e;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (code >> bit & 1u) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

}  // namespace

std::vector<Graph> graph_catalog(int n, bool connected_only) {
    if (n < 1 || n > 7) throw std::invalid_argument("graph catalog covers 1..7 vertices");
    std::set<std::uint32_t> level = {0};
    for (int k = 2; k <= n; ++k) {
        std::set<std::uint32_t> next;
        for (std::uint32_t code : level) {
            Graph g = decode(k - 1, code);
            for (std::uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
                std::array<std::uint8_t, 8> adj{};
                for (auto [u, v] : g.edges()) {
                    adj[u] |= static_cast<std::uint8_t>(1u << v);
                    adj[v] |= static_cast<std::uint8_t>(1u << u);
                }
                for (int u = 0; u < k - 1; ++u)
                    if (nb >> u & 1u) {
                        adj[u] |= static_cast<std::uint8_t>(1u << (k - 1));
                        adj[k - 1] |= static_cast<std::uint8_t>(1u << u);
                    }
                next.insert(canonical_code(k, adj));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (std::uint32_t code : level) {
        Graph g = decode(n, code);
        if (!connected_only || is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

OracleResult min_kt_model(const Graph &g, int t, int cap) { return min_kt_model_impl<false>(g, t, cap); }

OracleResult min_kt_model_parallel(const Graph &g, int t, int cap) { return min_kt_model_impl<true>(g, t, cap); }

std::optional<std::size_t> min_kt_model_by_contraction(const Graph &g, int t) {
    const int n = g.n();
    if (n > 10) throw std::invalid_argument("contraction oracle: at most 10 vertices");
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    auto neighbourhood = [&](std::uint32_t group) {
        std::uint32_t out = 0;
        for (int v = 0; v < n; ++v)
            if (group >> v & 1) out |= adj[v];
        return out & ~group;
    };

    std::optional<std::size_t> best;
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::vector<std::uint32_t>> stack;
    std::vector<std::uint32_t> start;
    for (int v = 0; v < n; ++v) start.push_back(1u << v);
    stack.push_back(start);
    seen.insert(start);
    while (!stack.empty()) {
        std::vector<std::uint32_t> groups = std::move(stack.back());
        stack.pop_back();
        const int k = static_cast<int>(groups.size());
        if (k < t) continue;
        if (k == t) {
            bool complete = true;
            for (int i = 0; i < k && complete; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (!(neighbourhood(groups[i]) & groups[j])) {
                        complete = false;
                        break;
                    }
            if (complete) {
                std::size_t size = 0;
                for (auto grp : groups) size += static_cast<std::size_t>(std::popcount(grp));
                if (!best || size < *best) best = size;
            }
        }
        auto push = [&](std::vector<std::uint32_t> next) {
            std::sort(next.begin(), next.end());
            if (seen.insert(next).second) stack.push_back(std::move(next));
        };
        for (int i = 0; i < k; ++i) {
            std::vector<std::uint32_t> next;
            for (int j = 0; j < k; ++j)
                if (j != i) next.push_back(groups[j]);
            push(std::move(next));
        }
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                if (!(neighbourhood(groups[i]) & groups[j])) continue;
                std::vector<std::uint32_t> next;
                for (int l = 0; l < k; ++l)
                    if (l != i && l != j) next.push_back(groups[l]);
                next.push_back(groups[i] | groups[j]);
                push(std::move(next));
            }
    }
    return best;
}

TechnicalInstance face_inequality_instance(const Rational &alpha, std::span<const int> faces) {
    return evaluate(Variant::a1, alpha, faces);
}

TechnicalInstance face_inequality_surface_instance(const Rational &alpha, std::span<const int> faces) {
    return evaluate(Variant::a2, alpha, faces);
}

SweepResult check_face_inequality(const Rational &alpha_max, int d_max, int f_max) {
    return sweep(Variant::a1, alpha_max, d_max, f_max, false);
}

SweepResult check_face_inequality_surface(const Rational &alpha_max, int d_max, int f_max) {
    return sweep(Variant::a2, alpha_max, d_max, f_max, false);
}

SweepResult check_face_inequality_parallel(const Rational &alpha_max, int d_max, int f_max) {
    return sweep(Variant::a1, alpha_max, d_max, f_max, true);
}

SweepResult check_face_inequality_surface_parallel(const Rational &alpha_max, int d_max, int f_max) {
    return sweep(Variant::a2, alpha_max, d_max, f_max, true);
}

}  // namespace smallminors
