#include "smallminors/minor_search.hpp"

#include <algorithm>
#include <functional>

namespace smallminors {

namespace {

constexpr int kExhaustiveLimit = 16;

bool is_forest(const Graph &g) {
    return g.m() == static_cast<std::int64_t>(g.n()) - static_cast<std::int64_t>(connected_components(g).size());
}

// Assignment search: label[v] in {-1 (unused), 0..t-1}. New labels are opened
// in increasing order so each unordered partition is visited once.
class AssignmentSearch {
public:
    AssignmentSearch(const Graph &g, int t, bool allow_unused) : g_(g), t_(t), allow_unused_(allow_unused) {
        label_.assign(g.n(), -2);
        size_.assign(t, 0);
    }

    std::optional<KtModel> run() {
        if (g_.n() < t_) return std::nullopt;
        if (recurse(0, 0)) {
            KtModel model{t_, std::vector<VertexSet>(t_)};
            for (Vertex v = 0; v < g_.n(); ++v)
                if (label_[v] >= 0) model.branch_sets[label_[v]].push_back(g_.id(v));
            return model;
        }
        return std::nullopt;
    }

private:
    bool complete() const {
        std::vector<VertexSet> sets(t_);
        for (Vertex v = 0; v < g_.n(); ++v)
            if (label_[v] >= 0) sets[label_[v]].push_back(v);
        for (auto &s : sets)
            if (s.empty() || !is_connected_subset(g_, s)) return false;
        std::vector<std::vector<char>> joined(t_, std::vector<char>(t_, 0));
        for (Vertex v = 0; v < g_.n(); ++v) {
            if (label_[v] < 0) continue;
            for (Vertex w : g_.neighbors(v))
                if (label_[w] >= 0) joined[label_[v]][label_[w]] = 1;
        }
        for (int i = 0; i < t_; ++i)
            for (int j = i + 1; j < t_; ++j)
                if (!joined[i][j]) return false;
        return true;
    }

    bool recurse(Vertex v, int opened) {
        if (opened + (g_.n() - v) < t_) return false;
        if (v == g_.n()) return opened == t_ && complete();
        for (int l = 0; l < std::min(opened + 1, t_); ++l) {
            label_[v] = l;
            ++size_[l];
            if (recurse(v + 1, std::max(opened, l + 1))) return true;
            --size_[l];
        }
        if (allow_unused_) {
            label_[v] = -1;
            if (recurse(v + 1, opened)) return true;
        }
        label_[v] = -2;
        return false;
    }

    const Graph &g_;
    int t_;
    bool allow_unused_;
    std::vector<int> label_;
    std::vector<int> size_;
};

}  // namespace

Graph quotient(const Graph &g, const std::vector<VertexSet> &groups) {
    std::vector<int> owner(g.n(), -1);
    for (std::size_t i = 0; i < groups.size(); ++i)
        for (Vertex v : groups[i]) owner[v] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v]) edges.emplace_back(owner[u], owner[v]);
    return Graph::from_edges(static_cast<int>(groups.size()), edges);
}

bool has_kt_minor(const Graph &g, int t) {
    if (t <= 0) return true;
    if (t == 1) return g.n() >= 1;
    if (t == 2) return g.m() >= 1;
    if (t == 3) return !is_forest(g);
    if (t == 4) return has_k4_minor(g);
    if (g.n() > kExhaustiveLimit) throw std::invalid_argument("has_kt_minor: t >= 5 needs at most 16 vertices");
    // Each component separately; a K_t-model lives inside one component.
    for (const auto &comp : connected_components(g)) {
        if (static_cast<int>(comp.size()) < t) continue;
        Graph h = g.induced(comp);
        if (h.m() < static_cast<std::int64_t>(t) * (t - 1) / 2) continue;
        if (AssignmentSearch(h, t, true).run()) return true;
    }
    return false;
}

std::optional<KtModel> spanning_kt_model(const Graph &g, int t) {
    if (t < 1 || g.n() < t) return std::nullopt;
    if (g.m() < static_cast<std::int64_t>(t) * (t - 1) / 2) return std::nullopt;
    if (!is_connected(g)) return std::nullopt;
    return AssignmentSearch(g, t, false).run();
}

std::optional<KtModel> find_kt_model(const Graph &g, int t) {
    if (t < 1) throw std::invalid_argument("find_kt_model: t must be positive");
    if (!has_kt_minor(g, t)) return std::nullopt;

    // Shrink to a vertex-minimal subgraph, highest ids dropped first.
    VertexSet keep(g.n());
    for (Vertex v = 0; v < g.n(); ++v) keep[v] = v;
    for (Vertex v = g.n() - 1; v >= 0 && static_cast<int>(keep.size()) > t; --v) {
        VertexSet trial;
        trial.reserve(keep.size());
        for (Vertex w : keep)
            if (w != v) trial.push_back(w);
        if (has_kt_minor(g.induced(trial), t)) keep = std::move(trial);
    }
    Graph h = g.induced(keep);

    // Edge-minimal.
    std::vector<Edge> edges = h.edges();
    for (std::size_t i = edges.size(); i-- > 0;) {
        std::vector<Edge> trial = edges;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (has_kt_minor(h.edge_subgraph(trial), t)) edges = std::move(trial);
    }
    Graph minimal = h.edge_subgraph(edges);

    // Contract down to t vertices.
    std::vector<VertexSet> groups(minimal.n());
    for (Vertex v = 0; v < minimal.n(); ++v) groups[v] = {v};
    while (static_cast<int>(groups.size()) > t) {
        Graph q = quotient(minimal, groups);
        bool contracted = false;
        for (auto [a, b] : q.edges()) {
            std::vector<VertexSet> trial;
            trial.reserve(groups.size() - 1);
            for (int i = 0; i < static_cast<int>(groups.size()); ++i) {
                if (i == b) continue;
                trial.push_back(groups[i]);
                if (i == a) trial.back().insert(trial.back().end(), groups[b].begin(), groups[b].end());
            }
            if (has_kt_minor(quotient(minimal, trial), t)) {
                groups = std::move(trial);
                contracted = true;
                break;
            }
        }
        if (!contracted) {
            // no single contraction keeps the minor: drop isolated leftovers
            Graph q2 = quotient(minimal, groups);
            bool dropped = false;
            for (Vertex i = 0; i < q2.n(); ++i) {
                if (q2.degree(i) == 0) {
                    groups.erase(groups.begin() + i);
                    dropped = true;
                    break;
                }
            }
            if (!dropped) throw InvariantError("find_kt_model: contraction stalled");
        }
    }

    KtModel model{t, {}};
    for (auto &grp : groups) {
        VertexSet ids = minimal.to_ids(grp);
        std::sort(ids.begin(), ids.end());
        model.branch_sets.push_back(std::move(ids));
    }
    return model;
}

}  // namespace smallminors
