#include "smallminors/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <set>

namespace smallminors {

Graph::Graph(int n) : adj_(n), ids_(n) { std::iota(ids_.begin(), ids_.end(), 0); }

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    std::int64_t degree_sum = 0;
    for (auto &nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        degree_sum += static_cast<std::int64_t>(nb.size());
    }
    g.m_ = degree_sum / 2;
    return g;
}

int Graph::min_degree() const {
    int d = n() == 0 ? 0 : degree(0);
    for (Vertex v = 1; v < n(); ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n(); ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto &a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
}

std::optional<Vertex> Graph::index_of(Vertex id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return std::nullopt;
    return static_cast<Vertex>(it - ids_.begin());
}

VertexSet Graph::to_ids(std::span<const Vertex> local) const {
    VertexSet out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(ids_[v]);
    return out;
}

VertexSet Graph::to_local(std::span<const Vertex> ids) const {
    VertexSet out;
    out.reserve(ids.size());
    for (Vertex id : ids) {
        auto v = index_of(id);
        if (!v) throw std::out_of_range("vertex id " + std::to_string(id) + " not in graph");
        out.push_back(*v);
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    VertexSet keep(vertices.begin(), vertices.end());
    std::sort(keep.begin(), keep.end());
    std::vector<Vertex> local(n(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<Vertex>(i);

    Graph h;
    h.adj_.resize(keep.size());
    h.ids_.resize(keep.size());
    std::int64_t degree_sum = 0;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        h.ids_[i] = ids_[keep[i]];
        for (Vertex w : adj_[keep[i]])
            if (local[w] >= 0) h.adj_[i].push_back(local[w]);
        degree_sum += static_cast<std::int64_t>(h.adj_[i].size());
    }
    h.m_ = degree_sum / 2;
    return h;
}

Graph Graph::edge_subgraph(std::span<const Edge> kept) const {
    Graph h = from_edges(n(), kept);
    h.ids_ = ids_;
    return h;
}

Graph Graph::without(std::span<const Vertex> removed) const {
    std::vector<char> gone(n(), 0);
    for (Vertex v : removed) gone[v] = 1;
    VertexSet keep;
    for (Vertex v = 0; v < n(); ++v)
        if (!gone[v]) keep.push_back(v);
    return induced(keep);
}

std::size_t KtModel::total_size() const {
    std::size_t s = 0;
    for (const auto &b : branch_sets) s += b.size();
    return s;
}

void KtModel::normalize() {
    for (auto &b : branch_sets) std::sort(b.begin(), b.end());
}

int BfsTree::max_depth() const {
    int d = 0;
    for (int x : depth) d = std::max(d, x);
    return d;
}

int BfsTree::edge_depth(Vertex u, Vertex v) const { return std::min(depth[u], depth[v]); }

bool BfsTree::in_tree(Vertex u, Vertex v) const { return parent[u] == v || parent[v] == u; }

bool BfsTree::is_ancestor(Vertex a, Vertex b) const {
    if (depth[a] < 0 || depth[b] < 0) return false;
    while (depth[b] > depth[a]) b = parent[b];
    return a == b;
}

std::vector<Vertex> BfsTree::path_to_root(Vertex v) const {
    std::vector<Vertex> path{v};
    while (parent[v] >= 0) {
        v = parent[v];
        path.push_back(v);
    }
    return path;
}

Rational average_degree(const Graph &g) {
    if (g.n() == 0) throw std::invalid_argument("empty");
    return Rational(2 * g.m(), g.n());
}

BfsTree bfs_tree(const Graph &g, std::span<const Vertex> roots) {
    if (roots.empty() || roots.size() > 2) throw std::invalid_argument("bfs_tree: need one or two roots");
    for (Vertex r : roots)
        if (r < 0 || r >= g.n()) throw std::invalid_argument("bfs_tree: root out of range");
    if (roots.size() == 2 && !g.adjacent(roots[0], roots[1]))
        throw std::invalid_argument("bfs_tree: two roots must be adjacent");

    BfsTree t;
    t.roots.assign(roots.begin(), roots.end());
    t.parent.assign(g.n(), -1);
    t.depth.assign(g.n(), -1);
    std::deque<Vertex> queue;
    for (Vertex r : roots) {
        t.depth[r] = 0;
        queue.push_back(r);
    }
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (t.depth[w] >= 0) continue;
            t.depth[w] = t.depth[u] + 1;
            t.parent[w] = u;
            queue.push_back(w);
        }
    }
    return t;
}

BfsTree bfs_tree(const Graph &g, Vertex root) {
    Vertex r[1] = {root};
    return bfs_tree(g, r);
}

VertexSet ball(const Graph &g, Vertex v, int k) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("ball: vertex out of range");
    std::vector<int> dist(g.n(), -1);
    dist[v] = 0;
    std::deque<Vertex> queue{v};
    VertexSet out{v};
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        if (dist[u] == k) continue;
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] >= 0) continue;
            dist[w] = dist[u] + 1;
            out.push_back(w);
            queue.push_back(w);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> fundamental_cycle(const BfsTree &tree, Vertex u, Vertex v) {
    if (tree.in_tree(u, v)) throw std::invalid_argument("fundamental_cycle: edge is a tree edge");
    if (tree.depth[u] < 0 || tree.depth[v] < 0) throw std::invalid_argument("fundamental_cycle: endpoint not in tree");
    std::vector<Vertex> up_u{u}, up_v{v};
    Vertex a = u, b = v;
    while (tree.depth[a] > tree.depth[b]) up_u.push_back(a = tree.parent[a]);
    while (tree.depth[b] > tree.depth[a]) up_v.push_back(b = tree.parent[b]);
    while (a != b) {
        if (tree.parent[a] < 0 || tree.parent[b] < 0) {
            // two-root forest: both sides reached distinct adjacent roots
            if (tree.roots.size() != 2) throw std::invalid_argument("fundamental_cycle: endpoints in different trees");
            break;
        }
        up_u.push_back(a = tree.parent[a]);
        up_v.push_back(b = tree.parent[b]);
    }
    std::vector<Vertex> cycle = up_u;
    if (a == b) {
        // up_v ends with the shared vertex; skip it
        for (auto it = up_v.rbegin() + 1; it != up_v.rend(); ++it) cycle.push_back(*it);
    } else {
        for (auto it = up_v.rbegin(); it != up_v.rend(); ++it) cycle.push_back(*it);
    }
    return cycle;
}

ModelCheck validate_model(const Graph &g, const KtModel &model) {
    auto fail = [](std::string msg) { return ModelCheck{false, std::move(msg)}; };
    if (model.t < 1) return fail("t must be positive");
    if (static_cast<int>(model.branch_sets.size()) != model.t)
        return fail("expected " + std::to_string(model.t) + " branch sets, got " +
                    std::to_string(model.branch_sets.size()));

    std::vector<int> owner(g.n(), -1);
    std::vector<VertexSet> local(model.t);
    for (int i = 0; i < model.t; ++i) {
        if (model.branch_sets[i].empty()) return fail("set " + std::to_string(i) + " is empty");
        local[i] = g.to_local(model.branch_sets[i]);
        for (Vertex v : local[i]) {
            if (owner[v] >= 0)
                return fail("sets " + std::to_string(owner[v]) + "," + std::to_string(i) + " overlap at vertex " +
                            std::to_string(g.id(v)));
            owner[v] = i;
        }
    }
    for (int i = 0; i < model.t; ++i)
        if (!is_connected_subset(g, local[i])) return fail("set " + std::to_string(i) + " not connected");

    std::vector<std::vector<char>> joined(model.t, std::vector<char>(model.t, 0));
    for (int i = 0; i < model.t; ++i)
        for (Vertex v : local[i])
            for (Vertex w : g.neighbors(v))
                if (owner[w] >= 0) joined[i][owner[w]] = 1;
    for (int i = 0; i < model.t; ++i)
        for (int j = i + 1; j < model.t; ++j)
            if (!joined[i][j]) return fail("sets " + std::to_string(i) + "," + std::to_string(j) + " not adjacent");
    return {};
}

std::vector<VertexSet> connected_components(const Graph &g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<VertexSet> out;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        VertexSet c{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            for (Vertex w : g.neighbors(c[i]))
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    c.push_back(w);
                }
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    return out;
}

bool is_connected(const Graph &g) { return connected_components(g).size() <= 1; }

bool is_connected_subset(const Graph &g, std::span<const Vertex> vertices) {
    if (vertices.empty()) return false;
    std::vector<char> in(g.n(), 0), seen(g.n(), 0);
    for (Vertex v : vertices) in[v] = 1;
    std::vector<Vertex> stack{vertices[0]};
    seen[vertices[0]] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u))
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == vertices.size();
}

VertexSet cut_vertices(const Graph &g) {
    if (!is_connected(g)) throw std::invalid_argument("disconnected");
    const int n = g.n();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<std::size_t> next(n, 0);
    std::vector<Vertex> parent(n, -1);
    int timer = 0;
    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        int root_children = 0;
        std::vector<Vertex> stack{root};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Vertex u = stack.back();
            auto nb = g.neighbors(u);
            if (next[u] < nb.size()) {
                Vertex w = nb[next[u]++];
                if (disc[w] < 0) {
                    parent[w] = u;
                    disc[w] = low[w] = timer++;
                    if (u == root) ++root_children;
                    stack.push_back(w);
                } else if (w != parent[u]) {
                    low[u] = std::min(low[u], disc[w]);
                }
            } else {
                stack.pop_back();
                Vertex p = parent[u];
                if (p >= 0) {
                    low[p] = std::min(low[p], low[u]);
                    if (p != root && low[u] >= disc[p]) is_cut[p] = 1;
                }
            }
        }
        if (root_children > 1) is_cut[root] = 1;
    }
    VertexSet out;
    for (Vertex v = 0; v < n; ++v)
        if (is_cut[v]) out.push_back(v);
    return out;
}

namespace {

bool connected_without(const Graph &g, Vertex a, Vertex b) {
    const int n = g.n();
    if (n - 2 <= 1) return true;
    std::vector<char> seen(n, 0);
    seen[a] = seen[b] = 1;
    Vertex start = 0;
    while (start == a || start == b) ++start;
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n - 2;
}

}  // namespace

std::vector<Edge> cut_pairs(const Graph &g) {
    if (!is_connected(g)) throw std::invalid_argument("disconnected");
    std::vector<Edge> out;
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex w = v + 1; w < g.n(); ++w)
            if (!connected_without(g, v, w)) out.emplace_back(v, w);
    return out;
}

Separation separation_at(const Graph &g, std::span<const Vertex> cut) {
    Graph rest = g.without(cut);
    auto comps = connected_components(rest);
    if (comps.size() < 2) throw std::invalid_argument("separation_at: vertex set does not separate the graph");
    Separation s;
    s.cut.assign(cut.begin(), cut.end());
    std::sort(s.cut.begin(), s.cut.end());
    std::vector<char> first(g.n(), 0);
    for (Vertex v : comps[0]) first[*g.index_of(rest.id(v))] = 1;
    for (Vertex v = 0; v < g.n(); ++v) {
        bool in_cut = std::binary_search(s.cut.begin(), s.cut.end(), v);
        if (in_cut || first[v]) s.side1.push_back(v);
        if (in_cut || !first[v]) s.side2.push_back(v);
    }
    return s;
}

bool has_k4_minor(const Graph &g) {
    if (g.n() >= 2 && g.m() > 2 * static_cast<std::int64_t>(g.n()) - 3) return true;
    std::vector<std::set<Vertex>> adj(g.n());
    for (Vertex v = 0; v < g.n(); ++v) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
    std::vector<char> alive(g.n(), 1);
    std::vector<Vertex> work;
    for (Vertex v = 0; v < g.n(); ++v) work.push_back(v);
    int remaining = g.n();
    while (!work.empty()) {
        Vertex v = work.back();
        work.pop_back();
        if (!alive[v] || adj[v].size() > 2) continue;
        std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
        for (Vertex w : nb) adj[w].erase(v);
        if (nb.size() == 2) {
            // suppress v: its two neighbours become adjacent (parallel edges merge)
            adj[nb[0]].insert(nb[1]);
            adj[nb[1]].insert(nb[0]);
        }
        adj[v].clear();
        alive[v] = 0;
        --remaining;
        for (Vertex w : nb) work.push_back(w);
    }
    return remaining > 0;
}

int diameter(const Graph &g) {
    int best = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        BfsTree t = bfs_tree(g, v);
        for (int d : t.depth) {
            if (d < 0) throw std::invalid_argument("diameter: disconnected graph");
            best = std::max(best, d);
        }
    }
    return best;
}

VertexSet densest_component(const Graph &g) {
    auto comps = connected_components(g);
    if (comps.empty()) throw std::invalid_argument("empty");
    VertexSet best;
    Rational best_ratio(-1);
    for (auto &c : comps) {
        std::int64_t deg = 0;
        for (Vertex v : c) deg += g.degree(v);
        Rational ratio(deg / 2, static_cast<std::int64_t>(c.size()));
        // components come in order of their lowest vertex, so strict > keeps ties low
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best = c;
        }
    }
    return best;
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

}  // namespace smallminors
