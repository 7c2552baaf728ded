#include "smallminors/embedded.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <tuple>
#include <string>

namespace smallminors {

bool Face::is_simple_cycle() const {
    if (walk.size() < 3) return false;
    std::vector<Vertex> s = walk;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

EmbeddedGraph::EmbeddedGraph(Graph g, std::vector<std::vector<Vertex>> rotation, std::vector<std::vector<int>> signs)
    : graph_(std::move(g)), rotation_(std::move(rotation)), signs_(std::move(signs)) {
    const int n = graph_.n();
    if (n == 0) throw std::invalid_argument("embedding of the empty graph");
    if (static_cast<int>(rotation_.size()) != n) throw std::invalid_argument("rotation system size differs from vertex count");
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> r = rotation_[v];
        std::sort(r.begin(), r.end());
        auto nb = graph_.neighbors(v);
        if (!std::equal(r.begin(), r.end(), nb.begin(), nb.end()))
            throw std::invalid_argument("rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbours");
    }
    if (signs_.empty()) {
        signs_.resize(n);
        for (Vertex v = 0; v < n; ++v) signs_[v].assign(rotation_[v].size(), 1);
    }
    if (static_cast<int>(signs_.size()) != n) throw std::invalid_argument("signature size differs from vertex count");
    for (Vertex v = 0; v < n; ++v) {
        if (signs_[v].size() != rotation_[v].size()) throw std::invalid_argument("signature shape differs from rotation");
        for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
            int s = signs_[v][i];
            if (s != 1 && s != -1) throw std::invalid_argument("edge sign must be +1 or -1");
        }
    }
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
            Vertex w = rotation_[v][i];
            if (signs_[w][slot(w, v)] != signs_[v][i]) throw std::invalid_argument("edge signs are not symmetric");
        }
    if (!is_connected(graph_)) throw PreconditionError("embedded graph must be connected");
    trace();
}

std::size_t EmbeddedGraph::slot(Vertex v, Vertex w) const {
    const auto &r = rotation_[v];
    auto it = std::find(r.begin(), r.end(), w);
    if (it == r.end()) throw std::out_of_range("vertices are not adjacent");
    return static_cast<std::size_t>(it - r.begin());
}

int EmbeddedGraph::edge_sign(Vertex u, Vertex v) const { return signs_[u][slot(u, v)]; }

bool EmbeddedGraph::orientable_signs() const {
    for (const auto &row : signs_)
        for (int s : row)
            if (s < 0) return false;
    return true;
}

void EmbeddedGraph::trace() {
    const int n = graph_.n();
    std::vector<std::size_t> offset(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) offset[v + 1] = offset[v] + rotation_[v].size();
    const std::size_t darts = offset[n];
    // state = 2 * dart + (orientation == -1)
    std::vector<Vertex> owner(darts);
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t i = offset[v]; i < offset[v + 1]; ++i) owner[i] = v;
    // opposite slot of every dart
    std::vector<std::size_t> twin(darts);
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
            Vertex w = rotation_[v][i];
            twin[offset[v] + i] = offset[w] + slot(w, v);
        }

    auto split = [&](std::size_t st) {
        std::size_t d = st / 2;
        Vertex v = owner[d];
        return std::tuple<Vertex, std::size_t, int>(v, d - offset[v], (st & 1) ? -1 : 1);
    };
    auto step = [&](std::size_t st) {
        auto [v, i, s] = split(st);
        int s2 = s * signs_[v][i];
        std::size_t td = twin[offset[v] + i];
        Vertex w = owner[td];
        std::size_t j = td - offset[w];
        std::size_t deg = rotation_[w].size();
        std::size_t nj = s2 > 0 ? (j + 1) % deg : (j + deg - 1) % deg;
        return 2 * (offset[w] + nj) + (s2 < 0 ? 1 : 0);
    };
    auto reverse = [&](std::size_t st) {
        auto [v, i, s] = split(st);
        int r = -s * signs_[v][i];
        return 2 * twin[offset[v] + i] + (r < 0 ? 1 : 0);
    };

    faces_.clear();
    face_of_slot_.assign(n, {});
    for (Vertex v = 0; v < n; ++v) face_of_slot_[v].assign(rotation_[v].size(), {-1, -1});
    std::vector<char> used(2 * darts, 0);
    auto record = [&](std::size_t st, int f) {
        auto [v, i, s] = split(st);
        (s > 0 ? face_of_slot_[v][i].first : face_of_slot_[v][i].second) = f;
    };
    std::size_t total = 0;
    // positive states first, so orientable embeddings get consistently oriented walks
    for (std::size_t idx = 0; idx < 2 * darts; ++idx) {
        std::size_t start = idx < darts ? 2 * idx : 2 * (idx - darts) + 1;
        if (used[start]) continue;
        int f = static_cast<int>(faces_.size());
        Face face;
        std::size_t st = start;
        do {
            if (used[st]) throw InvariantError("face tracing revisited a side");
            used[st] = 1;
            std::size_t rv = reverse(st);
            used[rv] = 1;
            record(st, f);
            record(rv, f);
            face.walk.push_back(std::get<0>(split(st)));
            st = step(st);
        } while (st != start);
        total += face.walk.size();
        faces_.push_back(std::move(face));
    }
    if (darts == 0) faces_.push_back(Face{});
    if (total != darts) throw InvariantError("face lengths do not sum to 2|E|");
    std::int64_t g = 2 - n + graph_.m() - static_cast<std::int64_t>(faces_.size());
    if (g < 0 || g > graph_.m() - n + 1) throw InvariantError("Euler genus out of range: " + std::to_string(g));
    euler_genus_ = static_cast<int>(g);
}

std::vector<int> EmbeddedGraph::faces_at(Vertex v) const {
    std::vector<int> out;
    for (std::size_t f = 0; f < faces_.size(); ++f)
        for (Vertex x : faces_[f].walk)
            if (x == v) out.push_back(static_cast<int>(f));
    return out;
}

VertexSet EmbeddedGraph::sees(Vertex v) const {
    VertexSet out;
    for (int f : faces_at(v))
        for (Vertex x : faces_[f].walk)
            if (x != v) out.push_back(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::int64_t EmbeddedGraph::sees_upper_bound(Vertex v) const {
    std::int64_t s = 0;
    for (int f : faces_at(v)) s += static_cast<std::int64_t>(faces_[f].length()) - 2;
    return s;
}

EmbeddedGraph EmbeddedGraph::induced(std::span<const Vertex> keep) const {
    Graph h = graph_.induced(keep);
    std::vector<Vertex> local(graph_.n(), -1);
    for (Vertex x = 0; x < h.n(); ++x) local[*graph_.index_of(h.id(x))] = x;
    std::vector<std::vector<Vertex>> rot(h.n());
    std::vector<std::vector<int>> sg(h.n());
    for (Vertex x = 0; x < h.n(); ++x) {
        Vertex v = *graph_.index_of(h.id(x));
        for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
            Vertex w = rotation_[v][i];
            if (local[w] < 0) continue;
            rot[x].push_back(local[w]);
            sg[x].push_back(signs_[v][i]);
        }
    }
    return EmbeddedGraph(std::move(h), std::move(rot), std::move(sg));
}

EmbeddedGraph EmbeddedGraph::without(std::span<const Vertex> removed) const {
    std::vector<char> gone(graph_.n(), 0);
    for (Vertex v : removed) gone[v] = 1;
    VertexSet keep;
    for (Vertex v = 0; v < graph_.n(); ++v)
        if (!gone[v]) keep.push_back(v);
    return induced(keep);
}

Vertex EmbeddedGraph::rotation_successor(Vertex v, Vertex w) const {
    const auto &r = rotation_[v];
    return r[(slot(v, w) + 1) % r.size()];
}

std::optional<int> EmbeddedGraph::face_with_dart(Vertex u, Vertex v) const {
    auto [a, b] = face_of_slot_[u][slot(u, v)];
    if (a >= 0) return a;
    if (b >= 0) return b;
    return std::nullopt;
}

EmbeddedGraph planar_k4() {
    std::vector<Edge> e = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    return EmbeddedGraph(Graph::from_edges(4, e), {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}});
}

bool in_cut_pair(const Graph &g, Vertex v) {
    if (g.n() < 4) return false;
    std::array<Vertex, 1> rm{v};
    Graph h = g.without(rm);
    if (!is_connected(h)) return true;
    return !cut_vertices(h).empty();
}

KtModel wheel_k4_around(const EmbeddedGraph &e, Vertex v) {
    const Graph &g = e.graph();
    if (g.degree(v) < 3) throw PreconditionError("degree: vertex has fewer than 3 neighbours");
    std::array<Vertex, 1> rm{v};
    Graph rest = g.without(rm);
    if (!is_connected(rest)) throw PreconditionError("cut-vertex: removing the vertex disconnects the graph");
    EmbeddedGraph h = e.without(rm);

    Vertex a = g.neighbors(v).front();
    Vertex c = e.rotation_successor(a, v);
    Vertex ha = *h.graph().index_of(g.id(a));
    VertexSet nb = h.graph().to_local(g.to_ids(g.neighbors(v)));

    std::optional<Face> boundary;
    if (c != v) {
        Vertex hc = *h.graph().index_of(g.id(c));
        for (auto [x, y] : {std::pair{ha, hc}, std::pair{hc, ha}}) {
            auto f = h.face_with_dart(x, y);
            if (!f) continue;
            const Face &face = h.faces()[*f];
            if (!face.is_simple_cycle()) continue;
            bool all = std::all_of(nb.begin(), nb.end(), [&](Vertex z) {
                return std::find(face.walk.begin(), face.walk.end(), z) != face.walk.end();
            });
            if (all) {
                boundary = face;
                break;
            }
        }
    }
    if (!boundary) throw PreconditionError("facewidth: the face left by the vertex is not bounded by a cycle through its neighbours");

    const auto &cyc = boundary->walk;
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < cyc.size(); ++i)
        if (std::binary_search(nb.begin(), nb.end(), cyc[i])) hits.push_back(i);
    std::size_t p1 = hits[0], p2 = hits[1], p3 = hits[2];
    KtModel m;
    m.t = 4;
    m.branch_sets.push_back({g.id(v)});
    auto arc = [&](std::size_t from, std::size_t to) {
        VertexSet s;
        for (std::size_t i = from; i != to; i = (i + 1) % cyc.size()) s.push_back(h.graph().id(cyc[i]));
        return s;
    };
    m.branch_sets.push_back(arc(p1, p2));
    m.branch_sets.push_back(arc(p2, p3));
    m.branch_sets.push_back(arc(p3, p1));
    m.normalize();
    if (auto chk = validate_model(g, m); !chk) throw InvariantError("wheel model invalid: " + chk.violation);
    return m;
}

KtModel visibility_wheel_k4(const EmbeddedGraph &e, Vertex v) {
    const Graph &g = e.graph();
    if (e.euler_genus() != 0) throw PreconditionError("genus: embedding is not planar");
    if (g.degree(v) < 3) throw PreconditionError("degree: vertex has fewer than 3 neighbours");
    VertexSet cv = cut_vertices(g);
    if (std::binary_search(cv.begin(), cv.end(), v)) throw PreconditionError("cut-vertex: vertex is an articulation point");
    if (in_cut_pair(g, v)) throw PreconditionError("cut-pair: vertex lies in a 2-separator");
    return wheel_k4_around(e, v);
}

}  // namespace smallminors

namespace smallminors {

EmbeddedGraph embedding_from_faces(int n, const std::vector<std::vector<Vertex>> &faces) {
    // directed side -> (face, position)
    std::map<Edge, std::pair<int, int>> side;
    std::map<Edge, int> count;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto &c = faces[f];
        if (c.size() < 2) throw std::invalid_argument("face with fewer than two vertices");
        for (std::size_t i = 0; i < c.size(); ++i) {
            Vertex u = c[i], v = c[(i + 1) % c.size()];
            if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw std::invalid_argument("bad vertex in face list");
            ++count[{std::min(u, v), std::max(u, v)}];
        }
    }
    for (auto &[e, k] : count)
        if (k != 2) throw std::invalid_argument("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                                                " lies on " + std::to_string(k) + " face sides");
    // orient faces so every edge is used once in each direction
    const int nf = static_cast<int>(faces.size());
    std::vector<int> orient(nf, 0);
    std::map<Edge, std::vector<int>> faces_of;
    for (int f = 0; f < nf; ++f) {
        const auto &c = faces[f];
        for (std::size_t i = 0; i < c.size(); ++i) {
            Vertex u = c[i], v = c[(i + 1) % c.size()];
            faces_of[{std::min(u, v), std::max(u, v)}].push_back(f);
        }
    }
    auto directed = [&](int f) {
        std::vector<Edge> out;
        const auto &c = faces[f];
        for (std::size_t i = 0; i < c.size(); ++i) {
            Vertex u = c[i], v = c[(i + 1) % c.size()];
            out.push_back(orient[f] > 0 ? Edge{u, v} : Edge{v, u});
        }
        return out;
    };
    for (int root = 0; root < nf; ++root) {
        if (orient[root]) continue;
        orient[root] = 1;
        std::deque<int> q{root};
        while (!q.empty()) {
            int f = q.front();
            q.pop_front();
            for (auto [u, v] : directed(f)) {
                for (int h : faces_of[{std::min(u, v), std::max(u, v)}]) {
                    if (h == f) continue;
                    // h must traverse v -> u
                    const auto &c = faces[h];
                    bool forward = false;
                    for (std::size_t i = 0; i < c.size(); ++i)
                        if (c[i] == v && c[(i + 1) % c.size()] == u) forward = true;
                    int want = forward ? 1 : -1;
                    if (!orient[h]) {
                        orient[h] = want;
                        q.push_back(h);
                    } else if (orient[h] != want) {
                        throw std::invalid_argument("face list is not orientable");
                    }
                }
            }
        }
    }
    std::vector<std::map<Vertex, Vertex>> succ(n);
    std::vector<Edge> edges;
    for (auto &[e, k] : count) edges.push_back(e);
    for (int f = 0; f < nf; ++f) {
        std::vector<Vertex> c = faces[f];
        if (orient[f] < 0) std::reverse(c.begin(), c.end());
        const std::size_t len = c.size();
        for (std::size_t i = 0; i < len; ++i) {
            Vertex u = c[(i + len - 1) % len], w = c[i], x = c[(i + 1) % len];
            if (!succ[w].emplace(u, x).second) throw std::invalid_argument("two faces claim the same corner");
        }
    }
    Graph g = Graph::from_edges(n, edges);
    std::vector<std::vector<Vertex>> rot(n);
    for (Vertex w = 0; w < n; ++w) {
        if (g.degree(w) == 0) continue;
        Vertex start = g.neighbors(w).front(), x = start;
        do {
            rot[w].push_back(x);
            auto it = succ[w].find(x);
            if (it == succ[w].end()) throw std::invalid_argument("corner missing at vertex " + std::to_string(w));
            x = it->second;
        } while (x != start && rot[w].size() <= static_cast<std::size_t>(g.degree(w)));
        if (rot[w].size() != static_cast<std::size_t>(g.degree(w)))
            throw std::invalid_argument("faces around vertex " + std::to_string(w) + " do not form a disc");
    }
    EmbeddedGraph out(std::move(g), std::move(rot));
    if (out.faces().size() != faces.size()) throw InvariantError("traced face count differs from the face list");
    return out;
}

EmbeddedGraph dual(const EmbeddedGraph &e) {
    if (!e.orientable_signs()) throw std::invalid_argument("dual needs an orientable embedding");
    std::vector<std::vector<Vertex>> dual_faces;
    for (Vertex v = 0; v < e.n(); ++v) {
        std::vector<Vertex> around;
        for (Vertex w : e.rotation(v)) around.push_back(*e.face_with_dart(v, w));
        dual_faces.push_back(std::move(around));
    }
    return embedding_from_faces(static_cast<int>(e.faces().size()), dual_faces);
}

}  // namespace smallminors
