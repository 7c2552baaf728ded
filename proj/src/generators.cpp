#include "smallminors/generators.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace smallminors {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

std::vector<Edge> edges_of_rotation(const std::vector<std::vector<Vertex>> &rot) {
    std::vector<Edge> out;
    for (Vertex v = 0; v < static_cast<Vertex>(rot.size()); ++v)
        for (Vertex w : rot[v])
            if (v < w) out.emplace_back(v, w);
    return out;
}

std::vector<std::vector<Vertex>> cycle_square_rotation(int len) {
    std::vector<std::vector<Vertex>> rot(len);
    for (int v = 0; v < len; ++v) {
        if (v % 2 == 0)
            rot[v] = {mod(v + 1, len), mod(v + 2, len), mod(v - 2, len), mod(v - 1, len)};
        else
            rot[v] = {mod(v + 2, len), mod(v + 1, len), mod(v - 1, len), mod(v - 2, len)};
    }
    return rot;
}

// Adds the pairs to the square of a cycle. The first pair joins the inner
// and outer faces; each later edge gets the sign that keeps a single big face.
EmbeddedGraph cycle_square_with_edges(int len, const std::vector<Edge> &pairs) {
    auto rot = cycle_square_rotation(len);
    std::vector<std::vector<int>> sign(len);
    for (int v = 0; v < len; ++v) sign[v].assign(4, 1);
    if (pairs.empty() || (pairs.front().first % 2) == (pairs.front().second % 2))
        throw InvariantError("first extra edge must join the two big faces");
    std::vector<Edge> edges = edges_of_rotation(rot);
    std::optional<EmbeddedGraph> out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [a, b] = pairs[i];
        edges.emplace_back(std::min(a, b), std::max(a, b));
        for (int s : {-1, 1}) {
            auto r = rot;
            auto sg = sign;
            for (auto [x, y] : {Edge{a, b}, Edge{b, a}}) {
                // even vertices: inner-face corner after x+2; odd: outer-face corner at the end
                std::size_t at = x % 2 == 0 ? 2 : 4;
                if (r[x].size() != 4) throw InvariantError("vertex used by two extra edges");
                r[x].insert(r[x].begin() + static_cast<std::ptrdiff_t>(at), y);
                sg[x].insert(sg[x].begin() + static_cast<std::ptrdiff_t>(at), i == 0 ? 1 : s);
            }
            EmbeddedGraph e(Graph::from_edges(len, edges), r, sg);
            if (e.faces().size() == static_cast<std::size_t>(len) + 1 || i == 0) {
                rot = std::move(r);
                sign = std::move(sg);
                out = std::move(e);
                break;
            }
        }
        if (!out || out->graph().m() != static_cast<std::int64_t>(edges.size()))
            throw InvariantError("extra edge split the big face");
    }
    return *out;
}

}  // namespace

EmbeddedGraph cycle_square(int length) {
    if (length < 8 || length % 2 != 0) throw std::invalid_argument("cycle square needs an even length >= 8");
    auto rot = cycle_square_rotation(length);
    auto edges = edges_of_rotation(rot);
    return EmbeddedGraph(Graph::from_edges(length, edges), std::move(rot));
}

EmbeddedGraph icosahedron() {
    std::vector<std::vector<Vertex>> faces;
    auto up = [](int i) { return 1 + mod(i, 5); };
    auto lo = [](int i) { return 6 + mod(i, 5); };
    for (int i = 0; i < 5; ++i) {
        faces.push_back({0, up(i), up(i + 1)});
        faces.push_back({11, lo(i + 1), lo(i)});
        faces.push_back({up(i), lo(i), up(i + 1)});
        faces.push_back({lo(i), lo(i + 1), up(i + 1)});
    }
    return embedding_from_faces(12, faces);
}

EmbeddedGraph dodecahedron() { return dual(icosahedron()); }

EmbeddedGraph cube() {
    return embedding_from_faces(8, {{0, 1, 3, 2}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 3, 7, 6}, {0, 2, 6, 4}, {1, 3, 7, 5}});
}

EmbeddedGraph wheel(int spokes) {
    if (spokes < 3) throw std::invalid_argument("wheel needs at least 3 spokes");
    std::vector<std::vector<Vertex>> faces;
    std::vector<Vertex> rim;
    for (int i = 0; i < spokes; ++i) {
        faces.push_back({0, 1 + i, 1 + (i + 1) % spokes});
        rim.push_back(1 + i);
    }
    faces.push_back(rim);
    return embedding_from_faces(spokes + 1, faces);
}

EmbeddedGraph plane_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Vertex> c(n);
    for (int i = 0; i < n; ++i) c[i] = i;
    std::vector<Vertex> r(c.rbegin(), c.rend());
    return embedding_from_faces(n, {c, r});
}

EmbeddedGraph snub_dodecahedron() {
    EmbeddedGraph d = dodecahedron();
    // corner (v, i): vertex v, leaving along rotation slot i
    auto corner = [](Vertex v, std::size_t i) { return static_cast<Vertex>(3 * v + static_cast<int>(i % 3)); };
    auto slot = [&](Vertex v, Vertex w) {
        auto r = d.rotation(v);
        return static_cast<std::size_t>(std::find(r.begin(), r.end(), w) - r.begin());
    };
    std::vector<std::vector<Vertex>> faces;
    for (const Face &f : d.faces()) {
        std::vector<Vertex> pent;
        for (std::size_t j = 0; j < f.walk.size(); ++j) {
            Vertex v = f.walk[j], w = f.walk[(j + 1) % f.walk.size()];
            pent.push_back(corner(v, slot(v, w)));
        }
        faces.push_back(pent);
    }
    for (Vertex v = 0; v < d.n(); ++v) faces.push_back({corner(v, 0), corner(v, 1), corner(v, 2)});
    for (auto [u, v] : d.graph().edges()) {
        Vertex fu = corner(u, slot(u, v));      // face of u->v, at u
        Vertex gv = corner(v, slot(v, u));      // face of v->u, at v
        Vertex gu = corner(u, slot(u, v) + 1);  // face of v->u, at u
        Vertex fv = corner(v, slot(v, u) + 1);  // face of u->v, at v
        faces.push_back({fu, gv, gu});
        faces.push_back({fu, fv, gv});
    }
    return embedding_from_faces(60, faces);
}

EmbeddedGraph planar_4plus_eps_gadget(int k, const std::optional<EmbeddedGraph> &base) {
    if (k < 0) throw std::invalid_argument("gadget needs k >= 0");
    EmbeddedGraph h = base ? *base : dodecahedron();
    const Graph &hg = h.graph();
    if (h.euler_genus() != 0) throw std::invalid_argument("gadget base must be planar");
    if (hg.min_degree() != 3 || hg.max_degree() != 3) throw std::invalid_argument("gadget base must be cubic");
    for (const Face &f : h.faces())
        if (f.length() < 5) throw std::invalid_argument("gadget base needs faces of length >= 5");
    const int p = hg.n();
    auto slot = [&](Vertex v, Vertex w) {
        auto r = h.rotation(v);
        return static_cast<int>(std::find(r.begin(), r.end(), w) - r.begin());
    };
    auto corner = [](Vertex v, int i) { return 3 * v + mod(i, 3); };
    int next = 3 * p;
    std::vector<std::vector<Vertex>> faces;
    for (Vertex x = 0; x < p; ++x) faces.push_back({corner(x, 0), corner(x, 1), corner(x, 2)});
    // rail[x][i]: inner vertices on the side of face_with_dart(x, rot[x][i]), from x outwards
    std::vector<std::vector<std::vector<Vertex>>> rail(p, std::vector<std::vector<Vertex>>(3));
    for (auto [x, y] : hg.edges()) {
        int i = slot(x, y), j = slot(y, x);
        std::vector<Vertex> pr = {corner(x, i)}, qr = {corner(x, i + 1)};
        for (int t = 0; t < k; ++t) pr.push_back(next++);
        for (int t = 0; t < k; ++t) qr.push_back(next++);
        pr.push_back(corner(y, j + 1));
        qr.push_back(corner(y, j));
        for (int t = 0; t <= k; ++t) {
            faces.push_back({pr[t], pr[t + 1], qr[t + 1]});
            faces.push_back({pr[t], qr[t + 1], qr[t]});
        }
        rail[x][i].assign(pr.begin() + 1, pr.end() - 1);
        rail[y][j].assign(qr.rbegin() + 1, qr.rend() - 1);
    }
    for (const Face &f : h.faces()) {
        std::vector<Vertex> big;
        for (std::size_t t = 0; t < f.walk.size(); ++t) {
            Vertex x = f.walk[t], y = f.walk[(t + 1) % f.walk.size()];
            int i = slot(x, y);
            big.push_back(corner(x, i));
            for (Vertex z : rail[x][i]) big.push_back(z);
        }
        faces.push_back(big);
    }
    return embedding_from_faces(next, faces);
}

EmbeddedGraph genus_bouquet(int g, int k) {
    if (g < 2 || g % 2 != 0) throw std::invalid_argument("bouquet needs an even g >= 2");
    if (k < 2) throw std::invalid_argument("bouquet needs k >= 2 (shorter cycles are not simple)");
    const int n = 1 + g * k;
    auto at = [k](int loop, int t) { return 1 + loop * k + t; };
    std::vector<std::vector<Vertex>> rot(n);
    for (int j = 0; j < g / 2; ++j) {
        int a = 2 * j, b = 2 * j + 1;
        for (Vertex x : {at(a, 0), at(b, 0), at(a, k - 1), at(b, k - 1)}) rot[0].push_back(x);
    }
    for (int loop = 0; loop < g; ++loop)
        for (int t = 0; t < k; ++t) {
            Vertex prev = t == 0 ? 0 : at(loop, t - 1);
            Vertex nxt = t == k - 1 ? 0 : at(loop, t + 1);
            rot[at(loop, t)] = {prev, nxt};
        }
    auto edges = edges_of_rotation(rot);
    return EmbeddedGraph(Graph::from_edges(n, edges), std::move(rot));
}

EmbeddedGraph surface_one_face_degree4(int g, int k) {
    if (g < 1) throw std::invalid_argument("need g >= 1");
    if (k < 0) throw std::invalid_argument("need k >= 0");
    const int len = 2 * g * (k + 1);
    if (len < 8) throw std::invalid_argument("need 2g(k+1) >= 8");
    const int half = len / 2, step = k + 1;
    const int shift = (half % 2 == 0 && step % 2 == 0) ? 1 : 0;
    std::vector<Edge> pairs;
    for (int j = 0; j < g; ++j) pairs.emplace_back(j * step, mod(j * step + half + shift, len));
    if (half % 2 == 0 && step % 2 == 1) std::swap(pairs[0].second, pairs[1].second);
    return cycle_square_with_edges(len, pairs);
}

EmbeddedGraph cycle_square_plus_matching(int length) {
    if (length < 8 || length % 2 != 0) throw std::invalid_argument("cycle square needs an even length >= 8");
    return surface_one_face_degree4(length / 2, 0);
}

EmbeddedGraph toroidal_grid(int n) {
    if (n < 3) throw std::invalid_argument("toroidal grid needs n >= 3 columns");
    auto at = [n](int r, int c) { return mod(r, 3) * n + mod(c, n); };
    std::vector<std::vector<Vertex>> faces;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < n; ++c) {
            faces.push_back({at(r, c), at(r, c + 1), at(r + 1, c + 1)});
            faces.push_back({at(r, c), at(r + 1, c + 1), at(r + 1, c)});
        }
    return embedding_from_faces(3 * n, faces);
}

namespace {

class RegularBuilder {
public:
    RegularBuilder(int n, int d, int girth) : adj_(n), d_(d), girth_(girth) {}

    bool adjacent(int u, int v) const { return adj_[u].count(v) > 0; }
    void add(int u, int v) {
        adj_[u].insert(v);
        adj_[v].insert(u);
    }
    void remove(int u, int v) {
        adj_[u].erase(v);
        adj_[v].erase(u);
    }
    int deficiency(int v) const { return d_ - static_cast<int>(adj_[v].size()); }

    // true when dist(u, v) >= limit
    bool far(int u, int v, int limit) const {
        if (u == v) return false;
        std::vector<int> dist(adj_.size(), -1);
        std::deque<int> q{u};
        dist[u] = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            if (dist[x] + 1 >= limit) continue;
            for (int y : adj_[x])
                if (dist[y] < 0) {
                    if (y == v) return false;
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
        }
        return true;
    }

    // length bound of a shortest cycle through u (BFS from u)
    int local_girth(int u) const {
        std::vector<int> dist(adj_.size(), -1), par(adj_.size(), -1);
        std::deque<int> q{u};
        dist[u] = 0;
        int best = std::numeric_limits<int>::max();
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            if (2 * dist[x] + 1 >= best) break;
            for (int y : adj_[x]) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    par[y] = x;
                    q.push_back(y);
                } else if (par[x] != y) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
        return best;
    }

    bool girth_ok(std::initializer_list<int> at) const {
        for (int v : at)
            if (local_girth(v) < girth_) return false;
        return true;
    }

    Graph graph() const {
        std::vector<Edge> edges;
        for (int u = 0; u < static_cast<int>(adj_.size()); ++u)
            for (int v : adj_[u])
                if (u < v) edges.emplace_back(u, v);
        return Graph::from_edges(static_cast<int>(adj_.size()), edges);
    }

    std::vector<Edge> edge_list() const {
        std::vector<Edge> edges;
        for (int u = 0; u < static_cast<int>(adj_.size()); ++u)
            for (int v : adj_[u])
                if (u < v) edges.emplace_back(u, v);
        return edges;
    }

private:
    std::vector<std::set<int>> adj_;
    int d_;
    int girth_;
};

}  // namespace

Graph high_girth_regular(int n, int d, int girth_target, std::uint64_t seed, int budget) {
    if (d < 3) throw std::invalid_argument("d >= 3 required");
    if (n <= d || (static_cast<std::int64_t>(n) * d) % 2 != 0) throw std::invalid_argument("need n > d and n d even");
    if (girth_target < 3) girth_target = 3;
    std::mt19937_64 rng(seed);
    RegularBuilder b(n, d, girth_target);
    auto deficient = [&] {
        std::vector<int> out;
        for (int v = 0; v < n; ++v)
            if (b.deficiency(v) > 0) out.push_back(v);
        return out;
    };
    int stalled = 0;
    for (int iter = 0; iter < budget; ++iter) {
        if (stalled > 4 * n * d) {
            b = RegularBuilder(n, d, girth_target);
            stalled = 0;
        }
        std::vector<int> def = deficient();
        if (def.empty()) {
            Graph g = b.graph();
            return g;
        }
        int u = def[std::uniform_int_distribution<std::size_t>(0, def.size() - 1)(rng)];
        std::vector<int> cand;
        for (int v : def)
            if (v != u && !b.adjacent(u, v) && b.far(u, v, girth_target - 1)) cand.push_back(v);
        if (!cand.empty()) {
            b.add(u, cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng)]);
            continue;
        }
        ++stalled;
        // swap: remove a random edge ab and reconnect through the deficient vertices
        auto edges = b.edge_list();
        if (edges.empty()) continue;
        auto [a, c] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
        if (std::uniform_int_distribution<int>(0, 1)(rng)) std::swap(a, c);
        int v = u;
        if (b.deficiency(u) < 2) {
            std::vector<int> others;
            for (int x : def)
                if (x != u) others.push_back(x);
            if (others.empty()) continue;
            v = others[std::uniform_int_distribution<std::size_t>(0, others.size() - 1)(rng)];
        }
        if (a == u || a == v || c == u || c == v || b.adjacent(u, a) || b.adjacent(v, c)) continue;
        b.remove(a, c);
        b.add(u, a);
        b.add(v, c);
        if (!b.girth_ok({u, v, a, c})) {
            b.remove(u, a);
            b.remove(v, c);
            b.add(a, c);
        }
    }
    throw std::runtime_error("girth target " + std::to_string(girth_target) + " unreachable within iteration budget");
}

EmbeddedGraph random_plane_graph(int n, std::int64_t m, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("plane graph needs n >= 3");
    if (m < n - 1 || m > 3 * static_cast<std::int64_t>(n) - 6 + (n == 3 ? 3 : 0))
        throw std::invalid_argument("edge count out of range for a connected plane graph");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Vertex>> faces = {{0, 1, 2}, {0, 2, 1}};
    for (Vertex v = 3; v < n; ++v) {
        std::size_t i = std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(rng);
        auto f = faces[i];
        faces[i] = {f[0], f[1], v};
        faces.push_back({f[1], f[2], v});
        faces.push_back({f[2], f[0], v});
    }
    EmbeddedGraph tri = embedding_from_faces(n, faces);
    std::vector<std::vector<Vertex>> rot(n);
    for (Vertex v = 0; v < n; ++v) rot[v].assign(tri.rotation(v).begin(), tri.rotation(v).end());
    std::vector<Edge> edges = tri.graph().edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    std::set<Edge> kept(edges.begin(), edges.end());
    for (auto [u, v] : edges) {
        if (static_cast<std::int64_t>(kept.size()) <= m) break;
        kept.erase({u, v});
        std::vector<Edge> rest(kept.begin(), kept.end());
        if (!is_connected(Graph::from_edges(n, rest))) kept.insert({u, v});
    }
    if (static_cast<std::int64_t>(kept.size()) != m) throw std::runtime_error("could not thin the triangulation");
    for (Vertex v = 0; v < n; ++v)
        std::erase_if(rot[v], [&](Vertex w) { return !kept.count({std::min(v, w), std::max(v, w)}); });
    std::vector<Edge> rest(kept.begin(), kept.end());
    return EmbeddedGraph(Graph::from_edges(n, rest), std::move(rot));
}

Graph random_gnm(int n, std::int64_t m, std::uint64_t seed) {
    const std::int64_t all = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (m < 0 || m > all) throw std::invalid_argument("edge count out of range");
    std::mt19937_64 rng(seed);
    std::set<Edge> chosen;
    std::uniform_int_distribution<int> pick(0, std::max(0, n - 1));
    while (static_cast<std::int64_t>(chosen.size()) < m) {
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        chosen.insert({std::min(u, v), std::max(u, v)});
    }
    std::vector<Edge> edges(chosen.begin(), chosen.end());
    return Graph::from_edges(n, edges);
}

}  // namespace smallminors
