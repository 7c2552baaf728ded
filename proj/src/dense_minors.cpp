#include "smallminors/dense_minors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <string>

#include "smallminors/minor_search.hpp"
#include "smallminors/oracle.hpp"

namespace smallminors {

namespace {

constexpr int kExactDiameterLimit = 2048;

void require_density(const Graph &g, const Rational &threshold) {
    if (g.n() == 0) throw PreconditionError("insufficient density: empty graph");
    Rational avg = average_degree(g);
    if (avg < threshold)
        throw PreconditionError("insufficient density: average degree " + avg.str() + " < " + threshold.str());
}

void require_positive(const Rational &eps) {
    if (!(eps > Rational(0))) throw PreconditionError("eps must be positive, got " + eps.str());
}

void check_model(const Graph &g, const KtModel &model, const char *who) {
    if (auto check = validate_model(g, model); !check)
        throw InvariantError(std::string(who) + ": emitted invalid model: " + check.violation);
}

void check_log_bound(const KtModel &model, double coefficient, int n, const char *who) {
    if (!within_log_bound(static_cast<double>(model.total_size()), coefficient, n))
        throw InvariantError(std::string(who) + ": model of size " + std::to_string(model.total_size()) +
                             " exceeds the log bound");
}

void check_branch_sizes(const KtModel &model, const char *who) {
    for (const auto &b : model.branch_sets)
        if (b.size() < 2) throw InvariantError(std::string(who) + ": branch set with fewer than two vertices");
}

// Deletes vertices (lowest id first) while the density threshold survives,
// restricting to the densest component after each pass.
Graph trim_to_threshold(Graph cur, const Rational &threshold) {
    cur = cur.induced(densest_component(cur));
    for (;;) {
        bool deleted = false;
        for (Vertex v = 0; v < cur.n() && cur.n() > 1; ++v) {
            Rational after(2 * (cur.m() - cur.degree(v)), cur.n() - 1);
            if (after >= threshold) {
                Vertex gone[1] = {v};
                cur = cur.without(gone);
                deleted = true;
                break;
            }
        }
        if (!deleted) break;
        cur = cur.induced(densest_component(cur));
    }
    return cur;
}

std::optional<std::array<Vertex, 4>> find_k4_subgraph(const Graph &g) {
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v : g.neighbors(u)) {
            if (v <= u) continue;
            for (Vertex w : g.neighbors(v)) {
                if (w <= v || !g.adjacent(u, w)) continue;
                for (Vertex x : g.neighbors(w))
                    if (x > w && g.adjacent(u, x) && g.adjacent(v, x)) return std::array<Vertex, 4>{u, v, w, x};
            }
        }
    return std::nullopt;
}

KtModel make_model(const Graph &g, std::vector<VertexSet> local_sets) {
    KtModel m{static_cast<int>(local_sets.size()), {}};
    for (auto &s : local_sets) {
        VertexSet ids = g.to_ids(s);
        std::sort(ids.begin(), ids.end());
        m.branch_sets.push_back(std::move(ids));
    }
    return m;
}

std::optional<std::array<Vertex, 4>> find_p4(const Graph &g) {
    for (Vertex a = 0; a < g.n(); ++a)
        for (Vertex b : g.neighbors(a))
            for (Vertex c : g.neighbors(a)) {
                if (c == b) continue;
                for (Vertex d : g.neighbors(c))
                    if (d != a && d != b) return std::array<Vertex, 4>{b, a, c, d};
            }
    return std::nullopt;
}

}  // namespace

DenseSubgraphResult dense_low_diameter_subgraph(const Graph &g, const Rational &d, const Rational &d_prime) {
    if (d_prime < Rational(2) || !(d > d_prime))
        throw PreconditionError("insufficient density: need d > d' >= 2, got d=" + d.str() + " d'=" + d_prime.str());
    require_density(g, d);

    DenseSubgraphResult result;
    Graph cur = g;
    for (;;) {
        if (cur.n() == 0) throw InvariantError("dense_low_diameter_subgraph: graph exhausted");
        const Vertex v = 0;
        std::vector<int> dist(cur.n(), -1);
        dist[v] = 0;
        VertexSet inner{v};   // B_{k-1}
        VertexSet frontier{v};
        VertexSet ball_k;
        int k = 0;
        for (;;) {
            ++k;
            ++result.balls_grown;
            VertexSet next;
            for (Vertex u : frontier)
                for (Vertex w : cur.neighbors(u))
                    if (dist[w] < 0) {
                        dist[w] = k;
                        next.push_back(w);
                    }
            ball_k = inner;
            ball_k.insert(ball_k.end(), next.begin(), next.end());
            // stop at the first k with |B_k| < beta |B_{k-1}|
            if (Rational(static_cast<std::int64_t>(ball_k.size())) * d_prime <
                d * Rational(static_cast<std::int64_t>(inner.size())))
                break;
            inner = ball_k;
            frontier = std::move(next);
        }
        Graph b = cur.induced(ball_k);
        Rational avg = average_degree(b);
        if (avg >= d_prime) {
            result.vertices = cur.to_ids(ball_k);
            std::sort(result.vertices.begin(), result.vertices.end());
            result.average_degree = avg;
            result.center = cur.id(v);
            result.radius = k;
            if (b.n() <= kExactDiameterLimit) result.diameter = diameter(b);
            return result;
        }
        ++result.recursions;
        cur = cur.without(inner);
        if (average_degree(cur) < d) throw InvariantError("dense_low_diameter_subgraph: remainder lost density");
    }
}

std::vector<Vertex> short_cycle(const Graph &g, const Rational &eps) {
    require_positive(eps);
    require_density(g, Rational(2) + eps);
    DenseSubgraphResult dense = dense_low_diameter_subgraph(g, Rational(2) + eps, Rational(2));
    Graph sub = g.induced(g.to_local(dense.vertices));
    BfsTree tree = bfs_tree(sub, 0);
    for (auto [u, v] : sub.edges()) {
        if (tree.in_tree(u, v)) continue;
        std::vector<Vertex> cycle = fundamental_cycle(tree, u, v);
        double bound = 2.0 * p_coefficient(Rational(2) + eps, Rational(2)) * std::log2(g.n()) + 1.0;
        if (static_cast<double>(cycle.size()) > bound + 1e-9) throw InvariantError("short_cycle: bound exceeded");
        return sub.to_ids(cycle);
    }
    throw InvariantError("short_cycle: dense subgraph is a tree");
}

KtModel extract_model_from_certificate(const Graph &g, std::span<const Vertex> cert, int t) {
    Graph sub = g.induced(g.to_local(cert));
    auto model = find_kt_model(sub, t);
    if (!model) throw InvariantError("certificate invalid: no K" + std::to_string(t) + " minor");
    return *model;
}

KtModel small_k4_model(const Graph &g, const Rational &eps) {
    require_positive(eps);
    require_density(g, Rational(4) + eps);
    const Rational half = eps / Rational(2);

    DenseSubgraphResult dense = dense_low_diameter_subgraph(g, Rational(4) + eps, Rational(4) + half);
    Graph sub = g.induced(g.to_local(dense.vertices));
    BfsTree tree = bfs_tree(sub, 0);

    std::vector<Edge> rest;
    for (auto [u, v] : sub.edges())
        if (!tree.in_tree(u, v)) rest.emplace_back(u, v);
    Graph h = sub.edge_subgraph(rest);
    VertexSet cycle = sub.to_local(short_cycle(h, half));

    VertexSet maximal;
    for (Vertex x : cycle) {
        bool has_ancestor = false;
        for (Vertex y : cycle)
            if (y != x && tree.is_ancestor(y, x)) {
                has_ancestor = true;
                break;
            }
        if (!has_ancestor) maximal.push_back(x);
    }
    std::sort(maximal.begin(), maximal.end());
    if (maximal.size() < 2) throw InvariantError("small_k4_model: cycle has a unique maximal vertex");

    VertexSet cert = cycle;
    if (maximal.size() >= 3) {
        for (int i = 0; i < 3; ++i)
            for (Vertex p : tree.path_to_root(maximal[i])) cert.push_back(p);
    }
    // with exactly two maximal vertices the two extra tree edges join cycle vertices
    std::sort(cert.begin(), cert.end());
    cert.erase(std::unique(cert.begin(), cert.end()), cert.end());

    KtModel model = extract_model_from_certificate(g, sub.to_ids(cert), 4);
    check_model(g, model, "small_k4_model");
    check_log_bound(model, h_k4(eps), g.n(), "small_k4_model");
    return model;
}

K4CaseOutcome nice_k3_around_k4(const Graph &g, std::span<const Vertex> x_ids) {
    VertexSet x = g.to_local(x_ids);
    if (x.size() != 4) throw std::invalid_argument("nice_k3_around_k4: need four vertices");
    auto in_x = [&](Vertex v) { return std::find(x.begin(), x.end(), v) != x.end(); };

    std::vector<Edge> cross;
    for (Vertex a : x)
        for (Vertex b : g.neighbors(a))
            if (!in_x(b)) cross.emplace_back(a, b);

    // Case 1: every cross edge meets one vertex of X
    VertexSet x_ends;
    for (auto [a, b] : cross) x_ends.push_back(a);
    std::sort(x_ends.begin(), x_ends.end());
    x_ends.erase(std::unique(x_ends.begin(), x_ends.end()), x_ends.end());
    if (x_ends.size() <= 1) {
        Vertex keep = x_ends.empty() ? x[0] : x_ends[0];
        VertexSet y;
        for (Vertex v : x)
            if (v != keep) y.push_back(v);
        VertexSet ids = g.to_ids(y);
        std::sort(ids.begin(), ids.end());
        return ids;
    }

    // Case 2: two independent cross edges
    for (std::size_t i = 0; i < cross.size(); ++i)
        for (std::size_t j = i + 1; j < cross.size(); ++j) {
            auto [a, b] = cross[i];
            auto [c, d] = cross[j];
            if (a == c || b == d) continue;
            VertexSet rest;
            for (Vertex v : x)
                if (v != a && v != c) rest.push_back(v);
            return make_model(g, {{a, b}, {c, d}, rest});
        }

    // Case 3: all cross edges go to one outside vertex w, from at least two X vertices
    Vertex w = cross.front().second;
    Vertex u = x_ends[0], v = x_ends[1];
    Vertex w2 = -1;
    for (Vertex z : g.neighbors(w))
        if (!in_x(z)) {
            w2 = z;
            break;
        }
    if (w2 < 0) throw InvariantError("nice_k3_around_k4: outside vertex has no further neighbour");
    VertexSet others;
    for (Vertex z : x)
        if (z != u && z != v) others.push_back(z);
    return make_model(g, {{w, w2}, {u, others[0]}, {v, others[1]}});
}

KtModel nice_k3_from_k4_model(const Graph &g, const KtModel &k4) {
    std::vector<VertexSet> b;
    for (const auto &s : k4.branch_sets) b.push_back(g.to_local(s));
    std::stable_sort(b.begin(), b.end(), [](const VertexSet &l, const VertexSet &r) { return l.size() > r.size(); });
    if (b[0].size() < 2) throw InvariantError("nice_k3_from_k4_model: model is a K4 subgraph");

    // Case 1
    if (b[1].size() >= 2) {
        VertexSet merged = b[2];
        merged.insert(merged.end(), b[3].begin(), b[3].end());
        return make_model(g, {b[0], b[1], merged});
    }

    std::vector<char> used(g.n(), 0);
    for (auto &s : b)
        for (Vertex v : s) used[v] = 1;
    Vertex xs[3] = {b[1][0], b[2][0], b[3][0]};

    // Case 2: a singleton with a neighbour outside the model
    for (int i = 0; i < 3; ++i)
        for (Vertex w : g.neighbors(xs[i]))
            if (!used[w]) return make_model(g, {{xs[i], w}, b[0], {xs[(i + 1) % 3], xs[(i + 2) % 3]}});

    // Two independent edges between B1 and the singletons.
    const VertexSet &b1 = b[0];
    Vertex u = -1, v = -1;
    int xa = -1, xb = -1;
    for (Vertex p : b1)
        for (int i = 0; i < 3 && u < 0; ++i) {
            if (!g.adjacent(p, xs[i])) continue;
            for (Vertex q : b1)
                for (int j = 0; j < 3 && u < 0; ++j)
                    if (q != p && j != i && g.adjacent(q, xs[j])) {
                        u = p, xa = i, v = q, xb = j;
                    }
        }
    if (u < 0) throw InvariantError("nice_k3_from_k4_model: no independent edges (graph has a K4 subgraph)");
    const int xc = 3 - xa - xb;

    if (b1.size() >= 3) {
        // Case 3
        Vertex w = -1;
        for (Vertex z : b1)
            if (z != u && z != v && g.adjacent(z, u)) {
                w = z;
                break;
            }
        if (w < 0) {
            std::swap(u, v);
            std::swap(xa, xb);
            for (Vertex z : b1)
                if (z != u && z != v && g.adjacent(z, u)) {
                    w = z;
                    break;
                }
        }
        if (w < 0) throw InvariantError("nice_k3_from_k4_model: B1 is not connected");
        VertexSet rest;
        for (Vertex z : b1)
            if (z != u && z != w) rest.push_back(z);
        Graph inner = g.induced(rest);
        VertexSet comp;
        for (auto &c : connected_components(inner)) {
            VertexSet lc = g.to_local(inner.to_ids(c));
            if (std::find(lc.begin(), lc.end(), v) != lc.end()) comp = lc;
        }
        comp.push_back(xs[xb]);
        return make_model(g, {{u, w}, comp, {xs[xa], xs[xc]}});
    }

    // Case 4: B1 = {u, v}
    for (Vertex w : g.neighbors(u))
        if (!used[w]) return make_model(g, {{u, w}, {v, xs[xb]}, {xs[xa], xs[xc]}});
    for (Vertex w : g.neighbors(v))
        if (!used[w]) return make_model(g, {{v, w}, {u, xs[xa]}, {xs[xb], xs[xc]}});
    throw InvariantError("nice_k3_from_k4_model: model has no outside neighbour");
}

KtModel nice_k3_model(const Graph &g, const Rational &eps) {
    require_positive(eps);
    const Rational threshold = Rational(4) + eps;
    require_density(g, threshold);

    Graph cur = g;
    for (;;) {
        cur = trim_to_threshold(cur, threshold);
        if (cur.n() < 6) throw InvariantError("nice_k3_model: trimmed graph has fewer than 6 vertices");
        KtModel model;
        if (auto x = find_k4_subgraph(cur)) {
            VertexSet ids = cur.to_ids(*x);
            K4CaseOutcome out = nice_k3_around_k4(cur, ids);
            if (auto *y = std::get_if<VertexSet>(&out)) {
                cur = cur.without(cur.to_local(*y));
                if (average_degree(cur) < threshold) throw InvariantError("nice_k3_model: K4 removal lost density");
                continue;
            }
            model = std::get<KtModel>(out);
        } else {
            model = nice_k3_from_k4_model(cur, small_k4_model(cur, eps));
        }
        check_model(g, model, "nice_k3_model");
        check_branch_sizes(model, "nice_k3_model");
        check_log_bound(model, h_k3_nice(eps), g.n(), "nice_k3_model");
        return model;
    }
}

KtModel small_kt_model(const Graph &g, int t, const Rational &eps, KtVariant variant) {
    if (t < 2) throw PreconditionError("t must be at least 2");
    require_positive(eps);
    const Rational threshold = kt_density_threshold(t, eps, variant);
    require_density(g, threshold);

    if (t == 2) {
        auto p = find_p4(g);
        if (!p) throw InvariantError("small_kt_model: no path on 4 vertices");
        KtModel model = make_model(g, {{(*p)[0], (*p)[1]}, {(*p)[2], (*p)[3]}});
        check_model(g, model, "small_kt_model");
        return model;
    }
    if (t == 3 && variant == KtVariant::strong) return nice_k3_model(g, eps);

    const Rational base = kt_density_threshold(t, Rational(0), variant);
    DenseSubgraphResult dense = dense_low_diameter_subgraph(g, base + eps, base + eps / Rational(2));
    Graph sub = g.induced(g.to_local(dense.vertices));

    auto edges = sub.edges();
    auto [u, v] = edges.front();
    Vertex roots[2] = {u, v};
    BfsTree tree = bfs_tree(sub, roots);

    std::vector<Edge> parity[2];
    for (auto [a, b] : edges) parity[tree.edge_depth(a, b) % 2].emplace_back(a, b);

    // component with the largest m/n over both parity classes
    Graph best;
    Rational best_ratio(-1);
    for (auto &cls : parity) {
        if (cls.empty()) continue;
        Graph part = sub.edge_subgraph(cls);
        for (auto &comp : connected_components(part)) {
            Graph c = part.induced(comp);
            Rational ratio(c.m(), c.n());
            if (ratio > best_ratio || (ratio == best_ratio && c.id(0) < best.id(0))) {
                best_ratio = ratio;
                best = std::move(c);
            }
        }
    }
    const Rational next_eps = eps / Rational(4);
    if (average_degree(best) < kt_density_threshold(t - 1, next_eps, variant))
        throw InvariantError("invariant breach: parity component below the recursive threshold");

    // every edge of the component has one depth k >= 1
    int k = -1;
    for (auto [a, b] : best.edges()) {
        Vertex la = *sub.index_of(best.id(a)), lb = *sub.index_of(best.id(b));
        int depth = tree.edge_depth(la, lb);
        if (k < 0) k = depth;
        if (depth != k) throw InvariantError("invariant breach: parity component mixes edge depths");
    }
    if (k < 1) throw InvariantError("invariant breach: parity component at depth 0");

    KtModel inner = small_kt_model(best, t - 1, next_eps, variant);

    VertexSet bt{u, v};
    for (const auto &set : inner.branch_sets) {
        VertexSet local = sub.to_local(set);
        Vertex vi = -1;
        for (Vertex z : local) {
            if (tree.depth[z] < k) throw InvariantError("invariant breach: branch vertex above depth k");
            if (tree.depth[z] == k && (vi < 0 || z < vi)) vi = z;
        }
        if (vi < 0) throw InvariantError("invariant breach: branch set without a depth-k vertex");
        for (Vertex p : tree.path_to_root(vi)) {
            if (p == vi) continue;
            if (tree.depth[p] >= k) throw InvariantError("invariant breach: path interior not above depth k");
            bt.push_back(p);
        }
    }
    std::sort(bt.begin(), bt.end());
    bt.erase(std::unique(bt.begin(), bt.end()), bt.end());

    KtModel model = inner;
    model.t = t;
    VertexSet bt_ids = sub.to_ids(bt);
    std::sort(bt_ids.begin(), bt_ids.end());
    model.branch_sets.push_back(std::move(bt_ids));

    check_model(g, model, "small_kt_model");
    check_branch_sizes(model, "small_kt_model");
    check_log_bound(model, h_kt(t, eps, variant), g.n(), "small_kt_model");
    return model;
}

int high_girth_clique_order(int r, int k) {
    std::int64_t target = r;
    for (int i = 0; i < k; ++i) target *= (r - 1);
    int t = 0;
    while (t < 62 && (std::int64_t{1} << t) + 1 <= target) ++t;  // 2^(t'-1)+1 <= target with t' = t+1
    return t;
}

HighGirthMinor high_girth_dense_minor(const Graph &g, int k) {
    if (k < 0) throw PreconditionError("k must be non-negative");
    if (g.n() == 0) throw PreconditionError("empty graph");
    const int r = g.min_degree();
    if (r < 3) throw PreconditionError("min degree " + std::to_string(r) + " < 3");
    auto girth = girth_exact(g);
    if (girth && *girth < 8 * k + 3)
        throw PreconditionError("girth " + std::to_string(*girth) + " < 8k+3 = " + std::to_string(8 * k + 3));

    HighGirthMinor out;
    out.min_degree_target = r;
    for (int i = 0; i < k; ++i) out.min_degree_target *= (r - 1);

    // maximal set of centers at pairwise distance > 2k, lowest ids first
    std::vector<char> blocked(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (blocked[v]) continue;
        out.centers.push_back(v);
        for (Vertex w : ball(g, v, 2 * k)) blocked[w] = 1;
    }

    // layered multi-source BFS; a vertex joins the lowest-labelled predecessor cell
    const int n = g.n();
    out.branch_of.assign(n, -1);
    std::vector<int> dist(n, -1);
    std::vector<Vertex> parent(n, -1);
    VertexSet layer;
    for (std::size_t i = 0; i < out.centers.size(); ++i) {
        Vertex c = out.centers[i];
        out.branch_of[c] = static_cast<int>(i);
        dist[c] = 0;
        layer.push_back(c);
    }
    int depth = 0;
    while (!layer.empty()) {
        VertexSet next;
        for (Vertex u : layer)
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] >= 0 && dist[w] <= depth) continue;
                if (dist[w] < 0) {
                    dist[w] = depth + 1;
                    next.push_back(w);
                }
                if (out.branch_of[w] < 0 || out.branch_of[u] < out.branch_of[w]) {
                    out.branch_of[w] = out.branch_of[u];
                    parent[w] = u;
                }
            }
        layer = std::move(next);
        ++depth;
    }

    out.path_to_center.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        if (dist[v] < 0) throw PreconditionError("high_girth_dense_minor: graph must be connected");
        if (dist[v] > 2 * k) throw InvariantError("construction failed: branch radius exceeds 2k");
        std::vector<Vertex> path{v};
        for (Vertex p = v; parent[p] >= 0; p = parent[p]) path.push_back(parent[p]);
        out.path_to_center[v] = std::move(path);
    }

    std::vector<VertexSet> groups(out.centers.size());
    for (Vertex v = 0; v < n; ++v) groups[out.branch_of[v]].push_back(v);
    out.minor = quotient(g, groups);
    if (out.minor.min_degree() < out.min_degree_target)
        throw std::runtime_error("construction failed: minor min degree " + std::to_string(out.minor.min_degree()) +
                                 " < " + std::to_string(out.min_degree_target));
    return out;
}

KtModel high_girth_kt_model(const Graph &g, int k) {
    HighGirthMinor hm = high_girth_dense_minor(g, k);
    const int t = high_girth_clique_order(g.min_degree(), k);
    if (t < 2) throw PreconditionError("clique order below 2");

    KtModel minor_model = small_kt_model(hm.minor, t, Rational(1), KtVariant::strong);

    // G-edge realising an H-edge between branch sets a and b (lowest endpoints)
    auto realise = [&](int a, int b) -> Edge {
        for (Vertex v = 0; v < g.n(); ++v) {
            if (hm.branch_of[v] != a) continue;
            for (Vertex w : g.neighbors(v))
                if (hm.branch_of[w] == b) return {v, w};
        }
        throw InvariantError("high_girth_kt_model: minor edge without a realising edge");
    };

    std::vector<VertexSet> lifted(t);
    auto add_path = [&](int i, Vertex v) {
        for (Vertex p : hm.path_to_center[v]) lifted[i].push_back(p);
    };
    for (int i = 0; i < t; ++i) {
        const VertexSet &ci = minor_model.branch_sets[i];
        lifted[i].push_back(hm.centers[ci.front()]);
        Graph sub = hm.minor.induced(ci);
        BfsTree tree = bfs_tree(sub, 0);
        for (Vertex x = 0; x < sub.n(); ++x) {
            if (tree.parent[x] < 0) continue;
            auto [v, w] = realise(sub.id(x), sub.id(tree.parent[x]));
            add_path(i, v);
            add_path(i, w);
        }
    }
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            bool done = false;
            for (Vertex a : minor_model.branch_sets[i]) {
                for (Vertex b : hm.minor.neighbors(a))
                    if (std::binary_search(minor_model.branch_sets[j].begin(), minor_model.branch_sets[j].end(), b)) {
                        auto [v, w] = realise(a, b);
                        add_path(i, v);
                        add_path(j, w);
                        done = true;
                        break;
                    }
                if (done) break;
            }
            if (!done) throw InvariantError("high_girth_kt_model: minor model sets not adjacent");
        }

    KtModel model{t, {}};
    for (auto &s : lifted) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        model.branch_sets.push_back(g.to_ids(s));
    }
    check_model(g, model, "high_girth_kt_model");
    const double per_path = 4.0 * k + 2.0;
    double bound = per_path * h_kt(t, Rational(1), KtVariant::strong) * std::log2(std::max(2, hm.minor.n())) +
                   per_path * t * (t - 1) / 2.0;
    if (static_cast<double>(model.total_size()) > bound + 1e-9)
        throw InvariantError("high_girth_kt_model: size bound exceeded");
    return model;
}

}  // namespace smallminors
