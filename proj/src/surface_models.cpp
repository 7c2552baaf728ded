#include "smallminors/surface_models.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <map>
#include <string>

#include "smallminors/bounds.hpp"
#include "smallminors/dense_minors.hpp"
#include "smallminors/minor_search.hpp"

namespace smallminors {

const char *to_string(ChargeScheme s) {
    switch (s) {
        case ChargeScheme::deg5: return "deg5";
        case ChargeScheme::avg4eps: return "avg4eps";
        case ChargeScheme::genus: return "genus";
        case ChargeScheme::blind240: return "blind240";
    }
    return "?";
}

namespace {

std::vector<std::vector<int>> face_incidence(const EmbeddedGraph &e) {
    std::vector<std::vector<int>> inc(e.n());
    const auto &faces = e.faces();
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (Vertex x : faces[f].walk) inc[x].push_back(static_cast<int>(f));
    return inc;
}

std::int64_t face_sum(const EmbeddedGraph &e, std::span<const int> at) {
    std::int64_t s = 0;
    for (int f : at) s += static_cast<std::int64_t>(e.faces()[f].length()) - 2;
    return s;
}

void require_eps(const Rational &eps, const Rational &hi) {
    if (eps <= Rational(0) || eps >= hi)
        throw PreconditionError("eps: need 0 < eps < " + hi.str() + ", got " + eps.str());
}

void require_average(const Graph &g, const Rational &target) {
    Rational avg = average_degree(g);
    if (avg < target)
        throw PreconditionError("average degree: " + avg.str() + " < " + target.str());
}

void require_min_degree(const Graph &g, int k) {
    if (g.min_degree() < k)
        throw PreconditionError("min degree: " + std::to_string(g.min_degree()) + " < " + std::to_string(k));
}

void require_planar(const EmbeddedGraph &e) {
    if (e.euler_genus() != 0)
        throw PreconditionError("genus: embedding has Euler genus " + std::to_string(e.euler_genus()) + ", need 0");
}

int visibility_bound(ChargeScheme s, const Rational &eps) {
    switch (s) {
        case ChargeScheme::deg5: return 7;
        case ChargeScheme::avg4eps: return static_cast<int>(1 + (Rational(8) / eps).ceil());
        case ChargeScheme::genus: return static_cast<int>(2 + (Rational(12) / eps).ceil());
        case ChargeScheme::blind240: return 12;
    }
    return 0;
}

// Scan used after preconditions are settled; only positivity of the total is needed.
VisibilityResult scan_visibility(const EmbeddedGraph &e, ChargeScheme scheme, const Rational &eps) {
    VisibilityResult r;
    r.report = charge_report(e, scheme, eps);
    if (!r.report.identity_holds()) throw InvariantError("charge total differs from its closed form");
    if (r.report.total <= Rational(0)) throw InvariantError("theorem breach: total charge is not positive");
    r.bound = visibility_bound(scheme, eps);
    auto inc = face_incidence(e);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < e.n(); ++v) {
        if (r.report.charges[v] <= Rational(0)) continue;
        std::int64_t fs = face_sum(e, inc[v]);
        if (fs > r.bound)
            throw InvariantError("theorem breach: vertex " + std::to_string(v) + " has positive charge but face sum " +
                                 std::to_string(fs));
        std::size_t s = e.sees(v).size();
        if (s < best) {
            best = s;
            r.vertex = v;
            r.face_sum = fs;
        }
    }
    if (r.vertex < 0) throw InvariantError("theorem breach: no vertex of positive charge");
    r.sees = best;
    return r;
}

std::vector<Vertex> bfs_path(const Graph &g, Vertex s, Vertex t, const std::vector<char> &allowed) {
    std::vector<Vertex> par(g.n(), -2);
    std::deque<Vertex> q{s};
    par[s] = -1;
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop_front();
        if (x == t) break;
        for (Vertex y : g.neighbors(x))
            if (allowed[y] && par[y] == -2) {
                par[y] = x;
                q.push_back(y);
            }
    }
    if (par[t] == -2) return {};
    std::vector<Vertex> path;
    for (Vertex x = t; x != -1; x = par[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

bool eq1(std::int64_t n, std::int64_t m, const Rational &eps) {
    return Rational(2 * m) > (Rational(4) + eps) * Rational(n - 2);
}

class GeneralPlanar {
public:
    GeneralPlanar(const EmbeddedGraph &e, const Rational &eps)
        : e_(e), g_(e.graph()), eps_(eps),
          cap_((Rational(8) / eps).ceil() + (Rational(2) / eps).ceil()),
          small_(2 + (Rational(2) / eps).ceil()) {}

    KtModel run(const VertexSet &s, int prev_n);

private:
    struct Step {
        std::optional<KtModel> model;
        std::optional<VertexSet> recurse;  // g-local
    };

    KtModel any_model(const VertexSet &s) const {
        auto m = find_kt_model(g_.induced(s), 4);
        if (!m) throw InvariantError("expected a K4 minor in a small dense piece");
        return *m;
    }

    static VertexSet lift(const VertexSet &s, const VertexSet &local) {
        VertexSet out;
        for (Vertex x : local) out.push_back(s[x]);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::optional<Step> separation(const VertexSet &s, const Graph &h, const VertexSet &cut, const VertexSet &comp);
    KtModel contract_path(const VertexSet &s, const Graph &h, Vertex v);

    const EmbeddedGraph &e_;
    const Graph &g_;
    Rational eps_;
    std::int64_t cap_;
    std::int64_t small_;
};

std::optional<GeneralPlanar::Step> GeneralPlanar::separation(const VertexSet &s, const Graph &h, const VertexSet &cut,
                                                             const VertexSet &comp) {
    std::vector<char> in_a(h.n(), 0);
    for (Vertex x : comp) in_a[x] = 1;
    VertexSet a = comp, b;
    for (Vertex x : cut) a.push_back(x);
    for (Vertex x = 0; x < h.n(); ++x)
        if (!in_a[x]) b.push_back(x);
    std::sort(a.begin(), a.end());
    Graph ga = h.induced(a), gb = h.induced(b);
    VertexSet g1, g2;
    if (eq1(ga.n(), ga.m(), eps_)) {
        g1 = a;
        g2 = b;
    } else if (eq1(gb.n(), gb.m(), eps_)) {
        g1 = b;
        g2 = a;
    } else {
        throw InvariantError("neither side of a separation keeps the density condition");
    }
    Graph h1 = h.induced(g1);
    const std::int64_t n1 = h1.n(), m1 = h1.m();
    Step st;
    if (n1 >= small_) {
        st.recurse = lift(s, g1);
        return st;
    }
    if (m1 > 2 * n1 - 3 || cut.size() == 1) {
        st.model = any_model(lift(s, g1));
        return st;
    }
    bool adjacent = cut.size() == 2 && h.adjacent(cut[0], cut[1]);
    if (cut.empty() || adjacent || m1 <= 2 * n1 - 4) {
        Graph h2 = h.induced(g2);
        if (!eq1(h2.n(), h2.m(), eps_)) throw InvariantError("other side of a separation lost the density condition");
        st.recurse = lift(s, g2);
        return st;
    }
    return std::nullopt;
}

KtModel GeneralPlanar::contract_path(const VertexSet &s, const Graph &h, Vertex v) {
    std::array<Vertex, 1> rv{v};
    Graph hv = h.without(rv);
    VertexSet cv = cut_vertices(hv);
    if (cv.empty()) throw InvariantError("vertex reported in a cut-pair has none");
    Vertex w = cv.front() < v ? cv.front() : cv.front() + 1;
    VertexSet cut = {std::min(v, w), std::max(v, w)};
    Graph rest = h.without(cut);
    VertexSet g1;
    for (const VertexSet &c : connected_components(rest)) {
        VertexSet comp;
        for (Vertex x : c) comp.push_back(*h.index_of(rest.id(x)));
        VertexSet a = comp;
        a.insert(a.end(), cut.begin(), cut.end());
        std::sort(a.begin(), a.end());
        Graph ga = h.induced(a);
        if (eq1(ga.n(), ga.m(), eps_)) {
            g1 = a;
            break;
        }
        VertexSet b;
        std::vector<char> in(h.n(), 0);
        for (Vertex x : comp) in[x] = 1;
        for (Vertex x = 0; x < h.n(); ++x)
            if (!in[x]) b.push_back(x);
        Graph gb = h.induced(b);
        if (eq1(gb.n(), gb.m(), eps_)) {
            g1 = b;
            break;
        }
    }
    if (g1.empty()) throw InvariantError("no side of the cut-pair keeps the density condition");
    std::vector<char> in1(h.n(), 0);
    for (Vertex x : g1) in1[x] = 1;

    // facial arc from v to w through the other side
    EmbeddedGraph eh = e_.induced(s);
    std::vector<char> allowed(h.n(), 0);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    VertexSet arc_best;
    for (int f : eh.faces_at(v)) {
        const auto &walk = eh.faces()[f].walk;
        const std::size_t len = walk.size();
        for (std::size_t i = 0; i < len; ++i) {
            if (walk[i] != v) continue;
            for (std::size_t dir : {std::size_t{1}, len - 1}) {
                VertexSet arc;
                for (std::size_t d = 1; d < len; ++d) {
                    Vertex x = walk[(i + d * dir) % len];
                    if (x == w) {
                        if (!arc.empty() && arc.size() < best) {
                            best = arc.size();
                            arc_best = arc;
                        }
                        break;
                    }
                    if (in1[x]) break;
                    arc.push_back(x);
                }
            }
        }
    }
    if (arc_best.empty()) throw InvariantError("no facial path between the cut-pair");
    for (Vertex x : arc_best) allowed[x] = 1;
    allowed[v] = allowed[w] = 1;
    std::vector<Vertex> path = bfs_path(h, v, w, allowed);
    if (path.size() < 3) throw InvariantError("facial path between the cut-pair is degenerate");
    VertexSet interior(path.begin() + 1, path.end() - 1);
    if (static_cast<std::int64_t>(interior.size()) > (Rational(8) / eps_).ceil() - 2)
        throw InvariantError("facial path longer than the visibility bound allows");

    // g1 plus the edge vw
    std::vector<Vertex> pos(h.n(), -1);
    for (std::size_t i = 0; i < g1.size(); ++i) pos[g1[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (Vertex x : g1)
        for (Vertex y : h.neighbors(x))
            if (x < y && in1[y]) edges.emplace_back(pos[x], pos[y]);
    edges.emplace_back(pos[v], pos[w]);
    Graph contracted = Graph::from_edges(static_cast<int>(g1.size()), edges);
    auto km = find_kt_model(contracted, 4);
    if (!km) throw InvariantError("contracted piece has no K4 minor");
    KtModel out;
    out.t = 4;
    const Vertex vid = g_.id(s[v]), wid = g_.id(s[w]);
    VertexSet interior_ids;
    for (Vertex x : interior) interior_ids.push_back(g_.id(s[x]));
    bool attached = false;
    for (const VertexSet &bs : km->branch_sets) {
        VertexSet mapped;
        for (Vertex x : bs) mapped.push_back(g_.id(s[g1[x]]));
        bool has_v = std::find(mapped.begin(), mapped.end(), vid) != mapped.end();
        bool has_w = std::find(mapped.begin(), mapped.end(), wid) != mapped.end();
        if (!attached && (has_v || has_w)) {
            mapped.insert(mapped.end(), interior_ids.begin(), interior_ids.end());
            attached = true;
        }
        out.branch_sets.push_back(std::move(mapped));
    }
    out.normalize();
    return out;
}

KtModel GeneralPlanar::run(const VertexSet &s, int prev_n) {
    Graph h = g_.induced(s);
    const int n = h.n();
    if (prev_n >= 0 && n >= prev_n) throw InvariantError("recursion did not shrink the graph");
    if (!eq1(n, h.m(), eps_)) throw InvariantError("recursion lost the density condition");
    if (n <= cap_) return any_model(s);

    for (Vertex v = 0; v < n; ++v)
        if (h.degree(v) <= 2) {
            VertexSet t = s;
            t.erase(t.begin() + v);
            return run(t, n);
        }

    auto follow = [&](const Step &st) {
        if (st.model) return *st.model;
        return run(*st.recurse, n);
    };

    auto comps = connected_components(h);
    if (comps.size() > 1)
        if (auto st = separation(s, h, {}, comps.front())) return follow(*st);

    for (Vertex c : cut_vertices(h)) {
        std::array<Vertex, 1> rc{c};
        Graph rest = h.without(rc);
        for (const VertexSet &comp : connected_components(rest)) {
            VertexSet local;
            for (Vertex x : comp) local.push_back(*h.index_of(rest.id(x)));
            if (auto st = separation(s, h, {c}, local)) return follow(*st);
        }
    }

    for (Vertex v = 0; v < n; ++v) {
        std::array<Vertex, 1> rv{v};
        Graph hv = h.without(rv);
        for (Vertex x : cut_vertices(hv)) {
            Vertex w = x < v ? x : x + 1;
            if (w < v) continue;
            VertexSet cut = {v, w};
            Graph rest = h.without(cut);
            for (const VertexSet &comp : connected_components(rest)) {
                VertexSet local;
                for (Vertex y : comp) local.push_back(*h.index_of(rest.id(y)));
                if (auto st = separation(s, h, cut, local)) return follow(*st);
            }
        }
    }

    EmbeddedGraph eh = e_.induced(s);
    VisibilityResult vis = scan_visibility(eh, ChargeScheme::avg4eps, eps_);
    if (!in_cut_pair(h, vis.vertex)) return visibility_wheel_k4(eh, vis.vertex);
    return contract_path(s, h, vis.vertex);
}

void check_model(const Graph &g, const KtModel &m, std::int64_t bound, const char *what) {
    if (auto chk = validate_model(g, m); !chk) throw InvariantError(std::string(what) + ": invalid model: " + chk.violation);
    if (static_cast<std::int64_t>(m.total_size()) > bound)
        throw InvariantError(std::string(what) + ": model of size " + std::to_string(m.total_size()) +
                             " exceeds bound " + std::to_string(bound));
}

}  // namespace

ChargeReport charge_report(const EmbeddedGraph &e, ChargeScheme scheme, const Rational &eps) {
    const Graph &g = e.graph();
    const std::int64_t n = g.n(), m = g.m(), gen = e.euler_genus();
    ChargeReport r;
    r.scheme = scheme;
    r.eps = eps;
    auto inc = face_incidence(e);
    const Rational a = Rational(8) + Rational(2) * eps;
    const Rational b = Rational(8) + Rational(3) * eps;
    const Rational c = Rational(24) + Rational(6) * eps;
    const Rational gn(gen, n);
    r.charges.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
        Rational inv;
        for (int f : inc[v]) inv += Rational(1, static_cast<std::int64_t>(e.faces()[f].length()));
        const Rational deg(g.degree(v));
        Rational ch;
        switch (scheme) {
            case ChargeScheme::deg5: ch = Rational(2) - deg + Rational(2) * inv; break;
            case ChargeScheme::avg4eps: ch = a - b * deg + c * inv; break;
            case ChargeScheme::genus: ch = a - b * deg + c * gn + c * inv; break;
            case ChargeScheme::blind240: ch = Rational(240) - Rational(120) * deg + Rational(240) * gn + Rational(240) * inv; break;
        }
        r.total += ch;
        r.charges.push_back(ch);
    }
    const Rational excess = Rational(4) * (Rational(2 * m) - (Rational(4) + eps) * Rational(n));
    switch (scheme) {
        case ChargeScheme::deg5: r.closed_form = Rational(4 - 2 * gen); break;
        case ChargeScheme::avg4eps:
            r.closed_form = excess + c * Rational(2 - gen);
            r.lower_bound = Rational(2) * c;
            break;
        case ChargeScheme::genus:
            r.closed_form = excess + Rational(2) * c;
            r.lower_bound = Rational(2) * c;
            break;
        case ChargeScheme::blind240: r.closed_form = Rational(480); break;
    }
    if (scheme == ChargeScheme::avg4eps || scheme == ChargeScheme::genus) r.alpha = Rational(6) + Rational(24) / eps;
    return r;
}

VisibilityResult low_visibility_vertex(const EmbeddedGraph &e, ChargeScheme scheme, const Rational &eps) {
    const Graph &g = e.graph();
    switch (scheme) {
        case ChargeScheme::deg5:
            require_planar(e);
            require_min_degree(g, 5);
            break;
        case ChargeScheme::avg4eps:
            require_planar(e);
            require_eps(eps, Rational(2));
            require_min_degree(g, 3);
            require_average(g, Rational(4) + eps);
            break;
        case ChargeScheme::genus: {
            if (eps <= Rational(0)) throw PreconditionError("eps: need eps > 0");
            require_min_degree(g, 3);
            require_average(g, Rational(4) + eps);
            Rational need = (Rational(24) / eps + Rational(6)) * Rational(e.euler_genus());
            if (Rational(g.n()) < need)
                throw PreconditionError("order too small: |G| = " + std::to_string(g.n()) + " < (24/eps + 6) g = " + need.str());
            break;
        }
        case ChargeScheme::blind240: throw std::invalid_argument("blind240 scheme is used by blind_edge");
    }
    return scan_visibility(e, scheme, eps);
}

BlindEdge blind_edge(const EmbeddedGraph &e) {
    const Graph &g = e.graph();
    require_min_degree(g, 5);
    const std::int64_t need = 240 * static_cast<std::int64_t>(e.euler_genus());
    if (g.n() < need)
        throw PreconditionError("order too small: |G| = " + std::to_string(g.n()) + " < 240 g = " + std::to_string(need));
    BlindEdge r;
    r.report = charge_report(e, ChargeScheme::blind240);
    if (!r.report.identity_holds()) throw InvariantError("charge total differs from its closed form");
    r.bound = e.euler_genus() == 0 ? 11 : 12;
    std::vector<std::size_t> sees(g.n());
    for (Vertex v = 0; v < g.n(); ++v) sees[v] = e.sees(v).size();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (auto [u, v] : g.edges()) {
        std::size_t worst = std::max(sees[u], sees[v]);
        if (worst <= static_cast<std::size_t>(r.bound) && worst < best) {
            best = worst;
            r.edge = {g.id(u), g.id(v)};
            r.sees_u = sees[u];
            r.sees_v = sees[v];
        }
    }
    if (best == std::numeric_limits<std::size_t>::max()) throw InvariantError("theorem breach: no blind edge");
    return r;
}

std::vector<Vertex> cycle_in_closed_walk(std::span<const Vertex> walk) {
    if (walk.empty()) return {};
    std::vector<Vertex> st;
    std::map<Vertex, std::size_t> at;
    auto visit = [&](Vertex x) -> bool {
        auto it = at.find(x);
        if (it == at.end()) {
            at[x] = st.size();
            st.push_back(x);
            return false;
        }
        std::size_t i = it->second;
        if (st.size() - i >= 3) {
            st.erase(st.begin(), st.begin() + static_cast<std::ptrdiff_t>(i));
            return true;
        }
        while (st.size() > i + 1) {
            at.erase(st.back());
            st.pop_back();
        }
        return false;
    };
    for (Vertex x : walk)
        if (visit(x)) return st;
    if (visit(walk.front())) return st;
    return {};
}

std::vector<Vertex> planar_short_face_cycle(const EmbeddedGraph &e, const Rational &eps) {
    require_planar(e);
    require_eps(eps, Rational(4));
    require_average(e.graph(), Rational(2) + eps);
    EmbeddedGraph c = e.induced(densest_component(e.graph()));
    const Face *shortest = &c.faces().front();
    for (const Face &f : c.faces())
        if (f.length() < shortest->length()) shortest = &f;
    std::vector<Vertex> cyc = cycle_in_closed_walk(shortest->walk);
    if (cyc.size() < 3) throw InvariantError("shortest facial walk contains no cycle");
    const std::int64_t bound = 1 + (Rational(4) / eps).ceil();
    if (static_cast<std::int64_t>(cyc.size()) > bound) throw InvariantError("facial cycle exceeds 1 + ceil(4/eps)");
    return c.graph().to_ids(cyc);
}

Face surface_short_face(const EmbeddedGraph &e, const Rational &eps) {
    if (eps <= Rational(0)) throw PreconditionError("eps: need eps > 0");
    require_average(e.graph(), Rational(2) + eps);
    const Face *shortest = &e.faces().front();
    for (const Face &f : e.faces())
        if (f.length() < shortest->length()) shortest = &f;
    Rational bound = (Rational(4) / eps + Rational(2)) * Rational(e.euler_genus() + 1);
    if (Rational(static_cast<std::int64_t>(shortest->length())) > bound)
        throw InvariantError("shortest face exceeds (4/eps + 2)(g + 1)");
    return *shortest;
}

std::vector<Vertex> surface_girth_cycle(const EmbeddedGraph &e, const Rational &eps) {
    const Graph &g = e.graph();
    if (eps <= Rational(0)) throw PreconditionError("eps: need eps > 0");
    require_average(g, Rational(2) + eps);
    const Rational target = Rational(2) + eps;

    // drop min-degree vertices while the density survives
    std::vector<char> alive(g.n(), 1);
    std::vector<int> deg(g.n());
    for (Vertex v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
    std::int64_t n = g.n(), m = g.m();
    while (n > 1) {
        Vertex best = -1;
        for (Vertex v = 0; v < g.n(); ++v)
            if (alive[v] && (best < 0 || deg[v] < deg[best])) best = v;
        if (Rational(2 * (m - deg[best])) < target * Rational(n - 1)) break;
        alive[best] = 0;
        --n;
        m -= deg[best];
        for (Vertex y : g.neighbors(best))
            if (alive[y]) --deg[y];
    }
    VertexSet keep;
    for (Vertex v = 0; v < g.n(); ++v)
        if (alive[v]) keep.push_back(v);
    Graph trimmed = g.induced(keep);
    VertexSet comp;
    for (Vertex x : densest_component(trimmed)) comp.push_back(keep[x]);
    EmbeddedGraph c = e.induced(comp);

    const Face *shortest = &c.faces().front();
    for (const Face &f : c.faces())
        if (f.length() < shortest->length()) shortest = &f;
    std::vector<Vertex> cyc;
    if (Rational(static_cast<std::int64_t>(shortest->length())) < Rational(6) + Rational(12) / eps) {
        cyc = c.graph().to_ids(cycle_in_closed_walk(shortest->walk));
        if (cyc.size() < 3) throw InvariantError("facial walk contains no cycle");
    } else {
        cyc = short_cycle(c.graph(), eps);
    }
    if (!within_log_bound(static_cast<double>(cyc.size()), h_surface_girth(eps), e.euler_genus() + 2.0))
        throw InvariantError("cycle exceeds h(eps) log2(g + 2)");
    return cyc;
}

bool is_three_connected(const Graph &g) {
    if (g.n() < 4 || !is_connected(g)) return false;
    if (!cut_vertices(g).empty()) return false;
    for (Vertex v = 0; v < g.n(); ++v)
        if (in_cut_pair(g, v)) return false;
    return true;
}

KtModel planar_3conn_k4(const EmbeddedGraph &e, PlanarMode mode, const Rational &eps) {
    require_planar(e);
    if (!is_three_connected(e.graph())) throw PreconditionError("3-connected: graph is not 3-connected");
    VisibilityResult vis = mode == PlanarMode::deg5 ? low_visibility_vertex(e, ChargeScheme::deg5)
                                                    : low_visibility_vertex(e, ChargeScheme::avg4eps, eps);
    KtModel m = visibility_wheel_k4(e, vis.vertex);
    check_model(e.graph(), m, 1 + vis.bound, "planar_3conn_k4");
    return m;
}

KtModel planar_general_k4(const EmbeddedGraph &e, const Rational &eps) {
    require_planar(e);
    require_eps(eps, Rational(2));
    const Graph &g = e.graph();
    const std::int64_t n = g.n(), m = g.m();
    if (!eq1(n, m, eps))
        throw PreconditionError("insufficient density: 2m = " + std::to_string(2 * m) + " <= (4+eps)(n-2) = " +
                                ((Rational(4) + eps) * Rational(n - 2)).str());
    if (n < 2 + (Rational(2) / eps).ceil() && average_degree(g) < Rational(4) + eps)
        throw PreconditionError("insufficient density: average degree below 4+eps on a small graph");
    GeneralPlanar solver(e, eps);
    VertexSet all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    KtModel model = solver.run(all, -1);
    model.normalize();
    check_model(g, model, (Rational(8) / eps).ceil() + (Rational(2) / eps).ceil(), "planar_general_k4");
    return model;
}

KtModel surface_k4(const EmbeddedGraph &e, const Rational &eps) {
    const Graph &g = e.graph();
    if (eps <= Rational(0)) throw PreconditionError("eps: need eps > 0");
    require_average(g, Rational(4) + eps);
    if (!is_three_connected(g)) throw PreconditionError("3-connected: graph is not 3-connected");
    const int gen = e.euler_genus();
    if (Rational(g.n()) <= (Rational(24) / eps + Rational(6)) * Rational(gen)) {
        KtModel m = small_k4_model(g, eps);
        if (!within_log_bound(static_cast<double>(m.total_size()), q_surface_k4(eps), gen + 2.0))
            throw InvariantError("surface_k4: model exceeds q(eps) log2(g + 2)");
        return m;
    }
    VisibilityResult vis = low_visibility_vertex(e, ChargeScheme::genus, eps);
    KtModel m;
    try {
        m = wheel_k4_around(e, vis.vertex);
    } catch (const PreconditionError &err) {
        throw PreconditionError(std::string("facewidth assertion violated: ") + err.what());
    }
    check_model(g, m, 1 + vis.bound, "surface_k4");
    return m;
}

}  // namespace smallminors
