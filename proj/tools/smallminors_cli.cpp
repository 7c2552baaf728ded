#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "smallminors/bounds.hpp"
#include "smallminors/dense_minors.hpp"
#include "smallminors/generators.hpp"
#include "smallminors/io.hpp"
#include "smallminors/minor_search.hpp"
#include "smallminors/oracle.hpp"
#include "smallminors/surface_models.hpp"

using namespace smallminors;

namespace {

struct Input {
    Graph graph;
    std::optional<EmbeddedGraph> embedding;
};

Input load_any(const std::string &path) {
    std::ifstream f(path);
    if (!f) throw FormatError("cannot open " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    std::string text = buf.str();
    std::istringstream in(text);
    // rotation lines carry "v:"
    if (text.find(':') != std::string::npos) {
        EmbeddedGraph e = read_embedding(in);
        Graph g = e.graph();
        return {std::move(g), std::move(e)};
    }
    return {read_edge_list(in), std::nullopt};
}

const EmbeddedGraph &need_embedding(const Input &in) {
    if (!in.embedding) throw FormatError("this finder needs an embedding file (\"v: u1 u2 ...\" lines)");
    return *in.embedding;
}

KtVariant parse_variant(const std::string &s) {
    if (s == "strong") return KtVariant::strong;
    if (s == "weak") return KtVariant::weak;
    throw std::invalid_argument("variant must be weak or strong");
}

// writes to --out when given, else stdout
template <class F>
void emit(const std::string &out, F &&write) {
    if (out.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    write(f);
}

void write_cycle(std::ostream &os, const std::vector<Vertex> &c) {
    os << "cycle " << c.size() << '\n';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << '\n';
}

struct GenerateArgs {
    std::string kind;
    std::vector<long long> params;
    std::uint64_t seed = 1;
    bool edge_list = false;
    std::string out;
};

long long param(const GenerateArgs &a, std::size_t i, const char *name) {
    if (i >= a.params.size()) throw std::invalid_argument(a.kind + " needs parameter <" + name + ">");
    return a.params[i];
}

int run_generate(const GenerateArgs &a) {
    std::optional<EmbeddedGraph> e;
    std::optional<Graph> g;
    auto p = [&](std::size_t i, const char *name) { return static_cast<int>(param(a, i, name)); };
    const std::string &k = a.kind;
    if (k == "cycle-square") e = cycle_square(p(0, "length"));
    else if (k == "snub") e = snub_dodecahedron();
    else if (k == "icosahedron") e = icosahedron();
    else if (k == "dodecahedron") e = dodecahedron();
    else if (k == "cube") e = cube();
    else if (k == "wheel") e = wheel(p(0, "spokes"));
    else if (k == "plane-cycle") e = plane_cycle(p(0, "n"));
    else if (k == "k4") e = planar_k4();
    else if (k == "gadget") e = planar_4plus_eps_gadget(p(0, "k"));
    else if (k == "bouquet") e = genus_bouquet(p(0, "g"), p(1, "k"));
    else if (k == "one-face") e = surface_one_face_degree4(p(0, "g"), p(1, "k"));
    else if (k == "square-matching") e = cycle_square_plus_matching(p(0, "length"));
    else if (k == "torus") e = toroidal_grid(p(0, "columns"));
    else if (k == "high-girth") g = high_girth_regular(p(0, "n"), p(1, "d"), p(2, "girth"), a.seed);
    else if (k == "gnm") g = random_gnm(p(0, "n"), param(a, 1, "m"), a.seed);
    else if (k == "complete") g = complete_graph(p(0, "n"));
    else if (k == "cycle") g = cycle_graph(p(0, "n"));
    else throw std::invalid_argument("unknown generator " + k);
    emit(a.out, [&](std::ostream &os) {
        if (e && !a.edge_list) write_embedding(os, *e);
        else write_edge_list(os, e ? e->graph() : *g);
    });
    const Graph &gg = e ? e->graph() : *g;
    std::cerr << k << ": n=" << gg.n() << " m=" << gg.m();
    if (e) std::cerr << " faces=" << e->faces().size() << " euler_genus=" << e->euler_genus();
    std::cerr << '\n';
    return 0;
}

struct FindArgs {
    std::string what;
    std::string file;
    std::string eps = "1";
    int t = 4;
    std::string variant = "strong";
    std::string mode = "general";
    std::string out;
};

int run_find(const FindArgs &a) {
    Input in = load_any(a.file);
    const Graph &g = in.graph;
    const Rational eps = Rational::parse(a.eps);
    std::optional<KtModel> model;
    std::string bound;
    if (a.what == "k4") {
        model = small_k4_model(g, eps);
        bound = std::to_string(h_k4(eps) * std::log2(g.n()));
    } else if (a.what == "kt") {
        model = small_kt_model(g, a.t, eps, parse_variant(a.variant));
        bound = std::to_string(h_kt(a.t, eps, parse_variant(a.variant)) * std::log2(g.n()));
    } else if (a.what == "k3-nice") {
        model = nice_k3_model(g, eps);
        bound = std::to_string(h_k3_nice(eps) * std::log2(g.n()));
    } else if (a.what == "k4-planar") {
        const EmbeddedGraph &e = need_embedding(in);
        if (a.mode == "general") {
            model = planar_general_k4(e, eps);
            bound = std::to_string((Rational(8) / eps).ceil() + (Rational(2) / eps).ceil());
        } else if (a.mode == "deg5") {
            model = planar_3conn_k4(e, PlanarMode::deg5);
            bound = "8";
        } else if (a.mode == "avg") {
            model = planar_3conn_k4(e, PlanarMode::avg, eps);
            bound = std::to_string(2 + (Rational(8) / eps).ceil());
        } else {
            throw std::invalid_argument("mode must be general, deg5 or avg");
        }
    } else if (a.what == "k4-surface") {
        const EmbeddedGraph &e = need_embedding(in);
        model = surface_k4(e, eps);
        bound = std::to_string(q_surface_k4(eps) * std::log2(e.euler_genus() + 2.0));
    } else if (a.what == "cycle") {
        std::vector<Vertex> c;
        if (in.embedding && in.embedding->euler_genus() == 0) c = planar_short_face_cycle(*in.embedding, eps);
        else if (in.embedding) c = surface_girth_cycle(*in.embedding, eps);
        else c = short_cycle(g, eps);
        emit(a.out, [&](std::ostream &os) { write_cycle(os, c); });
        std::cerr << "cycle of length " << c.size() << '\n';
        return 0;
    } else if (a.what == "blind-edge") {
        BlindEdge b = blind_edge(need_embedding(in));
        emit(a.out, [&](std::ostream &os) {
            os << "edge " << b.edge.first << ' ' << b.edge.second << " sees " << b.sees_u << ' ' << b.sees_v << " bound "
               << b.bound << '\n';
        });
        return 0;
    } else {
        throw std::invalid_argument("unknown finder " + a.what);
    }
    emit(a.out, [&](std::ostream &os) { write_certificate(os, *model); });
    std::cerr << "K" << model->t << "-model with " << model->branch_sets.size() << " branch sets, size "
              << model->total_size() << " (bound " << bound << ")\n";
    return 0;
}

struct VerifyArgs {
    std::string cert;
    std::string file;
    std::string eps;
    std::string variant = "strong";
};

int run_verify(const VerifyArgs &a) {
    KtModel m = load_certificate(a.cert);
    Input in = load_any(a.file);
    ModelCheck chk;
    try {
        chk = validate_model(in.graph, m);
    } catch (const std::out_of_range &) {
        chk = {false, "vertex: certificate names a vertex missing from the graph"};
    }
    if (!chk) {
        std::cout << "fail: " << chk.violation << '\n';
        return 1;
    }
    if (!a.eps.empty()) {
        Rational eps = Rational::parse(a.eps);
        double coeff = m.t == 4 ? h_k4(eps) : m.t == 3 ? h_k3_nice(eps) : h_kt(m.t, eps, parse_variant(a.variant));
        if (!within_log_bound(static_cast<double>(m.total_size()), coeff, in.graph.n())) {
            std::cout << "fail: size: " << m.total_size() << " exceeds " << coeff * std::log2(in.graph.n()) << '\n';
            return 1;
        }
    }
    std::cout << "pass: K" << m.t << "-model of size " << m.total_size() << '\n';
    return 0;
}

struct OracleArgs {
    std::string what;
    std::string file;
    int t = 4;
    int cap = kDefaultOracleCap;
    std::string alpha_max = "60";
    int d_max = 10;
    int f_max = 40;
};

int run_oracle(const OracleArgs &a) {
    if (a.what == "min-model") {
        if (a.file.empty()) throw std::invalid_argument("min-model needs a graph file");
        Graph g = load_any(a.file).graph;
        OracleResult r = min_kt_model_parallel(g, a.t, a.cap);
        if (!r.min_size) {
            std::cout << "none <= " << r.cap << '\n';
            return 0;
        }
        std::cout << "min " << *r.min_size << '\n';
        write_certificate(std::cout, *r.witness);
        return 0;
    }
    if (a.what == "girth") {
        if (a.file.empty()) throw std::invalid_argument("girth needs a graph file");
        auto gi = girth_exact_parallel(load_any(a.file).graph);
        std::cout << (gi ? std::to_string(*gi) : "infinity") << '\n';
        return 0;
    }
    if (a.what == "face-ineq" || a.what == "face-ineq-surface") {
        Rational am = Rational::parse(a.alpha_max);
        SweepResult r = a.what == "face-ineq" ? check_face_inequality_parallel(am, a.d_max, a.f_max) : check_face_inequality_surface_parallel(am, a.d_max, a.f_max);
        if (r.pass) {
            std::cout << "pass: " << r.alphas << " alphas, " << r.hypothesis_instances << " instances meet the hypothesis\n";
            return 0;
        }
        std::cout << "counterexample: alpha " << r.alpha->str() << " faces";
        for (int f : r.faces) std::cout << ' ' << f;
        std::cout << '\n';
        return 1;
    }
    throw std::invalid_argument("unknown oracle " + a.what);
}

struct BenchArgs {
    int from = 8;
    int to = 16;
    std::string degree = "5";
    std::string eps = "1";
    std::uint64_t seed = 1;
    std::string out;
};

int run_bench(const BenchArgs &a) {
    const Rational deg = Rational::parse(a.degree), eps = Rational::parse(a.eps);
    emit(a.out, [&](std::ostream &os) {
        os << "n\tlog2n\tsize\tsize_over_log2n\tseconds\n";
        for (int e = a.from; e <= a.to; ++e) {
            const int n = 1 << e;
            const std::int64_t m = (deg * Rational(n) / Rational(2)).ceil();
            Graph g = random_gnm(n, m, a.seed + static_cast<std::uint64_t>(e));
            auto t0 = std::chrono::steady_clock::now();
            KtModel model = small_k4_model(g, eps);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            os << n << '\t' << e << '\t' << model.total_size() << '\t'
               << static_cast<double>(model.total_size()) / e << '\t' << secs << '\n';
        }
    });
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Small complete-minor models in dense graphs"};
    app.require_subcommand(1);

    GenerateArgs ga;
    auto *gen = app.add_subcommand("generate", "Write a generator's graph or embedding");
    gen->add_option("kind", ga.kind,
                    "cycle-square, snub, icosahedron, dodecahedron, cube, wheel, plane-cycle, k4, gadget, bouquet, "
                    "one-face, square-matching, torus, high-girth, gnm, complete, cycle")
        ->required();
    gen->add_option("params", ga.params, "Integer parameters of the generator");
    gen->add_option("--seed", ga.seed, "RNG seed");
    gen->add_flag("--edge-list", ga.edge_list, "Drop the rotation system");
    gen->add_option("--out", ga.out, "Output file (default stdout)");

    FindArgs fa;
    auto *find = app.add_subcommand("find", "Run a finder and write a certificate");
    find->add_option("what", fa.what, "k4, kt, k3-nice, k4-planar, k4-surface, cycle, blind-edge")
        ->required()
        ->check(CLI::IsMember({"k4", "kt", "k3-nice", "k4-planar", "k4-surface", "cycle", "blind-edge"}));
    find->add_option("file", fa.file, "Edge list or embedding")->required();
    find->add_option("--eps", fa.eps, "Density slack, \"p/q\" or decimal");
    find->add_option("--t", fa.t, "Clique order for kt");
    find->add_option("--variant", fa.variant, "weak or strong");
    find->add_option("--mode", fa.mode, "k4-planar: general, deg5 or avg");
    find->add_option("--out", fa.out, "Certificate file (default stdout)");

    VerifyArgs va;
    auto *ver = app.add_subcommand("verify", "Check a certificate against a graph");
    ver->add_option("cert", va.cert)->required();
    ver->add_option("file", va.file)->required();
    ver->add_option("--eps", va.eps, "Also check the logarithmic size bound");
    ver->add_option("--variant", va.variant, "weak or strong");

    OracleArgs oa;
    auto *ora = app.add_subcommand("oracle", "Brute-force ground truth");
    ora->add_option("what", oa.what, "min-model, girth, face-ineq, face-ineq-surface")
        ->required()
        ->check(CLI::IsMember({"min-model", "girth", "face-ineq", "face-ineq-surface"}));
    ora->add_option("file", oa.file);
    ora->add_option("--t", oa.t);
    ora->add_option("--cap", oa.cap);
    ora->add_option("--alpha-max", oa.alpha_max);
    ora->add_option("--d-max", oa.d_max);
    ora->add_option("--f-max", oa.f_max);

    BenchArgs ba;
    auto *ben = app.add_subcommand("bench", "Model size against log2 n on random graphs (TSV)");
    ben->add_option("--from", ba.from, "Smallest exponent");
    ben->add_option("--to", ba.to, "Largest exponent");
    ben->add_option("--degree", ba.degree, "Average degree");
    ben->add_option("--eps", ba.eps);
    ben->add_option("--seed", ba.seed);
    ben->add_option("--out", ba.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    try {
        if (*gen) return run_generate(ga);
        if (*find) return run_find(fa);
        if (*ver) return run_verify(va);
        if (*ora) return run_oracle(oa);
        if (*ben) return run_bench(ba);
    } catch (const PreconditionError &e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
