#include "smallminors/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace smallminors {

FormatError::FormatError(const std::string &what, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

// Yields non-empty lines with comments stripped.
class LineReader {
public:
    explicit LineReader(std::istream &in) : in_(in) {}

    bool next(std::string &out) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
            if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
            out = raw;
            return true;
        }
        return false;
    }
    int line() const { return line_; }

private:
    std::istream &in_;
    int line_ = 0;
};

long long parse_int(const std::string &tok, int line) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception &) {
        throw FormatError("expected an integer, got '" + tok + "'", line);
    }
    if (used != tok.size()) throw FormatError("expected an integer, got '" + tok + "'", line);
    return v;
}

std::vector<std::string> tokens(const std::string &s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

std::ifstream open(const std::string &path) {
    std::ifstream f(path);
    if (!f) throw FormatError("cannot open " + path);
    return f;
}

}  // namespace

Graph read_edge_list(std::istream &in) {
    LineReader r(in);
    std::string line;
    if (!r.next(line)) throw FormatError("missing header \"n m\"");
    auto head = tokens(line);
    if (head.size() != 2) throw FormatError("header must be \"n m\"", r.line());
    long long n = parse_int(head[0], r.line()), m = parse_int(head[1], r.line());
    if (n < 0 || m < 0) throw FormatError("negative size in header", r.line());
    std::vector<Edge> edges;
    while (r.next(line)) {
        auto t = tokens(line);
        if (t.size() != 2) throw FormatError("edge line must be \"u v\"", r.line());
        long long u = parse_int(t[0], r.line()), v = parse_int(t[1], r.line());
        if (u < 0 || v < 0 || u >= n || v >= n) throw FormatError("vertex out of range", r.line());
        if (u == v) throw FormatError("self loop", r.line());
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (static_cast<long long>(edges.size()) != m)
        throw FormatError("header promises " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    Graph g = Graph::from_edges(static_cast<int>(n), edges);
    if (g.m() != m) throw FormatError("duplicate edges");
    return g;
}

void write_edge_list(std::ostream &out, const Graph &g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

EmbeddedGraph read_embedding(std::istream &in) {
    LineReader r(in);
    std::string line;
    if (!r.next(line)) throw FormatError("missing header \"n m g\"");
    auto head = tokens(line);
    if (head.size() < 2 || head.size() > 3) throw FormatError("header must be \"n m\" or \"n m g\"", r.line());
    long long n = parse_int(head[0], r.line()), m = parse_int(head[1], r.line());
    std::optional<long long> genus;
    if (head.size() == 3) genus = parse_int(head[2], r.line());
    if (n <= 0 || m < 0) throw FormatError("bad size in header", r.line());
    std::vector<std::vector<Vertex>> rot(n);
    std::vector<std::vector<int>> sign(n);
    std::vector<char> seen(n, 0);
    std::vector<Edge> edges;
    while (r.next(line)) {
        auto colon = line.find(':');
        if (colon == std::string::npos) throw FormatError("rotation line must be \"v: u1 u2 ...\"", r.line());
        auto lhs = tokens(line.substr(0, colon));
        if (lhs.size() != 1) throw FormatError("rotation line must start with one vertex", r.line());
        long long v = parse_int(lhs[0], r.line());
        if (v < 0 || v >= n) throw FormatError("vertex out of range", r.line());
        if (seen[v]) throw FormatError("vertex " + std::to_string(v) + " listed twice", r.line());
        seen[v] = 1;
        for (std::string t : tokens(line.substr(colon + 1))) {
            int s = 1;
            if (t.back() == '-' || t.back() == '+') {
                s = t.back() == '-' ? -1 : 1;
                t.pop_back();
            }
            long long u = parse_int(t, r.line());
            if (u < 0 || u >= n || u == v) throw FormatError("bad neighbour " + t, r.line());
            rot[v].push_back(static_cast<Vertex>(u));
            sign[v].push_back(s);
            if (v < u) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(u));
        }
    }
    for (long long v = 0; v < n; ++v)
        if (!seen[v]) throw FormatError("no rotation line for vertex " + std::to_string(v));
    Graph g = Graph::from_edges(static_cast<int>(n), edges);
    if (g.m() != m) throw FormatError("header promises " + std::to_string(m) + " edges, rotations give " + std::to_string(g.m()));
    try {
        EmbeddedGraph e(std::move(g), std::move(rot), std::move(sign));
        if (genus && *genus != e.euler_genus())
            throw FormatError("header genus " + std::to_string(*genus) + " but faces give " + std::to_string(e.euler_genus()));
        return e;
    } catch (const PreconditionError &) {
        throw;
    } catch (const std::invalid_argument &ex) {
        throw FormatError(ex.what());
    }
}

void write_embedding(std::ostream &out, const EmbeddedGraph &e) {
    out << e.n() << ' ' << e.graph().m() << ' ' << e.euler_genus() << '\n';
    for (Vertex v = 0; v < e.n(); ++v) {
        out << v << ':';
        auto rot = e.rotation(v);
        for (std::size_t i = 0; i < rot.size(); ++i) {
            out << ' ' << rot[i];
            if (e.sign(v, i) < 0) out << '-';
        }
        out << '\n';
    }
}

KtModel read_certificate(std::istream &in) {
    LineReader r(in);
    std::string line;
    if (!r.next(line)) throw FormatError("missing header \"t <t> size <total>\"");
    auto head = tokens(line);
    if (head.size() != 4 || head[0] != "t" || head[2] != "size")
        throw FormatError("header must be \"t <t> size <total>\"", r.line());
    KtModel m;
    m.t = static_cast<int>(parse_int(head[1], r.line()));
    long long size = parse_int(head[3], r.line());
    while (r.next(line)) {
        VertexSet b;
        for (const auto &t : tokens(line)) b.push_back(static_cast<Vertex>(parse_int(t, r.line())));
        m.branch_sets.push_back(std::move(b));
    }
    if (static_cast<long long>(m.total_size()) != size)
        throw FormatError("header size " + std::to_string(size) + " but branch sets hold " + std::to_string(m.total_size()));
    return m;
}

void write_certificate(std::ostream &out, const KtModel &m) {
    out << "t " << m.t << " size " << m.total_size() << '\n';
    for (const auto &b : m.branch_sets) {
        for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
        out << '\n';
    }
}

Graph load_edge_list(const std::string &path) {
    auto f = open(path);
    return read_edge_list(f);
}

EmbeddedGraph load_embedding(const std::string &path) {
    auto f = open(path);
    return read_embedding(f);
}

KtModel load_certificate(const std::string &path) {
    auto f = open(path);
    return read_certificate(f);
}

}  // namespace smallminors
