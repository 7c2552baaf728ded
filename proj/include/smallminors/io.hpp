#ifndef SMALLMINORS_IO_HPP
#define SMALLMINORS_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "smallminors/embedded.hpp"

namespace smallminors {

/// Malformed input text. Carries the 1-based line number when known.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string &what, int line = 0);
    int line() const { return line_; }

private:
    int line_;
};

/// "n m", then m lines "u v" (0-based); '#' starts a comment.
Graph read_edge_list(std::istream &in);
/// Writes local indices; edges ascending.
void write_edge_list(std::ostream &out, const Graph &g);

/// "n m g", then one line per vertex "v: u1 u2- u3 ..." in rotation order;
/// a trailing '-' marks a twisted edge. The genus field is optional on input
/// and checked when present.
EmbeddedGraph read_embedding(std::istream &in);
void write_embedding(std::ostream &out, const EmbeddedGraph &e);

/// "t <t> size <total>", then one line of ids per branch set.
KtModel read_certificate(std::istream &in);
void write_certificate(std::ostream &out, const KtModel &m);

Graph load_edge_list(const std::string &path);
EmbeddedGraph load_embedding(const std::string &path);
KtModel load_certificate(const std::string &path);

}  // namespace smallminors

#endif
