#ifndef ONEPLANAR_IO_HPP
#define ONEPLANAR_IO_HPP

#include <iosfwd>
#include <string>

#include "oneplanar/embedding.hpp"
#include "oneplanar/graph.hpp"

namespace oneplanar {

// Thrown on malformed input; the message carries the line number.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lines of "u v" edges; '#' starts a comment; an optional leading "n <N>"
// fixes the vertex count (otherwise 1 + max id).  Self-loops and duplicate
// edges are rejected.
Graph parse_graph(std::istream& in);

// "n <N>" header followed by one "u v" line per edge in sorted order.
std::string emit_graph(const Graph& g);

// Lines: "uncrossable u v", "forbid u1 v1 u2 v2", "color <c> u v".  Every
// referenced edge must exist in g; colored sets are completed by assigning
// color 1 to unmentioned edges.
ConstraintSet parse_constraints(std::istream& in, const Graph& g);

// Lines of "cross u1 v1 u2 v2".
CrossingWitness parse_witness(std::istream& in, const Graph& g);

// One "cross u1 v1 u2 v2" line per pair in lexicographic order.
std::string emit_witness(const CrossingWitness& w);

}  // namespace oneplanar

#endif
