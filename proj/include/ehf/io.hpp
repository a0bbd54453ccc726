#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "ehf/graph.hpp"
#include "ehf/rational.hpp"

namespace ehf {

// Thrown for malformed input files; message carries the line number.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical text format: line 1 "n m", then m lines "u v" with 0 <= u < v < n.
// '#' starts a comment; blank lines ignored. DIMACS-style "p edge n m" /
// "e u v" (1-indexed) is accepted on input.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_dimacs(std::ostream& out, const Graph& g);

// Weight file: lines "v num den" or "v int"; missing vertices weigh 0.
std::map<int, Rat> read_weights(std::istream& in);
std::map<int, Rat> read_weights_file(const std::string& path);

}  // namespace ehf
