#pragma once

#include <istream>
#include <optional>
#include <string>

#include "sylab/bigint.hpp"
#include "sylab/matroid.hpp"
#include "sylab/multigraph.hpp"

namespace sylab {

// binary <d> <n>
// <n lines of d bits, most significant coordinate first>
// [labels <name_0> ... <name_{n-1}>]
// [deleted <i> ...]
// Blank lines and lines starting with '#' are ignored. Errors are ParseError
// with the line number.
BinaryMatroid parse_matroid(std::istream& in);
BinaryMatroid parse_matroid(const std::string& text);
BinaryMatroid read_matroid_file(const std::string& path);
std::string emit_matroid(const BinaryMatroid& m);

// graph <V> <E>
// <E lines "u v">
// Edge ids are positions. A comment "# marked <k>" marks edge k.
Multigraph parse_graph(std::istream& in);
Multigraph parse_graph(const std::string& text);
Multigraph read_graph_file(const std::string& path);

// Edges are written in storage order, so a graph whose ids are 0..E-1 in
// that order round-trips exactly. tau and ratio go into comment lines.
struct GraphNotes {
  std::optional<BigInt> tau;
  std::optional<Rational> ratio;
};
std::string emit_graph(const Multigraph& g, const GraphNotes& notes = {});

// "0,2,5" (empty string for the empty set) and back. Throws ParseError.
SubsetMask parse_index_list(const std::string& text, std::size_t n);
std::string format_index_list(SubsetMask s);

}  // namespace sylab
