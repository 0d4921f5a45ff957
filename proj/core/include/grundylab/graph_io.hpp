#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grundylab/graph.hpp"

namespace grundylab {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
        byte_offset(byte_offset) {}
  std::size_t byte_offset;
};

// graph6: upper-triangle bit vector in column-major order (for j=1..n-1 the
// bits (0,j)..(j-1,j)), packed into 6-bit groups, each group printed as
// byte value group+63. Header is n+63 for n <= 62, '~' plus three bytes for
// larger n, '~~' plus six bytes beyond the three-byte range.
Graph parse_graph6(std::string_view line);
std::string serialize_graph6(const Graph& g);  // requires n < 2^18

// Edge-list text: a header line "n m" followed by m lines "u v".
// '#' starts a comment anywhere; several graphs may follow each other in one
// stream. Tokens may be split across lines arbitrarily.
std::vector<Graph> read_edge_list(std::istream& in);

// One graph per nonempty line; an optional ">>graph6<<" prefix on the first
// line is skipped.
std::vector<Graph> read_graph6_lines(std::istream& in);

enum class InputFormat { graph6, edge_list };

// A line whose meaningful prefix parses as whitespace-separated integers is
// edge-list (digits and blanks are below the graph6 byte range); anything
// else is treated as graph6.
InputFormat detect_format(std::string_view first_line);

}  // namespace grundylab
