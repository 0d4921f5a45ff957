#include "grundylab/graph_io.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>

namespace grundylab {

namespace {

constexpr std::string_view kG6Prefix = ">>graph6<<";

bool valid_g6_byte(unsigned char c) { return c >= 63 && c <= 126; }

// Decode `count` big-endian 6-bit groups starting at `pos`.
std::int64_t decode_groups(std::string_view s, std::size_t pos, int count) {
  std::int64_t x = 0;
  for (int i = 0; i < count; ++i) {
    unsigned char c = static_cast<unsigned char>(s[pos + static_cast<std::size_t>(i)]);
    if (!valid_g6_byte(c)) throw ParseError("malformed graph6 byte", pos + static_cast<std::size_t>(i));
    x = (x << 6) | (c - 63);
  }
  return x;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.substr(0, kG6Prefix.size()) == kG6Prefix) line.remove_prefix(kG6Prefix.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 string", 0);

  std::size_t pos = 0;
  std::int64_t n64;
  unsigned char c0 = static_cast<unsigned char>(line[0]);
  if (!valid_g6_byte(c0)) throw ParseError("malformed graph6 byte", 0);
  if (c0 != 126) {
    n64 = c0 - 63;
    pos = 1;
  } else {
    if (line.size() < 2) throw ParseError("truncated graph6 header", 1);
    if (static_cast<unsigned char>(line[1]) != 126) {
      if (line.size() < 4) throw ParseError("truncated graph6 header", line.size());
      n64 = decode_groups(line, 1, 3);
      pos = 4;
    } else {
      if (line.size() < 8) throw ParseError("truncated graph6 header", line.size());
      n64 = decode_groups(line, 2, 6);
      pos = 8;
    }
  }

  const std::int64_t nbits = n64 * (n64 - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() - pos < nbytes) throw ParseError("truncated graph6 bit string", line.size());
  if (line.size() - pos > nbytes) throw ParseError("trailing data after graph6 bit string", pos + nbytes);

  const int n = static_cast<int>(n64);
  std::vector<std::pair<int, int>> edges;
  std::int64_t b = 0;
  int i = 0, j = 1;
  for (std::size_t k = 0; k < nbytes; ++k) {
    unsigned char c = static_cast<unsigned char>(line[pos + k]);
    if (!valid_g6_byte(c)) throw ParseError("malformed graph6 byte", pos + k);
    int group = c - 63;
    for (int bit = 5; bit >= 0; --bit, ++b) {
      bool on = (group >> bit) & 1;
      if (b >= nbits) {
        if (on) throw ParseError("nonzero padding bits", pos + k);
        continue;
      }
      if (on) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph(n, edges);
}

std::string serialize_graph6(const Graph& g) {
  const std::int64_t n = g.vertex_count();
  if (n >= (std::int64_t{1} << 18))
    throw std::invalid_argument("serialize_graph6: n too large (requires n < 2^18)");

  std::string out;
  auto push_groups = [&out](std::int64_t x, int count) {
    for (int i = count - 1; i >= 0; --i)
      out.push_back(static_cast<char>(((x >> (6 * i)) & 63) + 63));
  };
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {  // three-byte header must not start with '~'
    out.push_back('~');
    push_groups(n, 3);
  } else {
    out.push_back('~');
    out.push_back('~');
    push_groups(n, 6);
  }

  int acc = 0, nbit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbit == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbit = 0;
      }
    }
  if (nbit > 0) out.push_back(static_cast<char>((acc << (6 - nbit)) + 63));
  return out;
}

namespace {

struct TokenScanner {
  std::string text;
  std::size_t pos = 0;

  explicit TokenScanner(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  void skip_blanks() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_blanks();
    return pos >= text.size();
  }

  std::int64_t next_int(const char* what) {
    skip_blanks();
    if (pos >= text.size()) throw ParseError(std::string("unexpected end of input, expected ") + what, pos);
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '#') ++pos;
    std::string tok = text.substr(start, pos - start);
    std::size_t used = 0;
    std::int64_t val = 0;
    try {
      val = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(std::string("expected ") + what + ", got '" + tok + "'", start);
    }
    if (used != tok.size() || val < 0)
      throw ParseError(std::string("expected ") + what + ", got '" + tok + "'", start);
    return val;
  }
};

}  // namespace

std::vector<Graph> read_edge_list(std::istream& in) {
  TokenScanner sc(in);
  std::vector<Graph> out;
  while (!sc.at_end()) {
    std::size_t header_pos = sc.pos;
    std::int64_t n = sc.next_int("vertex count");
    std::int64_t m = sc.next_int("edge count");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::int64_t e = 0; e < m; ++e) {
      int u = static_cast<int>(sc.next_int("edge endpoint"));
      int v = static_cast<int>(sc.next_int("edge endpoint"));
      edges.emplace_back(u, v);
    }
    try {
      out.emplace_back(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), header_pos);
    }
  }
  return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv = line;
    if (lineno == 1 && sv.substr(0, kG6Prefix.size()) == kG6Prefix) {
      sv.remove_prefix(kG6Prefix.size());
      if (sv.empty()) continue;
    }
    while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ')) sv.remove_suffix(1);
    if (sv.empty()) continue;
    try {
      out.push_back(parse_graph6(sv));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.byte_offset);
    }
  }
  return out;
}

InputFormat detect_format(std::string_view first_line) {
  bool has_digit = false;
  for (char c : first_line) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      has_digit = true;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      return InputFormat::graph6;
    }
  }
  return has_digit ? InputFormat::edge_list : InputFormat::graph6;
}

}  // namespace grundylab
