#include "pipeline.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "grundylab/graph_io.hpp"

namespace grundylab::cli {

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::vector<InputItem> read_input(const std::string& path) {
  const std::string text = slurp(path);

  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);

  std::string first;
  for (const auto& line : lines) {
    std::string body = strip_comment(line);
    if (!blank(body)) {
      first = body;
      break;
    }
  }

  std::vector<InputItem> items;
  if (first.empty()) return items;

  if (detect_format(first) == InputFormat::edge_list) {
    std::istringstream in(text);
    try {
      for (Graph& g : read_edge_list(in))
        items.push_back({"g" + std::to_string(items.size()), std::move(g), ""});
    } catch (const ParseError& e) {
      items.push_back({"g" + std::to_string(items.size()), std::nullopt, e.what()});
    }
    return items;
  }

  bool at_first = true;
  for (auto line : lines) {
    if (at_first && line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    if (blank(line)) continue;
    at_first = false;
    const std::string id = "g" + std::to_string(items.size());
    try {
      items.push_back({id, parse_graph6(line), ""});
    } catch (const ParseError& e) {
      items.push_back({id, std::nullopt, e.what()});
    }
  }
  return items;
}

std::vector<std::string> ordered_map(int count, int threads,
                                     const std::function<std::string(int)>& fn) {
  std::vector<std::string> out(static_cast<std::size_t>(count));
  const int workers = std::max(1, std::min(threads, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(i);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < count;) out[static_cast<std::size_t>(i)] = fn(i);
    });
  for (auto& t : pool) t.join();
  return out;
}

int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("GRUNDY_LAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<int>(v);
  }
  return 1;
}

}  // namespace grundylab::cli
