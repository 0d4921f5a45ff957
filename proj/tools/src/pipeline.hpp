#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grundylab/graph.hpp"

namespace grundylab::cli {

struct InputItem {
  std::string graph_id;        // g0, g1, ... in input order
  std::optional<Graph> graph;  // empty on parse failure
  std::string error;           // parse failure message
};

// Reads a whole file (or stdin for "-"), autodetects graph6 vs edge-list on
// the first meaningful line, and turns every graph or parse failure into one
// InputItem. A bad graph6 line costs one error item, not the batch; an
// edge-list failure ends the stream with one error item.
std::vector<InputItem> read_input(const std::string& path);

// Runs fn(i) for i in 0..count-1 on a worker pool and returns the results in
// index order, so output bytes do not depend on the thread count. fn must
// not touch anything but its own slot and must not throw.
std::vector<std::string> ordered_map(int count, int threads,
                                     const std::function<std::string(int)>& fn);

// --threads when positive, else GRUNDY_LAB_THREADS, else 1.
int resolve_threads(int flag_value);

}  // namespace grundylab::cli
