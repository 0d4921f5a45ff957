#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grundylab/graph.hpp"

namespace grundylab {

struct DominationWitness {
  int gamma = 0;
  std::vector<int> set;  // sorted
};

// One star of a partition: `apex` is adjacent to every other member and is
// itself listed in `members`.
struct StarPart {
  int apex = 0;
  std::vector<int> members;  // sorted, contains apex
};

struct StarPartition {
  std::vector<StarPart> parts;
};

struct StarPartitionResult {
  int s = 0;
  StarPartition partition;
};

// Thrown by the exact solvers when a configured deadline expires.
class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

bool is_dominating_set(const Graph& g, const std::vector<int>& set);

// Branch and bound over which vertex covers the first undominated vertex,
// with a greedy cover lower bound. Optional deadline for huge inputs.
DominationWitness domination_number_exact(
    const Graph& g,
    std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

// Reference oracle: minimum over all vertex subsets. Guarded by max_n.
DominationWitness domination_number_bruteforce(const Graph& g, int max_n = 16);

// The constructive transform behind s(G) = gamma(G): dominators are taken in
// ascending order and dominator u_i keeps the part {u_i} plus its neighbors
// not already spoken for. Requires min degree >= 1 and D dominating;
// singleton parts are legal.
StarPartition star_partition_from_dominating_set(const Graph& g, const std::vector<int>& dominators);

// True iff `p` partitions all vertices into stars. On failure *defect (if
// given) names the offending part or vertex.
bool is_star_partition(const Graph& g, const StarPartition& p, std::string* defect = nullptr);

// Exact star partition number via its own feasibility search over apex
// choices, starting from the admissible lower bound gamma(G). For graphs
// with min degree >= 1 the result must equal gamma; a mismatch would be an
// implementation bug and throws std::logic_error.
StarPartitionResult star_partition_number_exact(
    const Graph& g,
    std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

}  // namespace grundylab
