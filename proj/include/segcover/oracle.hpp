#pragma once

#include "segcover/instance.hpp"

#include <optional>

namespace segcover {

// Exhaustive minimum-weight cover of size <= k, or nullopt if none exists.
// The search branches only on segments covering the lowest-index uncovered
// point (any cover must contain one), which keeps it exact while pruning
// hard. Ties in weight are broken by the lexicographically smallest index
// set among the covers the search visits, so the result is deterministic.
// Runs single-threaded.
std::optional<Solution> brute_force(const Instance& inst, int k);

// Smallest c <= limit such that some c of the masks union to a superset of
// target; nullopt if no such c exists.
std::optional<int> min_cover_size(const Bitset& target, const std::vector<Bitset>& masks,
                                  int limit);

}  // namespace segcover
