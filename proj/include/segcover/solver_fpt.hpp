#pragma once

#include "segcover/instance.hpp"
#include "segcover/oracle.hpp"

#include <optional>

namespace segcover {

// Instance with no segment weight-equal and coverage-dominated by another;
// kept[i] is the original index of surviving segment i.
struct ReasonableInstance {
    Instance instance;
    std::vector<std::size_t> kept;
};

// Removes every segment A for which some distinct B of equal weight covers a
// superset of A's points, until no such pair remains. When two segments tie
// on both weight and coverage, the lower original index survives.
ReasonableInstance reduce_reasonable(const Instance& inst);

// A line through at least k+1 distinct points of the instance, or nullopt.
// Among qualifying lines, the one with the most points; ties go to the
// smallest canonical (a,b,c). Only lines spanned by two or more distinct
// points are considered.
std::optional<Line> find_long_line(const Instance& inst, int k);

// The hitting set R of segment indices: for each of the first k points
// x_1 < x_2 < ... of the instance on l (lexicographic order along the line),
// the segments collinear with l covering x_i but not x_{i-1}. Every cover of
// size <= k contains a member of R. Requires l to carry at least k+1
// distinct points and the instance to be reasonable.
std::vector<std::size_t> hitting_candidates(const ReasonableInstance& ri, const Line& l, int k);

struct SolveStats {
    std::size_t nodes = 0;
    int max_depth = 0;
    std::size_t max_children = 0;
};

// Minimum-weight cover of size <= k, or nullopt. Branch-and-reduce: make the
// instance reasonable, branch on the hitting set of a long line if one
// exists, declare infeasibility when no long line exists and |U| > k^2, and
// otherwise finish by brute force.
std::optional<Solution> solve_fpt(const Instance& inst, int k, SolveStats* stats = nullptr);

// solve_fpt restricted to uniform weights; throws std::invalid_argument if
// the weights are not all equal.
std::optional<Solution> solve_unweighted(const Instance& inst, int k, SolveStats* stats = nullptr);

}  // namespace segcover
