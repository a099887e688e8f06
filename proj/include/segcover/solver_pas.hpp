#pragma once

#include "segcover/instance.hpp"

#include <optional>

namespace segcover {

struct RoundedWeights {
    std::vector<Rational> weights;  // per segment, rounded up
    Rational W;                     // guessed heaviest solution weight
    int distinct_count = 0;         // distinct rounded values
};

// Multiplicative rounding against the guessed heaviest weight W: weights at
// most (eps/2k)*W are raised to that threshold, anything else is raised to
// the bracket value W/(1+eps/2)^i with W/(1+eps/2)^{i+1} < w <= W/(1+eps/2)^i.
// Requires eps > 0, k >= 1, W > 0, and every weight <= W.
RoundedWeights round_weights(const Instance& inst, const Rational& W, int k, const Rational& eps);

// (1+eps)-approximate minimum-weight cover of size <= k: for every distinct
// weight value W in the family, discard heavier segments, round what is
// left, solve exactly with the branching solver, and keep the answer of
// least original weight. Feasible iff a k-cover exists at all. The per-W
// branches run under OpenMP; solve_pas_serial is the reference path and
// produces the identical result.
std::optional<Solution> solve_pas(const Instance& inst, int k, const Rational& eps);
std::optional<Solution> solve_pas_serial(const Instance& inst, int k, const Rational& eps);

}  // namespace segcover
