#include "segcover/solver_pas.hpp"

#include "segcover/solver_fpt.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace segcover {

RoundedWeights round_weights(const Instance& inst, const Rational& W, int k, const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("round_weights: eps must be positive");
    if (k < 1) throw std::invalid_argument("round_weights: k must be at least 1");
    if (W <= 0) throw std::invalid_argument("round_weights: W must be positive");
    const Rational threshold = eps * W / (2 * k);
    const Rational base = 1 + eps / 2;
    RoundedWeights out;
    out.W = W;
    out.weights.reserve(inst.segments.size());
    std::set<Rational> distinct;
    for (const WeightedSegment& s : inst.segments) {
        if (s.weight > W) throw std::invalid_argument("round_weights: segment heavier than W");
        Rational rounded;
        if (s.weight <= threshold) {
            rounded = threshold;
        } else {
            Rational bracket = W;
            while (s.weight <= bracket / base) bracket /= base;
            rounded = bracket;
        }
        distinct.insert(rounded);
        out.weights.push_back(std::move(rounded));
    }
    out.distinct_count = static_cast<int>(distinct.size());
    return out;
}

namespace {

// One guess of the heaviest solution weight: drop heavier segments, round,
// solve exactly, report the surviving original indices and original weight.
std::optional<Solution> solve_for_guess(const Instance& inst, int k, const Rational& eps,
                                        const Rational& W) {
    Instance filtered;
    filtered.points = inst.points;
    std::vector<std::size_t> orig;
    for (std::size_t i = 0; i < inst.segments.size(); ++i) {
        if (inst.segments[i].weight <= W) {
            filtered.segments.push_back(inst.segments[i]);
            orig.push_back(i);
        }
    }
    if (W > 0) {
        const RoundedWeights rounded = round_weights(filtered, W, k, eps);
        for (std::size_t i = 0; i < filtered.segments.size(); ++i) {
            filtered.segments[i].weight = rounded.weights[i];
        }
    }
    // W == 0 keeps only zero-weight segments: a single weight value already,
    // nothing to round.
    auto sub = solve_fpt(filtered, k);
    if (!sub) return std::nullopt;
    Solution sol;
    sol.weight = 0;
    for (std::size_t i : sub->indices) {
        sol.indices.push_back(orig[i]);
        sol.weight += inst.segments[orig[i]].weight;
    }
    std::sort(sol.indices.begin(), sol.indices.end());
    return sol;
}

std::optional<Solution> merge_candidates(std::vector<std::optional<Solution>> candidates) {
    std::optional<Solution> best;
    for (auto& cand : candidates) {
        if (!cand) continue;
        if (!best || cand->weight < best->weight ||
            (cand->weight == best->weight && cand->indices < best->indices)) {
            best = std::move(cand);
        }
    }
    return best;
}

std::vector<Rational> distinct_weights(const Instance& inst) {
    std::set<Rational> values;
    for (const WeightedSegment& s : inst.segments) values.insert(s.weight);
    return {values.begin(), values.end()};
}

void check_pas_args(int k, const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("solve_pas: eps must be positive");
    if (k < 0) throw std::invalid_argument("solve_pas: k must be nonnegative");
}

}  // namespace

std::optional<Solution> solve_pas(const Instance& inst, int k, const Rational& eps) {
    check_pas_args(k, eps);
    if (inst.points.empty()) return Solution{{}, Rational(0)};
    if (k == 0) return std::nullopt;
    const std::vector<Rational> guesses = distinct_weights(inst);
    std::vector<std::optional<Solution>> candidates(guesses.size());
    const long n = static_cast<long>(guesses.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        candidates[static_cast<std::size_t>(i)] =
            solve_for_guess(inst, k, eps, guesses[static_cast<std::size_t>(i)]);
    }
    return merge_candidates(std::move(candidates));
}

std::optional<Solution> solve_pas_serial(const Instance& inst, int k, const Rational& eps) {
    check_pas_args(k, eps);
    if (inst.points.empty()) return Solution{{}, Rational(0)};
    if (k == 0) return std::nullopt;
    const std::vector<Rational> guesses = distinct_weights(inst);
    std::vector<std::optional<Solution>> candidates(guesses.size());
    for (std::size_t i = 0; i < guesses.size(); ++i) {
        candidates[i] = solve_for_guess(inst, k, eps, guesses[i]);
    }
    return merge_candidates(std::move(candidates));
}

}  // namespace segcover
