#pragma once

#include "segcover/bitset.hpp"
#include "segcover/errors.hpp"
#include "segcover/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace segcover {

struct WeightedSegment {
    Segment seg;
    Rational weight;

    bool operator==(const WeightedSegment& o) const { return seg == o.seg && weight == o.weight; }
};

// Optional generator provenance: one tag per point / per segment.
struct InstanceLabels {
    std::vector<std::string> points;
    std::vector<std::string> segments;

    bool operator==(const InstanceLabels&) const = default;
};

// A covering instance: the universe of points and the weighted segment
// family. Identity of points and segments is positional; duplicates are
// legal input.
struct Instance {
    std::vector<Point> points;
    std::vector<WeightedSegment> segments;
    std::optional<InstanceLabels> labels;

    bool operator==(const Instance& o) const {
        return points == o.points && segments == o.segments && labels == o.labels;
    }
};

struct Solution {
    std::vector<std::size_t> indices;  // sorted, duplicate-free
    Rational weight;                   // sum of the selected segments' weights

    bool operator==(const Solution& o) const { return indices == o.indices && weight == o.weight; }
};

struct CoverReport {
    bool covered = false;
    std::vector<std::size_t> uncovered_points;
    std::optional<Rational> delta_used;
};

// Builds a Solution from indices, computing the weight from the instance.
Solution make_solution(const Instance& inst, std::vector<std::size_t> indices);

// --- serialization (JSON, exact rational literals) ---

Instance load_instance(const std::string& text);
std::string save_instance(const Instance& inst);

// Solutions serialize as {"feasible": false} or
// {"feasible": true, "indices": [...], "weight": "r"}.
std::optional<Solution> load_solution(const std::string& text);
std::string save_solution(const std::optional<Solution>& sol);

CoverReport load_report(const std::string& text);
std::string save_report(const CoverReport& report);

// --- coverage ---

// Checks whether the selected segments cover every point, with closed
// membership, or with delta-extension when delta is given.
// Throws std::out_of_range on a bad index.
CoverReport verify_cover(const Instance& inst, const Solution& sol,
                         const std::optional<Rational>& delta = std::nullopt);

// Per-segment coverage bitmask over point indices (closed membership).
// coverage_sets may fan the segments out over OpenMP threads; the serial
// variant is the reference and always produces the identical result.
std::vector<Bitset> coverage_sets(const Instance& inst);
std::vector<Bitset> coverage_sets_serial(const Instance& inst);

// All lines spanned by at least two distinct points of the instance,
// canonically ordered, each with the sorted indices of the distinct points
// on it (duplicates of a coordinate are represented by the lowest index).
struct LineGroup {
    Line line;
    std::vector<std::size_t> point_indices;
};
std::vector<LineGroup> collinear_line_groups(const Instance& inst);

}  // namespace segcover
