#pragma once

#include "segcover/instance.hpp"

#include <optional>
#include <variant>

namespace segcover {

// Collinear points addressed by their 1-D parameter along the carrying line
// (see line_parameter). coords are strictly increasing; point_indices holds
// one representative original point index per coordinate, or npos for
// synthetic sets built from raw coordinates.
struct CollinearSet {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Line line;
    std::vector<Rational> coords;
    std::vector<std::size_t> point_indices;

    std::size_t size() const { return coords.size(); }
    Point point_at(std::size_t i) const { return line_point(line, coords[i]); }
};

// Distinct instance points lying on l; each coordinate represented by its
// lowest point index.
CollinearSet collect_on_line(const Instance& inst, const Line& l);

// Synthetic set from raw coordinates (sorted, deduplicated, no back-map).
CollinearSet make_collinear_set(const Line& l, std::vector<Rational> coords);

// A (k,delta)-dense subset of c of size at most (2+4/delta)^k that contains
// the extreme points: any cover of the subset by at most k segments covers
// all of c after delta-extension. Recursive split into ceil(1+4/delta) equal
// closed slabs, slab boundaries belonging to both sides.
CollinearSet dense_subset(const CollinearSet& c, int k, const Rational& delta);

// Test oracle for the density property: exhaustively enumerates canonical
// covers of A (each segment starts at the smallest yet-uncovered point of A
// and ends at a point of A) with at most k segments and checks that each
// cover, delta-extended, covers all of c. Sound because shrinking a segment
// shrinks its extension, so any violating cover induces a violating
// canonical one. Intended for small inputs.
bool density_check(const CollinearSet& c, const std::vector<Rational>& subset_coords, int k,
                   const Rational& delta);

// All lines carrying more than k distinct points, in canonical order.
std::vector<Line> long_lines(const Instance& inst, int k);

enum class InfeasibleReason {
    too_many_long_lines,      // more than k lines with more than k points each
    too_many_off_line_points  // more than k^2 points on no such line
};

const char* to_string(InfeasibleReason r);

// Fires when either counting argument already rules out a k-cover.
std::optional<InfeasibleReason> infeasibility_precheck(const Instance& inst, int k);

struct Kernel {
    Instance reduced;                             // U', F' with original weights
    std::vector<std::size_t> point_provenance;    // U' index -> original point index
    std::vector<std::size_t> segment_provenance;  // F' index -> original segment index
    std::vector<Line> long_lines;
    std::vector<std::size_t> off_line_points;     // original indices of D
};

// Builds the reduced instance: U' = off-line points plus a (k,delta)-dense
// subset of each long line, F' = one minimum-weight segment through every
// (unordered, possibly equal) pair of U' points that some segment covers.
// |U'| <= k^2 + k*(2+4/delta)^k. The pair scan fans out over OpenMP threads;
// kernelize_serial is the reference and produces the identical kernel.
std::variant<Kernel, InfeasibleReason> kernelize(const Instance& inst, int k,
                                                 const Rational& delta);
std::variant<Kernel, InfeasibleReason> kernelize_serial(const Instance& inst, int k,
                                                        const Rational& delta);

// Theorem-4 solver: kernelize, brute-force the kernel, map indices back.
// The result has at most k segments, covers the instance after
// delta-extension, and weighs no more than any k-cover without extension;
// nullopt only if no k-cover without extension exists.
std::optional<Solution> solve_ext(const Instance& inst, int k, const Rational& delta);

}  // namespace segcover
