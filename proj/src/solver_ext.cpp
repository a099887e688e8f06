#include "segcover/solver_ext.hpp"

#include "segcover/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace segcover {

CollinearSet collect_on_line(const Instance& inst, const Line& l) {
    std::map<Rational, std::size_t> by_coord;
    for (std::size_t i = 0; i < inst.points.size(); ++i) {
        if (!l.contains(inst.points[i])) continue;
        by_coord.emplace(line_parameter(l, inst.points[i]), i);  // keeps the lowest index
    }
    CollinearSet out{l, {}, {}};
    for (const auto& [coord, idx] : by_coord) {
        out.coords.push_back(coord);
        out.point_indices.push_back(idx);
    }
    return out;
}

CollinearSet make_collinear_set(const Line& l, std::vector<Rational> coords) {
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    CollinearSet out{l, {}, {}};
    out.point_indices.assign(coords.size(), CollinearSet::npos);
    out.coords = std::move(coords);
    return out;
}

namespace {

CollinearSet subset_by_positions(const CollinearSet& c, const std::set<std::size_t>& positions) {
    CollinearSet out{c.line, {}, {}};
    for (std::size_t i : positions) {
        out.coords.push_back(c.coords[i]);
        out.point_indices.push_back(c.point_indices[i]);
    }
    return out;
}

// Positions (into c.coords) of a dense subset for the coordinate range
// [from, to] inclusive.
void dense_positions(const CollinearSet& c, std::size_t from, std::size_t to, int k,
                     const Rational& delta, std::set<std::size_t>& out) {
    const std::size_t count = to - from + 1;
    if (count <= 1) {
        for (std::size_t i = from; i <= to; ++i) out.insert(i);
        return;
    }
    if (k == 1) {
        out.insert(from);
        out.insert(to);
        return;
    }
    const Rational lo = c.coords[from];
    const Rational len = c.coords[to] - lo;
    const Integer m = ceil_rational(1 + 4 / delta);  // number of equal closed slabs
    // Group the points by slab. A point sitting exactly on a slab boundary
    // belongs to both neighbours; the recursion then covers it from either
    // side, which only helps density.
    std::map<Integer, std::pair<std::size_t, std::size_t>> slabs;  // slab -> [first,last]
    auto add = [&](const Integer& slab, std::size_t pos) {
        auto [it, fresh] = slabs.try_emplace(slab, std::make_pair(pos, pos));
        if (!fresh) {
            it->second.first = std::min(it->second.first, pos);
            it->second.second = std::max(it->second.second, pos);
        }
    };
    for (std::size_t i = from; i <= to; ++i) {
        const Rational r = (c.coords[i] - lo) * Rational(m) / len;  // in [0, m]
        const Integer f = floor_rational(r);
        if (Rational(f) == r) {
            if (f >= 1) add(f, i);
            if (f < m) add(f + 1, i);
        } else {
            add(f + 1, i);
        }
    }
    for (const auto& [slab, range] : slabs) {
        dense_positions(c, range.first, range.second, k - 1, delta, out);
    }
}

}  // namespace

CollinearSet dense_subset(const CollinearSet& c, int k, const Rational& delta) {
    if (k < 1) throw std::invalid_argument("dense_subset: k must be at least 1");
    if (delta <= 0) throw std::invalid_argument("dense_subset: delta must be positive");
    if (c.coords.empty()) return c;
    std::set<std::size_t> positions;
    dense_positions(c, 0, c.coords.size() - 1, k, delta, positions);
    return subset_by_positions(c, positions);
}

namespace {

struct Interval {
    Rational lo;
    Rational hi;
};

bool extension_covers(const Interval& iv, const Rational& delta, const Rational& u) {
    if (u >= iv.lo && u <= iv.hi) return true;  // the closed core
    const Rational reach = delta * (iv.hi - iv.lo) / 2;
    return u > iv.lo - reach && u < iv.hi + reach;
}

struct DensitySearch {
    const std::vector<Rational>& c;
    const std::vector<Rational>& a;
    int k;
    const Rational& delta;
    std::vector<Interval> chosen;
    bool violation = false;

    // next: position into `a` of the smallest uncovered subset point.
    void run(std::size_t next) {
        if (violation) return;
        if (next == a.size()) {
            for (const Rational& u : c) {
                bool hit = false;
                for (const Interval& iv : chosen) {
                    if (extension_covers(iv, delta, u)) {
                        hit = true;
                        break;
                    }
                }
                if (!hit) {
                    violation = true;
                    return;
                }
            }
            return;
        }
        if (static_cast<int>(chosen.size()) == k) return;
        for (std::size_t e = next; e < a.size(); ++e) {
            chosen.push_back(Interval{a[next], a[e]});
            run(e + 1);
            chosen.pop_back();
            if (violation) return;
        }
    }
};

}  // namespace

bool density_check(const CollinearSet& c, const std::vector<Rational>& subset_coords, int k,
                   const Rational& delta) {
    if (delta <= 0) throw std::invalid_argument("density_check: delta must be positive");
    if (k < 0) throw std::invalid_argument("density_check: k must be nonnegative");
    std::vector<Rational> a = subset_coords;
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    for (const Rational& u : a) {
        if (!std::binary_search(c.coords.begin(), c.coords.end(), u)) {
            throw std::invalid_argument("density_check: subset is not contained in the set");
        }
    }
    DensitySearch search{c.coords, a, k, delta, {}, false};
    search.run(0);
    return !search.violation;
}

std::vector<Line> long_lines(const Instance& inst, int k) {
    if (k < 0) throw std::invalid_argument("long_lines: k must be nonnegative");
    std::vector<Line> out;
    for (const LineGroup& g : collinear_line_groups(inst)) {
        if (g.point_indices.size() > static_cast<std::size_t>(k)) out.push_back(g.line);
    }
    return out;  // collinear_line_groups is already canonically ordered
}

const char* to_string(InfeasibleReason r) {
    switch (r) {
        case InfeasibleReason::too_many_long_lines: return "too-many-long-lines";
        case InfeasibleReason::too_many_off_line_points: return "too-many-off-line-points";
    }
    return "unknown";
}

namespace {

// Distinct-coordinate representatives (lowest index) not lying on any of the
// given lines.
std::vector<std::size_t> off_line_representatives(const Instance& inst,
                                                  const std::vector<Line>& lines) {
    std::map<std::pair<Rational, Rational>, std::size_t> reps;
    for (std::size_t i = 0; i < inst.points.size(); ++i) {
        reps.emplace(std::make_pair(inst.points[i].x, inst.points[i].y), i);
    }
    std::vector<std::size_t> out;
    for (const auto& [coord, idx] : reps) {
        bool on_long = false;
        for (const Line& l : lines) {
            if (l.contains(inst.points[idx])) {
                on_long = true;
                break;
            }
        }
        if (!on_long) out.push_back(idx);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::optional<InfeasibleReason> infeasibility_precheck(const Instance& inst, int k) {
    if (k < 0) throw std::invalid_argument("infeasibility_precheck: k must be nonnegative");
    const std::vector<Line> lines = long_lines(inst, k);
    if (lines.size() > static_cast<std::size_t>(k)) return InfeasibleReason::too_many_long_lines;
    const auto off = off_line_representatives(inst, lines);
    if (off.size() > static_cast<std::size_t>(k) * static_cast<std::size_t>(k)) {
        return InfeasibleReason::too_many_off_line_points;
    }
    return std::nullopt;
}

namespace {

struct PairPick {
    bool found = false;
    std::size_t segment = 0;
};

std::variant<Kernel, InfeasibleReason> kernelize_impl(const Instance& inst, int k,
                                                      const Rational& delta, bool parallel) {
    if (k < 1) throw std::invalid_argument("kernelize: k must be at least 1");
    if (delta <= 0) throw std::invalid_argument("kernelize: delta must be positive");
    if (const auto reason = infeasibility_precheck(inst, k)) return *reason;

    Kernel kernel;
    kernel.long_lines = long_lines(inst, k);
    kernel.off_line_points = off_line_representatives(inst, kernel.long_lines);

    std::set<std::size_t> chosen_points(kernel.off_line_points.begin(),
                                        kernel.off_line_points.end());
    for (const Line& l : kernel.long_lines) {
        const CollinearSet on_line = collect_on_line(inst, l);
        const CollinearSet dense = dense_subset(on_line, k, delta);
        chosen_points.insert(dense.point_indices.begin(), dense.point_indices.end());
    }
    kernel.point_provenance.assign(chosen_points.begin(), chosen_points.end());
    for (std::size_t i : kernel.point_provenance) kernel.reduced.points.push_back(inst.points[i]);

    // One minimum-weight covering segment per unordered pair of kernel
    // points, singleton pairs included. Lowest original index breaks ties.
    const std::vector<Bitset> masks = parallel ? coverage_sets(inst) : coverage_sets_serial(inst);
    const std::size_t m = kernel.point_provenance.size();
    const std::size_t pair_count = m * (m + 1) / 2;
    std::vector<PairPick> picks(pair_count);
    auto pick_pair = [&](std::size_t flat) {
        // flat -> (a, b) with a <= b
        std::size_t a = 0;
        std::size_t rest = flat;
        std::size_t row = m;
        while (rest >= row) {
            rest -= row;
            --row;
            ++a;
        }
        const std::size_t b = a + rest;
        const std::size_t pa = kernel.point_provenance[a];
        const std::size_t pb = kernel.point_provenance[b];
        PairPick pick;
        for (std::size_t s = 0; s < masks.size(); ++s) {
            if (!masks[s].test(pa) || !masks[s].test(pb)) continue;
            if (!pick.found || inst.segments[s].weight < inst.segments[pick.segment].weight) {
                pick.found = true;
                pick.segment = s;
            }
        }
        picks[flat] = pick;
    };
    if (parallel) {
        const long n = static_cast<long>(pair_count);
#pragma omp parallel for schedule(static)
        for (long i = 0; i < n; ++i) pick_pair(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < pair_count; ++i) pick_pair(i);
    }

    std::set<std::size_t> chosen_segments;
    for (const PairPick& pick : picks) {
        if (pick.found) chosen_segments.insert(pick.segment);
    }
    kernel.segment_provenance.assign(chosen_segments.begin(), chosen_segments.end());
    for (std::size_t i : kernel.segment_provenance) {
        kernel.reduced.segments.push_back(inst.segments[i]);
    }
    return kernel;
}

}  // namespace

std::variant<Kernel, InfeasibleReason> kernelize(const Instance& inst, int k,
                                                 const Rational& delta) {
    return kernelize_impl(inst, k, delta, true);
}

std::variant<Kernel, InfeasibleReason> kernelize_serial(const Instance& inst, int k,
                                                        const Rational& delta) {
    return kernelize_impl(inst, k, delta, false);
}

std::optional<Solution> solve_ext(const Instance& inst, int k, const Rational& delta) {
    if (delta <= 0) throw std::invalid_argument("solve_ext: delta must be positive");
    if (k < 0) throw std::invalid_argument("solve_ext: k must be nonnegative");
    if (inst.points.empty()) return Solution{{}, Rational(0)};
    if (k == 0) return std::nullopt;
    const auto result = kernelize(inst, k, delta);
    if (std::holds_alternative<InfeasibleReason>(result)) return std::nullopt;
    const Kernel& kernel = std::get<Kernel>(result);
    auto sub = brute_force(kernel.reduced, k);
    if (!sub) return std::nullopt;
    for (std::size_t& i : sub->indices) i = kernel.segment_provenance[i];
    std::sort(sub->indices.begin(), sub->indices.end());
    return sub;
}

}  // namespace segcover
