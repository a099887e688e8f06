#include "segcover/solver_fpt.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace segcover {

ReasonableInstance reduce_reasonable(const Instance& inst) {
    const std::vector<Bitset> masks = coverage_sets_serial(inst);
    const std::size_t n = inst.segments.size();
    std::vector<bool> removed(n, false);
    // b dominates a iff equal weight, mask(a) subseteq mask(b), and either the
    // inclusion is strict or b has the lower index. Dominance is a strict
    // partial order, so dropping every dominated segment reaches the fixpoint
    // of the one-at-a-time removal rule in a single pass.
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n && !removed[a]; ++b) {
            if (a == b) continue;
            if (inst.segments[a].weight != inst.segments[b].weight) continue;
            if (!masks[a].subset_of(masks[b])) continue;
            if (masks[a] != masks[b] || b < a) removed[a] = true;
        }
    }
    ReasonableInstance out;
    out.instance.points = inst.points;
    for (std::size_t i = 0; i < n; ++i) {
        if (!removed[i]) {
            out.instance.segments.push_back(inst.segments[i]);
            out.kept.push_back(i);
        }
    }
    return out;
}

std::optional<Line> find_long_line(const Instance& inst, int k) {
    if (k < 0) throw std::invalid_argument("find_long_line: k must be nonnegative");
    const std::size_t need = static_cast<std::size_t>(k) + 1;
    std::optional<Line> best;
    std::size_t best_count = 0;
    for (const LineGroup& g : collinear_line_groups(inst)) {
        if (g.point_indices.size() < need) continue;
        if (g.point_indices.size() > best_count) {
            best = g.line;
            best_count = g.point_indices.size();
        }
        // groups are in canonical line order, so the first of a given size wins ties
    }
    return best;
}

std::vector<std::size_t> hitting_candidates(const ReasonableInstance& ri, const Line& l, int k) {
    const Instance& inst = ri.instance;
    // Distinct points of the instance on l, in lexicographic order (which is
    // the order along the line).
    std::vector<Point> xs;
    {
        std::map<std::pair<Rational, Rational>, bool> seen;
        for (const Point& p : inst.points) {
            if (l.contains(p) && seen.emplace(std::make_pair(p.x, p.y), true).second) {
                xs.push_back(p);
            }
        }
        std::sort(xs.begin(), xs.end(), lex_less);
    }
    if (xs.size() < static_cast<std::size_t>(k) + 1) {
        throw std::invalid_argument("hitting_candidates: line carries fewer than k+1 points");
    }
    std::vector<std::size_t> result;
    for (int i = 1; i <= k; ++i) {
        const Point& xi = xs[static_cast<std::size_t>(i) - 1];
        const Point* xprev = i >= 2 ? &xs[static_cast<std::size_t>(i) - 2] : nullptr;
        for (std::size_t s = 0; s < inst.segments.size(); ++s) {
            const Segment& seg = inst.segments[s].seg;
            if (!collinear_with(seg, l)) continue;
            if (!on_segment(seg, xi)) continue;
            if (xprev && on_segment(seg, *xprev)) continue;
            result.push_back(s);
        }
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

namespace {

// Candidate merge: lighter weight wins, ties by lexicographically smaller
// index set.
void merge_best(std::optional<Solution>& best, std::optional<Solution> cand) {
    if (!cand) return;
    if (!best || cand->weight < best->weight ||
        (cand->weight == best->weight && cand->indices < best->indices)) {
        best = std::move(cand);
    }
}

std::optional<Solution> solve_rec(const Instance& inst, const std::vector<std::size_t>& orig,
                                  int k, int depth, SolveStats* stats) {
    if (stats) {
        ++stats->nodes;
        stats->max_depth = std::max(stats->max_depth, depth);
    }
    if (inst.points.empty()) return Solution{{}, Rational(0)};
    if (k == 0) return std::nullopt;

    const ReasonableInstance rr = reduce_reasonable(inst);
    std::vector<std::size_t> orig2(rr.kept.size());
    for (std::size_t i = 0; i < rr.kept.size(); ++i) orig2[i] = orig[rr.kept[i]];

    if (const auto line = find_long_line(rr.instance, k)) {
        const std::vector<std::size_t> branch = hitting_candidates(rr, *line, k);
        if (stats) stats->max_children = std::max(stats->max_children, branch.size());
        std::optional<Solution> best;
        for (std::size_t s : branch) {
            const Segment& chosen = rr.instance.segments[s].seg;
            Instance child;
            for (const Point& p : rr.instance.points) {
                if (!on_segment(chosen, p)) child.points.push_back(p);
            }
            std::vector<std::size_t> child_orig;
            for (std::size_t i = 0; i < rr.instance.segments.size(); ++i) {
                if (i == s) continue;
                child.segments.push_back(rr.instance.segments[i]);
                child_orig.push_back(orig2[i]);
            }
            auto sub = solve_rec(child, child_orig, k - 1, depth + 1, stats);
            if (!sub) continue;
            sub->indices.push_back(orig2[s]);
            std::sort(sub->indices.begin(), sub->indices.end());
            sub->weight += rr.instance.segments[s].weight;
            merge_best(best, std::move(sub));
        }
        return best;
    }

    std::set<std::pair<Rational, Rational>> distinct;
    for (const Point& p : rr.instance.points) distinct.emplace(p.x, p.y);
    if (distinct.size() > static_cast<std::size_t>(k) * static_cast<std::size_t>(k)) {
        return std::nullopt;  // no line spans more than k points, so no segment does either
    }
    auto bf = brute_force(rr.instance, k);
    if (!bf) return std::nullopt;
    for (std::size_t& i : bf->indices) i = orig2[i];
    std::sort(bf->indices.begin(), bf->indices.end());
    return bf;
}

}  // namespace

std::optional<Solution> solve_fpt(const Instance& inst, int k, SolveStats* stats) {
    if (k < 0) throw std::invalid_argument("solve_fpt: k must be nonnegative");
    std::vector<std::size_t> orig(inst.segments.size());
    for (std::size_t i = 0; i < orig.size(); ++i) orig[i] = i;
    return solve_rec(inst, orig, k, 0, stats);
}

std::optional<Solution> solve_unweighted(const Instance& inst, int k, SolveStats* stats) {
    for (std::size_t i = 1; i < inst.segments.size(); ++i) {
        if (inst.segments[i].weight != inst.segments[0].weight) {
            throw std::invalid_argument("solve_unweighted: weights are not all equal");
        }
    }
    return solve_fpt(inst, k, stats);
}

}  // namespace segcover
