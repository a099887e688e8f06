#include "segcover/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace segcover {

namespace {

struct BruteState {
    const Instance& inst;
    const std::vector<Bitset>& masks;
    const Bitset& target;
    std::size_t k;
    std::optional<Solution> best;
    std::vector<std::size_t> chosen;
    Rational weight{0};

    void consider() {
        std::vector<std::size_t> sorted = chosen;
        std::sort(sorted.begin(), sorted.end());
        if (!best || weight < best->weight ||
            (weight == best->weight && sorted < best->indices)) {
            best = Solution{std::move(sorted), weight};
        }
    }

    void search(const Bitset& covered) {
        const std::size_t missing = covered.first_missing(target);
        if (missing == Bitset::npos) {
            consider();
            return;
        }
        if (chosen.size() == k) return;
        if (best && weight > best->weight) return;  // weights are nonnegative
        for (std::size_t s = 0; s < masks.size(); ++s) {
            if (!masks[s].test(missing)) continue;
            chosen.push_back(s);
            weight += inst.segments[s].weight;
            search(covered | masks[s]);
            weight -= inst.segments[s].weight;
            chosen.pop_back();
        }
    }
};

}  // namespace

std::optional<Solution> brute_force(const Instance& inst, int k) {
    if (k < 0) throw std::invalid_argument("brute_force: k must be nonnegative");
    const std::vector<Bitset> masks = coverage_sets_serial(inst);
    const Bitset target = Bitset::all(inst.points.size());
    BruteState state{inst, masks, target, static_cast<std::size_t>(k), {}, {}, Rational(0)};
    state.search(Bitset(inst.points.size()));
    return state.best;
}

namespace {

struct MinCoverState {
    const std::vector<Bitset>& masks;
    const Bitset& target;
    int limit;
    std::optional<int> best;
    std::unordered_map<Bitset, int, Bitset::Hash> seen;

    void search(const Bitset& covered, int used) {
        if (covered.contains_all(target)) {
            if (!best || used < *best) best = used;
            return;
        }
        if (used == limit) return;
        if (best && used + 1 >= *best) return;
        auto [it, fresh] = seen.try_emplace(covered, used);
        if (!fresh) {
            if (it->second <= used) return;
            it->second = used;
        }
        const std::size_t missing = covered.first_missing(target);
        for (std::size_t s = 0; s < masks.size(); ++s) {
            if (!masks[s].test(missing)) continue;
            search(covered | masks[s], used + 1);
        }
    }
};

}  // namespace

std::optional<int> min_cover_size(const Bitset& target, const std::vector<Bitset>& masks,
                                  int limit) {
    if (limit < 0) throw std::invalid_argument("min_cover_size: limit must be nonnegative");
    for (const Bitset& m : masks) {
        if (m.size() != target.size()) {
            throw std::invalid_argument("min_cover_size: mask width differs from the target");
        }
    }
    MinCoverState state{masks, target, limit, {}, {}};
    state.search(Bitset(target.size()), 0);
    return state.best;
}

}  // namespace segcover
