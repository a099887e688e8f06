#include "segcover/generators.hpp"

#include "segcover/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace segcover;
using segcover::testing::pt;

namespace {

// All five clauses touch all three variables of a block, so each variable
// occurs exactly 5 times; the all-true assignment satisfies everything.
CnfFormula block_formula(int blocks) {
    std::vector<std::array<int, 3>> clauses;
    for (int b = 0; b < blocks; ++b) {
        const int x = 3 * b + 1, y = 3 * b + 2, z = 3 * b + 3;
        clauses.push_back({x, y, z});
        clauses.push_back({x, -y, -z});
        clauses.push_back({-x, y, -z});
        clauses.push_back({-x, -y, z});
        clauses.push_back({x, y, -z});
    }
    return cnf_from_signed(3 * blocks, clauses);
}

Rational total_weight(const Instance& inst, const Solution& sol) {
    Rational w(0);
    for (std::size_t i : sol.indices) w += inst.segments[i].weight;
    return w;
}

PsiInput k4_input() {
    PsiInput input;
    input.k = 4;
    input.h_edges = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    input.g_vertices = 4;
    input.g_edges = input.h_edges;
    input.lambda = {1, 2, 3, 4};
    return input;
}

}  // namespace

TEST_CASE("gen_choice: N=8 single chain matches the worked construction") {
    const auto [inst, meta] = detail::gen_choice_relaxed(8, {Chain{{{3}, {7}}}});
    CHECK(inst.points.size() == 25);  // 1 + 3N
    // R_B for B = {3, 7}: three segments of total length 9 - 1/16
    const Solution cover = build_choice_cover(inst, meta, 0, {3, 7});
    CHECK(cover.indices.size() == 3);
    Rational len(0);
    for (std::size_t i : cover.indices) len += axis_parallel_length(inst.segments[i].seg);
    CHECK(len == Rational(9) - Rational(1, 16));

    // covers everything except B
    const auto report = verify_cover(inst, cover);
    std::set<std::size_t> uncovered(report.uncovered_points.begin(),
                                    report.uncovered_points.end());
    REQUIRE(uncovered.size() == 2);
    for (std::size_t u : uncovered) {
        const Rational& x = inst.points[u].x;
        CHECK((x == 3 || x == 7));
    }
}

TEST_CASE("gen_choice: empty chain list yields no segments") {
    const auto [inst, meta] = detail::gen_choice_relaxed(8, {});
    CHECK(inst.segments.empty());
    CHECK(inst.points.size() == 25);
}

TEST_CASE("gen_choice: endpoint structure scan") {
    const auto [inst, meta] =
        detail::gen_choice_relaxed(12, {Chain{{{2, 3}, {6}, {9}}}, Chain{{{4}, {7}, {11}}}});
    const Rational eps = meta.param("eps");
    std::set<Rational> valid_ends{Rational(0), Rational(13)};
    for (long i = 1; i <= 12; ++i) {
        valid_ends.insert(Rational(i) - eps);
        valid_ends.insert(Rational(i) + eps);
    }
    for (const auto& ws : inst.segments) {
        CHECK(ws.seg.p().y == 0);
        CHECK(ws.seg.q().y == 0);
        CHECK(valid_ends.count(ws.seg.p().x) == 1);
        CHECK(valid_ends.count(ws.seg.q().x) == 1);
    }
}

TEST_CASE("gen_choice: input validation") {
    CHECK_THROWS_AS(gen_choice(8, {}), std::invalid_argument);  // public bound N > 100
    CHECK_NOTHROW(gen_choice(101, {}));
    CHECK_THROWS_AS(detail::gen_choice_relaxed(8, {Chain{{{3}, {3}}}}), std::invalid_argument);
    CHECK_THROWS_AS(detail::gen_choice_relaxed(8, {Chain{{{7}, {3}}}}), std::invalid_argument);
    CHECK_THROWS_AS(detail::gen_choice_relaxed(8, {Chain{{{1}, {}}}}), std::invalid_argument);
    CHECK_THROWS_AS(detail::gen_choice_relaxed(8, {Chain{{{1}, {9}}}}), std::invalid_argument);
    CHECK_THROWS_AS(detail::gen_choice_relaxed(8, {Chain{{{2}, {5}}}, Chain{{{2}, {7}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(detail::gen_choice_relaxed(8, {Chain{{{2}, {5}}}, Chain{{{3}}}}),
                    std::invalid_argument);
}

TEST_CASE("build_choice_cover: covers U minus B for random chains") {
    std::mt19937 rng(89);
    int produced = 0;
    while (produced < 20) {
        // carve two disjoint 2-set chains out of 1..10
        const long n_range = 10;
        std::vector<long> values{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
        std::shuffle(values.begin(), values.end(), rng);
        std::vector<long> a1{values[0], values[1]}, a2{values[2], values[3]};
        std::vector<long> b1{values[4], values[5]}, b2{values[6], values[7]};
        for (auto* side : {&a1, &a2, &b1, &b2}) std::sort(side->begin(), side->end());
        if (a1.back() >= a2.front()) std::swap(a1, a2);
        if (a1.back() >= a2.front()) continue;
        if (b1.back() >= b2.front()) std::swap(b1, b2);
        if (b1.back() >= b2.front()) continue;
        ++produced;
        const Chain c1{{a1, a2}}, c2{{b1, b2}};
        const auto [inst, meta] = detail::gen_choice_relaxed(n_range, {c1, c2});

        std::uniform_int_distribution<int> coin(0, 1);
        const std::size_t j = static_cast<std::size_t>(coin(rng));
        const Chain& chain = j == 0 ? c1 : c2;
        std::vector<long> transversal;
        for (const auto& set : chain.sets) {
            transversal.push_back(set[static_cast<std::size_t>(coin(rng))]);
        }
        const Solution cover = build_choice_cover(inst, meta, j, transversal);
        CHECK(cover.indices.size() == chain.sets.size() + 1);

        const auto report = verify_cover(inst, cover);
        std::set<Rational> missed;
        for (std::size_t u : report.uncovered_points) missed.insert(inst.points[u].x);
        const std::set<Rational> expected(transversal.begin(), transversal.end());
        CHECK(missed == expected);

        CHECK_THROWS_AS(build_choice_cover(inst, meta, j, {transversal[0], transversal[0]}),
                        std::invalid_argument);
    }
}

TEST_CASE("gen_psi: K4 with a planted embedding") {
    const auto [inst, meta] = gen_psi(k4_input());
    const long n_edges = meta.param("N").get_num().get_si();
    CHECK(n_edges > 400);  // padded past 100k
    CHECK(meta.param("kprime") == Rational(22));

    // all segments axis-parallel
    for (const auto& ws : inst.segments) {
        const bool horizontal = ws.seg.p().y == ws.seg.q().y;
        const bool vertical = ws.seg.p().x == ws.seg.q().x;
        CHECK((horizontal || vertical));
    }

    // xi is a bijection onto 1..N and classes are contiguous
    const auto& xi_u = meta.ints.at("xi_u");
    const auto& xi_v = meta.ints.at("xi_v");
    const auto& lambda = meta.ints.at("lambda");
    REQUIRE(xi_u.size() == static_cast<std::size_t>(n_edges));
    std::map<std::pair<long, long>, std::pair<long, long>> class_range;  // (a,b) -> [lo,hi]
    for (std::size_t r = 0; r < xi_u.size(); ++r) {
        const long a = lambda[static_cast<std::size_t>(xi_u[r]) - 1];
        const long b = lambda[static_cast<std::size_t>(xi_v[r]) - 1];
        const auto key = std::make_pair(std::min(a, b), std::max(a, b));
        const long rank = static_cast<long>(r) + 1;
        auto [it, fresh] = class_range.try_emplace(key, std::make_pair(rank, rank));
        if (!fresh) {
            it->second.first = std::min(it->second.first, rank);
            it->second.second = std::max(it->second.second, rank);
        }
    }
    std::size_t covered_ranks = 0;
    for (const auto& [key, range] : class_range) {
        covered_ranks += static_cast<std::size_t>(range.second - range.first + 1);
    }
    CHECK(covered_ranks == xi_u.size());  // contiguous and disjoint classes

    // identity embedding (original vertices keep their ids through padding)
    const Solution sol = build_psi_solution(inst, meta, {1, 2, 3, 4});
    CHECK(sol.indices.size() == 22);
    CHECK(total_weight(inst, sol) == meta.param("W"));
    CHECK(sol.weight == meta.param("W"));
    CHECK(verify_cover(inst, sol).covered);
}

TEST_CASE("gen_psi: validation and vertex dropping") {
    PsiInput bad = k4_input();
    bad.h_edges.pop_back();  // not 3-regular
    CHECK_THROWS_AS(gen_psi(bad), std::invalid_argument);

    PsiInput incompatible = k4_input();
    incompatible.lambda = {1, 1, 3, 4};  // edge 1-2 now joins two color-1 vertices
    CHECK_THROWS_AS(gen_psi(incompatible), std::invalid_argument);

    // a host vertex missing an edge into one class is dropped
    PsiInput droppable = k4_input();
    droppable.g_vertices = 5;
    droppable.lambda = {1, 2, 3, 4, 1};
    droppable.g_edges.push_back({5, 2});  // vertex 5 has color 1 but no 1-3 or 1-4 edges
    const auto [inst, meta] = gen_psi(droppable);
    const auto& dropped = meta.ints.at("dropped");
    CHECK(std::find(dropped.begin(), dropped.end(), 5) != dropped.end());
    CHECK(verify_cover(inst, build_psi_solution(inst, meta, {1, 2, 3, 4})).covered);

    CHECK_THROWS_AS(build_psi_solution(inst, meta, {2, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("gen_sat: structure of the n=3 instance") {
    const CnfFormula formula = block_formula(1);
    const auto [inst, meta] = gen_sat(formula);
    CHECK(inst.points.size() == 6 * 3 + 27 * 5);
    CHECK(inst.segments.size() == 6 * 3 + 20 * 5);
    for (const auto& ws : inst.segments) {
        const bool horizontal = ws.seg.p().y == ws.seg.q().y;
        const bool vertical = ws.seg.p().x == ws.seg.q().x;
        CHECK((horizontal || vertical));
        CHECK(ws.weight == 1);
    }
}

TEST_CASE("gen_sat: literal points sit on their variable's value segment") {
    const CnfFormula formula = block_formula(2);
    const auto [inst, meta] = gen_sat(formula);
    const long m = meta.param("m").get_num().get_si();
    for (long i = 1; i <= m; ++i) {
        const auto& clause = formula.clauses[static_cast<std::size_t>(i) - 1];
        const auto& literal_points = meta.points("literalPoints_" + std::to_string(i));
        for (int t = 0; t < 3; ++t) {
            const CnfLiteral& lit = clause[static_cast<std::size_t>(t)];
            const Point& p = inst.points[literal_points[static_cast<std::size_t>(t)]];
            const std::string which = lit.negated ? "xFalseSegment_" : "xTrueSegment_";
            const Segment& seg = inst.segments[meta.segment(which + std::to_string(lit.var))].seg;
            CHECK(on_segment(seg, p));
        }
    }
}

TEST_CASE("gen_sat: half-extension changes no segment's covered points") {
    const auto [inst, meta] = gen_sat(block_formula(1));
    const Rational half(1, 2);
    for (const auto& ws : inst.segments) {
        for (const Point& p : inst.points) {
            CHECK(on_segment(ws.seg, p) == covers_extended(ws.seg, half, p));
        }
    }
}

TEST_CASE("gen_sat: rejects malformed formulas") {
    CnfFormula bad = block_formula(1);
    bad.clauses.pop_back();
    CHECK_THROWS_AS(gen_sat(bad), std::invalid_argument);

    CnfFormula uneven = block_formula(1);
    uneven.clauses[0][0].var = 2;  // variable 1 now occurs 4 times, variable 2 six
    CHECK_THROWS_AS(gen_sat(uneven), std::invalid_argument);
}

TEST_CASE("build_sat_solution: sizes follow the unsatisfied count") {
    const CnfFormula formula = block_formula(1);
    const auto [inst, meta] = gen_sat(formula);

    // all-true satisfies all 5 clauses: 64/3 * 3 = 64 segments
    const std::vector<bool> all_true(3, true);
    const Solution sat_all = build_sat_solution(inst, meta, all_true);
    CHECK(sat_all.indices.size() == 64);
    CHECK(verify_cover(inst, sat_all).covered);

    // all-false kills exactly the all-positive clause: 65 segments
    const std::vector<bool> all_false(3, false);
    const Solution one_unsat = build_sat_solution(inst, meta, all_false);
    CHECK(one_unsat.indices.size() == 65);
    CHECK(verify_cover(inst, one_unsat).covered);

    // choosing an unsatisfied literal or skipping a satisfied clause throws
    const std::vector<std::optional<int>> wrong(5, std::optional<int>(0));
    CHECK_THROWS_AS(build_sat_solution(inst, meta, all_false, wrong), std::invalid_argument);
    const std::vector<std::optional<int>> skip(5, std::nullopt);
    CHECK_THROWS_AS(build_sat_solution(inst, meta, all_true, skip), std::invalid_argument);
}

TEST_CASE("clause covers hit exactly their intended targets") {
    const auto [inst, meta] = gen_sat(block_formula(1));
    const auto masks = coverage_sets_serial(inst);
    const auto union_of = [&](const std::vector<std::size_t>& segs) {
        Bitset covered(inst.points.size());
        for (std::size_t s : segs) covered |= masks[s];
        return covered;
    };
    for (long i = 1; i <= 5; ++i) {
        const std::string ci = std::to_string(i);
        Bitset clause_target(inst.points.size());
        for (std::size_t p : meta.points("pointsClause_" + ci)) clause_target.set(p);
        const auto& lits = meta.points("literalPoints_" + ci);

        // the 11-segment cover through literal slot t covers everything but
        // that literal's point
        for (int t = 0; t < 3; ++t) {
            std::vector<std::size_t> segs;
            const auto push = [&](const std::string& name) {
                segs.push_back(meta.segment(name));
            };
            const auto push_all = [&](const std::string& name) {
                for (std::size_t s : meta.segments(name)) segs.push_back(s);
            };
            switch (t) {
                case 0:
                    push("orMoveHigh_" + ci + "_0");
                    push_all("chooseOrTrue_" + ci + "_0");
                    push("orMoveHigh_" + ci + "_1");
                    push_all("chooseOrTrue_" + ci + "_1");
                    push("transferX_" + ci);
                    push("moveY_" + ci);
                    push("moveZ_" + ci);
                    break;
                case 1:
                    push("orMoveLow_" + ci + "_0");
                    push_all("chooseOrTrue_" + ci + "_0");
                    push("orMoveHigh_" + ci + "_1");
                    push_all("chooseOrTrue_" + ci + "_1");
                    push("moveX_" + ci);
                    push("transferY_" + ci);
                    push("moveZ_" + ci);
                    break;
                default:
                    push_all("orMove_" + ci + "_0");
                    push_all("chooseOrFalse_" + ci + "_0");
                    push("orMoveLow_" + ci + "_1");
                    push_all("chooseOrTrue_" + ci + "_1");
                    push("moveX_" + ci);
                    push("moveY_" + ci);
                    push("transferZ_" + ci);
                    break;
            }
            REQUIRE(segs.size() == 11);
            Bitset want = clause_target;
            want.reset(lits[static_cast<std::size_t>(t)]);
            const Bitset covered = union_of(segs);
            CHECK(covered.contains_all(want));
            CHECK_FALSE(covered.test(lits[static_cast<std::size_t>(t)]));
        }

        // the 12-segment fallback covers the whole clause gadget
        std::vector<std::size_t> fallback;
        for (const char* j : {"_0", "_1"}) {
            for (std::size_t s : meta.segments("orMove_" + ci + j)) fallback.push_back(s);
            for (std::size_t s : meta.segments("chooseOrFalse_" + ci + j)) fallback.push_back(s);
        }
        fallback.push_back(meta.segment("moveX_" + ci));
        fallback.push_back(meta.segment("moveY_" + ci));
        fallback.push_back(meta.segment("moveZ_" + ci));
        fallback.push_back(meta.segment("orOutput_" + ci + "_1"));
        REQUIRE(fallback.size() == 12);
        CHECK(union_of(fallback).contains_all(clause_target));
    }
}

TEST_CASE("build_sat_solution and decode round-trip") {
    const CnfFormula formula = block_formula(2);
    const auto [inst, meta] = gen_sat(formula);
    std::mt19937 rng(97);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<bool> eta;
        for (int v = 0; v < formula.variables; ++v) eta.push_back(coin(rng) == 1);
        const Solution sol = build_sat_solution(inst, meta, eta);
        CHECK(verify_cover(inst, sol).covered);
        CHECK(decode_sat_assignment(inst, meta, sol) == eta);
    }
    // decode rejects non-covers
    CHECK_THROWS_AS(decode_sat_assignment(inst, meta, Solution{{0}, Rational(1)}),
                    std::invalid_argument);
}

TEST_CASE("decode: all-false choice everywhere decodes to all-false") {
    const auto [inst, meta] = gen_sat(block_formula(1));
    const std::vector<bool> all_false(3, false);
    const Solution sol = build_sat_solution(inst, meta, all_false);
    const auto eta = decode_sat_assignment(inst, meta, sol);
    CHECK(eta == all_false);
    // xTrueSegment absent from the cover for every variable
    const std::set<std::size_t> chosen(sol.indices.begin(), sol.indices.end());
    for (long i = 1; i <= 3; ++i) {
        CHECK(chosen.count(meta.segment("xTrueSegment_" + std::to_string(i))) == 0);
    }
}

TEST_CASE("variable gadget minima") {
    const auto [inst, meta] = gen_sat(block_formula(1));
    const auto masks = coverage_sets_serial(inst);
    for (long i = 1; i <= 3; ++i) {
        const auto& gadget_points = meta.points("pointsVariable_" + std::to_string(i));
        const auto& gadget_segments = meta.segments("segmentsVariable_" + std::to_string(i));
        REQUIRE(gadget_segments.size() == 6);
        Bitset target(inst.points.size());
        for (std::size_t p : gadget_points) target.set(p);

        // exhaustive over the 2^6 subsets
        std::size_t best = 7, best_forced = 7;
        const std::size_t x_true = meta.segment("xTrueSegment_" + std::to_string(i));
        const std::size_t x_false = meta.segment("xFalseSegment_" + std::to_string(i));
        for (unsigned mask = 0; mask < 64; ++mask) {
            Bitset covered(inst.points.size());
            std::size_t size = 0;
            bool has_true = false, has_false = false;
            for (std::size_t b = 0; b < 6; ++b) {
                if (!(mask >> b & 1U)) continue;
                covered |= masks[gadget_segments[b]];
                ++size;
                has_true |= gadget_segments[b] == x_true;
                has_false |= gadget_segments[b] == x_false;
            }
            if (!covered.contains_all(target)) continue;
            best = std::min(best, size);
            if (has_true && has_false) best_forced = std::min(best_forced, size);
        }
        CHECK(best == 3);
        CHECK(best_forced >= 4);

        // same answer through the library search
        std::vector<Bitset> gadget_masks;
        for (std::size_t s : gadget_segments) gadget_masks.push_back(masks[s]);
        CHECK(min_cover_size(target, gadget_masks, 6) == 3);
    }
}

TEST_CASE("generator outputs survive the instance round-trip") {
    const auto [choice, choice_meta] = detail::gen_choice_relaxed(8, {Chain{{{3}, {7}}}});
    CHECK(load_instance(save_instance(choice)) == choice);
    const auto [sat, sat_meta] = gen_sat(block_formula(1));
    CHECK(load_instance(save_instance(sat)) == sat);
    const auto [psi, psi_meta] = gen_psi(k4_input());
    CHECK(load_instance(save_instance(psi)) == psi);
}

TEST_CASE("singleton solutions cover the same points with and without 1/2-extension") {
    const auto [inst, meta] = gen_sat(block_formula(1));
    for (std::size_t s = 0; s < inst.segments.size(); ++s) {
        const Solution single = make_solution(inst, {s});
        const auto plain = verify_cover(inst, single);
        const auto extended = verify_cover(inst, single, Rational(1, 2));
        CHECK(plain.uncovered_points == extended.uncovered_points);
    }
}

TEST_CASE("gen_psi: random noisy hosts around a planted K4") {
    std::mt19937 rng(113);
    std::uniform_int_distribution<int> color(1, 4);
    std::uniform_int_distribution<int> extra_count(1, 4);
    for (int trial = 0; trial < 10; ++trial) {
        PsiInput input = k4_input();
        const int extras = extra_count(rng);
        for (int e = 0; e < extras; ++e) {
            const int v = ++input.g_vertices;
            const int c = color(rng);
            input.lambda.push_back(c);
            // connect the extra vertex to a few planted vertices compatibly
            for (int target = 1; target <= 4; ++target) {
                if (target != c && rng() % 2 == 0) input.g_edges.push_back({v, target});
            }
        }
        const auto [inst, meta] = gen_psi(input);
        const Solution sol = build_psi_solution(inst, meta, {1, 2, 3, 4});
        CHECK(sol.indices.size() == 22);
        CHECK(sol.weight == meta.param("W"));
        CHECK(verify_cover(inst, sol).covered);
    }
}

TEST_CASE("decoded assignments satisfy at least m - 5k clauses on built covers") {
    const CnfFormula formula = block_formula(2);
    const auto [inst, meta] = gen_sat(formula);
    std::mt19937 rng(127);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<bool> eta;
        for (int v = 0; v < formula.variables; ++v) eta.push_back(coin(rng) == 1);
        const Solution sol = build_sat_solution(inst, meta, eta);
        const long k = static_cast<long>(sol.indices.size()) - 64 * formula.variables / 3;
        const auto decoded = decode_sat_assignment(inst, meta, sol);
        long satisfied = 0;
        for (const auto& clause : formula.clauses) {
            for (const CnfLiteral& lit : clause) {
                if (decoded[static_cast<std::size_t>(lit.var) - 1] != lit.negated) {
                    ++satisfied;
                    break;
                }
            }
        }
        CHECK(satisfied >= static_cast<long>(formula.clauses.size()) - 5 * k);
    }
}

TEST_CASE("meta serialization round-trips") {
    const auto [inst, meta] = detail::gen_choice_relaxed(8, {Chain{{{3}, {7}}}});
    const GadgetMeta back = load_meta(save_meta(meta));
    CHECK(back.point_sets == meta.point_sets);
    CHECK(back.segment_sets == meta.segment_sets);
    CHECK(back.params == meta.params);
    CHECK(back.ints == meta.ints);
    // a reloaded meta still drives the builders
    const Solution cover = build_choice_cover(inst, back, 0, {3, 7});
    CHECK(cover.indices.size() == 3);
}
