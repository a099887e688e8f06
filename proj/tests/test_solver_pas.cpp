#include "segcover/solver_pas.hpp"

#include "segcover/oracle.hpp"
#include "segcover/solver_fpt.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace segcover;
using segcover::testing::pt;
using segcover::testing::random_instance;
using segcover::testing::wseg;

namespace {

Instance weights_only(std::initializer_list<long> ws) {
    Instance inst;
    inst.points = {pt(0, 0)};
    long x = 0;
    for (long w : ws) {
        inst.segments.push_back(wseg(pt(-1 - x, 0), pt(1 + x, 0), w));
        ++x;
    }
    return inst;
}

}  // namespace

TEST_CASE("round_weights: the three bracket cases") {
    const Instance inst = weights_only({1, 8, 3});
    const auto rounded = round_weights(inst, Rational(8), 2, Rational(1));
    // threshold (eps/2k) W = 2; base 3/2
    CHECK(rounded.weights[0] == 2);                 // 1 <= 2 -> raised to the threshold
    CHECK(rounded.weights[1] == 8);                 // top bracket, W itself
    CHECK(rounded.weights[2] == Rational(32, 9));   // 64/27 < 3 <= 32/9
    CHECK(rounded.distinct_count == 3);
}

TEST_CASE("round_weights: bracket index by exhaustive scan") {
    const Rational W(8);
    const Rational eps(1);
    const Rational base = 1 + eps / 2;
    const Instance inst = weights_only({3});
    const auto rounded = round_weights(inst, W, 2, eps);
    bool matched = false;
    Rational upper = W;
    for (int i = 0; i <= 20; ++i) {
        const Rational lower = upper / base;
        if (lower < 3 && Rational(3) <= upper) {
            CHECK(rounded.weights[0] == upper);
            matched = true;
        }
        upper = lower;
    }
    CHECK(matched);
}

TEST_CASE("round_weights: parameter validation") {
    const Instance inst = weights_only({9});
    CHECK_THROWS_AS(round_weights(inst, Rational(8), 2, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(round_weights(inst, Rational(9), 0, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(round_weights(inst, Rational(9), 2, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(round_weights(inst, Rational(0), 2, Rational(1)), std::invalid_argument);
}

TEST_CASE("round_weights: per-segment inequality and value-count bound") {
    std::mt19937 rng(59);
    const Rational epses[] = {Rational(1), Rational(1, 2), Rational(1, 10)};
    for (int trial = 0; trial < 60; ++trial) {
        const Instance inst = random_instance(rng);
        if (inst.segments.empty()) continue;
        Rational w_max(0);
        for (const auto& s : inst.segments) w_max = std::max(w_max, s.weight);
        if (w_max == 0) continue;
        for (const Rational& eps : epses) {
            const int k = 3;
            const auto rounded = round_weights(inst, w_max, k, eps);
            for (std::size_t i = 0; i < inst.segments.size(); ++i) {
                const Rational& w = inst.segments[i].weight;
                const Rational& r = rounded.weights[i];
                CHECK(w <= r);
                CHECK(r <= (1 + eps / 2) * w + eps * w_max / (2 * k));
            }
            // distinct values <= 2 + ceil(log_{1+eps/2}(2k/eps))
            long log_bound = 0;
            Rational power(1);
            const Rational ratio = 2 * k / eps;
            while (power < ratio) {
                power *= (1 + eps / 2);
                ++log_bound;
            }
            CHECK(rounded.distinct_count <= 2 + log_bound);
        }
    }
}

TEST_CASE("solve_pas: uniform weights reduce to solve_fpt") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        Instance inst = random_instance(rng);
        for (auto& s : inst.segments) s.weight = 4;
        const auto pas = solve_pas_serial(inst, 2, Rational(1, 2));
        const auto fpt = solve_fpt(inst, 2);
        REQUIRE(pas.has_value() == fpt.has_value());
        if (pas && fpt) CHECK(pas->weight == fpt->weight);
    }
}

TEST_CASE("solve_pas: infeasible stays infeasible") {
    Instance inst;
    inst.points = {pt(0, 0), pt(1, 0), pt(2, 0)};
    inst.segments = {wseg(pt(0, 0), pt(0, 0)), wseg(pt(1, 0), pt(1, 0)), wseg(pt(2, 0), pt(2, 0))};
    CHECK_FALSE(solve_pas_serial(inst, 2, Rational(1)).has_value());
    CHECK_FALSE(solve_pas_serial(Instance{{pt(0, 0)}, {}, {}}, 1, Rational(1)).has_value());
}

TEST_CASE("solve_pas: guarantee against the oracle") {
    std::mt19937 rng(67);
    const Rational epses[] = {Rational(1), Rational(1, 2), Rational(1, 10)};
    for (int trial = 0; trial < 60; ++trial) {
        const Instance inst = random_instance(rng);
        for (int k = 1; k <= 3; ++k) {
            const auto opt = brute_force(inst, k);
            for (const Rational& eps : epses) {
                const auto pas = solve_pas_serial(inst, k, eps);
                REQUIRE(pas.has_value() == opt.has_value());
                if (!pas) continue;
                CHECK(pas->indices.size() <= static_cast<std::size_t>(k));
                CHECK(verify_cover(inst, *pas).covered);
                CHECK(pas->weight <= (1 + eps) * opt->weight);
            }
        }
    }
}

TEST_CASE("solve_pas: all-zero weights") {
    Instance inst;
    inst.points = {pt(0, 0), pt(1, 0)};
    inst.segments = {wseg(pt(0, 0), pt(1, 0), 0)};
    const auto sol = solve_pas_serial(inst, 1, Rational(1, 2));
    REQUIRE(sol.has_value());
    CHECK(sol->weight == 0);
}
