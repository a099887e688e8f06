// The OpenMP entry points must agree bit-for-bit with their serial
// references.

#include "segcover/solver_ext.hpp"
#include "segcover/solver_pas.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace segcover;
using segcover::testing::random_instance;

TEST_CASE("coverage_sets: parallel equals serial") {
    std::mt19937 rng(103);
    for (int trial = 0; trial < 60; ++trial) {
        const Instance inst = random_instance(rng);
        CHECK(coverage_sets(inst) == coverage_sets_serial(inst));
    }
}

TEST_CASE("solve_pas: parallel equals serial") {
    std::mt19937 rng(107);
    const Rational eps(1, 2);
    for (int trial = 0; trial < 40; ++trial) {
        const Instance inst = random_instance(rng);
        for (int k = 0; k <= 3; ++k) {
            const auto par = solve_pas(inst, k, eps);
            const auto ser = solve_pas_serial(inst, k, eps);
            REQUIRE(par.has_value() == ser.has_value());
            if (par && ser) {
                CHECK(par->indices == ser->indices);
                CHECK(par->weight == ser->weight);
            }
        }
    }
}

TEST_CASE("kernelize: parallel equals serial") {
    std::mt19937 rng(109);
    const Rational delta(1, 2);
    for (int trial = 0; trial < 40; ++trial) {
        const Instance inst = random_instance(rng);
        for (int k = 1; k <= 3; ++k) {
            const auto par = kernelize(inst, k, delta);
            const auto ser = kernelize_serial(inst, k, delta);
            REQUIRE(par.index() == ser.index());
            if (std::holds_alternative<Kernel>(par)) {
                const Kernel& kp = std::get<Kernel>(par);
                const Kernel& ks = std::get<Kernel>(ser);
                CHECK(kp.reduced == ks.reduced);
                CHECK(kp.point_provenance == ks.point_provenance);
                CHECK(kp.segment_provenance == ks.segment_provenance);
            } else {
                CHECK(std::get<InfeasibleReason>(par) == std::get<InfeasibleReason>(ser));
            }
        }
    }
}
