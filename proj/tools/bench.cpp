// Compares the OpenMP kernels against their serial reference on synthetic
// workloads and checks that both produce identical results.

#include "segcover/generators.hpp"
#include "segcover/solver_ext.hpp"
#include "segcover/solver_pas.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <variant>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace segcover;

namespace {

double seconds(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-28s %10.3f ms %10.3f ms %7.2fx   %s\n", name, serial * 1e3, parallel * 1e3,
                parallel > 0 ? serial / parallel : 0.0, equal ? "results equal" : "MISMATCH");
}

// An (E3,E5) formula out of blocks of 3 variables with 5 clauses each.
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

Instance random_instance(std::mt19937& rng, int points, int segments) {
    std::uniform_int_distribution<long> coord(0, 20);
    std::uniform_int_distribution<long> weight(1, 5);
    Instance inst;
    for (int i = 0; i < points; ++i) {
        inst.points.push_back(Point{Rational(coord(rng)), Rational(coord(rng))});
    }
    std::uniform_int_distribution<std::size_t> pick(0, inst.points.size() - 1);
    for (int i = 0; i < segments; ++i) {
        const Point a = inst.points[pick(rng)];
        Point b = inst.points[pick(rng)];
        if (i % 3 == 0) b = Point{Rational(coord(rng)), Rational(coord(rng))};
        inst.segments.push_back(WeightedSegment{Segment(a, b), Rational(weight(rng))});
    }
    return inst;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel entry points run serially\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "workload", "serial", "parallel", "speedup");

    {
        const auto [inst, meta] = gen_sat(block_formula(12));
        std::vector<Bitset> serial_masks, parallel_masks;
        const double ts = seconds([&] { serial_masks = coverage_sets_serial(inst); });
        const double tp = seconds([&] { parallel_masks = coverage_sets(inst); });
        row("coverage_sets (sat n=36)", ts, tp, serial_masks == parallel_masks);
    }

    {
        std::mt19937 rng(7);
        std::vector<Instance> corpus;
        for (int i = 0; i < 40; ++i) corpus.push_back(random_instance(rng, 14, 10));
        const Rational eps(1, 10);
        std::vector<std::optional<Solution>> serial_out(corpus.size()), parallel_out(corpus.size());
        const double ts = seconds([&] {
            for (std::size_t i = 0; i < corpus.size(); ++i) {
                serial_out[i] = solve_pas_serial(corpus[i], 3, eps);
            }
        });
        const double tp = seconds([&] {
            for (std::size_t i = 0; i < corpus.size(); ++i) {
                parallel_out[i] = solve_pas(corpus[i], 3, eps);
            }
        });
        row("solve_pas (40 instances)", ts, tp, serial_out == parallel_out);
    }

    {
        // Three long lines with many points and a large segment family: the
        // kernel pair scan dominates.
        std::mt19937 rng(11);
        Instance inst;
        std::uniform_int_distribution<long> coord(0, 120);
        for (long y = 0; y < 3; ++y) {
            for (long x = 0; x <= 120; x += 2) inst.points.push_back(Point{Rational(x), Rational(y)});
        }
        std::uniform_int_distribution<long> line(0, 2);
        std::uniform_int_distribution<long> weight(1, 5);
        for (int i = 0; i < 1500; ++i) {
            const long y = line(rng);
            long a = coord(rng), b = coord(rng);
            inst.segments.push_back(WeightedSegment{
                Segment(Point{Rational(a), Rational(y)}, Point{Rational(b), Rational(y)}),
                Rational(weight(rng))});
        }
        std::variant<Kernel, InfeasibleReason> rs, rp;
        const Rational delta(1, 2);
        const double ts = seconds([&] { rs = kernelize_serial(inst, 3, delta); });
        const double tp = seconds([&] { rp = kernelize(inst, 3, delta); });
        const bool equal = std::holds_alternative<Kernel>(rs) == std::holds_alternative<Kernel>(rp) &&
                           (!std::holds_alternative<Kernel>(rs) ||
                            std::get<Kernel>(rs).reduced == std::get<Kernel>(rp).reduced);
        row("kernelize (3 long lines)", ts, tp, equal);
    }
    return 0;
}
