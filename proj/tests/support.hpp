#pragma once

#include "segcover/instance.hpp"

#include <random>

namespace segcover::testing {

inline Point pt(long x, long y) { return Point{Rational(x), Rational(y)}; }

inline Point ptr(const Rational& x, const Rational& y) { return Point{x, y}; }

inline WeightedSegment wseg(Point a, Point b, long w = 1) {
    return WeightedSegment{Segment(std::move(a), std::move(b)), Rational(w)};
}

// Random instance in the acceptance corpus regime: lattice coordinates in
// [0,20]^2, weights in 1..5, |U| <= 15, |F| <= 10. Roughly half the
// instances cluster their points on a few lines so that the long-line
// machinery actually fires; segments mostly connect instance points so that
// covers exist reasonably often.
inline Instance random_instance(std::mt19937& rng, int max_points = 15, int max_segments = 10) {
    std::uniform_int_distribution<long> coord(0, 20);
    std::uniform_int_distribution<int> point_count(1, max_points);
    std::uniform_int_distribution<int> segment_count(1, max_segments);
    std::uniform_int_distribution<long> weight(1, 5);
    std::uniform_int_distribution<int> style(0, 3);

    Instance inst;
    const int n = point_count(rng);
    if (style(rng) < 2) {
        // clustered: up to three lines through the lattice
        std::uniform_int_distribution<int> line_count(1, 3);
        const int lines = line_count(rng);
        std::uniform_int_distribution<int> which(0, lines - 1);
        struct Carrier {
            long x0, y0, dx, dy;
        };
        std::vector<Carrier> carriers;
        std::uniform_int_distribution<long> dir(-2, 2);
        for (int i = 0; i < lines; ++i) {
            long dx = 0, dy = 0;
            while (dx == 0 && dy == 0) {
                dx = dir(rng);
                dy = dir(rng);
            }
            carriers.push_back({coord(rng), coord(rng), dx, dy});
        }
        std::uniform_int_distribution<long> step(-4, 4);
        for (int i = 0; i < n; ++i) {
            const Carrier& c = carriers[static_cast<std::size_t>(which(rng))];
            long t = step(rng);
            long x = c.x0 + t * c.dx, y = c.y0 + t * c.dy;
            if (x < 0 || x > 20 || y < 0 || y > 20) {
                x = c.x0;  // fall back to the carrier base: in the box, still on the line
                y = c.y0;
            }
            inst.points.push_back(pt(x, y));
        }
    } else {
        for (int i = 0; i < n; ++i) inst.points.push_back(pt(coord(rng), coord(rng)));
    }

    const int m = segment_count(rng);
    std::uniform_int_distribution<std::size_t> pick(0, inst.points.size() - 1);
    for (int i = 0; i < m; ++i) {
        Point a = inst.points[pick(rng)];
        Point b = inst.points[pick(rng)];
        switch (style(rng)) {
            case 0:
                b = pt(coord(rng), coord(rng));  // random second endpoint
                break;
            case 1:
                b = a;  // degenerate
                break;
            default:
                break;  // both endpoints on instance points
        }
        inst.segments.push_back(WeightedSegment{Segment(a, b), Rational(weight(rng))});
    }
    return inst;
}

}  // namespace segcover::testing
