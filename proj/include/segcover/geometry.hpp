#pragma once

#include "segcover/rational.hpp"

#include <vector>

namespace segcover {

struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

// Lexicographic (x, y) order; along any fixed line this coincides with the
// natural order of the points on the line.
inline bool lex_less(const Point& a, const Point& b) {
    const int cx = cmp(a.x, b.x);
    if (cx != 0) return cx < 0;
    return a.y < b.y;
}

inline bool operator<(const Point& a, const Point& b) { return lex_less(a, b); }

// Closed segment with endpoints stored in lexicographic order; p == q is a
// legal single-point segment.
class Segment {
public:
    Segment(Point a, Point b);

    const Point& p() const { return p_; }
    const Point& q() const { return q_; }
    bool degenerate() const { return p_ == q_; }

    bool operator==(const Segment& o) const { return p_ == o.p_ && q_ == o.q_; }
    bool operator!=(const Segment& o) const { return !(*this == o); }
    bool operator<(const Segment& o) const {
        if (p_ != o.p_) return lex_less(p_, o.p_);
        return lex_less(q_, o.q_);
    }

private:
    Point p_;
    Point q_;
};

// Line { (x,y) : a*x + b*y + c = 0 } in canonical integer form: (a,b) != (0,0),
// gcd(|a|,|b|,|c|) = 1, and the first nonzero of (a,b) positive. Two equal
// lines have identical fields, so structural comparison is line equality.
class Line {
public:
    Line(Integer a, Integer b, Integer c);

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Integer& c() const { return c_; }

    bool contains(const Point& t) const;
    bool vertical() const { return b_ == 0; }

    bool operator==(const Line& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_; }
    bool operator!=(const Line& o) const { return !(*this == o); }
    bool operator<(const Line& o) const;

private:
    Integer a_;
    Integer b_;
    Integer c_;
};

// True iff t lies on the closed segment s.
bool on_segment(const Segment& s, const Point& t);

// True iff t lies in s^{+delta}: the segment scaled about its midpoint by
// every factor in [1, 1+delta), i.e. the open interval reaching delta/2 of
// the segment's length past each endpoint (the scaled endpoints themselves
// excluded). A degenerate segment extends to nothing but its own point.
// Requires delta > 0.
bool covers_extended(const Segment& s, const Rational& delta, const Point& t);

// Canonical line through two distinct points.
Line line_through(const Point& p, const Point& q);

// True iff both endpoints of s satisfy l's equation.
bool collinear_with(const Segment& s, const Line& l);

// 0, 1 or 2 points: the endpoints of the smallest segment covering all of
// pts. Throws std::invalid_argument if the points are not collinear.
std::vector<Point> extreme_points(const std::vector<Point>& pts);

// Exact length of a horizontal or vertical segment. Oblique segments have
// irrational length and are rejected with std::domain_error.
Rational axis_parallel_length(const Segment& s);

// 1-D parameter of a point on a line: its x coordinate, or y for vertical
// lines. Ratios of parameter differences equal ratios of distances, which is
// all the dense-subset machinery needs. Requires l.contains(t).
Rational line_parameter(const Line& l, const Point& t);

// Inverse of line_parameter: the point of l with the given parameter.
Point line_point(const Line& l, const Rational& u);

}  // namespace segcover
