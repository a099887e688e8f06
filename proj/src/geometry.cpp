#include "segcover/geometry.hpp"

#include <stdexcept>
#include <utility>

namespace segcover {

Segment::Segment(Point a, Point b) : p_(std::move(a)), q_(std::move(b)) {
    if (lex_less(q_, p_)) std::swap(p_, q_);
}

Line::Line(Integer a, Integer b, Integer c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_ == 0 && b_ == 0) throw std::invalid_argument("Line: (a,b) must not be (0,0)");
    Integer g;
    mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
    a_ /= g;
    b_ /= g;
    c_ /= g;
    if (a_ < 0 || (a_ == 0 && b_ < 0)) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
}

bool Line::contains(const Point& t) const {
    return Rational(a_) * t.x + Rational(b_) * t.y + Rational(c_) == 0;
}

bool Line::operator<(const Line& o) const {
    int c = cmp(a_, o.a_);
    if (c != 0) return c < 0;
    c = cmp(b_, o.b_);
    if (c != 0) return c < 0;
    return c_ < o.c_;
}

namespace {

Rational cross(const Point& o, const Point& u, const Point& v) {
    return (u.x - o.x) * (v.y - o.y) - (u.y - o.y) * (v.x - o.x);
}

}  // namespace

bool on_segment(const Segment& s, const Point& t) {
    if (s.degenerate()) return t == s.p();
    if (cross(s.p(), s.q(), t) != 0) return false;
    // Endpoints are lex-ordered, so p.x <= q.x; y may go either way.
    if (t.x < s.p().x || t.x > s.q().x) return false;
    const Rational ylo = std::min(s.p().y, s.q().y);
    const Rational yhi = std::max(s.p().y, s.q().y);
    return t.y >= ylo && t.y <= yhi;
}

bool covers_extended(const Segment& s, const Rational& delta, const Point& t) {
    if (delta <= 0) throw std::invalid_argument("covers_extended: delta must be positive");
    if (s.degenerate()) return t == s.p();
    if (cross(s.p(), s.q(), t) != 0) return false;
    // Position u along the segment, with the endpoints at 0 and 1. The union
    // of the scalings by factors in [1, 1+delta) is the open parameter range
    // (-delta/2, 1 + delta/2).
    const Rational dx = s.q().x - s.p().x;
    Rational u;
    if (dx != 0) {
        u = (t.x - s.p().x) / dx;
    } else {
        u = (t.y - s.p().y) / (s.q().y - s.p().y);
    }
    const Rational half = delta / 2;
    return u > -half && u < 1 + half;
}

Line line_through(const Point& p, const Point& q) {
    if (p == q) throw std::invalid_argument("line_through: points must be distinct");
    const Rational ar = q.y - p.y;
    const Rational br = p.x - q.x;
    const Rational cr = (q.x - p.x) * p.y - ar * p.x;
    // Clear denominators (all mpq values are canonical, dens positive).
    Integer l;
    mpz_lcm(l.get_mpz_t(), ar.get_den_mpz_t(), br.get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), cr.get_den_mpz_t());
    const Rational scale(l);
    return Line(Rational(ar * scale).get_num(), Rational(br * scale).get_num(),
                Rational(cr * scale).get_num());
}

bool collinear_with(const Segment& s, const Line& l) {
    return l.contains(s.p()) && l.contains(s.q());
}

std::vector<Point> extreme_points(const std::vector<Point>& pts) {
    if (pts.empty()) return {};
    Point lo = pts.front();
    Point hi = pts.front();
    for (const Point& t : pts) {
        if (lex_less(t, lo)) lo = t;
        if (lex_less(hi, t)) hi = t;
    }
    if (lo == hi) return {lo};
    const Line l = line_through(lo, hi);
    for (const Point& t : pts) {
        if (!l.contains(t)) throw std::invalid_argument("extreme_points: points are not collinear");
    }
    return {lo, hi};
}

Rational axis_parallel_length(const Segment& s) {
    if (s.p().y == s.q().y) return s.q().x - s.p().x;
    if (s.p().x == s.q().x) return abs(s.q().y - s.p().y);
    throw std::domain_error("axis_parallel_length: segment is neither horizontal nor vertical");
}

Rational line_parameter(const Line& l, const Point& t) {
    if (!l.contains(t)) throw std::invalid_argument("line_parameter: point is not on the line");
    return l.vertical() ? t.y : t.x;
}

Point line_point(const Line& l, const Rational& u) {
    if (l.vertical()) return Point{Rational(-l.c()) / Rational(l.a()), u};
    return Point{u, (Rational(-l.c()) - Rational(l.a()) * u) / Rational(l.b())};
}

}  // namespace segcover
