#pragma once

#include <array>
#include <compare>
#include <optional>
#include <ostream>
#include <variant>
#include <vector>

#include "grr/rational.hpp"

namespace grr {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
    /// Lexicographic (x, then y).
    friend std::strong_ordering operator<=>(const Point& a, const Point& b)
    {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }
    friend std::ostream& operator<<(std::ostream& os, const Point& p)
    {
        return os << "(" << p.x << "," << p.y << ")";
    }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rational& k, const Point& p) { return {k * p.x, k * p.y}; }

inline Rational dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Rational squared_norm(const Point& u) { return dot(u, u); }
inline Rational squared_distance(const Point& a, const Point& b) { return squared_norm(b - a); }

/// Point at parameter t on a + t (b - a).
inline Point lerp(const Point& a, const Point& b, const Rational& t) { return a + t * (b - a); }

/// Sign of (b - a) x (c - a): +1 left turn, 0 collinear, -1 right turn.
int orientation(const Point& a, const Point& b, const Point& c);

/// Closed segment with distinct endpoints.
class Segment {
public:
    Segment(Point a, Point b);

    const Point& a() const { return a_; }
    const Point& b() const { return b_; }
    Point direction() const { return b_ - a_; }

    friend bool operator==(const Segment&, const Segment&) = default;

private:
    Point a_;
    Point b_;
};

bool on_segment(const Point& p, const Segment& s);
/// On the segment but not at either endpoint.
bool in_relative_interior(const Point& p, const Segment& s);

/// Result of intersecting two closed segments. An overlap is reported with
/// endpoints in lexicographic order.
using SegmentIntersection = std::variant<std::monostate, Point, Segment>;

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2);
bool segments_touch(const Segment& s1, const Segment& s2);

/// Closed halfplane beyond q, bounded by the line through q orthogonal to pq,
/// not containing p.
class HalfplaneHP {
public:
    HalfplaneHP(Point p, Point q);
    const Point& p() const { return p_; }
    const Point& q() const { return q_; }

private:
    Point p_;
    Point q_;
};

bool in_hp(const HalfplaneHP& h, const Point& r);

/// Region swept by translating `base` orthogonally to itself, away from
/// `away_from`. Laterally it is the open slab over the relative interior of
/// the base; along the sweep it is closed at the base.
class HalfStrip {
public:
    HalfStrip(Segment base, Point away_from);

    const Segment& base() const { return base_; }
    const Point& away_from() const { return away_; }
    /// Unit-free sweep direction (orthogonal to base, pointing away).
    const Point& sweep() const { return sweep_; }

private:
    Segment base_;
    Point away_;
    Point sweep_;
};

/// Parameter t of a point target.a() + t (target.b() - target.a()) that lies
/// in the half-strip, or nullopt. With `interior_only`, t is restricted to
/// (0, 1). A returned t lies strictly inside the feasible parameter interval
/// unless that interval is a single point.
std::optional<Rational> halfstrip_hit_parameter(const HalfStrip& strip, const Segment& target, bool interior_only);

bool halfstrip_intersects(const HalfStrip& strip, const Segment& target, bool interior_only);

using Triangle = std::array<Point, 3>;

/// True iff the strip meets the open interior of a non-degenerate triangle.
bool halfstrip_meets_triangle_interior(const HalfStrip& strip, const Triangle& tri);

/// Keeps the part of a convex polygon where a*x + b*y + c >= 0.
std::vector<Point> clip_convex(const std::vector<Point>& poly, const Rational& a, const Rational& b,
                               const Rational& c);

/// Twice the signed area; positive for counterclockwise rings.
Rational twice_signed_area(const std::vector<Point>& ring);

/// Strict weak order of direction vectors by the angle measured clockwise
/// from the positive x-axis, in [0, 360).
bool clockwise_angle_less(const Point& u, const Point& v);

/// Orthogonal projection of r onto the line through a and b.
Point project_onto_line(const Point& r, const Point& a, const Point& b);

/// True iff the distance to t strictly decreases along the whole segment
/// from a to b (a != b). The squared distance is quadratic in the segment
/// parameter, so the sign of its derivative at both ends decides.
bool segment_strictly_approaches(const Point& a, const Point& b, const Point& t);

}  // namespace grr
