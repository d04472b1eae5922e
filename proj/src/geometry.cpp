#include "grr/geometry.hpp"

#include <algorithm>

#include "grr/error.hpp"

namespace grr {

namespace {

// Feasible parameters t of a one-dimensional system of linear constraints.
struct ParamRange {
    Rational lo;
    Rational hi;
    bool lo_open = false;
    bool hi_open = false;

    bool empty() const
    {
        if (lo < hi) return false;
        if (lo == hi) return lo_open || hi_open;
        return true;
    }

    Rational sample() const
    {
        if (lo == hi) return lo;
        return (lo + hi) / Rational(2);
    }

    // alpha + beta * t > 0 (strict) or >= 0.
    void require(const Rational& alpha, const Rational& beta, bool strict)
    {
        if (beta.is_zero()) {
            const int s = alpha.sign();
            if (s < 0 || (strict && s == 0)) {
                lo = Rational(1);
                hi = Rational(0);
            }
            return;
        }
        const Rational root = -alpha / beta;
        if (beta.sign() > 0) {
            if (root > lo || (root == lo && strict)) {
                lo = root;
                lo_open = strict;
            }
        } else {
            if (root < hi || (root == hi && strict)) {
                hi = root;
                hi_open = strict;
            }
        }
    }
};

int sign_of(const Rational& r) { return r.sign(); }

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) { return sign_of(cross(b - a, c - a)); }

Segment::Segment(Point a, Point b) : a_(std::move(a)), b_(std::move(b))
{
    if (a_ == b_) throw GrrError(ErrorCode::ZeroLengthEdge, "segment endpoints coincide");
}

bool on_segment(const Point& p, const Segment& s)
{
    if (orientation(s.a(), s.b(), p) != 0) return false;
    const Point& lo = std::min(s.a(), s.b());
    const Point& hi = std::max(s.a(), s.b());
    return lo <= p && p <= hi;
}

bool in_relative_interior(const Point& p, const Segment& s) { return p != s.a() && p != s.b() && on_segment(p, s); }

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2)
{
    const Point& a = s1.a();
    const Point& b = s1.b();
    const Point& c = s2.a();
    const Point& d = s2.b();
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);

    if (o1 == 0 && o2 == 0) {
        // Collinear: lexicographic order is the order along the common line.
        const Point lo = std::max(std::min(a, b), std::min(c, d));
        const Point hi = std::min(std::max(a, b), std::max(c, d));
        if (hi < lo) return std::monostate{};
        if (hi == lo) return lo;
        return Segment(lo, hi);
    }
    if (o1 * o2 > 0 || o3 * o4 > 0) return std::monostate{};

    const Point r = b - a;
    const Point q = d - c;
    const Rational t = cross(c - a, q) / cross(r, q);
    return lerp(a, b, t);
}

bool segments_touch(const Segment& s1, const Segment& s2)
{
    return !std::holds_alternative<std::monostate>(segment_intersection(s1, s2));
}

HalfplaneHP::HalfplaneHP(Point p, Point q) : p_(std::move(p)), q_(std::move(q))
{
    if (p_ == q_) throw GrrError(ErrorCode::ZeroLengthEdge, "halfplane needs p != q");
}

bool in_hp(const HalfplaneHP& h, const Point& r) { return dot(r - h.q(), h.q() - h.p()).sign() >= 0; }

HalfStrip::HalfStrip(Segment base, Point away_from) : base_(std::move(base)), away_(std::move(away_from))
{
    const Point d = base_.direction();
    sweep_ = Point{-d.y, d.x};
    const int side = dot(away_ - base_.a(), sweep_).sign();
    if (side == 0) throw GrrError(ErrorCode::DegeneratePath, "half-strip reference point lies on the base line");
    if (side > 0) sweep_ = Point{d.y, -d.x};
}

std::optional<Rational> halfstrip_hit_parameter(const HalfStrip& strip, const Segment& target, bool interior_only)
{
    const Point& a = strip.base().a();
    const Point d = strip.base().direction();
    const Rational len2 = squared_norm(d);
    const Point& n = strip.sweep();

    const Point& c = target.a();
    const Point g = target.direction();
    const Rational s0 = dot(c - a, d);
    const Rational s1 = dot(g, d);
    const Rational l0 = dot(c - a, n);
    const Rational l1 = dot(g, n);

    ParamRange range{Rational(0), Rational(1), interior_only, interior_only};
    range.require(s0, s1, true);               // s(t) > 0
    range.require(len2 - s0, -s1, true);       // s(t) < |d|^2
    range.require(l0, l1, false);              // sweep coordinate >= 0
    if (range.empty()) return std::nullopt;
    return range.sample();
}

bool halfstrip_intersects(const HalfStrip& strip, const Segment& target, bool interior_only)
{
    return halfstrip_hit_parameter(strip, target, interior_only).has_value();
}

std::vector<Point> clip_convex(const std::vector<Point>& poly, const Rational& a, const Rational& b,
                               const Rational& c)
{
    std::vector<Point> out;
    const std::size_t n = poly.size();
    if (n == 0) return out;
    auto value = [&](const Point& p) { return a * p.x + b * p.y + c; };
    for (std::size_t i = 0; i < n; ++i) {
        const Point& cur = poly[i];
        const Point& nxt = poly[(i + 1) % n];
        const Rational vc = value(cur);
        const Rational vn = value(nxt);
        if (vc.sign() >= 0) out.push_back(cur);
        if ((vc.sign() > 0 && vn.sign() < 0) || (vc.sign() < 0 && vn.sign() > 0)) {
            out.push_back(lerp(cur, nxt, vc / (vc - vn)));
        }
    }
    return out;
}

Rational twice_signed_area(const std::vector<Point>& ring)
{
    Rational acc(0);
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) acc += cross(ring[i], ring[(i + 1) % n]);
    return acc;
}

bool halfstrip_meets_triangle_interior(const HalfStrip& strip, const Triangle& tri)
{
    // Two convex sets with nonempty interiors have intersecting interiors iff
    // their closures intersect in a set of positive area.
    std::vector<Point> poly(tri.begin(), tri.end());
    const Point& a = strip.base().a();
    const Point d = strip.base().direction();
    const Rational len2 = squared_norm(d);
    const Point& n = strip.sweep();

    // (p - a) . d >= 0
    poly = clip_convex(poly, d.x, d.y, -dot(a, d));
    // |d|^2 - (p - a) . d >= 0
    poly = clip_convex(poly, -d.x, -d.y, len2 + dot(a, d));
    // (p - a) . n >= 0
    poly = clip_convex(poly, n.x, n.y, -dot(a, n));
    if (poly.size() < 3) return false;
    return !twice_signed_area(poly).is_zero();
}

namespace {

// 0 for angles in [0, 180) measured clockwise from +x, 1 for [180, 360).
int clockwise_half(const Point& v)
{
    if (v.y.sign() < 0) return 0;
    if (v.y.sign() == 0 && v.x.sign() > 0) return 0;
    return 1;
}

}  // namespace

bool clockwise_angle_less(const Point& u, const Point& v)
{
    const int hu = clockwise_half(u);
    const int hv = clockwise_half(v);
    if (hu != hv) return hu < hv;
    return cross(u, v).sign() < 0;
}

Point project_onto_line(const Point& r, const Point& a, const Point& b)
{
    const Point d = b - a;
    return a + (dot(r - a, d) / squared_norm(d)) * d;
}

bool segment_strictly_approaches(const Point& a, const Point& b, const Point& t)
{
    const Point d = b - a;
    return dot(d, a - t).sign() < 0 && dot(d, b - t).sign() <= 0;
}

}  // namespace grr
