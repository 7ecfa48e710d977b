#pragma once

#include <cmath>
#include <utility>
#include <vector>

namespace mvsim {

// Shared absolute tolerance for geometric classification. orient() scales it
// by the largest coordinate magnitude of its inputs.
inline constexpr double kEpsGeom = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
    friend Point operator*(double s, Point a) { return a * s; }
    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point a) { return dot(a, a); }
inline double norm(Point a) { return std::sqrt(norm2(a)); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline Point perp_ccw(Point a) { return {-a.y, a.x}; }

// Unit vector in the direction of a; a must be nonzero.
Point normalized(Point a);

// Lexicographic (x, then y) comparison, used for deterministic tie-breaks.
inline bool lex_less(Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Convex hull of a point set, with every input index classified exactly once.
// `vertices` are in counterclockwise order and strictly convex. Collinear
// inputs come back with `degenerate_line` set and the two extremes recorded.
struct HullView {
    std::vector<int> vertices;
    std::vector<int> on_edge;
    std::vector<int> interior;
    bool degenerate_line = false;
    std::pair<int, int> extremes{-1, -1};

    bool is_vertex(int idx) const;
};

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right turn,
// 0 when |cross| <= kEpsGeom * max coordinate magnitude of the inputs.
int orient(const Point& a, const Point& b, const Point& c);

// Angle in degrees [0, 360) swept clockwise from ray b->a to ray b->d.
// Throws std::invalid_argument when a == b or d == b.
double angle_cw(const Point& a, const Point& b, const Point& d);

// Throws std::invalid_argument on duplicate points (distance <= kEpsGeom).
HullView convex_hull(const std::vector<Point>& points);

// Euclidean distance from p to the closed segment ab (a == b allowed).
double dist_point_segment(const Point& p, const Point& a, const Point& b);

// Minimum distance between p(t) = p0 + t(p1-p0) and q(t) = q0 + t(q1-q0)
// over the common interval t in [0, 1], via the closed-form quadratic.
double min_dist_moving(const Point& p0, const Point& p1, const Point& q0, const Point& q1);

// Unit bisector of the exterior angle at v, pointing away from the region
// spanned by prev and next. Throws std::invalid_argument for collinear input.
Point exterior_bisector(const Point& prev, const Point& v, const Point& next);

// Interior (non-reflex) angle at b between rays b->a and b->d, in degrees.
double angle_at(const Point& b, const Point& a, const Point& d);

bool is_finite(const Point& p);

}  // namespace mvsim
