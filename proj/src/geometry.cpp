#include "mvsim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mvsim {

Point normalized(Point a) {
    const double n = norm(a);
    if (n <= 0.0) throw std::invalid_argument("normalized: zero-length vector");
    return {a.x / n, a.y / n};
}

bool is_finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

bool HullView::is_vertex(int idx) const {
    return std::find(vertices.begin(), vertices.end(), idx) != vertices.end();
}

int orient(const Point& a, const Point& b, const Point& c) {
    const double cr = cross(b - a, c - a);
    const double scale = std::max({std::fabs(a.x), std::fabs(a.y), std::fabs(b.x),
                                   std::fabs(b.y), std::fabs(c.x), std::fabs(c.y)});
    if (std::fabs(cr) <= kEpsGeom * scale) return 0;
    return cr > 0.0 ? 1 : -1;
}

double angle_cw(const Point& a, const Point& b, const Point& d) {
    if (dist(a, b) <= kEpsGeom || dist(d, b) <= kEpsGeom)
        throw std::invalid_argument("angle_cw: degenerate ray");
    const double ang_a = std::atan2(a.y - b.y, a.x - b.x);
    const double ang_d = std::atan2(d.y - b.y, d.x - b.x);
    double deg = (ang_a - ang_d) * 180.0 / M_PI;
    deg = std::fmod(deg, 360.0);
    if (deg < 0.0) deg += 360.0;
    return deg;
}

double angle_at(const Point& b, const Point& a, const Point& d) {
    const Point u = normalized(a - b);
    const Point v = normalized(d - b);
    const double c = std::clamp(dot(u, v), -1.0, 1.0);
    return std::acos(c) * 180.0 / M_PI;
}

namespace {

// Projection parameter of p onto segment ab, clamped to [0, 1].
double seg_param(const Point& p, const Point& a, const Point& b) {
    const Point ab = b - a;
    const double len2 = norm2(ab);
    if (len2 <= 0.0) return 0.0;
    return std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
}

}  // namespace

HullView convex_hull(const std::vector<Point>& points) {
    const int n = static_cast<int>(points.size());
    if (n == 0) throw std::invalid_argument("convex_hull: empty input");
    for (const Point& p : points)
        if (!is_finite(p)) throw std::invalid_argument("convex_hull: non-finite point");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist(points[i], points[j]) <= kEpsGeom)
                throw std::invalid_argument("convex_hull: duplicate points");

    HullView hv;
    if (n == 1) {
        hv.vertices = {0};
        return hv;
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return lex_less(points[i], points[j]);
    });

    // Monotone chain, popping collinear points so vertices stay strictly convex.
    auto build = [&](std::vector<int>& chain, auto begin, auto end) {
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   orient(points[chain[chain.size() - 2]], points[chain.back()], points[*it]) <= 0)
                chain.pop_back();
            chain.push_back(*it);
        }
    };
    std::vector<int> lower, upper;
    build(lower, order.begin(), order.end());
    build(upper, order.rbegin(), order.rend());

    std::vector<int> hull = lower;
    hull.insert(hull.end(), upper.begin() + 1, upper.end() - 1);

    if (hull.size() <= 2) {
        hv.degenerate_line = true;
        hv.extremes = {order.front(), order.back()};
        hv.vertices = {order.front(), order.back()};
        for (int idx : order)
            if (idx != order.front() && idx != order.back()) hv.on_edge.push_back(idx);
        return hv;
    }

    hv.vertices = hull;
    std::vector<char> is_vert(n, 0);
    for (int idx : hull) is_vert[idx] = 1;
    const int h = static_cast<int>(hull.size());
    for (int idx = 0; idx < n; ++idx) {
        if (is_vert[idx]) continue;
        bool edge = false;
        for (int k = 0; k < h && !edge; ++k) {
            const Point& a = points[hull[k]];
            const Point& b = points[hull[(k + 1) % h]];
            if (orient(a, b, points[idx]) != 0) continue;
            const double t = seg_param(points[idx], a, b);
            if (dist(points[idx], a + (b - a) * t) <= kEpsGeom * std::max(1.0, norm(b - a)))
                edge = true;
        }
        (edge ? hv.on_edge : hv.interior).push_back(idx);
    }
    return hv;
}

double dist_point_segment(const Point& p, const Point& a, const Point& b) {
    const double t = seg_param(p, a, b);
    return dist(p, a + (b - a) * t);
}

double min_dist_moving(const Point& p0, const Point& p1, const Point& q0, const Point& q1) {
    const Point d0 = p0 - q0;
    const Point dv = (p1 - p0) - (q1 - q0);
    const double a = norm2(dv);
    double best = std::min(norm(d0), norm(d0 + dv));
    if (a > 0.0) {
        const double t = std::clamp(-dot(d0, dv) / a, 0.0, 1.0);
        best = std::min(best, norm(d0 + dv * t));
    }
    return best;
}

Point exterior_bisector(const Point& prev, const Point& v, const Point& next) {
    if (dist(prev, v) <= kEpsGeom || dist(next, v) <= kEpsGeom || dist(prev, next) <= kEpsGeom)
        throw std::invalid_argument("exterior_bisector: coincident points");
    if (orient(prev, v, next) == 0)
        throw std::invalid_argument("exterior_bisector: collinear points");
    const Point sum = normalized(prev - v) + normalized(next - v);
    return normalized(sum * -1.0);
}

}  // namespace mvsim
