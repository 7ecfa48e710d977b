#include "mvsim/algorithm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mvsim {

namespace {

constexpr double kTieEps = 1e-9;
const Point kOrigin{0.0, 0.0};

std::vector<Point> snapshot_points(const Snapshot& s) {
    std::vector<Point> pts;
    pts.reserve(s.others.size() + 1);
    pts.push_back(kOrigin);  // observer
    for (const SnapshotEntry& e : s.others) pts.push_back(e.pos);
    return pts;
}

Light light_of(const Snapshot& s, int idx) {
    return idx == 0 ? s.self_light : s.others[idx - 1].light;
}

bool all_others_red(const Snapshot& s) {
    return std::all_of(s.others.begin(), s.others.end(),
                       [](const SnapshotEntry& e) { return e.light == Light::Red; });
}

int hull_position(const HullView& hv, int idx) {
    for (size_t k = 0; k < hv.vertices.size(); ++k)
        if (hv.vertices[k] == idx) return static_cast<int>(k);
    return -1;
}

// Closed point-in-triangle test with the shared tolerance: boundary counts.
bool triangle_contains(const Point& p, const Point& a, const Point& b, const Point& c) {
    const int o1 = orient(a, b, p);
    const int o2 = orient(b, c, p);
    const int o3 = orient(c, a, p);
    const bool has_pos = o1 > 0 || o2 > 0 || o3 > 0;
    const bool has_neg = o1 < 0 || o2 < 0 || o3 < 0;
    return !(has_pos && has_neg);
}

double deg2rad(double d) { return d * M_PI / 180.0; }

Decision stay(const Snapshot& s) { return {std::nullopt, s.self_light, false}; }

// Line special cases: one visible robot, or two collinear visible robots.
Decision line_case(const Snapshot& s) {
    if (s.others.size() == 1) {
        const SnapshotEntry& other = s.others.front();
        if (s.self_light == Light::Off) {
            const Point dir = perp_ccw(normalized(other.pos));
            return {dir, Light::Red, false};
        }
        if (other.light == Light::Red) return {std::nullopt, Light::Red, true};
        return stay(s);
    }
    if (s.others.size() == 2) {
        const bool both_red = s.others[0].light == Light::Red && s.others[1].light == Light::Red;
        if (s.self_light == Light::Off && both_red) {
            const Point dir = perp_ccw(normalized(s.others[1].pos - s.others[0].pos));
            return {dir, Light::Red, false};
        }
        return stay(s);
    }
    return stay(s);
}

struct EdgeAnchor {
    int ia = -1;  // hull vertex index (into snapshot points) on one side
    int ib = -1;  // and on the other
};

// Hull edge whose open segment contains the observer (index 0 in pts).
EdgeAnchor containing_edge(const std::vector<Point>& pts, const HullView& hv) {
    const int h = static_cast<int>(hv.vertices.size());
    for (int k = 0; k < h; ++k) {
        const int ia = hv.vertices[k];
        const int ib = hv.vertices[(k + 1) % h];
        const Point& a = pts[ia];
        const Point& b = pts[ib];
        if (orient(a, b, kOrigin) != 0) continue;
        const double along = dot(kOrigin - a, b - a);
        if (along > 0.0 && along < norm2(b - a)) return {ia, ib};
    }
    throw std::invalid_argument("side robot is not inside a hull edge");
}

// First red robot off the edge line, sweeping from the ray toward the given
// collinear neighbor: the red robot with the smallest angle to that ray.
int first_red_off_line(const Snapshot& s, const std::vector<Point>& pts, const Point& a,
                       const Point& b, const Point& toward) {
    int best = -1;
    double best_angle = std::numeric_limits<double>::infinity();
    for (size_t k = 1; k < pts.size(); ++k) {
        if (light_of(s, static_cast<int>(k)) != Light::Red) continue;
        if (orient(a, b, pts[k]) == 0) continue;
        const double ang = angle_at(kOrigin, toward, pts[k]);
        if (ang < best_angle) {
            best_angle = ang;
            best = static_cast<int>(k);
        }
    }
    return best;
}

struct EligibleInternal {
    EligibleEdge edge;
    int iu1 = -1, iu2 = -1;  // snapshot indices of (a, b)
    double distance = 0.0;   // observer to edge segment
};

// Eligibility of hull edges for a crossing. The relational conditions (empty
// triangle, nobody closer, tie handling) are judged on the positions in
// `pts`; the length requirement (e) is judged on `length_pts` when given, so
// the caller can gate on the anticipated edge length while keeping the
// comparisons on geometry every tied robot observes identically.
std::vector<EligibleInternal> collect_eligible(const Snapshot& s, const std::vector<Point>& pts,
                                               const HullView& hv,
                                               const std::vector<Point>* length_pts = nullptr) {
    std::vector<EligibleInternal> out;
    const int h = static_cast<int>(hv.vertices.size());
    const int n = static_cast<int>(pts.size());
    for (int k = 0; k < h; ++k) {
        const int ic = hv.vertices[k];
        const int id = hv.vertices[(k + 1) % h];
        if (light_of(s, ic) != Light::Red || light_of(s, id) != Light::Red) continue;
        const Point& c = pts[ic];
        const Point& d = pts[id];
        const double len = dist(c, d);
        const double gate_len =
            length_pts ? dist((*length_pts)[ic], (*length_pts)[id]) : len;
        if (gate_len < 3.0 - kEpsGeom) continue;  // (e)

        bool ok = true;
        for (int w = 1; w < n && ok; ++w) {
            if (w == ic || w == id) continue;
            // (a) empty closed triangle; covers (b) too, since a robot on the
            // segment cd sits on one of the triangle's sides.
            if (triangle_contains(pts[w], kOrigin, c, d)) ok = false;
        }
        if (!ok) continue;

        const double d_self = dist_point_segment(kOrigin, c, d);
        for (int w : hv.interior) {  // (c): non-hull robots only
            if (w == 0) continue;
            if (dist_point_segment(pts[w], c, d) < d_self - kTieEps) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;

        // Perpendicular toward the edge line; degenerate when the observer is
        // aligned with the line itself, in which case the edge is unusable.
        const Point line_dir = normalized(d - c);
        const Point foot_line = c + line_dir * dot(kOrigin - c, line_dir);
        if (dist(foot_line, kOrigin) <= kEpsGeom) continue;
        const Point toward_edge = normalized(foot_line - kOrigin);

        // (d) plus the single-peer bookkeeping. "Clockwise" is the side with
        // positive cross(toward_edge, w) in the local frame.
        bool cw_any = false, ccw_any = false;
        bool cw_off = false, ccw_off = false;
        for (int w = 1; w < n; ++w) {
            if (w == ic || w == id) continue;
            if (std::fabs(dist_point_segment(pts[w], c, d) - d_self) > kTieEps) continue;
            const bool cw = cross(toward_edge, pts[w]) > 0.0;
            (cw ? cw_any : ccw_any) = true;
            if (light_of(s, w) == Light::Off) (cw ? cw_off : ccw_off) = true;
        }
        if (cw_any && ccw_any) continue;  // (d)

        EligibleInternal e;
        // a = counterclockwise-side endpoint, b = clockwise-side endpoint.
        const bool c_is_cw = cross(toward_edge, c) > cross(toward_edge, d);
        e.edge.a = c_is_cw ? d : c;
        e.edge.b = c_is_cw ? c : d;
        e.iu1 = c_is_cw ? id : ic;
        e.iu2 = c_is_cw ? ic : id;
        e.edge.foot = foot_line;
        e.edge.peer_side = cw_off   ? PeerSide::Clockwise
                           : ccw_off ? PeerSide::Counterclockwise
                                     : PeerSide::None;
        e.distance = d_self;
        out.push_back(e);
    }
    return out;
}

// Interior hull angle at the vertex `iv` whose edge partner is `ipartner`.
double hull_angle_at(const std::vector<Point>& pts, const HullView& hv, int iv, int ipartner) {
    const int h = static_cast<int>(hv.vertices.size());
    const int pos = hull_position(hv, iv);
    const int prev = hv.vertices[(pos + h - 1) % h];
    const int next = hv.vertices[(pos + 1) % h];
    const int other = prev == ipartner ? next : prev;
    return angle_at(pts[iv], pts[ipartner], pts[other]);
}

}  // namespace

SafeZoneParams safe_zone_params(double alpha_deg, double beta_deg) {
    return {alpha_deg, beta_deg, std::min(alpha_deg, beta_deg) / 4.0};
}

Role classify(const Snapshot& s) {
    if (s.others.empty()) return Role::Alone;
    const HullView hv = convex_hull(snapshot_points(s));
    if (hv.degenerate_line) return Role::LineCase;
    if (hv.is_vertex(0)) return Role::Corner;
    for (int idx : hv.on_edge)
        if (idx == 0) return Role::Side;
    return Role::Interior;
}

Decision corner_step(const Snapshot& s) {
    const std::vector<Point> pts = snapshot_points(s);
    const HullView hv = convex_hull(pts);
    const int pos = hull_position(hv, 0);
    if (pos < 0) throw std::invalid_argument("corner_step: observer is not a hull vertex");

    // Done only when every visible robot is red and the whole view is in
    // strictly convex position; a robot still inside (or on an edge of) the
    // local hull means the formation is not finished, whatever its color.
    const bool view_convex = hv.interior.empty() && hv.on_edge.empty();
    if (s.self_light == Light::Red && all_others_red(s) && view_convex)
        return {std::nullopt, Light::Red, true};

    const int h = static_cast<int>(hv.vertices.size());
    const Point& prev = pts[hv.vertices[(pos + h - 1) % h]];
    const Point& next = pts[hv.vertices[(pos + 1) % h]];
    return {exterior_bisector(prev, kOrigin, next), Light::Red, false};
}

Decision side_step(const Snapshot& s, const ComputeOptions& opts) {
    const std::vector<Point> pts = snapshot_points(s);
    const HullView hv = convex_hull(pts);
    const EdgeAnchor e = containing_edge(pts, hv);

    // Corners are recognized by light alone; with both collinear neighbors
    // off, this robot stays put and falls inside the expanding hull.
    if (light_of(s, e.ia) != Light::Red && light_of(s, e.ib) != Light::Red) return stay(s);

    const int iva = first_red_off_line(s, pts, pts[e.ia], pts[e.ib], pts[e.ia]);
    const int ivb = first_red_off_line(s, pts, pts[e.ia], pts[e.ib], pts[e.ib]);
    if (iva < 0 || ivb < 0)
        throw std::invalid_argument("side_step: no red corner reference off the edge");

    const Snapshot sp = opts.predict ? predict_corners(s) : s;
    const std::vector<Point> ppts = snapshot_points(sp);
    const Point pa = ppts[e.ia];
    const Point pb = ppts[e.ib];
    const Point pva = ppts[iva];
    const Point pvb = ppts[ivb];

    const SafeZoneParams zone =
        safe_zone_params(180.0 - angle_at(pb, pvb, kOrigin), 180.0 - angle_at(pa, pva, kOrigin));

    const Point edge_dir = normalized(pb - pa);
    const Point foot = pa + edge_dir * dot(kOrigin - pa, edge_dir);
    Point outward = perp_ccw(edge_dir);
    if (dot(outward, pva - pa) > 0.0) outward = outward * -1.0;

    const double t = std::tan(deg2rad(zone.delta_deg)) * std::min(dist(foot, pa), dist(foot, pb));
    return {foot + outward * t, Light::Red, false};
}

std::vector<EligibleEdge> eligible_edges(const Snapshot& s) {
    const std::vector<Point> pts = snapshot_points(s);
    const HullView hv = convex_hull(pts);
    if (hv.degenerate_line) return {};
    std::vector<EligibleEdge> out;
    for (const EligibleInternal& e : collect_eligible(s, pts, hv)) out.push_back(e.edge);
    return out;
}

bool corridor_clear(const Snapshot& s, const Point& from, const Point& to) {
    for (const SnapshotEntry& e : s.others)
        if (dist_point_segment(e.pos, from, to) < 1.0 - 1e-9) return false;
    return true;
}

Snapshot predict_corners(const Snapshot& s) {
    Snapshot out = s;
    std::vector<Point> pts = snapshot_points(s);
    if (pts.size() < 3) return out;
    const HullView hv = convex_hull(pts);
    if (hv.degenerate_line) return out;
    const int h = static_cast<int>(hv.vertices.size());
    for (int k = 0; k < h; ++k) {
        const int idx = hv.vertices[k];
        if (idx == 0) continue;  // the observer decides its own move
        if (light_of(s, idx) != Light::Red) continue;
        const Point& prev = pts[hv.vertices[(k + h - 1) % h]];
        const Point& next = pts[hv.vertices[(k + 1) % h]];
        if (orient(prev, pts[idx], next) == 0) continue;
        out.others[idx - 1].pos = pts[idx] + exterior_bisector(prev, pts[idx], next);
    }
    return out;
}

// Light is intentionally not checked: a red robot can be flushed back inside
// when the corners it aimed past moved differently than predicted, and the
// only way out is to cross again.
Decision interior_step(const Snapshot& s, const ComputeOptions& opts) {
    const std::vector<Point> pts = snapshot_points(s);
    const HullView hv = convex_hull(pts);
    if (hv.degenerate_line) return stay(s);

    const Snapshot sp = opts.predict ? predict_corners(s) : s;
    const std::vector<Point> ppts = snapshot_points(sp);

    // Edge choice and tie detection run on current positions, which tied
    // robots observe identically; per-view predictions would break exact
    // ties and de-synchronize their crossing points.
    const std::vector<EligibleInternal> q = collect_eligible(s, pts, hv, &ppts);
    if (q.empty()) return stay(s);

    const EligibleInternal* best = &q.front();
    for (const EligibleInternal& e : q) {
        const bool tied = std::fabs(e.distance - best->distance) <= kTieEps;
        if (e.distance < best->distance - kTieEps ||
            (tied && lex_less(e.edge.foot, best->edge.foot)))
            best = &e;
    }

    // The landing itself is aimed at where the edge will be once the corners
    // have made this round's expansion move.
    const Point u1 = ppts[best->iu1];
    const Point u2 = ppts[best->iu2];
    const double len = dist(u1, u2);
    Point m;
    switch (best->edge.peer_side) {
        case PeerSide::None:
            m = (u1 + u2) * 0.5;
            break;
        case PeerSide::Clockwise:  // peer on the clockwise side: cross nearer u1
            m = u1 + normalized(u2 - u1) * (len / 3.0);
            break;
        case PeerSide::Counterclockwise:
            m = u2 + normalized(u1 - u2) * (len / 3.0);
            break;
    }

    const SafeZoneParams zone =
        safe_zone_params(180.0 - hull_angle_at(ppts, hv, best->iu1, best->iu2),
                         180.0 - hull_angle_at(ppts, hv, best->iu2, best->iu1));
    const double t = 0.5 * std::tan(deg2rad(zone.delta_deg)) * std::min(dist(m, u1), dist(m, u2));

    Point outward = perp_ccw(normalized(u2 - u1));
    if (dot(outward, kOrigin - u1) > 0.0) outward = outward * -1.0;
    const Point destination = m + outward * t;

    if (!corridor_clear(s, kOrigin, destination)) return stay(s);
    if (opts.predict && !corridor_clear(sp, kOrigin, destination)) return stay(s);
    return {destination, Light::Red, false};
}

Decision compute(const Snapshot& s, const ComputeOptions& opts) {
    switch (classify(s)) {
        case Role::Alone:
            return {std::nullopt, Light::Red, true};
        case Role::LineCase:
            return line_case(s);
        case Role::Corner:
            return corner_step(s);
        case Role::Side:
            return side_step(s, opts);
        case Role::Interior:
            return interior_step(s, opts);
    }
    return stay(s);
}

}  // namespace mvsim
