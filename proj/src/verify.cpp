#include "mvsim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mvsim/visibility.hpp"

namespace mvsim {

namespace {

constexpr double kMinSeparation = 1.0 - 1e-9;
constexpr double kGrowthTol = 1e-6;
constexpr double kAngleTolDeg = 1e-9;

std::vector<Point> positions_of(const ParsedRound& r) {
    std::vector<Point> pts;
    pts.reserve(r.robots.size());
    for (const ParsedRobot& p : r.robots) pts.push_back(p.pos);
    return pts;
}

bool any_off(const ParsedRound& r) {
    return std::any_of(r.robots.begin(), r.robots.end(), [](const ParsedRobot& p) {
        return p.light != Light::Red;
    });
}

double hull_perimeter(const std::vector<Point>& pts, bool& degenerate) {
    if (pts.size() <= 2) {
        degenerate = true;
        return 0.0;
    }
    const HullView hv = convex_hull(pts);
    degenerate = hv.degenerate_line;
    if (degenerate) return 0.0;
    double per = 0.0;
    const int h = static_cast<int>(hv.vertices.size());
    for (int k = 0; k < h; ++k)
        per += dist(pts[hv.vertices[k]], pts[hv.vertices[(k + 1) % h]]);
    return per;
}

// The expansion every mover anticipates: red, non-terminated hull vertices
// advanced one unit along their exterior bisectors.
struct PredictedHull {
    std::vector<Point> poly;  // counterclockwise
    bool valid = false;
};

PredictedHull predicted_hull(const ParsedRound& r) {
    PredictedHull out;
    const std::vector<Point> pts = positions_of(r);
    if (pts.size() < 3) return out;
    const HullView hv = convex_hull(pts);
    if (hv.degenerate_line) return out;
    const int h = static_cast<int>(hv.vertices.size());
    for (int k = 0; k < h; ++k) {
        const int idx = hv.vertices[k];
        Point p = pts[idx];
        const ParsedRobot& robot = r.robots[idx];
        if (robot.light == Light::Red && !robot.terminated) {
            const Point& prev = pts[hv.vertices[(k + h - 1) % h]];
            const Point& next = pts[hv.vertices[(k + 1) % h]];
            if (orient(prev, p, next) != 0) p = p + exterior_bisector(prev, p, next);
        }
        out.poly.push_back(p);
    }
    out.valid = true;
    return out;
}

bool in_safe_zone(const PredictedHull& ph, const Point& x, std::string& why) {
    const int h = static_cast<int>(ph.poly.size());
    int best_edge = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int k = 0; k < h; ++k) {
        const Point& u = ph.poly[k];
        const Point& v = ph.poly[(k + 1) % h];
        if (orient(u, v, x) >= 0) continue;  // not outside this edge
        const double d = dist_point_segment(x, u, v);
        if (d < best_dist) {
            best_dist = d;
            best_edge = k;
        }
    }
    if (best_edge < 0) {
        why = "destination not outside the predicted hull";
        return false;
    }
    const Point& u = ph.poly[best_edge];
    const Point& v = ph.poly[(best_edge + 1) % h];
    const Point& before = ph.poly[(best_edge + h - 1) % h];
    const Point& after = ph.poly[(best_edge + 2) % h];
    const double bound_u = (180.0 - angle_at(u, before, v)) / 4.0;
    const double bound_v = (180.0 - angle_at(v, u, after)) / 4.0;
    const double ang_u = angle_at(u, x, v);
    const double ang_v = angle_at(v, u, x);
    if (ang_u > bound_u + kAngleTolDeg || ang_v > bound_v + kAngleTolDeg) {
        std::ostringstream os;
        os << "angles " << ang_u << "/" << ang_v << " exceed bounds " << bound_u << "/" << bound_v;
        why = os.str();
        return false;
    }
    return true;
}

}  // namespace

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string VerifyReport::table() const {
    std::ostringstream os;
    for (const CheckResult& c : checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << '\n';
    }
    return os.str();
}

VerifyReport verify_trace(const ParsedTrace& trace, int oracle_k) {
    VerifyReport rep;
    const int total = static_cast<int>(trace.rounds.size());
    const long n = trace.n;

    {
        CheckResult c{"colors-two-only", true, ""};
        for (const ParsedRound& r : trace.rounds)
            for (const ParsedRobot& p : r.robots)
                if (!p.light) {
                    c.pass = false;
                    c.detail = "unknown color token '" + p.light_token + "'";
                }
        rep.checks.push_back(c);
    }

    {
        CheckResult c{"pairwise-distance", true, ""};
        for (const ParsedRound& r : trace.rounds) {
            const std::vector<Point> pts = positions_of(r);
            for (long i = 0; i < n && c.pass; ++i)
                for (long j = i + 1; j < n; ++j)
                    if (dist(pts[i], pts[j]) < kMinSeparation) {
                        c.pass = false;
                        std::ostringstream os;
                        os << "round " << r.round << " pair " << i << "," << j;
                        c.detail = os.str();
                        break;
                    }
        }
        rep.checks.push_back(c);
    }

    {
        CheckResult c{"motion-clearance", true, ""};
        for (int r = 1; r < total && c.pass; ++r) {
            const std::vector<Point> a = positions_of(trace.rounds[r - 1]);
            const std::vector<Point> b = positions_of(trace.rounds[r]);
            for (long i = 0; i < n && c.pass; ++i)
                for (long j = i + 1; j < n; ++j) {
                    const double m = min_dist_moving(a[i], b[i], a[j], b[j]);
                    if (m < kMinSeparation) {
                        c.pass = false;
                        std::ostringstream os;
                        os << "round " << r << " pair " << i << "," << j << " approach " << m;
                        c.detail = os.str();
                        break;
                    }
                }
        }
        rep.checks.push_back(c);
    }

    {
        CheckResult c{"side-depletion", true, ""};
        for (int r = 2; r < total; ++r)
            for (const ParsedRobot& p : trace.rounds[r].robots)
                if (p.role && *p.role == Role::Side) {
                    c.pass = false;
                    std::ostringstream os;
                    os << "robot " << p.id << " classified Side in round " << r;
                    c.detail = os.str();
                }
        rep.checks.push_back(c);
    }

    {
        CheckResult c{"light-monotone", true, ""};
        for (int r = 1; r < total; ++r)
            for (long i = 0; i < n; ++i) {
                const ParsedRobot& prev = trace.rounds[r - 1].robots[i];
                const ParsedRobot& cur = trace.rounds[r].robots[i];
                if (prev.light == Light::Red && cur.light == Light::Off) c.pass = false;
                if (prev.terminated && (!cur.terminated || !(prev.pos == cur.pos))) c.pass = false;
            }
        rep.checks.push_back(c);
    }

    {
        CheckResult c{"perimeter-growth", true, ""};
        for (int r = 2; r < total && c.pass; ++r) {
            const ParsedRound& before = trace.rounds[r - 1];
            if (!any_off(before)) continue;
            bool deg_a = false, deg_b = false;
            const double pa = hull_perimeter(positions_of(before), deg_a);
            const double pb = hull_perimeter(positions_of(trace.rounds[r]), deg_b);
            if (deg_a || deg_b) continue;
            if (pb < pa + 1.0 - kGrowthTol) {
                c.pass = false;
                std::ostringstream os;
                os << "round " << r << " grew " << (pb - pa);
                c.detail = os.str();
            }
        }
        rep.checks.push_back(c);
    }

    {
        CheckResult c{"safe-zone-containment", true, ""};
        for (int r = 1; r < total && c.pass; ++r) {
            const ParsedRound& before = trace.rounds[r - 1];
            const ParsedRound& after = trace.rounds[r];
            PredictedHull ph;
            bool ph_ready = false;
            for (long i = 0; i < n; ++i) {
                const ParsedRobot& cur = after.robots[i];
                if (!cur.role || (*cur.role != Role::Side && *cur.role != Role::Interior)) continue;
                if (before.robots[i].pos == cur.pos) continue;
                if (!ph_ready) {
                    ph = predicted_hull(before);
                    ph_ready = true;
                }
                if (!ph.valid) continue;
                std::string why;
                if (!in_safe_zone(ph, cur.pos, why)) {
                    c.pass = false;
                    std::ostringstream os;
                    os << "robot " << i << " round " << r << ": " << why;
                    c.detail = os.str();
                    break;
                }
            }
        }
        rep.checks.push_back(c);
    }

    const ParsedRound& last = trace.rounds.back();
    {
        CheckResult c{"final-all-red", true, ""};
        for (const ParsedRobot& p : last.robots)
            if (p.light != Light::Red) c.pass = false;
        rep.checks.push_back(c);
    }
    {
        CheckResult c{"final-strict-convex", true, ""};
        const std::vector<Point> pts = positions_of(last);
        if (pts.size() > 2) {
            const HullView hv = convex_hull(pts);
            c.pass = !hv.degenerate_line && hv.vertices.size() == pts.size();
        }
        rep.checks.push_back(c);
    }
    {
        CheckResult c{"final-mutual-visibility", true, ""};
        DiskSet d;
        d.centers = positions_of(last);
        for (long i = 0; i < n && c.pass; ++i)
            for (long j = i + 1; j < n; ++j)
                if (!visibility_oracle(static_cast<int>(i), static_cast<int>(j), d, oracle_k)) {
                    c.pass = false;
                    std::ostringstream os;
                    os << "pair " << i << "," << j << " not mutually visible";
                    c.detail = os.str();
                    break;
                }
        rep.checks.push_back(c);
    }
    {
        CheckResult c{"outcome-solved", trace.outcome_token == "Solved", trace.outcome_token};
        rep.checks.push_back(c);
    }
    return rep;
}

}  // namespace mvsim
