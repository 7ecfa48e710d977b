#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <random>
#include <stdexcept>

#include "mvsim/algorithm.hpp"

using namespace mvsim;

namespace {

// Snapshot as seen from `observer` with an axis-aligned local frame: others
// are given in global coordinates and translated.
Snapshot snap_at(const Point& observer, Light self_light,
                 std::initializer_list<std::pair<Point, Light>> others) {
    Snapshot s;
    s.self_light = self_light;
    for (const auto& [p, l] : others) s.others.push_back({p - observer, l});
    return s;
}

constexpr double kTan22_5 = 0.41421356237309503;  // tan(22.5 deg) = sqrt(2) - 1

Point rotate(const Point& p, double th) {
    return {std::cos(th) * p.x - std::sin(th) * p.y, std::sin(th) * p.x + std::cos(th) * p.y};
}

std::vector<Point> square_corners() { return {{0, 0}, {10, 0}, {10, 10}, {0, 10}}; }

Snapshot square_snapshot(const Point& observer, Light self_light, Light corner_light,
                         std::initializer_list<std::pair<Point, Light>> extra = {}) {
    Snapshot s;
    s.self_light = self_light;
    for (const Point& c : square_corners()) s.others.push_back({c - observer, corner_light});
    for (const auto& [p, l] : extra) s.others.push_back({p - observer, l});
    return s;
}

}  // namespace

TEST_CASE("classify: corner, side, interior, line, alone") {
    CHECK(classify(snap_at({0, 0}, Light::Off,
                           {{{10, 0}, Light::Off}, {{10, 10}, Light::Off}, {{0, 10}, Light::Off}})) ==
          Role::Corner);
    CHECK(classify(square_snapshot({5, 0}, Light::Off, Light::Off)) == Role::Side);
    CHECK(classify(square_snapshot({5, 5}, Light::Off, Light::Off)) == Role::Interior);
    CHECK(classify(snap_at({0, 0}, Light::Off, {{{3, 0}, Light::Off}})) == Role::LineCase);
    CHECK(classify(snap_at({2, 0}, Light::Off, {{{0, 0}, Light::Off}, {{4, 0}, Light::Off}})) ==
          Role::LineCase);
    CHECK(classify(Snapshot{Light::Off, {}}) == Role::Alone);
}

TEST_CASE("compute: a robot that sees nobody terminates red") {
    const Decision d = compute(Snapshot{Light::Off, {}});
    CHECK(!d.destination);
    CHECK(d.new_light == Light::Red);
    CHECK(d.terminate);
}

TEST_CASE("compute: two-robot line steps aside once, then terminates") {
    const Snapshot first = snap_at({0, 0}, Light::Off, {{{3, 0}, Light::Off}});
    const Decision d1 = compute(first);
    REQUIRE(d1.destination);
    CHECK(norm(*d1.destination) == doctest::Approx(1).epsilon(1e-12));
    CHECK(std::fabs(d1.destination->x) < 1e-12);  // perpendicular to the sight line
    CHECK(d1.new_light == Light::Red);
    CHECK(!d1.terminate);

    const Decision d2 = compute(snap_at({0, 0}, Light::Red, {{{3, 1}, Light::Red}}));
    CHECK(!d2.destination);
    CHECK(d2.terminate);

    const Decision d3 = compute(snap_at({0, 0}, Light::Red, {{{3, 1}, Light::Off}}));
    CHECK(!d3.destination);
    CHECK(!d3.terminate);
}

TEST_CASE("compute: three collinear robots, middle moves only on red-red") {
    const Snapshot ready =
        snap_at({2, 0}, Light::Off, {{{0, 0}, Light::Red}, {{4, 0}, Light::Red}});
    const Decision d = compute(ready);
    REQUIRE(d.destination);
    CHECK(norm(*d.destination) == doctest::Approx(1).epsilon(1e-12));
    CHECK(std::fabs(d.destination->x) < 1e-12);
    CHECK(d.new_light == Light::Red);

    const Snapshot waiting =
        snap_at({2, 0}, Light::Off, {{{0, 0}, Light::Off}, {{4, 0}, Light::Off}});
    const Decision w = compute(waiting);
    CHECK(!w.destination);
    CHECK(w.new_light == Light::Off);
}

TEST_CASE("corner_step: expansion along the exterior bisector") {
    const Snapshot s = snap_at({0, 0}, Light::Off,
                               {{{10, 0}, Light::Red}, {{0, 10}, Light::Red}, {{3, 3}, Light::Off}});
    const Decision d = corner_step(s);
    REQUIRE(d.destination);
    CHECK(d.destination->x == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-9));
    CHECK(d.destination->y == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-9));
    CHECK(d.new_light == Light::Red);
    CHECK(!d.terminate);
}

TEST_CASE("corner_step: red corner with a fully red convex view terminates in place") {
    const Snapshot s = snap_at({0, 0}, Light::Red,
                               {{{10, 0}, Light::Red}, {{7, 7}, Light::Red}, {{0, 10}, Light::Red}});
    const Decision d = corner_step(s);
    CHECK(!d.destination);
    CHECK(d.terminate);
    CHECK(d.new_light == Light::Red);
}

TEST_CASE("corner_step: a red robot still inside the view postpones termination") {
    const Snapshot s = snap_at({0, 0}, Light::Red,
                               {{{10, 0}, Light::Red}, {{0, 10}, Light::Red}, {{3, 3}, Light::Red}});
    const Decision d = corner_step(s);
    REQUIRE(d.destination);  // keeps expanding instead
    CHECK(!d.terminate);
}

TEST_CASE("corner_step: off corner turns red even when everyone else is red") {
    const Snapshot s =
        snap_at({0, 0}, Light::Off, {{{10, 0}, Light::Red}, {{0, 10}, Light::Red}});
    const Decision d = corner_step(s);
    REQUIRE(d.destination);
    CHECK(d.new_light == Light::Red);
    CHECK(!d.terminate);
}

TEST_CASE("side_step: square edge example lands at the safe-zone height") {
    const Snapshot s = square_snapshot({4, 0}, Light::Off, Light::Red);
    REQUIRE(classify(s) == Role::Side);
    const Decision d = side_step(s, ComputeOptions{false});
    REQUIRE(d.destination);
    // alpha = beta = 90, delta = 22.5 deg, t = tan(22.5) * min(6, 4)
    CHECK(d.destination->x == doctest::Approx(0).epsilon(1e-9));
    CHECK(d.destination->y == doctest::Approx(-4.0 * kTan22_5).epsilon(1e-9));
    CHECK(d.new_light == Light::Red);
}

TEST_CASE("side_step: insensitive to the order of snapshot entries") {
    Snapshot s = square_snapshot({4, 0}, Light::Off, Light::Red);
    const Decision base = side_step(s, ComputeOptions{false});
    std::mt19937 rng(41);
    for (int i = 0; i < 5; ++i) {
        std::shuffle(s.others.begin(), s.others.end(), rng);
        const Decision d = side_step(s, ComputeOptions{false});
        REQUIRE(d.destination);
        CHECK(dist(*d.destination, *base.destination) < 1e-12);
    }
}

TEST_CASE("side_step: stays put while both collinear neighbors are off") {
    const Snapshot s = square_snapshot({4, 0}, Light::Off, Light::Off);
    const Decision d = side_step(s);
    CHECK(!d.destination);
    CHECK(d.new_light == Light::Off);
}

TEST_CASE("side_step: destination satisfies both safe-zone angle bounds") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(0, 20), t(0.3, 0.7);
    int checked = 0;
    while (checked < 300) {
        std::vector<Point> pts;
        for (int i = 0; i < 4; ++i) pts.push_back({u(rng), u(rng)});
        HullView hv;
        try {
            hv = convex_hull(pts);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (hv.degenerate_line || hv.vertices.size() != 4) continue;
        std::vector<Point> quad;
        for (int v : hv.vertices) quad.push_back(pts[v]);
        const Point &vp = quad[0], &v1 = quad[1], &v2 = quad[2], &v3 = quad[3];
        if (dist(v1, v2) < 3.0) continue;
        const Point observer = v1 + (v2 - v1) * t(rng);

        Snapshot s;
        s.self_light = Light::Off;
        for (const Point& q : quad) s.others.push_back({q - observer, Light::Red});
        if (classify(s) != Role::Side) continue;
        const Decision d = side_step(s, ComputeOptions{false});
        REQUIRE(d.destination);
        const Point x = *d.destination + observer;
        const double bound1 = (180.0 - angle_at(v1, vp, v2)) / 4.0;
        const double bound2 = (180.0 - angle_at(v2, v1, v3)) / 4.0;
        CHECK(angle_at(v1, x, v2) <= bound1 + 1e-9);
        CHECK(angle_at(v2, v1, x) <= bound2 + 1e-9);
        ++checked;
    }
}

TEST_CASE("eligible_edges: lone interior robot sees all four square edges") {
    const Snapshot s = square_snapshot({5, 3}, Light::Off, Light::Red);
    const auto edges = eligible_edges(s);
    CHECK(edges.size() == 4);
    bool bottom_found = false;
    for (const EligibleEdge& e : edges) {
        const bool is_bottom = std::fabs(e.a.y + 3.0) < 1e-9 && std::fabs(e.b.y + 3.0) < 1e-9;
        if (is_bottom) {
            bottom_found = true;
            CHECK(e.peer_side == PeerSide::None);
            CHECK(e.foot.x == doctest::Approx(0).epsilon(1e-12));
            CHECK(e.foot.y == doctest::Approx(-3).epsilon(1e-12));
        }
    }
    CHECK(bottom_found);
}

TEST_CASE("eligible_edges: equidistant pair stays eligible with peer sides") {
    const Snapshot left = square_snapshot({4, 3}, Light::Off, Light::Red, {{{6, 3}, Light::Off}});
    const auto el = eligible_edges(left);
    // Bottom, top, and left qualify; the peer is strictly closer to the right edge.
    CHECK(el.size() == 3);
    bool saw_bottom = false;
    for (const EligibleEdge& e : el)
        if (std::fabs(e.a.y + 3.0) < 1e-9 && std::fabs(e.b.y + 3.0) < 1e-9) {
            saw_bottom = true;
            CHECK(e.peer_side == PeerSide::Clockwise);
        }
    CHECK(saw_bottom);

    const Snapshot right = square_snapshot({6, 3}, Light::Off, Light::Red, {{{4, 3}, Light::Off}});
    for (const EligibleEdge& e : eligible_edges(right))
        if (std::fabs(e.a.y + 3.0) < 1e-9 && std::fabs(e.b.y + 3.0) < 1e-9)
            CHECK(e.peer_side == PeerSide::Counterclockwise);
}

TEST_CASE("eligible_edges: edges shorter than three diameters are excluded") {
    Snapshot s;
    s.self_light = Light::Off;
    for (const Point& c : {Point{0, 0}, Point{2.5, 0}, Point{2.5, 2.5}, Point{0, 2.5}})
        s.others.push_back({c - Point{1.25, 1.0}, Light::Red});
    REQUIRE(classify(s) == Role::Interior);
    CHECK(eligible_edges(s).empty());
}

TEST_CASE("eligible_edges: equidistant robots on both sides disqualify") {
    // Long horizontal edges; the observer is flanked above and below, so (c)
    // kills the long edges and (d) kills the short ones.
    Snapshot s;
    s.self_light = Light::Off;
    const Point obs{10, 2};
    for (const Point& c : {Point{0, 0}, Point{20, 0}, Point{20, 4}, Point{0, 4}})
        s.others.push_back({c - obs, Light::Red});
    s.others.push_back({Point{10, 1} - obs, Light::Off});
    s.others.push_back({Point{10, 3} - obs, Light::Off});
    REQUIRE(classify(s) == Role::Interior);
    CHECK(eligible_edges(s).empty());
    CHECK(!interior_step(s, ComputeOptions{false}).destination);
}

TEST_CASE("interior_step: lone robot crosses the nearest edge at its midpoint") {
    const Snapshot s = square_snapshot({5, 3}, Light::Off, Light::Red);
    const Decision d = interior_step(s, ComputeOptions{false});
    REQUIRE(d.destination);
    // m = (5,0) globally, t = 0.5 * tan(22.5) * 5
    CHECK(d.destination->x == doctest::Approx(0).epsilon(1e-9));
    CHECK(d.destination->y == doctest::Approx(-3.0 - 2.5 * kTan22_5).epsilon(1e-9));
    CHECK(d.new_light == Light::Red);
    CHECK(!d.terminate);
    // Lands clear of both edge endpoints by at least one diameter.
    CHECK(dist(*d.destination, {-5, -3}) >= 1.0);
    CHECK(dist(*d.destination, {5, -3}) >= 1.0);
}

TEST_CASE("interior_step: a robot inside the descent triangle redirects the crossing") {
    // The extra robot sits inside the triangle toward the bottom edge, so that
    // edge is not eligible and the nearest remaining one (left) is used.
    const Snapshot s = square_snapshot({5, 3}, Light::Off, Light::Red, {{{5.8, 1}, Light::Off}});
    const Decision d = interior_step(s, ComputeOptions{false});
    REQUIRE(d.destination);
    CHECK(d.destination->x == doctest::Approx(-5.0 - 2.5 * kTan22_5).epsilon(1e-9));
    CHECK(d.destination->y == doctest::Approx(2).epsilon(1e-9));
}

TEST_CASE("interior_step: corridor blocked by a corner still en route") {
    // Just-eligible predicted edge; the peer pushes the crossing point next to
    // a corner whose current position still straddles the path.
    Snapshot s;
    s.self_light = Light::Off;
    s.others.push_back({{-1.1, -1}, Light::Red});
    s.others.push_back({{1.1, -1}, Light::Red});
    s.others.push_back({{1.1, 2}, Light::Red});
    s.others.push_back({{-1.1, 2}, Light::Red});
    s.others.push_back({{1.0, 0}, Light::Off});  // equidistant peer
    REQUIRE(classify(s) == Role::Interior);
    const Decision d = interior_step(s, ComputeOptions{true});
    CHECK(!d.destination);
    CHECK(d.new_light == Light::Off);
}

TEST_CASE("interior_step: a red robot trapped inside crosses again") {
    Snapshot s = square_snapshot({5, 3}, Light::Red, Light::Red);
    const Decision d = interior_step(s, ComputeOptions{false});
    REQUIRE(d.destination);
    CHECK(d.new_light == Light::Red);
    CHECK(!d.terminate);
}

TEST_CASE("interior_step: equidistant pair splits the edge without conflict") {
    const Snapshot a = square_snapshot({4, 3}, Light::Off, Light::Red, {{{6, 3}, Light::Off}});
    const Snapshot b = square_snapshot({6, 3}, Light::Off, Light::Red, {{{4, 3}, Light::Off}});
    const Decision da = interior_step(a, ComputeOptions{false});
    const Decision db = interior_step(b, ComputeOptions{false});
    REQUIRE(da.destination);
    REQUIRE(db.destination);
    const Point ga = *da.destination + Point{4, 3};
    const Point gb = *db.destination + Point{6, 3};
    // Crossing points one third in from opposite ends of the bottom edge.
    CHECK(ga.x == doctest::Approx(10.0 / 3.0).epsilon(1e-9));
    CHECK(gb.x == doctest::Approx(20.0 / 3.0).epsilon(1e-9));
    CHECK(dist(ga, gb) >= 10.0 / 3.0 - 1e-9);
    CHECK(min_dist_moving({4, 3}, ga, {6, 3}, gb) >= 1.0 - 1e-9);
    for (const Point& corner : {Point{0, 0}, Point{10, 0}}) {
        CHECK(dist(ga, corner) >= 1.0);
        CHECK(dist(gb, corner) >= 1.0);
    }
}

TEST_CASE("corridor_clear: clearance is one full diameter") {
    Snapshot far;
    far.self_light = Light::Off;
    far.others.push_back({{1.5, 1}, Light::Off});
    CHECK(corridor_clear(far, {0, 2}, {0, 0}));

    Snapshot near = far;
    near.others[0].pos = {0.8, 1};
    CHECK(!corridor_clear(near, {0, 2}, {0, 0}));

    CHECK(corridor_clear(Snapshot{Light::Off, {}}, {0, 0}, {5, 5}));
}

TEST_CASE("predict_corners: red hull robots advance, off robots stay") {
    const Snapshot s = square_snapshot({5, 3}, Light::Off, Light::Red, {{{5, 5}, Light::Off}});
    const Snapshot p = predict_corners(s);
    const double b = std::sqrt(0.5);
    // Square corners advance along their diagonals; entry order is stable.
    const Point expected[4] = {{-5 - b, -3 - b}, {5 + b, -3 - b}, {5 + b, 7 + b}, {-5 - b, 7 + b}};
    for (int i = 0; i < 4; ++i) CHECK(dist(p.others[i].pos, expected[i]) < 1e-9);
    CHECK(dist(p.others[4].pos, s.others[4].pos) == 0.0);
    // The bottom edge stretches from 10 to 10 + sqrt(2).
    CHECK(dist(p.others[0].pos, p.others[1].pos) ==
          doctest::Approx(10.0 + std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("compute: rotating the snapshot rotates the destination") {
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> u(-8, 8), th(0, 2 * M_PI);
    int checked = 0;
    while (checked < 200) {
        Snapshot s;
        s.self_light = Light::Off;
        bool ok = true;
        for (int i = 0; i < 6 && ok; ++i) {
            const Point p{u(rng), u(rng)};
            if (norm(p) < 1.0) ok = false;
            for (const SnapshotEntry& e : s.others)
                if (dist(e.pos, p) < 1.0) ok = false;
            s.others.push_back({p, i % 2 ? Light::Red : Light::Off});
        }
        if (!ok) continue;
        const double theta = th(rng);
        Snapshot rotated = s;
        for (SnapshotEntry& e : rotated.others) e.pos = rotate(e.pos, theta);

        const Decision d0 = compute(s);
        const Decision d1 = compute(rotated);
        CHECK(d0.terminate == d1.terminate);
        CHECK(d0.new_light == d1.new_light);
        REQUIRE(d0.destination.has_value() == d1.destination.has_value());
        if (d0.destination) CHECK(dist(rotate(*d0.destination, theta), *d1.destination) < 1e-7);
        ++checked;
    }
}

TEST_CASE("compute: never turns a red light off, always same output for same input") {
    std::mt19937 rng(44);
    std::uniform_real_distribution<double> u(-9, 9);
    int checked = 0;
    while (checked < 300) {
        Snapshot s;
        s.self_light = checked % 2 ? Light::Red : Light::Off;
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i) {
            const Point p{u(rng), u(rng)};
            if (norm(p) < 1.0) ok = false;
            for (const SnapshotEntry& e : s.others)
                if (dist(e.pos, p) < 1.0) ok = false;
            s.others.push_back({p, (i + checked) % 3 ? Light::Red : Light::Off});
        }
        if (!ok) continue;
        const Decision d = compute(s);
        if (s.self_light == Light::Red) CHECK(d.new_light == Light::Red);
        const Decision again = compute(s);
        CHECK(d.destination.has_value() == again.destination.has_value());
        if (d.destination) CHECK(dist(*d.destination, *again.destination) == 0.0);
        CHECK(d.new_light == again.new_light);
        CHECK(d.terminate == again.terminate);
        ++checked;
    }
}

TEST_CASE("corner_step: simultaneous expansion keeps the corners strictly convex") {
    std::mt19937 rng(45);
    std::uniform_real_distribution<double> u(0, 25);
    int checked = 0;
    while (checked < 100) {
        std::vector<Point> pts;
        for (int i = 0; i < 7; ++i) pts.push_back({u(rng), u(rng)});
        HullView hv;
        try {
            hv = convex_hull(pts);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (hv.degenerate_line || hv.vertices.size() < 4) continue;
        std::vector<Point> poly;
        for (int v : hv.vertices) poly.push_back(pts[v]);

        // Everyone red except a shared interior off robot keeping them moving.
        Point inner{0, 0};
        for (const Point& p : poly) inner = inner + p;
        inner = inner * (1.0 / static_cast<double>(poly.size()));

        std::vector<Point> moved;
        bool legal = true;
        for (size_t i = 0; i < poly.size() && legal; ++i) {
            Snapshot s;
            s.self_light = Light::Red;
            for (size_t j = 0; j < poly.size(); ++j)
                if (j != i) s.others.push_back({poly[j] - poly[i], Light::Red});
            if (dist(inner, poly[i]) < 1.0) legal = false;
            s.others.push_back({inner - poly[i], Light::Off});
            if (!legal) break;
            const Decision d = corner_step(s);
            REQUIRE(d.destination);
            moved.push_back(poly[i] + *d.destination);
        }
        if (!legal) continue;
        const HullView after = convex_hull(moved);
        CHECK(!after.degenerate_line);
        CHECK(after.vertices.size() == moved.size());
        ++checked;
    }
}
