#include <doctest.h>

#include <cmath>
#include <sstream>

#include "mvsim/render.hpp"
#include "mvsim/scenario.hpp"
#include "mvsim/trace_io.hpp"
#include "mvsim/verify.hpp"

using namespace mvsim;

namespace {

// Replaces the first line starting with `prefix` by `replacement`.
std::string patch_line(const std::string& text, const std::string& prefix,
                       const std::string& replacement) {
    std::istringstream in(text);
    std::ostringstream out;
    std::string line;
    bool done = false;
    while (std::getline(in, line)) {
        if (!done && line.rfind(prefix, 0) == 0) {
            out << replacement << '\n';
            done = true;
        } else {
            out << line << '\n';
        }
    }
    REQUIRE(done);
    return out.str();
}

Trace small_solved_trace() {
    Scenario sc;
    sc.positions = {{0, 0}, {10, 0}, {10, 10}, {0, 10}, {5, 4}};
    sc.params.seed = 2;
    return run(sc);
}

bool check_passed(const VerifyReport& rep, const std::string& name) {
    for (const CheckResult& c : rep.checks)
        if (c.name == name) return c.pass;
    REQUIRE(false);
    return false;
}

}  // namespace

TEST_CASE("generate: golden five-robot scenario file") {
    const Scenario sc = generate_scenario(5, 42, 3.0 * std::sqrt(5.0));
    const std::string expected =
        "mvsim-scenario 1\n"
        "n 5\n"
        "seed 42\n"
        "frames rotated\n"
        "predict 1\n"
        "k 64\n"
        "max_rounds 60\n"
        "points\n"
        "5.0657373158142951 4.2867529092466343\n"
        "5.0455433934684395 0.91414495223535674\n"
        "6.059312432699488 0.63102941889104003\n"
        "3.8543347735164146 2.5014067318726219\n"
        "1.8372033262830212 2.6180166614433591\n";
    CHECK(scenario_to_text(sc) == expected);
}

TEST_CASE("generate: single robot, collinear layout, infeasible spread") {
    CHECK(generate_scenario(1, 0, 2.0).positions.size() == 1);

    const Scenario line = generate_scenario(4, 9, 4.0, true);
    for (size_t i = 0; i + 2 < line.positions.size(); ++i)
        CHECK(orient(line.positions[i], line.positions[i + 1], line.positions[i + 2]) == 0);
    for (size_t i = 0; i + 1 < line.positions.size(); ++i) {
        const double gap = dist(line.positions[i], line.positions[i + 1]);
        CHECK(gap >= 1.0 + 1e-6);
        CHECK(gap <= 1.2 + 1e-6);
    }

    CHECK_THROWS_AS(generate_scenario(9, 0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(generate_scenario(60, 0, 7.75), std::runtime_error);
}

TEST_CASE("scenario text round-trips") {
    const Scenario sc = generate_scenario(6, 5, 8.0);
    const std::string text = scenario_to_text(sc);
    const Scenario back = scenario_from_text(text);
    CHECK(scenario_to_text(back) == text);
    CHECK(back.params.seed == sc.params.seed);
    CHECK(back.positions.size() == sc.positions.size());
    for (size_t i = 0; i < sc.positions.size(); ++i)
        CHECK(dist(back.positions[i], sc.positions[i]) == 0.0);
}

TEST_CASE("scenario parser rejects malformed input") {
    CHECK_THROWS_AS(scenario_from_text("bogus\n"), ParseError);
    CHECK_THROWS_AS(scenario_from_text("mvsim-scenario 1\nwhat 3\npoints\n"), ParseError);
    CHECK_THROWS_AS(scenario_from_text("mvsim-scenario 1\nn 2\npoints\n0 0\n"), ParseError);
    // Overlapping robots violate the starting invariant.
    CHECK_THROWS_AS(scenario_from_text("mvsim-scenario 1\nn 2\npoints\n0 0\n0.3 0\n"),
                    ParseError);
}

TEST_CASE("trace text parses back to the same run shape") {
    const Trace t = small_solved_trace();
    const std::string text = trace_to_text(t);
    const ParsedTrace parsed = trace_from_text(text);
    CHECK(parsed.n == 5);
    CHECK(parsed.total_rounds == t.total_rounds());
    CHECK(parsed.rounds.size() == t.rounds.size() + 1);
    CHECK(parsed.outcome_token == outcome_name(t.outcome));
    for (size_t i = 0; i < parsed.rounds[0].robots.size(); ++i)
        CHECK(dist(parsed.rounds[0].robots[i].pos, t.initial.robots[i].center) == 0.0);
}

TEST_CASE("trace parser rejects malformed input") {
    CHECK_THROWS_AS(trace_from_text("nope\n"), ParseError);
    const std::string text = trace_to_text(small_solved_trace());
    CHECK_THROWS_AS(trace_from_text(patch_line(text, "outcome", "banner nonsense")), ParseError);
}

TEST_CASE("verify: a solved trace passes every check") {
    const VerifyReport rep = verify_trace(trace_from_text(trace_to_text(small_solved_trace())));
    CHECK(rep.all_pass());
}

TEST_CASE("verify: tampered position fails the distance check") {
    const std::string text = trace_to_text(small_solved_trace());
    const ParsedTrace good = trace_from_text(text);
    const ParsedRobot& r0 = good.rounds[1].robots[0];
    const ParsedRobot& r1 = good.rounds[1].robots[1];
    // Move robot 1 on top of robot 0 in round 1.
    std::ostringstream forged;
    forged << "robot 1 " << format_double(r0.pos.x + 0.2) << ' ' << format_double(r0.pos.y)
           << ' ' << r1.light_token << ' ' << role_name(r1.role) << ' ' << (r1.terminated ? 1 : 0);
    std::string bad = text;
    const std::string needle = "robot 1 " + format_double(r1.pos.x);
    const size_t at = bad.find(needle, bad.find("round 1"));
    REQUIRE(at != std::string::npos);
    bad.replace(at, bad.find('\n', at) - at, forged.str());

    const VerifyReport rep = verify_trace(trace_from_text(bad));
    CHECK(!check_passed(rep, "pairwise-distance"));
    CHECK(!rep.all_pass());
}

TEST_CASE("verify: a third color token fails the color check") {
    const std::string text = trace_to_text(small_solved_trace());
    const size_t at = text.find(" Red ");
    REQUIRE(at != std::string::npos);
    std::string bad = text;
    bad.replace(at, 5, " Blue ");
    const VerifyReport rep = verify_trace(trace_from_text(bad));
    CHECK(!check_passed(rep, "colors-two-only"));
}

TEST_CASE("verify: a side role after round one fails depletion") {
    const std::string text = trace_to_text(small_solved_trace());
    const size_t round2 = text.find("round 2");
    REQUIRE(round2 != std::string::npos);
    const size_t corner = text.find("Corner", round2);
    REQUIRE(corner != std::string::npos);
    std::string bad = text;
    bad.replace(corner, 6, "Side");
    const VerifyReport rep = verify_trace(trace_from_text(bad));
    CHECK(!check_passed(rep, "side-depletion"));
}

TEST_CASE("render: one frame per round with a stable viewport") {
    const Trace t = small_solved_trace();
    const ParsedTrace parsed = trace_from_text(trace_to_text(t));
    std::string viewbox;
    for (int r = 0; r <= t.total_rounds(); ++r) {
        const std::string svg = render_round_svg(parsed, r);
        const size_t vb = svg.find("viewBox=\"");
        REQUIRE(vb != std::string::npos);
        const std::string this_box = svg.substr(vb, svg.find('"', vb + 9) - vb);
        if (viewbox.empty()) viewbox = this_box;
        CHECK(this_box == viewbox);

        size_t circles = 0, at = 0;
        while ((at = svg.find("<circle", at)) != std::string::npos) {
            ++circles;
            at += 7;
        }
        CHECK(circles == t.initial.robots.size());
    }
}

TEST_CASE("render: lights color the disks") {
    Scenario sc;
    sc.positions = {{0, 0}, {10, 0}, {10, 10}, {0, 10}};
    sc.params.seed = 1;
    const Trace t = run(sc);
    REQUIRE(t.outcome == Outcome::Solved);
    const ParsedTrace parsed = trace_from_text(trace_to_text(t));

    const std::string frame0 = render_round_svg(parsed, 0);
    CHECK(frame0.find("#d32f2f") == std::string::npos);  // round 0: everyone off

    const std::string frame1 = render_round_svg(parsed, 1);
    size_t reds = 0, at = 0;
    while ((at = frame1.find("#d32f2f", at)) != std::string::npos) {
        ++reds;
        at += 7;
    }
    CHECK(reds == 4);  // all four corners lit after round one
}
