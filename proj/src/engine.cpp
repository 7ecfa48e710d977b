#include "mvsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mvsim {

namespace {

constexpr double kMinSeparation = 1.0 - 1e-9;

bool all_terminated(const Configuration& c) {
    return std::all_of(c.robots.begin(), c.robots.end(),
                       [](const Robot& r) { return r.terminated; });
}

void validate_positions(const std::vector<Point>& pts) {
    for (const Point& p : pts)
        if (!is_finite(p)) throw std::invalid_argument("scenario: non-finite position");
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (dist(pts[i], pts[j]) < kMinSeparation)
                throw std::invalid_argument("scenario: robots closer than one diameter");
}

}  // namespace

int default_max_rounds(int n) { return 10 * n + 10; }

std::pair<Configuration, RoundEvents> step(const Configuration& config,
                                           const std::vector<Frame>& frames,
                                           const SimParams& params,
                                           const ComputeFn& fn,
                                           const std::vector<std::optional<Role>>& prev_roles) {
    const int n = static_cast<int>(config.robots.size());
    RoundEvents ev;
    ev.roles = prev_roles;
    ev.roles.resize(n);

    const std::vector<std::vector<bool>> vis = visibility_matrix(disks_of(config), params.k_samples);
    const ComputeOptions opts{params.predict};

    std::vector<Point> target(n);
    std::vector<Decision> decisions(n);
    for (int i = 0; i < n; ++i) {
        const Robot& r = config.robots[i];
        target[i] = r.center;
        if (r.terminated) {
            decisions[i] = {std::nullopt, r.light, false};
            continue;
        }
        std::vector<int> seen;
        for (int j = 0; j < n; ++j)
            if (vis[i][j]) seen.push_back(j);
        Frame f = frames[i];
        f.origin = r.center;  // local destinations map back through this anchor
        const Snapshot snap = make_snapshot_from(config, i, f, seen);
        ev.roles[i] = classify(snap);
        Decision d = fn(snap, opts);
        if (d.destination) {
            const Point g = to_global(f, *d.destination);
            if (!is_finite(g)) {
                ev.violations.push_back({"nonfinite-destination", i, -1, 0.0});
                d.destination.reset();
            } else {
                target[i] = g;
            }
        }
        if (r.light == Light::Red && d.new_light == Light::Off)
            ev.violations.push_back({"light-regression", i, -1, 0.0});
        decisions[i] = d;
    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double m = min_dist_moving(config.robots[i].center, target[i],
                                             config.robots[j].center, target[j]);
            if (m < kMinSeparation) ev.violations.push_back({"collision", i, j, m});
        }

    Configuration next = config;
    next.round = config.round + 1;
    for (int i = 0; i < n; ++i) {
        Robot& r = next.robots[i];
        if (!(target[i] == r.center)) {
            ev.moves.push_back({i, r.center, target[i]});
            r.center = target[i];
        }
        if (decisions[i].new_light != r.light) {
            ev.light_changes.push_back({i, r.light, decisions[i].new_light});
            r.light = decisions[i].new_light;
        }
        if (decisions[i].terminate) r.terminated = true;
    }
    return {next, ev};
}

Trace run(const Scenario& scenario) { return run(scenario, ComputeFn(&compute)); }

Trace run(const Scenario& scenario, const ComputeFn& fn) {
    const int n = static_cast<int>(scenario.positions.size());
    if (n < 1) throw std::invalid_argument("scenario: need at least one robot");
    validate_positions(scenario.positions);

    Trace tr;
    tr.scenario = scenario;
    tr.initial.round = 0;
    for (int i = 0; i < n; ++i)
        tr.initial.robots.push_back({i, scenario.positions[i], Light::Off, false});

    std::vector<Frame> frames;
    frames.reserve(n);
    for (int i = 0; i < n; ++i)
        frames.push_back(make_frame(scenario.params.seed, i, scenario.params.policy));

    const int max_rounds =
        scenario.params.max_rounds > 0 ? scenario.params.max_rounds : default_max_rounds(n);

    Configuration config = tr.initial;
    std::vector<std::optional<Role>> roles(n);
    while (true) {
        if (all_terminated(config)) {
            const bool red = std::all_of(config.robots.begin(), config.robots.end(),
                                         [](const Robot& r) { return r.light == Light::Red; });
            std::vector<Point> centers;
            for (const Robot& r : config.robots) centers.push_back(r.center);
            if (red && strictly_convex_positions(centers)) {
                tr.outcome = Outcome::Solved;
            } else {
                tr.outcome = Outcome::Violation;
                if (!tr.rounds.empty())
                    tr.rounds.back().events.violations.push_back(
                        {"terminated-degenerate", -1, -1, 0.0});
            }
            break;
        }
        if (config.round >= max_rounds) {
            tr.outcome = Outcome::MaxRoundsExceeded;
            break;
        }
        auto [next, ev] = step(config, frames, scenario.params, fn, roles);
        roles = ev.roles;
        const bool violated = !ev.violations.empty();
        config = next;
        tr.rounds.push_back({config, std::move(ev)});
        if (violated) {
            tr.outcome = Outcome::Violation;
            break;
        }
    }
    return tr;
}

Decision broken_compute(const Snapshot& s, const ComputeOptions&) {
    if (s.others.empty()) return {std::nullopt, Light::Red, true};
    const SnapshotEntry* nearest = &s.others.front();
    for (const SnapshotEntry& e : s.others)
        if (norm2(e.pos) < norm2(nearest->pos)) nearest = &e;
    return {nearest->pos, Light::Red, false};
}

bool strictly_convex_positions(const std::vector<Point>& centers) {
    if (centers.size() <= 2) return true;
    const HullView hv = convex_hull(centers);
    return !hv.degenerate_line && hv.vertices.size() == centers.size();
}

FinalReport check_final(const Configuration& config, int oracle_k) {
    FinalReport rep;
    const int n = static_cast<int>(config.robots.size());
    const DiskSet disks = disks_of(config);

    rep.all_visible = true;
    for (int i = 0; i < n && rep.all_visible; ++i)
        for (int j = i + 1; j < n && rep.all_visible; ++j)
            if (!visibility_oracle(i, j, disks, oracle_k)) rep.all_visible = false;

    rep.all_red = std::all_of(config.robots.begin(), config.robots.end(),
                              [](const Robot& r) { return r.light == Light::Red; });

    rep.strictly_convex = strictly_convex_positions(disks.centers);

    rep.min_separation = true;
    for (int i = 0; i < n && rep.min_separation; ++i)
        for (int j = i + 1; j < n && rep.min_separation; ++j)
            if (dist(disks.centers[i], disks.centers[j]) < kMinSeparation)
                rep.min_separation = false;
    return rep;
}

}  // namespace mvsim
