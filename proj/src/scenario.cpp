#include "mvsim/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace mvsim {

namespace {

constexpr const char* kScenarioHeader = "mvsim-scenario 1";

double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string frame_policy_name(FramePolicy p) {
    switch (p) {
        case FramePolicy::Aligned: return "aligned";
        case FramePolicy::Rotated: return "rotated";
        case FramePolicy::RotatedReflected: return "rotated-reflected";
    }
    return "rotated";
}

FramePolicy frame_policy_from_name(const std::string& name) {
    if (name == "aligned") return FramePolicy::Aligned;
    if (name == "rotated") return FramePolicy::Rotated;
    if (name == "rotated-reflected") return FramePolicy::RotatedReflected;
    throw ParseError("unknown frame policy: " + name);
}

Scenario generate_scenario(int n, std::uint64_t seed, double spread, bool collinear) {
    if (n < 1) throw std::invalid_argument("generate: n must be >= 1");
    if (spread < std::sqrt(static_cast<double>(n)))
        throw std::invalid_argument("generate: spread must be >= sqrt(n)");

    std::mt19937_64 rng(seed);
    Scenario sc;
    sc.spread = spread;
    sc.params.seed = seed;
    sc.params.max_rounds = default_max_rounds(n);

    if (collinear) {
        double x = 0.0;
        for (int i = 0; i < n; ++i) {
            sc.positions.push_back({x, 0.0});
            x += 1.0 + 1e-6 + 0.2 * unit_draw(rng);
        }
        return sc;
    }

    long attempts = 0;
    while (static_cast<int>(sc.positions.size()) < n) {
        if (++attempts > 1000000)
            throw std::runtime_error("generate: sampling infeasible for given n and spread");
        const Point p{unit_draw(rng) * spread, unit_draw(rng) * spread};
        bool ok = true;
        for (const Point& q : sc.positions)
            if (dist(p, q) < 1.0 + 1e-6) {
                ok = false;
                break;
            }
        if (ok) sc.positions.push_back(p);
    }
    return sc;
}

std::string scenario_to_text(const Scenario& sc) {
    std::ostringstream out;
    out << kScenarioHeader << '\n';
    out << "n " << sc.positions.size() << '\n';
    out << "seed " << sc.params.seed << '\n';
    out << "frames " << frame_policy_name(sc.params.policy) << '\n';
    out << "predict " << (sc.params.predict ? 1 : 0) << '\n';
    out << "k " << sc.params.k_samples << '\n';
    out << "max_rounds " << sc.params.max_rounds << '\n';
    out << "points" << '\n';
    for (const Point& p : sc.positions)
        out << format_double(p.x) << ' ' << format_double(p.y) << '\n';
    return out.str();
}

Scenario scenario_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kScenarioHeader)
        throw ParseError("scenario: missing or unsupported header");

    Scenario sc;
    long n = -1;
    while (std::getline(in, line)) {
        if (line == "points") break;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "n") ls >> n;
        else if (key == "seed") ls >> sc.params.seed;
        else if (key == "frames") {
            std::string v;
            ls >> v;
            sc.params.policy = frame_policy_from_name(v);
        } else if (key == "predict") {
            int v = 0;
            ls >> v;
            sc.params.predict = v != 0;
        } else if (key == "k") ls >> sc.params.k_samples;
        else if (key == "max_rounds") ls >> sc.params.max_rounds;
        else throw ParseError("scenario: unknown key '" + key + "'");
        if (!ls) throw ParseError("scenario: malformed line '" + line + "'");
    }
    if (n < 1) throw ParseError("scenario: n missing or invalid");

    for (long i = 0; i < n; ++i) {
        if (!std::getline(in, line)) throw ParseError("scenario: fewer points than n");
        std::istringstream ls(line);
        Point p;
        ls >> p.x >> p.y;
        if (!ls) throw ParseError("scenario: malformed point '" + line + "'");
        if (!is_finite(p)) throw ParseError("scenario: non-finite point");
        sc.positions.push_back(p);
    }
    while (std::getline(in, line))
        if (!line.empty()) throw ParseError("scenario: trailing content");

    for (size_t i = 0; i < sc.positions.size(); ++i)
        for (size_t j = i + 1; j < sc.positions.size(); ++j)
            if (dist(sc.positions[i], sc.positions[j]) < 1.0 - 1e-9)
                throw ParseError("scenario: robots closer than one diameter");
    if (sc.params.k_samples < 8) throw ParseError("scenario: k must be >= 8");
    return sc;
}

}  // namespace mvsim
