#include "mvsim/render.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mvsim {

namespace {

struct Box {
    double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
};

Box bounding_box(const ParsedTrace& trace) {
    Box b{1e300, 1e300, -1e300, -1e300};
    for (const ParsedRound& r : trace.rounds)
        for (const ParsedRobot& p : r.robots) {
            b.min_x = std::min(b.min_x, p.pos.x);
            b.min_y = std::min(b.min_y, p.pos.y);
            b.max_x = std::max(b.max_x, p.pos.x);
            b.max_y = std::max(b.max_y, p.pos.y);
        }
    b.min_x -= 1.0;
    b.min_y -= 1.0;
    b.max_x += 1.0;
    b.max_y += 1.0;
    return b;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

std::string render_round_svg(const ParsedTrace& trace, int round) {
    if (round < 0 || round >= static_cast<int>(trace.rounds.size()))
        throw std::invalid_argument("render: round out of range");
    const Box box = bounding_box(trace);
    const ParsedRound& r = trace.rounds[round];

    // SVG y grows downward; flip so the plane reads the usual way up.
    auto sy = [&](double y) { return box.max_y - (y - box.min_y); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(box.min_x) << ' '
       << num(box.min_y) << ' ' << num(box.max_x - box.min_x) << ' ' << num(box.max_y - box.min_y)
       << "\">\n";

    std::vector<Point> pts;
    for (const ParsedRobot& p : r.robots) pts.push_back(p.pos);
    if (pts.size() >= 2) {
        const HullView hv = convex_hull(pts);
        os << "<polygon points=\"";
        for (int idx : hv.vertices) os << num(pts[idx].x) << ',' << num(sy(pts[idx].y)) << ' ';
        os << "\" fill=\"none\" stroke=\"#555\" stroke-width=\"0.05\" "
              "stroke-dasharray=\"0.3,0.2\"/>\n";
    }
    for (const ParsedRobot& p : r.robots) {
        const bool red = p.light && *p.light == Light::Red;
        os << "<circle cx=\"" << num(p.pos.x) << "\" cy=\"" << num(sy(p.pos.y))
           << "\" r=\"0.5\" fill=\"" << (red ? "#d32f2f" : "#9e9e9e")
           << "\" stroke=\"#222\" stroke-width=\"0.04\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

int render_trace_svgs(const ParsedTrace& trace, const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("render: cannot create directory " + out_dir);
    int written = 0;
    for (int r = 0; r < static_cast<int>(trace.rounds.size()); ++r) {
        char name[32];
        std::snprintf(name, sizeof name, "frame_%04d.svg", r);
        std::ofstream out(fs::path(out_dir) / name);
        if (!out) throw std::runtime_error("render: cannot write into " + out_dir);
        out << render_round_svg(trace, r);
        ++written;
    }
    return written;
}

}  // namespace mvsim
