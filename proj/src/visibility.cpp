#include "mvsim/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mvsim {

namespace {

constexpr double kBlock = DiskSet::radius + kEpsGeom;

double dist2_point_segment(const Point& p, const Point& a, const Point& b) {
    const Point ab = b - a;
    const double len2 = norm2(ab);
    double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return norm2(p - (a + ab * t));
}

// Occluders that could intersect any circle-to-circle segment: those within
// one diameter of the center segment (segment lies in the 0.5-stadium, plus
// 0.5 blocking radius). Sorted nearest-first so the dominant blocker is
// tested early.
std::vector<int> relevant_occluders(int i, int j, const DiskSet& d) {
    std::vector<std::pair<double, int>> near;
    const int n = static_cast<int>(d.centers.size());
    for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double dk = dist_point_segment(d.centers[k], d.centers[i], d.centers[j]);
        if (dk <= 1.0 + 4.0 * kEpsGeom) near.emplace_back(dk, k);
    }
    std::sort(near.begin(), near.end());
    std::vector<int> out;
    out.reserve(near.size());
    for (auto& [dk, k] : near) out.push_back(k);
    return out;
}

// Candidate witness points on the bounding circle of `self`: k_samples
// deterministic uniform angles (coarse-to-fine via bit reversal when K is a
// power of two, so early exits hit a spread-out subset first) plus, per
// occluder, the four touch points of the common tangents with that disk.
std::vector<Point> candidate_points(const Point& self, const DiskSet& d, int k_samples,
                                    const std::vector<int>& occluders) {
    std::vector<double> angles;
    angles.reserve(static_cast<size_t>(k_samples) + 4 * occluders.size());
    for (int k : occluders) {
        const Point v = d.centers[k] - self;
        const double dk = norm(v);
        if (dk <= 0.0) continue;
        const double base = std::atan2(v.y, v.x);
        const double open = std::acos(std::clamp(1.0 / dk, -1.0, 1.0));
        angles.push_back(base + open);
        angles.push_back(base - open);
        angles.push_back(base + M_PI / 2.0);
        angles.push_back(base - M_PI / 2.0);
    }
    const bool pow2 = k_samples > 0 && (k_samples & (k_samples - 1)) == 0;
    int bits = 0;
    while ((1 << bits) < k_samples) ++bits;
    for (int t = 0; t < k_samples; ++t) {
        int idx = t;
        if (pow2) {
            idx = 0;
            for (int b = 0; b < bits; ++b)
                if (t & (1 << b)) idx |= 1 << (bits - 1 - b);
        }
        angles.push_back(2.0 * M_PI * idx / k_samples);
    }
    std::vector<Point> pts;
    pts.reserve(angles.size());
    for (double a : angles)
        pts.push_back(self + Point{std::cos(a), std::sin(a)} * DiskSet::radius);
    return pts;
}

bool witness_search(int i, int j, const DiskSet& d, int k_samples) {
    const std::vector<int> occ = relevant_occluders(i, j, d);
    if (occ.empty()) return true;  // every candidate segment is clear

    const std::vector<Point> pi = candidate_points(d.centers[i], d, k_samples, occ);
    const std::vector<Point> pj = candidate_points(d.centers[j], d, k_samples, occ);

    // Endpoints buried inside an inflated occluder can never anchor a witness.
    auto endpoint_ok = [&](const Point& p) {
        for (int k : occ)
            if (dist(p, d.centers[k]) <= kBlock) return false;
        return true;
    };
    std::vector<char> ok_j(pj.size());
    bool any_j = false;
    for (size_t q = 0; q < pj.size(); ++q) {
        ok_j[q] = endpoint_ok(pj[q]);
        any_j = any_j || ok_j[q];
    }
    if (!any_j) return false;

    const double block2 = kBlock * kBlock;
    std::vector<char> clear(pj.size());
    for (const Point& p : pi) {
        if (!endpoint_ok(p)) continue;
        clear = ok_j;
        size_t remaining = 0;
        for (char c : clear) remaining += c;
        for (int k : occ) {
            const Point& ck = d.centers[k];
            for (size_t q = 0; q < pj.size(); ++q) {
                if (!clear[q]) continue;
                if (dist2_point_segment(ck, p, pj[q]) <= block2) {
                    clear[q] = 0;
                    --remaining;
                }
            }
            if (remaining == 0) break;
        }
        if (remaining > 0) return true;
    }
    return false;
}

void check_pair(int i, int j, const DiskSet& d) {
    const int n = static_cast<int>(d.centers.size());
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw std::invalid_argument("visibility: bad robot indices");
}

}  // namespace

ClearTest fast_clear(int i, int j, const DiskSet& disks) {
    check_pair(i, j, disks);
    const int n = static_cast<int>(disks.centers.size());
    for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (dist_point_segment(disks.centers[k], disks.centers[i], disks.centers[j]) <= kBlock)
            return ClearTest::Unknown;
    }
    return ClearTest::Visible;
}

bool visible(int i, int j, const DiskSet& disks, int k_samples) {
    check_pair(i, j, disks);
    if (k_samples < 8) throw std::invalid_argument("visible: k_samples must be >= 8");
    if (fast_clear(i, j, disks) == ClearTest::Visible) return true;
    return witness_search(i, j, disks, k_samples);
}

std::vector<int> visible_set(int i, const DiskSet& disks, int k_samples) {
    std::vector<int> out;
    const int n = static_cast<int>(disks.centers.size());
    for (int j = 0; j < n; ++j)
        if (j != i && visible(i, j, disks, k_samples)) out.push_back(j);
    return out;
}

bool visibility_oracle(int i, int j, const DiskSet& disks, int k_samples) {
    check_pair(i, j, disks);
    return witness_search(i, j, disks, k_samples);
}

std::vector<std::vector<bool>> visibility_matrix(const DiskSet& disks, int k_samples) {
    const int n = static_cast<int>(disks.centers.size());
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const bool v = visible(i, j, disks, k_samples);
            m[i][j] = v;
            m[j][i] = v;
        }
    return m;
}

}  // namespace mvsim
