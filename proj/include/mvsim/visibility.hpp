#pragma once

#include <vector>

#include "mvsim/geometry.hpp"

namespace mvsim {

// Unit-diameter robots as opaque disks. Blocking is by closed disks: a sight
// segment survives only if its clearance to every other center strictly
// exceeds the radius (plus kEpsGeom).
struct DiskSet {
    std::vector<Point> centers;
    static constexpr double radius = 0.5;
};

enum class ClearTest { Visible, Unknown };

// Sufficient test: Visible when the center-to-center segment itself clears
// every other disk. Unknown means a full candidate search is needed.
ClearTest fast_clear(int i, int j, const DiskSet& disks);

// True when some segment between the two bounding circles avoids every other
// robot's closed disk. Candidates are k_samples uniform circle points per
// robot plus the common-tangent touch points against each nearby occluder;
// every reported witness is verified directly, so a true result is sound.
bool visible(int i, int j, const DiskSet& disks, int k_samples = 64);

std::vector<int> visible_set(int i, const DiskSet& disks, int k_samples = 64);

// Dense-sampling referee used by tests and the final-configuration check:
// same candidate construction as visible() at a large K and no fast path.
bool visibility_oracle(int i, int j, const DiskSet& disks, int k_samples = 4096);

// Pairwise matrix (symmetric, diagonal false), each pair evaluated once.
std::vector<std::vector<bool>> visibility_matrix(const DiskSet& disks, int k_samples = 64);

}  // namespace mvsim
