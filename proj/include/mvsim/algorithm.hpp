#pragma once

#include <vector>

#include "mvsim/model.hpp"

namespace mvsim {

enum class Role { Corner, Side, Interior, LineCase, Alone };

enum class PeerSide { None, Clockwise, Counterclockwise };

struct ComputeOptions {
    // Advance red hull robots by their expansion move before computing side
    // and interior targets, so destinations land relative to the hull as it
    // will be after this round's simultaneous moves.
    bool predict = true;
};

// Opening angles of the wedge outside a hull edge in which a robot can land
// and immediately become a corner while the edge endpoints stay corners.
// alpha/beta are 180 minus the hull angles at the two endpoints.
struct SafeZoneParams {
    double alpha_deg = 0.0;
    double beta_deg = 0.0;
    double delta_deg = 0.0;  // min(alpha, beta) / 4, in (0, 45]
};

SafeZoneParams safe_zone_params(double alpha_deg, double beta_deg);

// A hull edge an interior robot may cross: between consecutive red hull
// vertices, at least 3 long, with this robot (possibly tied with one peer)
// the closest candidate.
struct EligibleEdge {
    Point a;  // endpoint on the counterclockwise side of the observer
    Point b;  // endpoint on the clockwise side
    Point foot;  // perpendicular projection of the observer onto the edge line
    PeerSide peer_side = PeerSide::None;
};

// Local role of the observer within its own view. Alone when nothing else is
// visible; LineCase when the whole view is collinear.
Role classify(const Snapshot& s);

// One Compute step: dispatches to the line special cases or to the
// corner/side/interior rules by role. Pure function of the snapshot.
Decision compute(const Snapshot& s, const ComputeOptions& opts = {});

Decision corner_step(const Snapshot& s);
Decision side_step(const Snapshot& s, const ComputeOptions& opts = {});
Decision interior_step(const Snapshot& s, const ComputeOptions& opts = {});

std::vector<EligibleEdge> eligible_edges(const Snapshot& s);

// True when the swept corridor from -> to keeps every other robot's center at
// distance >= 1 - 1e-9 (two unit disks never overlap along the motion).
bool corridor_clear(const Snapshot& s, const Point& from, const Point& to);

// Every red vertex of the local hull advanced by its expansion move; robots
// whose bisector cannot be derived from the snapshot stay in place. Entry
// order is preserved.
Snapshot predict_corners(const Snapshot& s);

}  // namespace mvsim
