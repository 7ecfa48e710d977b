#pragma once

#include <string>

#include "mvsim/trace_io.hpp"

namespace mvsim {

// SVG of one round: unit-diameter circles colored by light, dashed hull
// outline, viewport fixed to the whole run's bounding box.
std::string render_round_svg(const ParsedTrace& trace, int round);

// Writes frame_<round>.svg per round into out_dir (created if needed);
// returns the number of files written. Throws std::runtime_error when the
// directory cannot be created or written.
int render_trace_svgs(const ParsedTrace& trace, const std::string& out_dir);

}  // namespace mvsim
