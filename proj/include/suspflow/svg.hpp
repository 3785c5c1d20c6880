#pragma once

#include <string>
#include <vector>

#include "suspflow/torus_geom.hpp"
#include "suspflow/torus_point.hpp"

namespace suspflow::cli {

// Deterministic SVG figure: unit square, the section parallelogram with
// labeled sides r0, r1, s0, s1 and vertices O, M, N, and the formula
// fixed points as dots. Rational coordinates are scaled exactly to a
// fixed canvas; the degenerate M = N case is flagged in the <desc>.
std::string emit_parallelogram_svg(const torus_geom::ParallelogramData& p,
                                   const std::vector<TorusPointQ>& fixed_points);

}  // namespace suspflow::cli
