#pragma once

#include <vector>

#include "ineqlab/rng.hpp"

namespace ineqlab {

enum class DrawStyle { uniform, heavy, sparse };

/// Uniform on [−1, 1] (40%), heavy-tailed (20%) or sparse (20%); the
/// remaining 20% is reported as `near_degenerate` for callers that build
/// near-collinear / near-equal configurations, and as uniform otherwise.
struct StyleDraw {
  DrawStyle style = DrawStyle::uniform;
  bool near_degenerate = false;
};
StyleDraw draw_style(Rng& rng);

/// n coordinates in the given style:
///  uniform – i.i.d. U[−1, 1];
///  heavy   – ratio of uniforms U[−1,1]/U(0,1], clipped to [−10, 10];
///  sparse  – 80% zeros, nonzeros either U[−1, 1] or ±1.
std::vector<double> draw_coords(Rng& rng, std::size_t n, DrawStyle style);

/// Same, but |·| applied (positive-cone operands).
std::vector<double> draw_cone_coords(Rng& rng, std::size_t n, DrawStyle style);

}  // namespace ineqlab
