#include "ineqlab/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace ineqlab {

StyleDraw draw_style(Rng& rng) {
  const double u = rng.uniform();
  if (u < 0.4) return {DrawStyle::uniform, false};
  if (u < 0.6) return {DrawStyle::heavy, false};
  if (u < 0.8) return {DrawStyle::sparse, false};
  return {DrawStyle::uniform, true};
}

std::vector<double> draw_coords(Rng& rng, std::size_t n, DrawStyle style) {
  std::vector<double> v(n, 0.0);
  switch (style) {
    case DrawStyle::uniform:
      for (auto& c : v) c = rng.uniform(-1.0, 1.0);
      break;
    case DrawStyle::heavy:
      for (auto& c : v) {
        const double num = rng.uniform(-1.0, 1.0);
        const double den = 1.0 - rng.uniform();  // (0, 1]
        c = std::clamp(num / den, -10.0, 10.0);
      }
      break;
    case DrawStyle::sparse: {
      const bool unit = rng.uniform() < 0.5;
      bool any = false;
      for (auto& c : v) {
        if (rng.uniform() < 0.8) continue;
        c = unit ? (rng.uniform() < 0.5 ? -1.0 : 1.0) : rng.uniform(-1.0, 1.0);
        any = true;
      }
      if (!any && n > 0) v[rng.below(n)] = unit ? 1.0 : rng.uniform(-1.0, 1.0);
      break;
    }
  }
  return v;
}

std::vector<double> draw_cone_coords(Rng& rng, std::size_t n, DrawStyle style) {
  auto v = draw_coords(rng, n, style);
  for (auto& c : v) c = std::abs(c);
  return v;
}

}  // namespace ineqlab
