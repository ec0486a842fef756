#include "magic/optimize.hpp"

#include <cmath>

namespace magic {

LineSearchResult line_search(const Objective& objective, const Vector& point, const Vector& direction,
                             const LineSearchConfig& cfg, std::optional<double> value_at_point) {
  LineSearchResult result{0.0, point, value_at_point ? *value_at_point : objective(point)};
  if (!std::isfinite(result.value)) return result;

  double step = cfg.initial_step;
  Vector trial(point.size());
  for (int m = 0; m <= cfg.max_backtracks; ++m, step *= cfg.shrink) {
    trial = (point + step * direction).cwiseMax(0.0);
    const double expected = direction.dot(trial - point);
    if (!(expected > 0.0)) {
      // Projection leaves the point in place (or the direction is zero); no
      // smaller step can do better.
      if ((trial - point).isZero(0.0)) break;
      continue;
    }
    const double value = objective(trial);
    if (std::isfinite(value) && value - result.value >= cfg.armijo * expected) {
      result.step = step;
      result.point = trial;
      result.value = value;
      return result;
    }
  }
  return result;
}

double line_search_step(const Objective& objective, const Vector& point, const Vector& direction,
                        const LineSearchConfig& cfg) {
  return line_search(objective, point, direction, cfg).step;
}

}  // namespace magic
