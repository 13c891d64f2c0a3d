#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

#include "flatcert/point.hpp"

namespace flatcert::kernels::detail {

// Squared chord length ‖a − b‖² between unit vectors; monotone in the angle.
inline double squared_chord(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline double nearest_squared_chord(const Point& probe, std::span<const Point> dirs) {
  double best = std::numeric_limits<double>::infinity();
  for (const Point& d : dirs) best = std::min(best, squared_chord(probe, d));
  return best;
}

inline double chord_to_angle(double squared_chord) {
  return 2.0 * std::asin(std::min(1.0, 0.5 * std::sqrt(squared_chord)));
}

}  // namespace flatcert::kernels::detail
