#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flatcert/point.hpp"

namespace flatcert {

/// Truncated Taylor data of an arc γ with γ(0) = 0: derivative(k) = γ^{(k)}(0)
/// for k = 1..order().
class ArcJet {
 public:
  ArcJet() = default;
  explicit ArcJet(std::vector<Point> derivatives, std::vector<double> error_estimates = {});

  std::size_t dim() const { return derivatives_.front().dim(); }
  int order() const { return static_cast<int>(derivatives_.size()); }
  const Point& derivative(int k) const;
  const std::vector<Point>& derivatives() const { return derivatives_; }

  /// Per-order error estimates from numerical extraction; empty for exact jets.
  const std::vector<double>& error_estimates() const { return error_estimates_; }

  /// Smallest k with ‖γ^{(k)}(0)‖ > tol, if any.
  std::optional<int> first_nonvanishing_order(double tol = kJetZeroTolerance) const;
  bool degenerate_tangent(double tol = kJetZeroTolerance) const;
  /// d[q]/‖d[q]‖ for the first nonvanishing order q.
  Point tangent_direction(double tol = kJetZeroTolerance) const;

  static constexpr double kJetZeroTolerance = 1e-8;

 private:
  std::vector<Point> derivatives_;
  std::vector<double> error_estimates_;
};

}  // namespace flatcert
