#include "flatcert/arc_jet.hpp"

#include <stdexcept>

namespace flatcert {

ArcJet::ArcJet(std::vector<Point> derivatives, std::vector<double> error_estimates)
    : derivatives_(std::move(derivatives)), error_estimates_(std::move(error_estimates)) {
  if (derivatives_.empty()) throw std::domain_error("ArcJet: jet order must be >= 1");
  const std::size_t n = derivatives_.front().dim();
  if (n == 0) throw std::domain_error("ArcJet: empty derivative vector");
  for (const Point& d : derivatives_) require_dim(d, n, "ArcJet");
  if (!error_estimates_.empty() && error_estimates_.size() != derivatives_.size()) {
    throw std::domain_error("ArcJet: one error estimate per order expected");
  }
}

const Point& ArcJet::derivative(int k) const {
  if (k < 1 || k > order()) throw std::domain_error("ArcJet: derivative order out of range");
  return derivatives_[static_cast<std::size_t>(k - 1)];
}

std::optional<int> ArcJet::first_nonvanishing_order(double tol) const {
  for (int k = 1; k <= order(); ++k) {
    if (derivative(k).norm() > tol) return k;
  }
  return std::nullopt;
}

bool ArcJet::degenerate_tangent(double tol) const { return derivative(1).norm() <= tol; }

Point ArcJet::tangent_direction(double tol) const {
  const auto q = first_nonvanishing_order(tol);
  if (!q) throw std::domain_error("ArcJet: arc is constant to the available jet order");
  return derivative(*q).normalized();
}

}  // namespace flatcert
