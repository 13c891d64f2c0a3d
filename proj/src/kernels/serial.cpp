#include <algorithm>
#include <exception>
#include <stdexcept>

#include "chord.hpp"
#include "flatcert/kernels.hpp"

namespace flatcert::kernels::serial {

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body) {
  for (std::size_t i = 0; i < count; ++i) body(i);
}

Eigen::MatrixXd evaluation_matrix(std::span<const Point> points, std::span<const Monomial> basis) {
  const auto rows = static_cast<Eigen::Index>(points.size());
  const auto cols = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto x = points[static_cast<std::size_t>(i)].coords();
    for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = basis[static_cast<std::size_t>(j)].eval(x);
  }
  return a;
}

std::vector<double> earring_distances(std::span<const Point> points) {
  std::vector<double> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = dist_to_earring(points[i]);
  return out;
}

std::vector<double> field_values(const ScalarField& field, std::span<const Point> points) {
  std::vector<double> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = field(points[i]);
  return out;
}

std::vector<Point> family_samples(const Family& family, double r, std::uint64_t seed,
                                  std::size_t count) {
  std::vector<Point> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_family_point(family, r, seed, i));
  return out;
}

double covering_radius(std::span<const Point> dirs, std::span<const Point> probes) {
  if (dirs.empty()) throw std::domain_error("covering_radius: empty direction set");
  double worst = 0.0;
  for (const Point& p : probes) worst = std::max(worst, detail::nearest_squared_chord(p, dirs));
  return detail::chord_to_angle(worst);
}

}  // namespace flatcert::kernels::serial
