#include <omp.h>

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "chord.hpp"
#include "flatcert/kernels.hpp"

namespace flatcert::kernels {

int max_threads() { return omp_get_max_threads(); }

void set_threads(int n) { omp_set_num_threads(std::max(1, n)); }

namespace parallel {

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body) {
  const auto n = static_cast<std::ptrdiff_t>(count);
  std::ptrdiff_t first_failure = n;
  std::exception_ptr failure;

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(flatcert_for_each_index)
      if (i < first_failure) {
        first_failure = i;
        failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
}

Eigen::MatrixXd evaluation_matrix(std::span<const Point> points, std::span<const Monomial> basis) {
  const auto rows = static_cast<Eigen::Index>(points.size());
  const auto cols = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd a(rows, cols);
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto x = points[static_cast<std::size_t>(i)].coords();
    for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = basis[static_cast<std::size_t>(j)].eval(x);
  }
  return a;
}

std::vector<double> earring_distances(std::span<const Point> points) {
  std::vector<double> out(points.size());
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = dist_to_earring(points[i]);
  return out;
}

std::vector<double> field_values(const ScalarField& field, std::span<const Point> points) {
  std::vector<double> out(points.size());
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = field(points[i]);
  return out;
}

std::vector<Point> family_samples(const Family& family, double r, std::uint64_t seed,
                                  std::size_t count) {
  std::vector<Point> out(count);
  for_each_index(count, [&](std::size_t i) { out[i] = sample_family_point(family, r, seed, i); });
  return out;
}

double covering_radius(std::span<const Point> dirs, std::span<const Point> probes) {
  if (dirs.empty()) throw std::domain_error("covering_radius: empty direction set");
  double worst = 0.0;
  const auto n = static_cast<std::ptrdiff_t>(probes.size());
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    worst = std::max(worst, detail::nearest_squared_chord(probes[i], dirs));
  }
  return detail::chord_to_angle(worst);
}

}  // namespace parallel
}  // namespace flatcert::kernels
