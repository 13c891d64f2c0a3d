#pragma once

// Data-parallel inner loops. Every kernel exists twice: `serial` is the
// reference used by tests and benchmarks, `parallel` is the OpenMP version
// the library calls. Both write results by index, so outputs are identical
// for any thread count.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "flatcert/geometry.hpp"
#include "flatcert/polynomials.hpp"
#include "flatcert/witness.hpp"

namespace flatcert::kernels {

int max_threads();
void set_threads(int n);

namespace serial {

/// body(i) for every i < count. If bodies throw, the exception of the lowest
/// failing index is rethrown after the loop.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body);

/// Rows: points; columns: monomials.
Eigen::MatrixXd evaluation_matrix(std::span<const Point> points, std::span<const Monomial> basis);

std::vector<double> earring_distances(std::span<const Point> points);
std::vector<double> field_values(const ScalarField& field, std::span<const Point> points);
std::vector<Point> family_samples(const Family& family, double r, std::uint64_t seed,
                                  std::size_t count);

/// max over probes of the min angle to `dirs`.
double covering_radius(std::span<const Point> dirs, std::span<const Point> probes);

}  // namespace serial

namespace parallel {

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body);

Eigen::MatrixXd evaluation_matrix(std::span<const Point> points, std::span<const Monomial> basis);

std::vector<double> earring_distances(std::span<const Point> points);
std::vector<double> field_values(const ScalarField& field, std::span<const Point> points);
std::vector<Point> family_samples(const Family& family, double r, std::uint64_t seed,
                                  std::size_t count);

double covering_radius(std::span<const Point> dirs, std::span<const Point> probes);

}  // namespace parallel

}  // namespace flatcert::kernels
