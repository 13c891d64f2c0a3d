#pragma once

// Parametrizations, exact distances and direction sets for the Hawaiian
// earring H = ∪_{n>=1} C_n, C_n = {(x − 1/n)² + y² = 1/n²}, for the
// small-sphere families in R^d, and for straight-line families.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "flatcert/point.hpp"

namespace flatcert {

/// The circle C_n: center (1/n, 0), radius 1/n.
struct CircleSpec {
  std::int64_t index;

  explicit CircleSpec(std::int64_t n);
  double radius() const { return 1.0 / static_cast<double>(index); }
  Point center() const { return Point{radius(), 0.0}; }
};

/// The earring as a sampling family. Without an explicit bound, secant
/// sampling uses circles 1..ceil(4/r) (every C_n with n >= 2/r lies inside
/// B(0, r)).
struct EarringFamily {
  std::optional<std::int64_t> max_index;
};

/// Spheres S_k = {‖x − e1/k‖ = 1/k} in R^dim, dim >= 3.
struct SphereFamily {
  int dim = 3;

  explicit SphereFamily(int d = 3);
  double radius(std::int64_t k) const;
  Point center(std::int64_t k) const;
};

/// The coordinate line {s·e_axis} in R^dim. Used as a negative control:
/// a line determines nothing beyond its own direction.
struct AxisFamily {
  int dim = 2;
  int axis = 0;
};

using Family = std::variant<EarringFamily, SphereFamily, AxisFamily>;

std::string family_name(const Family& family);
int family_dim(const Family& family);

Point circle_point(std::int64_t n, double theta);
Point sphere_point(const SphereFamily& spec, std::int64_t k, const Point& theta);

/// Exact Euclidean distance from x to the closure of H (which is H itself).
double dist_to_earring(const Point& x);
/// Distance from x to the single circle C_n, written to avoid cancellation
/// when x is close to C_n.
double dist_to_circle(const Point& x, double inv_n);

struct RayHit {
  std::int64_t index;
  double t;
};

/// Positive parameters t with t·u ∈ C_n for n = 1..n_max; empty when u1 <= 0.
std::vector<RayHit> ray_intersections(const Point& u, std::int64_t n_max);

/// One seeded point z of the family with 0 < ‖z‖ <= r. Deterministic in
/// (seed, index).
Point sample_family_point(const Family& family, double r, std::uint64_t seed,
                          std::uint64_t index);

/// Normalized family points z/‖z‖ near the origin.
DirectionSet secant_directions(const Family& family, double r, std::size_t count,
                               std::uint64_t seed);

/// Quasi-uniform probes on S^{dim-1}: equally spaced angles on S^1, a
/// shifted Halton sequence pushed through the Gaussian quantile otherwise.
std::vector<Point> sphere_probes(int dim, std::size_t count, std::uint64_t seed);

/// Largest angular distance from a probe to its nearest direction.
double covering_radius(const DirectionSet& dirs, std::size_t probe_count,
                       std::uint64_t seed);

double angular_distance(const Point& a, const Point& b);

/// A named distance-to-zero-set function.
struct DistanceMap {
  std::string name;
  std::size_t dim = 2;
  std::function<double(const Point&)> eval;

  double operator()(const Point& x) const { return eval(x); }
};

DistanceMap earring_distance_map();
DistanceMap origin_distance_map(std::size_t dim = 2);
/// Distance to the x1-axis.
DistanceMap axis_distance_map(std::size_t dim = 2);
/// Lookup for the CLI names: earring | origin | x-axis.
DistanceMap distance_map_by_name(const std::string& name, std::size_t dim = 2);

}  // namespace flatcert
