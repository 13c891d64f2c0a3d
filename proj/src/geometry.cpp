#include "flatcert/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/erf.hpp>

#include "flatcert/kernels.hpp"
#include "flatcert/random.hpp"
#include "streams.hpp"

namespace flatcert {

namespace {

constexpr int kMaxSampleAttempts = 4096;
constexpr double kMaxFamilyIndex = 9007199254740992.0;  // 2^53

// Index bound for sampling members of a family of shrinking sets through 0:
// members with index >= 2/r sit entirely inside B(0, r).
double sampling_bound(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw std::domain_error("sampling radius must be positive");
  const double bound = std::ceil(4.0 / r);
  if (!(bound <= kMaxFamilyIndex)) {
    throw EmptySampleError("sampling radius too small: no representable family member fits");
  }
  return std::max(1.0, bound);
}

// Index in 1..bound with probability proportional to log(1 + 1/n) ≈ 1/n.
std::int64_t draw_index(SampleRng& rng, double bound) {
  const double n = std::floor(std::exp(rng.uniform() * std::log1p(bound)));
  return static_cast<std::int64_t>(std::clamp(n, 1.0, bound));
}

// Radical inverse of i in the given base.
double radical_inverse(std::uint64_t i, std::uint64_t base) {
  double inv = 1.0 / static_cast<double>(base);
  double f = inv;
  double v = 0.0;
  while (i > 0) {
    v += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return v;
}

constexpr std::uint64_t kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                     43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Point index + 1 of a Halton sequence in [0,1)^dim under a seeded shift mod 1.
std::vector<double> shifted_halton(std::size_t dim, std::uint64_t seed, std::uint64_t stream,
                                   std::uint64_t index) {
  if (dim > std::size(kPrimes)) throw std::domain_error("Halton sequence: dimension too large");
  SampleRng shift_rng(seed, stream, 0);
  std::vector<double> v(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const double u = radical_inverse(index + 1, kPrimes[j]) + shift_rng.uniform();
    v[j] = u - std::floor(u);
  }
  return v;
}

double gaussian_quantile(double u) {
  return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * std::clamp(u, 1e-12, 1.0 - 1e-12));
}

// Quasi-uniform direction with u1 > 0: the equal-area cylinder map on S^2,
// folded Gaussian quantiles of a Halton point above that.
Point hemisphere_direction(int dim, std::uint64_t seed, std::uint64_t index) {
  if (dim == 3) {
    const auto h = shifted_halton(2, seed, streams::kSecantShift, index);
    const double u1 = 1.0 - h[0];
    const double rho = std::sqrt(std::max(0.0, 1.0 - u1 * u1));
    const double phi = 2.0 * std::numbers::pi * h[1];
    return Point{u1, rho * std::cos(phi), rho * std::sin(phi)};
  }
  auto g = shifted_halton(static_cast<std::size_t>(dim), seed, streams::kSecantShift, index);
  for (double& v : g) v = gaussian_quantile(v);
  g[0] = std::max(std::abs(g[0]), 1e-12);
  return Point(std::move(g)).normalized();
}

Point sample_earring(const EarringFamily& fam, double r, SampleRng& rng) {
  const double bound = fam.max_index ? static_cast<double>(*fam.max_index) : sampling_bound(r);
  if (!(r > 0.0)) throw std::domain_error("sampling radius must be positive");
  if (bound < 1.0) throw std::domain_error("earring family: max_index must be >= 1");
  for (int attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
    const std::int64_t n = draw_index(rng, bound);
    const Point z = circle_point(n, rng.uniform(-std::numbers::pi, std::numbers::pi));
    const double nz = z.norm();
    if (nz > 0.0 && nz <= r) return z;
  }
  throw EmptySampleError("earring family: no circle point found in B(0, r)");
}

// Ray shooting: t·u meets S_k at t = 2u1/k, so k >= 2u1/r keeps the hit in
// B(0, r) and its direction is exactly u.
Point sample_spheres(const SphereFamily& fam, double r, std::uint64_t seed, std::uint64_t index,
                     SampleRng& rng) {
  const double bound = sampling_bound(r);
  const Point u = hemisphere_direction(fam.dim, seed, index);
  const double k_min = std::max(1.0, std::ceil(2.0 * u[0] / r));
  const double k_max = std::max(k_min, bound);
  const double k = k_min + static_cast<double>(draw_index(rng, k_max - k_min + 1.0)) - 1.0;
  const Point z = (2.0 * u[0] / k) * u;
  const double nz = z.norm();
  if (!(nz > 0.0 && nz <= r)) throw EmptySampleError("sphere family: no sphere point found in B(0, r)");
  return z;
}

Point sample_axis(const AxisFamily& fam, double r, SampleRng& rng) {
  if (!(r > 0.0)) throw std::domain_error("sampling radius must be positive");
  for (int attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
    const double s = rng.uniform(-r, r);
    if (s != 0.0) return s * Point::unit(static_cast<std::size_t>(fam.dim), static_cast<std::size_t>(fam.axis));
  }
  throw EmptySampleError("axis family: no nonzero point found");
}

}  // namespace

CircleSpec::CircleSpec(std::int64_t n) : index(n) {
  if (n <= 0) throw std::domain_error("circle index must be >= 1");
}

SphereFamily::SphereFamily(int d) : dim(d) {
  if (d < 3) throw std::domain_error("sphere family: dimension must be >= 3");
}

double SphereFamily::radius(std::int64_t k) const {
  if (k <= 0) throw std::domain_error("sphere index must be >= 1");
  return 1.0 / static_cast<double>(k);
}

Point SphereFamily::center(std::int64_t k) const {
  return radius(k) * Point::unit(static_cast<std::size_t>(dim), 0);
}

std::string family_name(const Family& family) {
  struct {
    std::string operator()(const EarringFamily&) const { return "earring"; }
    std::string operator()(const SphereFamily&) const { return "spheres"; }
    std::string operator()(const AxisFamily&) const { return "x-axis"; }
  } visitor;
  return std::visit(visitor, family);
}

int family_dim(const Family& family) {
  struct {
    int operator()(const EarringFamily&) const { return 2; }
    int operator()(const SphereFamily& s) const { return s.dim; }
    int operator()(const AxisFamily& a) const { return a.dim; }
  } visitor;
  return std::visit(visitor, family);
}

Point circle_point(std::int64_t n, double theta) {
  const CircleSpec c(n);
  if (!std::isfinite(theta)) throw std::domain_error("circle_point: non-finite angle");
  const double r = c.radius();
  return Point{r + r * std::cos(theta), r * std::sin(theta)};
}

Point sphere_point(const SphereFamily& spec, std::int64_t k, const Point& theta) {
  require_dim(theta, static_cast<std::size_t>(spec.dim), "sphere_point");
  if (!theta.is_unit()) throw std::domain_error("sphere_point: theta must be a unit vector");
  return spec.center(k) + spec.radius(k) * theta;
}

// |‖x − c_n‖ − 1/n| = |‖x‖² − 2x₁/n| / (‖x − c_n‖ + 1/n).
double dist_to_circle(const Point& x, double inv_n) {
  require_dim(x, 2, "dist_to_circle");
  const double r2 = x[0] * x[0] + x[1] * x[1];
  const double to_center = std::hypot(x[0] - inv_n, x[1]);
  const double denom = to_center + inv_n;
  if (denom == 0.0) return 0.0;
  return std::abs(r2 - 2.0 * x[0] * inv_n) / denom;
}

// h(n) = ‖x − c_n‖ − 1/n is nondecreasing in n (dh/dε <= 0 for ε = 1/n) with
// limit ‖x‖, so |h| is smallest next to its sign change at n* = 2x₁/‖x‖².
// For x₁ <= 0 there is no sign change and C_1 is nearest.
double dist_to_earring(const Point& x) {
  require_dim(x, 2, "dist_to_earring");
  const double r = x.norm();
  if (r == 0.0) return 0.0;
  double best = r;  // the origin
  auto consider = [&](double n) {
    if (n >= 1.0) best = std::min(best, dist_to_circle(x, 1.0 / n));
  };
  consider(1.0);
  if (x[0] > 0.0) {
    const double n_star = 2.0 * x[0] / (r * r);
    if (std::isfinite(n_star)) {
      const double lo = std::floor(n_star);
      if (lo < kMaxFamilyIndex) {
        for (double n = lo - 1.0; n <= lo + 2.0; n += 1.0) consider(n);
      } else {
        // Beyond 2^53 neighbouring doubles are the candidates.
        consider(lo);
        consider(std::nextafter(lo, 0.0));
        consider(std::nextafter(lo, HUGE_VAL));
      }
    }
  }
  return best;
}

std::vector<RayHit> ray_intersections(const Point& u, std::int64_t n_max) {
  require_dim(u, 2, "ray_intersections");
  if (!u.is_unit()) throw std::domain_error("ray_intersections: direction must be a unit vector");
  if (n_max < 1) throw std::domain_error("ray_intersections: n_max must be >= 1");
  std::vector<RayHit> hits;
  if (u[0] <= 0.0) return hits;
  hits.reserve(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    hits.push_back({n, 2.0 * u[0] / static_cast<double>(n)});
  }
  return hits;
}

Point sample_family_point(const Family& family, double r, std::uint64_t seed, std::uint64_t index) {
  SampleRng rng(seed, streams::kSecant, index);
  struct {
    double r;
    std::uint64_t seed;
    std::uint64_t index;
    SampleRng& rng;
    Point operator()(const EarringFamily& f) const { return sample_earring(f, r, rng); }
    Point operator()(const SphereFamily& f) const { return sample_spheres(f, r, seed, index, rng); }
    Point operator()(const AxisFamily& f) const { return sample_axis(f, r, rng); }
  } visitor{r, seed, index, rng};
  return std::visit(visitor, family);
}

DirectionSet secant_directions(const Family& family, double r, std::size_t count,
                               std::uint64_t seed) {
  if (count == 0) throw std::domain_error("secant_directions: count must be >= 1");
  std::vector<Point> pts = kernels::parallel::family_samples(family, r, seed, count);
  for (Point& p : pts) p = p.normalized();
  return DirectionSet(std::move(pts));
}

std::vector<Point> sphere_probes(int dim, std::size_t count, std::uint64_t seed) {
  if (dim < 1) throw std::domain_error("sphere_probes: dimension must be >= 1");
  if (count == 0) throw std::domain_error("sphere_probes: count must be >= 1");
  std::vector<Point> probes;
  probes.reserve(count);
  if (dim == 1) {
    for (std::size_t i = 0; i < count; ++i) probes.push_back(Point{i % 2 == 0 ? 1.0 : -1.0});
    return probes;
  }
  if (dim == 2) {
    for (std::size_t i = 0; i < count; ++i) {
      const double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(count);
      probes.push_back(Point{std::cos(a), std::sin(a)});
    }
    return probes;
  }
  for (std::size_t i = 0; i < count; ++i) {
    auto g = shifted_halton(static_cast<std::size_t>(dim), seed, streams::kProbeShift, i);
    for (double& v : g) v = gaussian_quantile(v);
    Point p(std::move(g));
    probes.push_back(p.norm() > 0.0 ? p.normalized() : Point::unit(static_cast<std::size_t>(dim), 0));
  }
  return probes;
}

double covering_radius(const DirectionSet& dirs, std::size_t probe_count, std::uint64_t seed) {
  if (dirs.empty()) throw std::domain_error("covering_radius: empty direction set");
  const auto probes = sphere_probes(static_cast<int>(dirs.dim()), probe_count, seed);
  return kernels::parallel::covering_radius(dirs.points(), probes);
}

double angular_distance(const Point& a, const Point& b) {
  const double cross2 = std::max(0.0, a.squared_norm() * b.squared_norm() - a.dot(b) * a.dot(b));
  return std::atan2(std::sqrt(cross2), a.dot(b));
}

DistanceMap earring_distance_map() {
  return {"earring", 2, [](const Point& x) { return dist_to_earring(x); }};
}

DistanceMap origin_distance_map(std::size_t dim) {
  return {"origin", dim, [dim](const Point& x) {
            require_dim(x, dim, "origin distance");
            return x.norm();
          }};
}

DistanceMap axis_distance_map(std::size_t dim) {
  if (dim < 2) throw std::domain_error("axis distance needs dimension >= 2");
  return {"x-axis", dim, [dim](const Point& x) {
            require_dim(x, dim, "axis distance");
            std::vector<double> rest(x.coords().begin() + 1, x.coords().end());
            return Point(std::move(rest)).norm();
          }};
}

DistanceMap distance_map_by_name(const std::string& name, std::size_t dim) {
  if (name == "earring") {
    if (dim != 2) throw std::domain_error("earring distance is two-dimensional");
    return earring_distance_map();
  }
  if (name == "origin") return origin_distance_map(dim);
  if (name == "x-axis") return axis_distance_map(dim);
  throw std::domain_error("unknown zero set '" + name + "' (expected earring|origin|x-axis)");
}

}  // namespace flatcert
