#include "flatcert/witness.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "flatcert/kernels.hpp"
#include "flatcert/random.hpp"
#include "flatcert/stencil.hpp"
#include "streams.hpp"

namespace flatcert {

namespace {

constexpr double kOriginCutoff = 1e-300;  // r² below this evaluates as 0
const SmoothStep kProfileStep(0.5, 1.0);

double smooth_kernel(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

// sin(πu) with the argument reduced first, so integers give exact zeros.
double sin_pi(double u) {
  const double k = std::nearbyint(u);
  const double s = std::sin(std::numbers::pi * (u - k));
  return std::fmod(k, 2.0) == 0.0 ? s : -s;
}

}  // namespace

const char* to_string(ZeroSetKind kind) {
  switch (kind) {
    case ZeroSetKind::earring: return "earring";
    case ZeroSetKind::point: return "point";
    case ZeroSetKind::hyperplane: return "hyperplane";
    case ZeroSetKind::custom: return "custom";
  }
  return "custom";
}

ScalarField::ScalarField(std::string name, std::size_t dim, ZeroSetKind zero_set, Evaluator value,
                         Evaluator log_abs)
    : name_(std::move(name)), dim_(dim), zero_set_(zero_set), value_(std::move(value)),
      log_abs_(std::move(log_abs)) {
  if (dim_ == 0) throw std::domain_error("ScalarField: dimension must be >= 1");
  if (!value_) throw std::domain_error("ScalarField: missing evaluator");
}

double ScalarField::operator()(const Point& x) const {
  require_dim(x, dim_, name_.c_str());
  return value_(x);
}

double ScalarField::log_abs(const Point& x) const {
  require_dim(x, dim_, name_.c_str());
  if (log_abs_) return log_abs_(x);
  return std::log(std::abs(value_(x)));
}

SmoothStep::SmoothStep(double a, double b) : a_(a), b_(b) {
  if (!(a < b)) throw std::domain_error("SmoothStep: need a < b");
}

double SmoothStep::operator()(double u) const {
  if (u <= a_) return 0.0;
  if (u >= b_) return 1.0;
  const double left = smooth_kernel(u - a_);
  return left / (left + smooth_kernel(b_ - u));
}

double earring_profile(double u) {
  const double h = kProfileStep(u);
  if (h == 0.0) return 1.0;
  const double s = sin_pi(u);
  if (h == 1.0) return s * s;
  return h * s * s + (1.0 - h);
}

ScalarField earring_witness() {
  auto value = [](const Point& x) {
    const double r2 = x.squared_norm();
    if (r2 < kOriginCutoff) return 0.0;
    return std::exp(-1.0 / r2) * earring_profile(2.0 * x[0] / r2);
  };
  auto log_abs = [](const Point& x) {
    const double r2 = x.squared_norm();
    if (r2 < kOriginCutoff) return -std::numeric_limits<double>::infinity();
    return -1.0 / r2 + std::log(std::abs(earring_profile(2.0 * x[0] / r2)));
  };
  return ScalarField("earring", 2, ZeroSetKind::earring, value, log_abs);
}

ScalarField square_norm_field(std::size_t dim) {
  return ScalarField(
      "sq", dim, ZeroSetKind::point, [](const Point& x) { return x.squared_norm(); },
      [](const Point& x) { return 2.0 * std::log(x.norm()); });
}

ScalarField axis_field(std::size_t dim) {
  if (dim < 2) throw std::domain_error("axis field needs dimension >= 2");
  return ScalarField(
      "axis", dim, ZeroSetKind::hyperplane, [](const Point& x) { return x[1]; },
      [](const Point& x) { return std::log(std::abs(x[1])); });
}

ScalarField flat_radial_field(std::size_t dim) {
  auto value = [](const Point& x) {
    const double r2 = x.squared_norm();
    return r2 < kOriginCutoff ? 0.0 : std::exp(-1.0 / r2);
  };
  auto log_abs = [](const Point& x) {
    const double r2 = x.squared_norm();
    return r2 < kOriginCutoff ? -std::numeric_limits<double>::infinity() : -1.0 / r2;
  };
  return ScalarField("flat-radial", dim, ZeroSetKind::point, value, log_abs);
}

std::vector<ScalarField> control_fields(std::size_t dim) {
  return {square_norm_field(dim), axis_field(dim), flat_radial_field(dim)};
}

ScalarField field_by_name(const std::string& name, std::size_t dim) {
  if (name == "earring") {
    if (dim != 2) throw std::domain_error("the earring witness is two-dimensional");
    return earring_witness();
  }
  if (name == "sq") return square_norm_field(dim);
  if (name == "axis") return axis_field(dim);
  if (name == "flat-radial") return flat_radial_field(dim);
  throw std::domain_error("unknown field '" + name + "' (expected earring|sq|axis|flat-radial)");
}

double fd_derivative(const ScalarField& field, std::span<const int> alpha, double h) {
  if (alpha.size() != field.dim()) throw std::domain_error("fd_derivative: multi-index length mismatch");
  if (!(h > 0.0)) throw std::domain_error("fd_derivative: step must be positive");
  int total = 0;
  std::vector<std::span<const double>> stencils;
  for (int a : alpha) {
    if (a < 0) throw std::domain_error("fd_derivative: negative order");
    total += a;
    if (total > kMaxStencilOrder) throw std::domain_error("fd_derivative: |alpha| beyond the stencil table");
    stencils.push_back(central_stencil(a));
  }

  // Odometer over the tensor grid of stencil offsets.
  const std::size_t dim = alpha.size();
  std::vector<std::size_t> idx(dim, 0);
  double sum = 0.0;
  for (;;) {
    double w = 1.0;
    std::vector<double> x(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      w *= stencils[i][idx[i]];
      const auto p = static_cast<double>(stencils[i].size() / 2);
      x[i] = (static_cast<double>(idx[i]) - p) * h;
    }
    if (w != 0.0) sum += w * field(Point(std::move(x)));
    std::size_t i = 0;
    while (i < dim && ++idx[i] == stencils[i].size()) idx[i++] = 0;
    if (i == dim) break;
  }
  return sum / std::pow(h, total);
}

Point sample_shell(std::size_t dim, double r1, double r2, std::uint64_t seed, std::uint64_t stream,
                   std::uint64_t index) {
  SampleRng rng(seed, stream, index);
  std::vector<double> g(dim);
  double n2 = 0.0;
  while (n2 == 0.0) {
    n2 = 0.0;
    for (double& v : g) {
      v = rng.normal();
      n2 += v * v;
    }
  }
  const auto d = static_cast<double>(dim);
  const double lo = std::pow(r1, d);
  const double hi = std::pow(r2, d);
  const double radius = std::pow(lo + rng.uniform() * (hi - lo), 1.0 / d);
  const double scale = radius / std::sqrt(n2);
  for (double& v : g) v *= scale;
  return Point(std::move(g));
}

AnnulusMinimum min_abs_on_annulus(const ScalarField& field, double r1, double r2, std::size_t samples,
                                  std::uint64_t seed, const DistanceMap& dist, double floor) {
  if (!(r1 > 0.0) || !(r1 < r2)) throw std::domain_error("min_abs_on_annulus: need 0 < r1 < r2");
  if (dist.dim != field.dim()) throw std::domain_error("min_abs_on_annulus: field/distance dimension mismatch");
  std::vector<Point> pts(samples);
  std::vector<double> values(samples);
  std::vector<char> accepted(samples, 0);
  kernels::parallel::for_each_index(samples, [&](std::size_t i) {
    pts[i] = sample_shell(field.dim(), r1, r2, seed, streams::kAnnulusMin, i);
    if (dist(pts[i]) >= floor) {
      accepted[i] = 1;
      values[i] = std::abs(field(pts[i]));
    }
  });

  AnnulusMinimum out{std::numeric_limits<double>::infinity(), Point{}, 0};
  for (std::size_t i = 0; i < samples; ++i) {
    if (!accepted[i]) continue;
    ++out.accepted;
    if (values[i] < out.value) {
      out.value = values[i];
      out.argmin = pts[i];
    }
  }
  if (out.accepted == 0) throw EmptySampleError("min_abs_on_annulus: every sample fell within the distance floor");
  return out;
}

}  // namespace flatcert
