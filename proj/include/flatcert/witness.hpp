#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "flatcert/geometry.hpp"
#include "flatcert/point.hpp"

namespace flatcert {

enum class ZeroSetKind { earring, point, hyperplane, custom };

const char* to_string(ZeroSetKind kind);

/// A smooth function R^n → R with a known zero set.
///
/// `log_abs` returns log|f(x)| (−∞ on the zero set). Fields whose magnitude
/// falls below the double range near their zero set supply it in closed
/// form; otherwise it defaults to log|value(x)|.
class ScalarField {
 public:
  using Evaluator = std::function<double(const Point&)>;

  ScalarField(std::string name, std::size_t dim, ZeroSetKind zero_set, Evaluator value,
              Evaluator log_abs = {});

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  ZeroSetKind zero_set() const { return zero_set_; }

  double operator()(const Point& x) const;
  double log_abs(const Point& x) const;

 private:
  std::string name_;
  std::size_t dim_;
  ZeroSetKind zero_set_;
  Evaluator value_;
  Evaluator log_abs_;
};

/// C^∞ step: 0 for u <= a, 1 for u >= b, strictly increasing in between.
class SmoothStep {
 public:
  SmoothStep(double a, double b);
  double operator()(double u) const;
  double a() const { return a_; }
  double b() const { return b_; }

 private:
  double a_;
  double b_;
};

/// ψ(u) = h(u)·sin²(πu) + 1 − h(u) with h the step on [1/2, 1]. Lies in
/// [0, 1], vanishes exactly on the integers >= 1 and equals 1 for u <= 1/2.
double earring_profile(double u);

/// f(x, y) = exp(−1/r²)·ψ(2x/r²), f(0) = 0. Since 2x/r² = n on C_n, the zero
/// set is exactly the earring.
ScalarField earring_witness();

ScalarField square_norm_field(std::size_t dim = 2);   // "sq": ‖x‖², zero set {0}
ScalarField axis_field(std::size_t dim = 2);          // "axis": x2, zero set the x1-axis
ScalarField flat_radial_field(std::size_t dim = 2);   // "flat-radial": exp(−1/‖x‖²)

std::vector<ScalarField> control_fields(std::size_t dim = 2);

/// CLI names: earring | sq | axis | flat-radial.
ScalarField field_by_name(const std::string& name, std::size_t dim = 2);

/// Tensor-product central-difference estimate of D^α f(0), step h per axis,
/// second-order accurate. |α| <= 6.
double fd_derivative(const ScalarField& field, std::span<const int> alpha, double h);

struct AnnulusMinimum {
  double value;
  Point argmin;
  std::size_t accepted;
};

/// Minimum of |f| over seeded uniform samples of r1 <= ‖x‖ <= r2, keeping only
/// samples with dist(x) >= floor.
AnnulusMinimum min_abs_on_annulus(const ScalarField& field, double r1, double r2,
                                  std::size_t samples, std::uint64_t seed,
                                  const DistanceMap& dist, double floor);

/// Uniform point of the shell r1 <= ‖x‖ <= r2 in R^dim.
Point sample_shell(std::size_t dim, double r1, double r2, std::uint64_t seed,
                   std::uint64_t stream, std::uint64_t index);

}  // namespace flatcert
