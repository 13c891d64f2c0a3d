#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flatcert/geometry.hpp"
#include "flatcert/polynomials.hpp"
#include "flatcert/witness.hpp"

namespace flatcert {

inline constexpr double kDefaultDistFloor = 1e-4;

// ---------------------------------------------------------------------------
// Flatness certificates
//
// If f vanishes on a set whose secant directions at 0 leave no nonzero form of
// degree p vanishing on them, the degree-p Taylor component of f at 0 is zero.
// A certificate records that check for p = 1..p_max together with the
// singular values behind each rank decision.
// ---------------------------------------------------------------------------

struct DegreeCertificate {
  int degree = 0;
  FormBasis vanishing;

  std::size_t dimension() const { return vanishing.dimension(); }
  double sigma_min() const { return vanishing.sigma_min(); }
  double sigma_max() const { return vanishing.sigma_max(); }
};

struct DirectionSampleInfo {
  std::string source;  // family name or "points"
  std::size_t dim = 0;
  std::optional<double> radius;
  std::size_t count = 0;
  std::optional<std::uint64_t> seed;
};

struct FlatnessCertificate {
  int p_max = 0;
  double tol = kDefaultNullTolerance;
  DirectionSampleInfo sample;
  std::vector<DegreeCertificate> degrees;

  bool valid() const;
  std::optional<int> first_failing_degree() const;
};

FlatnessCertificate certify_flatness_via_directions(const Family& family, int p_max, double r,
                                                    std::size_t count, std::uint64_t seed,
                                                    double tol = kDefaultNullTolerance);

/// Same check on caller-supplied zero-set points (normalized internally).
FlatnessCertificate certify_flatness_via_directions(std::span<const Point> zero_points, int p_max,
                                                    double tol = kDefaultNullTolerance);

// ---------------------------------------------------------------------------
// Exponent estimation on dyadic shells 2^{-k-1} <= ‖x‖ <= 2^{-k}
// ---------------------------------------------------------------------------

enum class ExponentVerdict { bounded, diverging };
const char* to_string(ExponentVerdict v);

struct AnnulusExponent {
  int k = 0;
  double r_inner = 0.0;
  double r_outer = 0.0;
  std::size_t samples = 0;     // drawn
  std::size_t used = 0;        // finite exponent, dist in (floor, 1)
  std::size_t excluded = 0;    // dist <= floor or dist >= 1
  std::size_t infinite = 0;    // |f| = 0 or below the normal range
  double nu = 0.0;             // max per-sample exponent: |f| >= d^nu with C = 1
  Point binding_point;         // sample attaining nu
  double fit_nu = 0.0;         // least squares log|f| ≈ log C + nu log d
  double fit_log_c = 0.0;
  double residual = 0.0;       // RMS of that fit
};

struct ExponentFitReport {
  std::string field;
  std::string distance;
  std::size_t samples_per_annulus = 0;
  std::uint64_t seed = 0;
  double dist_floor = kDefaultDistFloor;
  std::vector<AnnulusExponent> annuli;
  ExponentVerdict verdict = ExponentVerdict::bounded;
};

ExponentFitReport fit_exponent(const ScalarField& field, const DistanceMap& dist, int k_first,
                               int k_last, std::size_t samples_per_annulus, std::uint64_t seed,
                               double dist_floor = kDefaultDistFloor);

/// "diverging" iff nu strictly increases over the annuli and the last exceeds
/// twice the first.
ExponentVerdict classify_exponents(const std::vector<AnnulusExponent>& annuli);

// ---------------------------------------------------------------------------
// Flatness bound |f(x)| <= C_N d(x)^N
// ---------------------------------------------------------------------------

enum class BoundMode { set_distance, norm };
const char* to_string(BoundMode m);

struct BoundEntry {
  int N = 0;
  double sup_ratio = 0.0;  // sup |f|/d^N over the samples (C_N)
  Point argsup;
  std::size_t violations = 0;  // samples with |f|/d^N > c_bound
};

struct FlatnessBoundReport {
  std::string field;
  BoundMode mode = BoundMode::norm;
  std::string distance;
  double radius = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double c_bound = 1.0;
  std::size_t on_set = 0;  // samples with d = 0, skipped
  std::vector<BoundEntry> entries;
};

FlatnessBoundReport check_flatness_bound(const ScalarField& field, BoundMode mode,
                                         const DistanceMap& dist, int N_max, double radius,
                                         std::size_t samples, std::uint64_t seed,
                                         double c_bound = 1.0);

}  // namespace flatcert
