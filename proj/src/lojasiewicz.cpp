#include "flatcert/lojasiewicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "flatcert/kernels.hpp"
#include "streams.hpp"

namespace flatcert {

namespace {

FlatnessCertificate certify_directions(const DirectionSet& dirs, int p_max, double tol,
                                       DirectionSampleInfo info) {
  if (p_max < 1) throw std::domain_error("certify_flatness: p_max must be >= 1");
  FlatnessCertificate cert;
  cert.p_max = p_max;
  cert.tol = tol;
  cert.sample = std::move(info);
  for (int p = 1; p <= p_max; ++p) {
    cert.degrees.push_back({p, vanishing_space(dirs.points(), p, tol)});
  }
  return cert;
}

struct ShellSample {
  Point x;
  double log_dist = 0.0;
  double log_abs = 0.0;
  enum class Kind { used, excluded, infinite } kind = Kind::excluded;
};

}  // namespace

bool FlatnessCertificate::valid() const { return !first_failing_degree().has_value(); }

std::optional<int> FlatnessCertificate::first_failing_degree() const {
  for (const auto& d : degrees) {
    if (d.dimension() != 0) return d.degree;
  }
  return std::nullopt;
}

FlatnessCertificate certify_flatness_via_directions(const Family& family, int p_max, double r,
                                                    std::size_t count, std::uint64_t seed, double tol) {
  DirectionSampleInfo info{family_name(family), static_cast<std::size_t>(family_dim(family)), r, count, seed};
  return certify_directions(secant_directions(family, r, count, seed), p_max, tol, std::move(info));
}

FlatnessCertificate certify_flatness_via_directions(std::span<const Point> zero_points, int p_max,
                                                    double tol) {
  if (zero_points.empty()) throw EmptySampleError("certify_flatness: no zero-set points supplied");
  std::vector<Point> dirs;
  dirs.reserve(zero_points.size());
  for (const Point& p : zero_points) {
    if (p.norm() == 0.0) throw std::domain_error("certify_flatness: the base point itself has no direction");
    dirs.push_back(p.normalized());
  }
  DirectionSet set(std::move(dirs));
  DirectionSampleInfo info{"points", set.dim(), std::nullopt, set.size(), std::nullopt};
  return certify_directions(set, p_max, tol, std::move(info));
}

const char* to_string(ExponentVerdict v) {
  return v == ExponentVerdict::diverging ? "diverging" : "bounded";
}

const char* to_string(BoundMode m) { return m == BoundMode::norm ? "norm" : "set-distance"; }

ExponentVerdict classify_exponents(const std::vector<AnnulusExponent>& annuli) {
  if (annuli.size() < 2) return ExponentVerdict::bounded;
  for (std::size_t i = 1; i < annuli.size(); ++i) {
    if (!(annuli[i].nu > annuli[i - 1].nu)) return ExponentVerdict::bounded;
  }
  return annuli.back().nu > 2.0 * annuli.front().nu ? ExponentVerdict::diverging : ExponentVerdict::bounded;
}

ExponentFitReport fit_exponent(const ScalarField& field, const DistanceMap& dist, int k_first, int k_last,
                               std::size_t samples_per_annulus, std::uint64_t seed, double dist_floor) {
  if (dist.dim != field.dim()) throw std::domain_error("fit_exponent: field/distance dimension mismatch");
  if (k_first > k_last) throw std::domain_error("fit_exponent: empty annulus range");
  if (samples_per_annulus == 0) throw std::domain_error("fit_exponent: need at least one sample per annulus");
  if (!(dist_floor >= 0.0)) throw std::domain_error("fit_exponent: dist_floor must be >= 0");

  ExponentFitReport report;
  report.field = field.name();
  report.distance = dist.name;
  report.samples_per_annulus = samples_per_annulus;
  report.seed = seed;
  report.dist_floor = dist_floor;

  for (int k = k_first; k <= k_last; ++k) {
    AnnulusExponent a;
    a.k = k;
    a.r_outer = std::ldexp(1.0, -k);
    a.r_inner = std::ldexp(1.0, -k - 1);
    a.samples = samples_per_annulus;

    std::vector<ShellSample> shell(samples_per_annulus);
    const std::uint64_t stream = streams::kAnnulusBase + static_cast<std::uint64_t>(static_cast<std::int64_t>(k));
    kernels::parallel::for_each_index(samples_per_annulus, [&](std::size_t i) {
      ShellSample& s = shell[i];
      s.x = sample_shell(field.dim(), a.r_inner, a.r_outer, seed, stream, i);
      const double d = dist(s.x);
      if (!(d > dist_floor && d < 1.0)) return;
      s.log_dist = std::log(d);
      s.log_abs = field.log_abs(s.x);
      s.kind = std::isfinite(s.log_abs) ? ShellSample::Kind::used : ShellSample::Kind::infinite;
    });

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    a.nu = -std::numeric_limits<double>::infinity();
    for (const ShellSample& s : shell) {
      if (s.kind == ShellSample::Kind::excluded) {
        ++a.excluded;
        continue;
      }
      if (s.kind == ShellSample::Kind::infinite) {
        ++a.infinite;
        continue;
      }
      ++a.used;
      // |f| >= d^ν with d < 1; |f| >= 1 needs no exponent at all.
      const double nu = std::max(0.0, s.log_abs / s.log_dist);
      if (nu > a.nu) {
        a.nu = nu;
        a.binding_point = s.x;
      }
      sx += s.log_dist;
      sy += s.log_abs;
      sxx += s.log_dist * s.log_dist;
      sxy += s.log_dist * s.log_abs;
    }
    if (a.used == 0) {
      a.nu = a.infinite > 0 ? std::numeric_limits<double>::infinity() : 0.0;
    } else {
      const auto n = static_cast<double>(a.used);
      const double var = sxx - sx * sx / n;
      if (a.used >= 2 && var > 0.0) {
        a.fit_nu = (sxy - sx * sy / n) / var;
        a.fit_log_c = (sy - a.fit_nu * sx) / n;
      } else {
        a.fit_nu = a.nu;
        a.fit_log_c = 0.0;
      }
      double ss = 0.0;
      for (const ShellSample& s : shell) {
        if (s.kind != ShellSample::Kind::used) continue;
        const double e = s.log_abs - (a.fit_log_c + a.fit_nu * s.log_dist);
        ss += e * e;
      }
      a.residual = std::sqrt(ss / n);
    }
    report.annuli.push_back(std::move(a));
  }
  report.verdict = classify_exponents(report.annuli);
  return report;
}

FlatnessBoundReport check_flatness_bound(const ScalarField& field, BoundMode mode, const DistanceMap& dist,
                                         int N_max, double radius, std::size_t samples, std::uint64_t seed,
                                         double c_bound) {
  if (N_max < 1) throw std::domain_error("check_flatness_bound: N_max must be >= 1");
  if (!(radius > 0.0)) throw std::domain_error("check_flatness_bound: radius must be positive");
  if (!(c_bound > 0.0)) throw std::domain_error("check_flatness_bound: c_bound must be positive");
  if (mode == BoundMode::set_distance && dist.dim != field.dim()) {
    throw std::domain_error("check_flatness_bound: field/distance dimension mismatch");
  }

  FlatnessBoundReport report;
  report.field = field.name();
  report.mode = mode;
  report.distance = mode == BoundMode::norm ? "norm" : dist.name;
  report.radius = radius;
  report.samples = samples;
  report.seed = seed;
  report.c_bound = c_bound;

  std::vector<Point> pts(samples);
  std::vector<double> log_d(samples), log_f(samples);
  kernels::parallel::for_each_index(samples, [&](std::size_t i) {
    pts[i] = sample_shell(field.dim(), 0.0, radius, seed, streams::kBall, i);
    const double d = mode == BoundMode::norm ? pts[i].norm() : dist(pts[i]);
    log_d[i] = d > 0.0 ? std::log(d) : -std::numeric_limits<double>::infinity();
    log_f[i] = field.log_abs(pts[i]);
  });

  for (std::size_t i = 0; i < samples; ++i) {
    if (std::isinf(log_d[i])) ++report.on_set;
  }
  const double log_c = std::log(c_bound);
  for (int N = 1; N <= N_max; ++N) {
    BoundEntry e;
    e.N = N;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples; ++i) {
      if (std::isinf(log_d[i])) continue;
      const double lr = log_f[i] - N * log_d[i];
      if (lr > log_c) ++e.violations;
      if (lr > best) {
        best = lr;
        e.argsup = pts[i];
      }
    }
    e.sup_ratio = std::exp(best);
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace flatcert
