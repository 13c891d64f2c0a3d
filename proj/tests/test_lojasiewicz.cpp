#include <doctest.h>

#include <cmath>
#include <numbers>

#include "flatcert/io.hpp"
#include "flatcert/lojasiewicz.hpp"
#include "oracles.hpp"

using namespace flatcert;

TEST_CASE("earring certificate") {
  const auto cert = certify_flatness_via_directions(EarringFamily{}, 8, 0.1, 200, 7);
  CHECK(cert.valid());
  CHECK_FALSE(cert.first_failing_degree());
  REQUIRE(cert.degrees.size() == 8);
  for (const auto& d : cert.degrees) {
    CHECK(d.dimension() == 0);
    CHECK(d.sigma_min() > 1e-6 * d.sigma_max());
  }
  CHECK(cert.sample.source == "earring");
  CHECK(cert.sample.count == 200);
  CHECK(*cert.sample.seed == 7);
  CHECK(*cert.sample.radius == 0.1);
}

TEST_CASE("earring certificate agrees with exact rank on ray points") {
  // Ray hits t·u with rational u = ((1−q²), 2q)/(1+q²) are rational points of H.
  std::vector<RationalPoint> pts;
  for (int i = 1; i <= 12; ++i) {
    const oracle::Q q(i, 13);
    const oracle::Q u1 = (1 - q * q) / (1 + q * q), u2 = 2 * q / (1 + q * q);
    const int n = 10 + 3 * i;
    const oracle::Q t = 2 * u1 / n;
    pts.push_back({t * u1, t * u2});
  }
  for (int p = 1; p <= 8; ++p) {
    const auto expo = oracle::exponents(2, p);
    std::vector<std::vector<oracle::Q>> rows;
    for (const auto& x : pts) {
      std::vector<oracle::Q> row;
      for (const auto& a : expo) {
        oracle::Q v = 1;
        for (int e = 0; e < a[0]; ++e) v *= x[0];
        for (int e = 0; e < a[1]; ++e) v *= x[1];
        row.push_back(v);
      }
      rows.push_back(row);
    }
    CHECK(oracle::rank(rows) == expo.size());
    CHECK(vanishing_space_exact(std::span<const RationalPoint>(pts), p).dimension() == 0);
  }
}

TEST_CASE("x-axis control fails at degree 1 with basis y") {
  const auto cert = certify_flatness_via_directions(AxisFamily{}, 1, 0.1, 50, 0);
  CHECK_FALSE(cert.valid());
  CHECK(*cert.first_failing_degree() == 1);
  REQUIRE(cert.degrees[0].dimension() == 1);
  const auto& y = cert.degrees[0].vanishing.forms[0];
  CHECK(std::abs(y.coefficient(std::vector<int>{1, 0})) <= 1e-10);
  CHECK(std::abs(y.coefficient(std::vector<int>{0, 1}) - 1.0) <= 1e-10);
}

TEST_CASE("sphere certificate") {
  const auto cert = certify_flatness_via_directions(SphereFamily(3), 5, 0.1, 500, 1);
  CHECK(cert.valid());
  for (const auto& d : cert.degrees) CHECK(d.sigma_min() > 1e-6 * d.sigma_max());
  CHECK(certify_flatness_via_directions(SphereFamily(4), 3, 0.1, 300, 1).valid());
}

TEST_CASE("certificate from caller points") {
  std::vector<Point> pts;
  for (int i = 1; i <= 30; ++i) pts.push_back(circle_point(5 + i, 0.5 + 0.05 * i));
  const auto cert = certify_flatness_via_directions(pts, 6);
  CHECK(cert.valid());
  CHECK(cert.sample.source == "points");
  CHECK_FALSE(cert.sample.seed);
  const std::vector<Point> none;
  CHECK_THROWS_AS(certify_flatness_via_directions(none, 2), EmptySampleError);
  const std::vector<Point> origin{Point{0.0, 0.0}};
  CHECK_THROWS_AS(certify_flatness_via_directions(origin, 2), std::domain_error);
  CHECK_THROWS_AS(certify_flatness_via_directions(pts, 0), std::domain_error);
}

TEST_CASE("certificates never lose validity as the sample grows") {
  const auto dirs = secant_directions(EarringFamily{}, 0.1, 400, 3);
  std::vector<Point> all(dirs.begin(), dirs.end());
  for (int p = 1; p <= 8; ++p) {
    std::size_t prev = SIZE_MAX;
    for (std::size_t count : {3u, 6u, 9u, 20u, 100u, 400u}) {
      const std::vector<Point> sub(all.begin(), all.begin() + count);
      const std::size_t dim = vanishing_space(sub, p).dimension();
      CHECK(dim <= prev);
      prev = dim;
    }
  }
}

TEST_CASE("analytic controls pin the exponent") {
  const auto q = fit_exponent(square_norm_field(), origin_distance_map(), 1, 6, 500, 3);
  for (const auto& a : q.annuli) {
    CHECK(a.used == 500);
    CHECK(std::abs(a.nu - 2.0) <= 1e-9);
    CHECK(std::abs(a.fit_nu - 2.0) <= 1e-9);
    CHECK(a.residual <= 1e-9);
  }
  CHECK(q.verdict == ExponentVerdict::bounded);

  const auto l = fit_exponent(axis_field(), axis_distance_map(), 1, 6, 500, 3);
  for (const auto& a : l.annuli) CHECK(std::abs(a.nu - 1.0) <= 1e-9);
  CHECK(l.verdict == ExponentVerdict::bounded);

  const auto l3 = fit_exponent(square_norm_field(3), origin_distance_map(3), 2, 3, 100, 0);
  for (const auto& a : l3.annuli) CHECK(std::abs(a.nu - 2.0) <= 1e-9);
}

TEST_CASE("earring exponent diverges") {
  for (std::uint64_t seed : {0u, 1u}) {
    const auto r = fit_exponent(earring_witness(), earring_distance_map(), 2, 6, 2000, seed, 1e-4);
    REQUIRE(r.annuli.size() == 5);
    for (std::size_t i = 1; i < r.annuli.size(); ++i) CHECK(r.annuli[i].nu > r.annuli[i - 1].nu);
    CHECK(r.annuli.back().nu >= 2.0 * r.annuli.front().nu);
    CHECK(r.verdict == ExponentVerdict::diverging);
    for (const auto& a : r.annuli) {
      CHECK(a.samples == 2000);
      CHECK(a.used + a.excluded + a.infinite == a.samples);
      CHECK(a.used > 0);
      CHECK(a.nu >= 0.0);
      CHECK(a.binding_point.norm() >= a.r_inner * (1 - 1e-12));
      CHECK(a.binding_point.norm() <= a.r_outer * (1 + 1e-12));
    }
  }
}

TEST_CASE("dense axis scan shows the same growth") {
  // On the positive axis between C_{n+1} and C_n the distance is polynomial
  // in ‖x‖ while |f| carries exp(−1/x²).
  const auto f = earring_witness();
  double prev = 0.0;
  for (int k = 2; k <= 6; ++k) {
    const double lo = std::ldexp(1.0, -k - 1), hi = std::ldexp(1.0, -k);
    double worst = 0.0;
    for (int i = 0; i <= 20000; ++i) {
      const Point x{lo + (hi - lo) * i / 20000.0, 0.0};
      const double d = dist_to_earring(x);
      // Circles crowd to ~1e-4 apart by k = 6, so no floor here.
      const double la = f.log_abs(x);
      if (!(d > 1e-12 && d < 1.0) || !std::isfinite(la)) continue;
      worst = std::max(worst, la / std::log(d));
    }
    CHECK(worst > prev);
    prev = worst;
  }
}

TEST_CASE("exponent classification") {
  auto make = [](std::vector<double> nus) {
    std::vector<AnnulusExponent> a;
    for (double v : nus) {
      AnnulusExponent e;
      e.nu = v;
      a.push_back(e);
    }
    return a;
  };
  CHECK(classify_exponents(make({1, 2, 3})) == ExponentVerdict::diverging);
  CHECK(classify_exponents(make({1, 1.5, 1.9})) == ExponentVerdict::bounded);
  CHECK(classify_exponents(make({1, 3, 2.5})) == ExponentVerdict::bounded);
  CHECK(classify_exponents(make({2, 2, 2})) == ExponentVerdict::bounded);
  CHECK(classify_exponents(make({5})) == ExponentVerdict::bounded);
  CHECK(std::string(to_string(ExponentVerdict::diverging)) == "diverging");
}

TEST_CASE("flat radial control diverges") {
  const auto r = fit_exponent(flat_radial_field(), origin_distance_map(), 1, 5, 200, 0);
  for (std::size_t i = 1; i < r.annuli.size(); ++i) CHECK(r.annuli[i].nu > r.annuli[i - 1].nu);
  CHECK(r.verdict == ExponentVerdict::diverging);
}

TEST_CASE("on-set and underflowing samples are counted, not fitted") {
  // Every sample of the shell is at distance < 1 from the origin but the floor
  // excludes them all.
  const auto r = fit_exponent(square_norm_field(), origin_distance_map(), 3, 3, 50, 0, 0.5);
  CHECK(r.annuli[0].excluded == 50);
  CHECK(r.annuli[0].used == 0);

  const ScalarField zero("zero", 2, ZeroSetKind::custom, [](const Point&) { return 0.0; });
  const auto z = fit_exponent(zero, origin_distance_map(), 2, 2, 30, 0, 0.0);
  CHECK(z.annuli[0].infinite == 30);
  CHECK(std::isinf(z.annuli[0].nu));

  CHECK_THROWS_AS(fit_exponent(zero, origin_distance_map(3), 2, 2, 30, 0), std::domain_error);
  CHECK_THROWS_AS(fit_exponent(zero, origin_distance_map(), 3, 2, 30, 0), std::domain_error);
  CHECK_THROWS_AS(fit_exponent(zero, origin_distance_map(), 2, 2, 0, 0), std::domain_error);
  CHECK_THROWS_AS(fit_exponent(zero, origin_distance_map(), 2, 2, 1, 0, -1.0), std::domain_error);
}

TEST_CASE("exponent reports are deterministic") {
  const auto a = io::to_json(fit_exponent(earring_witness(), earring_distance_map(), 2, 4, 500, 9)).dump();
  const auto b = io::to_json(fit_exponent(earring_witness(), earring_distance_map(), 2, 4, 500, 9)).dump();
  CHECK(a == b);
  const auto c = io::to_json(fit_exponent(earring_witness(), earring_distance_map(), 2, 4, 500, 10)).dump();
  CHECK(a != c);
}

TEST_CASE("norm-mode flatness bound") {
  const auto r = check_flatness_bound(earring_witness(), BoundMode::norm, earring_distance_map(), 10, 0.2, 2000, 0);
  REQUIRE(r.entries.size() == 10);
  for (const auto& e : r.entries) {
    CHECK(e.sup_ratio <= 1.0);
    CHECK(e.violations == 0);
  }
  CHECK(r.entries.back().sup_ratio <= 1.5e-4);
  CHECK(r.distance == "norm");

  const auto q = check_flatness_bound(square_norm_field(), BoundMode::norm, origin_distance_map(), 2, 1.0, 500, 0);
  CHECK(std::abs(q.entries[1].sup_ratio - 1.0) <= 1e-12);
  CHECK(q.entries[0].sup_ratio <= 1.0);
}

TEST_CASE("set-distance mode reports violations near circles") {
  const auto r =
      check_flatness_bound(earring_witness(), BoundMode::set_distance, earring_distance_map(), 4, 0.3, 2000, 0);
  CHECK(r.mode == BoundMode::set_distance);
  CHECK(r.entries[0].violations == 0);
  CHECK(r.entries[2].violations > 0);
  CHECK(r.entries[3].violations >= r.entries[2].violations);
  CHECK(dist_to_earring(r.entries[3].argsup) < 1e-3);

  // Normal segment to C_1 through (1, 1): f vanishes to second order, so
  // |f|/d² tends to e^{-1/2}·π²·|∇u|² = e^{-1/2}·π² while |f|/d³ grows like 1/d.
  const auto f = earring_witness();
  const Point p{1.0, 1.0}, normal = (p - Point{1.0, 0.0}).normalized();
  double prev = 0.0;
  for (double t = 1e-2; t >= 1e-8; t /= 10) {
    const Point x = p + t * normal;
    const double d = dist_to_earring(x);
    CHECK(d == doctest::Approx(t).epsilon(1e-6));
    const double ratio = std::abs(f(x)) / (d * d * d);
    CHECK(ratio > prev);
    prev = ratio;
    if (t <= 1e-4) CHECK(std::abs(f(x)) / (d * d) == doctest::Approx(std::exp(-0.5) * std::numbers::pi * std::numbers::pi).epsilon(1e-3));
  }
  CHECK(prev > 1e6);
}

TEST_CASE("bound report bookkeeping") {
  const ScalarField y = axis_field();
  const auto r = check_flatness_bound(y, BoundMode::set_distance, axis_distance_map(), 2, 1.0, 100, 0);
  CHECK(r.on_set == 0);
  CHECK(std::abs(r.entries[0].sup_ratio - 1.0) <= 1e-12);
  CHECK_THROWS_AS(check_flatness_bound(y, BoundMode::norm, axis_distance_map(), 0, 1.0, 10, 0), std::domain_error);
  CHECK_THROWS_AS(check_flatness_bound(y, BoundMode::norm, axis_distance_map(), 1, 0.0, 10, 0), std::domain_error);
  CHECK_THROWS_AS(check_flatness_bound(y, BoundMode::norm, axis_distance_map(), 1, 1.0, 10, 0, 0.0),
                  std::domain_error);
}
