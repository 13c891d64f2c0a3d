#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "flatcert/jets.hpp"
#include "flatcert/stencil.hpp"
#include "oracles.hpp"

using namespace flatcert;

namespace {

std::vector<ArcSample> sample_arc(const std::function<Point(double)>& gamma, double h, int half) {
  std::vector<ArcSample> out;
  for (int i = -half; i <= half; ++i) out.push_back({i * h, gamma(i * h)});
  return out;
}

Point circle_arc(std::int64_t n, double s) {
  const double nd = static_cast<double>(n);
  return Point{(1.0 - std::cos(nd * s)) / nd, std::sin(nd * s) / nd};
}

}  // namespace

TEST_CASE("circle arc jets") {
  auto j = circle_arc_jet(1, 2);
  CHECK(j.order() == 2);
  CHECK(j.derivative(1) == Point{0.0, 1.0});
  CHECK(j.derivative(2) == Point{1.0, 0.0});
  CHECK(circle_arc_jet(7, 2).derivative(2) == Point{7.0, 0.0});
  CHECK(circle_arc_jet(2, 3).derivative(3) == Point{0.0, -4.0});
  j = circle_arc_jet(3, 6);
  CHECK(j.derivative(4) == Point{-27.0, 0.0});
  CHECK(j.derivative(5) == Point{0.0, 81.0});
  CHECK(j.derivative(6) == Point{243.0, 0.0});
  CHECK_THROWS_AS(circle_arc_jet(0, 2), std::domain_error);
  CHECK_THROWS_AS(circle_arc_jet(1, 0), std::domain_error);
  CHECK_THROWS_AS(j.derivative(7), std::domain_error);
  CHECK(j.error_estimates().empty());
}

TEST_CASE("curvature of the circle arcs is n") {
  for (std::int64_t n = 1; n <= 100; ++n) {
    const auto j = circle_arc_jet(n, 2);
    CHECK(j.derivative(1).norm() == 1.0);
    CHECK(j.derivative(2).norm() == static_cast<double>(n));
  }
}

TEST_CASE("stencil table agrees with Fornberg weights") {
  for (int k = 0; k <= kMaxStencilOrder; ++k) {
    const auto table = central_stencil(k);
    const int p = (k + 1) / 2;
    std::vector<double> nodes;
    for (int j = -p; j <= p; ++j) nodes.push_back(j);
    const auto w = fornberg_weights(0.0, nodes, k);
    REQUIRE(w.size() == table.size());
    for (std::size_t i = 0; i < w.size(); ++i) CHECK(w[i] == doctest::Approx(table[i]).epsilon(1e-13).scale(1.0));
  }
  CHECK_THROWS_AS(central_stencil(7), std::domain_error);
  const std::vector<double> two{0.0, 1.0};
  CHECK_THROWS_AS(fornberg_weights(0.0, two, 2), std::domain_error);
  const std::vector<double> dup{0.0, 1.0, 1.0};
  CHECK_THROWS_AS(fornberg_weights(0.0, dup, 1), std::domain_error);
}

TEST_CASE("Fornberg weights differentiate polynomials exactly") {
  const std::vector<double> nodes{-1.5, -0.25, 0.5, 1.0, 2.0};
  for (int k = 0; k <= 4; ++k) {
    const auto w = fornberg_weights(0.3, nodes, k);
    for (int deg = 0; deg <= 4; ++deg) {
      double est = 0.0;
      for (std::size_t i = 0; i < nodes.size(); ++i) est += w[i] * std::pow(nodes[i], deg);
      // d^k/dx^k x^deg at 0.3
      double want = 0.0;
      if (deg >= k) {
        double f = 1.0;
        for (int j = 0; j < k; ++j) f *= deg - j;
        want = f * std::pow(0.3, deg - k);
      }
      CHECK(est == doctest::Approx(want).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("numeric jet examples") {
  SUBCASE("polynomial arc") {
    const auto s = sample_arc([](double t) { return Point{t, t * t}; }, 0.01, 4);
    const auto j = numeric_jet(s, 2);
    CHECK((j.derivative(1) - Point{1.0, 0.0}).norm() <= 1e-8);
    CHECK((j.derivative(2) - Point{0.0, 2.0}).norm() <= 1e-8);
    CHECK(j.error_estimates().size() == 2);
  }
  SUBCASE("unit circle arc") {
    const auto s = sample_arc([](double t) { return circle_arc(1, t); }, 1e-3, 4);
    const auto j = numeric_jet(s, 2);
    CHECK((j.derivative(1) - Point{0.0, 1.0}).norm() <= 1e-6);
    CHECK((j.derivative(2) - Point{1.0, 0.0}).norm() <= 1e-6);
  }
  SUBCASE("degenerate tangent") {
    const auto s = sample_arc([](double t) { return Point{t * t * t, 0.0}; }, 0.01, 2);
    const auto j = numeric_jet(s, 1);
    CHECK(j.derivative(1).norm() <= 1e-12);
    CHECK(j.degenerate_tangent());
    const std::vector<ArcJet> arcs{j};
    const auto report = jet_nondegeneracy(arcs, 1);
    CHECK(report.degenerate_arcs == std::vector<std::size_t>{0});
    CHECK(report.constant_arcs == std::vector<std::size_t>{0});
    CHECK(report.degrees[0].tangent_dimension() == 2);
  }
  SUBCASE("degenerate tangent with enough order is reparametrized") {
    const auto s = sample_arc([](double t) { return Point{t * t * t, 0.0}; }, 0.01, 6);
    const auto j = numeric_jet(s, 3);
    CHECK(j.derivative(3)[0] == doctest::Approx(6.0).epsilon(1e-8));
    const std::vector<ArcJet> arcs{j};
    const auto report = jet_nondegeneracy(arcs, 1);
    CHECK(report.degenerate_arcs == std::vector<std::size_t>{0});
    CHECK(report.constant_arcs.empty());
    CHECK((report.tangents[0] - Point{1.0, 0.0}).norm() <= 1e-12);
  }
  SUBCASE("errors") {
    auto s = sample_arc([](double t) { return Point{t, t}; }, 0.1, 2);
    CHECK_THROWS_AS(numeric_jet(s, 3), std::domain_error);
    CHECK_THROWS_AS(numeric_jet(s, 0), std::domain_error);
    auto uneven = s;
    uneven[4].s = 0.25;
    CHECK_THROWS_AS(numeric_jet(uneven, 1), std::domain_error);
    auto shifted = s;
    for (auto& a : shifted) a.s += 0.05;
    CHECK_THROWS_AS(numeric_jet(shifted, 1), std::domain_error);
    s.pop_back();
    CHECK_THROWS_AS(numeric_jet(s, 1), std::domain_error);
  }
}

TEST_CASE("numeric jets of circle arcs match the closed form") {
  for (std::int64_t n = 1; n <= 10; ++n) {
    for (int K = 1; K <= 3; ++K) {
      const auto s = sample_arc([n](double t) { return circle_arc(n, t); }, 1e-3, 2 * K + 2);
      const auto num = numeric_jet(s, K);
      const auto exact = circle_arc_jet(n, K);
      for (int k = 1; k <= K; ++k) CHECK((num.derivative(k) - exact.derivative(k)).norm() <= 1e-6);
    }
  }
}

TEST_CASE("narrow grids fall back to a wide stencil") {
  const auto s = sample_arc([](double t) { return Point{std::sin(t), std::exp(t) - 1.0}; }, 0.01, 3);
  const auto j = numeric_jet(s, 3);
  CHECK(j.derivative(1)[0] == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(j.derivative(3)[0] == doctest::Approx(-1.0).epsilon(1e-3));
  CHECK(j.derivative(3)[1] == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("jet_nondegeneracy examples") {
  SUBCASE("earring arcs") {
    std::vector<ArcJet> arcs;
    for (std::int64_t n = 1; n <= 20; ++n) arcs.push_back(circle_arc_jet(n, 8));
    const auto r = jet_nondegeneracy(arcs, 4);
    REQUIRE(r.degrees.size() == 4);
    for (const auto& d : r.degrees) {
      CHECK(d.tangent_dimension() == oracle::binomial(d.m + 1, d.m) - 1);
      CHECK_FALSE(d.condition_holds());
    }
    CHECK_FALSE(r.condition_holds_everywhere());
    const auto& m1 = r.degrees[0];
    REQUIRE(m1.tangent_dimension() == 1);
    CHECK(m1.tangent_space.forms[0].coefficient(std::vector<int>{1, 0}) == doctest::Approx(1.0));
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const auto& lt = m1.restriction[0][i].leading;
      REQUIRE(lt);
      CHECK(lt->order == 2);
      CHECK(std::abs(lt->coeff - (i + 1) / 2.0) <= 1e-10);
    }
    CHECK(m1.forms_vanishing_along_arcs().empty());
  }
  SUBCASE("two axes") {
    const std::vector<ArcJet> arcs{ArcJet({Point{1.0, 0.0}}), ArcJet({Point{0.0, 1.0}})};
    const auto r = jet_nondegeneracy(arcs, 1);
    CHECK(r.degrees[0].tangent_dimension() == 0);
    CHECK(r.degrees[0].condition_holds());
    CHECK(r.condition_holds_everywhere());
  }
  SUBCASE("single straight arc") {
    const std::vector<ArcJet> arcs{ArcJet({Point{1.0, 0.0}, Point{0.0, 0.0}})};
    const auto r = jet_nondegeneracy(arcs, 2);
    REQUIRE(r.degrees[1].tangent_dimension() == 2);
    // span{xy, y²}: no x² component.
    for (const auto& f : r.degrees[1].tangent_space.forms) CHECK(std::abs(f.coefficient(std::vector<int>{2, 0})) <= 1e-12);
    // Both forms vanish identically along the line.
    CHECK(r.degrees[1].forms_vanishing_along_arcs().size() == 2);
  }
  SUBCASE("errors") {
    const std::vector<ArcJet> none;
    CHECK_THROWS_AS(jet_nondegeneracy(none, 2), std::domain_error);
    const std::vector<ArcJet> one{ArcJet({Point{1.0, 0.0}})};
    CHECK_THROWS_AS(jet_nondegeneracy(one, 0), std::domain_error);
    const std::vector<ArcJet> mixed{ArcJet({Point{1.0, 0.0}}), ArcJet({Point{1.0, 0.0, 0.0}})};
    CHECK_THROWS_AS(jet_nondegeneracy(mixed, 1), std::domain_error);
  }
}

TEST_CASE("single nondegenerate arc leaves one constraint") {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> g;
  for (int n = 2; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      std::vector<double> d(static_cast<std::size_t>(n));
      for (double& v : d) v = g(gen);
      const std::vector<ArcJet> arcs{ArcJet({Point(d)})};
      const auto r = jet_nondegeneracy(arcs, m);
      CHECK(r.degrees.back().tangent_dimension() == oracle::binomial(n + m - 1, m) - 1);
    }
  }
}

TEST_CASE("report verdict tracks the tangent dimension") {
  std::mt19937_64 gen(9);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<ArcJet> arcs;
    for (int i = 0; i < 1 + trial % 6; ++i) arcs.push_back(ArcJet({Point{g(gen), g(gen)}, Point{g(gen), g(gen)}}));
    const auto r = jet_nondegeneracy(arcs, 3);
    for (const auto& d : r.degrees) {
      CHECK(d.condition_holds() == (d.tangent_dimension() == 0));
      CHECK(d.tangent_dimension() <= basis_size(2, d.m));
      CHECK(d.restriction.size() == d.tangent_dimension());
    }
  }
}

TEST_CASE("arc restriction separates tangent vanishing from arc vanishing") {
  // Parabola (s, s²): y vanishes on the tangent but starts at order 2 along the arc.
  const std::vector<ArcJet> arcs{ArcJet({Point{1.0, 0.0}, Point{0.0, 2.0}, Point{0.0, 0.0}, Point{0.0, 0.0}})};
  const auto r = jet_nondegeneracy(arcs, 1);
  const auto& y = r.degrees[0].tangent_space.forms.at(0);
  CHECK(std::abs(y.coefficient(std::vector<int>{0, 1})) == doctest::Approx(1.0));
  const auto lt = r.degrees[0].restriction[0][0].leading;
  REQUIRE(lt);
  CHECK(lt->order == 2);
  const HomogeneousForm x(2, 1, {1.0, 0.0});
  CHECK(leading_term(x, arcs[0])->order == 1);
}
