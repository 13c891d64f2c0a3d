#include "flatcert/jets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "flatcert/kernels.hpp"
#include "flatcert/stencil.hpp"

namespace flatcert {

ArcJet circle_arc_jet(std::int64_t n, int K) {
  if (n < 1) throw std::domain_error("circle_arc_jet: circle index must be >= 1");
  if (K < 1) throw std::domain_error("circle_arc_jet: jet order must be >= 1");
  // d^k/ds^k of (1 − cos ns)/n and (sin ns)/n at 0: −n^{k−1} cos(kπ/2) and
  // n^{k−1} sin(kπ/2).
  constexpr int kCos[4] = {1, 0, -1, 0};
  constexpr int kSin[4] = {0, 1, 0, -1};
  std::vector<Point> d;
  d.reserve(static_cast<std::size_t>(K));
  const auto nd = static_cast<double>(n);
  for (int k = 1; k <= K; ++k) {
    const double scale = std::pow(nd, k - 1);
    const int phase = k % 4;
    const double x = kCos[phase] == 0 ? 0.0 : -kCos[phase] * scale;
    const double y = kSin[phase] == 0 ? 0.0 : kSin[phase] * scale;
    d.push_back(Point{x, y});
  }
  return ArcJet(std::move(d));
}

namespace {

// Σ w_j x(j·stride) / (stride·h)^k over offsets −p..p.
Point apply_stencil(std::span<const double> weights, const std::vector<ArcSample>& grid,
                    std::size_t center, std::size_t stride, double step, int k) {
  const std::size_t p = weights.size() / 2;
  std::vector<double> acc(grid[center].x.dim(), 0.0);
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] == 0.0) continue;
    const std::size_t idx = center + j * stride - p * stride;
    for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += weights[j] * grid[idx].x[c];
  }
  const double denom = std::pow(step, k);
  for (double& v : acc) v /= denom;
  return Point(std::move(acc));
}

}  // namespace

ArcJet numeric_jet(std::span<const ArcSample> samples, int K) {
  if (K < 1) throw std::domain_error("numeric_jet: jet order must be >= 1");
  if (samples.size() < static_cast<std::size_t>(2 * K + 1) || samples.size() % 2 == 0) {
    throw std::domain_error("numeric_jet: need an odd number (>= 2K+1) of samples");
  }
  std::vector<ArcSample> grid(samples.begin(), samples.end());
  std::sort(grid.begin(), grid.end(), [](const ArcSample& a, const ArcSample& b) { return a.s < b.s; });
  const std::size_t dim = grid.front().x.dim();
  for (const ArcSample& a : grid) require_dim(a.x, dim, "numeric_jet");

  const double h = grid[1].s - grid[0].s;
  if (!(h > 0.0)) throw std::domain_error("numeric_jet: repeated sample parameter");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (std::abs((grid[i].s - grid[i - 1].s) - h) > 1e-9 * h) {
      throw std::domain_error("numeric_jet: samples are not on a uniform grid");
    }
  }
  const std::size_t center = grid.size() / 2;
  if (std::abs(grid[center].s) > 1e-9 * h) {
    throw std::domain_error("numeric_jet: grid is not symmetric about s = 0");
  }
  const std::size_t half = center;

  std::vector<Point> derivs;
  std::vector<double> errors;
  for (int k = 1; k <= K; ++k) {
    const auto p = static_cast<std::size_t>((k + 1) / 2);
    std::vector<double> weights;
    if (k <= kMaxStencilOrder) {
      const auto table = central_stencil(k);
      weights.assign(table.begin(), table.end());
    } else {
      std::vector<double> offsets;
      for (std::size_t j = 0; j <= 2 * p; ++j) offsets.push_back(static_cast<double>(j) - static_cast<double>(p));
      weights = fornberg_weights(0.0, offsets, k);
    }
    const Point fine = apply_stencil(weights, grid, center, 1, h, k);
    Point estimate = fine;
    if (2 * p <= half) {
      const Point coarse = apply_stencil(weights, grid, center, 2, 2.0 * h, k);
      estimate = (4.0 / 3.0) * fine - (1.0 / 3.0) * coarse;
    } else {
      // Not enough room for the coarse step: use every node instead.
      std::vector<double> offsets;
      for (std::size_t j = 0; j < grid.size(); ++j) offsets.push_back(static_cast<double>(j) - static_cast<double>(half));
      estimate = apply_stencil(fornberg_weights(0.0, offsets, k), grid, center, 1, h, k);
    }
    errors.push_back((estimate - fine).norm());
    derivs.push_back(estimate);
  }
  return ArcJet(std::move(derivs), std::move(errors));
}

namespace {

// No constraints: every form of degree m, as the standard basis.
FormBasis unconstrained_forms(int n, int m, double tol) {
  FormBasis out;
  out.n = n;
  out.m = m;
  out.tol = tol;
  const std::size_t size = basis_size(n, m);
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<double> c(size, 0.0);
    c[i] = 1.0;
    out.forms.emplace_back(n, m, std::move(c));
  }
  return out;
}

}  // namespace

std::vector<std::size_t> DegreeReport::forms_vanishing_along_arcs() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < restriction.size(); ++j) {
    const auto& row = restriction[j];
    if (std::all_of(row.begin(), row.end(), [](const ArcRestriction& r) { return !r.leading; })) {
      out.push_back(j);
    }
  }
  return out;
}

bool NondegeneracyReport::condition_holds_everywhere() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeReport& d) { return d.condition_holds(); });
}

NondegeneracyReport jet_nondegeneracy(std::span<const ArcJet> arcs, int m_max, double tol) {
  if (arcs.empty()) throw std::domain_error("jet_nondegeneracy: no arcs");
  if (m_max < 1) throw std::domain_error("jet_nondegeneracy: m_max must be >= 1");
  const std::size_t n = arcs.front().dim();

  NondegeneracyReport report;
  report.n = n;
  report.m_max = m_max;
  report.tol = tol;
  std::vector<Point> constraints;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].dim() != n) throw std::domain_error("jet_nondegeneracy: arcs of different dimensions");
    if (arcs[i].degenerate_tangent()) report.degenerate_arcs.push_back(i);
    if (arcs[i].first_nonvanishing_order()) {
      report.tangents.push_back(arcs[i].tangent_direction());
      constraints.push_back(report.tangents.back());
    } else {
      report.constant_arcs.push_back(i);
      report.tangents.emplace_back();
    }
  }

  for (int m = 1; m <= m_max; ++m) {
    DegreeReport degree;
    degree.m = m;
    if (constraints.empty()) {
      degree.tangent_space = unconstrained_forms(static_cast<int>(n), m, tol);
    } else {
      degree.tangent_space = vanishing_space(constraints, m, tol);
    }
    const auto& forms = degree.tangent_space.forms;
    degree.restriction.assign(forms.size(), std::vector<ArcRestriction>(arcs.size()));
    kernels::parallel::for_each_index(arcs.size(), [&](std::size_t i) {
      for (std::size_t j = 0; j < forms.size(); ++j) {
        ArcRestriction r{i, std::nullopt};
        // P(γ(s)) = O(s^m): a jet shorter than m sees nothing.
        if (arcs[i].order() >= m) r.leading = leading_term(forms[j], arcs[i]);
        degree.restriction[j][i] = r;
      }
    });
    report.degrees.push_back(std::move(degree));
  }
  return report;
}

}  // namespace flatcert
