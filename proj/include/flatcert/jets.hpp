#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "flatcert/arc_jet.hpp"
#include "flatcert/polynomials.hpp"

namespace flatcert {

/// Exact jet of γ_n(s) = ((1 − cos ns)/n, (sin ns)/n), the unit-speed
/// parametrization of C_n through the origin. Curvature n.
ArcJet circle_arc_jet(std::int64_t n, int K);

struct ArcSample {
  double s;
  Point x;
};

/// Central finite differences with one level of Richardson extrapolation
/// (steps 2h and h). Needs >= 2K+1 samples on a uniform grid symmetric about
/// s = 0, the sample at s = 0 being the base point.
ArcJet numeric_jet(std::span<const ArcSample> samples, int K);

/// Leading behaviour of one tangent-vanishing form along one arc.
struct ArcRestriction {
  std::size_t arc;
  std::optional<LeadingTerm> leading;  // nullopt: flat through the jet order
};

struct DegreeReport {
  int m = 0;
  FormBasis tangent_space;  // forms vanishing at every tangent direction
  /// restriction[j][i]: basis form j composed with arc i.
  std::vector<std::vector<ArcRestriction>> restriction;

  std::size_t tangent_dimension() const { return tangent_space.dimension(); }
  /// The nondegeneracy condition at this degree.
  bool condition_holds() const { return tangent_dimension() == 0; }
  /// Indices of basis forms that are flat along every arc to jet order.
  std::vector<std::size_t> forms_vanishing_along_arcs() const;
};

struct NondegeneracyReport {
  std::size_t n = 0;
  int m_max = 0;
  double tol = kDefaultNullTolerance;
  std::vector<Point> tangents;  // empty Point for constant arcs
  std::vector<std::size_t> degenerate_arcs;  // γ'(0) = 0, reparametrized
  std::vector<std::size_t> constant_arcs;    // every jet zero; no tangent constraint
  std::vector<DegreeReport> degrees;

  bool condition_holds_everywhere() const;
};

NondegeneracyReport jet_nondegeneracy(std::span<const ArcJet> arcs, int m_max,
                                      double tol = kDefaultNullTolerance);

}  // namespace flatcert
