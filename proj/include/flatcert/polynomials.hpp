#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "flatcert/arc_jet.hpp"
#include "flatcert/point.hpp"
#include "flatcert/rational.hpp"

namespace flatcert {

/// Default relative singular-value threshold for numerical null spaces.
inline constexpr double kDefaultNullTolerance = 1e-8;

struct Monomial {
  std::vector<int> exponents;

  int degree() const;
  double eval(std::span<const double> x) const;
  Rational eval(const RationalPoint& x) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// binom(n + m − 1, m); the number of degree-m monomials in n variables.
std::size_t basis_size(int n, int m);

/// Degree-m monomials in graded-lex order: x^m, x^{m-1}y, ..., y^m for n = 2.
std::vector<Monomial> monomial_basis(int n, int m);

/// Position of `exponents` in monomial_basis(n, |exponents|).
std::size_t monomial_index(std::span<const int> exponents);

/// A degree-m form in n variables, coefficients over monomial_basis(n, m).
class HomogeneousForm {
 public:
  HomogeneousForm(int n, int m, std::vector<double> coeffs);
  static HomogeneousForm zero(int n, int m);
  /// Builds a form from (exponents, coefficient) terms; all terms must share
  /// the same degree.
  static HomogeneousForm from_terms(int n, std::vector<std::pair<std::vector<int>, double>> terms);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  double coefficient(std::span<const int> exponents) const;

  double operator()(const Point& x) const;

 private:
  int n_;
  int m_;
  std::vector<double> coeffs_;
};

double eval_form(const HomogeneousForm& p, const Point& x);

/// Homogeneous components of degrees 0..K, component[d].m() == d.
class TaylorPolynomial {
 public:
  explicit TaylorPolynomial(std::vector<HomogeneousForm> components);

  int n() const { return components_.front().n(); }
  int max_degree() const { return static_cast<int>(components_.size()) - 1; }
  const HomogeneousForm& component(int d) const { return components_.at(static_cast<std::size_t>(d)); }
  const std::vector<HomogeneousForm>& components() const { return components_; }

 private:
  std::vector<HomogeneousForm> components_;
};

/// Orthonormal basis of the forms vanishing on a point set, with the
/// singular values of the evaluation matrix for auditing the rank decision.
struct FormBasis {
  int n = 0;
  int m = 0;
  double tol = kDefaultNullTolerance;
  std::vector<HomogeneousForm> forms;
  std::vector<double> singular_values;  // descending, min(rows, cols) of them

  std::size_t dimension() const { return forms.size(); }
  double sigma_max() const { return singular_values.empty() ? 0.0 : singular_values.front(); }
  double sigma_min() const { return singular_values.empty() ? 0.0 : singular_values.back(); }
};

FormBasis vanishing_space(std::span<const Point> points, int m, double tol = kDefaultNullTolerance);

struct ExactFormBasis {
  int n = 0;
  int m = 0;
  std::size_t rank = 0;
  RationalMatrix basis;  // coefficient vectors over monomial_basis(n, m)

  std::size_t dimension() const { return basis.size(); }
};

/// Exact-rational counterpart of vanishing_space; no threshold involved.
ExactFormBasis vanishing_space_exact(std::span<const RationalPoint> points, int m);
ExactFormBasis vanishing_space_exact(std::span<const Point> points, int m);

/// Coefficients of s^0..s^K in P(γ(s)), by truncated power-series substitution.
std::vector<double> compose_truncated(const HomogeneousForm& p, const ArcJet& jet, int K);
std::vector<double> compose_truncated(const TaylorPolynomial& p, const ArcJet& jet, int K);

struct LeadingTerm {
  int order;
  double coeff;
};

/// Relative threshold below which a composed coefficient counts as zero.
inline constexpr double kLeadingZeroTolerance = 1e-12;

/// Lowest nonzero term of P(γ(s)) through the jet's order; std::nullopt means
/// flat to the available order.
std::optional<LeadingTerm> leading_term(const HomogeneousForm& p, const ArcJet& jet);

}  // namespace flatcert
