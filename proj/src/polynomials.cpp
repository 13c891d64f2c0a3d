#include "flatcert/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/SVD>

#include "flatcert/kernels.hpp"

namespace flatcert {

namespace {

void require_degree(int n, int m) {
  if (n < 1) throw std::domain_error("polynomials: variable count must be >= 1");
  if (m < 0) throw std::domain_error("polynomials: degree must be >= 0");
}

void fill_basis(int var, int remaining, std::vector<int>& current, std::vector<Monomial>& out) {
  const int n = static_cast<int>(current.size());
  if (var == n - 1) {
    current[static_cast<std::size_t>(var)] = remaining;
    out.push_back({current});
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[static_cast<std::size_t>(var)] = e;
    fill_basis(var + 1, remaining - e, current, out);
  }
}

using Series = std::vector<double>;

Series multiply(const Series& a, const Series& b) {
  Series c(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// powers[j][e] = (x_j(s))^e truncated after s^K, e = 0..m.
std::vector<std::vector<Series>> coordinate_powers(const ArcJet& jet, int K, int m, bool absolute) {
  const std::size_t n = jet.dim();
  const auto len = static_cast<std::size_t>(K) + 1;
  std::vector<std::vector<Series>> powers(n);
  for (std::size_t j = 0; j < n; ++j) {
    Series x(len, 0.0);
    double factorial = 1.0;
    for (int k = 1; k <= K; ++k) {
      factorial *= k;
      const double c = jet.derivative(k)[j] / factorial;
      x[static_cast<std::size_t>(k)] = absolute ? std::abs(c) : c;
    }
    Series one(len, 0.0);
    one[0] = 1.0;
    powers[j].push_back(one);
    for (int e = 1; e <= m; ++e) powers[j].push_back(multiply(powers[j].back(), x));
  }
  return powers;
}

Series compose_with_powers(const HomogeneousForm& p, const std::vector<std::vector<Series>>& powers,
                           int K, bool absolute, double uniform_coeff) {
  const auto basis = monomial_basis(p.n(), p.m());
  Series out(static_cast<std::size_t>(K) + 1, 0.0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const double c = absolute ? uniform_coeff : p.coeffs()[i];
    if (c == 0.0) continue;
    Series term(out.size(), 0.0);
    term[0] = c;
    for (std::size_t j = 0; j < basis[i].exponents.size(); ++j) {
      term = multiply(term, powers[j][static_cast<std::size_t>(basis[i].exponents[j])]);
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += term[k];
  }
  return out;
}

void check_composable(int n, int m, const ArcJet& jet, int K) {
  if (static_cast<std::size_t>(n) != jet.dim()) {
    throw std::domain_error("compose_truncated: form and arc dimensions differ");
  }
  if (K < 0) throw std::domain_error("compose_truncated: truncation order must be >= 0");
  if (K > jet.order()) throw std::domain_error("compose_truncated: truncation order exceeds jet order");
  (void)m;
}

// Sign convention for null-space vectors: first significant coefficient > 0.
void canonicalize_sign(std::vector<double>& v) {
  double scale = 0.0;
  for (double c : v) scale = std::max(scale, std::abs(c));
  for (double c : v) {
    if (std::abs(c) > 1e-10 * scale) {
      if (c < 0.0) {
        for (double& x : v) x = -x;
      }
      return;
    }
  }
}

}  // namespace

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

double Monomial::eval(std::span<const double> x) const {
  if (x.size() != exponents.size()) throw std::domain_error("Monomial::eval: dimension mismatch");
  double v = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (int e = 0; e < exponents[j]; ++e) v *= x[j];
  }
  return v;
}

Rational Monomial::eval(const RationalPoint& x) const {
  if (x.size() != exponents.size()) throw std::domain_error("Monomial::eval: dimension mismatch");
  Rational v = 1;
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (int e = 0; e < exponents[j]; ++e) v *= x[j];
  }
  return v;
}

std::size_t basis_size(int n, int m) {
  require_degree(n, m);
  // binom(n + m − 1, m) computed as a running product of exact quotients.
  std::size_t result = 1;
  for (int i = 1; i <= m; ++i) {
    result = result * static_cast<std::size_t>(n - 1 + i) / static_cast<std::size_t>(i);
  }
  return result;
}

std::vector<Monomial> monomial_basis(int n, int m) {
  require_degree(n, m);
  std::vector<Monomial> out;
  out.reserve(basis_size(n, m));
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  fill_basis(0, m, current, out);
  return out;
}

std::size_t monomial_index(std::span<const int> exponents) {
  const int n = static_cast<int>(exponents.size());
  if (n < 1) throw std::domain_error("monomial_index: empty multi-index");
  int remaining = 0;
  for (int e : exponents) {
    if (e < 0) throw std::domain_error("monomial_index: negative exponent");
    remaining += e;
  }
  std::size_t index = 0;
  for (int var = 0; var < n - 1; ++var) {
    const int e = exponents[static_cast<std::size_t>(var)];
    // Monomials sharing the prefix but with a larger exponent here come first.
    for (int larger = remaining; larger > e; --larger) index += basis_size(n - var - 1, remaining - larger);
    remaining -= e;
  }
  return index;
}

HomogeneousForm::HomogeneousForm(int n, int m, std::vector<double> coeffs)
    : n_(n), m_(m), coeffs_(std::move(coeffs)) {
  require_degree(n, m);
  if (coeffs_.size() != basis_size(n, m)) {
    throw std::domain_error("HomogeneousForm: coefficient count must equal binom(n+m-1, m)");
  }
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw std::domain_error("HomogeneousForm: non-finite coefficient");
  }
}

HomogeneousForm HomogeneousForm::zero(int n, int m) {
  return HomogeneousForm(n, m, std::vector<double>(basis_size(n, m), 0.0));
}

HomogeneousForm HomogeneousForm::from_terms(int n, std::vector<std::pair<std::vector<int>, double>> terms) {
  if (terms.empty()) throw std::domain_error("HomogeneousForm::from_terms: no terms");
  int m = -1;
  for (const auto& [exps, c] : terms) {
    if (static_cast<int>(exps.size()) != n) throw std::domain_error("from_terms: wrong multi-index length");
    const int d = Monomial{exps}.degree();
    if (m >= 0 && d != m) throw std::domain_error("from_terms: terms of mixed degree");
    m = d;
  }
  std::vector<double> coeffs(basis_size(n, m), 0.0);
  for (const auto& [exps, c] : terms) coeffs[monomial_index(exps)] += c;
  return HomogeneousForm(n, m, std::move(coeffs));
}

bool HomogeneousForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; });
}

double HomogeneousForm::coefficient(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != n_ || Monomial{{exponents.begin(), exponents.end()}}.degree() != m_) {
    return 0.0;
  }
  return coeffs_[monomial_index(exponents)];
}

double HomogeneousForm::operator()(const Point& x) const {
  require_dim(x, static_cast<std::size_t>(n_), "eval_form");
  const auto basis = monomial_basis(n_, m_);
  double v = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs_[i] != 0.0) v += coeffs_[i] * basis[i].eval(x.coords());
  }
  return v;
}

double eval_form(const HomogeneousForm& p, const Point& x) { return p(x); }

TaylorPolynomial::TaylorPolynomial(std::vector<HomogeneousForm> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw std::domain_error("TaylorPolynomial: needs a degree-0 component");
  for (std::size_t d = 0; d < components_.size(); ++d) {
    if (components_[d].n() != components_.front().n()) throw std::domain_error("TaylorPolynomial: mixed dimensions");
    if (components_[d].m() != static_cast<int>(d)) throw std::domain_error("TaylorPolynomial: component degree mismatch");
  }
}

FormBasis vanishing_space(std::span<const Point> points, int m, double tol) {
  if (points.empty()) throw std::domain_error("vanishing_space: empty point set");
  if (!(tol > 0.0 && tol < 1.0)) throw std::domain_error("vanishing_space: tol must lie in (0, 1)");
  const auto n = static_cast<int>(points.front().dim());
  for (const Point& p : points) require_dim(p, static_cast<std::size_t>(n), "vanishing_space");
  const auto basis = monomial_basis(n, m);
  const Eigen::MatrixXd a = kernels::parallel::evaluation_matrix(points, basis);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();

  FormBasis out;
  out.n = n;
  out.m = m;
  out.tol = tol;
  out.singular_values.assign(sv.data(), sv.data() + sv.size());

  const double cutoff = tol * (sv.size() > 0 ? sv(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;

  const Eigen::MatrixXd& v = svd.matrixV();
  for (Eigen::Index j = rank; j < v.cols(); ++j) {
    std::vector<double> coeffs(v.col(j).data(), v.col(j).data() + v.rows());
    canonicalize_sign(coeffs);
    out.forms.emplace_back(n, m, std::move(coeffs));
  }
  return out;
}

ExactFormBasis vanishing_space_exact(std::span<const RationalPoint> points, int m) {
  if (points.empty()) throw std::domain_error("vanishing_space_exact: empty point set");
  const auto n = static_cast<int>(points.front().size());
  const auto basis = monomial_basis(n, m);
  RationalMatrix rows;
  rows.reserve(points.size());
  for (const RationalPoint& p : points) {
    if (static_cast<int>(p.size()) != n) throw std::domain_error("vanishing_space_exact: mixed dimensions");
    std::vector<Rational> row;
    row.reserve(basis.size());
    for (const Monomial& mono : basis) row.push_back(mono.eval(p));
    rows.push_back(std::move(row));
  }
  ExactFormBasis out;
  out.n = n;
  out.m = m;
  out.basis = exact_null_space(rows, basis.size());
  out.rank = basis.size() - out.basis.size();
  return out;
}

ExactFormBasis vanishing_space_exact(std::span<const Point> points, int m) {
  std::vector<RationalPoint> exact;
  exact.reserve(points.size());
  for (const Point& p : points) {
    RationalPoint q;
    for (double c : p.coords()) q.push_back(exact_rational(c));
    exact.push_back(std::move(q));
  }
  return vanishing_space_exact(exact, m);
}

std::vector<double> compose_truncated(const HomogeneousForm& p, const ArcJet& jet, int K) {
  check_composable(p.n(), p.m(), jet, K);
  const auto powers = coordinate_powers(jet, K, p.m(), false);
  return compose_with_powers(p, powers, K, false, 0.0);
}

std::vector<double> compose_truncated(const TaylorPolynomial& p, const ArcJet& jet, int K) {
  check_composable(p.n(), p.max_degree(), jet, K);
  const auto powers = coordinate_powers(jet, K, p.max_degree(), false);
  std::vector<double> out(static_cast<std::size_t>(K) + 1, 0.0);
  for (const HomogeneousForm& component : p.components()) {
    const auto part = compose_with_powers(component, powers, K, false, 0.0);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += part[k];
  }
  return out;
}

std::optional<LeadingTerm> leading_term(const HomogeneousForm& p, const ArcJet& jet) {
  const int K = jet.order();
  if (p.m() > K) throw std::domain_error("leading_term: jet order must be >= form degree");
  check_composable(p.n(), p.m(), jet, K);
  const auto powers = coordinate_powers(jet, K, p.m(), false);
  const auto coeffs = compose_with_powers(p, powers, K, false, 0.0);

  // Magnitude each coefficient could reach for a form of this size; anything
  // at roundoff level relative to it is a cancellation, not a term.
  double cmax = 0.0;
  for (double c : p.coeffs()) cmax = std::max(cmax, std::abs(c));
  const auto abs_powers = coordinate_powers(jet, K, p.m(), true);
  const auto scale = compose_with_powers(p, abs_powers, K, true, cmax);

  for (int k = 0; k <= K; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (scale[i] > 0.0 && std::abs(coeffs[i]) > kLeadingZeroTolerance * scale[i]) {
      return LeadingTerm{k, coeffs[i]};
    }
  }
  return std::nullopt;
}

}  // namespace flatcert
