#include "flatcert/point.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace flatcert {

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::domain_error("Point: dimension must be >= 1");
  for (double c : coords_) {
    if (!std::isfinite(c)) throw std::domain_error("Point: non-finite coordinate");
  }
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

Point Point::zero(std::size_t n) { return Point(std::vector<double>(n, 0.0)); }

Point Point::unit(std::size_t n, std::size_t axis) {
  if (axis >= n) throw std::domain_error("Point::unit: axis out of range");
  std::vector<double> c(n, 0.0);
  c[axis] = 1.0;
  return Point(std::move(c));
}

double Point::squared_norm() const {
  double s = 0.0;
  for (double c : coords_) s += c * c;
  return s;
}

// Scaled so that coordinates near 1e-160 do not underflow when squared.
double Point::norm() const {
  double scale = 0.0;
  for (double c : coords_) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (double c : coords_) {
    const double r = c / scale;
    s += r * r;
  }
  return scale * std::sqrt(s);
}

double Point::dot(const Point& other) const {
  require_dim(other, dim(), "Point::dot");
  double s = 0.0;
  for (std::size_t i = 0; i < coords_.size(); ++i) s += coords_[i] * other.coords_[i];
  return s;
}

Point Point::normalized() const {
  const double r = norm();
  if (r == 0.0) throw std::domain_error("Point::normalized: zero vector");
  std::vector<double> c(coords_);
  for (double& v : c) v /= r;
  return Point(std::move(c));
}

bool Point::is_unit(double tol) const { return std::abs(norm() - 1.0) <= tol; }

Point operator+(const Point& a, const Point& b) {
  require_dim(b, a.dim(), "Point::operator+");
  std::vector<double> c(a.coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return Point(std::move(c));
}

Point operator-(const Point& a, const Point& b) {
  require_dim(b, a.dim(), "Point::operator-");
  std::vector<double> c(a.coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
  return Point(std::move(c));
}

Point operator-(const Point& a) { return -1.0 * a; }

Point operator*(double s, const Point& p) {
  std::vector<double> c(p.coords_);
  for (double& v : c) v *= s;
  return Point(std::move(c));
}

void require_dim(const Point& p, std::size_t n, const char* what) {
  if (p.dim() != n) {
    std::ostringstream os;
    os << what << ": expected dimension " << n << ", got " << p.dim();
    throw std::domain_error(os.str());
  }
}

DirectionSet::DirectionSet(std::vector<Point> dirs) : dirs_(std::move(dirs)) {
  if (dirs_.empty()) return;
  const std::size_t n = dirs_.front().dim();
  for (const Point& d : dirs_) {
    require_dim(d, n, "DirectionSet");
    if (!d.is_unit()) throw std::domain_error("DirectionSet: non-unit direction " + to_string(d));
  }
}

DirectionSet DirectionSet::prefix(std::size_t count) const {
  count = std::min(count, dirs_.size());
  return DirectionSet(std::vector<Point>(dirs_.begin(), dirs_.begin() + static_cast<std::ptrdiff_t>(count)));
}

DirectionSet DirectionSet::symmetrized() const {
  std::vector<Point> out;
  out.reserve(2 * dirs_.size());
  for (const Point& d : dirs_) {
    out.push_back(d);
    out.push_back(-d);
  }
  return DirectionSet(std::move(out));
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? ", " : "") << p[i];
  os << ')';
  return os.str();
}

}  // namespace flatcert
