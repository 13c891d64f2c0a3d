#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatcert {

/// Tolerance on |‖u‖ − 1| for anything that claims to be a unit vector.
inline constexpr double kUnitTolerance = 1e-12;

/// Thrown when a sampler cannot produce a single admissible point.
class EmptySampleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite coordinate vector in R^n, n >= 1.
///
/// A default-constructed Point is an empty placeholder (dim() == 0) and only
/// exists so that containers can be sized before being filled.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  static Point zero(std::size_t n);
  static Point unit(std::size_t n, std::size_t axis);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  double norm() const;
  double squared_norm() const;
  double dot(const Point& other) const;
  Point normalized() const;
  bool is_unit(double tol = kUnitTolerance) const;

  friend Point operator+(const Point& a, const Point& b);
  friend Point operator-(const Point& a, const Point& b);
  friend Point operator-(const Point& a);
  friend Point operator*(double s, const Point& p);
  friend bool operator==(const Point& a, const Point& b) = default;

 private:
  std::vector<double> coords_;
};

/// Throws std::domain_error unless `p` has dimension `n`.
void require_dim(const Point& p, std::size_t n, const char* what);

/// A nonempty list of unit vectors on S^{n-1}, all of the same dimension.
class DirectionSet {
 public:
  DirectionSet() = default;
  explicit DirectionSet(std::vector<Point> dirs);

  std::size_t size() const { return dirs_.size(); }
  bool empty() const { return dirs_.empty(); }
  std::size_t dim() const { return dirs_.empty() ? 0 : dirs_.front().dim(); }
  const Point& operator[](std::size_t i) const { return dirs_[i]; }
  std::span<const Point> points() const { return dirs_; }

  auto begin() const { return dirs_.begin(); }
  auto end() const { return dirs_.end(); }

  /// First `count` directions (clamped to size()).
  DirectionSet prefix(std::size_t count) const;
  /// The set {±u}; degree-m forms satisfy P(−u) = (−1)^m P(u), so this
  /// carries the same vanishing constraints.
  DirectionSet symmetrized() const;

 private:
  std::vector<Point> dirs_;
};

std::string to_string(const Point& p);

}  // namespace flatcert
