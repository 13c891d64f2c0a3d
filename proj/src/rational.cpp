#include "flatcert/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace flatcert {

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw std::domain_error("exact_rational: non-finite value");
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);  // x = mantissa * 2^exponent
  // 53 bits of mantissa as an integer.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  Rational r(scaled);
  const int shift = exponent - 53;
  boost::multiprecision::cpp_int pow2 = 1;
  pow2 <<= std::abs(shift);
  if (shift >= 0) {
    r *= Rational(pow2);
  } else {
    r /= Rational(pow2);
  }
  return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> reduce(RationalMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[row], a[pivot]);
    const Rational inv = 1 / a[row][col];
    for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational factor = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t column_count(const RationalMatrix& a) {
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != cols) throw std::domain_error("rational matrix: ragged rows");
  }
  return cols;
}

}  // namespace

std::size_t exact_rank(RationalMatrix rows) {
  const std::size_t cols = column_count(rows);
  return reduce(rows, cols).size();
}

RationalMatrix exact_null_space(RationalMatrix rows, std::size_t cols) {
  if (!rows.empty() && column_count(rows) != cols) {
    throw std::domain_error("exact_null_space: column count mismatch");
  }
  const auto pivots = reduce(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace flatcert
