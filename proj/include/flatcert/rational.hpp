#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace flatcert {

using Rational = boost::multiprecision::cpp_rational;
using RationalPoint = std::vector<Rational>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// The exact value of a double as a dyadic rational.
Rational exact_rational(double x);

/// Rank by fraction-exact Gaussian elimination.
std::size_t exact_rank(RationalMatrix rows);

/// Basis of the right null space {v : A v = 0}, one vector per free column
/// of the reduced row echelon form.
RationalMatrix exact_null_space(RationalMatrix rows, std::size_t cols);

}  // namespace flatcert
