#include "flatcert/stencil.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace flatcert {

std::vector<double> fornberg_weights(double x0, std::span<const double> nodes, int derivative) {
  const std::size_t n = nodes.size();
  if (derivative < 0) throw std::domain_error("fornberg_weights: negative derivative order");
  const auto order = static_cast<std::size_t>(derivative);
  if (n <= order) throw std::domain_error("fornberg_weights: need more nodes than the derivative order");

  std::vector<std::vector<double>> c(n, std::vector<double>(order + 1, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min(i, order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      if (c3 == 0.0) throw std::domain_error("fornberg_weights: repeated node");
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k) {
          c[i][k] = c1 * (static_cast<double>(k) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - static_cast<double>(k) * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = c[i][order];
  return w;
}

namespace {

constexpr std::array<double, 1> kD0{1.0};
constexpr std::array<double, 3> kD1{-0.5, 0.0, 0.5};
constexpr std::array<double, 3> kD2{1.0, -2.0, 1.0};
constexpr std::array<double, 5> kD3{-0.5, 1.0, 0.0, -1.0, 0.5};
constexpr std::array<double, 5> kD4{1.0, -4.0, 6.0, -4.0, 1.0};
constexpr std::array<double, 7> kD5{-0.5, 2.0, -2.5, 0.0, 2.5, -2.0, 0.5};
constexpr std::array<double, 7> kD6{1.0, -6.0, 15.0, -20.0, 15.0, -6.0, 1.0};

}  // namespace

std::span<const double> central_stencil(int order) {
  switch (order) {
    case 0: return kD0;
    case 1: return kD1;
    case 2: return kD2;
    case 3: return kD3;
    case 4: return kD4;
    case 5: return kD5;
    case 6: return kD6;
    default: throw std::domain_error("central_stencil: derivative order beyond the stencil table");
  }
}

}  // namespace flatcert
