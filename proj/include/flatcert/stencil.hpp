#pragma once

#include <span>
#include <vector>

namespace flatcert {

/// Finite-difference weights for the `derivative`-th derivative at x0 over
/// arbitrary distinct nodes (Fornberg's recursion).
std::vector<double> fornberg_weights(double x0, std::span<const double> nodes, int derivative);

/// Largest derivative order with a tabulated central stencil.
inline constexpr int kMaxStencilOrder = 6;

/// Second-order-accurate central stencil for the given derivative order, on
/// offsets −p..p with p = (order + 1) / 2 (p = 0 for order 0). Unit step.
std::span<const double> central_stencil(int order);

}  // namespace flatcert
