#pragma once

#include <cstddef>
#include <vector>

namespace mero {

/// Gauss-Legendre nodes and weights mapped onto [lower, upper].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point rule, exact for polynomials of degree <= 2n-1. Nodes come from
/// Newton iteration on the three-term Legendre recurrence.
GaussLegendreRule gauss_legendre(std::size_t n, double lower, double upper);

}  // namespace mero
