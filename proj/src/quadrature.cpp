#include "mero/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "mero/error.hpp"

namespace mero {

GaussLegendreRule gauss_legendre(std::size_t n, double lower, double upper) {
    if (n == 0) throw Error(ErrorKind::BadParameter, "Gauss-Legendre rule needs at least one node");

    GaussLegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
    const double mid = 0.5 * (upper + lower);
    const double half = 0.5 * (upper - lower);
    const auto nd = static_cast<double>(n);

    // P_n(x) and P_n'(x) via the three-term recurrence.
    const auto legendre = [n, nd](double x) {
        double p0 = 1.0;
        double p1 = 0.0;
        for (std::size_t j = 1; j <= n; ++j) {
            const double p2 = p1;
            p1 = p0;
            const auto jd = static_cast<double>(j);
            p0 = ((2.0 * jd - 1.0) * x * p1 - (jd - 1.0) * p2) / jd;
        }
        return std::pair{p0, nd * (x * p0 - p1) / (x * x - 1.0)};
    };

    // Roots are symmetric; solve for the upper half only.
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [value, slope] = legendre(x);
            const double step = value / slope;
            x -= step;
            if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
        }
        const double dp = legendre(x).second;
        const double w = 2.0 * half / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = mid - half * x;
        rule.nodes[n - 1 - i] = mid + half * x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace mero
