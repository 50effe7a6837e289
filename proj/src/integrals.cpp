#include "mero/integrals.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mero/error.hpp"
#include "mero/quadrature.hpp"

namespace mero {

namespace {

constexpr double kPi = std::numbers::pi;

void require_radius(double r) {
    if (!(r > 0.0 && r <= 1.0))
        throw Error(ErrorKind::BadRadius, "radius " + std::to_string(r) + " outside (0, 1]");
}

void require_inside_pole(const PoleFunction& f, double r) {
    require_radius(r);
    if (f.pole() && r >= *f.pole())
        throw Error(ErrorKind::RadiusBeyondPole, "r = " + std::to_string(r) + " >= p = " + std::to_string(*f.pole()) +
                                                     "; the f and f/z expansions only converge for r < p");
}

// Geometric estimate of sum_{n>N} w_n |c_n|^2 r^{2n} from the last stored
// term, assuming |c_{n+1}|^2 r^2 / |c_n|^2 ~ ratio.
double geometric_tail(double next_weight, double last_scaled, double ratio) {
    if (last_scaled == 0.0) return 0.0;
    if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
    return next_weight * last_scaled * last_scaled * ratio / (1.0 - ratio);
}

double decay_ratio(const PoleFunction& f, double r) {
    const double reach = f.pole().value_or(1.0);
    return (r / reach) * (r / reach);
}

}  // namespace

void QuadratureConfig::validate() const {
    if (radial_nodes < 8) throw Error(ErrorKind::BadParameter, "radial_nodes must be >= 8");
    if (angular_nodes < 16) throw Error(ErrorKind::BadParameter, "angular_nodes must be >= 16");
    if (!(pole_exclusion_radius >= 0.0))
        throw Error(ErrorKind::BadParameter, "pole_exclusion_radius must be >= 0");
}

DiskIntegrand z_over_f_integrand(const PoleFunction& f) {
    auto dq = differentiate(f.inv_series(), 1);
    return {[dq = std::move(dq)](Complex z) { return evaluate(dq, z); }, std::nullopt};
}

DiskIntegrand f_over_z_integrand(const PoleFunction& f) {
    auto q = f.inv_series();
    auto dq = differentiate(q, 1);
    return {[q = std::move(q), dq = std::move(dq)](Complex z) {
                const Complex qz = evaluate(q, z);
                return -evaluate(dq, z) / (qz * qz);
            },
            f.pole()};
}

DiskIntegrand f_integrand(const PoleFunction& f) {
    return {[f](Complex z) { return f.derivative(z); }, f.pole()};
}

IntegralResult dirichlet_series(const TruncatedSeries& g, double r) {
    require_radius(r);
    IntegralResult out;
    out.quantity = Quantity::Dirichlet;
    out.method = Method::Series;
    out.r = r;
    if (g.order() == 0) return out;
    out.value = kPi * weighted_coefficient_sum(g, 1.0, r, 1);
    const std::size_t N = g.order();
    out.truncation_tail_estimate =
        kPi * geometric_tail(static_cast<double>(N + 1), std::abs(g[N]) * std::pow(r, static_cast<double>(N)), r * r);
    return out;
}

IntegralResult dirichlet_quadrature(const DiskIntegrand& g, double r, const QuadratureConfig& cfg) {
    require_radius(r);
    cfg.validate();
    if (g.singularity_modulus && *g.singularity_modulus <= r + cfg.pole_exclusion_radius)
        throw Error(ErrorKind::PoleInDomain, "singularity at |z| = " + std::to_string(*g.singularity_modulus) +
                                                 " inside integration disk of radius " + std::to_string(r));

    const auto radial = gauss_legendre(cfg.radial_nodes, 0.0, r);
    const auto M = cfg.angular_nodes;
    const double dtheta = 2.0 * kPi / static_cast<double>(M);

    double total = 0.0;
    for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
        const double rho = radial.nodes[i];
        double ring = 0.0;
        for (std::size_t j = 0; j < M; ++j) {
            const Complex d = g.derivative(std::polar(rho, dtheta * static_cast<double>(j)));
            ring += std::norm(d);
        }
        total += radial.weights[i] * rho * ring * dtheta;
    }

    IntegralResult out;
    out.value = total;
    out.method = Method::Quadrature;
    out.r = r;
    out.quantity = Quantity::Dirichlet;
    return out;
}

IntegralResult dirichlet_quadrature(const TruncatedSeries& g, double r, const QuadratureConfig& cfg) {
    if (g.order() == 0) {
        require_radius(r);
        cfg.validate();
        return {0.0, Method::Quadrature, 0.0, r, Quantity::Dirichlet};
    }
    auto dg = differentiate(g, 1);
    return dirichlet_quadrature(DiskIntegrand{[dg = std::move(dg)](Complex z) { return evaluate(dg, z); }, std::nullopt},
                                r, cfg);
}

IntegralResult dirichlet_f_over_z_series(const PoleFunction& f, double r) {
    require_inside_pole(f, r);
    const auto a = f_over_z_series(f, f.order());
    IntegralResult out;
    out.quantity = Quantity::Dirichlet;
    out.method = Method::Series;
    out.r = r;
    if (a.order() == 0) return out;
    out.value = kPi * weighted_coefficient_sum(a, 1.0, r, 1);
    const std::size_t N = a.order();
    out.truncation_tail_estimate = kPi * geometric_tail(static_cast<double>(N + 1),
                                                        std::abs(a[N]) * std::pow(r, static_cast<double>(N)),
                                                        decay_ratio(f, r));
    return out;
}

IntegralResult dirichlet_f_series(const PoleFunction& f, double r) {
    require_inside_pole(f, r);
    const auto a = f_over_z_series(f, f.order());
    // f = z * (f/z): coefficient of z^{m+1} in f is entry m of f/z.
    double sum = 0.0;
    double rn = r;
    for (std::size_t m = 0; m <= a.order(); ++m, rn *= r) {
        const double scaled = std::abs(a[m]) * rn;
        sum += static_cast<double>(m + 1) * scaled * scaled;
    }
    IntegralResult out;
    out.quantity = Quantity::Dirichlet;
    out.method = Method::Series;
    out.r = r;
    out.value = kPi * sum;
    const std::size_t N = a.order();
    out.truncation_tail_estimate = kPi * geometric_tail(static_cast<double>(N + 2),
                                                        std::abs(a[N]) * std::pow(r, static_cast<double>(N + 1)),
                                                        decay_ratio(f, r));
    return out;
}

IntegralResult l1_mean_series(const PoleFunction& f, double r) {
    require_radius(r);
    const auto& q = f.inv_series();
    IntegralResult out;
    out.quantity = Quantity::L1Mean;
    out.method = Method::Series;
    out.r = r;
    out.value = 1.0;
    if (q.order() == 0) return out;
    out.value += weighted_coefficient_sum(q, 0.0, r, 1);
    const std::size_t N = q.order();
    out.truncation_tail_estimate = geometric_tail(1.0, std::abs(q[N]) * std::pow(r, static_cast<double>(N)), r * r);
    return out;
}

IntegralResult l1_mean_quadrature(const PoleFunction& f, double r, const QuadratureConfig& cfg, L1Route route) {
    require_radius(r);
    cfg.validate();
    if (route == L1Route::DirectReciprocal && f.pole() && std::abs(r - *f.pole()) < cfg.pole_exclusion_radius)
        throw Error(ErrorKind::CircleThroughPole, "circle |z| = " + std::to_string(r) + " passes within " +
                                                      std::to_string(cfg.pole_exclusion_radius) + " of the pole");

    const auto M = cfg.angular_nodes;
    const double dtheta = 2.0 * kPi / static_cast<double>(M);
    double sum = 0.0;
    for (std::size_t j = 0; j < M; ++j) {
        const Complex z = std::polar(r, dtheta * static_cast<double>(j));
        if (route == L1Route::InverseSeries) {
            sum += std::norm(f.z_over_f(z));
        } else {
            sum += r * r / std::norm(f.value(z));
        }
    }

    IntegralResult out;
    out.value = sum / static_cast<double>(M);
    out.method = Method::Quadrature;
    out.r = r;
    out.quantity = Quantity::L1Mean;
    return out;
}

}  // namespace mero
