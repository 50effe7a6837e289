#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "mero/functions.hpp"
#include "mero/series.hpp"

namespace mero {

struct QuadratureConfig {
    std::size_t radial_nodes = 64;    ///< Gauss-Legendre nodes on [0, r]
    std::size_t angular_nodes = 256;  ///< uniform trapezoid nodes on the circle
    double pole_exclusion_radius = 0.02;

    /// Throws BadParameter unless radial_nodes >= 8, angular_nodes >= 16 and
    /// pole_exclusion_radius >= 0.
    void validate() const;
};

enum class Method { Series, Quadrature };
enum class Quantity { Dirichlet, L1Mean };

struct IntegralResult {
    double value = 0.0;
    Method method = Method::Series;
    /// Bound on the neglected series tail; +inf when it cannot be bounded
    /// (r = 1 with a nonzero last coefficient). Always 0 for quadrature.
    double truncation_tail_estimate = 0.0;
    double r = 0.0;
    Quantity quantity = Quantity::Dirichlet;
};

/// An analytic function on a disk, described by its derivative. When the
/// function has a singularity, `singularity_modulus` is its distance from 0.
struct DiskIntegrand {
    std::function<Complex(Complex)> derivative;
    std::optional<double> singularity_modulus;
};

/// (z/f)'; singularity-free on the closed unit disk.
DiskIntegrand z_over_f_integrand(const PoleFunction& f);
/// (f/z)' = -q'/q^2 with q = z/f; singular at the pole.
DiskIntegrand f_over_z_integrand(const PoleFunction& f);
/// f' ; singular at the pole.
DiskIntegrand f_integrand(const PoleFunction& f);

/// pi * sum_{n>=1} n |c_n|^2 r^{2n}. Throws BadRadius outside (0, 1].
IntegralResult dirichlet_series(const TruncatedSeries& g, double r);

/// Gauss-Legendre (radius) x trapezoid (angle) quadrature of |g'|^2 over the
/// disk of radius r. Throws PoleInDomain when a singularity lies within
/// r + pole_exclusion_radius.
IntegralResult dirichlet_quadrature(const DiskIntegrand& g, double r, const QuadratureConfig& cfg = {});
IntegralResult dirichlet_quadrature(const TruncatedSeries& g, double r, const QuadratureConfig& cfg = {});

/// pi * sum_{n>=1} n |a_{n+1}|^2 r^{2n} from the f/z coefficients.
/// Throws RadiusBeyondPole if r >= p.
IntegralResult dirichlet_f_over_z_series(const PoleFunction& f, double r);

/// pi * sum_{n>=1} n |a_n|^2 r^{2n} with a_1 = 1. Throws RadiusBeyondPole if r >= p.
IntegralResult dirichlet_f_series(const PoleFunction& f, double r);

/// L1(r, f) = 1 + sum_{n>=1} |b_n|^2 r^{2n} (Parseval on z/f).
IntegralResult l1_mean_series(const PoleFunction& f, double r);

enum class L1Route {
    InverseSeries,     ///< average |z/f(re^{it})|^2; no singularity anywhere
    DirectReciprocal,  ///< average r^2/|f(re^{it})|^2; diagnostic only
};

/// r^2 * (1/2pi) \int dt / |f(re^{it})|^2 by the trapezoid rule.
/// The DirectReciprocal route throws CircleThroughPole when |r - p| is below
/// the configured exclusion radius.
IntegralResult l1_mean_quadrature(const PoleFunction& f, double r, const QuadratureConfig& cfg = {},
                                  L1Route route = L1Route::InverseSeries);

}  // namespace mero
