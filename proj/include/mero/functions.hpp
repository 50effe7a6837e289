#pragma once

#include <optional>
#include <span>

#include "mero/series.hpp"

namespace mero {

/// Maximum |z/f(p)| accepted as "z/f vanishes at the declared pole".
inline constexpr double kPoleResidualTolerance = 1e-8;

/// mu = ((1-p)/(1+p))^2, the radius scale of the U_P_LAMBDA subclass.
class PoleScale {
public:
    /// Throws BadParameter unless 0 < p < 1.
    explicit PoleScale(double p);
    double value() const noexcept { return value_; }

private:
    double value_;
};

/// A member of A(p) (or of S when `pole` is empty), stored as the Taylor
/// series of z/f. The z/f series is analytic on the whole unit disk and the
/// pole of f shows up as a zero of z/f, so no Laurent bookkeeping is needed.
///
/// Constructors only enforce the normalization z/f(0) = 1 and the pole
/// placement; univalence is checked on demand (see criteria.hpp).
class PoleFunction {
public:
    /// Validates normalization and, when a pole is given, p in (0,1) and
    /// |z/f(p)| <= kPoleResidualTolerance (PoleMismatch otherwise).
    PoleFunction(TruncatedSeries inv_series, std::optional<double> pole);

    const TruncatedSeries& inv_series() const noexcept { return inv_; }
    std::optional<double> pole() const noexcept { return pole_; }
    std::size_t order() const noexcept { return inv_.order(); }

    /// b_n, the coefficient of z^n in z/f (b_0 = 1).
    Complex b(std::size_t n) const { return n <= inv_.order() ? inv_[n] : Complex{}; }

    /// z/f(z); finite everywhere in the disk.
    Complex z_over_f(Complex z) const { return evaluate(inv_, z); }

    /// f(z) = z / (z/f)(z). Infinite at the pole.
    Complex value(Complex z) const;

    /// f'(z) from the z/f series: (q - z q') / q^2 with q = z/f.
    Complex derivative(Complex z) const;

private:
    TruncatedSeries inv_;
    std::optional<double> pole_;
};

/// -pz/((z-p)(1-pz)), extremal for SIGMA_P: z/f = 1 - (1/p+p)z + z^2.
PoleFunction sigma_extremal(double p, std::size_t order = kDefaultOrder);

/// Extremal function of U_P_LAMBDA: z/f = 1 - (1/p + lambda mu p) z + lambda mu z^2.
PoleFunction subclass_extremal(double p, double lambda, std::size_t order = kDefaultOrder);

/// Koebe rotation z/(1 - e^{i theta} z)^2; analytic, no pole.
PoleFunction build_koebe_rotation(double theta, std::size_t order = kDefaultOrder);

/// Generic member from b_1..b_N (b_0 = 1 implied).
PoleFunction from_inverse_coefficients(std::span<const Complex> b, std::optional<double> pole);

/// f/z = 1 + a_2 z + a_3 z^2 + ... truncated to min(order, f.order());
/// entry n is a_{n+1}. Only meaningful for |z| < p when f has a pole.
TruncatedSeries f_over_z_series(const PoleFunction& f, std::size_t order);

}  // namespace mero
