#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mero {

using Complex = std::complex<double>;

/// Default truncation degree for canonical constructions.
inline constexpr std::size_t kDefaultOrder = 64;

/// Smallest |c0| accepted by reciprocal().
inline constexpr double kReciprocalGuard = 1e-9;

/// Dense Taylor polynomial c_0 + c_1 z + ... + c_N z^N over complex
/// coefficients. Immutable once built; every operation returns a new value.
///
/// Arithmetic between operands of different order truncates to the shorter
/// order: unknown tail coefficients are never invented.
class TruncatedSeries {
public:
    /// Order-0 zero series.
    TruncatedSeries();

    /// Throws Error(NonFinite) if any coefficient has a NaN/inf component.
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    static TruncatedSeries zero(std::size_t order);
    static TruncatedSeries unit(std::size_t order);

    /// Copies `coeffs` and zero-pads (or truncates) to `order`.
    static TruncatedSeries padded(std::span<const Complex> coeffs, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    const Complex& operator[](std::size_t n) const { return coeffs_.at(n); }

    /// Same coefficients up to min(order(), order).
    TruncatedSeries truncated(std::size_t order) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Complex> coeffs_;
};

/// Cauchy product truncated to min(a.order(), b.order()).
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// Series r with a*r = 1 + O(z^{N+1}). Throws NearZeroConstantTerm when
/// |c0| < kReciprocalGuard.
TruncatedSeries reciprocal(const TruncatedSeries& a);

/// Term-by-term derivative applied `times` times; result order is
/// a.order() - times. Throws OrderUnderflow if times > a.order().
TruncatedSeries differentiate(const TruncatedSeries& a, std::size_t times = 1);

/// Term-by-term antiderivative with zero constant; order grows by one.
TruncatedSeries antiderivative(const TruncatedSeries& a);

/// Horner evaluation.
Complex evaluate(const TruncatedSeries& a, Complex z);

/// sum_{n=start..N} n^t |c_n|^2 r^{2n}, with 0^t |c_0|^2 taken as 0 for t > 0.
/// Throws BadRadius unless 0 < r <= 1 and BadParameter if start > order.
double weighted_coefficient_sum(const TruncatedSeries& a, double t, double r, std::size_t start);

}  // namespace mero
