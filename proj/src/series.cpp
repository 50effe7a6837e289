#include "mero/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mero/error.hpp"

namespace mero {

namespace {

bool finite(const Complex& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

TruncatedSeries::TruncatedSeries() : coeffs_(1, Complex{0.0, 0.0}) {}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.emplace_back(0.0, 0.0);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (!finite(coeffs_[n]))
            throw Error(ErrorKind::NonFinite, "coefficient " + std::to_string(n) + " is not finite");
    }
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
    return TruncatedSeries(std::vector<Complex>(order + 1));
}

TruncatedSeries TruncatedSeries::unit(std::size_t order) {
    std::vector<Complex> c(order + 1);
    c[0] = 1.0;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::padded(std::span<const Complex> coeffs, std::size_t order) {
    std::vector<Complex> c(order + 1);
    std::copy_n(coeffs.begin(), std::min(coeffs.size(), order + 1), c.begin());
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    return padded(std::span(coeffs_).first(std::min(order + 1, coeffs_.size())), std::min(order, this->order()));
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    const auto ca = a.coeffs();
    const auto cb = b.coeffs();
    std::vector<Complex> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k <= n; ++k) acc += ca[k] * cb[n - k];
        out[n] = acc;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
    const auto c = a.coeffs();
    if (std::abs(c[0]) < kReciprocalGuard)
        throw Error(ErrorKind::NearZeroConstantTerm, "|c0| below reciprocal guard");
    const Complex inv0 = 1.0 / c[0];
    std::vector<Complex> r(c.size());
    r[0] = inv0;
    for (std::size_t n = 1; n < c.size(); ++n) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 1; k <= n; ++k) acc += c[k] * r[n - k];
        r[n] = -inv0 * acc;
    }
    return TruncatedSeries(std::move(r));
}

TruncatedSeries differentiate(const TruncatedSeries& a, std::size_t times) {
    if (times > a.order())
        throw Error(ErrorKind::OrderUnderflow,
                    "cannot differentiate order " + std::to_string(a.order()) + " series " +
                        std::to_string(times) + " times");
    std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t pass = 0; pass < times; ++pass) {
        for (std::size_t n = 1; n < c.size(); ++n) c[n - 1] = static_cast<double>(n) * c[n];
        c.pop_back();
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries antiderivative(const TruncatedSeries& a) {
    const auto c = a.coeffs();
    std::vector<Complex> out(c.size() + 1);
    for (std::size_t n = 0; n < c.size(); ++n) out[n + 1] = c[n] / static_cast<double>(n + 1);
    return TruncatedSeries(std::move(out));
}

Complex evaluate(const TruncatedSeries& a, Complex z) {
    const auto c = a.coeffs();
    Complex acc = c.back();
    for (std::size_t n = c.size() - 1; n-- > 0;) acc = acc * z + c[n];
    return acc;
}

double weighted_coefficient_sum(const TruncatedSeries& a, double t, double r, std::size_t start) {
    if (!(r > 0.0 && r <= 1.0))
        throw Error(ErrorKind::BadRadius, "radius " + std::to_string(r) + " outside (0, 1]");
    if (start > a.order())
        throw Error(ErrorKind::BadParameter, "start index beyond series order");
    if (start == 0 && t < 0.0)
        throw Error(ErrorKind::BadParameter, "n^t undefined at n = 0 for t < 0");

    const auto c = a.coeffs();
    double sum = 0.0;
    double rn = std::pow(r, static_cast<double>(start));
    for (std::size_t n = start; n < c.size(); ++n, rn *= r) {
        // 0^0 = 1 keeps |c0|^2 for t = 0; 0^t = 0 drops it for t > 0.
        const double weight = (n == 0) ? (t == 0.0 ? 1.0 : 0.0) : std::pow(static_cast<double>(n), t);
        // (|c_n| r^n)^2 rather than |c_n|^2 r^{2n}: f/z coefficients grow like p^{-n}.
        const double scaled = std::abs(c[n]) * rn;
        sum += weight * scaled * scaled;
    }
    return sum;
}

}  // namespace mero
