#include "mero/functions.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "mero/error.hpp"

namespace mero {

namespace {

void require_pole_parameter(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw Error(ErrorKind::BadParameter, "pole " + std::to_string(p) + " outside (0, 1)");
}

void require_lambda(double lambda) {
    if (!(lambda > 0.0 && lambda <= 1.0))
        throw Error(ErrorKind::BadParameter, "lambda " + std::to_string(lambda) + " outside (0, 1]");
}

void require_order(std::size_t order) {
    if (order < 2) throw Error(ErrorKind::BadParameter, "extremal constructions need order >= 2");
}

}  // namespace

PoleScale::PoleScale(double p) {
    require_pole_parameter(p);
    const double ratio = (1.0 - p) / (1.0 + p);
    value_ = ratio * ratio;
}

PoleFunction::PoleFunction(TruncatedSeries inv_series, std::optional<double> pole)
    : inv_(std::move(inv_series)), pole_(pole) {
    if (inv_[0] != Complex{1.0, 0.0})
        throw Error(ErrorKind::BadParameter, "z/f must have constant term exactly 1");
    if (pole_) {
        require_pole_parameter(*pole_);
        const double residual = std::abs(evaluate(inv_, *pole_));
        if (residual > kPoleResidualTolerance)
            throw Error(ErrorKind::PoleMismatch,
                        "|z/f(p)| = " + std::to_string(residual) + " at declared pole p = " + std::to_string(*pole_));
    }
}

Complex PoleFunction::value(Complex z) const { return z / evaluate(inv_, z); }

Complex PoleFunction::derivative(Complex z) const {
    const Complex q = evaluate(inv_, z);
    const Complex dq = evaluate(differentiate(inv_, 1), z);
    return (q - z * dq) / (q * q);
}

PoleFunction sigma_extremal(double p, std::size_t order) {
    require_pole_parameter(p);
    require_order(order);
    const Complex b[] = {1.0, -(1.0 / p + p), 1.0};
    return PoleFunction(TruncatedSeries::padded(b, order), p);
}

PoleFunction subclass_extremal(double p, double lambda, std::size_t order) {
    require_pole_parameter(p);
    require_lambda(lambda);
    require_order(order);
    const double lm = lambda * PoleScale(p).value();
    const Complex b[] = {1.0, -(1.0 / p + lm * p), lm};
    return PoleFunction(TruncatedSeries::padded(b, order), p);
}

PoleFunction build_koebe_rotation(double theta, std::size_t order) {
    require_order(order);
    const Complex e = std::polar(1.0, theta);
    const Complex b[] = {1.0, -2.0 * e, e * e};
    return PoleFunction(TruncatedSeries::padded(b, order), std::nullopt);
}

PoleFunction from_inverse_coefficients(std::span<const Complex> b, std::optional<double> pole) {
    std::vector<Complex> c;
    c.reserve(b.size() + 1);
    c.emplace_back(1.0, 0.0);
    c.insert(c.end(), b.begin(), b.end());
    return PoleFunction(TruncatedSeries(std::move(c)), pole);
}

TruncatedSeries f_over_z_series(const PoleFunction& f, std::size_t order) {
    // Never extends past the stored order: the tail of z/f is unknown there.
    return reciprocal(f.inv_series().truncated(order));
}

}  // namespace mero
