#include "mero/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mero/error.hpp"
#include "mero/integrals.hpp"

namespace mero {

namespace {

constexpr double kPi = std::numbers::pi;

void require_p(double p) {
    if (!(p > 0.0 && p < 1.0)) throw Error(ErrorKind::BadParameter, "p = " + std::to_string(p) + " outside (0, 1)");
}

void require_r(double r) {
    if (!(r > 0.0 && r <= 1.0)) throw Error(ErrorKind::BadRadius, "r = " + std::to_string(r) + " outside (0, 1]");
}

void require_lambda(double lambda) {
    if (!(lambda > 0.0 && lambda <= 1.0))
        throw Error(ErrorKind::BadParameter, "lambda = " + std::to_string(lambda) + " outside (0, 1]");
}

void require_below_pole(double r, double p) {
    require_p(p);
    if (!(r > 0.0)) throw Error(ErrorKind::BadRadius, "r must be positive");
    if (r >= p)
        throw Error(ErrorKind::RadiusBeyondPole, "r = " + std::to_string(r) + " >= p = " + std::to_string(p));
}

// Common prefactor pi p^2 r^2 / (1 - p^2)^2 of the two f and f/z maxima.
double pole_disk_prefactor(double r, double p) {
    const double one_minus_p2 = 1.0 - p * p;
    return kPi * p * p * r * r / (one_minus_p2 * one_minus_p2);
}

double square(double x) { return x * x; }

}  // namespace

std::string_view to_string(ClassKind kind) noexcept {
    switch (kind) {
    case ClassKind::SigmaP: return "SIGMA_P";
    case ClassKind::UpLambda: return "U_P_LAMBDA";
    case ClassKind::S: return "S";
    case ClassKind::CoP: return "CO_P";
    case ClassKind::SigmaStarP: return "SIGMA_STAR_P";
    }
    return "?";
}

ClassKind parse_class_kind(std::string_view name) {
    for (auto k : {ClassKind::SigmaP, ClassKind::UpLambda, ClassKind::S, ClassKind::CoP, ClassKind::SigmaStarP})
        if (to_string(k) == name) return k;
    throw Error(ErrorKind::ParseError, "unknown class '" + std::string(name) + "'");
}

ClassSpec ClassSpec::sigma_p(double p) {
    require_p(p);
    return {ClassKind::SigmaP, p, std::nullopt, std::nullopt};
}

ClassSpec ClassSpec::up_lambda(double p, double lambda) {
    require_p(p);
    require_lambda(lambda);
    return {ClassKind::UpLambda, p, lambda, std::nullopt};
}

ClassSpec ClassSpec::s() { return {ClassKind::S, std::nullopt, std::nullopt, std::nullopt}; }

ClassSpec ClassSpec::co_p(double p) {
    require_p(p);
    return {ClassKind::CoP, p, std::nullopt, std::nullopt};
}

ClassSpec ClassSpec::sigma_star_p(double p, double w0) {
    require_p(p);
    const double lo = -p / square(1.0 - p);
    const double hi = -p / square(1.0 + p);
    if (!(w0 >= lo && w0 <= hi))
        throw Error(ErrorKind::BadParameter, "w0 = " + std::to_string(w0) + " outside [" + std::to_string(lo) + ", " +
                                                 std::to_string(hi) + "]");
    return {ClassKind::SigmaStarP, p, std::nullopt, w0};
}

BoundReport make_report(std::string quantity_name, double computed, double bound, const ClassSpec& cls,
                        std::optional<double> r, const BoundTolerances& tol) {
    BoundReport rep;
    rep.quantity_name = std::move(quantity_name);
    rep.computed = computed;
    rep.bound = bound;
    rep.slack = bound - computed;
    rep.satisfied = rep.slack >= -tol.satisfaction;
    rep.sharp = rep.satisfied && std::abs(rep.slack) <= tol.sharpness_rel * std::abs(bound);
    rep.class_spec = cls;
    rep.r = r;
    return rep;
}

double jenkins_bound(int n, double p) {
    require_p(p);
    if (n < 2) throw Error(ErrorKind::BadParameter, "Jenkins bound needs n >= 2");
    return (1.0 - std::pow(p, 2 * n)) / ((1.0 - p * p) * std::pow(p, n - 1));
}

double jenkins_bound_geometric(int n, double p) {
    require_p(p);
    if (n < 2) throw Error(ErrorKind::BadParameter, "Jenkins bound needs n >= 2");
    double sum = 0.0;
    double term = 1.0;
    for (int k = 0; k < n; ++k, term *= p * p) sum += term;
    return sum / std::pow(p, n - 1);
}

BoundReport gronwall_check(const PoleFunction& f, double tolerance) {
    double sum = 0.0;
    for (std::size_t n = 1; n < f.order(); ++n) sum += static_cast<double>(n) * std::norm(f.b(n + 1));
    const ClassSpec cls = f.pole() ? ClassSpec::sigma_p(*f.pole()) : ClassSpec::s();
    return make_report("gronwall", sum, 1.0, cls, std::nullopt, {tolerance, tolerance});
}

BoundReport weighted_sum_check(const PoleFunction& f, double lambda, double t, double r) {
    if (t > 2.0) throw Error(ErrorKind::BadParameter, "weighted-sum bound only holds for t <= 2");
    if (!f.pole()) throw Error(ErrorKind::NoPole, "weighted-sum bound needs mu, which needs a pole");
    require_r(r);
    const ClassSpec cls = ClassSpec::up_lambda(*f.pole(), lambda);
    const double lm = lambda * PoleScale(*f.pole()).value();
    const double bound = std::pow(2.0, t) * lm * lm * std::pow(r, 4.0);
    const double computed = f.order() >= 2 ? weighted_coefficient_sum(f.inv_series(), t, r, 2) : 0.0;
    return make_report("weighted_sum", computed, bound, cls, r);
}

double max_dirichlet_zf_sigma_p(double r, double p) {
    require_r(r);
    require_p(p);
    return kPi * r * r * (square(1.0 / p + p) + 2.0 * r * r);
}

double max_dirichlet_zf_up_lambda(double r, double p, double lambda) {
    require_r(r);
    require_lambda(lambda);
    const double lm = lambda * PoleScale(p).value();
    return kPi * r * r * (square(1.0 / p + lm * p) + 2.0 * lm * lm * r * r);
}

double max_dirichlet_zf_s(double r) {
    require_r(r);
    return 2.0 * kPi * r * r * (r * r + 2.0);
}

double max_dirichlet_f_over_z(double r, double p) {
    require_below_pole(r, p);
    const double r2 = r * r;
    const double p2 = p * p;
    return pole_disk_prefactor(r, p) *
           (1.0 / square(p2 - r2) - 2.0 / square(1.0 - r2) + p2 * p2 / square(1.0 - p2 * r2));
}

double max_dirichlet_f(double r, double p) {
    require_below_pole(r, p);
    const double r2 = r * r;
    const double p2 = p * p;
    return pole_disk_prefactor(r, p) * (p2 / square(p2 - r2) - 2.0 / square(1.0 - r2) + p2 / square(1.0 - p2 * r2));
}

double max_dirichlet_f_over_z_s(double r) {
    if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::BadRadius, "r must lie in (0, 1)");
    const double r2 = r * r;
    return 2.0 * kPi * r2 * (r2 + 2.0) / std::pow(1.0 - r2, 4.0);
}

double max_dirichlet_f_s(double r) {
    if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::BadRadius, "r must lie in (0, 1)");
    const double r2 = r * r;
    return kPi * r2 * (r2 * r2 + 4.0 * r2 + 1.0) / std::pow(1.0 - r2, 4.0);
}

double l1_bound(const ClassSpec& cls, double r) {
    require_r(r);
    const double r2 = r * r;
    switch (cls.kind()) {
    case ClassKind::SigmaP:
    case ClassKind::CoP:
    case ClassKind::SigmaStarP: return 1.0 + square(1.0 / *cls.p() + *cls.p()) * r2 + r2 * r2;
    case ClassKind::S: return 1.0 + 4.0 * r2 + r2 * r2;
    case ClassKind::UpLambda: {
        const double p = *cls.p();
        const double lm = *cls.lambda() * PoleScale(p).value();
        return 1.0 + r2 * square(1.0 / p + lm * p) + lm * lm * r2 * r2;
    }
    }
    throw Error(ErrorKind::BadParameter, "unhandled class");
}

std::string_view to_string(BoundQuantity q) noexcept {
    switch (q) {
    case BoundQuantity::DirichletZf: return "DIRICHLET_ZF";
    case BoundQuantity::L1: return "L1";
    }
    return "?";
}

double class_bound(const ClassSpec& cls, BoundQuantity quantity, double r) {
    if (quantity == BoundQuantity::L1) return l1_bound(cls, r);
    switch (cls.kind()) {
    case ClassKind::SigmaP:
    case ClassKind::CoP:
    case ClassKind::SigmaStarP: return max_dirichlet_zf_sigma_p(r, *cls.p());
    case ClassKind::UpLambda: return max_dirichlet_zf_up_lambda(r, *cls.p(), *cls.lambda());
    case ClassKind::S: return max_dirichlet_zf_s(r);
    }
    throw Error(ErrorKind::BadParameter, "unhandled class");
}

BoundReport check_bound(const PoleFunction& f, const ClassSpec& cls, BoundQuantity quantity, double r,
                        const BoundTolerances& tol) {
    if (cls.p()) {
        if (!f.pole())
            throw Error(ErrorKind::ClassMismatch, std::string(to_string(cls.kind())) + " needs a function with a pole");
        if (std::abs(*f.pole() - *cls.p()) > 1e-12)
            throw Error(ErrorKind::ClassMismatch, "function pole " + std::to_string(*f.pole()) +
                                                      " differs from class p " + std::to_string(*cls.p()));
    } else if (f.pole()) {
        throw Error(ErrorKind::ClassMismatch, "class S members have no pole");
    }

    const double computed = quantity == BoundQuantity::L1 ? l1_mean_series(f, r).value
                                                          : dirichlet_series(f.inv_series(), r).value;
    return make_report(std::string(to_string(quantity)), computed, class_bound(cls, quantity, r), cls, r, tol);
}

}  // namespace mero
