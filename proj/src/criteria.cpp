#include "mero/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mero/error.hpp"

namespace mero {

DiskGrid::DiskGrid(double radius, std::size_t radial_count, std::size_t angular_count, std::optional<double> pole,
                   double pole_guard)
    : radius_(radius), radial_(radial_count), angular_(angular_count), pole_(pole), guard_(pole_guard) {
    if (!(radius > 0.0 && radius < 1.0))
        throw Error(ErrorKind::BadParameter, "grid radius " + std::to_string(radius) + " outside (0, 1)");
    if (radial_count == 0 || angular_count == 0) throw Error(ErrorKind::BadParameter, "grid counts must be positive");
    if (!(pole_guard >= 0.0)) throw Error(ErrorKind::BadParameter, "pole_guard must be >= 0");

    points_.reserve(radial_count * angular_count);
    const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(angular_count);
    for (std::size_t i = 0; i < radial_count; ++i) {
        const double rho = radius * static_cast<double>(i + 1) / static_cast<double>(radial_count);
        for (std::size_t j = 0; j < angular_count; ++j) {
            const Complex z = std::polar(rho, dtheta * static_cast<double>(j));
            if (pole && std::abs(z - *pole) < pole_guard) continue;
            points_.push_back(z);
        }
    }
}

DiskGrid DiskGrid::for_function(const PoleFunction& f) {
    return DiskGrid(kDefaultRadius, kDefaultRadial, kDefaultAngular, f.pole(), kDefaultPoleGuard);
}

std::string_view to_string(Criterion c) noexcept {
    switch (c) {
    case Criterion::UpLambdaMembership: return "subclass_membership";
    case Criterion::UnivalenceCriterion: return "univalence_criterion";
    case Criterion::DiskSubordination: return "disk_subordination";
    case Criterion::Injectivity: return "injectivity_oracle";
    }
    return "?";
}

std::string_view verdict_label(const CriterionVerdict& v) noexcept {
    if (v.holds) return "PASS";
    switch (v.criterion) {
    case Criterion::UnivalenceCriterion: return "INCONCLUSIVE";
    case Criterion::Injectivity: return "DISPROVED";
    default: return "FAIL";
    }
}

Complex u_functional(const PoleFunction& f, Complex z) {
    const auto& q = f.inv_series();
    const Complex dq = q.order() >= 1 ? evaluate(differentiate(q, 1), z) : Complex{};
    return evaluate(q, z) - z * dq - 1.0;
}

Complex u_over_z_squared(const PoleFunction& f, Complex z) {
    const auto c = f.inv_series().coeffs();
    if (c.size() < 3) return {};
    // Horner over n = N..2 of (n-1) b_n z^{n-2}.
    Complex acc{};
    for (std::size_t n = c.size() - 1; n >= 2; --n) acc = acc * z + static_cast<double>(n - 1) * c[n];
    return -acc;
}

TruncatedSeries p_functional_series(const PoleFunction& f) {
    const auto c = f.inv_series().coeffs();
    std::vector<Complex> out(c.size());
    out[0] = 1.0;
    for (std::size_t n = 1; n < c.size(); ++n) out[n] = (1.0 - static_cast<double>(n)) * c[n];
    return TruncatedSeries(std::move(out));
}

namespace {

// Shared sup-over-grid scan: functional(z) >= 0, holds iff sup <= threshold + tol.
template <class Functional>
CriterionVerdict sup_scan(Criterion kind, const DiskGrid& grid, double threshold, Functional&& functional) {
    CriterionVerdict v;
    v.criterion = kind;
    v.threshold = threshold;
    v.grid_radius = grid.radius();
    v.sup_value = 0.0;
    std::optional<Complex> arg;
    for (const Complex& z : grid.points()) {
        const double value = functional(z);
        if (!std::isfinite(value))
            throw Error(ErrorKind::NonFinite, "criterion functional not finite on the grid");
        if (!arg || value > v.sup_value) {
            v.sup_value = value;
            arg = z;
        }
    }
    v.holds = v.sup_value <= threshold + kCriterionTolerance;
    if (!v.holds) v.witness = arg;
    return v;
}

double require_pole(const PoleFunction& f) {
    if (!f.pole()) throw Error(ErrorKind::NoPole, "criterion is defined through mu, which needs a pole");
    return *f.pole();
}

}  // namespace

CriterionVerdict subclass_membership(const PoleFunction& f, double lambda, const DiskGrid& grid) {
    const double p = require_pole(f);
    if (!(lambda > 0.0 && lambda <= 1.0))
        throw Error(ErrorKind::BadParameter, "lambda " + std::to_string(lambda) + " outside (0, 1]");
    auto v = sup_scan(Criterion::UpLambdaMembership, grid, lambda * PoleScale(p).value(),
                      [&](Complex z) { return std::abs(u_over_z_squared(f, z)); });
    v.p = p;
    v.lambda = lambda;
    return v;
}

CriterionVerdict univalence_criterion(const PoleFunction& f, const DiskGrid& grid) {
    const double p = require_pole(f);
    const auto& q = f.inv_series();
    const TruncatedSeries d2 = q.order() >= 2 ? differentiate(q, 2) : TruncatedSeries::zero(0);
    auto v = sup_scan(Criterion::UnivalenceCriterion, grid, PoleScale(p).value(), [&](Complex z) {
        // f/z = 1/q must stay finite on the lattice.
        if (!std::isfinite(std::abs(1.0 / evaluate(q, z))))
            throw Error(ErrorKind::BadParameter, "f(z)/z is infinite at a grid point off the pole");
        return std::abs(evaluate(d2, z));
    });
    v.p = p;
    return v;
}

CriterionVerdict disk_subordination_check(const TruncatedSeries& F, Complex c, const DiskGrid& grid) {
    if (c == Complex{}) throw Error(ErrorKind::BadParameter, "subordination target 1 + cz needs c != 0");
    const double radius = std::abs(c);
    auto v = sup_scan(Criterion::DiskSubordination, grid, radius,
                      [&](Complex z) { return std::abs(evaluate(F, z) - 1.0); });
    // Strict image inclusion plus the normalization F(0) = G(0) = 1.
    const bool normalized = std::abs(F[0] - 1.0) <= kCriterionTolerance;
    v.holds = normalized && v.sup_value < radius;
    if (!normalized) {
        v.witness = Complex{};  // the origin itself violates F(0) = 1
    } else if (!v.holds && !v.witness) {
        // sup == |c| exactly: boundary touch, still a strict-inclusion failure.
        v.witness = *std::max_element(grid.points().begin(), grid.points().end(), [&](Complex a, Complex b) {
            return std::abs(evaluate(F, a) - 1.0) < std::abs(evaluate(F, b) - 1.0);
        });
    }
    return v;
}

namespace {

struct Pair {
    double ratio;
    std::size_t i;
    std::size_t j;
};

// Newton on f(z) = target from `start`; returns the root if converged.
std::optional<Complex> solve_preimage(const PoleFunction& f, Complex target, Complex start) {
    Complex z = start;
    const double scale = std::max(1.0, std::abs(target));
    for (int iter = 0; iter < 60; ++iter) {
        const Complex fz = f.value(z);
        const Complex residual = fz - target;
        if (std::abs(residual) <= 1e-13 * scale) return z;
        const Complex df = f.derivative(z);
        if (!std::isfinite(std::abs(df)) || std::abs(df) == 0.0) return std::nullopt;
        z -= residual / df;
        if (!std::isfinite(std::abs(z)) || std::abs(z) > 2.0) return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

CriterionVerdict injectivity_oracle(const PoleFunction& f, const DiskGrid& grid, double collision_tolerance) {
    if (!(collision_tolerance > 0.0)) throw Error(ErrorKind::BadParameter, "collision tolerance must be positive");

    CriterionVerdict v;
    v.criterion = Criterion::Injectivity;
    v.threshold = 1.0 / collision_tolerance;
    v.grid_radius = grid.radius();
    v.p = f.pole();

    const auto pts = grid.points();
    std::vector<Complex> values(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) values[k] = f.value(pts[k]);

    constexpr std::size_t kRefine = 8;
    std::vector<Pair> worst;  // descending by ratio, at most kRefine entries
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double num = std::abs(pts[i] - pts[j]);
            const double den = std::abs(values[i] - values[j]);
            const double ratio = den == 0.0 ? std::numeric_limits<double>::infinity() : num / den;
            if (worst.size() < kRefine || ratio > worst.back().ratio) {
                const auto pos = std::find_if(worst.begin(), worst.end(), [&](const Pair& p) { return ratio > p.ratio; });
                worst.insert(pos, Pair{ratio, i, j});
                if (worst.size() > kRefine) worst.pop_back();
            }
        }
    }

    if (worst.empty()) return v;  // fewer than two points: vacuous
    v.sup_value = worst.front().ratio;
    v.holds = v.sup_value <= v.threshold;
    if (!v.holds) {
        v.witness = pts[worst.front().i];
        v.partner = pts[worst.front().j];
    }

    // Try to upgrade a near-collision to an exact one.
    for (const Pair& cand : worst) {
        const Complex z1 = pts[cand.i];
        const auto z2 = solve_preimage(f, values[cand.i], pts[cand.j]);
        if (!z2) continue;
        if (std::abs(*z2) > grid.radius() + 1e-12) continue;
        if (grid.pole() && std::abs(*z2 - *grid.pole()) < grid.pole_guard()) continue;
        if (std::abs(*z2 - z1) < 1e-6) continue;
        const double den = std::abs(f.value(z1) - f.value(*z2));
        const double ratio = den == 0.0 ? std::numeric_limits<double>::infinity() : std::abs(z1 - *z2) / den;
        if (ratio <= v.threshold) continue;
        v.holds = false;
        v.witness = z1;
        v.partner = *z2;
        v.sup_value = ratio;
        break;
    }
    return v;
}

double functional_at_witness(const PoleFunction& f, const CriterionVerdict& v) {
    if (!v.witness) throw Error(ErrorKind::BadParameter, "verdict carries no witness");
    const Complex z = *v.witness;
    switch (v.criterion) {
    case Criterion::UpLambdaMembership: return std::abs(u_over_z_squared(f, z));
    case Criterion::UnivalenceCriterion: {
        const auto& q = f.inv_series();
        return q.order() >= 2 ? std::abs(evaluate(differentiate(q, 2), z)) : 0.0;
    }
    case Criterion::Injectivity: {
        if (!v.partner) throw Error(ErrorKind::BadParameter, "injectivity verdict needs a partner point");
        const double den = std::abs(f.value(z) - f.value(*v.partner));
        return den == 0.0 ? std::numeric_limits<double>::infinity() : std::abs(z - *v.partner) / den;
    }
    case Criterion::DiskSubordination: break;
    }
    throw Error(ErrorKind::BadParameter, "subordination witnesses are evaluated on F, not f");
}

}  // namespace mero
