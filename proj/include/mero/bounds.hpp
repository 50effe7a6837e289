#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mero/functions.hpp"

namespace mero {

enum class ClassKind {
    SigmaP,      ///< univalent members of A(p)
    UpLambda,    ///< |U_f| < lambda mu
    S,           ///< classical normalized univalent (no pole)
    CoP,         ///< concave members of Sigma(p)
    SigmaStarP,  ///< meromorphically starlike w.r.t. w0
};

std::string_view to_string(ClassKind kind) noexcept;
/// Accepts the canonical names SIGMA_P, U_P_LAMBDA, S, CO_P, SIGMA_STAR_P.
ClassKind parse_class_kind(std::string_view name);

/// A function class with its parameters. The factories validate ranges and
/// throw BadParameter.
class ClassSpec {
public:
    static ClassSpec sigma_p(double p);
    static ClassSpec up_lambda(double p, double lambda);
    static ClassSpec s();
    static ClassSpec co_p(double p);
    /// w0 must lie in [-p/(1-p)^2, -p/(1+p)^2].
    static ClassSpec sigma_star_p(double p, double w0);

    ClassKind kind() const noexcept { return kind_; }
    std::optional<double> p() const noexcept { return p_; }
    std::optional<double> lambda() const noexcept { return lambda_; }
    std::optional<double> w0() const noexcept { return w0_; }

private:
    ClassSpec(ClassKind kind, std::optional<double> p, std::optional<double> lambda, std::optional<double> w0)
        : kind_(kind), p_(p), lambda_(lambda), w0_(w0) {}

    ClassKind kind_;
    std::optional<double> p_;
    std::optional<double> lambda_;
    std::optional<double> w0_;
};

struct BoundTolerances {
    double satisfaction = 1e-9;   ///< absolute: satisfied iff slack >= -satisfaction
    double sharpness_rel = 1e-9;  ///< relative to |bound|
};

/// Computed quantity against its theoretical bound.
/// satisfied <=> slack >= -tol.satisfaction; sharp => satisfied.
struct BoundReport {
    std::string quantity_name;
    double computed = 0.0;
    double bound = 0.0;
    double slack = 0.0;
    bool satisfied = false;
    bool sharp = false;
    ClassSpec class_spec = ClassSpec::s();
    std::optional<double> r;  ///< empty for radius-free inequalities
};

BoundReport make_report(std::string quantity_name, double computed, double bound, const ClassSpec& cls,
                        std::optional<double> r, const BoundTolerances& tol = {});

/// |a_n| <= (1 - p^{2n}) / ((1 - p^2) p^{n-1}) for n >= 2.
double jenkins_bound(int n, double p);
/// Same bound in its geometric-sum form (1 + p^2 + ... + p^{2n-2}) / p^{n-1}.
double jenkins_bound_geometric(int n, double p);

/// sum_{n>=1} n |b_{n+1}|^2 against 1. A violation proves f is not univalent;
/// satisfaction proves nothing.
BoundReport gronwall_check(const PoleFunction& f, double tolerance = 1e-9);

/// sum_{n>=2} n^t |b_n|^2 r^{2n} against 2^t lambda^2 mu^2 r^4, mu taken from
/// f's pole. Throws BadParameter for t > 2, NoPole when f has no pole.
BoundReport weighted_sum_check(const PoleFunction& f, double lambda, double t, double r);

/// max over Sigma(p) of Delta(r, z/f) = pi r^2 ((1/p + p)^2 + 2 r^2).
double max_dirichlet_zf_sigma_p(double r, double p);
/// max over U_P_LAMBDA of Delta(r, z/f) = pi r^2 ((1/p + lambda mu p)^2 + 2 lambda^2 mu^2 r^2).
double max_dirichlet_zf_up_lambda(double r, double p, double lambda);
/// max over S of Delta(r, z/f) = 2 pi r^2 (r^2 + 2), attained by Koebe rotations.
double max_dirichlet_zf_s(double r);

/// max over Sigma(p) of Delta(r, f/z), 0 < r < p; RadiusBeyondPole otherwise.
double max_dirichlet_f_over_z(double r, double p);
/// max over Sigma(p) of Delta(r, f) , attained by the SIGMA_P extremal; 0 < r < p.
double max_dirichlet_f(double r, double p);
/// p -> 1 limits of the two maxima above (the analytic class S values).
double max_dirichlet_f_over_z_s(double r);
double max_dirichlet_f_s(double r);

/// Sharp upper bound of L1(r, f) over the class. CO_P and SIGMA_STAR_P
/// inherit the SIGMA_P bound.
double l1_bound(const ClassSpec& cls, double r);

enum class BoundQuantity { DirichletZf, L1 };
std::string_view to_string(BoundQuantity q) noexcept;

/// Bound on `quantity` over the class, dispatched on kind.
double class_bound(const ClassSpec& cls, BoundQuantity quantity, double r);

/// Computes the quantity for f via integrals.hpp and compares it with the
/// class bound. Throws ClassMismatch when f's pole disagrees with the class.
BoundReport check_bound(const PoleFunction& f, const ClassSpec& cls, BoundQuantity quantity, double r,
                        const BoundTolerances& tol = {});

}  // namespace mero
