#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mero/functions.hpp"
#include "mero/series.hpp"

namespace mero {

/// Polar lattice on the closed disk |z| <= radius: radii radius*(i+1)/radial_count
/// for i < radial_count, angles 2*pi*j/angular_count. The origin is never a
/// node, and nodes within pole_guard of the pole are dropped.
class DiskGrid {
public:
    static constexpr double kDefaultRadius = 0.99;
    static constexpr std::size_t kDefaultRadial = 32;
    static constexpr std::size_t kDefaultAngular = 64;
    static constexpr double kDefaultPoleGuard = 0.02;

    /// Throws BadParameter unless 0 < radius < 1, counts >= 1, pole_guard >= 0.
    DiskGrid(double radius, std::size_t radial_count, std::size_t angular_count, std::optional<double> pole,
             double pole_guard = kDefaultPoleGuard);

    /// Default lattice for f (guarding f's pole, if any).
    static DiskGrid for_function(const PoleFunction& f);

    double radius() const noexcept { return radius_; }
    std::size_t radial_count() const noexcept { return radial_; }
    std::size_t angular_count() const noexcept { return angular_; }
    double pole_guard() const noexcept { return guard_; }
    std::optional<double> pole() const noexcept { return pole_; }
    std::span<const Complex> points() const noexcept { return points_; }

private:
    double radius_;
    std::size_t radial_;
    std::size_t angular_;
    std::optional<double> pole_;
    double guard_;
    std::vector<Complex> points_;
};

enum class Criterion { UpLambdaMembership, UnivalenceCriterion, DiskSubordination, Injectivity };
std::string_view to_string(Criterion c) noexcept;

/// Result of a grid check. Every criterion is phrased as "sup of a
/// functional <= threshold"; when that fails, `witness` is a grid point
/// where the functional exceeds the threshold (`partner` completes the pair
/// for the injectivity oracle).
struct CriterionVerdict {
    Criterion criterion = Criterion::UpLambdaMembership;
    bool holds = true;
    std::optional<Complex> witness;
    std::optional<Complex> partner;
    double sup_value = 0.0;
    double threshold = 0.0;
    std::optional<double> p;
    std::optional<double> lambda;
    double grid_radius = 0.0;
};

/// PASS on success. On failure: INCONCLUSIVE for the sufficient univalence
/// criterion, DISPROVED for the injectivity oracle, FAIL otherwise.
std::string_view verdict_label(const CriterionVerdict& v) noexcept;

/// U_f(z) = (z/f)^2 f' - 1 computed as q - z q' - 1 with q = z/f.
Complex u_functional(const PoleFunction& f, Complex z);

/// U_f(z) / z^2 = -sum_{n>=2} (n-1) b_n z^{n-2}; cancellation-free.
Complex u_over_z_squared(const PoleFunction& f, Complex z);

/// (z/f)^2 f' = 1 + sum_{n>=1} (1-n) b_n z^n as a series.
TruncatedSeries p_functional_series(const PoleFunction& f);

inline constexpr double kCriterionTolerance = 1e-12;

/// sup over the grid of |U_f(z)|/|z|^2 against lambda*mu. Passing is
/// necessary evidence for membership in U_P_LAMBDA, not a proof.
/// Throws NoPole when f has no pole.
CriterionVerdict subclass_membership(const PoleFunction& f, double lambda, const DiskGrid& grid);

/// sup over the grid of |(z/f)''| against mu. A pass is grid-level
/// evidence of univalence; a failure is inconclusive. Throws NoPole.
CriterionVerdict univalence_criterion(const PoleFunction& f, const DiskGrid& grid);

/// Numerical F < 1 + c z: F(0) = 1 and max |F(z) - 1| < |c| on the grid.
/// Throws BadParameter when c = 0.
CriterionVerdict disk_subordination_check(const TruncatedSeries& F, Complex c, const DiskGrid& grid);

inline constexpr double kCollisionTolerance = 1e-4;

/// Brute-force injectivity scan over all grid pairs. The functional is the
/// inverse difference quotient |z1 - z2| / |f(z1) - f(z2)|, compared with
/// 1/collision_tolerance. The worst pairs are then refined by Newton's
/// method on f(z) = f(z1); a converged distinct preimage inside the grid
/// disk is an exact collision (sup_value = inf).
CriterionVerdict injectivity_oracle(const PoleFunction& f, const DiskGrid& grid,
                                    double collision_tolerance = kCollisionTolerance);

/// Re-evaluates the verdict's functional at its witness (and partner).
double functional_at_witness(const PoleFunction& f, const CriterionVerdict& v);

}  // namespace mero
