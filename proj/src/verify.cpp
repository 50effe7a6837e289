#include "mero/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>

#include "mero/bounds.hpp"
#include "mero/criteria.hpp"
#include "mero/csv.hpp"
#include "mero/error.hpp"
#include "mero/functions.hpp"
#include "mero/integrals.hpp"
#include "mero/sweep.hpp"

namespace mero::verify {

namespace {

using csv::format_number;

const std::vector<double> kPoles = {0.2, 0.35, 0.5, 0.65, 0.8};
const std::vector<double> kLambdas = {0.25, 0.5, 1.0};
constexpr double kPi = std::numbers::pi;

double rel_err(double computed, double expected) {
    return std::abs(computed - expected) / std::max(std::abs(expected), 1e-300);
}

// Tracks the worst case of a family of comparisons.
class Worst {
public:
    void add(double err, std::string where) {
        if (err > value_ || where_.empty()) {
            value_ = err;
            where_ = std::move(where);
        }
    }
    double value() const { return value_; }
    CheckResult result(std::string suite, std::string name, double tolerance) const {
        return {std::move(suite), std::move(name), value_ <= tolerance,
                "max error " + format_number(value_) + " (tol " + format_number(tolerance) + ") at " + where_};
    }

private:
    double value_ = 0.0;
    std::string where_;
};

std::string at(double p, double r) { return "p=" + format_number(p) + " r=" + format_number(r); }
std::string at(double p, double lambda, double r) {
    return "p=" + format_number(p) + " lambda=" + format_number(lambda) + " r=" + format_number(r);
}

// Uniform in [0,1) from raw engine bits; std distributions are not
// bit-reproducible across standard libraries.
double unit_uniform(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

PoleFunction random_member(double p, std::size_t order, std::mt19937_64& gen) {
    std::vector<Complex> b(order);
    double decay = 1.0;
    Complex at_pole = 1.0;
    double pn = p;
    for (std::size_t n = 2; n <= order; ++n) {
        decay *= 0.8;
        pn *= p;
        b[n - 1] = Complex(unit_uniform(gen) - 0.5, unit_uniform(gen) - 0.5) * decay;
        at_pole += b[n - 1] * pn;
    }
    b[0] = -at_pole / p;  // forces z/f(p) = 0
    return from_inverse_coefficients(b, p);
}

std::vector<CheckResult> sharpness() {
    const std::string suite = "sharpness";
    std::vector<CheckResult> out;
    const auto radii = default_radii();

    Worst kp_zf;
    Worst kp_l1;
    Worst fp_zf;
    Worst fp_l1;
    Worst lemma;
    Worst nesting_margin;
    bool nesting_ok = true;
    for (double p : kPoles) {
        const auto kp = sigma_extremal(p);
        for (double r : radii) {
            kp_zf.add(rel_err(dirichlet_series(kp.inv_series(), r).value, max_dirichlet_zf_sigma_p(r, p)), at(p, r));
            kp_l1.add(rel_err(l1_mean_series(kp, r).value, l1_bound(ClassSpec::sigma_p(p), r)), at(p, r));
        }
        for (double lambda : kLambdas) {
            const auto fp = subclass_extremal(p, lambda);
            for (double r : radii) {
                const double bound = max_dirichlet_zf_up_lambda(r, p, lambda);
                fp_zf.add(rel_err(dirichlet_series(fp.inv_series(), r).value, bound), at(p, lambda, r));
                fp_l1.add(rel_err(l1_mean_series(fp, r).value, l1_bound(ClassSpec::up_lambda(p, lambda), r)),
                          at(p, lambda, r));
                for (double t : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
                    const auto rep = weighted_sum_check(fp, lambda, t, r);
                    lemma.add(std::abs(rep.slack) / rep.bound, at(p, lambda, r) + " t=" + format_number(t));
                }
                const double margin = max_dirichlet_zf_sigma_p(r, p) - bound;
                if (!(margin > 1e-12)) nesting_ok = false;
            }
        }
    }
    out.push_back(kp_zf.result(suite, "sigma_p_dirichlet_zf_attained_by_extremal", 1e-10));
    out.push_back(kp_l1.result(suite, "sigma_p_l1_attained_by_extremal", 1e-12));
    out.push_back(fp_zf.result(suite, "up_lambda_dirichlet_zf_attained_by_subclass_extremal", 1e-10));
    out.push_back(fp_l1.result(suite, "up_lambda_l1_attained_by_subclass_extremal", 1e-10));
    out.push_back(lemma.result(suite, "weighted_sum_equality_for_subclass_extremal", 1e-12));
    out.push_back({suite, "up_lambda_dirichlet_max_strictly_below_sigma_p", nesting_ok,
                   nesting_ok ? "margin > 1e-12 on every grid cell" : "margin <= 1e-12 somewhere"});

    Worst koebe_l1;
    Worst koebe_zf;
    for (double theta : {0.0, kPi / 3.0, kPi}) {
        const auto k = build_koebe_rotation(theta);
        for (double r : radii) {
            const std::string where = "theta=" + format_number(theta) + " r=" + format_number(r);
            koebe_l1.add(rel_err(l1_mean_series(k, r).value, l1_bound(ClassSpec::s(), r)), where);
            koebe_zf.add(rel_err(dirichlet_series(k.inv_series(), r).value, max_dirichlet_zf_s(r)), where);
        }
    }
    out.push_back(koebe_l1.result(suite, "s_l1_attained_by_koebe", 1e-12));
    out.push_back(koebe_zf.result(suite, "s_dirichlet_zf_attained_by_koebe", 1e-12));

    Worst inherit;
    for (double p : kPoles) {
        const auto kp = sigma_extremal(p);
        const double w0 = -p / ((1.0 + p) * (1.0 + p));
        for (const auto& cls : {ClassSpec::co_p(p), ClassSpec::sigma_star_p(p, w0)}) {
            for (double r : radii) {
                for (auto q : {BoundQuantity::DirichletZf, BoundQuantity::L1}) {
                    const auto rep = check_bound(kp, cls, q, r);
                    inherit.add(rep.sharp ? rel_err(rep.computed, rep.bound) : 1.0, at(p, r));
                }
            }
        }
    }
    out.push_back(inherit.result(suite, "co_p_and_sigma_star_bounds_attained_by_extremal", 1e-10));

    Worst gronwall;
    for (double p : kPoles) {
        const auto rep = gronwall_check(sigma_extremal(p));
        gronwall.add(rep.sharp ? std::abs(rep.slack) : 1.0, "p=" + format_number(p));
    }
    out.push_back(gronwall.result(suite, "gronwall_area_sum_sharp_for_extremal", 1e-12));

    Worst jenkins;
    for (double p : {0.3, 0.5, 0.7}) {
        const auto a = f_over_z_series(sigma_extremal(p), 16);
        for (int n = 2; n <= 12; ++n)
            jenkins.add(rel_err(std::abs(a[static_cast<std::size_t>(n - 1)]), jenkins_bound(n, p)),
                        "p=" + format_number(p) + " n=" + std::to_string(n));
    }
    out.push_back(jenkins.result(suite, "jenkins_coefficient_bound_attained_by_extremal", 1e-10));

    Worst f_over_z;
    Worst f_itself;
    for (double p : kPoles) {
        const auto kp = sigma_extremal(p, 256);
        for (double frac : {0.1, 0.5, 0.9}) {
            const double r = frac * p;
            f_over_z.add(rel_err(dirichlet_f_over_z_series(kp, r).value, max_dirichlet_f_over_z(r, p)), at(p, r));
            f_itself.add(rel_err(dirichlet_f_series(kp, r).value, max_dirichlet_f(r, p)), at(p, r));
        }
    }
    out.push_back(f_over_z.result(suite, "pole_disk_dirichlet_f_over_z_attained_by_extremal", 1e-8));
    out.push_back(f_itself.result(suite, "pole_disk_dirichlet_f_attained_by_extremal", 1e-8));
    return out;
}

std::vector<CheckResult> oracles() {
    const std::string suite = "oracles";
    std::vector<CheckResult> out;
    const auto radii = default_radii();
    const QuadratureConfig cfg{64, 256, 0.02};

    Worst kp_dir;
    Worst other_dir;
    Worst l1;
    for (double p : kPoles) {
        const auto kp = sigma_extremal(p);
        for (double r : radii) {
            kp_dir.add(rel_err(dirichlet_quadrature(kp.inv_series(), r, cfg).value,
                               dirichlet_series(kp.inv_series(), r).value),
                       at(p, r));
            l1.add(rel_err(l1_mean_quadrature(kp, r, cfg).value, l1_mean_series(kp, r).value), at(p, r));
        }
        for (double lambda : kLambdas) {
            const auto fp = subclass_extremal(p, lambda);
            for (double r : radii) {
                other_dir.add(rel_err(dirichlet_quadrature(fp.inv_series(), r, cfg).value,
                                      dirichlet_series(fp.inv_series(), r).value),
                              at(p, lambda, r));
                l1.add(rel_err(l1_mean_quadrature(fp, r, cfg).value, l1_mean_series(fp, r).value), at(p, lambda, r));
            }
        }
    }
    for (double theta : {0.0, kPi / 3.0, kPi}) {
        const auto k = build_koebe_rotation(theta);
        for (double r : radii) {
            const std::string where = "koebe theta=" + format_number(theta) + " r=" + format_number(r);
            other_dir.add(rel_err(dirichlet_quadrature(k.inv_series(), r, cfg).value,
                                  dirichlet_series(k.inv_series(), r).value),
                          where);
            l1.add(rel_err(l1_mean_quadrature(k, r, cfg).value, l1_mean_series(k, r).value), where);
        }
    }
    out.push_back(kp_dir.result(suite, "dirichlet_series_vs_quadrature_extremal", 1e-8));
    out.push_back(other_dir.result(suite, "dirichlet_series_vs_quadrature_subclass_extremal_koebe", 1e-10));
    out.push_back(l1.result(suite, "l1_series_vs_quadrature_extremals", 1e-10));

    // Parseval on generic members with infinite-looking tails.
    std::mt19937_64 gen(20240601);
    double worst_excess = -1.0;
    std::string where;
    for (double p : kPoles) {
        const auto f = random_member(p, 48, gen);
        for (double r : {0.3, 0.6, 0.9}) {
            const auto s = l1_mean_series(f, r);
            const auto q = l1_mean_quadrature(f, r, cfg);
            const double excess = std::abs(s.value - q.value) - (1e-8 + s.truncation_tail_estimate);
            if (excess > worst_excess) {
                worst_excess = excess;
                where = at(p, r);
            }
        }
    }
    out.push_back({suite, "l1_parseval_random_members", worst_excess <= 0.0,
                   "worst |series - quadrature| - (1e-8 + tail) = " + format_number(worst_excess) + " at " + where});

    // Series in the f/z coefficients vs direct quadrature of (f/z)' inside the pole disk.
    Worst pole_disk;
    for (double p : kPoles) {
        const auto kp = sigma_extremal(p, 256);
        for (double frac : {0.25, 0.5, 0.75}) {
            const double r = frac * p;
            pole_disk.add(rel_err(dirichlet_quadrature(f_over_z_integrand(kp), r, cfg).value,
                                  dirichlet_f_over_z_series(kp, r).value),
                          at(p, r));
            pole_disk.add(rel_err(dirichlet_quadrature(f_integrand(kp), r, cfg).value,
                                  dirichlet_f_series(kp, r).value),
                          at(p, r));
        }
    }
    out.push_back(pole_disk.result(suite, "pole_disk_series_vs_quadrature_extremal", 1e-8));
    return out;
}

std::vector<CheckResult> criteria() {
    const std::string suite = "criteria";
    std::vector<CheckResult> out;

    bool threshold_ok = true;
    std::string detail = "passes iff lambda <= 1/2 for lambda in {0.25, 0.49, 0.5, 0.51, 1}";
    for (double p : kPoles) {
        for (double lambda : {0.25, 0.49, 0.5, 0.51, 1.0}) {
            const auto fp = subclass_extremal(p, lambda);
            const auto v = univalence_criterion(fp, DiskGrid::for_function(fp));
            if (v.holds != (lambda <= 0.5)) {
                threshold_ok = false;
                detail = "mismatch at " + at(p, lambda, 0.0);
            }
        }
    }
    out.push_back({suite, "univalence_criterion_threshold_for_subclass_extremal", threshold_ok, detail});

    {
        const auto kp = sigma_extremal(0.5);
        const auto grid = DiskGrid::for_function(kp);
        const auto crit = univalence_criterion(kp, grid);
        const auto inj = injectivity_oracle(kp, grid);
        const auto gw = gronwall_check(kp);
        const bool ok = !crit.holds && inj.holds && gw.sharp;
        out.push_back({suite, "extremal_inconclusive_yet_injective_and_gronwall_sharp", ok,
                       "criterion " + std::string(verdict_label(crit)) + " sup=" + format_number(crit.sup_value) +
                           ", injectivity " + std::string(verdict_label(inj)) +
                           " max inverse quotient=" + format_number(inj.sup_value) +
                           ", gronwall sum=" + format_number(gw.computed)});
    }
    {
        const Complex b[] = {0.0, 1.2};
        const auto rep = gronwall_check(from_inverse_coefficients(b, std::nullopt));
        out.push_back({suite, "gronwall_violation_detected", !rep.satisfied,
                       "sum=" + format_number(rep.computed) + " bound=1"});
    }
    {
        bool ok = true;
        for (double p : kPoles) {
            for (double lambda : kLambdas) {
                const auto fp = subclass_extremal(p, lambda);
                const auto v = subclass_membership(fp, lambda, DiskGrid::for_function(fp));
                ok = ok && v.holds && rel_err(v.sup_value, lambda * PoleScale(p).value()) <= 1e-10;
            }
            const auto kp = sigma_extremal(p);
            const auto v = subclass_membership(kp, 1.0, DiskGrid::for_function(kp));
            ok = ok && !v.holds && rel_err(v.sup_value, 1.0) <= 1e-10;
        }
        out.push_back({suite, "subclass_membership_separates_extremals", ok,
                       "sup |U_f|/|z|^2 equals lambda*mu for the subclass extremal and 1 for the class extremal"});
    }
    {
        const double p = 0.5;
        const auto fp = subclass_extremal(p, 0.4);
        const double mu = PoleScale(p).value();
        const auto v = disk_subordination_check(p_functional_series(fp), mu / 2.0, DiskGrid::for_function(fp));
        out.push_back({suite, "p_functional_subordinate_to_half_mu_disk", v.holds,
                       "max |p(z)-1|=" + format_number(v.sup_value) + " < " + format_number(v.threshold)});
    }
    {
        const Complex b[] = {0.0, 5.0};
        const auto f = from_inverse_coefficients(b, std::nullopt);
        const auto v = injectivity_oracle(f, DiskGrid::for_function(f));
        out.push_back({suite, "injectivity_collision_found_for_non_univalent", !v.holds,
                       std::string(verdict_label(v)) + " inverse quotient=" + format_number(v.sup_value)});
    }
    return out;
}

std::vector<CheckResult> limits() {
    const std::string suite = "limits";
    const double p = 0.999;
    const double r = 0.5;
    std::vector<CheckResult> out;
    const auto check = [&](std::string name, double value, double limit, double tol) {
        const double err = rel_err(value, limit);
        out.push_back({suite, std::move(name), err <= tol,
                       "value=" + format_number(value) + " limit=" + format_number(limit) +
                           " rel=" + format_number(err) + " (tol " + format_number(tol) + ")"});
    };
    check("dirichlet_zf_sigma_p_to_s", max_dirichlet_zf_sigma_p(r, p), max_dirichlet_zf_s(r), 2e-3);
    check("dirichlet_f_over_z_to_s", max_dirichlet_f_over_z(r, p), max_dirichlet_f_over_z_s(r), 1e-2);
    check("dirichlet_f_to_s", max_dirichlet_f(r, p), max_dirichlet_f_s(r), 1e-2);
    check("l1_sigma_p_to_s", l1_bound(ClassSpec::sigma_p(p), r), l1_bound(ClassSpec::s(), r), 2e-3);
    check("jenkins_n2_to_bieberbach", jenkins_bound(2, 0.99), 2.0, 2e-2);
    return out;
}

}  // namespace

std::string_view to_string(Suite s) noexcept {
    switch (s) {
    case Suite::Sharpness: return "sharpness";
    case Suite::Oracles: return "oracles";
    case Suite::Criteria: return "criteria";
    case Suite::Limits: return "limits";
    case Suite::All: return "all";
    }
    return "?";
}

Suite parse_suite(std::string_view name) {
    for (auto s : {Suite::Sharpness, Suite::Oracles, Suite::Criteria, Suite::Limits, Suite::All})
        if (to_string(s) == name) return s;
    throw Error(ErrorKind::ParseError, "unknown suite '" + std::string(name) + "'");
}

std::vector<CheckResult> run_suite(Suite suite) {
    std::vector<CheckResult> out;
    const auto append = [&](std::vector<CheckResult> more) {
        out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    };
    if (suite == Suite::Sharpness || suite == Suite::All) append(sharpness());
    if (suite == Suite::Oracles || suite == Suite::All) append(oracles());
    if (suite == Suite::Criteria || suite == Suite::All) append(criteria());
    if (suite == Suite::Limits || suite == Suite::All) append(limits());
    return out;
}

void print_results(std::ostream& out, const std::vector<CheckResult>& results) {
    std::size_t failed = 0;
    for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.name << ": " << r.detail << '\n';
        if (!r.passed) ++failed;
    }
    out << results.size() << " checks, " << failed << " failed\n";
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace mero::verify
