#include <doctest.h>

#include <array>
#include <numbers>

#include "mero/bounds.hpp"
#include "mero/integrals.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace mero;
using testutil::kind_of;

namespace {

constexpr double kPi = std::numbers::pi;

PoleFunction identity() { return PoleFunction(TruncatedSeries::unit(0), std::nullopt); }

}  // namespace

TEST_CASE("class kinds round-trip through their names") {
    for (auto k : {ClassKind::SigmaP, ClassKind::UpLambda, ClassKind::S, ClassKind::CoP, ClassKind::SigmaStarP})
        CHECK(parse_class_kind(to_string(k)) == k);
    CHECK(to_string(ClassKind::UpLambda) == "U_P_LAMBDA");
    CHECK(kind_of([] { parse_class_kind("sigma_p"); }) == ErrorKind::ParseError);
}

TEST_CASE("class spec validation") {
    CHECK(kind_of([] { ClassSpec::sigma_p(1.0); }) == ErrorKind::BadParameter);
    CHECK(kind_of([] { ClassSpec::up_lambda(0.5, 0.0); }) == ErrorKind::BadParameter);
    CHECK(kind_of([] { ClassSpec::up_lambda(0.5, 1.5); }) == ErrorKind::BadParameter);
    CHECK(ClassSpec::up_lambda(0.5, 1.0).lambda() == 1.0);
    CHECK_FALSE(ClassSpec::s().p().has_value());
    // w0 range for p = 0.5 is [-2, -2/9].
    CHECK_NOTHROW(ClassSpec::sigma_star_p(0.5, -2.0));
    CHECK_NOTHROW(ClassSpec::sigma_star_p(0.5, -1.0));
    CHECK(kind_of([] { ClassSpec::sigma_star_p(0.5, -2.1); }) == ErrorKind::BadParameter);
    CHECK(kind_of([] { ClassSpec::sigma_star_p(0.5, 0.0); }) == ErrorKind::BadParameter);
}

TEST_CASE("report invariants") {
    const auto cls = ClassSpec::s();
    const auto exact = make_report("x", 2.0, 2.0, cls, 0.5);
    CHECK(exact.satisfied);
    CHECK(exact.sharp);
    CHECK(exact.slack == 0.0);
    CHECK(exact.r == 0.5);

    const auto loose = make_report("x", 1.0, 2.0, cls, std::nullopt);
    CHECK(loose.satisfied);
    CHECK_FALSE(loose.sharp);
    CHECK(loose.slack == 1.0);

    // Slightly over the bound but inside both tolerances.
    const auto edge = make_report("x", 1.0 + 5e-10, 1.0, cls, std::nullopt);
    CHECK(edge.satisfied);
    CHECK(edge.sharp);

    const auto over = make_report("x", 1.0 + 2e-9, 1.0, cls, std::nullopt);
    CHECK_FALSE(over.satisfied);
    CHECK_FALSE(over.sharp);

    // Large bound: relative sharpness window exceeds the absolute satisfaction one.
    const auto big = make_report("x", 1e6 + 1e-4, 1e6, cls, std::nullopt);
    CHECK_FALSE(big.satisfied);
    CHECK_FALSE(big.sharp);
}

TEST_CASE("coefficient bound") {
    CHECK(jenkins_bound(2, 0.5) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(oracle::rel_err(jenkins_bound(5, 0.3), jenkins_bound_geometric(5, 0.3)) <= 1e-14);
    for (int n = 2; n <= 30; ++n)
        CHECK(oracle::rel_err(jenkins_bound(n, 0.7), oracle::extremal_coefficient(n, 0.7)) <= 1e-13);
    CHECK(std::abs(jenkins_bound(2, 0.99) - 2.0) / 2.0 <= 0.02);
    CHECK(std::abs(jenkins_bound(2, 1.0 - 1e-8) - 2.0) <= 1e-7);
    CHECK(kind_of([] { jenkins_bound(1, 0.5); }) == ErrorKind::BadParameter);
    CHECK(kind_of([] { jenkins_bound(2, 0.0); }) == ErrorKind::BadParameter);
}

TEST_CASE("area sum check") {
    const auto kp = gronwall_check(sigma_extremal(0.4));
    CHECK(kp.computed == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(kp.sharp);
    CHECK_FALSE(kp.r.has_value());

    const auto z = gronwall_check(identity());
    CHECK(z.computed == 0.0);
    CHECK(z.satisfied);
    CHECK_FALSE(z.sharp);

    const std::array<Complex, 2> b{Complex(0.0), Complex(1.2)};
    const auto bad = gronwall_check(from_inverse_coefficients(b, std::nullopt));
    CHECK(bad.computed == doctest::Approx(1.44).epsilon(1e-15));
    CHECK_FALSE(bad.satisfied);

    for (double lambda : {0.25, 0.5, 1.0}) {
        const double mu = PoleScale(0.5).value();
        const auto fp = gronwall_check(subclass_extremal(0.5, lambda));
        CHECK(fp.computed == doctest::Approx(lambda * lambda * mu * mu).epsilon(1e-14));
        CHECK(fp.satisfied);
        CHECK_FALSE(fp.sharp);
    }
}

TEST_CASE("weighted coefficient sum bound") {
    SUBCASE("reference value") {
        const auto rep = weighted_sum_check(subclass_extremal(0.5, 1.0), 1.0, 2.0, 0.5);
        CHECK(rep.computed == doctest::Approx(4.0 / 81.0 * 0.0625).epsilon(1e-14));
        CHECK(rep.bound == doctest::Approx(4.0 / 81.0 * 0.0625).epsilon(1e-14));
        CHECK(rep.sharp);
    }
    SUBCASE("equality for the subclass extremal at every t and r") {
        for (double p : {0.2, 0.5, 0.8})
            for (double lambda : {0.25, 1.0})
                for (double t : {-1.0, 0.0, 0.5, 1.0, 2.0})
                    for (int k = 1; k <= 20; ++k) {
                        const auto rep = weighted_sum_check(subclass_extremal(p, lambda), lambda, t, k / 20.0);
                        CHECK(rep.sharp);
                    }
    }
    SUBCASE("subclass extremal with smaller lambda satisfies a larger lambda strictly") {
        const auto rep = weighted_sum_check(subclass_extremal(0.5, 0.3), 0.9, 1.0, 0.7);
        CHECK(rep.satisfied);
        CHECK_FALSE(rep.sharp);
    }
    SUBCASE("errors") {
        CHECK(kind_of([] { weighted_sum_check(subclass_extremal(0.5, 1.0), 1.0, 2.5, 0.5); }) == ErrorKind::BadParameter);
        CHECK(kind_of([] { weighted_sum_check(build_koebe_rotation(0.0), 1.0, 1.0, 0.5); }) == ErrorKind::NoPole);
        CHECK(kind_of([] { weighted_sum_check(subclass_extremal(0.5, 1.0), 1.0, 1.0, 0.0); }) == ErrorKind::BadRadius);
        CHECK(kind_of([] { weighted_sum_check(subclass_extremal(0.5, 1.0), 0.0, 1.0, 0.5); }) == ErrorKind::BadParameter);
    }
}

TEST_CASE("Dirichlet maxima of z/f") {
    CHECK(max_dirichlet_zf_sigma_p(1.0, 0.5) == doctest::Approx(8.25 * kPi).epsilon(1e-15));
    CHECK(std::abs(max_dirichlet_zf_sigma_p(0.6, 1.0 - 1e-9) - max_dirichlet_zf_s(0.6)) <= 1e-7);
    CHECK(max_dirichlet_zf_s(1.0) == doctest::Approx(6.0 * kPi).epsilon(1e-15));

    const double expected = kPi * 0.25 * (std::pow(37.0 / 18.0, 2) + 2.0 / 81.0 * 0.25);
    CHECK(max_dirichlet_zf_up_lambda(0.5, 0.5, 1.0) == doctest::Approx(expected).epsilon(1e-15));

    for (double p : {0.2, 0.35, 0.5, 0.65, 0.8})
        for (double lambda : {0.25, 0.5, 1.0})
            for (int k = 1; k <= 20; ++k) {
                const double r = k / 20.0;
                CHECK(max_dirichlet_zf_up_lambda(r, p, lambda) < max_dirichlet_zf_sigma_p(r, p) - 1e-12);
                CHECK(oracle::rel_err(dirichlet_series(sigma_extremal(p).inv_series(), r).value,
                                      max_dirichlet_zf_sigma_p(r, p)) <= 1e-10);
            }

    CHECK(kind_of([] { max_dirichlet_zf_sigma_p(0.0, 0.5); }) == ErrorKind::BadRadius);
    CHECK(kind_of([] { max_dirichlet_zf_sigma_p(0.5, 1.0); }) == ErrorKind::BadParameter);
    CHECK(kind_of([] { max_dirichlet_zf_up_lambda(0.5, 0.5, 2.0); }) == ErrorKind::BadParameter);
}

TEST_CASE("Dirichlet maxima on the pole disk") {
    const auto kp = sigma_extremal(0.5, 256);
    CHECK(oracle::rel_err(max_dirichlet_f_over_z(0.25, 0.5), dirichlet_f_over_z_series(kp, 0.25).value) <= 1e-9);
    CHECK(oracle::rel_err(max_dirichlet_f(0.25, 0.5), dirichlet_f_series(kp, 0.25).value) <= 1e-9);
    CHECK(oracle::rel_err(max_dirichlet_f_over_z(0.25, 0.5), oracle::extremal_dirichlet_f_over_z_brute(0.5, 0.25)) <= 1e-12);
    CHECK(oracle::rel_err(max_dirichlet_f(0.25, 0.5), oracle::extremal_dirichlet_f_brute(0.5, 0.25)) <= 1e-12);

    const double r = 0.5;
    CHECK(max_dirichlet_f_over_z_s(r) == doctest::Approx(2 * kPi * r * r * (r * r + 2) / std::pow(1 - r * r, 4)));
    CHECK(max_dirichlet_f_s(r) == doctest::Approx(kPi * r * r * (std::pow(r, 4) + 4 * r * r + 1) / std::pow(1 - r * r, 4)));
    CHECK(oracle::rel_err(max_dirichlet_f_over_z(r, 0.999), max_dirichlet_f_over_z_s(r)) <= 0.01);
    CHECK(oracle::rel_err(max_dirichlet_f(r, 0.999), max_dirichlet_f_s(r)) <= 0.01);

    CHECK(kind_of([] { max_dirichlet_f_over_z(0.5, 0.5); }) == ErrorKind::RadiusBeyondPole);
    CHECK(kind_of([] { max_dirichlet_f(0.6, 0.5); }) == ErrorKind::RadiusBeyondPole);
    CHECK(kind_of([] { max_dirichlet_f_s(1.0); }) == ErrorKind::BadRadius);
}

TEST_CASE("integral mean bounds") {
    CHECK(l1_bound(ClassSpec::sigma_p(0.5), 1.0) == doctest::Approx(8.25).epsilon(1e-15));
    CHECK(l1_bound(ClassSpec::s(), 0.5) == doctest::Approx(2.0625).epsilon(1e-15));
    CHECK(l1_bound(ClassSpec::up_lambda(0.5, 1.0), 1.0) ==
          doctest::Approx(1.0 + std::pow(37.0 / 18.0, 2) + 1.0 / 81.0).epsilon(1e-15));
    for (double r : {0.1, 0.5, 1.0}) {
        CHECK(l1_bound(ClassSpec::co_p(0.4), r) == l1_bound(ClassSpec::sigma_p(0.4), r));
        CHECK(l1_bound(ClassSpec::sigma_star_p(0.4, -1.0), r) == l1_bound(ClassSpec::sigma_p(0.4), r));
    }
    CHECK(class_bound(ClassSpec::sigma_p(0.5), BoundQuantity::DirichletZf, 1.0) ==
          max_dirichlet_zf_sigma_p(1.0, 0.5));
    CHECK(class_bound(ClassSpec::s(), BoundQuantity::L1, 0.5) == l1_bound(ClassSpec::s(), 0.5));
    CHECK(kind_of([] { l1_bound(ClassSpec::s(), 1.5); }) == ErrorKind::BadRadius);
}

TEST_CASE("check_bound") {
    CHECK(check_bound(sigma_extremal(0.5), ClassSpec::sigma_p(0.5), BoundQuantity::DirichletZf, 0.7).sharp);
    CHECK(check_bound(sigma_extremal(0.5), ClassSpec::co_p(0.5), BoundQuantity::L1, 0.7).sharp);
    CHECK(check_bound(sigma_extremal(0.5), ClassSpec::sigma_star_p(0.5, -1.0), BoundQuantity::L1, 1.0).sharp);
    CHECK(check_bound(build_koebe_rotation(2.0), ClassSpec::s(), BoundQuantity::DirichletZf, 0.3).sharp);

    const auto z = check_bound(identity(), ClassSpec::s(), BoundQuantity::L1, 0.6);
    CHECK(z.computed == 1.0);
    CHECK(z.satisfied);
    CHECK_FALSE(z.sharp);

    const auto fp = check_bound(subclass_extremal(0.5, 0.5), ClassSpec::sigma_p(0.5), BoundQuantity::L1, 1.0);
    CHECK(fp.satisfied);
    CHECK_FALSE(fp.sharp);
    CHECK(fp.quantity_name == "L1");

    CHECK(kind_of([] { check_bound(sigma_extremal(0.5), ClassSpec::sigma_p(0.4), BoundQuantity::L1, 0.5); }) ==
          ErrorKind::ClassMismatch);
    CHECK(kind_of([] { check_bound(sigma_extremal(0.5), ClassSpec::s(), BoundQuantity::L1, 0.5); }) ==
          ErrorKind::ClassMismatch);
    CHECK(kind_of([] { check_bound(identity(), ClassSpec::sigma_p(0.5), BoundQuantity::L1, 0.5); }) ==
          ErrorKind::ClassMismatch);
}
