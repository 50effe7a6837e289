#include <doctest.h>

#include <numbers>
#include <sstream>

#include "mero/sweep.hpp"
#include "test_util.hpp"

using namespace mero;
using testutil::kind_of;

TEST_CASE("quantity names") {
    for (auto q : {SweepQuantity::DirichletZf, SweepQuantity::DirichletF, SweepQuantity::DirichletFOverZ,
                   SweepQuantity::L1})
        CHECK(parse_sweep_quantity(to_string(q)) == q);
    CHECK(to_string(SweepQuantity::DirichletFOverZ) == "DIRICHLET_F_OVER_Z");
    CHECK(kind_of([] { parse_sweep_quantity("L2"); }) == ErrorKind::ParseError);
}

TEST_CASE("default sweep") {
    const auto radii = default_radii();
    REQUIRE(radii.size() == 20);
    CHECK(radii.front() == doctest::Approx(0.05));
    CHECK(radii.back() == 1.0);

    const auto table = build_table(default_sweep());
    // SIGMA_P: 2 * 100 z/f rows + 2 * 45 pole-disk rows; U_P_LAMBDA: 2 * 300; S: 2 * 20.
    CHECK(table.rows.size() == 930);
    CHECK(table.omitted_beyond_pole == 110);
    for (const auto& row : table.rows) {
        CHECK(row.sharp);
        if (row.quantity == SweepQuantity::DirichletF || row.quantity == SweepQuantity::DirichletFOverZ) {
            REQUIRE(row.p.has_value());
            CHECK(row.r < *row.p);
        }
    }
}

TEST_CASE("single cell") {
    SweepSpec spec = default_sweep();
    spec.p_values = {0.5};
    spec.r_values = {1.0};
    spec.quantities = {SweepQuantity::DirichletZf};
    spec.classes = {ClassKind::SigmaP};
    const auto table = build_table(spec);
    REQUIRE(table.rows.size() == 1);
    const auto& row = table.rows.front();
    CHECK(row.computed == doctest::Approx(8.25 * std::numbers::pi).epsilon(1e-14));
    CHECK(row.bound == doctest::Approx(8.25 * std::numbers::pi).epsilon(1e-15));
    CHECK(row.sharp);

    std::ostringstream out;
    write_table_csv(out, table);
    CHECK(out.str() == "quantity,class,p,lambda,r,computed,bound,slack,sharp\n"
                       "DIRICHLET_ZF,SIGMA_P,0.5,,1,25.9181393921,25.9181393921,0,true\n");
}

TEST_CASE("rows are sorted and independent of input order") {
    SweepSpec a = default_sweep();
    a.p_values = {0.3, 0.7};
    a.r_values = {0.9, 0.1, 0.5};
    a.lambda_values = {1.0, 0.5};
    SweepSpec b = a;
    b.p_values = {0.7, 0.3};
    b.r_values = {0.5, 0.9, 0.1};
    b.lambda_values = {0.5, 1.0};
    b.classes = {ClassKind::S, ClassKind::UpLambda, ClassKind::SigmaP};
    std::ostringstream sa, sb;
    write_table_csv(sa, build_table(a));
    write_table_csv(sb, build_table(b));
    CHECK(sa.str() == sb.str());
}

TEST_CASE("sweep validation") {
    auto with = [](auto edit) {
        SweepSpec s = default_sweep();
        edit(s);
        return s;
    };
    CHECK(kind_of([&] { with([](SweepSpec& s) { s.p_values.clear(); }).validate(); }) == ErrorKind::BadParameter);
    CHECK(kind_of([&] { with([](SweepSpec& s) { s.p_values = {1.0}; }).validate(); }) == ErrorKind::BadParameter);
    CHECK(kind_of([&] { with([](SweepSpec& s) { s.r_values = {0.0}; }).validate(); }) == ErrorKind::BadParameter);
    CHECK(kind_of([&] { with([](SweepSpec& s) { s.lambda_values = {1.2}; }).validate(); }) ==
          ErrorKind::BadParameter);
    CHECK(kind_of([&] { with([](SweepSpec& s) { s.classes = {ClassKind::CoP}; }).validate(); }) ==
          ErrorKind::BadParameter);
    CHECK(kind_of([&] { with([](SweepSpec& s) { s.order = 1; }).validate(); }) == ErrorKind::BadParameter);
    CHECK_NOTHROW(default_sweep().validate());
}
