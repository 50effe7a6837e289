#include <doctest.h>

#include <random>
#include <sstream>

#include "mero/csv.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace mero;
using testutil::kind_of;

TEST_CASE("number formatting") {
    CHECK(csv::format_number(0.5) == "0.5");
    CHECK(csv::format_number(8.25 * std::numbers::pi) == "25.9181393921");
    CHECK(csv::format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(csv::format_number(1e-5) == "1e-05");
    CHECK(csv::format_number(1.5e-4) == "0.00015");
    CHECK(csv::format_number(-0.0) == "0");
    CHECK(csv::format_number(std::nan("")) == "nan");
    CHECK(csv::format_number(-INFINITY) == "-inf");
    CHECK(csv::format_optional(std::nullopt).empty());
    CHECK(csv::format_bool(true) == "true");
}

TEST_CASE("function rows round-trip") {
    std::mt19937_64 gen(61);
    for (int trial = 0; trial < 100; ++trial) {
        const bool with_pole = trial % 3 != 0;
        const std::size_t order = 1 + gen() % 12;
        const PoleFunction f = with_pole
                                   ? testutil::random_pole_member(gen, 0.1 + 0.85 * oracle::uniform(gen), order)
                                   : [&] {
                                         std::vector<Complex> b(order);
                                         for (auto& x : b)
                                             x = Complex(oracle::uniform(gen) - 0.5, oracle::uniform(gen)) * 100.0;
                                         return from_inverse_coefficients(b, std::nullopt);
                                     }();
        const auto back = csv::parse_function_row(csv::format_function_row(f));
        CHECK(back.pole() == f.pole());
        CHECK(back.inv_series() == f.inv_series());
    }
}

TEST_CASE("function row parsing") {
    const auto kp = csv::parse_function_row("0.5,2,-2.5,0,1,0");
    CHECK(kp.inv_series() == sigma_extremal(0.5, 2).inv_series());
    CHECK(csv::parse_function_row(" , 1 , 3 , 0 ").b(1) == Complex(3.0));
    CHECK(csv::parse_function_row(",0").order() == 0);

    CHECK(kind_of([] { csv::parse_function_row("0.5"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { csv::parse_function_row("0.5,2,-2.5,0,1"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { csv::parse_function_row("0.5,1.5,1,0"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { csv::parse_function_row("0.5,-1"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { csv::parse_function_row("abc,1,0,0"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { csv::parse_function_row(",1,1x,0"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { csv::parse_function_row("0.5,1,-1,0"); }) == ErrorKind::PoleMismatch);
    CHECK(kind_of([] { csv::parse_function_row(",1,nan,0"); }) == ErrorKind::NonFinite);
}

TEST_CASE("reading a function file") {
    std::istringstream in("# header comment\n\n0.5,2,-2.5,0,1,0\n  \n,1,0.5,0\n");
    const auto rows = csv::read_function_rows(in);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].pole() == 0.5);
    CHECK_FALSE(rows[1].pole().has_value());
}

TEST_CASE("result rows") {
    const IntegralResult res{8.25 * std::numbers::pi, Method::Series, 0.0, 1.0, Quantity::Dirichlet};
    CHECK(csv::integral_header() == "quantity,method,p,lambda,r,value,tail_estimate");
    CHECK(csv::integral_row(res, 0.5, std::nullopt) == "DIRICHLET,SERIES,0.5,,1,25.9181393921,0");

    CHECK(csv::bound_header() == "quantity,class,p,lambda,w0,r,computed,bound,slack,satisfied,sharp");
    const auto rep = make_report("gronwall", 1.0, 1.0, ClassSpec::sigma_p(0.5), std::nullopt);
    CHECK(csv::bound_row(rep) == "gronwall,SIGMA_P,0.5,,,,1,1,0,true,true");

    CHECK(csv::verdict_header() == "criterion,p,lambda,grid_radius,holds,sup_value,threshold,witness_re,witness_im");
    CriterionVerdict v;
    v.criterion = Criterion::UnivalenceCriterion;
    v.holds = false;
    v.sup_value = 2.0;
    v.threshold = 1.0 / 9.0;
    v.p = 0.5;
    v.grid_radius = 0.99;
    v.witness = Complex(0.5, -0.25);
    CHECK(csv::verdict_row(v) == "univalence_criterion,0.5,,0.99,false,2,0.111111111111,0.5,-0.25");
    v.witness.reset();
    v.holds = true;
    CHECK(csv::verdict_row(v) == "univalence_criterion,0.5,,0.99,true,2,0.111111111111,,");
}
