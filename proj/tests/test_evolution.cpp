#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "doctest.h"
#include "revival/angle.hpp"
#include "revival/evolution.hpp"

using namespace revival;

TEST_CASE("rational time reduction") {
    RationalTime t(2, 4);
    CHECK(t.p == 1);
    CHECK(t.q == 2);
    CHECK(t.value() == doctest::Approx(pi / 2).epsilon(1e-16));
    RationalTime z(0, 5);
    CHECK(z.p == 0);
    CHECK(z.q == 1);
    CHECK_THROWS_AS(RationalTime(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(RationalTime(1, 0), std::invalid_argument);
}

TEST_CASE("initial data coefficients") {
    FourierInitialData step = FourierInitialData::riemann_step();
    CHECK(step.coefficient(0) == std::complex<double>(0.5, 0.0));
    CHECK(step.coefficient(1) == std::complex<double>(0.0, -1.0 / pi));
    CHECK(step.coefficient(2) == std::complex<double>(0.0, 0.0));
    CHECK(step.coefficient(-3) == std::complex<double>(0.0, 1.0 / (3 * pi)));

    FourierInitialData saw = FourierInitialData::integrated_delta();
    CHECK(saw.coefficient(0) == std::complex<double>(0.0, 0.0));
    CHECK(saw.coefficient(3) == std::complex<double>(0.0, -1.0 / (6 * pi)));
    CHECK(saw.coefficient(-3) == std::complex<double>(0.0, 1.0 / (6 * pi)));

    FourierInitialData cus = FourierInitialData::custom(
        {{0.25, 0.0}, {0.5, -0.25}, {0.0, 0.0}, {0.0, 0.1}});
    CHECK(cus.coefficient(1) == std::complex<double>(0.5, -0.25));
    CHECK(cus.coefficient(-1) == std::complex<double>(0.5, 0.25));
    CHECK(cus.coefficient(4) == std::complex<double>(0.0, 0.0));
    CHECK_THROWS_AS(FourierInitialData::custom({{0.25, 0.5}}),
                    std::invalid_argument);
}

TEST_CASE("evolved coefficients preserve magnitude exactly") {
    FourierInitialData step = FourierInitialData::riemann_step();
    DispersionSpec bo = DispersionSpec::bo();
    PolarCoefficient pc = evolved_coefficient(bo, step, 0.37, 5);
    CHECK(pc.magnitude == 1.0 / (5 * pi));
    CHECK(pc.phase ==
          doctest::Approx(reduce_angle(-pi / 2 - 25.0 * 0.37)).epsilon(1e-12));
    PolarCoefficient k3 = evolved_coefficient(DispersionSpec::kdv(), step, 0.37, 3);
    CHECK(k3.phase ==
          doctest::Approx(reduce_angle(-pi / 2 - 27.0 * 0.37)).epsilon(1e-12));
}

TEST_CASE("series plan structure") {
    FourierInitialData step = FourierInitialData::riemann_step();
    SeriesPlan plan = make_series_plan(DispersionSpec::bo(), step,
                                       RationalTime(1, 5), 11);
    CHECK(plan.constant == 0.5);
    // step data keeps odd modes <= 11 only
    CHECK(plan.mode.size() == 6);
    CHECK(plan.mode.front() == 1);
    CHECK(plan.mode.back() == 11);
    for (size_t i = 0; i < plan.mode.size(); ++i)
        CHECK(plan.amp[i] ==
              doctest::Approx(2.0 / (pi * plan.mode[i])).epsilon(1e-15));
    SeriesPlan saw = make_series_plan(DispersionSpec::bo(),
                                      FourierInitialData::integrated_delta(),
                                      RationalTime(1, 5), 5);
    CHECK(saw.constant == 0.0);
    CHECK(saw.mode.size() == 5);
    CHECK(saw.amp[2] == doctest::Approx(1.0 / (3 * pi)).epsilon(1e-15));
}

TEST_CASE("rational phases are modular in the mode index") {
    // kdv at t = pi/6: psi depends on m^3 mod 12 only, so odd modes repeat
    // with period 12 -> plan entries 6 apart coincide bitwise.
    SeriesPlan plan = make_series_plan(DispersionSpec::kdv(),
                                       FourierInitialData::riemann_step(),
                                       RationalTime(1, 6), 101);
    REQUIRE(plan.mode.size() == 51);
    for (size_t i = 0; i + 6 < plan.mode.size(); ++i) {
        CHECK(plan.mode[i + 6] == plan.mode[i] + 12);
        CHECK(plan.psi[i + 6] == plan.psi[i]);
    }
}

TEST_CASE("rational and double time paths agree at modest truncation") {
    FourierInitialData step = FourierInitialData::riemann_step();
    for (double x : {-2.0, 0.9}) {
        CHECK(evolve_series(DispersionSpec::kdv(), step, RationalTime(1, 6), x, 100) ==
              doctest::Approx(evolve_series(DispersionSpec::kdv(), step,
                                            pi / 6, x, 100))
                  .epsilon(1e-9));
    }
}

TEST_CASE("frozen series regressions") {
    FourierInitialData step = FourierInitialData::riemann_step();
    CHECK(evolve_series(DispersionSpec::bo(), step, 0.4, 1.3, 1000) ==
          doctest::Approx(1.241091621443092).epsilon(1e-12));
    CHECK(evolve_series(DispersionSpec::ilw(2.0), step, RationalTime(1, 7), 0.9,
                        500) ==
          doctest::Approx(0.7729130199141308).epsilon(1e-12));
    CHECK(evolve_series(DispersionSpec::smith(10.0),
                        FourierInitialData::integrated_delta(), 0.8, -1.1,
                        500) ==
          doctest::Approx(-0.011343217790887206).epsilon(1e-11));
    FourierInitialData cus = FourierInitialData::custom(
        {{0.25, 0.0}, {0.5, -0.25}, {0.0, 0.0}, {0.0, 0.1}});
    CHECK(evolve_series(DispersionSpec::kdv(), cus, 0.6, 2.0, 3) ==
          doctest::Approx(0.7727170703757626).epsilon(1e-12));
}

TEST_CASE("plan eval equals evolve_series") {
    FourierInitialData step = FourierInitialData::riemann_step();
    SeriesPlan plan = make_series_plan(DispersionSpec::ilw(2.0), step,
                                       RationalTime(1, 7), 500);
    CHECK(plan.eval(0.9) ==
          evolve_series(DispersionSpec::ilw(2.0), step, RationalTime(1, 7), 0.9,
                        500));
}

TEST_CASE("ilw residual against the advected bo evolution") {
    CHECK(ilw_residual(1.0, RationalTime(1, 7), 0.9, 64) ==
          doctest::Approx(-0.064559318115817).epsilon(1e-11));
    // deep water: residual collapses mode by mode like e^{-2 delta}
    CHECK(std::abs(ilw_residual(100.0, RationalTime(1, 7), 0.9, 64)) < 1e-10);
}

TEST_CASE("rescaled ilw evolution near the kdv limit") {
    CHECK(kdv_rescaled_ilw(0.01, RationalTime(1, 7), 0.9, 32) ==
          doctest::Approx(0.7777644296461532).epsilon(1e-12));
    double kdv = evolve_series(DispersionSpec::kdv(),
                               FourierInitialData::riemann_step(),
                               RationalTime(1, 7), 0.9, 32);
    // the pointwise gap at delta = 0.01, N = 32 is stable and far from zero:
    // the phase error k^3 h(delta k) t grows to O(1) near the cutoff
    CHECK(std::abs(kdv_rescaled_ilw(0.01, RationalTime(1, 7), 0.9, 32) - kdv) ==
          doctest::Approx(0.06840681215946276).epsilon(1e-10));
}
