#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "revival/angle.hpp"
#include "revival/grid.hpp"

using namespace revival;

namespace {
bool same_cell(double a, double b) {
    return a == b || (std::isnan(a) && std::isnan(b));
}
}  // namespace

TEST_CASE("grid endpoints are exact") {
    Grid g = Grid::uniform(5, -pi, pi);
    CHECK(g.point(0) == -pi);
    CHECK(g.point(4) == pi);
    CHECK(g.point(2) == 0.0);
    Grid big = Grid::uniform(1001, -pi, pi);
    CHECK(big.point(1000) == pi);
    Grid two = Grid::uniform(2, 0.25, 0.75);
    CHECK(two.point(0) == 0.25);
    CHECK(two.point(1) == 0.75);
    CHECK_THROWS_AS(Grid::uniform(1, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("serial and parallel sweeps are bitwise identical") {
    Grid g = Grid::uniform(257, -pi, pi);
    SeriesPlan plan = make_series_plan(DispersionSpec::bo(),
                                       FourierInitialData::riemann_step(), 0.4,
                                       2000);
    SolutionField s = sweep_series(plan, g, Exec::serial);
    SolutionField p = sweep_series(plan, g, Exec::parallel);
    REQUIRE(s.u.size() == p.u.size());
    for (size_t i = 0; i < s.u.size(); ++i) {
        CHECK(s.x[i] == p.x[i]);
        CHECK(s.u[i] == p.u[i]);
    }
    RevivalProfile prof = bo_rational_profile(RationalTime(1, 3));
    SolutionField ps = sweep_profile(prof, g, Exec::serial);
    SolutionField pp = sweep_profile(prof, g, Exec::parallel);
    for (size_t i = 0; i < ps.u.size(); ++i) CHECK(same_cell(ps.u[i], pp.u[i]));
}

TEST_CASE("series sweep equals plan evaluation pointwise") {
    Grid g = Grid::uniform(64, -2.0, 2.0);
    SeriesPlan plan = make_series_plan(DispersionSpec::ilw(2.0),
                                       FourierInitialData::riemann_step(),
                                       RationalTime(1, 7), 300);
    SolutionField f = sweep_series(plan, g, Exec::parallel);
    for (long long i = 0; i < g.n; ++i) {
        CHECK(f.x[i] == g.point(i));
        CHECK(f.u[i] == plan.eval(g.point(i)));
    }
}

TEST_CASE("profile sweep marks the singular lattice with nan") {
    RevivalProfile prof = bo_rational_profile(RationalTime(1, 2));
    // all five points of this grid lie on the lattice {pi m / 2}
    SolutionField all = sweep_profile(prof, Grid::uniform(5, -pi, pi),
                                      Exec::serial);
    for (double u : all.u) CHECK(std::isnan(u));
    // n = 4 splits off the lattice except at the endpoints
    SolutionField part = sweep_profile(prof, Grid::uniform(4, -pi, pi),
                                       Exec::serial);
    CHECK(std::isnan(part.u[0]));
    CHECK(std::isfinite(part.u[1]));
    CHECK(std::isfinite(part.u[2]));
    CHECK(std::isnan(part.u[3]));
    CHECK(part.u[1] == prof.evaluate(part.x[1]));
}

TEST_CASE("polylog sweep marks r=1 nodes with nan in both columns") {
    PolylogField f = sweep_polylog(PolylogIndex(1, 2, 1),
                                   Grid::uniform(5, -pi, pi), Exec::parallel);
    CHECK(std::isnan(f.S[0]));
    CHECK(std::isnan(f.C[0]));
    CHECK(std::isnan(f.S[2]));
    CHECK(std::isnan(f.S[4]));
    CHECK(f.S[1] == doctest::Approx(-pi / 4).epsilon(1e-13));
    CHECK(f.S[3] == doctest::Approx(pi / 4).epsilon(1e-13));
    CHECK(std::abs(f.C[3]) < 1e-13);
    // r = 2 is continuous everywhere
    PolylogField g = sweep_polylog(PolylogIndex(1, 2, 2),
                                   Grid::uniform(5, -pi, pi), Exec::serial);
    for (double v : g.S) CHECK(std::isfinite(v));
}
