#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <cstdlib>

#include "doctest.h"
#include "revival/angle.hpp"
#include "revival/clausen.hpp"
#include "revival/trigpolylog.hpp"

using namespace revival;

namespace {

// Frozen high-precision reference values for the closed forms.
struct ClosedCase {
    int j, k, r;
    double x, S, C;
};
const ClosedCase closed_cases[] = {
    {2, 3, 1, 0.5, 0.43786003581377658, 0.10114154714780417},
    {2, 3, 2, 0.7, 0.22819498361738255, 0.015914421375448675},
    {3, 4, 3, 1.1, -0.0033977504105130914, -0.035671002179915539},
    {2, 5, 2, -2.0, 0.17370320353767853, -0.15933175049243022},
    {5, 6, 3, 2.5, -0.00015407490887022148, 0.0074862535355940541},
    {1, 1, 1, 1.0, 1.0707963267948966, 0.042019505825368962},
    {1, 1, 2, 1.0, 1.0139591323607685, 0.32413774005332982},
    {1, 1, 3, 1.0, 0.94286923678411146, 0.4485730072800174},
    {1, 2, 1, -2.0, -0.78539816339744831, -0.22151136205846129},
    {5, 5, 1, 0.9, -0.13584073464102068, -0.088442500946826354},
    {6, 6, 2, 2.2, 0.025730254936975345, 0.020833414025588924},
    {2, 4, 1, 1.3, 0.39269908169872415, -0.32037942207927221},
};

}  // namespace

TEST_CASE("angle reduction window and exactness") {
    CHECK(reduce_angle(0.0) == 0.0);
    CHECK(reduce_angle(pi) == pi);
    CHECK(reduce_angle(-pi) == pi);  // window is (-pi, pi]
    CHECK(reduce_angle(0.5 + 16 * two_pi) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(reduce_angle(-0.5 - 32 * two_pi) ==
          doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(std::abs(reduce_angle_times(4.0, pi / 2)) < 1e-15);
    CHECK(reduce_angle_times(7.0, 0.5 + two_pi) ==
          doctest::Approx(reduce_angle_times(7.0, 0.5)).epsilon(1e-13));
}

TEST_CASE("unit trig values are exact on the quarter lattice") {
    CHECK(unit_sin(1, 4) == 1.0);
    CHECK(unit_cos(1, 4) == 0.0);
    CHECK(unit_sin(3, 4) == -1.0);
    CHECK(unit_sin(1, 2) == 0.0);
    CHECK(unit_cos(1, 2) == -1.0);
    CHECK(unit_cos(0, 7) == 1.0);
    CHECK(unit_sin(1, 8) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    // reflection pairs cancel without rounding residue
    CHECK(unit_sin(2, 7) == -unit_sin(5, 7));
    CHECK(unit_cos(3, 11) == unit_cos(8, 11));
}

TEST_CASE("clausen and glaisher frozen values") {
    struct Row {
        double x, cl2, cl3, sl2, sl3, cl1;
    };
    const Row rows[] = {
        {0.3, 0.66156701022020102, 1.0803499935209631, 1.1961951688097575,
         0.42504438534869758, 1.2077256208505856},
        {1.0, 1.0139591323607685, 0.4485730072800174, 0.32413774005332982,
         0.94286923678411146, 0.042019505825368962},
        {2.5, 0.43359820323553278, -0.76065611096851371, -0.71955675013901511,
         0.50567997921984749, -0.64078449284415992},
        {-1.3, -0.98970325322959855, 0.1462810078593463, 0.025398842014860831,
         -0.99417472409434006, -0.19092842080753647},
    };
    for (const Row& r : rows) {
        CAPTURE(r.x);
        CHECK(clausen_cl(1, r.x) == doctest::Approx(r.cl1).epsilon(1e-13));
        CHECK(clausen_cl(2, r.x) == doctest::Approx(r.cl2).epsilon(1e-13));
        CHECK(clausen_cl(3, r.x) == doctest::Approx(r.cl3).epsilon(1e-13));
        CHECK(glaisher_sl(2, r.x) == doctest::Approx(r.sl2).epsilon(1e-13));
        CHECK(glaisher_sl(3, r.x) == doctest::Approx(r.sl3).epsilon(1e-13));
    }
    CHECK(clausen_cl(0, 1.0) == doctest::Approx(0.5 / std::tan(0.5)));
    CHECK(glaisher_sl(1, 1.0) == doctest::Approx((pi - 1.0) / 2));
    CHECK(glaisher_sl(1, -1.0) == doctest::Approx((-pi + 1.0) / 2));
    CHECK_THROWS_AS(clausen_cl(0, 0.0), SingularPoint);
    CHECK_THROWS_AS(clausen_cl(1, two_pi), SingularPoint);
    CHECK_THROWS_AS(clausen_cl(4, 1.0), std::invalid_argument);
}

TEST_CASE("index validation") {
    CHECK_THROWS_AS(PolylogIndex(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(PolylogIndex(4, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(PolylogIndex(1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(eval_trig_polylog(PolylogIndex(1, 1, 4), 0.5),
                    std::invalid_argument);
}

TEST_CASE("closed forms match frozen references") {
    for (const ClosedCase& c : closed_cases) {
        CAPTURE(c.j);
        CAPTURE(c.k);
        CAPTURE(c.r);
        SCPair sc = eval_trig_polylog(PolylogIndex(c.j, c.k, c.r), c.x);
        CHECK(sc.S == doctest::Approx(c.S).epsilon(1e-12));
        CHECK(sc.C == doctest::Approx(c.C).epsilon(1e-12));
    }
}

TEST_CASE("closed forms agree with long partial sums") {
    {
        PolylogIndex idx(1, 1, 2);
        std::complex<double> ps = series_partial_sum(idx, 1.0, 200000);
        SCPair sc = eval_trig_polylog(idx, 1.0);
        CHECK(ps.imag() == doctest::Approx(sc.S).epsilon(1e-9));
        CHECK(ps.real() == doctest::Approx(sc.C).epsilon(1e-9));
    }
    {
        PolylogIndex idx(2, 3, 1);
        std::complex<double> ps = series_partial_sum(idx, 0.5, 200000);
        SCPair sc = eval_trig_polylog(idx, 0.5);
        CHECK(ps.imag() == doctest::Approx(sc.S).epsilon(1e-4));
        CHECK(ps.real() == doctest::Approx(sc.C).epsilon(1e-4));
    }
    {
        PolylogIndex idx(3, 4, 3);
        std::complex<double> ps = series_partial_sum(idx, 1.1, 20000);
        SCPair sc = eval_trig_polylog(idx, 1.1);
        CHECK(ps.imag() == doctest::Approx(sc.S).epsilon(1e-10));
        CHECK(ps.real() == doctest::Approx(sc.C).epsilon(1e-10));
    }
}

TEST_CASE("node guard for r=1") {
    CHECK_THROWS_AS(eval_trig_polylog(PolylogIndex(1, 3, 1), two_pi / 3),
                    SingularPoint);
    CHECK_NOTHROW(eval_trig_polylog(PolylogIndex(1, 3, 2), two_pi / 3));
    CHECK(node_distance(3, two_pi / 3) < 1e-15);
    CHECK(node_distance(2, 0.4) == doctest::Approx(0.4).epsilon(1e-13));
    CHECK(node_set(4).size() == 5);  // covers [-pi, pi] inclusive
    CHECK(node_tolerance(5) == doctest::Approx(1e-9 * two_pi / 5));
}

TEST_CASE("scale and sum identities") {
    const int jkr[][3] = {{1, 1, 1}, {1, 2, 2}, {2, 3, 1}, {3, 3, 2}};
    const double xs[] = {-2.31, -0.85, 0.31, 1.9};
    for (const auto& t : jkr) {
        PolylogIndex idx(t[0], t[1], t[2]);
        for (int M : {2, 3}) {
            for (double x : xs) {
                if (node_distance(idx.k, x) < 0.1) continue;
                CAPTURE(t[0]);
                CAPTURE(t[1]);
                CAPTURE(t[2]);
                CAPTURE(M);
                CAPTURE(x);
                SCPair base = eval_trig_polylog(idx, x);
                // scale: M^r {S,C}^{Mk}_{Mj,r}(x/M) = {S,C}^k_{j,r}(x)
                SCPair sc =
                    eval_trig_polylog(PolylogIndex(M * idx.j, M * idx.k, idx.r),
                                      x / M);
                double f = std::pow(M, idx.r);
                CHECK(f * sc.S == doctest::Approx(base.S).epsilon(1e-11));
                CHECK(f * sc.C == doctest::Approx(base.C).epsilon(1e-11));
                // sum over the M residue classes refining j mod k
                double sumS = 0.0, sumC = 0.0;
                for (int N = 0; N < M; ++N) {
                    SCPair part = eval_trig_polylog(
                        PolylogIndex(idx.j + N * idx.k, M * idx.k, idx.r), x);
                    sumS += part.S;
                    sumC += part.C;
                }
                CHECK(sumS == doctest::Approx(base.S).epsilon(1e-11));
                CHECK(sumC == doctest::Approx(base.C).epsilon(1e-11));
            }
        }
    }
}

TEST_CASE("derivative chains under central differences") {
    const double h = 1e-5;
    const int jk[][2] = {{1, 1}, {2, 3}};
    const double xs[] = {-2.31, 0.9, 1.9};
    for (const auto& t : jk) {
        for (int r = 1; r <= 2; ++r) {
            for (double x : xs) {
                if (node_distance(t[1], x) < 0.3) continue;
                PolylogIndex hi(t[0], t[1], r + 1), lo(t[0], t[1], r);
                SCPair p = eval_trig_polylog(hi, x + h);
                SCPair m = eval_trig_polylog(hi, x - h);
                SCPair d = eval_trig_polylog(lo, x);
                CAPTURE(t[0]);
                CAPTURE(r);
                CAPTURE(x);
                CHECK((p.S - m.S) / (2 * h) ==
                      doctest::Approx(d.C).epsilon(1e-5));
                CHECK((p.C - m.C) / (2 * h) ==
                      doctest::Approx(-d.S).epsilon(1e-5));
            }
        }
    }
}

TEST_CASE("node jumps equal the delta weights of the derivative") {
    for (int k = 1; k <= 5; ++k) {
        for (int j = 1; j <= k; ++j) {
            PolylogIndex idx(j, k, 1);
            for (Family fam : {Family::S, Family::C}) {
                DerivativeDecomposition d = distributional_derivative(idx, fam);
                for (int l = 0; l < k; ++l) {
                    NodeBehaviour nb = node_behaviour(idx, l, fam);
                    double x0 = two_pi * l / k;
                    bool found = false;
                    for (const DeltaTerm& dt : d.delta_terms) {
                        if (std::abs(reduce_angle(x0 - dt.location)) < 1e-12) {
                            found = true;
                            CHECK(dt.weight ==
                                  doctest::Approx(nb.jump_height).epsilon(1e-13));
                        }
                    }
                    if (!found) CHECK(std::abs(nb.jump_height) < 1e-15);
                }
            }
        }
    }
}

TEST_CASE("measured jumps and cusp signs at nodes") {
    // S^2_1 at l=0: jump pi/2 (cos = 1), no cusp (sin = 0).
    PolylogIndex idx(1, 2, 1);
    const double e = 1e-8;
    NodeBehaviour nb = node_behaviour(idx, 0, Family::S);
    SCPair pl = eval_trig_polylog(idx, e), mi = eval_trig_polylog(idx, -e);
    CHECK(pl.S - mi.S == doctest::Approx(nb.jump_height).epsilon(1e-6));
    CHECK(nb.jump_height == doctest::Approx(pi / 2).epsilon(1e-13));
    CHECK(nb.cusp_sign == CuspSign::none);
    // C^2_1 at l=0: no jump (sin = 0), upward log cusp (cos = 1).
    NodeBehaviour nc = node_behaviour(idx, 0, Family::C);
    CHECK(std::abs(nc.jump_height) < 1e-15);
    CHECK(nc.cusp_sign == CuspSign::up);
    CHECK(pl.C > 9.0);  // (1/2) log cot(x/2) dominates
    // S^5_2 at l=1: jump (pi/5) cos(4 pi/5) < 0, cusp up since sin(4 pi/5) > 0.
    PolylogIndex i52(2, 5, 1);
    NodeBehaviour n52 = node_behaviour(i52, 1, Family::S);
    CHECK(n52.jump_height ==
          doctest::Approx(pi / 5 * std::cos(4 * pi / 5)).epsilon(1e-13));
    CHECK(n52.cusp_sign == CuspSign::up);
    double x1 = two_pi / 5;
    SCPair p52 = eval_trig_polylog(i52, x1 + e);
    SCPair m52 = eval_trig_polylog(i52, x1 - e);
    CHECK(p52.S - m52.S == doctest::Approx(n52.jump_height).epsilon(1e-6));
}

TEST_CASE("r=2 vertical tangents and corners") {
    const double e = 1e-10;
    // S^2_1: cos weight +1 at l=0 (tangent up), -1 at l=1 (down).
    PolylogIndex idx(1, 2, 2);
    CHECK(node_behaviour(idx, 0, Family::S).cusp_sign == CuspSign::up);
    CHECK(node_behaviour(idx, 1, Family::S).cusp_sign == CuspSign::down);
    CHECK(node_behaviour(idx, 0, Family::S).jump_height == 0.0);
    double slope0 = (eval_trig_polylog(idx, e).S -
                     eval_trig_polylog(idx, -e).S) / (2 * e);
    CHECK(slope0 > 6.0);
    double slope1 = (eval_trig_polylog(idx, pi + e).S -
                     eval_trig_polylog(idx, pi - e).S) / (2 * e);
    CHECK(slope1 < -6.0);
    // C^1_1 r=2 at 0: sine weight vanishes -> plain corner, bounded slopes.
    PolylogIndex one(1, 1, 2);
    CHECK(node_behaviour(one, 0, Family::C).cusp_sign == CuspSign::none);
    double corner = (eval_trig_polylog(one, e).C -
                     eval_trig_polylog(one, -e).C) / (2 * e);
    CHECK(std::abs(corner) < 6.0);
}

TEST_CASE("distributional derivative reproduces the smooth part") {
    PolylogIndex idx(2, 3, 1);
    const double h = 1e-6;
    for (Family fam : {Family::S, Family::C}) {
        DerivativeDecomposition d = distributional_derivative(idx, fam);
        for (double x : {0.9, -1.6, 2.9}) {
            SCPair p = eval_trig_polylog(idx, x + h);
            SCPair m = eval_trig_polylog(idx, x - h);
            double diff = fam == Family::S ? (p.S - m.S) : (p.C - m.C);
            CHECK(diff / (2 * h) ==
                  doctest::Approx(d.smooth_at(x)).epsilon(1e-6));
        }
    }
    // S with j=k carries the -1/2 constant; S with j<k does not.
    CHECK(distributional_derivative(PolylogIndex(3, 3, 1), Family::S).constant ==
          doctest::Approx(-0.5));
    CHECK(distributional_derivative(PolylogIndex(2, 3, 1), Family::S).constant ==
          0.0);
}

TEST_CASE("pairwise sums are piecewise constant") {
    // S^3_1 + S^3_2 = pi/3 on (0, 2 pi/3) and 0 on (2 pi/3, 4 pi/3).
    CHECK(pairwise_sum_profile(1, 3, 0.4) == doctest::Approx(pi / 3).epsilon(1e-12));
    CHECK(pairwise_sum_profile(1, 3, 1.2) == doctest::Approx(pi / 3).epsilon(1e-12));
    CHECK(pairwise_sum_profile(1, 3, 1.9) == doctest::Approx(pi / 3).epsilon(1e-12));
    CHECK(std::abs(pairwise_sum_profile(1, 3, 2.5)) < 1e-12);
    CHECK(std::abs(pairwise_sum_profile(1, 3, -2.5)) < 1e-12);
    CHECK_THROWS_AS(pairwise_sum_profile(3, 3, 0.4), std::invalid_argument);
}
