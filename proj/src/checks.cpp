#include "revival/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "revival/angle.hpp"
#include "revival/clausen.hpp"
#include "revival/dispersion.hpp"
#include "revival/evolution.hpp"
#include "revival/grid.hpp"
#include "revival/kernels.hpp"
#include "revival/log.hpp"
#include "revival/profiles.hpp"
#include "revival/trigpolylog.hpp"

namespace revival {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// Buffer keeping sup checks non-vacuous on fine lattices: the written 0.3
// exceeds the largest possible node distance pi/(2q) once q >= 6.
double lattice_buffer(long long q) {
    return std::min(0.3, 0.4 * pi / static_cast<double>(q));
}

std::vector<double> buffered_points(const RevivalProfile& prof, long long n,
                                    double buffer) {
    Grid g = Grid::uniform(n, -pi, pi);
    std::vector<double> pts;
    for (long long i = 0; i < n; ++i) {
        double x = g.point(i);
        if (prof.node_distance(x) >= buffer) pts.push_back(x);
    }
    return pts;
}

CheckResult criterion_polylog_oracle() {
    std::mt19937 rng(20260823u);
    std::uniform_real_distribution<double> unif(-pi, pi);
    auto tol_of = [](int r) { return r == 1 ? 5e-4 : (r == 2 ? 1e-5 : 1e-9); };
    auto n_of = [](int r) { return r == 1 ? 200000LL : 100000LL; };
    double worst = 0.0;
    int points = 0;
    auto probe = [&](int j, int k, int r) {
        double x;
        do {
            x = unif(rng);
        } while (node_distance(k, x) < 0.2);
        PolylogIndex idx(j, k, r);
        SCPair cf = eval_trig_polylog(idx, x);
        std::complex<double> ps = series_partial_sum(idx, x, n_of(r));
        double d = std::max(std::abs(cf.S - ps.imag()), std::abs(cf.C - ps.real()));
        worst = std::max(worst, d / tol_of(r));
        ++points;
    };
    for (int k = 1; k <= 6; ++k)
        for (int j = 1; j <= k; ++j)
            for (int r = 1; r <= 3; ++r)
                for (int rep = 0; rep < 3; ++rep) probe(j, k, r);
    std::uniform_int_distribution<int> pick_k(1, 6), pick_r(1, 3);
    while (points < 200) {
        int k = pick_k(rng);
        std::uniform_int_distribution<int> pick_j(1, k);
        probe(pick_j(rng), k, pick_r(rng));
    }
    return {"criterion_01_polylog_oracle", worst <= 1.0, worst, 1.0,
            "max |closed-series|/tol over 200 points covering k<=6, j<=k, "
            "r in {1,2,3}; tol 5e-4 (r=1, N=2e5), 1e-5 (r=2), 1e-9 (r=3, N=1e5); "
            "node distance >= 0.2"};
}

CheckResult criterion_identities() {
    const double xs[] = {-2.3, -0.7, 0.31, 1.9};
    double worst = 0.0;
    for (int M = 2; M <= 3; ++M)
        for (int k = 1; k <= 3; ++k)
            for (int j = 1; j <= k; ++j)
                for (int r = 1; r <= 2; ++r)
                    for (double x : xs) {
                        if (node_distance(k, x) < 0.1) continue;
                        SCPair base = eval_trig_polylog(PolylogIndex(j, k, r), x);
                        // scale: M^r {S,C}^{Mk}_{Mj,r}(x/M) reproduces order k
                        SCPair sc = eval_trig_polylog(
                            PolylogIndex(M * j, M * k, r), x / M);
                        double mr = std::pow(static_cast<double>(M), r);
                        worst = std::max(worst,
                                         std::abs(mr * sc.S - base.S) / 1e-10);
                        worst = std::max(worst,
                                         std::abs(mr * sc.C - base.C) / 1e-10);
                        // sum over the coset split j + N k mod M k
                        NeumaierSum aS, aC;
                        for (int N = 0; N < M; ++N) {
                            SCPair t = eval_trig_polylog(
                                PolylogIndex(j + N * k, M * k, r), x);
                            aS.add(t.S);
                            aC.add(t.C);
                        }
                        worst = std::max(worst, std::abs(aS.value() - base.S) / 1e-10);
                        worst = std::max(worst, std::abs(aC.value() - base.C) / 1e-10);
                    }
    // derivative chains d/dx S_{r+1} = C_r, d/dx C_{r+1} = -S_r
    const double h = 1e-5;
    for (int k = 1; k <= 3; ++k)
        for (int j = 1; j <= k; ++j)
            for (int r = 1; r <= 2; ++r)
                for (double x : xs) {
                    if (node_distance(k, x) < 0.1) continue;
                    PolylogIndex hi(j, k, r + 1), lo(j, k, r);
                    SCPair up = eval_trig_polylog(hi, x + h);
                    SCPair dn = eval_trig_polylog(hi, x - h);
                    SCPair ref = eval_trig_polylog(lo, x);
                    double dS = (up.S - dn.S) / (2.0 * h);
                    double dC = (up.C - dn.C) / (2.0 * h);
                    worst = std::max(worst, std::abs(dS - ref.C) / 1e-5);
                    worst = std::max(worst, std::abs(dC + ref.S) / 1e-5);
                }
    return {"criterion_02_identities", worst <= 1.0, worst, 1.0,
            "scale/sum identities (M in {2,3}, k<=3, r in {1,2}) normalised by "
            "1e-10; derivative chains by central differences normalised by 1e-5"};
}

CheckResult criterion_node_behaviour() {
    const double e1 = 1e-8, e2 = 1e-6;
    double worst_jump = 0.0;
    int cusp_mismatch = 0, nodes_checked = 0;
    for (int k = 1; k <= 5; ++k)
        for (int j = 1; j <= k; ++j)
            for (int fi = 0; fi < 2; ++fi) {
                Family fam = fi == 0 ? Family::S : Family::C;
                PolylogIndex idx(j, k, 1);
                for (long long l = 0; l < k; ++l) {
                    double x0 = two_pi * static_cast<double>(l) / k;
                    auto at = [&](double x) {
                        SCPair v = eval_trig_polylog(idx, x);
                        return fam == Family::S ? v.S : v.C;
                    };
                    NodeBehaviour nb = node_behaviour(idx, l, fam);
                    double jump = at(x0 + e1) - at(x0 - e1);
                    worst_jump = std::max(worst_jump,
                                          std::abs(jump - nb.jump_height));
                    // log-cusp weight from the even part at two scales
                    double even1 = at(x0 + e1) + at(x0 - e1);
                    double even2 = at(x0 + e2) + at(x0 - e2);
                    double w_est = (even1 - even2) / (2.0 * std::log(e2 / e1));
                    CuspSign seen = std::abs(w_est) > 1e-3
                                        ? (w_est > 0 ? CuspSign::up : CuspSign::down)
                                        : CuspSign::none;
                    if (seen != nb.cusp_sign) ++cusp_mismatch;
                    ++nodes_checked;
                }
            }
    double measured = std::max(worst_jump / 1e-5,
                               static_cast<double>(cusp_mismatch));
    return {"criterion_03_node_behaviour", measured <= 1.0, measured, 1.0,
            "jumps from one-sided limits at +-1e-8 over all nodes, k<=5, both "
            "families, normalised by 1e-5 (worst " + fmt(worst_jump) +
            "); cusp classes matched at " + fmt(nodes_checked) +
            " nodes with " + fmt(cusp_mismatch) +
            " mismatches; C-family jump sign follows the closed form "
            "(-(pi/k) sin), the opposite of the quoted display"};
}

CheckResult criterion_kdv_quantisation() {
    double worst_const = 0.0, worst_series = 0.0;
    for (long long q : {6LL, 9LL}) {
        RationalTime t(1, q);
        RevivalProfile prof = kdv_rational_profile(t);
        for (long long m = -q; m < q; ++m) {
            double a = pi * static_cast<double>(m) / q + 0.05;
            double b = pi * static_cast<double>(m + 1) / q - 0.05;
            double mn = 1e300, mx = -1e300;
            for (int i = 0; i < 50; ++i) {
                double x = a + (b - a) * (i + 0.5) / 50.0;
                double v = prof.evaluate(x);
                mn = std::min(mn, v);
                mx = std::max(mx, v);
            }
            worst_const = std::max(worst_const, mx - mn);
        }
        SeriesPlan plan = make_series_plan(
            DispersionSpec::kdv(), FourierInitialData::riemann_step(), t, 100000);
        for (double x : buffered_points(prof, 1001, lattice_buffer(q)))
            worst_series =
                std::max(worst_series, std::abs(prof.evaluate(x) - plan.eval(x)));
    }
    double measured = std::max(worst_const / 1e-9, worst_series / 1e-3);
    return {"criterion_04_kdv_quantisation", measured <= 1.0, measured, 1.0,
            "t = pi/6, pi/9: plateau variation " + fmt(worst_const) +
            " (bound 1e-9, 50 samples, 0.05 buffer); closed vs N=1e5 series "
            "sup " + fmt(worst_series) +
            " (bound 1e-3, buffer min(0.3, 0.4 pi/q))"};
}

CheckResult criterion_bo_revival() {
    double worst = 0.0, worst_census = 0.0;
    bool lattice_ok = true;
    int dead_total = 0;
    const double e1 = 1e-8, e2 = 1e-6;
    for (long long q : {2LL, 5LL, 6LL, 8LL, 9LL}) {
        RationalTime t(1, q);
        RevivalProfile prof = bo_rational_profile(t);
        SeriesPlan plan = make_series_plan(
            DispersionSpec::bo(), FourierInitialData::riemann_step(), t, 100000);
        for (double x : buffered_points(prof, 1001, lattice_buffer(q)))
            worst = std::max(worst, std::abs(prof.evaluate(x) - plan.eval(x)));
        // Singular support census.  Every term is singular on {pi m/q}, but
        // the aggregated jump (pi/k2) sum cos and log-cusp (1/k2) sum sin
        // weights can cancel exactly; for even q paired residues do cancel
        // and the profile is regular there.  Verify the predicted weights
        // against one-sided limits at every residue, dead ones included.
        long long k2 = 2 * q;
        for (long long m = 0; m < k2; ++m) {
            double cusp_w = 0.0, jump_w = 0.0;
            for (const auto& term : prof.terms) {
                long long l = ((m - term.shift_num) % k2 + k2) % k2;
                cusp_w += term.weight / k2 *
                          unit_sin(static_cast<long long>(term.index) * l, k2);
                jump_w += term.weight * pi / k2 *
                          unit_cos(static_cast<long long>(term.index) * l, k2);
            }
            if (std::abs(cusp_w) < 1e-12 && std::abs(jump_w) < 1e-12)
                ++dead_total;
            double x0 = pi * static_cast<double>(m) / q;
            double jump_meas = prof.evaluate(x0 + e1) - prof.evaluate(x0 - e1);
            double even1 = prof.evaluate(x0 + e1) + prof.evaluate(x0 - e1);
            double even2 = prof.evaluate(x0 + e2) + prof.evaluate(x0 - e2);
            double w_est = (even1 - even2) / (2.0 * std::log(e2 / e1));
            worst_census = std::max(worst_census, std::abs(jump_meas - jump_w));
            worst_census = std::max(worst_census, std::abs(w_est - cusp_w));
        }
        std::vector<double> lattice = prof.singular_set();
        for (long long m = -q; m < q; ++m)
            if (std::abs(lattice[static_cast<size_t>(m + q)] -
                         pi * static_cast<double>(m) / q) > 1e-15)
                lattice_ok = false;
    }
    double measured = std::max({worst / 1e-3, worst_census / 1e-5,
                                lattice_ok ? 0.0 : 2.0});
    return {"criterion_05_bo_revival", measured <= 1.0, measured, 1.0,
            "t = pi/q, q in {2,5,6,8,9}: closed vs N=1e5 series sup " +
            fmt(worst) + " (bound 1e-3, buffer min(0.3, 0.4 pi/q)); jump and "
            "log-cusp weights at all lattice residues match the exact integer "
            "census to " + fmt(worst_census) + " (bound 1e-5); " +
            fmt(dead_total) + " residues (even q only) have exactly "
            "cancelling weights and are regular points"};
}

CheckResult criterion_ilw_shifted_bo() {
    RationalTime t(1, 7);
    double delta = 100.0;
    RevivalProfile prof = bo_rational_profile(t);
    double worst = 0.0;
    for (double x : buffered_points(prof, 1001, lattice_buffer(7)))
        worst = std::max(worst, std::abs(ilw_residual(delta, t, x, 64)));
    return {"criterion_06_ilw_shifted_bo", worst / 1e-10 <= 1.0, worst / 1e-10,
            1.0,
            "delta=100, t=pi/7, N=64: sup |u_ilw - u_bo(x + t/delta)| = " +
            fmt(worst) + " against bound 1e-10"};
}

CheckResult criterion_ilw_kdv_limit() {
    const double delta = 0.01;
    RationalTime t(1, 7);
    double worst_symbol = 0.0;
    for (int k = 1; k <= 32; ++k) {
        double md = k;
        double lhs = std::abs(md * md * md * coth_gap_h(delta * md));
        double rhs = 1.1 * md * md * md * md * md * delta * delta / 15.0;
        worst_symbol = std::max(worst_symbol, lhs / rhs);
    }
    RevivalProfile prof = kdv_rational_profile(t);
    SeriesPlan kdv_plan = make_series_plan(
        DispersionSpec::kdv(), FourierInitialData::riemann_step(), t, 32);
    double worst_profile = 0.0;
    for (double x : buffered_points(prof, 1001, lattice_buffer(7)))
        worst_profile = std::max(
            worst_profile,
            std::abs(kdv_rescaled_ilw(delta, t, x, 32) - kdv_plan.eval(x)));
    double measured = std::max(worst_symbol, worst_profile / 0.05);
    return {"criterion_07_ilw_kdv_limit", measured <= 1.0, measured, 1.0,
            "symbol gap ratio " + fmt(worst_symbol) +
            " (bound 1.1 k^5 delta^2/15, k<=32); profile sup " +
            fmt(worst_profile) +
            " vs bound 0.05 at N=32, t=pi/7, delta=0.01 -- the rescaled "
            "symbol phase error ~ t delta^2 k^5/15 passes 1 rad at k=13, so "
            "modes 13..31 decorrelate and the bound is unattainable at this "
            "delta (holds only for N <= 11 or delta <~ 1e-4)"};
}

CheckResult criterion_smith_certificate() {
    RationalTime t(1, 5);
    const double delta = 10.0;
    RevivalProfile prof = smith_rational_profile(t, delta);
    const double frozen_bound = 1.0450717666880243e-4;
    double bound_dev = std::abs(prof.error_bound / frozen_bound - 1.0);
    SeriesPlan plan = make_series_plan(DispersionSpec::smith(delta),
                                       FourierInitialData::riemann_step(), t,
                                       100000);
    double worst = 0.0;
    for (double x : buffered_points(prof, 1001, 0.3))
        worst = std::max(worst, std::abs(prof.evaluate(x) - plan.eval(x)));
    double allowance = prof.error_bound + 2e-3;
    double measured = std::max(worst / allowance, bound_dev / 1e-10);
    return {"criterion_08_smith_certificate", measured <= 1.0, measured, 1.0,
            "delta=10, (p,q)=(1,5): error_bound = " + fmt(prof.error_bound) +
            " (frozen 1.04507e-4); sup |closed - series(1e5)| = " + fmt(worst) +
            " <= error_bound + 2e-3 at node distance >= 0.3"};
}

double bessel_k1_quadrature(double x) {
    // Independent route: K_1(x) = int_0^inf e^{-x cosh t} cosh t dt.
    // Fixed-panel Simpson with doubling until stable.
    double upper = std::acosh(std::max(3.0, 745.0 / x));
    auto f = [x](double t) {
        double c = std::cosh(t);
        return std::exp(-x * c) * c;
    };
    double prev = 0.0;
    for (long long n = 64;; n *= 2) {
        NeumaierSum s;
        double h = upper / static_cast<double>(n);
        s.add(f(0.0));
        s.add(f(upper));
        for (long long i = 1; i < n; ++i)
            s.add((i % 2 ? 4.0 : 2.0) * f(h * static_cast<double>(i)));
        double cur = s.value() * h / 3.0;
        if (n >= 256 && std::abs(cur - prev) <= 1e-11 * std::abs(cur)) return cur;
        if (n > (1LL << 20))
            throw ConvergenceError("bessel_k1_quadrature: no convergence");
        prev = cur;
    }
}

CheckResult criterion_kernels() {
    double worst = 0.0;
    IlwKernelSpec ks(1.0, 400);
    for (double x : {0.5, 1.2, 2.9, -2.2}) {
        double lhs = ilw_kernel(ks, x + two_pi, IlwKernelMethod::coth_sum);
        double rhs = ilw_kernel(ks, x, IlwKernelMethod::coth_sum);
        worst = std::max(worst, std::abs(lhs - rhs + 1.0 / ks.delta) / 1e-8);
        double z = ilw_kernel(ks, x, IlwKernelMethod::zeta);
        worst = std::max(worst, std::abs(rhs - z) / 1e-8);
    }
    for (double x : {0.7, 2.0}) {
        std::complex<double> base = smith_kernel_periodic(1.0, x, 10);
        for (long long n : {20LL, 40LL, 100LL})
            worst = std::max(worst,
                             std::abs(smith_kernel_periodic(1.0, x, n) - base) /
                                 1e-12);
    }
    for (double x : {1e-3, 1e-2, 0.1, 0.5, 1.0, 2.0, 3.0, 5.0, 10.0, 20.0, 30.0}) {
        double q = bessel_k1_quadrature(x);
        worst = std::max(worst, std::abs(bessel_k1(x) / q - 1.0) / 1e-8);
    }
    return {"criterion_09_kernels", worst <= 1.0, worst, 1.0,
            "quasi-periodicity residual and coth/zeta agreement at delta=1, "
            "N=400 (1e-8); smith kernel truncation stability N>=10 (1e-12); "
            "K_1 vs cosh-integral quadrature on [1e-3, 30] (rel 1e-8)"};
}

CheckResult criterion_bessel_fourier_pair() {
    double worst = 0.0;
    for (double a : {0.5, 1.0, 2.0})
        for (double x : {0.5, 1.0, 2.0})
            worst = std::max(worst, verify_bessel_fourier_pair(a, x).abs_err / 1e-4);
    return {"criterion_10_bessel_fourier_pair", worst <= 1.0, worst, 1.0,
            "quadrature vs sqrt(2/pi) a|x| K_1(a|x|) on a, x in {0.5, 1, 2}, "
            "bound 1e-4 (tail of the k-cut at 500 is ~ a^2 2e-6)"};
}

}  // namespace

std::vector<CheckResult> run_verification_suite(double tolerance_scale) {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    std::vector<CheckResult> results;
    CheckResult (*checks[])() = {
        criterion_polylog_oracle, criterion_identities, criterion_node_behaviour,
        criterion_kdv_quantisation, criterion_bo_revival,
        criterion_ilw_shifted_bo, criterion_ilw_kdv_limit,
        criterion_smith_certificate, criterion_kernels, criterion_bessel_fourier_pair,
    };
    for (auto* fn : checks) {
        CheckResult r = fn();
        r.bound *= tolerance_scale;
        r.pass = r.measured <= r.bound;
        log_msg(LogLevel::info, r.name + (r.pass ? " pass " : " FAIL ") +
                                    fmt(r.measured) + " / " + fmt(r.bound));
        results.push_back(std::move(r));
    }
    double elapsed =
        std::chrono::duration<double>(clock::now() - start).count();
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    CheckResult c11{"criterion_11_verify_runtime", all && elapsed < 300.0,
                    elapsed, 300.0,
                    std::string("criteria 1-10 ") +
                        (all ? "all pass" : "have failures (see above)") +
                        "; suite wall time in seconds vs the 5 minute budget"};
    log_msg(LogLevel::info, c11.name + (c11.pass ? " pass" : " FAIL"));
    results.push_back(std::move(c11));
    return results;
}

}  // namespace revival
