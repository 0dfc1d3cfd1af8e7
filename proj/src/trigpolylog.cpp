#include "revival/trigpolylog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "revival/angle.hpp"
#include "revival/clausen.hpp"

namespace revival {

PolylogIndex::PolylogIndex(int j_, int k_, int r_) : j(j_), k(k_), r(r_) {
    if (k < 1 || j < 1 || j > k)
        throw std::invalid_argument("PolylogIndex: need 1 <= j <= k");
    if (r < 1) throw std::invalid_argument("PolylogIndex: need r >= 1");
}

std::vector<double> node_set(int k) {
    if (k < 1) throw std::invalid_argument("node_set: k >= 1");
    std::vector<double> nodes;
    for (long long l = -(k / 2); l <= k / 2; ++l)
        nodes.push_back(two_pi * static_cast<double>(l) / k);
    return nodes;
}

double node_tolerance(int k) { return 1e-9 * two_pi / k; }

double node_distance(int k, double x) {
    return std::abs(reduce_angle_times(static_cast<double>(k), x)) / k;
}

SCPair eval_trig_polylog(const PolylogIndex& idx, double x) {
    if (idx.r > 3)
        throw std::invalid_argument("eval_trig_polylog: closed forms cover r <= 3");
    if (idx.r == 1 && node_distance(idx.k, x) < node_tolerance(idx.k))
        throw SingularPoint("eval_trig_polylog: x lies on the r=1 node lattice", x);
    const long long k = idx.k, j = idx.j;
    const double step = two_pi / static_cast<double>(k);
    NeumaierSum S, C;
    for (long long l = 1; l <= k; ++l) {
        double sw = unit_sin(j * l, k), cw = unit_cos(j * l, k);
        double y = reduce_angle(std::fma(static_cast<double>(l), step, x));
        double cl, sl;
        switch (idx.r) {
            case 1: cl = detail::cl1_raw(y); sl = detail::sl1_raw(y); break;
            case 2: cl = detail::cl2_raw(y); sl = detail::sl2_raw(y); break;
            default: cl = detail::cl3_raw(y); sl = detail::sl3_raw(y); break;
        }
        if (idx.r % 2 == 1) {
            S.add(-sw * cl + cw * sl);
            C.add(cw * cl + sw * sl);
        } else {
            S.add(cw * cl - sw * sl);
            C.add(sw * cl + cw * sl);
        }
    }
    return {S.value() / k, C.value() / k};
}

std::complex<double> series_partial_sum(const PolylogIndex& idx, double x,
                                        long long n_terms) {
    if (n_terms < 0) throw std::invalid_argument("series_partial_sum: n_terms >= 0");
    const double k = idx.k, j = idx.j;
    double a = reduce_angle_times(k, x);
    const std::complex<double> w(std::cos(a), std::sin(a));
    double b = reduce_angle_times(j, x);
    std::complex<double> z(std::cos(b), std::sin(b));
    NeumaierSum re, im;
    for (long long n = 0; n < n_terms; ++n) {
        double m = static_cast<double>(n) * k + j;
        if (n > 0 && (n & 511) == 0) {
            double ph = reduce_angle_times(m, x);
            z = {std::cos(ph), std::sin(ph)};
        }
        double p;
        switch (idx.r) {
            case 1: p = m; break;
            case 2: p = m * m; break;
            case 3: p = m * m * m; break;
            default: p = std::pow(m, idx.r); break;
        }
        re.add(z.real() / p);
        im.add(z.imag() / p);
        z *= w;
    }
    return {re.value(), im.value()};
}

NodeBehaviour node_behaviour(const PolylogIndex& idx, long long l, Family fam) {
    if (idx.r != 1 && idx.r != 2)
        throw std::invalid_argument("node_behaviour: defined for r in {1, 2}");
    const double sw = unit_sin(static_cast<long long>(idx.j) * l, idx.k);
    const double cw = unit_cos(static_cast<long long>(idx.j) * l, idx.k);
    auto orient = [](double v) {
        return v > 0.0 ? CuspSign::up : (v < 0.0 ? CuspSign::down : CuspSign::none);
    };
    NodeBehaviour nb{};
    if (idx.r == 1) {
        if (fam == Family::S) {
            nb.jump_height = pi / idx.k * cw;
            nb.cusp_sign = orient(sw);
        } else {
            // Signed jump follows the Sl_1 coefficient of the closed form at
            // this node (series-checked); it is minus the naive sine rule.
            nb.jump_height = -pi / idx.k * sw;
            nb.cusp_sign = orient(cw);
        }
    } else {
        nb.jump_height = 0.0;
        nb.cusp_sign = orient(fam == Family::S ? cw : sw);
    }
    return nb;
}

DerivativeDecomposition distributional_derivative(const PolylogIndex& idx,
                                                  Family fam) {
    if (idx.r != 1)
        throw std::invalid_argument("distributional_derivative: defined for r = 1");
    DerivativeDecomposition d;
    const long long k = idx.k, j = idx.j;
    for (long long l = 1; l <= k; ++l) {
        double sw = unit_sin(j * l, k), cw = unit_cos(j * l, k);
        long long m = (-l) % k;
        if (m < 0) m += k;
        if (2 * m >= k) m -= k;  // delta location 2*pi*m/k in [-pi, pi)
        double w_delta = (fam == Family::S ? cw : sw) * (pi / k);
        if (w_delta != 0.0)
            d.delta_terms.push_back({two_pi * static_cast<double>(m) / k, w_delta});
        double w_cot = (fam == Family::S ? sw : -cw) / (2.0 * k);
        if (w_cot != 0.0)
            d.cot_terms.push_back({pi * static_cast<double>(l % k) / k, w_cot});
    }
    if (fam == Family::S && j == k) d.constant = -0.5;
    std::sort(d.delta_terms.begin(), d.delta_terms.end(),
              [](const DeltaTerm& a, const DeltaTerm& b) { return a.location < b.location; });
    std::sort(d.cot_terms.begin(), d.cot_terms.end(),
              [](const CotTerm& a, const CotTerm& b) { return a.shift < b.shift; });
    return d;
}

double DerivativeDecomposition::smooth_at(double x) const {
    NeumaierSum acc;
    for (const auto& c : cot_terms) {
        double a = 0.5 * x + c.shift;
        double s = std::sin(a);
        if (std::abs(s) < 1e-12)
            throw SingularPoint("DerivativeDecomposition: cot pole", x);
        acc.add(c.weight * std::cos(a) / s);
    }
    acc.add(constant);
    return acc.value();
}

double pairwise_sum_profile(int j, int k, double x) {
    if (j < 1 || j >= k)
        throw std::invalid_argument("pairwise_sum_profile: need 1 <= j < k");
    SCPair a = eval_trig_polylog(PolylogIndex(j, k, 1), x);
    SCPair b = eval_trig_polylog(PolylogIndex(k - j, k, 1), x);
    return a.S + b.S;
}

}  // namespace revival
