#include "revival/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "revival/angle.hpp"
#include "revival/clausen.hpp"

namespace revival {

double RevivalProfile::node_distance(double x) const {
    double k2 = 2.0 * static_cast<double>(time.q);
    return std::abs(reduce_angle_times(k2, x - lattice_offset)) / k2;
}

double RevivalProfile::evaluate(double x) const {
    if (node_distance(x) < 1e-9 * pi / static_cast<double>(time.q))
        throw SingularPoint("RevivalProfile: x on the singular lattice", x);
    NeumaierSum acc;
    for (const auto& term : terms) {
        SCPair v = eval_trig_polylog(PolylogIndex(term.index, k_order, term.order),
                                     x - term.shift);
        acc.add(term.weight * (term.family == Family::S ? v.S : v.C));
    }
    acc.add(constant);
    return acc.value();
}

std::vector<double> RevivalProfile::singular_set() const {
    std::vector<double> pts;
    long long q = time.q;
    for (long long m = -q; m < q; ++m) {
        double y = reduce_angle(pi * static_cast<double>(m) / q + lattice_offset);
        if (y == pi) y = -pi;  // canonical window [-pi, pi)
        pts.push_back(y);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

namespace {

RevivalProfile step_polylog_profile(const DispersionSpec& spec,
                                    const RationalTime& t, int shift_power,
                                    double lattice_offset, double err) {
    RevivalProfile prof{spec, t, static_cast<int>(2 * t.q), lattice_offset,
                        {},  0.5, err};
    for (long long j = 0; j < t.q; ++j) {
        long long kappa = 2 * j + 1;
        long long snum = (shift_power == 2 ? kappa * kappa : kappa) * t.p;
        double shift =
            pi * static_cast<double>(snum) / static_cast<double>(t.q) + lattice_offset;
        prof.terms.push_back({Family::S, 1, static_cast<int>(kappa), snum, shift,
                              2.0 / pi});
    }
    return prof;
}

}  // namespace

RevivalProfile bo_rational_profile(const RationalTime& t) {
    return step_polylog_profile(DispersionSpec::bo(), t, 1, 0.0, 0.0);
}

RevivalProfile kdv_rational_profile(const RationalTime& t) {
    return step_polylog_profile(DispersionSpec::kdv(), t, 2, 0.0, 0.0);
}

RevivalProfile ilw_rational_profile(const RationalTime& t, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("ilw profile: delta > 0");
    double offset =
        -t.value() / delta;  // advection by the removed k/delta symbol slope
    // Mode-wise phase bound: sum over odd m of (2/(pi m)) * t * m^2 (coth(delta m)-1)
    // <= (4t/pi) / (1-y) * y(1+y^2)/(1-y^2)^2 with y = e^{-2 delta}.
    double y = std::exp(-2.0 * delta);
    double err = (4.0 * t.value() / pi) / (1.0 - y) * y * (1.0 + y * y) /
                 ((1.0 - y * y) * (1.0 - y * y));
    RevivalProfile prof =
        step_polylog_profile(DispersionSpec::ilw(delta), t, 1, offset, err);
    return prof;
}

RevivalProfile smith_rational_profile(const RationalTime& t, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("smith profile: delta > 0");
    SmithEnvelope e = smith_envelope(t.p, t.q, delta);
    double side = static_cast<double>(t.p) /
                  (4.0 * static_cast<double>(t.q) * delta * delta);
    double err = static_cast<double>(t.p) * zeta5 /
                 (2.0 * static_cast<double>(t.q) * delta * delta * delta) *
                 (1.0 + static_cast<double>(t.p) * pi /
                            (8.0 * static_cast<double>(t.q) * delta));
    RevivalProfile prof{DispersionSpec::smith(delta), t,
                        static_cast<int>(2 * t.q), 0.0, {}, 0.5, err};
    for (long long j = 0; j < t.q; ++j) {
        long long kappa = 2 * j + 1;
        long long snum = kappa * t.p;
        double shift = pi * static_cast<double>(snum) / static_cast<double>(t.q);
        int ki = static_cast<int>(kappa);
        prof.terms.push_back({Family::S, 1, ki, snum, shift, 2.0 / pi * e.c0});
        prof.terms.push_back({Family::C, 1, ki, snum, shift, -2.0 / pi * e.s0});
        prof.terms.push_back({Family::S, 3, ki, snum, shift, side * e.s0});
        prof.terms.push_back({Family::C, 3, ki, snum, shift, side * e.c0});
    }
    return prof;
}

namespace {

// Aggregate (1/pi-scaled) translated derivative decompositions of
// wS * S^{2q}_kappa + wC * C^{2q}_kappa over kappa = 1..2q with shifts
// kappa * p * pi / q, in exact index arithmetic.
FundamentalDecomposition fundamental_core(const RationalTime& t, double wS,
                                          double wC) {
    const long long q = t.q, k2 = 2 * q, p = t.p;
    FundamentalDecomposition d{t, static_cast<int>(k2),
                               1.0 / (2.0 * pi) + wS * (-0.5),
                               {},  {},  {},  0.0};
    std::vector<double> delta_w(static_cast<size_t>(k2), 0.0);
    std::vector<double> cot_w(static_cast<size_t>(k2), 0.0);
    for (long long kappa = 1; kappa <= k2; ++kappa) {
        for (long long l = 1; l <= k2; ++l) {
            double sw = unit_sin(kappa * l, k2), cw = unit_cos(kappa * l, k2);
            long long m = ((kappa * p - l) % k2 + k2) % k2;
            delta_w[static_cast<size_t>(m)] += (pi / k2) * (wS * cw + wC * sw);
            long long a = ((l - kappa * p) % k2 + k2) % k2;
            cot_w[static_cast<size_t>(a)] += (wS * sw - wC * cw) / (2.0 * k2);
        }
    }
    for (long long m = 0; m < k2; ++m) {
        double w = delta_w[static_cast<size_t>(m)];
        if (std::abs(w) < 1e-12) continue;
        long long mc = m >= q ? m - k2 : m;  // location in [-pi, pi)
        d.delta_terms.push_back({pi * static_cast<double>(mc) / q, w});
    }
    for (long long a = 0; a < k2; ++a) {
        double w = cot_w[static_cast<size_t>(a)];
        if (std::abs(w) < 1e-12) continue;
        d.cot_terms.push_back({pi * static_cast<double>(a) / k2, w});
    }
    return d;
}

}  // namespace

FundamentalDecomposition bo_fundamental_decomposition(const RationalTime& t) {
    return fundamental_core(t, 1.0 / pi, 0.0);
}

FundamentalDecomposition smith_fundamental_approx(const RationalTime& t,
                                                  double delta) {
    if (!(delta > 0.0))
        throw std::invalid_argument("smith fundamental: delta > 0");
    SmithEnvelope e = smith_envelope(t.p, t.q, delta);
    FundamentalDecomposition d = fundamental_core(t, e.c0 / pi, -e.s0 / pi);
    double side = static_cast<double>(t.p) /
                  (8.0 * static_cast<double>(t.q) * delta * delta);
    for (long long kappa = 1; kappa <= 2 * t.q; ++kappa) {
        long long snum = kappa * t.p;
        double shift = pi * static_cast<double>(snum) / static_cast<double>(t.q);
        int ki = static_cast<int>(kappa);
        d.residual_terms.push_back(
            {Family::C, 2, ki, snum, shift, side * e.s0});
        d.residual_terms.push_back(
            {Family::S, 2, ki, snum, shift, -side * e.c0});
    }
    d.residual_bound = 2.0 * e.eps_bound / pi * zeta4;
    return d;
}

double FundamentalDecomposition::regular_at(double x) const {
    NeumaierSum acc;
    for (const auto& c : cot_terms) {
        double a = 0.5 * x + c.shift;
        double s = std::sin(a);
        if (std::abs(s) < 1e-12)
            throw SingularPoint("FundamentalDecomposition: cot pole", x);
        acc.add(c.weight * std::cos(a) / s);
    }
    for (const auto& term : residual_terms) {
        SCPair v = eval_trig_polylog(PolylogIndex(term.index, k_order, term.order),
                                     x - term.shift);
        acc.add(term.weight * (term.family == Family::S ? v.S : v.C));
    }
    acc.add(constant);
    return acc.value();
}

double FundamentalDecomposition::delta_mass() const {
    NeumaierSum acc;
    for (const auto& dt : delta_terms) acc.add(dt.weight);
    return acc.value();
}

}  // namespace revival
