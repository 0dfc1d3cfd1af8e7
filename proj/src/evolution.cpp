#include "revival/evolution.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "revival/angle.hpp"

namespace revival {

RationalTime::RationalTime(long long p_, long long q_) : p(p_), q(q_) {
    if (p < 0 || q < 1) throw std::invalid_argument("RationalTime: need p >= 0, q >= 1");
    long long g = std::gcd(p, q);
    if (g > 1) {
        p /= g;
        q /= g;
    }
    if (q > 1000000000LL)
        throw std::invalid_argument("RationalTime: q too large for exact phase arithmetic");
}

double RationalTime::value() const {
    return static_cast<double>(p) * pi / static_cast<double>(q);
}

FourierInitialData FourierInitialData::riemann_step() {
    return {Preset::riemann_step, 0, {}};
}

FourierInitialData FourierInitialData::integrated_delta() {
    return {Preset::integrated_delta, 0, {}};
}

FourierInitialData FourierInitialData::custom(
    std::vector<std::complex<double>> b0_to_kmax) {
    if (b0_to_kmax.empty())
        throw std::invalid_argument("custom data: need at least b_0");
    if (std::abs(b0_to_kmax[0].imag()) > 1e-12 * (1.0 + std::abs(b0_to_kmax[0])))
        throw std::invalid_argument("custom data: b_0 must be real");
    FourierInitialData d{Preset::custom,
                         static_cast<long long>(b0_to_kmax.size()) - 1,
                         std::move(b0_to_kmax)};
    return d;
}

std::complex<double> FourierInitialData::coefficient(long long k) const {
    switch (preset) {
        case Preset::riemann_step:
            if (k == 0) return {0.5, 0.0};
            if (k % 2 == 0) return {0.0, 0.0};
            return {0.0, -1.0 / (pi * static_cast<double>(k))};
        case Preset::integrated_delta:
            if (k == 0) return {0.0, 0.0};
            return {0.0, -1.0 / (two_pi * static_cast<double>(k))};
        case Preset::custom: {
            long long a = k < 0 ? -k : k;
            if (a > k_max) return {0.0, 0.0};
            return k >= 0 ? b[static_cast<size_t>(a)]
                          : std::conj(b[static_cast<size_t>(a)]);
        }
    }
    throw std::invalid_argument("coefficient: unknown preset");
}

PolarCoefficient evolved_coefficient(const DispersionSpec& spec,
                                     const FourierInitialData& data, double t,
                                     long long k) {
    std::complex<double> b = data.coefficient(k);
    double ph = std::arg(b) - omega(spec, static_cast<double>(k)) * t;
    return {std::abs(b), reduce_angle(ph)};
}

namespace {

struct SymbolSplit {
    long long ipart;  // exact integer part of omega(m), m a positive integer
    double resid;
};

SymbolSplit split_symbol(const DispersionSpec& spec, long long m) {
    double md = static_cast<double>(m);
    switch (spec.equation) {
        case Equation::bo: return {m * m, 0.0};
        case Equation::kdv: return {m * m * m, 0.0};
        case Equation::ilw:
            return {m * m, md * md * (coth_gap(spec.delta * md) - 1.0)};
        case Equation::smith:
            return {m * m, smith_f(1.0 / (spec.delta * md * md)) / (2.0 * spec.delta)};
    }
    throw std::invalid_argument("split_symbol: unknown equation");
}

// Time phase -omega(m) t at t = p*pi/q: the integer part contributes
// -pi * ((ipart * p) mod 2q) / q computed in exact integer arithmetic.
double psi_rational(const SymbolSplit& s, const RationalTime& t) {
    long long q2 = 2 * t.q;
    long long r = ((s.ipart % q2) * (t.p % q2)) % q2;
    double psi = -pi * static_cast<double>(r) / static_cast<double>(t.q);
    if (s.resid != 0.0) psi -= reduce_angle(s.resid * t.value());
    return psi;
}

template <class PsiT>
SeriesPlan build_plan(const FourierInitialData& data, long long n_modes,
                      PsiT&& psi_time) {
    if (n_modes < 0) throw std::invalid_argument("series plan: n_modes >= 0");
    SeriesPlan plan;
    auto push = [&](long long m, double amp, double base) {
        plan.mode.push_back(m);
        plan.amp.push_back(amp);
        plan.psi.push_back(base + psi_time(m));
    };
    switch (data.preset) {
        case FourierInitialData::Preset::riemann_step:
            plan.constant = 0.5;
            for (long long m = 1; m <= n_modes; m += 2)
                push(m, 2.0 / (pi * static_cast<double>(m)), 0.0);
            break;
        case FourierInitialData::Preset::integrated_delta:
            for (long long m = 1; m <= n_modes; ++m)
                push(m, 1.0 / (pi * static_cast<double>(m)), 0.0);
            break;
        case FourierInitialData::Preset::custom: {
            plan.constant = data.b[0].real();
            long long cap = std::min(n_modes, data.k_max);
            for (long long m = 1; m <= cap; ++m) {
                std::complex<double> bm = data.b[static_cast<size_t>(m)];
                if (bm == std::complex<double>(0.0, 0.0)) continue;
                // 2 Re(b e^{i theta}) = 2|b| sin(theta + arg b + pi/2)
                push(m, 2.0 * std::abs(bm), std::arg(bm) + 0.5 * pi);
            }
            break;
        }
    }
    return plan;
}

}  // namespace

SeriesPlan make_series_plan(const DispersionSpec& spec,
                            const FourierInitialData& data,
                            const RationalTime& t, long long n_modes) {
    return build_plan(data, n_modes, [&](long long m) {
        return psi_rational(split_symbol(spec, m), t);
    });
}

SeriesPlan make_series_plan(const DispersionSpec& spec,
                            const FourierInitialData& data, double t,
                            long long n_modes) {
    return build_plan(data, n_modes, [&](long long m) {
        return -reduce_angle(omega(spec, static_cast<double>(m)) * t);
    });
}

double SeriesPlan::eval(double x) const {
    NeumaierSum acc;
    for (size_t i = 0; i < mode.size(); ++i)
        acc.add(amp[i] *
                std::sin(reduce_angle_times(static_cast<double>(mode[i]), x) + psi[i]));
    acc.add(constant);
    return acc.value();
}

double evolve_series(const DispersionSpec& spec, const FourierInitialData& data,
                     const RationalTime& t, double x, long long n_modes) {
    return make_series_plan(spec, data, t, n_modes).eval(x);
}

double evolve_series(const DispersionSpec& spec, const FourierInitialData& data,
                     double t, double x, long long n_modes) {
    return make_series_plan(spec, data, t, n_modes).eval(x);
}

double ilw_residual(double delta, const RationalTime& t, double x,
                    long long n_modes) {
    auto step = FourierInitialData::riemann_step();
    return evolve_series(DispersionSpec::ilw(delta), step, t, x, n_modes) -
           evolve_series(DispersionSpec::bo(), step, t, x + t.value() / delta,
                         n_modes);
}

double ilw_residual(double delta, double t, double x, long long n_modes) {
    auto step = FourierInitialData::riemann_step();
    return evolve_series(DispersionSpec::ilw(delta), step, t, x, n_modes) -
           evolve_series(DispersionSpec::bo(), step, t, x + t / delta, n_modes);
}

namespace {

// Rescaled symbol 3 omega_delta(m)/delta = m^3 (1 + h(delta m)).
SeriesPlan rescaled_plan(double delta, const RationalTime& t, long long n_modes) {
    return build_plan(FourierInitialData::riemann_step(), n_modes,
                      [&](long long m) {
                          double md = static_cast<double>(m);
                          SymbolSplit s{m * m * m,
                                        md * md * md * coth_gap_h(delta * md)};
                          return psi_rational(s, t);
                      });
}

SeriesPlan rescaled_plan(double delta, double t, long long n_modes) {
    return build_plan(FourierInitialData::riemann_step(), n_modes,
                      [&](long long m) {
                          double md = static_cast<double>(m);
                          double om = md * md * md * (1.0 + coth_gap_h(delta * md));
                          return -reduce_angle(om * t);
                      });
}

}  // namespace

double kdv_rescaled_ilw(double delta, const RationalTime& t, double x,
                        long long n_modes) {
    if (!(delta > 0.0)) throw std::invalid_argument("kdv_rescaled_ilw: delta > 0");
    return rescaled_plan(delta, t, n_modes).eval(x);
}

double kdv_rescaled_ilw(double delta, double t, double x, long long n_modes) {
    if (!(delta > 0.0)) throw std::invalid_argument("kdv_rescaled_ilw: delta > 0");
    return rescaled_plan(delta, t, n_modes).eval(x);
}

}  // namespace revival
