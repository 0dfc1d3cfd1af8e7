#ifndef REVIVAL_EVOLUTION_HPP
#define REVIVAL_EVOLUTION_HPP

#include <complex>
#include <vector>

#include "revival/dispersion.hpp"

namespace revival {

// Reduced rational multiple of pi: t = p*pi/q, p >= 0, q >= 1.
struct RationalTime {
    long long p, q;
    RationalTime(long long p_, long long q_);
    double value() const;
};

// 2*pi-periodic initial data via Fourier coefficients b_k (b_{-k} = conj b_k).
//   riemann_step:     1 on (0, pi), 0 on (-pi, 0)  ->  b_0 = 1/2, odd b_k = -i/(pi k)
//   integrated_delta: sawtooth primitive of the unit Dirac comb minus its mean
//                     ->  b_0 = 0, b_k = -i/(2 pi k)
//   custom:           caller-supplied b_0..b_kmax (b_0 must be real)
struct FourierInitialData {
    enum class Preset { riemann_step, integrated_delta, custom };
    Preset preset;
    long long k_max;                      // custom only; presets are unbounded
    std::vector<std::complex<double>> b;  // custom only: b[k], k = 0..k_max

    static FourierInitialData riemann_step();
    static FourierInitialData integrated_delta();
    static FourierInitialData custom(std::vector<std::complex<double>> b0_to_kmax);

    std::complex<double> coefficient(long long k) const;
};

// b_k(t) in polar form: magnitude |b_k| (exactly preserved by the unitary
// flow) and phase arg(b_k) - omega(k) t.
struct PolarCoefficient {
    double magnitude, phase;
};
PolarCoefficient evolved_coefficient(const DispersionSpec& spec,
                                     const FourierInitialData& data, double t,
                                     long long k);

// Precompiled truncated series sum_{|k| <= n_modes} b_k e^{i(kx - omega t)}
// collapsed to constant + sum_i amp_i sin(mode_i x + psi_i).  For rational
// times the integer part of omega (k^2 or k^3) enters psi through exact
// modular arithmetic, so phases stay meaningful where omega*t itself has
// ulps of order a radian.
struct SeriesPlan {
    double constant = 0.0;
    std::vector<long long> mode;
    std::vector<double> amp, psi;
    double eval(double x) const;
};
SeriesPlan make_series_plan(const DispersionSpec& spec,
                            const FourierInitialData& data,
                            const RationalTime& t, long long n_modes);
SeriesPlan make_series_plan(const DispersionSpec& spec,
                            const FourierInitialData& data, double t,
                            long long n_modes);

double evolve_series(const DispersionSpec& spec, const FourierInitialData& data,
                     const RationalTime& t, double x, long long n_modes);
double evolve_series(const DispersionSpec& spec, const FourierInitialData& data,
                     double t, double x, long long n_modes);

// ilw step evolution minus the bo step evolution advected by t/delta; the
// residual that vanishes as delta -> infinity.
double ilw_residual(double delta, const RationalTime& t, double x,
                    long long n_modes);
double ilw_residual(double delta, double t, double x, long long n_modes);

// Step evolution under the rescaled ilw symbol 3 omega_delta(k)/delta, the
// kdv limit as delta -> 0.  (The symbol is k^3 (1 + h(delta k)) with h the
// relative coth gap.)
double kdv_rescaled_ilw(double delta, const RationalTime& t, double x,
                        long long n_modes);
double kdv_rescaled_ilw(double delta, double t, double x, long long n_modes);

}  // namespace revival

#endif
