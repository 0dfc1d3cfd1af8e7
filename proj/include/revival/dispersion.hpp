#ifndef REVIVAL_DISPERSION_HPP
#define REVIVAL_DISPERSION_HPP

namespace revival {

enum class Equation { bo, ilw, smith, kdv };

// Dispersion relation selector; delta is the depth parameter and is only
// meaningful for ilw and smith.
struct DispersionSpec {
    Equation equation;
    double delta;

    static DispersionSpec bo();
    static DispersionSpec kdv();
    static DispersionSpec ilw(double delta);
    static DispersionSpec smith(double delta);
};

// omega(k):
//   bo    k|k|
//   ilw   k^2 coth(delta k) - k/delta      (0 at k = 0)
//   smith k sqrt(1/delta + k^2)
//   kdv   k^3
double omega(const DispersionSpec& spec, double k);

// omega(k)/k for k != 0.
double phase_velocity(const DispersionSpec& spec, double k);

// |c_ilw - c_bo| at integer wavenumber k, its exponential envelope
// 2.1 |k| e^{-2 delta |k|}, and whether the envelope provably dominates:
// 2/(1 - e^{-2 delta |k|}) <= 2.1, i.e. delta |k| >= ln(21)/2.
struct VelocityGap {
    long long k;
    double gap;
    double envelope;
    bool envelope_valid;
};
VelocityGap ilw_bo_velocity_gap(double delta, long long k);

// Linearisation data of the Smith symbol at rational time t = p*pi/q:
// the residual omega(k) - k^2 = (1/(2 delta)) f(1/(delta k^2)) with
// f(z) = 2/(sqrt(1+z)+1) contributes the carrier phase p*pi/(2 q delta);
// c0/s0 are its cosine/sine and c1/s1 the first-order sideband weights,
// eps_bound the sup of the quadratic remainder over integer k >= 1.
struct SmithEnvelope {
    double c0, c1, s0, s1;
    double eps_bound;
};
SmithEnvelope smith_envelope(long long p, long long q, double delta);

// f(z) = 2/(sqrt(1+z)+1); f(0) = 1, decreasing on [0, inf).
double smith_f(double z);

// Numerically stable coth and its small-gap companions.
double coth(double z);
// coth(z) - 1 = 2/(e^{2z} - 1) for z > 0, without cancellation.
double coth_minus_one(double z);
// g(z) = coth(z) - 1/z, series near 0 (removes the 1/z cancellation).
double coth_gap(double z);
// h(z) = 3 (coth z - 1/z)/z - 1 = -z^2/15 + ..., the relative gap between
// the rescaled ilw symbol and k^3.
double coth_gap_h(double z);

}  // namespace revival

#endif
