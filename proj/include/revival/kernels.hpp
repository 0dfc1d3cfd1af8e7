#ifndef REVIVAL_KERNELS_HPP
#define REVIVAL_KERNELS_HPP

#include <complex>

namespace revival {

// (1/(2 pi)) cot(x/2); SingularPoint within 1e-9 of the poles x = 0 mod 2*pi.
double periodic_hilbert_kernel(double x);

// Fourier multiplier of the periodic Hilbert transform: -i sign(k).
std::complex<double> hilbert_symbol(long long k);

// Lattice data for the ilw kernel on periods (2 omega_1, 2 omega_3) with
// omega_1 = -i delta, omega_3 = pi.  alpha = eta_1/omega_1 is computed at
// construction from the Laurent expansion of the lattice zeta function,
//   alpha = (pi/(2 omega_1))^2 (1/3 + 2 sum_{n>=1} csc^2(n pi omega_3/omega_1)),
// and must be real up to rounding (|Im| <= 1e-8, else ConvergenceError).
struct IlwKernelSpec {
    double delta;
    long long truncation;
    std::complex<double> alpha;
    IlwKernelSpec(double delta, long long truncation);
};

// Two independent evaluation routes for the same kernel
//   C_delta(x) = -(1/(2 delta)) sum_{|n|<=N} coth(pi x/(2 delta) + n pi^2/delta):
// a real coth sum, and the lattice zeta route (alpha x - zeta(x))/pi carried
// out in complex arithmetic.  Both require the tail margin
// (pi^2/delta) N >= |pi x/(2 delta)| + 16, else ConvergenceError.
enum class IlwKernelMethod { coth_sum, zeta };
double ilw_kernel(const IlwKernelSpec& spec, double x, IlwKernelMethod method);

// Modified Bessel K_1: ascending series for x <= 2, minimax rational fit
// after Boost.Math (Russon-Blair) for x > 2.  Relative error < 1e-14.
double bessel_k1(double x);

// Periodised Smith kernel
//   -(i/(pi sqrt(delta))) sum_{|n|<=N} K_1(|x + 2 pi n|/sqrt(delta))/|x + 2 pi n|;
// purely imaginary, poles at x = 0 mod 2*pi.
std::complex<double> smith_kernel_periodic(double delta, double x,
                                           long long n_truncation);

// Quadrature check of the Fourier pair behind the Smith kernel:
//   sqrt(2/pi) int_0^inf a^2 cos(k x)/(k^2+a^2)^{3/2} dk = sqrt(2/pi) a|x| K_1(a|x|).
// lhs is adaptive-Simpson quadrature over [0, 500] (tail < a^2/(2*500^2)),
// rhs the closed form through bessel_k1.
struct FtCheck {
    double lhs, rhs, abs_err;
};
FtCheck verify_bessel_fourier_pair(double a, double x);

// Tabulation helper for the CLI: value with poles mapped to a flag instead
// of an exception.
enum class KernelKind { hilbert, ilw, smith };
struct KernelSample {
    double x;
    std::complex<double> value;
    bool pole_proximity;
};
KernelSample sample_kernel(KernelKind kind, double delta, long long truncation,
                           double x);

}  // namespace revival

#endif
