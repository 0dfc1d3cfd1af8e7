#ifndef REVIVAL_CLAUSEN_HPP
#define REVIVAL_CLAUSEN_HPP

namespace revival {

// Clausen functions Cl_r(x) = sum_{n>=1} cos(nx)/n^r (r even: the sine series
// counterpart; here Cl_r always denotes the log-singular member of the pair):
//   Cl_0(x) = (1/2) cot(x/2)            Cl_1(x) = -log|2 sin(x/2)|
//   Cl_2(x) = sum sin(nx)/n^2           Cl_3(x) = sum cos(nx)/n^3
// Poles/log singularities sit at x = 0 mod 2*pi; r in {0, 1} throws
// SingularPoint within 1e-9 * 2*pi of them.
double clausen_cl(int r, double x);

// Glaisher (polynomial) companions on the reduced interval (-pi, pi]:
//   Sl_1(x) = (sign(x)*pi - x)/2        Sl_2(x) = x^2/4 - pi|x|/2 + pi^2/6
//   Sl_3(x) = sign(x)(pi^2|x|/6 - pi x^2/4 + |x|^3/12)
double glaisher_sl(int r, double x);

inline constexpr double zeta3 = 1.2020569031595942854;
inline constexpr double zeta4 = 1.0823232337111381916;
inline constexpr double zeta5 = 1.0369277551433699263;

namespace detail {

// Unchecked kernels on the reduced argument; callers guarantee y != 0 where
// it matters.  Used by the polylog evaluator after its own node rejection,
// whose tolerance scales with 1/k and can be tighter than the public one.
double cl0_raw(double y);
double cl1_raw(double y);
double cl2_raw(double y);
double cl3_raw(double y);
double sl1_raw(double y);
double sl2_raw(double y);
double sl3_raw(double y);

}  // namespace detail

}  // namespace revival

#endif
