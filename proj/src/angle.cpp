#include "revival/angle.hpp"

namespace revival {

namespace {

// 2*pi = hi + lo with hi carrying 53 significant bits; n*hi rounds once and
// the fma recovers that rounding exactly.
constexpr double two_pi_hi = 6.283185307179586232e+00;
constexpr double two_pi_lo = 2.449293598294706414e-16;
constexpr double inv_two_pi = 0.159154943091895335768883763372514362;

double to_window(double y) {
    if (y <= -pi) return y + two_pi;
    if (y > pi) return y - two_pi;
    return y;
}

// sin(pi*u/v) for 0 <= u < 2v, folded into the first quarter turn.
double sin_pi_frac(long long u, long long v) {
    double s = 1.0;
    if (u >= v) {
        u -= v;
        s = -1.0;
    }
    if (2 * u > v) u = v - u;
    if (u == 0) return 0.0;
    if (2 * u == v) return s;
    return s * std::sin(pi * (static_cast<double>(u) / static_cast<double>(v)));
}

}  // namespace

double reduce_angle(double x) {
    double n = std::nearbyint(x * inv_two_pi);
    double p = n * two_pi_hi;
    double e = std::fma(n, two_pi_hi, -p);
    double y = ((x - p) - e) - n * two_pi_lo;
    return to_window(y);
}

double reduce_angle_times(double m, double x) {
    double p = m * x;
    double e = std::fma(m, x, -p);  // exact residue of the product
    return to_window(reduce_angle(p) + e);
}

double unit_sin(long long m, long long n) {
    long long u = (2 * m) % (2 * n);
    if (u < 0) u += 2 * n;
    return sin_pi_frac(u, n);
}

double unit_cos(long long m, long long n) {
    // cos(2*pi*m/n) = sin(pi*(4m + n)/(2n))
    long long u = (4 * m + n) % (4 * n);
    if (u < 0) u += 4 * n;
    return sin_pi_frac(u, 2 * n);
}

}  // namespace revival
