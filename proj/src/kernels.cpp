#include "revival/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "revival/angle.hpp"
#include "revival/dispersion.hpp"

namespace revival {

double periodic_hilbert_kernel(double x) {
    double y = reduce_angle(x);
    if (std::abs(y) < 1e-9)
        throw SingularPoint("periodic_hilbert_kernel: pole", x);
    return 0.5 / pi * std::cos(0.5 * y) / std::sin(0.5 * y);
}

std::complex<double> hilbert_symbol(long long k) {
    if (k == 0) return {0.0, 0.0};
    return {0.0, k > 0 ? -1.0 : 1.0};
}

namespace {

// cot(z), stable for large |Im z|: i(w+1)/(w-1) with w = e^{2iz}, |w| <= 1
// in the upper half plane; odd reflection below.
std::complex<double> cot_c(std::complex<double> z) {
    if (z.imag() < 0.0) return -cot_c(-z);
    std::complex<double> w = std::exp(std::complex<double>(0.0, 2.0) * z);
    return std::complex<double>(0.0, 1.0) * (w + 1.0) / (w - 1.0);
}

// csc^2(z) = -4 e^{2iz}/(e^{2iz}-1)^2, evaluated in the half plane where the
// exponential decays (csc^2 is even).
std::complex<double> csc2_c(std::complex<double> z) {
    if (z.imag() < 0.0) z = -z;
    std::complex<double> w = std::exp(std::complex<double>(0.0, 2.0) * z);
    std::complex<double> d = w - 1.0;
    return -4.0 * w / (d * d);
}

void require_tail_margin(double delta, long long truncation, double a) {
    double b = pi * pi / delta;
    if (b * static_cast<double>(truncation) < std::abs(a) + 16.0)
        throw ConvergenceError(
            "ilw_kernel: truncation too small for the requested point");
}

}  // namespace

IlwKernelSpec::IlwKernelSpec(double delta_, long long truncation_)
    : delta(delta_), truncation(truncation_) {
    if (!(delta > 0.0)) throw std::invalid_argument("IlwKernelSpec: delta > 0");
    if (truncation < 1) throw std::invalid_argument("IlwKernelSpec: truncation >= 1");
    std::complex<double> w1(0.0, -delta);
    std::complex<double> pref = pi / (2.0 * w1);
    std::complex<double> tau = pi * pi / w1;  // pi * omega_3 / omega_1
    std::complex<double> s(0.0, 0.0);
    for (long long n = 1; n <= truncation; ++n) {
        std::complex<double> c = csc2_c(static_cast<double>(n) * tau);
        s += c;
        if (std::abs(c) < 1e-18) break;
    }
    alpha = pref * pref * (1.0 / 3.0 + 2.0 * s);
    if (std::abs(alpha.imag()) > 1e-8)
        throw ConvergenceError("IlwKernelSpec: alpha has an imaginary residue");
}

double ilw_kernel(const IlwKernelSpec& spec, double x, IlwKernelMethod method) {
    if (std::abs(reduce_angle(x)) < 1e-9)
        throw SingularPoint("ilw_kernel: pole at x = 0 mod 2*pi", x);
    const double delta = spec.delta;
    const double a = pi * x / (2.0 * delta), b = pi * pi / delta;
    require_tail_margin(delta, spec.truncation, a);
    if (method == IlwKernelMethod::coth_sum) {
        NeumaierSum s;
        s.add(coth(a));
        for (long long n = 1; n <= spec.truncation; ++n)
            s.add(coth(a + b * n) + coth(a - b * n));
        return -s.value() / (2.0 * delta);
    }
    std::complex<double> w1(0.0, -delta);
    std::complex<double> pref = pi / (2.0 * w1);
    std::complex<double> tau = pi * pi / w1;
    std::complex<double> z0 = pi * x / (2.0 * w1);
    std::complex<double> acc = cot_c(z0);
    for (long long n = 1; n <= spec.truncation; ++n)
        acc += cot_c(z0 + static_cast<double>(n) * tau) +
               cot_c(z0 - static_cast<double>(n) * tau);
    // (alpha x - zeta(x))/pi with the alpha x terms cancelled analytically
    std::complex<double> C = -(pref * acc) / pi;
    if (std::abs(C.imag()) > 1e-8)
        throw ConvergenceError("ilw_kernel: zeta route imaginary residue");
    return C.real();
}

namespace {

constexpr double euler_gamma = 0.57721566490153286061;

// Minimax rational fit after Boost.Math (Russon-Blair), x > 1 branch.
constexpr double k1_p3[11] = {
    2.2196792496874548962e+00, 4.4137176114230414036e+01,
    3.4122953486801312910e+02, 1.3319486433183221990e+03,
    2.8590657697910288226e+03, 3.4540675585544584407e+03,
    2.3123742209168871550e+03, 8.1094256146537402173e+02,
    1.3182609918569941308e+02, 7.5584584631176030810e+00,
    6.4257745859173138767e-02,
};
constexpr double k1_q3[10] = {
    1.7710478032601086579e+00, 3.4552228452758912848e+01,
    2.5951223655579051357e+02, 9.6929165726802648634e+02,
    1.9448440788918006154e+03, 2.1181000487171943810e+03,
    1.2082692316002348638e+03, 3.3031020088765390854e+02,
    3.6001069306861518855e+01, 1.0,
};

double poly_eval(const double* c, int n, double z) {
    double acc = c[n - 1];
    for (int i = n - 2; i >= 0; --i) acc = acc * z + c[i];
    return acc;
}

}  // namespace

double bessel_k1(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("bessel_k1: x > 0");
    if (x <= 2.0) {
        // K_1 = 1/x + ln(x/2) I_1(x)
        //       - (x/4) sum_k (psi(k+1)+psi(k+2)) (x^2/4)^k / (k! (k+1)!)
        double q = 0.25 * x * x;
        double term = 1.0;              // (x^2/4)^k / (k! (k+1)!)
        double psum = 1.0 - 2.0 * euler_gamma;  // psi(1) + psi(2)
        double i1 = 0.0, s = 0.0;
        for (int k = 0; k < 40; ++k) {
            i1 += term;
            s += psum * term;
            double next = term * q / ((k + 1.0) * (k + 2.0));
            if (next < 1e-19 * (std::abs(i1) + 1.0) && k > 3) break;
            term = next;
            psum += 1.0 / (k + 1.0) + 1.0 / (k + 2.0);
        }
        i1 *= 0.5 * x;
        return 1.0 / x + std::log(0.5 * x) * i1 - 0.25 * x * s;
    }
    double y = 1.0 / x;
    double r = poly_eval(k1_p3, 11, y) / poly_eval(k1_q3, 10, y);
    return std::exp(-x) / std::sqrt(x) * r;
}

std::complex<double> smith_kernel_periodic(double delta, double x,
                                           long long n_truncation) {
    if (!(delta > 0.0)) throw std::invalid_argument("smith kernel: delta > 0");
    if (n_truncation < 0)
        throw std::invalid_argument("smith kernel: truncation >= 0");
    if (std::abs(reduce_angle(x)) < 1e-9)
        throw SingularPoint("smith_kernel_periodic: pole at x = 0 mod 2*pi", x);
    double sd = std::sqrt(delta);
    NeumaierSum acc;
    for (long long n = -n_truncation; n <= n_truncation; ++n) {
        double y = std::abs(x + two_pi * static_cast<double>(n));
        double u = y / sd;
        // below exp underflow the image contributes nothing
        if (u > 705.0) continue;
        acc.add(bessel_k1(u) / y);
    }
    return {0.0, -acc.value() / (pi * sd)};
}

namespace {

template <class F>
double simpson_rec(const F& f, double lo, double hi, double flo, double fmid,
                   double fhi, double whole, double tol, int depth) {
    double mid = 0.5 * (lo + hi);
    double lmid = 0.5 * (lo + mid), rmid = 0.5 * (mid + hi);
    double flmid = f(lmid), frmid = f(rmid);
    double left = (mid - lo) / 6.0 * (flo + 4.0 * flmid + fmid);
    double right = (hi - mid) / 6.0 * (fmid + 4.0 * frmid + fhi);
    double err = left + right - whole;
    if (depth <= 0)
        throw ConvergenceError("verify_bessel_fourier_pair: quadrature depth exhausted");
    if (std::abs(err) < 15.0 * tol) return left + right + err / 15.0;
    return simpson_rec(f, lo, mid, flo, flmid, fmid, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, mid, hi, fmid, frmid, fhi, right, 0.5 * tol, depth - 1);
}

template <class F>
double adaptive_simpson(const F& f, double lo, double hi, double tol) {
    double flo = f(lo), fhi = f(hi), fmid = f(0.5 * (lo + hi));
    double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    return simpson_rec(f, lo, hi, flo, fmid, fhi, whole, tol, 40);
}

}  // namespace

FtCheck verify_bessel_fourier_pair(double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("verify_bessel_fourier_pair: a > 0");
    const double ax = std::abs(x);
    const double scale = std::sqrt(2.0 / pi);
    auto integrand = [a, ax](double k) {
        double d = k * k + a * a;
        return a * a * std::cos(k * ax) / (d * std::sqrt(d));
    };
    const double cut = 500.0;
    NeumaierSum integral;
    for (double lo = 0.0; lo < cut; lo += 1.0)
        integral.add(adaptive_simpson(integrand, lo, lo + 1.0, 2e-10));
    double core = (ax == 0.0) ? 1.0 : ax * a * bessel_k1(a * ax);
    FtCheck c{};
    c.lhs = scale * integral.value();
    c.rhs = scale * core;
    c.abs_err = std::abs(c.lhs - c.rhs);
    return c;
}

KernelSample sample_kernel(KernelKind kind, double delta, long long truncation,
                           double x) {
    KernelSample s{x, {0.0, 0.0}, false};
    try {
        switch (kind) {
            case KernelKind::hilbert:
                s.value = {periodic_hilbert_kernel(x), 0.0};
                break;
            case KernelKind::ilw: {
                IlwKernelSpec spec(delta, truncation);
                s.value = {ilw_kernel(spec, x, IlwKernelMethod::coth_sum), 0.0};
                break;
            }
            case KernelKind::smith:
                s.value = smith_kernel_periodic(delta, x, truncation);
                break;
        }
    } catch (const SingularPoint&) {
        double nan = std::nan("");
        s.value = {nan, nan};
        s.pole_proximity = true;
    }
    return s;
}

}  // namespace revival
