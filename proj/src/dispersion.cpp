#include "revival/dispersion.hpp"

#include <cmath>
#include <stdexcept>

#include "revival/angle.hpp"

namespace revival {

DispersionSpec DispersionSpec::bo() { return {Equation::bo, 0.0}; }
DispersionSpec DispersionSpec::kdv() { return {Equation::kdv, 0.0}; }
DispersionSpec DispersionSpec::ilw(double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("ilw: delta > 0");
    return {Equation::ilw, delta};
}
DispersionSpec DispersionSpec::smith(double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("smith: delta > 0");
    return {Equation::smith, delta};
}

double coth(double z) {
    if (z == 0.0) throw std::invalid_argument("coth: pole at 0");
    double a = std::abs(z);
    double v;
    if (a > 19.0)
        v = 1.0;  // e^{-38} is below double resolution
    else if (a < 0.25)
        v = 1.0 / a + coth_gap(a);
    else
        v = 1.0 + 2.0 / std::expm1(2.0 * a);
    return z > 0.0 ? v : -v;
}

double coth_minus_one(double z) {
    if (!(z > 0.0)) throw std::invalid_argument("coth_minus_one: z > 0");
    if (z > 19.0) return 2.0 * std::exp(-2.0 * z);
    return 2.0 / std::expm1(2.0 * z);
}

namespace {

// Bernoulli coefficients of coth z - 1/z = z/3 - z^3/45 + 2 z^5/945 - ...
constexpr double gap_c[8] = {
    1.0 / 3.0,        -1.0 / 45.0,        2.0 / 945.0,       -1.0 / 4725.0,
    2.0 / 93555.0,    -1382.0 / 638512875.0, 4.0 / 18243225.0, -3617.0 / 325641566250.0,
};

// 3 c_{n+1}: series of h(z) = 3 (coth z - 1/z)/z - 1.
constexpr double gap_h_c[7] = {
    -1.0 / 15.0,          2.0 / 315.0,        -1.0 / 1575.0,
    2.0 / 31185.0,        -1382.0 / 212837625.0, 4.0 / 6081075.0,
    -3617.0 / 108547188750.0,
};

}  // namespace

double coth_gap(double z) {
    double a = std::abs(z);
    if (a == 0.0) return 0.0;
    if (a >= 0.25) return sign(z) * (coth(a) - 1.0 / a);
    double z2 = a * a, p = a, acc = 0.0;
    for (double c : gap_c) {
        acc += c * p;
        p *= z2;
    }
    return z > 0.0 ? acc : -acc;
}

double coth_gap_h(double z) {
    double a = std::abs(z);
    if (a == 0.0) return 0.0;
    if (a > 0.5) return 3.0 * (coth(a) - 1.0 / a) / a - 1.0;
    double z2 = a * a, p = z2, acc = 0.0;
    for (double c : gap_h_c) {
        acc += c * p;
        p *= z2;
    }
    return acc;  // even in z
}

double omega(const DispersionSpec& spec, double k) {
    switch (spec.equation) {
        case Equation::bo: return k * std::abs(k);
        case Equation::kdv: return k * k * k;
        case Equation::ilw:
            if (k == 0.0) return 0.0;
            return k * k * coth_gap(spec.delta * k);
        case Equation::smith: return k * std::sqrt(1.0 / spec.delta + k * k);
    }
    throw std::invalid_argument("omega: unknown equation");
}

double phase_velocity(const DispersionSpec& spec, double k) {
    if (k == 0.0) throw std::invalid_argument("phase_velocity: k != 0");
    return omega(spec, k) / k;
}

VelocityGap ilw_bo_velocity_gap(double delta, long long k) {
    if (!(delta > 0.0)) throw std::invalid_argument("velocity gap: delta > 0");
    if (k == 0) throw std::invalid_argument("velocity gap: k != 0");
    double ak = std::abs(static_cast<double>(k));
    double E = std::exp(-2.0 * delta * ak);
    VelocityGap g{};
    g.k = k;
    // c_ilw - c_bo = |k| (coth(delta|k|) - 1) - 1/delta + ... reduces to
    // 2|k| E/(1-E) exactly for the periodic symbol pair.
    g.gap = ak * 2.0 * E / (1.0 - E);
    g.envelope = 2.1 * ak * E;
    g.envelope_valid = (2.0 / (1.0 - E) <= 2.1);  // delta |k| >= ln(21)/2
    return g;
}

double smith_f(double z) {
    if (z < 0.0) throw std::invalid_argument("smith_f: z >= 0");
    return 2.0 / (std::sqrt(1.0 + z) + 1.0);
}

SmithEnvelope smith_envelope(long long p, long long q, double delta) {
    if (p < 0 || q < 1) throw std::invalid_argument("smith_envelope: bad p/q");
    if (!(delta > 0.0)) throw std::invalid_argument("smith_envelope: delta > 0");
    double carrier = static_cast<double>(p) * pi / (2.0 * q * delta);
    double d2 = delta * delta;
    SmithEnvelope e{};
    e.c0 = std::cos(carrier);
    e.s0 = std::sin(carrier);
    double side = static_cast<double>(p) * pi / (8.0 * q * d2);
    e.c1 = side * e.s0;
    e.s1 = -side * e.c0;
    double u = static_cast<double>(p) * pi / (8.0 * q * delta);
    e.eps_bound = side / delta * (1.0 + u);
    return e;
}

}  // namespace revival
