#include "revival/clausen.hpp"

#include <cmath>
#include <stdexcept>

#include "revival/angle.hpp"

namespace revival {

namespace {

// zeta(2n), n = 1..30; beyond n = 27 the values round to 1.
constexpr double zeta_2n[30] = {
    1.6449340668482264, 1.0823232337111382, 1.0173430619844491,
    1.0040773561979443, 1.0009945751278181, 1.0002460865533080,
    1.0000612481350587, 1.0000152822594087, 1.0000038172932650,
    1.0000009539620339, 1.0000002384505027, 1.0000000596081891,
    1.0000000149015548, 1.0000000037253340, 1.0000000009313274,
    1.0000000002328312, 1.0000000000582077, 1.0000000000145519,
    1.0000000000036380, 1.0000000000009095, 1.0000000000002274,
    1.0000000000000568, 1.0000000000000142, 1.0000000000000036,
    1.0000000000000009, 1.0000000000000002, 1.0000000000000001,
    1.0, 1.0, 1.0,
};

constexpr double pole_tol = 1e-9 * two_pi;

}  // namespace

namespace detail {

double cl0_raw(double y) { return 0.5 * std::cos(0.5 * y) / std::sin(0.5 * y); }

double cl1_raw(double y) { return -std::log(std::abs(2.0 * std::sin(0.5 * y))); }

// Power series about the log singularity; on |y| <= pi the ratio is
// (y/2pi)^2 <= 1/4, so 30 terms reach full double precision.
double cl2_raw(double y) {
    double y2 = y * y, q = y2 / (two_pi * two_pi);
    double acc = 0.0, p = q;
    for (int n = 1; n <= 30; ++n) {
        double t = zeta_2n[n - 1] * p / (n * (2.0 * n + 1.0));
        acc += t;
        if (std::abs(t) < 1e-18 * (1.0 + std::abs(acc))) break;
        p *= q;
    }
    if (y == 0.0) return 0.0;
    return y - y * std::log(std::abs(y)) + y * acc;
}

double cl3_raw(double y) {
    double y2 = y * y, q = y2 / (two_pi * two_pi);
    double acc = 0.0, p = q;
    for (int n = 1; n <= 30; ++n) {
        double t = zeta_2n[n - 1] * p / (n * (2.0 * n + 1.0) * (2.0 * n + 2.0));
        acc += t;
        if (std::abs(t) < 1e-18 * (1.0 + std::abs(acc))) break;
        p *= q;
    }
    double logterm = (y == 0.0) ? 0.0 : 0.5 * y2 * std::log(std::abs(y));
    return zeta3 - 0.75 * y2 + logterm - y2 * acc;
}

double sl1_raw(double y) { return 0.5 * (sign(y) * pi - y); }

double sl2_raw(double y) {
    return 0.25 * y * y - 0.5 * pi * std::abs(y) + pi * pi / 6.0;
}

double sl3_raw(double y) {
    double a = std::abs(y);
    return sign(y) * (pi * pi * a / 6.0 - pi * a * a / 4.0 + a * a * a / 12.0);
}

}  // namespace detail

double clausen_cl(int r, double x) {
    double y = reduce_angle(x);
    switch (r) {
        case 0:
        case 1:
            if (std::abs(y) < pole_tol)
                throw SingularPoint("clausen_cl: argument at a singularity", x);
            return r == 0 ? detail::cl0_raw(y) : detail::cl1_raw(y);
        case 2:
            return detail::cl2_raw(y);
        case 3:
            return detail::cl3_raw(y);
        default:
            throw std::invalid_argument("clausen_cl: order must be 0..3");
    }
}

double glaisher_sl(int r, double x) {
    double y = reduce_angle(x);
    switch (r) {
        case 1:
            return detail::sl1_raw(y);
        case 2:
            return detail::sl2_raw(y);
        case 3:
            return detail::sl3_raw(y);
        default:
            throw std::invalid_argument("glaisher_sl: order must be 1..3");
    }
}

}  // namespace revival
