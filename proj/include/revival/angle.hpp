#ifndef REVIVAL_ANGLE_HPP
#define REVIVAL_ANGLE_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace revival {

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 6.28318530717958647692528676655900577;

// Thrown when an evaluation point is within tolerance of a singularity
// (series node, kernel pole, profile jump/cusp location).
class SingularPoint : public std::domain_error {
public:
    SingularPoint(const std::string& what, double where)
        : std::domain_error(what), where_(where) {}
    double where() const noexcept { return where_; }

private:
    double where_;
};

// Thrown when a truncation level cannot deliver the requested accuracy.
class ConvergenceError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reduce x to (-pi, pi] modulo 2*pi.  Two-part Cody-Waite constants keep the
// absolute error near 1 ulp for the argument magnitudes this library produces.
double reduce_angle(double x);

// Reduce m*x to (-pi, pi] where m is an integer-valued factor.  The product
// is split with fma so phases like (n*k + j)*x stay accurate after m*x has
// outgrown the 2*pi wheel by many turns.
double reduce_angle_times(double m, double x);

// sin/cos of 2*pi*m/n for integers n > 0.  Quarter-turn values are exact
// 0/+-1, and the reflections m -> n-m, m -> m+n/2 pair exactly, so symmetric
// weight sums cancel without rounding residue.
double unit_sin(long long m, long long n);
double unit_cos(long long m, long long n);

// Neumaier compensated accumulator; deterministic for a fixed add order.
class NeumaierSum {
public:
    void add(double v) noexcept {
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0, comp_ = 0.0;
};

inline double sign(double x) noexcept {
    return static_cast<double>((x > 0.0) - (x < 0.0));
}

}  // namespace revival

#endif
