#include "revival/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "revival/angle.hpp"

namespace revival {

Grid Grid::uniform(long long n, double lo, double hi) {
    if (n < 2) throw std::invalid_argument("Grid: need n >= 2");
    if (!(lo < hi)) throw std::invalid_argument("Grid: need lo < hi");
    return {n, lo, hi};
}

double Grid::point(long long i) const {
    if (i == n - 1) return hi;
    return lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(n - 1));
}

namespace {

std::vector<double> grid_x(const Grid& g) {
    std::vector<double> x(static_cast<size_t>(g.n));
    for (long long i = 0; i < g.n; ++i) x[static_cast<size_t>(i)] = g.point(i);
    return x;
}

}  // namespace

SolutionField sweep_series(const SeriesPlan& plan, const Grid& g, Exec mode) {
    SolutionField f;
    f.x = grid_x(g);
    f.u = sweep_map(g, [&](double x) { return plan.eval(x); }, mode);
    return f;
}

SolutionField sweep_profile(const RevivalProfile& prof, const Grid& g, Exec mode) {
    SolutionField f;
    f.x = grid_x(g);
    f.u = sweep_map(
        g,
        [&](double x) -> double {
            try {
                return prof.evaluate(x);
            } catch (const SingularPoint&) {
                return std::nan("");
            }
        },
        mode);
    return f;
}

PolylogField sweep_polylog(const PolylogIndex& idx, const Grid& g, Exec mode) {
    PolylogField f;
    f.x = grid_x(g);
    f.S.resize(f.x.size());
    f.C.resize(f.x.size());
    std::vector<double> packedS = sweep_map(
        g,
        [&](double x) -> double {
            try {
                return eval_trig_polylog(idx, x).S;
            } catch (const SingularPoint&) {
                return std::nan("");
            }
        },
        mode);
    std::vector<double> packedC = sweep_map(
        g,
        [&](double x) -> double {
            try {
                return eval_trig_polylog(idx, x).C;
            } catch (const SingularPoint&) {
                return std::nan("");
            }
        },
        mode);
    f.S = std::move(packedS);
    f.C = std::move(packedC);
    return f;
}

}  // namespace revival
