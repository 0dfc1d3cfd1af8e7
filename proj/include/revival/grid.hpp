#ifndef REVIVAL_GRID_HPP
#define REVIVAL_GRID_HPP

#include <vector>

#include "revival/evolution.hpp"
#include "revival/profiles.hpp"
#include "revival/trigpolylog.hpp"

namespace revival {

// Uniform closed grid; point(0) == lo and point(n-1) == hi exactly.
struct Grid {
    long long n;
    double lo, hi;
    static Grid uniform(long long n, double lo, double hi);
    double point(long long i) const;
};

enum class Exec { serial, parallel };

// Map f over the grid.  Each slot is independent and computed by the same
// expression in either mode, so serial and parallel results are bitwise
// identical; only the schedule differs.
template <class F>
std::vector<double> sweep_map(const Grid& g, F&& f, Exec mode) {
    std::vector<double> out(static_cast<size_t>(g.n));
    if (mode == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < g.n; ++i)
            out[static_cast<size_t>(i)] = f(g.point(i));
    } else {
        for (long long i = 0; i < g.n; ++i)
            out[static_cast<size_t>(i)] = f(g.point(i));
    }
    return out;
}

struct SolutionField {
    std::vector<double> x, u;
};

struct PolylogField {
    std::vector<double> x, S, C;
};

// Truncated-series sweep of a prepared plan.
SolutionField sweep_series(const SeriesPlan& plan, const Grid& g, Exec mode);

// Closed-form profile sweep; singular-lattice points become nan.
SolutionField sweep_profile(const RevivalProfile& prof, const Grid& g, Exec mode);

// S/C closed-form sweep; r=1 node hits become nan in both columns.
PolylogField sweep_polylog(const PolylogIndex& idx, const Grid& g, Exec mode);

}  // namespace revival

#endif
