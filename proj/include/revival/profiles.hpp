#ifndef REVIVAL_PROFILES_HPP
#define REVIVAL_PROFILES_HPP

#include <vector>

#include "revival/dispersion.hpp"
#include "revival/evolution.hpp"
#include "revival/trigpolylog.hpp"

namespace revival {

// weight * {S or C}^{k}_{index, order}(x - shift); shift_num is the exact
// lattice numerator (shift = shift_num * pi / q up to a per-profile offset),
// kept so singular sets aggregate in integer arithmetic.
struct ProfileTerm {
    Family family;
    int order;
    int index;
    long long shift_num;
    double shift;
    double weight;
};

// Closed-form revival profile at rational time t = p*pi/q: a finite
// combination of translated trig polylogs of order k_order = 2q.
// error_bound: sup-norm certificate for |profile - true evolution| (0 when
// the closed form is exact, as for bo/kdv).
struct RevivalProfile {
    DispersionSpec spec;
    RationalTime time;
    int k_order;
    // Representation lattice {pi*m/q + lattice_offset}: every term is
    // singular there, so the closed form is never evaluated on it, though the
    // summed profile itself is regular at residues whose aggregated jump and
    // cusp weights cancel exactly (even q).
    double lattice_offset;
    std::vector<ProfileTerm> terms;
    double constant;
    double error_bound;

    double evaluate(double x) const;         // SingularPoint near the lattice
    double node_distance(double x) const;    // distance to the lattice
    std::vector<double> singular_set() const;  // lattice points in [-pi, pi)
};

RevivalProfile bo_rational_profile(const RationalTime& t);
RevivalProfile kdv_rational_profile(const RationalTime& t);
RevivalProfile ilw_rational_profile(const RationalTime& t, double delta);
RevivalProfile smith_rational_profile(const RationalTime& t, double delta);

// Fundamental solution at rational time as distribution:
//   constant + sum w_i delta(x - loc_i) + sum w_i cot(x/2 + shift_i)
//   + residual polylog terms (order >= 2, continuous) with a sup bound.
struct FundamentalDecomposition {
    RationalTime time;
    int k_order;
    double constant;
    std::vector<DeltaTerm> delta_terms;
    std::vector<CotTerm> cot_terms;
    std::vector<ProfileTerm> residual_terms;
    double residual_bound;

    // Pointwise value away from the delta lattice and cot poles.
    double regular_at(double x) const;
    double delta_mass() const;
};

FundamentalDecomposition bo_fundamental_decomposition(const RationalTime& t);
FundamentalDecomposition smith_fundamental_approx(const RationalTime& t,
                                                  double delta);

}  // namespace revival

#endif
