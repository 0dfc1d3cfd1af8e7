#ifndef REVIVAL_TRIGPOLYLOG_HPP
#define REVIVAL_TRIGPOLYLOG_HPP

#include <complex>
#include <vector>

namespace revival {

// Index (j, k, r) of the lacunary series over modes m = n*k + j, n >= 0:
//   S (sine part) and C (cosine part) of sum_m e^{i m x} / m^r.
struct PolylogIndex {
    int j, k, r;
    PolylogIndex(int j_, int k_, int r_);
};

struct SCPair {
    double S, C;
};

enum class Family { S, C };

// Singular lattice of the r=1 closed forms: x = 2*pi*l/k.
std::vector<double> node_set(int k);
double node_distance(int k, double x);
double node_tolerance(int k);  // 1e-9 * (2*pi/k)

// Closed-form evaluation via the Clausen/Glaisher pair; r in {1, 2, 3}.
// Throws SingularPoint within node_tolerance of a node when r = 1.
SCPair eval_trig_polylog(const PolylogIndex& idx, double x);

// First n_terms of the defining series (n = 0..n_terms-1), any r >= 1.
// Phase advances by a unit rotation, resynchronised every 512 terms from an
// exactly reduced m*x so drift never exceeds a few ulps.
std::complex<double> series_partial_sum(const PolylogIndex& idx, double x,
                                        long long n_terms);

enum class CuspSign { up, down, none };

// Local behaviour at the node x0 = 2*pi*l/k.
//   r = 1: jump_height is the signed jump across x0; cusp_sign tells whether
//          the log cusp points up, down, or is absent.
//   r = 2: continuous (jump_height = 0); cusp_sign up/down marks the
//          orientation of the vertical tangent, none means a plain corner.
struct NodeBehaviour {
    double jump_height;
    CuspSign cusp_sign;
};
NodeBehaviour node_behaviour(const PolylogIndex& idx, long long l, Family fam);

// Distributional derivative of the r=1 member:
//   sum_i delta_terms[i].weight * delta(x - location)
// + sum_i cot_terms[i].weight * cot(x/2 + shift)  + constant.
// Locations are canonical in [-pi, pi), shifts in [0, pi); weights that are
// exactly zero are dropped.
struct DeltaTerm {
    double location, weight;
};
struct CotTerm {
    double shift, weight;
};
struct DerivativeDecomposition {
    std::vector<DeltaTerm> delta_terms;
    std::vector<CotTerm> cot_terms;
    double constant = 0.0;
    // Pointwise value away from the delta lattice (cot terms + constant).
    double smooth_at(double x) const;
};
DerivativeDecomposition distributional_derivative(const PolylogIndex& idx,
                                                  Family fam);

// S^k_j + S^k_{k-j} for 1 <= j < k; piecewise constant between nodes.
double pairwise_sum_profile(int j, int k, double x);

}  // namespace revival

#endif
