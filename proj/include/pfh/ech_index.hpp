// Index calculus: Conley-Zehnder values, relative Chern number, relative
// self-intersection, the ECH index computed three independent ways, the
// fiber-class shift, the Fredholm index and the doubled self-intersection
// relation with its index-zero classification search.
#pragma once

#include <vector>

#include "pfh/orbit.hpp"
#include "pfh/twist_profile.hpp"

namespace pfh {

// Abstract holomorphic-curve descriptor.
struct CurveData {
    int genus = 0;            // g(C)
    int hyperbolic_ends = 0;  // h(C)
    int q_positive_ends = 0;  // e_+(C)
    int q_negative_mult = 0;  // e_Q(C)
    int double_points = 0;    // delta(C)
    int degree = 0;           // q
    int fiber_mult = 0;       // m

    // End budget: each end consumes at least one unit of degree.
    void validate() const;
    bool operator==(const CurveData&) const = default;
};

// CZ of the k-th iterate: slope elliptic and positive-Hessian Morse orbits
// give -1, negative-Hessian Morse orbits give +1, hyperbolic kinds give 0.
// The table is only valid for iterates k <= Q; larger k is a domain error.
int conley_zehnder(const OrbitKind& kind, int iterate, int degree_bound);

// c_tau(alpha): slope entries contribute their total degree (c of a degree-q
// orbit is q), Morse entries contribute their multiplicity.
int relative_chern(const OrbitSet& alpha);

// Q_tau of an ordered pair of slopes, p/q >= p2/q2, equal slopes allowed:
// min{p(q2-p2), p2(q-p)}; on the diagonal p(q-p). Throws on order violation.
int q_tau_pair(int p, int q, int p2, int q2);
// Order-insensitive wrapper.
int q_tau_pair_sorted(int p, int q, int p2, int q2);

// Q_tau(alpha) over the slope entries of alpha, computed both as the flat
// P(Q-P) - sum of cross determinants and as the bilinear expansion; the two
// must agree (std::logic_error otherwise).
int q_tau_total(const OrbitSet& alpha);

// ECH index by the closed combinatorial formula: slope part
// Q + P(Q-P) - sum_{i<j}(p_i q_j - p_j q_i) - e(alpha) over the flat list,
// plus 0 / 2m / m per positive-Hessian / negative-Hessian / saddle Morse entry.
int ech_index_sum(const OrbitSet& alpha);

// ECH index of the slope part via the lattice path: the region bounded by
// the slope-descending edge path, computed by an exact shoelace sum;
// returns Q + 2*Area - P^2 - e(alpha). Morse entries contribute as above.
int ech_index_area(const OrbitSet& alpha);

// ECH index as c_tau + Q_tau + sum of iterated CZ terms. Must agree with
// ech_index_sum (std::logic_error otherwise).
int ech_index_components(const OrbitSet& alpha, const TwistProfile& profile);

// I_m(alpha) = I_0(alpha) + 2m(Q + 1 - g(F)), Q = degree(alpha).
int ech_index_shifted(const OrbitSet& alpha, int fiber_mult,
                      const TwistProfile& profile);

// ind C = 2g(C) - 2 + h(C) + 2q + 4m(1 - g(F)) + 2 e_+(C).
int fredholm_index(const CurveData& c, const TwistProfile& profile);

// 2 C.C = 2g(C) - 2 + ind C + h(C) + 2 e_Q(C) + 4 delta(C).
int self_intersection_doubled(const CurveData& c, const TwistProfile& profile);

struct CurveSearchCaps {
    int max_genus = 3;
    int max_double_points = 3;
    int max_fiber_mult = 2;
};

// Exhaustive search over curve data with degree in [1, Q] (closed curves are
// excluded: a curve asymptotic to a nonempty orbit set has degree >= 1) for
// ind = 0 and C.C = 0. Requires the low-degree regime Q < g(F) - 1.
// If require_index_zero is false the ind = 0 constraint is dropped.
std::vector<CurveData> classify_index_zero_curves(const TwistProfile& profile,
                                                  const CurveSearchCaps& caps = {},
                                                  bool require_index_zero = true);

}  // namespace pfh
