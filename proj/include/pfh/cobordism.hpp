// Degree/genus regime detection, the index-zero generator classification
// with a brute-force cross-check, and the chain- and homology-level values of
// the induced cobordism map.
#pragma once

#include <string>
#include <vector>

#include "pfh/orbit.hpp"
#include "pfh/report.hpp"
#include "pfh/twist_profile.hpp"

namespace pfh {

enum class Regime {
    HighDegree,    // Q > g - 1
    LowDegree,     // 2Q < g - 1
    Intermediate,  // g - 1 <= 2Q and Q < g - 1
    Excluded,      // Q = g - 1
};

std::string to_string(Regime r);

// Case analysis on (Q, g). Requires Q >= 0, g >= 2.
Regime regime(int degree_bound, int fiber_genus);

// High-degree regime only: the degree-Q generators of index zero, computed
// both by filtering the full enumeration by index and by the closed-form
// family (products of the boundary elliptic orbits and positive-Hessian
// critical orbits). std::logic_error if the two computations disagree.
std::vector<OrbitSet> index_zero_generators(const TwistProfile& profile,
                                            const MorseConfig& morse = {});

// Chain-level value on a degree-Q generator in the high-degree regime:
// 1 iff the set consists only of boundary elliptic orbits e0/e1 and
// positive-Hessian critical orbits, else 0.
int chain_map_value(const OrbitSet& alpha, const TwistProfile& profile,
                    const MorseConfig& morse = {});

enum class HomologyMapOutcome { Zero, One, NotComputed };

// Homology-level value on a degree-Q generator in the low-degree regime:
// One iff the set is a product of e0 and e1 only. The intermediate regime
// yields NotComputed; the high-degree and excluded regimes are errors here.
HomologyMapOutcome homology_map_value(const OrbitSet& alpha,
                                      const TwistProfile& profile,
                                      const MorseConfig& morse = {});

// Low-degree regime audit: for every degree-Q generator and every fiber
// multiplicity m in [0, fiber_mult_cap], check the shifted index bound
// I_m < 2Q - 2mQ and that I_0 = 0 exactly on the closed-form family.
Report low_degree_index_audit(const TwistProfile& profile,
                              const MorseConfig& morse = {},
                              int fiber_mult_cap = 3);

}  // namespace pfh
