// Orbit and orbit-set energies for the annulus model, and the admissibility
// predicate that rules out negative fiber multiplicities by energy positivity.
#pragma once

#include <string>

#include "pfh/orbit.hpp"
#include "pfh/twist_profile.hpp"

namespace pfh {

// Energy of one simple orbit. Interior slope orbits (0 < p/q < 1) carry
// q * (|x0| R'(|x0|) - R(|x0|)) with x0 = position_of_slope(p/q); slope-0/1
// orbits and all interior critical-point orbits carry 0.
double orbit_energy(const OrbitKind& kind);

// E(alpha + m[F]) = sum of multiplicity-weighted orbit energies plus
// m * fiber_area.
double orbitset_energy(const OrbitSet& alpha, int fiber_mult,
                       const TwistProfile& profile);

struct Admissibility {
    bool admissible = true;
    std::string reason;  // "negative energy" when rejected
};

// A class alpha + m[F] is admissible iff its energy is nonnegative; under the
// profile invariant fiber_area > degree bound this rejects every m < 0.
// Requires degree(alpha) <= profile.degree_bound and fiber_area > degree
// bound (std::domain_error otherwise).
Admissibility is_admissible_class(const OrbitSet& alpha, int fiber_mult,
                                  const TwistProfile& profile);

}  // namespace pfh
