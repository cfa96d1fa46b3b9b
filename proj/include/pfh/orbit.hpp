// Periodic orbit roster after the Morse-Bott perturbation: slope orbits
// e_{p/q} / h_{p/q} on the twist annulus plus constant orbits at interior
// Morse critical points, orbit sets with multiplicities, and exhaustive
// enumeration of ECH generators.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pfh {

enum class OrbitTag : std::uint8_t {
    SlopeElliptic,    // e_{p/q}
    SlopeHyperbolic,  // h_{p/q}
    MorsePositive,    // interior critical point with positive definite Hessian;
                      // Q-negative elliptic, printed "e-:label"
    MorseNegative,    // negative definite Hessian; Q-positive elliptic, "e+:label"
    MorseSaddle,      // saddle; positive hyperbolic, "h:label"
};

struct OrbitKind {
    OrbitTag tag;
    int p = 0, q = 1;   // slope p/q for slope orbits, gcd(p,q)=1, 0<=p<=q
    std::string label;  // for Morse orbits

    static OrbitKind slope_elliptic(int p, int q);
    static OrbitKind slope_hyperbolic(int p, int q);
    static OrbitKind morse_positive(std::string label);
    static OrbitKind morse_negative(std::string label);
    static OrbitKind morse_saddle(std::string label);

    bool is_slope() const {
        return tag == OrbitTag::SlopeElliptic || tag == OrbitTag::SlopeHyperbolic;
    }
    bool is_elliptic() const {
        return tag == OrbitTag::SlopeElliptic || tag == OrbitTag::MorsePositive ||
               tag == OrbitTag::MorseNegative;
    }
    bool is_hyperbolic() const { return !is_elliptic(); }
    // Degree of one iterate: q for slope orbits, 1 for Morse orbits.
    int degree() const { return is_slope() ? q : 1; }

    bool operator==(const OrbitKind&) const = default;
    // Canonical order: slope entries first, by slope descending, elliptic
    // before hyperbolic at equal slope; Morse entries after, by (tag, label).
    std::strong_ordering operator<=>(const OrbitKind& o) const;

    std::string to_string() const;
};

// Census of interior Morse critical points by Hessian type.
struct MorseConfig {
    int n_positive = 0;  // Hessian > 0
    int n_negative = 0;  // Hessian < 0
    int n_saddle = 0;

    // Deterministic label sets: a0,a1,... / b0,... / c0,...
    std::vector<OrbitKind> roster() const;
};

// Canonically ordered multiset of orbits.
class OrbitSet {
  public:
    OrbitSet() = default;
    // Canonicalizes: sorts and merges duplicate kinds. Multiplicities must be
    // positive.
    explicit OrbitSet(std::vector<std::pair<OrbitKind, int>> entries);

    const std::vector<std::pair<OrbitKind, int>>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    int degree() const;
    // True iff every hyperbolic entry has multiplicity 1.
    bool is_ech_generator() const;

    std::string to_string() const;

    bool operator==(const OrbitSet&) const = default;
    auto operator<=>(const OrbitSet&) const = default;

  private:
    std::vector<std::pair<OrbitKind, int>> entries_;
};

// All ECH generators of degree exactly Q over the slope roster of order Q
// (Farey fractions on [0,1], e and h flavor each) plus the Morse roster.
// Output is in canonical order and deterministic. Throws std::length_error
// if more than `cap` sets would be produced.
std::vector<OrbitSet> enumerate_generators(int Q, const MorseConfig& morse = {},
                                           std::size_t cap = 10'000'000);

// Slope roster for degree bound Q: Farey fractions of order Q on [0,1],
// slope descending, elliptic before hyperbolic.
std::vector<OrbitKind> slope_roster(int Q);

enum class EllipticClass { QPositive, QNegative, Neither };

// Rotation-number classification: theta mod 1 in (0, q/Q) is Q-positive,
// in (1 - q/Q, 1) is Q-negative. Requires q <= Q.
EllipticClass classify_elliptic(double theta, int q, int Q);

// Error with input position information from the orbit-set grammar.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::string msg, std::size_t pos)
        : std::runtime_error(std::move(msg)), position(pos) {}
};

// Parses the orbit-set grammar:
//   orbitset := term (WS term)* | "empty"
//   term     := kind ("^" INT)?
//   kind     := ("e"|"h") "[" INT "/" INT "]" | "e+" ":" IDENT
//             | "e-" ":" IDENT | "h" ":" IDENT | "e0" | "e1" | "h0" | "h1"
// Throws ParseError on malformed input and std::invalid_argument on
// semantic errors (non-coprime p/q, slope outside [0,1]).
OrbitSet parse_orbitset(const std::string& text);

}  // namespace pfh
