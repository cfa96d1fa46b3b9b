// Exact lattice-polygon arithmetic: convex hulls, doubled areas, Minkowski
// sums and mixed volumes, used as an independent root-count check of the
// relative self-intersection formulas.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace pfh {

using LatticePoint = std::pair<std::int64_t, std::int64_t>;

// Convex polygon with integer vertices, counterclockwise, canonical start at
// the lexicographically smallest vertex. Points and segments are legal
// degenerate values (1 or 2 vertices).
class LatticePolygon {
  public:
    // Convex hull of an arbitrary nonempty point list.
    static LatticePolygon hull(std::vector<LatticePoint> points);

    const std::vector<LatticePoint>& vertices() const { return verts_; }
    bool degenerate() const { return verts_.size() < 3; }

    // Twice the area, exact.
    std::int64_t area2() const;

    bool operator==(const LatticePolygon&) const = default;

  private:
    std::vector<LatticePoint> verts_;
};

LatticePolygon minkowski_sum(const LatticePolygon& a, const LatticePolygon& b);

// (area2(a+b) - area2(a) - area2(b)) / 2; the difference is always even
// (std::logic_error if not).
std::int64_t mixed_volume(const LatticePolygon& a, const LatticePolygon& b);

// Newton polygons of the intersection system for an ordered slope pair
// p/q >= p2/q2 (coprime, in [0,1]). The two triangles have legs on the axes;
// which exponents sit in which equation depends on where the slopes fall
// relative to 1/2, but the mixed volume is the same in every case.
std::pair<LatticePolygon, LatticePolygon> newton_polygons_for_pair(int p, int q,
                                                                   int p2, int q2);

// Bernshtein count: mixed volume of the Newton pair minus the |p q2 - p2 q|
// solutions that fall outside the working region. Must equal the closed form
// min{p(q2-p2), p2(q-p)} (diagonal: p(q-p)); mismatch is a std::logic_error.
std::int64_t q_tau_oracle(int p, int q, int p2, int q2);

}  // namespace pfh
