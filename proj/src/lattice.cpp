#include "pfh/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pfh/ech_index.hpp"

namespace pfh {

namespace {

std::int64_t cross(const LatticePoint& o, const LatticePoint& a,
                   const LatticePoint& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

}  // namespace

LatticePolygon LatticePolygon::hull(std::vector<LatticePoint> points) {
    if (points.empty())
        throw std::invalid_argument("lattice hull: empty point list");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    LatticePolygon out;
    if (points.size() == 1) {
        out.verts_ = std::move(points);
        return out;
    }
    // Andrew monotone chain; strict turns only, so collinear interior points
    // are dropped.
    std::vector<LatticePoint> h(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
        const auto& p = points[i];
        while (k >= lower && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    h.resize(k - 1);
    if (h.size() == 2 && h[0] == h[1]) h.resize(1);
    // canonical start: lexicographic minimum (sorted input puts it first in
    // the upper-hull pass, so rotate to be safe)
    auto min_it = std::min_element(h.begin(), h.end());
    std::rotate(h.begin(), min_it, h.end());
    out.verts_ = std::move(h);
    return out;
}

std::int64_t LatticePolygon::area2() const {
    if (degenerate()) return 0;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        const auto& [x1, y1] = verts_[i];
        const auto& [x2, y2] = verts_[(i + 1) % verts_.size()];
        sum += x1 * y2 - x2 * y1;
    }
    return std::llabs(sum);
}

LatticePolygon minkowski_sum(const LatticePolygon& a, const LatticePolygon& b) {
    std::vector<LatticePoint> sums;
    sums.reserve(a.vertices().size() * b.vertices().size());
    for (const auto& [ax, ay] : a.vertices())
        for (const auto& [bx, by] : b.vertices())
            sums.emplace_back(ax + bx, ay + by);
    return LatticePolygon::hull(std::move(sums));
}

std::int64_t mixed_volume(const LatticePolygon& a, const LatticePolygon& b) {
    std::int64_t diff = minkowski_sum(a, b).area2() - a.area2() - b.area2();
    if (diff % 2 != 0)
        throw std::logic_error("mixed_volume: odd area difference");
    return diff / 2;
}

namespace {

LatticePolygon leg_triangle(std::int64_t a, std::int64_t b) {
    return LatticePolygon::hull({{0, 0}, {a, 0}, {0, b}});
}

}  // namespace

std::pair<LatticePolygon, LatticePolygon> newton_polygons_for_pair(int p, int q,
                                                                   int p2, int q2) {
    if (q < 1 || q2 < 1 || p < 0 || p > q || p2 < 0 || p2 > q2 ||
        std::gcd(p, q) != 1 || std::gcd(p2, q2) != 1)
        throw std::invalid_argument("newton_polygons_for_pair: invalid slope pair");
    if (static_cast<long long>(p) * q2 < static_cast<long long>(p2) * q)
        throw std::invalid_argument("newton_polygons_for_pair: slopes out of order");
    // Equal slope: z^p vs w^p and z^{q-p} vs w^{q-p}.
    if (p == p2 && q == q2)
        return {leg_triangle(p, p), leg_triangle(q - p, q - p)};
    // Both slopes <= 1/2: the first equation couples z^p with w^{p2}.
    if (2 * p <= q && 2 * p2 <= q2)
        return {leg_triangle(p, p2), leg_triangle(q - p, q2 - p2)};
    // Both >= 1/2, and the mixed case p2/q2 < 1/2 < p/q: the first equation
    // couples z^{q-p} with w^{q2-p2}.
    return {leg_triangle(q - p, q2 - p2), leg_triangle(p, p2)};
}

std::int64_t q_tau_oracle(int p, int q, int p2, int q2) {
    auto [n1, n2] = newton_polygons_for_pair(p, q, p2, q2);
    std::int64_t torus_count = mixed_volume(n1, n2);
    std::int64_t outside = std::llabs(static_cast<std::int64_t>(p) * q2 -
                                      static_cast<std::int64_t>(p2) * q);
    std::int64_t count = torus_count - outside;
    if (count != q_tau_pair(p, q, p2, q2))
        throw std::logic_error("q_tau_oracle: Bernshtein count disagrees with the "
                               "closed form");
    return count;
}

}  // namespace pfh
