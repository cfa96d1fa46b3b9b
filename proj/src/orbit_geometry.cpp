#include "pfh/orbit_geometry.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "pfh/twist_profile.hpp"

namespace pfh {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap_half(double v) {  // reduce to [-1/2, 1/2)
    return v - std::round(v);
}

struct Frame {
    Complex x1, x2;
    double t;  // real lift of arg(base)/2pi
    bool positive_side;
};

// Torus coordinates of a point given a branch-consistent lift of t.
// y is returned unreduced; callers compare mod 1 or unwrap to a reference.
std::pair<double, double> torus_coords(const Frame& f) {
    Complex phase = std::polar(1.0, -std::numbers::pi * f.t);
    Complex xh1 = phase * f.x1, xh2 = phase * f.x2;
    // the real-part vector of the pair, viewed as a plane vector
    Complex p_hat(xh1.real(), xh2.real());
    if (std::abs(p_hat) == 0.0)
        throw std::domain_error("phi: point lies on the vanishing-cycle locus");
    double theta = std::arg(p_hat) / two_pi;
    double x = (f.x1 * std::conj(f.x2)).imag();
    double y = f.positive_side ? theta + f.t / 2.0 : theta - f.t / 2.0;
    return {x, y};
}

}  // namespace

Complex base_projection(Complex x1, Complex x2) { return x1 * x1 + x2 * x2; }

PhiImage phi(Complex x1, Complex x2) {
    Complex base = base_projection(x1, x2);
    if (std::abs(base) == 0.0)
        throw std::domain_error("phi: point lies on the vanishing-cycle locus");
    double t = std::arg(base) / two_pi;
    if (t < 0.0) t += 1.0;
    double x = (x1 * std::conj(x2)).imag();
    auto [xx, y] = torus_coords({x1, x2, t, x >= 0.0});
    return {base, xx, y - std::floor(y)};
}

PhiImage phi_near(Complex x1, Complex x2, double ref_t, double ref_y) {
    Complex base = base_projection(x1, x2);
    if (std::abs(base) == 0.0)
        throw std::domain_error("phi: point lies on the vanishing-cycle locus");
    double t = std::arg(base) / two_pi;
    t += std::round(ref_t - t);
    double x = (x1 * std::conj(x2)).imag();
    auto [xx, y] = torus_coords({x1, x2, t, x >= 0.0});
    y += std::round(ref_y - y);
    PhiImage img{base, xx, y};
    return img;
}

OrbitCurve parametrize_orbit(int p, int q, double y0, int n_samples) {
    if (q < 1 || p < 0 || p > q || std::gcd(p, q) != 1)
        throw std::domain_error("parametrize_orbit: need coprime 0 <= p/q <= 1");
    if (p == 0 || p == q)
        throw std::domain_error(
            "parametrize_orbit: slopes 0 and 1 have no interior torus");
    if (n_samples < 8 * q)
        throw std::domain_error("parametrize_orbit: need at least 8q samples");

    OrbitCurve curve;
    curve.p = p;
    curve.q = q;
    curve.y0 = y0 - std::floor(y0);
    double slope = static_cast<double>(p) / q;
    curve.x0 = (2 * p == q) ? 0.0 : position_of_slope(slope);
    curve.h = h_of_position(curve.x0);

    double eh = std::exp(curve.h), emh = std::exp(-curve.h);
    double ang0 = two_pi * curve.y0;
    curve.samples.reserve(n_samples);
    for (int k = 0; k < n_samples; ++k) {
        double tau = static_cast<double>(k) * q / n_samples;
        double a_p = two_pi * slope * tau;            // phase of the z^p mode
        double a_c = two_pi * (1.0 - slope) * tau;    // phase of the conjugate mode
        Complex x1, x2;
        if (curve.x0 >= 0.0) {
            Complex u = 0.5 * eh * std::polar(1.0, ang0 + a_p);
            Complex v = 0.5 * emh * std::polar(1.0, -ang0 + a_c);
            x1 = u + v;
            x2 = Complex(0, -1) * u + Complex(0, 1) * v;
        } else {
            Complex u = 0.5 * eh * std::polar(1.0, -ang0 + a_c);
            Complex v = 0.5 * emh * std::polar(1.0, ang0 + a_p);
            x1 = u + v;
            x2 = Complex(0, 1) * u + Complex(0, -1) * v;
        }
        curve.samples.push_back({tau, x1, x2});
    }
    return curve;
}

Report verify_orbit(int p, int q, double y0, int n_samples, double tol) {
    OrbitCurve curve = parametrize_orbit(p, q, y0, n_samples);
    double slope_law = curve.x0 >= 0.0 ? static_cast<double>(p) / q
                                       : static_cast<double>(p) / q - 1.0;
    double dev_abs = 0.0, dev_arg = 0.0, dev_x = 0.0, dev_y = 0.0;
    for (const auto& s : curve.samples) {
        Complex base = base_projection(s.x1, s.x2);
        dev_abs = std::max(dev_abs, std::fabs(std::abs(base) - 1.0));
        dev_arg = std::max(dev_arg,
                           two_pi * std::fabs(wrap_half(std::arg(base) / two_pi - s.tau)));
        auto [x, y] = torus_coords({s.x1, s.x2, s.tau, curve.x0 >= 0.0});
        dev_x = std::max(dev_x, std::fabs(x - curve.x0));
        double expected_y = curve.y0 + slope_law * s.tau;
        dev_y = std::max(dev_y, std::fabs(wrap_half(y - expected_y)));
    }
    Report r;
    r.title = "verify-orbit p/q=" + std::to_string(p) + "/" + std::to_string(q);
    r.add("base modulus = 1", dev_abs, tol);
    r.add("base argument = 2 pi tau", dev_arg, tol);
    r.add("annulus coordinate = position of slope", dev_x, tol);
    r.add("y-advance law", dev_y, tol);
    return r;
}

namespace {

double theta_c2(const Complex z[2], const Complex v[2]) {
    // (i/4) sum (z_k dzbar_k - zbar_k dz_k) applied to v
    return 0.5 * ((std::conj(z[0]) * v[0]).imag() + (std::conj(z[1]) * v[1]).imag());
}

// One-sided helper: discrepancy of the pullback identity at point z along
// direction v with step s. Coordinates y, t have period 1, so the right-hand
// side carries the 2 pi angle normalization.
double pullback_discrepancy(const Complex z[2], const Complex v[2], double s) {
    PhiImage center = phi(z[0], z[1]);
    double ref_t = std::arg(center.base) / two_pi;
    Complex zp[2] = {z[0] + s * v[0], z[1] + s * v[1]};
    Complex zm[2] = {z[0] - s * v[0], z[1] - s * v[1]};
    PhiImage ip = phi_near(zp[0], zp[1], ref_t, center.y);
    PhiImage im = phi_near(zm[0], zm[1], ref_t, center.y);
    double tp = std::arg(ip.base) / two_pi;
    tp += std::round(ref_t - tp);
    double tm = std::arg(im.base) / two_pi;
    tm += std::round(ref_t - tm);
    double dy = (ip.y - im.y) / (2.0 * s);
    double dt = (tp - tm) / (2.0 * s);
    double r = std::abs(center.base);
    double rhs = two_pi * (center.x * dy - r_tilde(std::fabs(center.x), r) * dt);
    return std::fabs(theta_c2(z, v) - rhs);
}

}  // namespace

Report verify_oneform_pullback(const PullbackSampleSpec& spec, double tol) {
    if (!(spec.step > 1e-12))
        throw std::domain_error("verify_oneform_pullback: step underflow");
    std::mt19937 rng(spec.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    // interior slopes on both sides of the annulus, slope 1/2 excluded so the
    // x > 0 / x < 0 branch is stable under small steps
    const std::pair<int, int> slopes[] = {{1, 3}, {1, 4}, {2, 5}, {3, 7},
                                          {2, 3}, {3, 4}, {3, 5}, {5, 7}};
    double worst = 0.0, worst_coarse = 0.0;
    int n = 0;
    while (n < spec.n_points) {
        auto [p, q] = slopes[rng() % std::size(slopes)];
        OrbitCurve c = parametrize_orbit(p, q, unit(rng), 8 * q);
        const OrbitSample& s = c.samples[rng() % c.samples.size()];
        double scale = 0.8 + 0.4 * unit(rng);
        Complex z[2] = {scale * s.x1, scale * s.x2};
        for (int d = 0; d < spec.n_directions; ++d) {
            Complex v[2] = {Complex(gauss(rng), gauss(rng)),
                            Complex(gauss(rng), gauss(rng))};
            double norm = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
            v[0] /= norm;
            v[1] /= norm;
            worst = std::max(worst, pullback_discrepancy(z, v, spec.step));
            worst_coarse =
                std::max(worst_coarse, pullback_discrepancy(z, v, spec.step * 100.0));
        }
        ++n;
    }
    Report r;
    r.title = "verify-pullback";
    r.add("pullback identity", worst, tol);
    // central differences are second order: a 100x coarser step should cost
    // roughly 1e4 in accuracy; require at least a factor 100 over the decade
    double ratio = worst > 0.0 ? worst_coarse / worst : 1e9;
    r.add_flag("second-order convergence", ratio > 100.0,
               "coarse/fine error ratio " + std::to_string(ratio));
    return r;
}

}  // namespace pfh
