// Complex-pair parametrizations of the orbit preimages under the model
// diffeomorphism, the diffeomorphism itself, and numerical verification that
// the parametrized curves are the claimed Reeb orbits.
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "pfh/report.hpp"

namespace pfh {

using Complex = std::complex<double>;

struct OrbitSample {
    double tau;
    Complex x1, x2;
};

// Sampled preimage of the slope-p/q orbit at torus coordinate y0.
struct OrbitCurve {
    int p = 0, q = 1;
    double x0 = 0.0;  // signed annulus coordinate
    double y0 = 0.0;
    double h = 0.0;
    std::vector<OrbitSample> samples;
};

// Samples the closed-form parametrization over one full period tau in [0, q).
// Interior slopes only (0 < p/q < 1); requires n_samples >= 8q.
OrbitCurve parametrize_orbit(int p, int q, double y0, int n_samples);

// Base projection x1^2 + x2^2.
Complex base_projection(Complex x1, Complex x2);

// Image of a point under the model map: the base value, the annulus
// coordinate x = Im(x1 conj(x2)) and the torus coordinate y mod 1.
struct PhiImage {
    Complex base;
    double x;
    double y;
};

// Point evaluation with the principal branch of t = arg(base)/(2 pi) in
// [0, 1). Throws std::domain_error on the vanishing-cycle locus.
PhiImage phi(Complex x1, Complex x2);

// Branch-consistent evaluation near a reference image: t is lifted to the
// value closest to ref_t, and y is reduced to within 1/2 of ref_y.
PhiImage phi_near(Complex x1, Complex x2, double ref_t, double ref_y);

// Checks along the sampled curve: |base| = 1, arg(base) = 2 pi tau, the
// annulus coordinate equals the expected position, and the y-advance law
// (slope p/q on the positive side, p/q - 1 on the negative side).
Report verify_orbit(int p, int q, double y0, int n_samples, double tol);

struct PullbackSampleSpec {
    int n_points = 100;        // sample points (scaled orbit points)
    int n_directions = 2;      // tangent directions per point
    double step = 1e-5;        // central-difference step
    unsigned seed = 2026;
};

// Finite-difference check of the 1-form identity: the canonical primitive on
// complex 2-space evaluated on a tangent vector must agree with
// x dy - R(|x|) dt evaluated on the pushforward. Throws on step underflow.
Report verify_oneform_pullback(const PullbackSampleSpec& spec, double tol);

}  // namespace pfh
