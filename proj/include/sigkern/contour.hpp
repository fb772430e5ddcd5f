#pragma once

#include <functional>
#include <string>

#include "sigkern/path.hpp"

namespace sigkern {

enum class ContourFamily { circle, parabolic, hyperbolic, cotangent };

struct ContourSpec {
    ContourFamily family = ContourFamily::circle;
    double radius = 1.0;  // circle only
    int n_points = 32;
};

using ComplexFn = std::function<Complex(Complex)>;

/// (1/2 pi i) contour integral of e^z f(z) over the circle |z| = radius,
/// trapezoidal rule: I_N = (1/N) sum e^{z_k} f(z_k) z_k, z_k = r e^{2 pi i k/N}.
Complex circle_trapezoid(const ComplexFn& f, int N, double radius = 1.0);

/// Same integral over an optimized Hankel-type contour (parabolic/hyperbolic/
/// cotangent maps), midpoint sampling in theta:
///   I_N = -(i/N) sum e^{z_k} f(z_k) w_k,  z_k = phi(theta_k), w_k = phi'(theta_k).
Complex tws_quadrature(const ComplexFn& f, int N, ContourFamily family);

/// 1/Gamma(p) by the contour formula (1/2 pi i) \oint z^{-p} e^z dz.
/// Circle contours require integer p (the principal power has a branch cut
/// the circle would cross otherwise).
double reciprocal_gamma(double p, const ContourSpec& spec);

}  // namespace sigkern
