#pragma once

#include <functional>

#include "sigkern/contour.hpp"
#include "sigkern/path.hpp"
#include "sigkern/quadrature.hpp"

namespace sigkern {

/// Cross-kernel of gamma with Brownian motion on [0,s] under the weight
/// phi(k) = (k/2)!: equals the corner entry of the development of
/// sqrt(s/2) * gamma restricted to [begin, t] (a cosh of a hyperbolic
/// displacement).
double expected_kernel_half_factorial(const PiecewiseLinearPath& gamma, double s, double t);

/// Squared norm of the Brownian expected signature under phi(k) = (k/2)!:
/// exp(s^2 d / 4), closed form.
double wiener_norm_sq_half_factorial(double s, int d);

/// Same cross-kernel under phi == 1, by contour integration of
/// z^{-1} e^z * corner(development at scaling sqrt(s/(2z))).
double expected_kernel_original(const PiecewiseLinearPath& gamma, double s, double t,
                                const ContourSpec& spec);

/// Squared norm under phi == 1: contour form of sum_k (s^2 d/4)^k / (k!)^2.
double wiener_norm_sq_original(double s, int d, const ContourSpec& spec);

/// Cross-kernel under phi(k) = Gamma(m+1)k!/Gamma(k+m+1): inner Gauss-Hermite
/// average of corners at scaling x sqrt(s)/z, outer contour with z^{-(m+1)}.
/// Circle contours require integer m.
double expected_kernel_beta(const PiecewiseLinearPath& gamma, double s, double t, double m,
                            int n_hermite, const ContourSpec& spec);

/// Squared norm under the same weight:
///   Gamma(m+1)/(2 pi i) oint z^{-(m+1)} e^z / sqrt(1 - s^2 d / z^2) dz
/// on a circle of radius 2 max(1, s sqrt(d)) (or the given radius, which must
/// exceed s sqrt(d) so the branch points are enclosed).
double wiener_norm_sq_beta(double s, int d, double m, int n_points, double radius = -1.0);

/// General transform specification: phi(k) = integral of g(z~)^{alpha k}
/// against mu, with mu given as a quadrature rule over z~.
struct TransformSpec {
    std::function<Complex(double)> g;
    double alpha = 1.0;
    QuadratureRule mu;
};

/// Double quadrature of z^{-1} e^z * corner(development at scaling
/// g(z~)^alpha sqrt(s/(2z))) over the mu rule and the contour.
double wiener_cross_general(const PiecewiseLinearPath& gamma, double s, double t,
                            const TransformSpec& transform, const ContourSpec& spec);

}  // namespace sigkern
