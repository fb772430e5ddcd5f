#include "sigkern/contour.hpp"

#include <cmath>
#include <stdexcept>

namespace sigkern {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct MapPoint {
    Complex z;
    Complex dz;  // phi'(theta)
};

// Optimized contour maps; the contour scales with the point count N.
MapPoint contour_map(ContourFamily family, double theta, int N) {
    switch (family) {
        case ContourFamily::parabolic: {
            const Complex z = static_cast<double>(N) *
                              Complex(0.1309 - 0.1194 * theta * theta, 0.25 * theta);
            const Complex dz = static_cast<double>(N) * Complex(-2.0 * 0.1194 * theta, 0.25);
            return {z, dz};
        }
        case ContourFamily::hyperbolic: {
            const Complex arg(1.1721, -0.3443 * theta);
            const double c = 2.246 * N;
            return {c * (1.0 - std::sin(arg)), c * Complex(0.0, 0.3443) * std::cos(arg)};
        }
        case ContourFamily::cotangent: {
            const double a = 0.6407;
            const double x = a * theta;
            double tcot, dtcot;  // theta*cot(a theta) and d/dtheta[theta cot(a theta)]
            if (std::abs(x) < 1e-8) {
                tcot = 1.0 / a - x * theta / 3.0;
                dtcot = -2.0 * x / 3.0;
            } else {
                const double s = std::sin(x), c = std::cos(x);
                tcot = theta * c / s;
                dtcot = c / s - x / (s * s);
            }
            const Complex z = static_cast<double>(N) *
                              Complex(0.5017 * tcot - 0.6122, 0.2645 * theta);
            const Complex dz = static_cast<double>(N) * Complex(0.5017 * dtcot, 0.2645);
            return {z, dz};
        }
        default:
            throw std::invalid_argument("contour_map: circle has no theta map");
    }
}

}  // namespace

Complex circle_trapezoid(const ComplexFn& f, int N, double radius) {
    if (N < 1 || !(radius > 0))
        throw std::invalid_argument("circle_trapezoid: need N >= 1, radius > 0");
    Complex total(0.0, 0.0);
    for (int k = 1; k <= N; ++k) {
        const double ang = 2.0 * kPi * k / N;
        const Complex z = radius * Complex(std::cos(ang), std::sin(ang));
        total += std::exp(z) * f(z) * z;
    }
    return total / static_cast<double>(N);
}

Complex tws_quadrature(const ComplexFn& f, int N, ContourFamily family) {
    if (family == ContourFamily::circle)
        throw std::invalid_argument("tws_quadrature: use circle_trapezoid for circles");
    if (N < 4) throw std::invalid_argument("tws_quadrature: need N >= 4");
    Complex total(0.0, 0.0);
    for (int k = 1; k <= N; ++k) {
        const double theta = -kPi + (k - 0.5) * 2.0 * kPi / N;
        const MapPoint mp = contour_map(family, theta, N);
        total += std::exp(mp.z) * f(mp.z) * mp.dz;
    }
    return Complex(0.0, -1.0) / static_cast<double>(N) * total;
}

double reciprocal_gamma(double p, const ContourSpec& spec) {
    const bool integer_p = std::abs(p - std::round(p)) < 1e-12;
    auto f = [p](Complex z) { return std::exp(-p * std::log(z)); };  // principal z^{-p}
    if (spec.family == ContourFamily::circle) {
        if (!integer_p)
            throw std::invalid_argument(
                "reciprocal_gamma: circle contour crosses the branch cut for non-integer p");
        return circle_trapezoid(f, spec.n_points, spec.radius).real();
    }
    return tws_quadrature(f, spec.n_points, spec.family).real();
}

}  // namespace sigkern
