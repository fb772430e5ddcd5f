#include "sigkern/wiener.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "sigkern/hyperbolic.hpp"

namespace sigkern {

namespace {

// Restriction of gamma to [begin, t]; empty (identity development) at t = begin.
std::optional<PiecewiseLinearPath> restrict_or_empty(const PiecewiseLinearPath& gamma,
                                                     double t) {
    if (std::abs(t - gamma.t_begin()) < 1e-15) return std::nullopt;
    if (std::abs(t - gamma.t_end()) < 1e-15) return gamma;
    return gamma.restrict_to(t);
}

Complex corner(const std::optional<PiecewiseLinearPath>& p, int d, Complex zscale) {
    if (!p) return Complex(1.0, 0.0);
    const DevMatrix G = develop(*p, zscale);
    return G(d, d);
}

Complex contour_integrate(const ComplexFn& f, const ContourSpec& spec) {
    if (spec.family == ContourFamily::circle)
        return circle_trapezoid(f, spec.n_points, spec.radius);
    return tws_quadrature(f, spec.n_points, spec.family);
}

}  // namespace

double expected_kernel_half_factorial(const PiecewiseLinearPath& gamma, double s, double t) {
    if (s < 0) throw std::invalid_argument("expected_kernel_half_factorial: s >= 0");
    if (s == 0.0) return 1.0;
    const auto p = restrict_or_empty(gamma, t);
    if (!p) return 1.0;
    return cosh_rho(p->scale(std::sqrt(s / 2.0)), p->t_end());
}

double wiener_norm_sq_half_factorial(double s, int d) {
    if (s < 0 || d < 1)
        throw std::invalid_argument("wiener_norm_sq_half_factorial: s >= 0, d >= 1");
    return std::exp(s * s * d / 4.0);
}

double expected_kernel_original(const PiecewiseLinearPath& gamma, double s, double t,
                                const ContourSpec& spec) {
    if (s < 0) throw std::invalid_argument("expected_kernel_original: s >= 0");
    const auto p = restrict_or_empty(gamma, t);
    const int d = gamma.dim();
    auto f = [&](Complex z) {
        const Complex c = std::sqrt(s / (2.0 * z));  // branch irrelevant: corner is even
        return corner(p, d, c) / z;
    };
    return contour_integrate(f, spec).real();
}

double wiener_norm_sq_original(double s, int d, const ContourSpec& spec) {
    if (s < 0 || d < 1) throw std::invalid_argument("wiener_norm_sq_original: s >= 0, d >= 1");
    const double c = s * s * d / 4.0;
    auto f = [c](Complex z) { return std::exp(c / z) / z; };
    return contour_integrate(f, spec).real();
}

double expected_kernel_beta(const PiecewiseLinearPath& gamma, double s, double t, double m,
                            int n_hermite, const ContourSpec& spec) {
    if (m < 0) throw std::invalid_argument("expected_kernel_beta: m >= 0");
    const bool integer_m = std::abs(m - std::round(m)) < 1e-12;
    if (spec.family == ContourFamily::circle && !integer_m)
        throw std::invalid_argument(
            "expected_kernel_beta: circle contour crosses the z^{-(m+1)} branch cut; use an "
            "open contour for non-integer m");
    const auto p = restrict_or_empty(gamma, t);
    const int d = gamma.dim();
    const auto hermite = make_rule(QuadFamily::hermite_probabilist, n_hermite);
    const double rs = std::sqrt(s);
    auto f = [&](Complex z) {
        Complex inner(0.0, 0.0);
        for (int h = 0; h < n_hermite; ++h)
            inner += hermite.weights[h] * corner(p, d, hermite.nodes[h] * rs / z);
        return std::exp(-(m + 1.0) * std::log(z)) * inner;
    };
    return std::tgamma(m + 1.0) * contour_integrate(f, spec).real();
}

double wiener_norm_sq_beta(double s, int d, double m, int n_points, double radius) {
    if (s < 0 || d < 1 || m < 0)
        throw std::invalid_argument("wiener_norm_sq_beta: need s >= 0, d >= 1, m >= 0");
    const double branch = s * std::sqrt(static_cast<double>(d));
    // sqrt branch chosen to be +1 at large |z|; right of the branch points
    // 1 - s^2 d/z^2 stays in the right half plane, so the principal root is
    // that branch.
    auto f = [&](Complex z) {
        return std::exp(-(m + 1.0) * std::log(z)) / std::sqrt(1.0 - branch * branch / (z * z));
    };
    const bool integer_m = std::abs(m - std::round(m)) < 1e-12;
    if (!integer_m) {
        // z^{-(m+1)} has a cut along the negative axis, so the contour must
        // be of Hankel type; the parabolic contour crosses the real axis at
        // 0.1309 * n_points, which must clear the branch points.
        if (0.1309 * n_points <= branch)
            throw std::invalid_argument(
                "wiener_norm_sq_beta: contour too small for the branch points; increase "
                "n_points");
        return std::tgamma(m + 1.0) *
               tws_quadrature(f, n_points, ContourFamily::parabolic).real();
    }
    if (radius < 0) radius = 2.0 * std::max(1.0, branch);
    if (radius <= branch)
        throw std::invalid_argument(
            "wiener_norm_sq_beta: circle radius must exceed s*sqrt(d) to enclose the branch "
            "points");
    return std::tgamma(m + 1.0) * circle_trapezoid(f, n_points, radius).real();
}

double wiener_cross_general(const PiecewiseLinearPath& gamma, double s, double t,
                            const TransformSpec& transform, const ContourSpec& spec) {
    if (!transform.g || transform.mu.nodes.empty())
        throw std::invalid_argument("wiener_cross_general: incomplete transform spec");
    const auto p = restrict_or_empty(gamma, t);
    const int d = gamma.dim();
    const std::size_t n = transform.mu.nodes.size();
    auto f = [&](Complex z) {
        const Complex root = std::sqrt(s / (2.0 * z));
        Complex inner(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const Complex gz = std::pow(transform.g(transform.mu.nodes[i]), transform.alpha);
            inner += transform.mu.weights[i] * corner(p, d, gz * root);
        }
        return inner / z;
    };
    return contour_integrate(f, spec).real();
}

}  // namespace sigkern
