#include "sigkern/phi_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "sigkern/goursat.hpp"
#include "sigkern/quadrature.hpp"
#include "sigkern/weights.hpp"

namespace sigkern {

namespace {

constexpr double kPi = 3.14159265358979323846;

double corner_solve(const PiecewiseLinearPath& gamma, const PiecewiseLinearPath& sigma,
                    double scale_gamma, int refinement, double s, double t) {
    // Endpoint evaluations take the O(memory-light) corner sweep; interior
    // evaluations need the full surface.
    if (s == gamma.t_end() && t == sigma.t_end())
        return corner_value(gamma.scale(scale_gamma), sigma, 1.0, refinement);
    const auto surf = solve(gamma.scale(scale_gamma), sigma, Complex(1.0, 0.0), refinement);
    return value_at(surf, s, t).real();
}

}  // namespace

double kernel_by_randomisation(const PiecewiseLinearPath& gamma,
                               const PiecewiseLinearPath& sigma, RandomisationTag tag,
                               int n_nodes, int refinement, double s, double t,
                               double beta_m) {
    QuadratureRule rule;
    switch (tag) {
        case RandomisationTag::uniform01:
            rule = make_rule(QuadFamily::legendre01, n_nodes);
            break;
        case RandomisationTag::arcsine:
            rule = make_rule(QuadFamily::chebyshev, n_nodes);
            break;
        case RandomisationTag::beta1m: {
            if (beta_m < 0) throw std::invalid_argument("kernel_by_randomisation: m >= 0");
            if (beta_m == 0.0) {
                rule.family = "beta(1,0)";
                rule.order = 1;
                rule.nodes = {1.0};  // degenerate: all mass at 1, phi == 1
                rule.weights = {1.0};
            } else {
                // Beta(1,m) density m(1-x)^{m-1} on [0,1]; Jacobi(m-1, 0)
                // mapped from [-1,1], total mass renormalized to 1.
                auto jac = make_rule(QuadFamily::jacobi, n_nodes, beta_m - 1.0, 0.0);
                rule.family = "beta(1,m)";
                rule.order = n_nodes;
                rule.nodes.resize(n_nodes);
                rule.weights.resize(n_nodes);
                const double c = beta_m * std::pow(2.0, -beta_m);
                for (int i = 0; i < n_nodes; ++i) {
                    rule.nodes[i] = 0.5 * (1.0 + jac.nodes[i]);
                    rule.weights[i] = c * jac.weights[i];
                }
            }
            break;
        }
        case RandomisationTag::rayleigh:
            rule = rayleigh_rule(n_nodes);
            break;
    }
    double total = 0.0;
    const int n = static_cast<int>(rule.nodes.size());
    // `refinement` is a floor: each scaled solve additionally resolves its own
    // node, keeping the per-cell increment product x*|dgamma|*|dsigma| below
    // ~1/64 so large nodes on long paths do not leave the Goursat grid
    // under-resolved.
    const double pair_load = gamma.length() * sigma.length() /
                             (static_cast<double>(gamma.num_segments()) *
                              static_cast<double>(sigma.num_segments()));
    std::vector<int> refs(n, refinement);
    for (int i = 0; i < n; ++i)
        while (static_cast<double>(refs[i]) * refs[i] < 64.0 * rule.nodes[i] * pair_load &&
               refs[i] < 4096)
            refs[i] *= 2;
    std::vector<double> vals(n);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        // Richardson extrapolation of the O(h^2) solver; |fine - coarse| / 3
        // estimates the leading error of the fine solve, so keep doubling the
        // grid until that estimate is small relative to the value.
        int r = std::max(2, refs[i]);
        double coarse = corner_solve(gamma, sigma, rule.nodes[i], r / 2, s, t);
        double fine = corner_solve(gamma, sigma, rule.nodes[i], r, s, t);
        while (r < 4096 && std::abs(fine - coarse) > 5e-2 * std::max(1.0, std::abs(fine))) {
            r *= 2;
            coarse = fine;
            fine = corner_solve(gamma, sigma, rule.nodes[i], r, s, t);
        }
        vals[i] = (4.0 * fine - coarse) / 3.0;
    }
    for (int i = 0; i < n; ++i) total += rule.weights[i] * vals[i];
    return total;
}

FourierResult kernel_by_fourier(const PiecewiseLinearPath& gamma,
                                const PiecewiseLinearPath& sigma, FourierTag tag, int n_quad,
                                int refinement, double s, double t, double u) {
    if (n_quad < 4) throw std::invalid_argument("kernel_by_fourier: n_quad >= 4");
    // Series function, its constant term, and the prefactor of the integral.
    std::function<double(double)> f;
    double a0, pref;
    switch (tag) {
        case FourierTag::xsq:
            // x^2 = pi^2/3 + 4 sum_{k>=1} (-1)^k cos(kx)/k^2; both the k = 0
            // term and the level-0 inner product are excised, hence 2 a0.
            f = [](double x) { return x * x; };
            a0 = 2.0 * kPi * kPi / 3.0;
            pref = 1.0 / kPi;
            break;
        case FourierTag::expcos:
            f = [](double x) { return std::exp(std::cos(x)) * std::cos(std::sin(x)); };
            a0 = 1.0;
            pref = 1.0 / kPi;
            break;
        case FourierTag::theta: {
            if (!(u > 0)) throw std::invalid_argument("kernel_by_fourier: theta needs u > 0");
            f = [u](double x) {
                double v = 1.0;
                for (int k = 1;; ++k) {
                    v += std::exp(-u * k * k) * std::cos(k * x);
                    if (std::exp(-u * k * k) < 1e-18 || k > 10000) break;
                }
                return v;
            };
            a0 = 1.0;
            pref = 1.0 / kPi;
            break;
        }
        default:
            throw std::invalid_argument("kernel_by_fourier: unknown tag");
    }
    // Quadrature grid on (-pi, pi).  The midpoint rule is spectrally accurate
    // for the smooth periodic tags; x^2 is not periodic at +-pi, so that tag
    // uses Gauss-Legendre instead.  Both grids are symmetric, so the odd
    // imaginary part cancels.
    std::vector<double> xs(n_quad), ws(n_quad);
    if (tag == FourierTag::xsq) {
        const auto gl = make_rule(QuadFamily::legendre01, n_quad);
        for (int j = 0; j < n_quad; ++j) {
            xs[j] = -kPi + 2.0 * kPi * gl.nodes[j];
            ws[j] = 2.0 * kPi * gl.weights[j];
        }
    } else {
        for (int j = 0; j < n_quad; ++j) {
            xs[j] = -kPi + (j + 0.5) * 2.0 * kPi / n_quad;
            ws[j] = 2.0 * kPi / n_quad;
        }
    }
    std::vector<double> re(n_quad), im(n_quad);
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j < n_quad; ++j) {
        const double x = xs[j];
        const auto surf = solve(gamma, sigma, Complex(std::cos(x), std::sin(x)), refinement);
        const Complex K = value_at(surf, s, t);
        const double fx = f(x);
        re[j] = ws[j] * K.real() * fx;
        im[j] = ws[j] * K.imag() * fx;
    }
    double sr = 0.0, si = 0.0;
    for (int j = 0; j < n_quad; ++j) {
        sr += re[j];
        si += im[j];
    }
    FourierResult out;
    out.value = pref * sr - a0;
    out.imag_residue = pref * si;
    return out;
}

double kernel_by_mellin(const PiecewiseLinearPath& gamma, const PiecewiseLinearPath& sigma,
                        double beta, int n_nodes, int refinement, double s, double t) {
    if (beta <= -1.0) throw std::invalid_argument("kernel_by_mellin: beta > -1 required");
    // The Laguerre quadrature of x -> K^{x gamma, sigma} against x^beta e^{-x}
    // is only reliable when the length product stays below 1: beyond that the
    // factorially-weighted series underlying the transform loses its margin
    // over the quadrature's exactness degree.
    const double C = gamma.length() * sigma.length();
    if (C >= 1.0) {
        std::ostringstream msg;
        msg << "kernel_by_mellin: length product " << C
            << " >= 1; paths too long for this weight";
        throw std::domain_error(msg.str());
    }
    const auto rule = make_rule(QuadFamily::laguerre, n_nodes, beta);
    std::vector<double> vals(n_nodes);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n_nodes; ++i)
        vals[i] = corner_solve(gamma, sigma, rule.nodes[i], refinement, s, t);
    double total = 0.0;
    for (int i = 0; i < n_nodes; ++i) total += rule.weights[i] * vals[i];
    return total;
}

}  // namespace sigkern
