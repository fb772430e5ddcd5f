#pragma once

#include <vector>

#include "sigkern/path.hpp"

namespace sigkern {

/// Grid solution of the kernel PDE d^2K/dsdt = theta <gamma', sigma'> K with
/// unit boundary data on the two initial edges.
struct KernelSurface {
    std::vector<double> s_grid;
    std::vector<double> t_grid;
    std::vector<Complex> values;  // row-major, |s_grid| x |t_grid|
    Complex theta{1.0, 0.0};

    Complex at(std::size_t i, std::size_t j) const { return values[i * t_grid.size() + j]; }
    Complex corner() const { return values.back(); }
};

/// Explicit second-order scheme on the vertex grid refined dyadically
/// (refinement cells per path segment, power of two so per-cell increments
/// are exact for piecewise-linear paths).  OpenMP anti-diagonal wavefront.
KernelSurface solve(const PiecewiseLinearPath& gamma, const PiecewiseLinearPath& sigma,
                    Complex theta, int refinement);

/// Sequential reference implementation; bit-identical to solve.
KernelSurface solve_serial(const PiecewiseLinearPath& gamma, const PiecewiseLinearPath& sigma,
                           Complex theta, int refinement);

/// Bilinear interpolation on the grid.
Complex value_at(const KernelSurface& surface, double s, double t);

/// Corner value K(end, end) only, for real scalings: same scheme and values
/// as solve_serial but with a rolling row, so memory is O(grid width) instead
/// of O(grid area).  Use for large refinements where the full surface would
/// not fit.
double corner_value(const PiecewiseLinearPath& gamma, const PiecewiseLinearPath& sigma,
                    double theta, int refinement);

/// Coupled 2-d real formulation at theta = e^{ix}: evolves (Re K, Im K) with
/// the rotation matrix ((cos x, -sin x), (sin x, cos x)) in genuinely real
/// arithmetic.  Agrees componentwise with solve(gamma, sigma, e^{ix}, r).
std::pair<KernelSurface, KernelSurface> solve_rotation_pair(const PiecewiseLinearPath& gamma,
                                                            const PiecewiseLinearPath& sigma,
                                                            double x, int refinement);

}  // namespace sigkern
