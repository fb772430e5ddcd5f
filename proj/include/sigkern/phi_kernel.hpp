#pragma once

#include <string>

#include "sigkern/path.hpp"

namespace sigkern {

enum class RandomisationTag { uniform01, arcsine, beta1m, rayleigh };

/// Weighted kernel as an average of base solves over a moment measure:
/// sum_i w_i K^{x_i gamma, sigma}(s,t).  Weight sequences realized:
/// uniform01 -> 1/(k+1); arcsine -> its moments; beta1m (Beta(1,m)) ->
/// Gamma(m+1)k!/Gamma(k+m+1); rayleigh -> Gamma(k/2+1).
double kernel_by_randomisation(const PiecewiseLinearPath& gamma,
                               const PiecewiseLinearPath& sigma, RandomisationTag tag,
                               int n_nodes, int refinement, double s, double t,
                               double beta_m = 0.0);

enum class FourierTag { xsq, expcos, theta };

struct FourierResult {
    double value = 0.0;
    double imag_residue = 0.0;  // should vanish for real weights
};

/// Weighted kernel from a cosine series whose coefficients are the weights:
/// xsq    -> phi(k) = 4(-1)^k/k^2 for k >= 1 (k = 0 term excluded);
/// expcos -> phi(k) = 1/k!;
/// theta  -> phi(k) = exp(-u k^2).
FourierResult kernel_by_fourier(const PiecewiseLinearPath& gamma,
                                const PiecewiseLinearPath& sigma, FourierTag tag, int n_quad,
                                int refinement, double s, double t, double u = 1.0);

/// phi(k) = Gamma(k + beta + 1) via generalized Gauss-Laguerre quadrature of
/// the scaled solves.  Refuses (throws) when the summability check fails for
/// C = 4 * Lgamma * Lsigma.
double kernel_by_mellin(const PiecewiseLinearPath& gamma, const PiecewiseLinearPath& sigma,
                        double beta, int n_nodes, int refinement, double s, double t);

}  // namespace sigkern
