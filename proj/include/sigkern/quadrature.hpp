#pragma once

#include <string>
#include <vector>

namespace sigkern {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::string family;
    int order = 0;

    double integrate(const std::vector<double>& fvals) const;
};

enum class QuadFamily { legendre01, chebyshev, jacobi, hermite_probabilist, laguerre };

/// Gauss rules via the Jacobi-matrix (Golub-Welsch) construction; Chebyshev
/// uses the closed-form nodes.  Probability normalizations: legendre01 mass 1
/// on [0,1]; chebyshev is the arcsine law on (-1,1); hermite is the standard
/// normal; laguerre(alpha) has raw mass Gamma(alpha+1); jacobi(a,b) has raw
/// mass 2^{a+b+1} B(a+1,b+1) on [-1,1].
QuadratureRule make_rule(QuadFamily family, int n, double alpha = 0.0, double beta = 0.0);

/// Rule for the Rayleigh density 2x e^{-x^2} on (0,inf), by u = x^2.
QuadratureRule rayleigh_rule(int n);

/// Chebyshev-case quadrature error constant
///   R_n = L^{4n+4} e^{L^2} / (2^{2n+1} ((2n+2)!)^2),
/// returned as ln R_n (the constant itself underflows quickly).
double quadrature_error_bound_log(double L, int n);
double quadrature_error_bound(double L, int n);

/// Bound on the k-th derivative of x -> K^{x gamma, sigma}(s,t):
///   (Ls Lt / |x|)^{k/2} I_k(2 sqrt(|x| Ls Lt)), with the x -> 0 limit
///   (Ls Lt)^k / k!.
double derivative_bound(double L_s, double L_t, double x, int k);
/// Cruder bound (Ls Lt)^k / k! * exp(|x| Ls Lt); dominates the Bessel one.
double derivative_bound_crude(double L_s, double L_t, double x, int k);

/// Modified Bessel function of the first kind by series summation.
double bessel_i(int k, double y);

}  // namespace sigkern
