#pragma once

#include <functional>
#include <string>

namespace sigkern {

/// A weight sequence k -> phi(k) with a provenance tag for reports.
struct WeightSequence {
    std::function<double(int)> eval;
    std::string provenance;  // constant, factorial-half, beta(m), moment:<dist>, truncated(N), custom
    std::string name;

    double operator()(int k) const { return eval(k); }
};

WeightSequence phi_constant();
WeightSequence phi_factorial_half();   // phi(k) = Gamma(k/2 + 1)
WeightSequence phi_beta(double m);     // phi(k) = Gamma(m+1)Gamma(k+1)/Gamma(k+m+1)
WeightSequence phi_truncated(int N);   // 1 for k < N, 0 for k >= N

/// k-shift: eval(n) = phi(n + k).
WeightSequence shift(const WeightSequence& phi, int k);

struct ConditionReport {
    bool pass = false;
    double partial_sum = 0.0;
    int terms_used = 0;
    std::string detail;
};

/// Numerically checks summability of sum_k C^k |phi(k)| / (k!)^2.
ConditionReport check_condition_sum(const WeightSequence& phi, double C, double tol = 1e-16);

// Moment sequences of the randomisation distributions.
double moments_uniform01(int k);                      // 1/(k+1)
double moments_arcsine(int k);                        // 0 odd; (k-1)!!/k!! even
double moments_beta(int k, double alpha, double beta);  // B(k+a,b)/B(a,b)
double moments_rayleigh(int k);                       // Gamma(k/2 + 1)

}  // namespace sigkern
