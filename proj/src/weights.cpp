#include "sigkern/weights.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sigkern {

WeightSequence phi_constant() {
    return {[](int) { return 1.0; }, "constant", "one"};
}

WeightSequence phi_factorial_half() {
    return {[](int k) { return std::tgamma(k / 2.0 + 1.0); }, "factorial-half", "half-factorial"};
}

WeightSequence phi_beta(double m) {
    if (m < 0) throw std::invalid_argument("phi_beta: m must be >= 0");
    auto f = [m](int k) {
        return std::exp(std::lgamma(m + 1.0) + std::lgamma(k + 1.0) - std::lgamma(k + m + 1.0));
    };
    std::ostringstream nm;
    nm << "beta:" << m;
    return {f, "beta(m)", nm.str()};
}

WeightSequence phi_truncated(int N) {
    if (N < 0) throw std::invalid_argument("phi_truncated: N must be >= 0");
    std::ostringstream nm;
    nm << "trunc:" << N;
    return {[N](int k) { return k < N ? 1.0 : 0.0; }, "truncated(N)", nm.str()};
}

WeightSequence shift(const WeightSequence& phi, int k) {
    if (k < 0) throw std::invalid_argument("shift: k must be >= 0");
    auto base = phi.eval;
    return {[base, k](int n) { return base(n + k); }, "custom", phi.name + "+shift"};
}

ConditionReport check_condition_sum(const WeightSequence& phi, double C, double tol) {
    if (!(C > 0)) throw std::invalid_argument("check_condition_sum: C must be > 0");
    ConditionReport rep;
    const double log_c = std::log(C);
    double prev = -1.0;
    int nondecreasing = 0;
    for (int k = 0; k < 5000; ++k) {
        const double pk = std::abs(phi(k));
        double term = 0.0;
        if (pk > 0) {
            const double lt = std::log(pk) + k * log_c - 2.0 * std::lgamma(k + 1.0);
            term = (lt < -690.0) ? 0.0 : std::exp(lt);
        }
        rep.partial_sum += term;
        rep.terms_used = k + 1;
        if (!std::isfinite(term) || !std::isfinite(rep.partial_sum)) {
            rep.pass = false;
            rep.detail = "overflow in partial sums";
            return rep;
        }
        if (k > 0 && term >= prev && term > 0) {
            if (++nondecreasing >= 100) {
                rep.pass = false;
                rep.detail = "terms nondecreasing over 100 consecutive indices";
                return rep;
            }
        } else {
            nondecreasing = 0;
        }
        prev = term;
        if (rep.partial_sum > 0 && term < tol * rep.partial_sum) {
            rep.pass = true;
            rep.detail = "converged";
            return rep;
        }
    }
    rep.pass = false;
    rep.detail = "no convergence within 5000 terms";
    return rep;
}

double moments_uniform01(int k) {
    if (k < 0) throw std::invalid_argument("moments_uniform01: k >= 0 required");
    return 1.0 / (k + 1.0);
}

double moments_arcsine(int k) {
    if (k < 0) throw std::invalid_argument("moments_arcsine: k >= 0 required");
    if (k % 2 == 1) return 0.0;
    // (k-1)!!/k!! = C(k, k/2) / 2^k
    const int h = k / 2;
    return std::exp(std::lgamma(k + 1.0) - 2.0 * std::lgamma(h + 1.0) - k * std::log(2.0));
}

double moments_beta(int k, double alpha, double beta) {
    if (k < 0 || alpha <= 0 || beta <= 0)
        throw std::invalid_argument("moments_beta: need k >= 0, alpha > 0, beta > 0");
    return std::exp(std::lgamma(k + alpha) + std::lgamma(alpha + beta) - std::lgamma(alpha) -
                    std::lgamma(k + alpha + beta));
}

double moments_rayleigh(int k) {
    if (k < 0) throw std::invalid_argument("moments_rayleigh: k >= 0 required");
    return std::tgamma(k / 2.0 + 1.0);
}

}  // namespace sigkern
