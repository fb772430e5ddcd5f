#include "sigkern/sig_oracle.hpp"

#include <cmath>
#include <limits>

namespace sigkern {

double truncation_error_bound(const std::function<double(int)>& phi_abs, double len_gamma,
                              double len_sigma, int depth) {
    const double c = len_gamma * len_sigma;
    if (!(c >= 0) || !std::isfinite(c))
        throw std::invalid_argument("truncation_error_bound: lengths must be finite and >= 0");
    if (c == 0) return 0.0;
    const double log_c = std::log(c);
    double total = 0.0;
    double prev_term = -1.0;
    int nondecreasing = 0;
    for (int k = depth + 1;; ++k) {
        const double pk = std::abs(phi_abs(k));
        double term = 0.0;
        if (pk > 0) {
            const double lt = std::log(pk) + k * log_c - 2.0 * std::lgamma(k + 1.0);
            term = (lt < -690.0) ? 0.0 : std::exp(lt);  // below ~1e-300
        }
        total += term;
        if (term <= 1e-300 || (total > 0 && term < 1e-18 * total)) break;
        if (term >= prev_term) {
            if (++nondecreasing >= 1000)
                throw std::domain_error(
                    "truncation_error_bound: tail terms not decaying; weight sequence "
                    "appears to violate the summability condition");
        } else {
            nondecreasing = 0;
        }
        prev_term = term;
    }
    return total;
}

double even_contraction(const TruncatedTensor<double>& sig, int n) {
    if (n < 0) throw std::invalid_argument("even_contraction: n must be >= 0");
    if (n == 0) return sig.levels[0][0];
    if (2 * n > sig.depth)
        throw std::invalid_argument("even_contraction: signature depth too small");
    const int d = sig.dim;
    const auto& lv = sig.levels[2 * n];
    // Iterate over all n-tuples (i_1,...,i_n) in base d; the flat index of the
    // doubled word i_1 i_1 ... i_n i_n is sum over positions with stride d^2.
    std::vector<int> idx(n, 0);
    double total = 0.0;
    while (true) {
        std::size_t flat = 0;
        for (int p = 0; p < n; ++p) flat = flat * d * d + static_cast<std::size_t>(idx[p]) * (d + 1);
        total += lv[flat];
        int p = n - 1;
        while (p >= 0 && ++idx[p] == d) idx[p--] = 0;
        if (p < 0) break;
    }
    return total;
}

}  // namespace sigkern
