#include "sigkern/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sigkern {

double QuadratureRule::integrate(const std::vector<double>& fvals) const {
    if (fvals.size() != weights.size())
        throw std::invalid_argument("integrate: size mismatch");
    double s = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) s += weights[i] * fvals[i];
    return s;
}

namespace {

// Implicit-shift QL iteration on a symmetric tridiagonal matrix.  d holds the
// diagonal, e the subdiagonal (e[0..n-2]); z starts as (1,0,...,0) and ends as
// the first row of the eigenvector matrix, so the Gauss weights are mu0*z^2.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return;
    e.resize(n, 0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        while (true) {
            int m = l;
            for (; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-14 * dd) break;
            }
            if (m == l) break;
            if (iter++ == 100)
                throw std::runtime_error("tridiagonal eigensolver failed to converge");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

// Golub-Welsch from the monic three-term recurrence p_{k+1} = (x-a_k)p_k - b_k p_{k-1}.
QuadratureRule golub_welsch(const std::vector<double>& a, const std::vector<double>& b,
                            double mu0, const std::string& family) {
    const int n = static_cast<int>(a.size());
    std::vector<double> d(a), e(n, 0.0), z(n, 0.0);
    for (int k = 1; k < n; ++k) e[k - 1] = std::sqrt(b[k]);
    z[0] = 1.0;
    ql_implicit_shift(d, e, z);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int i, int j) { return d[i] < d[j]; });
    QuadratureRule rule;
    rule.family = family;
    rule.order = n;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = d[perm[i]];
        rule.weights[i] = mu0 * z[perm[i]] * z[perm[i]];
    }
    return rule;
}

}  // namespace

QuadratureRule make_rule(QuadFamily family, int n, double alpha, double beta) {
    if (n < 1) throw std::invalid_argument("make_rule: n must be >= 1");
    std::vector<double> a(n), b(n, 0.0);
    switch (family) {
        case QuadFamily::legendre01: {
            for (int k = 0; k < n; ++k) {
                a[k] = 0.5;
                if (k > 0) b[k] = (k * (double)k / (4.0 * k * k - 1.0)) / 4.0;
            }
            return golub_welsch(a, b, 1.0, "legendre01");
        }
        case QuadFamily::chebyshev: {
            QuadratureRule rule;
            rule.family = "chebyshev";
            rule.order = n;
            rule.nodes.resize(n);
            rule.weights.assign(n, 1.0 / n);
            for (int k = 1; k <= n; ++k)
                rule.nodes[n - k] = std::cos((2.0 * k - 1.0) * M_PI / (2.0 * n));
            return rule;
        }
        case QuadFamily::jacobi: {
            if (alpha <= -1.0 || beta <= -1.0)
                throw std::invalid_argument("make_rule: jacobi needs alpha, beta > -1");
            const double ab = alpha + beta;
            a[0] = (beta - alpha) / (ab + 2.0);
            for (int k = 1; k < n; ++k) {
                const double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
                a[k] = (beta * beta - alpha * alpha) / den;
                b[k] = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
                       ((2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) *
                        (2.0 * k + ab - 1.0));
            }
            const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                                        std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
            return golub_welsch(a, b, mu0, "jacobi");
        }
        case QuadFamily::hermite_probabilist: {
            for (int k = 1; k < n; ++k) b[k] = k;
            return golub_welsch(a, b, 1.0, "hermite-probabilist");
        }
        case QuadFamily::laguerre: {
            if (alpha <= -1.0) throw std::invalid_argument("make_rule: laguerre needs alpha > -1");
            for (int k = 0; k < n; ++k) {
                a[k] = 2.0 * k + alpha + 1.0;
                if (k > 0) b[k] = k * (k + alpha);
            }
            return golub_welsch(a, b, std::tgamma(alpha + 1.0), "laguerre");
        }
    }
    throw std::invalid_argument("make_rule: unknown family");
}

QuadratureRule rayleigh_rule(int n) {
    if (n < 1) throw std::invalid_argument("rayleigh_rule: n must be >= 1");
    // Recurrence coefficients of the monic polynomials orthogonal for
    // 2x e^{-x^2} on (0, inf), by the Stieltjes procedure over a fine
    // composite Gauss-Legendre discretization (the density is below 1e-33
    // past x = 9, so the truncation is harmless).
    const auto base = make_rule(QuadFamily::legendre01, 60);
    const int panels = 12;
    const double cut = 9.0;
    std::vector<double> x, w;
    x.reserve(panels * base.order);
    w.reserve(panels * base.order);
    for (int p = 0; p < panels; ++p) {
        const double lo = cut * p / panels, h = cut / panels;
        for (int i = 0; i < base.order; ++i) {
            const double xi = lo + h * base.nodes[i];
            x.push_back(xi);
            w.push_back(h * base.weights[i] * 2.0 * xi * std::exp(-xi * xi));
        }
    }
    const std::size_t m = x.size();
    std::vector<double> a(n), b(n, 0.0);
    std::vector<double> pk(m, 1.0), pm(m, 0.0);
    double norm = 0.0;
    for (std::size_t i = 0; i < m; ++i) norm += w[i];
    const double mu0 = norm;
    for (int k = 0; k < n; ++k) {
        double xnorm = 0.0;
        for (std::size_t i = 0; i < m; ++i) xnorm += w[i] * x[i] * pk[i] * pk[i];
        a[k] = xnorm / norm;
        double next_norm = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double pn = (x[i] - a[k]) * pk[i] - (k > 0 ? b[k] : 0.0) * pm[i];
            pm[i] = pk[i];
            pk[i] = pn;
            next_norm += w[i] * pn * pn;
        }
        if (k + 1 < n) b[k + 1] = next_norm / norm;
        norm = next_norm;
    }
    return golub_welsch(a, b, mu0, "rayleigh");
}

double quadrature_error_bound_log(double L, int n) {
    if (!(L > 0) || n < 0)
        throw std::invalid_argument("quadrature_error_bound: need L > 0, n >= 0");
    return (4.0 * n + 4.0) * std::log(L) + L * L - (2.0 * n + 1.0) * std::log(2.0) -
           2.0 * std::lgamma(2.0 * n + 3.0);
}

double quadrature_error_bound(double L, int n) {
    return std::exp(quadrature_error_bound_log(L, n));
}

double bessel_i(int k, double y) {
    if (k < 0) throw std::invalid_argument("bessel_i: k >= 0 required");
    if (y == 0.0) return k == 0 ? 1.0 : 0.0;
    const double h = y / 2.0;
    double total = 0.0;
    for (int j = 0;; ++j) {
        const double lt = (2.0 * j + k) * std::log(h) - std::lgamma(j + 1.0) -
                          std::lgamma(j + k + 1.0);
        const double term = (lt < -690.0) ? 0.0 : std::exp(lt);
        total += term;
        if (j > 2 && (term == 0.0 || term < 1e-18 * total)) break;
        if (j > 10000) break;
    }
    return total;
}

double derivative_bound(double L_s, double L_t, double x, int k) {
    if (k < 0) throw std::invalid_argument("derivative_bound: k >= 0 required");
    const double ll = L_s * L_t;
    if (ll == 0.0) return k == 0 ? 1.0 : 0.0;
    const double ax = std::abs(x);
    if (ax == 0.0) return std::exp(k * std::log(ll) - std::lgamma(k + 1.0));
    return std::pow(ll / ax, k / 2.0) * bessel_i(k, 2.0 * std::sqrt(ax * ll));
}

double derivative_bound_crude(double L_s, double L_t, double x, int k) {
    if (k < 0) throw std::invalid_argument("derivative_bound_crude: k >= 0 required");
    const double ll = L_s * L_t;
    if (ll == 0.0) return k == 0 ? std::exp(std::abs(x) * ll) : 0.0;
    return std::exp(k * std::log(ll) - std::lgamma(k + 1.0) + std::abs(x) * ll);
}

}  // namespace sigkern
