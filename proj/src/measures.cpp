#include "sigkern/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sigkern/goursat.hpp"
#include "sigkern/phi_kernel.hpp"
#include "sigkern/sig_oracle.hpp"
#include "sigkern/weights.hpp"
#include "sigkern/wiener.hpp"

namespace sigkern {

namespace {

struct PhiSpec {
    std::string kind;  // half-factorial | one | beta | trunc
    double m = 0.0;
    int N = 0;
    WeightSequence seq;
};

PhiSpec parse_phi(const std::string& phi) {
    PhiSpec s;
    if (phi == "half-factorial") {
        s.kind = "half-factorial";
        s.seq = phi_factorial_half();
    } else if (phi == "one") {
        s.kind = "one";
        s.seq = phi_constant();
    } else if (phi.rfind("beta:", 0) == 0) {
        s.kind = "beta";
        s.m = std::stod(phi.substr(5));
        s.seq = phi_beta(s.m);
    } else if (phi.rfind("trunc:", 0) == 0) {
        s.kind = "trunc";
        s.N = std::stoi(phi.substr(6));
        s.seq = phi_truncated(s.N);
    } else {
        throw std::invalid_argument("unknown phi tag: " + phi);
    }
    return s;
}

// Series sum_k phi(2k) (s^2 d/4)^k / (k!)^2 for the squared Wiener norm.
double wiener_norm_sq_series(const PhiSpec& phi, double s, int d) {
    const double c = s * s * d / 4.0;
    double total = 0.0;
    double pow_term = 1.0;  // c^k / (k!)^2
    for (int k = 0; k < 400; ++k) {
        const double term = phi.seq(2 * k) * pow_term;
        total += term;
        if (k > 2 && std::abs(term) < 1e-18 * std::abs(total)) break;
        pow_term *= c / ((k + 1.0) * (k + 1.0));
    }
    return total;
}

// Cross-kernel with the Brownian expected signature from the truncated level
// data of gamma: sum_k phi(2k) (s/2)^k contraction_k / k!.
double wiener_cross_oracle(const PhiSpec& phi, const TruncatedTensor<double>& sig, double s) {
    double total = 0.0;
    double c = 1.0;  // (s/2)^k / k!
    for (int k = 0; 2 * k <= sig.depth; ++k) {
        total += phi.seq(2 * k) * even_contraction(sig, k) * c;
        c *= (s / 2.0) / (k + 1.0);
    }
    return total;
}

// Refinement per segment needed to keep the per-cell increment product
// theta * |dgamma| * |dsigma| below ~1/64.  Long paths otherwise leave the
// Goursat grid badly under-resolved and the Gram matrix loses positive
// definiteness.
int pde_refinement_for(const PiecewiseLinearPath& a, const PiecewiseLinearPath& b,
                       double max_scale, int base) {
    const double load = max_scale * a.length() * b.length() /
                        (static_cast<double>(a.num_segments()) * b.num_segments());
    int r = base;
    while (static_cast<double>(r) * r < 64.0 * load && r < 4096) r *= 2;
    return r;
}

double pairwise_pde(const PiecewiseLinearPath& a, const PiecewiseLinearPath& b,
                    const PhiSpec& phi, const GramConfig& cfg) {
    const double s = a.t_end(), t = b.t_end();
    if (phi.kind == "one") {
        // Richardson-extrapolated O(h^2) solves; double the grid until the
        // extrapolation error estimate is small relative to the value.
        int r = std::max(2, pde_refinement_for(a, b, 1.0, cfg.pde_refinement));
        double coarse = corner_value(a, b, 1.0, r / 2);
        double fine = corner_value(a, b, 1.0, r);
        while (r < 4096 && std::abs(fine - coarse) > 5e-2 * std::max(1.0, std::abs(fine))) {
            r *= 2;
            coarse = fine;
            fine = corner_value(a, b, 1.0, r);
        }
        return (4.0 * fine - coarse) / 3.0;
    }
    // The randomisation routes adapt their refinement per quadrature node.
    if (phi.kind == "half-factorial")
        return kernel_by_randomisation(a, b, RandomisationTag::rayleigh, cfg.pde_nodes,
                                       cfg.pde_refinement, s, t);
    if (phi.kind == "beta")
        return kernel_by_randomisation(a, b, RandomisationTag::beta1m, cfg.pde_nodes,
                                       cfg.pde_refinement, s, t, phi.m);
    throw std::invalid_argument("gram: pde method unavailable for phi " + phi.kind);
}

}  // namespace

void DiscreteMeasure::validate() const {
    if (static_cast<std::size_t>(weights.size()) != paths.size())
        throw std::invalid_argument("DiscreteMeasure: size mismatch");
    if (weights.minCoeff() < -1e-12)
        throw std::invalid_argument("DiscreteMeasure: negative weight");
    if (std::abs(weights.sum() - 1.0) > 1e-12)
        throw std::invalid_argument("DiscreteMeasure: weights must sum to 1");
}

GramSystem gram(const std::vector<PiecewiseLinearPath>& paths, const GramConfig& config) {
    const int n = static_cast<int>(paths.size());
    if (n < 1) throw std::invalid_argument("gram: need at least one path");
    const int d = paths[0].dim();
    for (const auto& p : paths)
        if (p.dim() != d) throw std::invalid_argument("gram: dimension mismatch");
    const PhiSpec phi = parse_phi(config.phi);

    GramSystem sys;
    sys.phi = config.phi;
    sys.method = config.method;
    sys.K.resize(n, n);
    sys.h = Eigen::VectorXd::Zero(n);

    std::vector<TruncatedTensor<double>> sigs;
    const bool need_sigs =
        config.method == "oracle" || (config.with_wiener && phi.kind == "trunc");
    if (need_sigs) {
        sigs.resize(n, TruncatedTensor<double>::unit(d, config.oracle_depth));
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) sigs[i] = truncated_signature(paths[i], config.oracle_depth);
    }

    if (config.method == "oracle") {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double v = 0.0;
                for (int k = 0; k <= config.oracle_depth; ++k)
                    v += phi.seq(k) * level_inner(sigs[i], sigs[j], k);
                sys.K(i, j) = sys.K(j, i) = v;
            }
    } else if (config.method == "pde") {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                sys.K(i, j) = sys.K(j, i) = pairwise_pde(paths[i], paths[j], phi, config);
    } else {
        throw std::invalid_argument("gram: unknown method " + config.method);
    }

    if (config.with_wiener) {
        const double s = config.wiener_s;
        sys.wiener_norm_sq = (phi.kind == "half-factorial")
                                 ? wiener_norm_sq_half_factorial(s, d)
                                 : wiener_norm_sq_series(phi, s, d);
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) {
            if (phi.kind == "half-factorial") {
                sys.h(i) = expected_kernel_half_factorial(paths[i], s, paths[i].t_end());
            } else if (config.method == "oracle" || phi.kind == "trunc") {
                sys.h(i) = wiener_cross_oracle(phi, sigs.empty()
                                                        ? truncated_signature(paths[i],
                                                                              config.oracle_depth)
                                                        : sigs[i],
                                               s);
            } else if (phi.kind == "one") {
                ContourSpec spec;
                spec.n_points = config.contour_points;
                sys.h(i) = expected_kernel_original(paths[i], s, paths[i].t_end(), spec);
            } else {  // beta
                const bool integer_m = std::abs(phi.m - std::round(phi.m)) < 1e-12;
                ContourSpec spec;
                spec.n_points = config.contour_points;
                spec.family = integer_m ? ContourFamily::circle : ContourFamily::parabolic;
                sys.h(i) = expected_kernel_beta(paths[i], s, paths[i].t_end(), phi.m,
                                                config.hermite_points, spec);
            }
        }
    }
    return sys;
}

double mmd_sq(const DiscreteMeasure& measure, const GramSystem& g) {
    measure.validate();
    if (measure.weights.size() != g.K.rows())
        throw std::invalid_argument("mmd_sq: size mismatch");
    const auto& l = measure.weights;
    double v = l.dot(g.K * l) - 2.0 * l.dot(g.h) + g.wiener_norm_sq;
    if (v < 0 && v > -1e-10) v = 0.0;
    return v;
}

double mmd_sq_discrete(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                       const Eigen::MatrixXd& Kaa, const Eigen::MatrixXd& Kab,
                       const Eigen::MatrixXd& Kbb) {
    double v = a.dot(Kaa * a) - 2.0 * a.dot(Kab * b) + b.dot(Kbb * b);
    if (v < 0 && v > -1e-10) v = 0.0;
    return v;
}

double alignment(const DiscreteMeasure& measure, const GramSystem& g) {
    measure.validate();
    const auto& l = measure.weights;
    const double qn = l.dot(g.K * l);
    if (!(qn > 0) || !(g.wiener_norm_sq > 0))
        throw std::domain_error("alignment: zero norm");
    return l.dot(g.h) / (std::sqrt(qn) * std::sqrt(g.wiener_norm_sq));
}

QpSolution optimal_measure(const GramSystem& g) {
    const int n = static_cast<int>(g.K.rows());
    if (n > 20) throw std::invalid_argument("optimal_measure: n > 20 not supported");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g.K);
    const double min_eig = eig.eigenvalues().minCoeff();
    if (!(min_eig > 0))
        throw std::domain_error("optimal_measure: Gram matrix not positive definite (min "
                                "eigenvalue " +
                                std::to_string(min_eig) + ")");
    const double tol = 1e-10;
    QpSolution best;
    bool found = false;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> S;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) S.push_back(i);
        const int k = static_cast<int>(S.size());
        // Equality-constrained solve on the support: K_SS x + nu 1 = h_S, 1^T x = 1.
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(k + 1, k + 1);
        Eigen::VectorXd rhs(k + 1);
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) A(a, b) = g.K(S[a], S[b]);
            A(a, k) = A(k, a) = 1.0;
            rhs(a) = g.h(S[a]);
        }
        rhs(k) = 1.0;
        const Eigen::VectorXd sol = A.fullPivLu().solve(rhs);
        bool feasible = true;
        for (int a = 0; a < k; ++a)
            if (sol(a) < -tol) {
                feasible = false;
                break;
            }
        if (!feasible) continue;
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
        for (int a = 0; a < k; ++a) x(S[a]) = std::max(0.0, sol(a));
        x /= x.sum();
        const double nu = sol(k);
        const Eigen::VectorXd grad = g.K * x - g.h;
        // Dual feasibility off the support.
        bool kkt = true;
        for (int i = 0; i < n; ++i)
            if (!(mask & (1u << i)) && grad(i) + nu < -tol) {
                kkt = false;
                break;
            }
        if (!kkt) continue;
        const double obj = 0.5 * x.dot(g.K * x) - g.h.dot(x);
        if (!found || obj < best.objective) {
            found = true;
            best.lambda = x;
            best.objective = obj;
            double res = std::abs(x.sum() - 1.0);
            for (int a = 0; a < k; ++a) res = std::max(res, std::abs(grad(S[a]) + nu));
            for (int i = 0; i < n; ++i)
                if (!(mask & (1u << i))) res = std::max(res, std::max(0.0, -(grad(i) + nu)));
            best.kkt_residual = res;
            best.min_eigenvalue = min_eig;
        }
    }
    if (!found) throw std::runtime_error("optimal_measure: no KKT point found");
    return best;
}

std::optional<Eigen::VectorXd> interior_case(const GramSystem& g) {
    const Eigen::VectorXd x = g.K.ldlt().solve(g.h);
    if (x.minCoeff() < -1e-10 || std::abs(x.sum() - 1.0) > 1e-9) return std::nullopt;
    return x;
}

bool vertex_case_check(const GramSystem& g, int m) {
    const int n = static_cast<int>(g.K.rows());
    if (m < 0 || m >= n) throw std::invalid_argument("vertex_case_check: bad index");
    const Eigen::VectorXd grad = g.K.col(m) - g.h;
    for (int i = 0; i < n; ++i)
        if (grad(i) - grad(m) < -1e-10) return false;
    return true;
}

}  // namespace sigkern
