#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "sigkern/path.hpp"

namespace sigkern {

struct DiscreteMeasure {
    std::vector<PiecewiseLinearPath> paths;
    Eigen::VectorXd weights;

    void validate() const;  // weights >= 0, sum to 1
};

/// How pairwise kernels and Wiener cross-kernels are evaluated.
struct GramConfig {
    // phi: "half-factorial", "one", "beta:<m>", or "trunc:<N>"
    std::string phi = "half-factorial";
    // method for pairwise kernels: "oracle" (truncated signatures) or "pde"
    // (randomisation over quadrature nodes)
    std::string method = "oracle";
    int oracle_depth = 14;
    int pde_nodes = 20;
    int pde_refinement = 8;
    int contour_points = 32;   // Wiener cross-kernels for phi == one / beta
    int hermite_points = 24;
    double wiener_s = 1.0;     // Brownian time horizon
    bool with_wiener = true;   // fill h and the Wiener norm
};

struct GramSystem {
    Eigen::MatrixXd K;
    Eigen::VectorXd h;
    double wiener_norm_sq = 0.0;
    std::string phi;
    std::string method;
};

GramSystem gram(const std::vector<PiecewiseLinearPath>& paths, const GramConfig& config);

/// d^2 = lambda^T K lambda - 2 lambda^T h + ||E_W S||^2, clipped at 0 when
/// roundoff makes it slightly negative.
double mmd_sq(const DiscreteMeasure& measure, const GramSystem& gram);

/// Discrete-discrete squared MMD from Gram blocks:
/// a^T Kaa a - 2 a^T Kab b + b^T Kbb b.
double mmd_sq_discrete(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                       const Eigen::MatrixXd& Kaa, const Eigen::MatrixXd& Kab,
                       const Eigen::MatrixXd& Kbb);

/// lambda^T h / (sqrt(lambda^T K lambda) * sqrt(wiener_norm_sq)).
double alignment(const DiscreteMeasure& measure, const GramSystem& gram);

struct QpSolution {
    Eigen::VectorXd lambda;
    double objective = 0.0;      // (1/2) x^T K x - h^T x
    double kkt_residual = 0.0;
    double min_eigenvalue = 0.0;
};

/// Exact minimizer of (1/2)x^T K x - h^T x over the probability simplex by
/// exhaustive enumeration of active sets.  Requires K positive definite and
/// n <= 20.
QpSolution optimal_measure(const GramSystem& gram);

/// K^{-1}h when it lies in the simplex.
std::optional<Eigen::VectorXd> interior_case(const GramSystem& gram);

/// Vertex optimality test (K e_m - h)^T (e_i - e_m) >= 0 for all i.
bool vertex_case_check(const GramSystem& gram, int m);

}  // namespace sigkern
