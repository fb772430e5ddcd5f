#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "sigkern/path.hpp"

namespace sigkern {

using DevMatrix = Eigen::MatrixXcd;

/// One-segment propagator of the development equation for velocity v over
/// duration dt at complex scaling z:
///   A = I + sinh(z|v|dt) M + (cosh(z|v|dt) - 1) M^2,  M = ((0, u), (u^T, 0)),
/// u = v/|v|.  Zero segments give the identity.
DevMatrix segment_matrix(const std::vector<double>& v, double dt, Complex z);

enum class DevelopMode { exact_product, ode };

/// Development of the whole path: right-to-left product of segment matrices,
/// or a classical 4th-order one-step integration of dG = F(z dgamma) G with
/// `steps` total steps distributed over segments.
DevMatrix develop(const PiecewiseLinearPath& gamma, Complex z,
                  DevelopMode mode = DevelopMode::exact_product, int steps = 0);

/// Corner entry of the real development of gamma restricted to [begin, t];
/// equals cosh of the hyperbolic displacement of the developed endpoint.
double cosh_rho(const PiecewiseLinearPath& gamma, double t);

/// Minkowski product x*y = sum_{i<d} x_i y_i - x_d y_d.
double minkowski_dot(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// Distance on the hyperboloid sheet {x*x = -1, x_d > 0}: arcosh(-x*y).
double hyperbolic_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

}  // namespace sigkern
