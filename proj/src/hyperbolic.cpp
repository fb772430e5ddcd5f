#include "sigkern/hyperbolic.hpp"

#include <cmath>
#include <stdexcept>

namespace sigkern {

namespace {

// Generator F(w) for a velocity vector w: ((0, w), (w^T, 0)).
DevMatrix generator(const std::vector<double>& w, Complex scale) {
    const int d = static_cast<int>(w.size());
    DevMatrix F = DevMatrix::Zero(d + 1, d + 1);
    for (int i = 0; i < d; ++i) {
        F(i, d) = scale * w[i];
        F(d, i) = scale * w[i];
    }
    return F;
}

}  // namespace

DevMatrix segment_matrix(const std::vector<double>& v, double dt, Complex z) {
    if (!(dt > 0)) throw std::invalid_argument("segment_matrix: duration must be > 0");
    const int d = static_cast<int>(v.size());
    const double speed = norm2(v);
    DevMatrix A = DevMatrix::Identity(d + 1, d + 1);
    if (speed == 0.0) return A;
    DevMatrix M = DevMatrix::Zero(d + 1, d + 1);
    for (int i = 0; i < d; ++i) {
        M(i, d) = v[i] / speed;
        M(d, i) = v[i] / speed;
    }
    const Complex arg = z * speed * dt;
    A += std::sinh(arg) * M + (std::cosh(arg) - 1.0) * (M * M);
    return A;
}

DevMatrix develop(const PiecewiseLinearPath& gamma, Complex z, DevelopMode mode, int steps) {
    const int d = gamma.dim();
    DevMatrix G = DevMatrix::Identity(d + 1, d + 1);
    if (mode == DevelopMode::exact_product) {
        for (std::size_t s = 0; s < gamma.num_segments(); ++s)
            G = segment_matrix(gamma.velocity(s), gamma.segment_duration(s), z) * G;
        return G;
    }
    if (steps < 1) throw std::invalid_argument("develop: ode mode needs steps >= 1");
    // Distribute steps over segments proportionally to duration (at least one
    // per segment, aligned to segment endpoints so the velocity is smooth
    // within each sub-integration).
    const double total = gamma.t_end() - gamma.t_begin();
    for (std::size_t s = 0; s < gamma.num_segments(); ++s) {
        const double dur = gamma.segment_duration(s);
        int n = std::max(1, static_cast<int>(std::lround(steps * dur / total)));
        const double h = dur / n;
        const DevMatrix F = generator(gamma.velocity(s), z);
        for (int i = 0; i < n; ++i) {
            const DevMatrix k1 = F * G;
            const DevMatrix k2 = F * (G + 0.5 * h * k1);
            const DevMatrix k3 = F * (G + 0.5 * h * k2);
            const DevMatrix k4 = F * (G + h * k3);
            G += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
    }
    return G;
}

double cosh_rho(const PiecewiseLinearPath& gamma, double t) {
    const PiecewiseLinearPath seg =
        (std::abs(t - gamma.t_begin()) < 1e-15) ? gamma : gamma.restrict_to(t);
    if (std::abs(t - gamma.t_begin()) < 1e-15) return 1.0;
    const DevMatrix G = develop(seg, Complex(1.0, 0.0));
    return G(gamma.dim(), gamma.dim()).real();
}

double minkowski_dot(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("minkowski_dot: size mismatch");
    const Eigen::Index d = x.size() - 1;
    return x.head(d).dot(y.head(d)) - x(d) * y(d);
}

double hyperbolic_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    const double tol = 1e-8;
    if (std::abs(minkowski_dot(x, x) + 1.0) > tol || x(x.size() - 1) <= 0 ||
        std::abs(minkowski_dot(y, y) + 1.0) > tol || y(y.size() - 1) <= 0)
        throw std::invalid_argument("hyperbolic_distance: points not on the hyperboloid sheet");
    const double c = std::max(1.0, -minkowski_dot(x, y));
    return std::acosh(c);
}

}  // namespace sigkern
