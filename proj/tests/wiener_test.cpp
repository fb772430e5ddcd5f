#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sigkern/sig_oracle.hpp"
#include "sigkern/weights.hpp"
#include "sigkern/wiener.hpp"
#include "test_paths.hpp"

using namespace sigkern;
using namespace sigkern::testutil;

namespace {

// Cross-kernel reference from the truncated level data:
// sum_k phi(2k) (s/2)^k contraction_k / k!.
double cross_series(const PiecewiseLinearPath& gamma, const std::function<double(int)>& phi,
                    double s, int depth) {
    const auto sig = truncated_signature(gamma, depth);
    double total = 0.0, c = 1.0;
    for (int k = 0; 2 * k <= depth; ++k) {
        total += phi(2 * k) * even_contraction(sig, k) * c;
        c *= (s / 2.0) / (k + 1.0);
    }
    return total;
}

double norm_series(const std::function<double(int)>& phi, double s, int d) {
    const double c = s * s * d / 4.0;
    double total = 0.0, pw = 1.0;
    for (int k = 0; k < 200; ++k) {
        total += phi(2 * k) * pw;
        pw *= c / ((k + 1.0) * (k + 1.0));
    }
    return total;
}

}  // namespace

TEST_CASE("half-factorial expected kernel") {
    const auto line = unit_line();
    CHECK(expected_kernel_half_factorial(line, 0.0, 1.0) == doctest::Approx(1.0));
    // unit-speed line at s = 2: cosh(|v| sqrt(s/2)) = cosh(1)
    CHECK(expected_kernel_half_factorial(line, 2.0, 1.0) ==
          doctest::Approx(std::cosh(1.0)).epsilon(1e-12));
    const auto g = random_path(6, 2, 1.0, 11);
    const auto phi = phi_factorial_half();
    const double ref = cross_series(g, [&](int k) { return phi(k); }, 1.3, 24);
    CHECK(std::abs(expected_kernel_half_factorial(g, 1.3, 1.0) - ref) < 1e-10);
    CHECK(wiener_norm_sq_half_factorial(1.0, 2) == doctest::Approx(std::exp(0.5)));
}

TEST_CASE("unweighted expected kernel by contour") {
    ContourSpec spec;
    spec.n_points = 32;
    CHECK(expected_kernel_original(constant_path(2), 1.0, 1.0, spec) ==
          doctest::Approx(1.0).epsilon(1e-10));
    const auto line = unit_line();
    const double ref = cross_series(line, [](int) { return 1.0; }, 1.0, 24);
    CHECK(std::abs(expected_kernel_original(line, 1.0, 1.0, spec) - ref) < 1e-8);
    const auto g = random_path(5, 2, 1.0, 12);
    const double refg = cross_series(g, [](int) { return 1.0; }, 0.8, 24);
    CHECK(std::abs(expected_kernel_original(g, 0.8, 1.0, spec) - refg) < 1e-8);
    // the truncated-weight contour agrees on non-circle families too
    ContourSpec par;
    par.family = ContourFamily::parabolic;
    par.n_points = 32;
    CHECK(std::abs(expected_kernel_original(g, 0.8, 1.0, par) - refg) < 1e-8);
}

TEST_CASE("unweighted norm") {
    ContourSpec spec;
    spec.n_points = 32;
    const double ref = norm_series([](int) { return 1.0; }, 1.0, 2);
    CHECK(wiener_norm_sq_original(1.0, 2, spec) == doctest::Approx(ref).epsilon(1e-10));
    CHECK(ref == doctest::Approx(1.5660829297563505).epsilon(1e-12));
    CHECK(wiener_norm_sq_original(0.5, 2, spec) < wiener_norm_sq_original(1.0, 2, spec));
    CHECK(wiener_norm_sq_original(1.0, 2, spec) < wiener_norm_sq_original(1.5, 2, spec));
}

TEST_CASE("beta-weight expected kernel") {
    ContourSpec circle;
    circle.n_points = 48;
    CHECK(expected_kernel_beta(constant_path(2), 1.0, 1.0, 0.0, 24, circle) ==
          doctest::Approx(1.0).epsilon(1e-8));
    const auto g = random_path(5, 2, 1.0, 13);
    // m = 0 degenerates to the unweighted kernel
    const double ref0 = cross_series(g, [](int) { return 1.0; }, 0.9, 24);
    CHECK(std::abs(expected_kernel_beta(g, 0.9, 1.0, 0.0, 24, circle) - ref0) < 1e-7);
    // integer m on a circle
    const auto phi2 = phi_beta(2.0);
    const double ref2 = cross_series(g, [&](int k) { return phi2(k); }, 0.9, 24);
    CHECK(std::abs(expected_kernel_beta(g, 0.9, 1.0, 2.0, 24, circle) - ref2) < 1e-7);
    // non-integer m needs a deformed contour; circle refuses
    CHECK_THROWS(expected_kernel_beta(g, 0.9, 1.0, 1.5, 24, circle));
    ContourSpec par;
    par.family = ContourFamily::parabolic;
    par.n_points = 32;
    const auto phi15 = phi_beta(1.5);
    const double ref15 = cross_series(g, [&](int k) { return phi15(k); }, 0.9, 24);
    CHECK(std::abs(expected_kernel_beta(g, 0.9, 1.0, 1.5, 24, par) - ref15) < 1e-7);
}

TEST_CASE("beta-weight norm") {
    CHECK(wiener_norm_sq_beta(0.0, 2, 1.5, 48) == doctest::Approx(1.0).epsilon(1e-10));
    const double ref0 = norm_series([](int) { return 1.0; }, 1.0, 1);
    CHECK(std::abs(wiener_norm_sq_beta(1.0, 1, 0.0, 48) - ref0) < 1e-10);
    const auto phi15 = phi_beta(1.5);
    const double ref15 = norm_series([&](int k) { return phi15(k); }, 1.0, 2);
    CHECK(std::abs(wiener_norm_sq_beta(1.0, 2, 1.5, 64) - ref15) < 1e-8);
    // radius must enclose the branch points at +/- s sqrt(d)
    CHECK_THROWS(wiener_norm_sq_beta(1.0, 2, 1.0, 48, 1.0));
    CHECK(wiener_norm_sq_beta(0.5, 2, 1.5, 64) < wiener_norm_sq_beta(1.0, 2, 1.5, 64));
}

TEST_CASE("general transform specification") {
    ContourSpec spec;
    spec.n_points = 32;
    const auto g = random_path(5, 2, 1.0, 14);
    // point-mass measure with g == 1 reduces to the unweighted kernel
    TransformSpec point;
    point.g = [](double) { return Complex(1.0, 0.0); };
    point.alpha = 1.0;
    point.mu = QuadratureRule{{0.0}, {1.0}, "point", 1};
    const double ref = cross_series(g, [](int) { return 1.0; }, 0.8, 24);
    CHECK(std::abs(wiener_cross_general(g, 0.8, 1.0, point, spec) - ref) < 1e-8);
    // uniform measure with g(u) = u realizes phi(k) = 1/(k+1)
    TransformSpec uni;
    uni.g = [](double u) { return Complex(u, 0.0); };
    uni.alpha = 1.0;
    uni.mu = make_rule(QuadFamily::legendre01, 24);
    const double refu = cross_series(g, [](int k) { return 1.0 / (k + 1.0); }, 0.8, 24);
    CHECK(std::abs(wiener_cross_general(g, 0.8, 1.0, uni, spec) - refu) < 1e-8);
    // constant gamma: only the k = 0 term survives, the total mass of mu
    CHECK(wiener_cross_general(constant_path(2), 1.0, 1.0, uni, spec) ==
          doctest::Approx(1.0).epsilon(1e-10));
}
