#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sigkern/goursat.hpp"
#include "sigkern/sig_oracle.hpp"
#include "test_paths.hpp"

using namespace sigkern;
using namespace sigkern::testutil;

TEST_CASE("boundary rows and trivial cases") {
    const auto a = random_path(4, 2, 1.0, 1);
    const auto surf = solve(a, constant_path(2), Complex(1.0, 0.0), 4);
    for (const Complex& v : surf.values) CHECK(std::abs(v - 1.0) < 1e-15);
    const auto zero = solve(a, random_path(4, 2, 1.0, 2), Complex(0.0, 0.0), 4);
    for (const Complex& v : zero.values) CHECK(std::abs(v - 1.0) < 1e-15);
    const auto s2 = solve(a, a, Complex(1.0, 0.0), 8);
    CHECK(s2.values.front() == Complex(1.0, 0.0));
    // symmetry for gamma == sigma
    const std::size_t n = s2.s_grid.size();
    for (std::size_t i = 0; i < n; i += 5)
        for (std::size_t j = 0; j < n; j += 3)
            CHECK(std::abs(s2.at(i, j) - s2.at(j, i)) < 1e-12);
    CHECK_THROWS(solve(a, a, Complex(1.0, 0.0), 3));  // not a power of two
}

TEST_CASE("unit linear pair corner approaches the Bessel value") {
    const auto surf = solve(unit_line(), unit_line(), Complex(1.0, 0.0), 512);
    CHECK(std::abs(surf.corner().real() - 2.2795853023360673) < 1e-4);
}

TEST_CASE("corner agrees with the truncated series and converges at order 2") {
    for (std::uint64_t seed : {5u, 6u, 7u}) {
        const auto a = random_path(5, 2, 1.2, seed);
        const auto b = random_path(6, 2, 1.0, seed + 100);
        const auto one = [](int) { return 1.0; };
        const double oracle = truncated_phi_kernel(a, b, one, 16, 1.0, 1.0);
        const double tail = truncation_error_bound(one, a.length(), b.length(), 16);
        std::vector<double> errs;
        for (int r : {32, 64, 128, 256, 512}) {
            const double v = solve(a, b, Complex(1.0, 0.0), r).corner().real();
            errs.push_back(std::abs(v - oracle));
        }
        CHECK(errs.back() <= tail + 5e-4);
        for (std::size_t i = 1; i < errs.size(); ++i) CHECK(errs[i] <= errs[i - 1] + 1e-15);
        // empirical convergence order from the coarsest and finest refinements
        const double order = std::log2(errs[0] / errs[4]) / 4.0;
        CHECK(order >= 1.9);
    }
}

TEST_CASE("scaling identities") {
    const auto a = random_path(4, 2, 1.0, 31);
    const auto b = random_path(4, 2, 0.9, 32);
    const double theta = -0.7;
    const auto s0 = solve(a, b, Complex(theta, 0.0), 16);
    const auto s1 = solve(a.scale(theta), b, Complex(1.0, 0.0), 16);
    const auto s2 = solve(a, b.scale(theta), Complex(1.0, 0.0), 16);
    for (std::size_t k = 0; k < s0.values.size(); ++k) {
        CHECK(std::abs(s0.values[k] - s1.values[k]) < 1e-12);
        CHECK(std::abs(s0.values[k] - s2.values[k]) < 1e-12);
    }
}

TEST_CASE("serial and wavefront solvers agree bitwise") {
    const auto a = random_path(5, 3, 1.4, 41);
    const auto b = random_path(7, 3, 1.1, 42);
    const auto p = solve(a, b, Complex(0.4, 0.9), 32);
    const auto s = solve_serial(a, b, Complex(0.4, 0.9), 32);
    REQUIRE(p.values.size() == s.values.size());
    for (std::size_t k = 0; k < p.values.size(); ++k) CHECK(p.values[k] == s.values[k]);
}

TEST_CASE("value_at interpolation") {
    const auto a = random_path(3, 2, 1.0, 51);
    const auto b = random_path(3, 2, 1.0, 52);
    const auto surf = solve(a, b, Complex(1.0, 0.0), 4);
    // boundary
    CHECK(std::abs(value_at(surf, 0.0, 0.7) - 1.0) < 1e-15);
    // grid node exactness
    CHECK(value_at(surf, surf.s_grid[5], surf.t_grid[7]) == surf.at(5, 7));
    // cell midpoint = average of the four corners
    const double sm = 0.5 * (surf.s_grid[2] + surf.s_grid[3]);
    const double tm = 0.5 * (surf.t_grid[4] + surf.t_grid[5]);
    const Complex avg = 0.25 * (surf.at(2, 4) + surf.at(3, 4) + surf.at(2, 5) + surf.at(3, 5));
    CHECK(std::abs(value_at(surf, sm, tm) - avg) < 1e-13);
    CHECK_THROWS(value_at(surf, -0.5, 0.5));
}

TEST_CASE("rotation-pair formulation matches the complex solver") {
    const auto a = random_path(4, 2, 0.8, 61);
    const auto b = random_path(4, 2, 0.7, 62);
    for (double x : {0.0, M_PI / 2.0, M_PI, 1.234}) {
        const auto [re, im] = solve_rotation_pair(a, b, x, 8);
        const auto c = solve(a, b, Complex(std::cos(x), std::sin(x)), 8);
        for (std::size_t k = 0; k < c.values.size(); ++k) {
            CHECK(std::abs(re.values[k].real() - c.values[k].real()) < 1e-12);
            CHECK(std::abs(im.values[k].real() - c.values[k].imag()) < 1e-12);
        }
    }
    const auto [re0, im0] = solve_rotation_pair(a, b, 0.0, 8);
    for (const Complex& v : im0.values) CHECK(std::abs(v) < 1e-15);
}
