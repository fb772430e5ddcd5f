#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sigkern/sig_oracle.hpp"
#include "test_paths.hpp"

using namespace sigkern;
using namespace sigkern::testutil;

TEST_CASE("linear path levels are t^k v^k / k!") {
    const auto sig = truncated_signature(unit_line(), 6);
    double fact = 1.0;
    for (int k = 0; k <= 6; ++k) {
        CHECK(sig.levels[k][0] == doctest::Approx(1.0 / fact).epsilon(1e-14));
        fact *= k + 1;
    }
}

TEST_CASE("chen concatenation equals direct signature") {
    const auto p = random_path(6, 2, 1.2, 7);
    const auto full = truncated_signature(p, 8);
    const double mid = 0.5;
    const auto left = truncated_signature_to(p, mid, 8);
    // right half: rebuild from the remaining vertices
    std::vector<double> times{mid};
    std::vector<std::vector<double>> pts;
    {
        const auto lp = p.restrict_to(mid);
        pts.push_back({lp.point(lp.num_vertices() - 1, 0), lp.point(lp.num_vertices() - 1, 1)});
    }
    for (std::size_t j = 0; j < p.num_vertices(); ++j)
        if (p.times()[j] > mid) {
            times.push_back(p.times()[j]);
            pts.push_back({p.point(j, 0), p.point(j, 1)});
        }
    const auto right = truncated_signature(PiecewiseLinearPath::from_samples(times, pts), 8);
    const auto glued = chen_concat(left, right);
    for (int k = 0; k <= 8; ++k)
        for (std::size_t i = 0; i < full.levels[k].size(); ++i)
            CHECK(glued.levels[k][i] == doctest::Approx(full.levels[k][i]).epsilon(1e-11));
}

TEST_CASE("signature at the start time is the unit tensor") {
    const auto p = random_path(4, 2, 1.0, 3);
    const auto sig = truncated_signature_to(p, p.t_begin(), 5);
    CHECK(sig.levels[0][0] == 1.0);
    for (int k = 1; k <= 5; ++k)
        for (double v : sig.levels[k]) CHECK(v == 0.0);
}

TEST_CASE("unit linear pair kernel approaches a Bessel value") {
    // sum_k 1/(k!)^2 = I_0(2) = 2.2795853...
    const auto one = [](int) { return 1.0; };
    const double v = truncated_phi_kernel(unit_line(), unit_line(), one, 16, 1.0, 1.0);
    CHECK(v == doctest::Approx(2.2795853023360673).epsilon(1e-12));
}

TEST_CASE("kernel is symmetric and respects restriction") {
    const auto a = random_path(5, 2, 1.0, 11);
    const auto b = random_path(5, 2, 0.8, 12);
    const auto one = [](int) { return 1.0; };
    CHECK(truncated_phi_kernel(a, b, one, 10, 1.0, 1.0) ==
          doctest::Approx(truncated_phi_kernel(b, a, one, 10, 1.0, 1.0)).epsilon(1e-12));
    // s at the start time kills all levels > 0
    CHECK(truncated_phi_kernel(a, b, one, 10, 0.0, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("complex scaling multiplies level k by theta^k") {
    const auto p = random_path(4, 2, 1.0, 5);
    const Complex theta(0.3, 0.7);
    const auto base = truncated_signature(p, 5);
    const auto scaled = truncated_signature_scaled(p, theta, 5);
    Complex tk(1.0, 0.0);
    for (int k = 0; k <= 5; ++k) {
        for (std::size_t i = 0; i < base.levels[k].size(); ++i) {
            CHECK(scaled.levels[k][i].real() ==
                  doctest::Approx((tk * base.levels[k][i]).real()).epsilon(1e-11));
            CHECK(scaled.levels[k][i].imag() ==
                  doctest::Approx((tk * base.levels[k][i]).imag()).epsilon(1e-11));
        }
        tk *= theta;
    }
}

TEST_CASE("truncation error bound") {
    const auto one = [](int) { return 1.0; };
    // explicit tail for L_g = L_s = 1, N = 4: sum_{k>=5} 1/(k!)^2
    double tail = 0.0;
    double fact = 120.0;
    for (int k = 5; k < 30; ++k) {
        tail += 1.0 / (fact * fact);
        fact *= k + 1;
    }
    CHECK(truncation_error_bound(one, 1.0, 1.0, 4) == doctest::Approx(tail).epsilon(1e-10));
    CHECK(truncation_error_bound(one, 0.0, 1.0, 4) == 0.0);
    // weights growing like (k!)^2 2^k defeat the summability condition
    const auto bad = [](int k) { return std::exp(2.0 * std::lgamma(k + 1.0) + k * std::log(2.0)); };
    CHECK_THROWS(truncation_error_bound(bad, 1.0, 1.0, 2));
}

TEST_CASE("even contraction of a linear path") {
    // level 2n tensor is (v t)^{(x) 2n}/(2n)!, so the doubled-index sum is
    // |v|^{2n} t^{2n} / (2n)!.
    const auto p = PiecewiseLinearPath({0.0, 1.0}, {0.0, 0.0, 0.6, 0.8}, 2);
    const auto sig = truncated_signature(p, 8);
    for (int n = 0; n <= 4; ++n)
        CHECK(even_contraction(sig, n) ==
              doctest::Approx(std::exp(-std::lgamma(2.0 * n + 1.0))).epsilon(1e-12));
}

TEST_CASE("even contraction matches a brute-force doubled-word sum") {
    const auto p = random_path(4, 2, 0.9, 9);
    const auto sig = truncated_signature(p, 6);
    // n = 3, d = 2: sum over 8 tuples by hand
    double direct = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                std::size_t flat = 0;
                for (int idx : {i, i, j, j, k, k}) flat = flat * 2 + idx;
                direct += sig.levels[6][flat];
            }
    CHECK(even_contraction(sig, 3) == doctest::Approx(direct).epsilon(1e-13));
}
