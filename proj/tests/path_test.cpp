#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "sigkern/path.hpp"

using namespace sigkern;

static PiecewiseLinearPath zigzag() {
    return PiecewiseLinearPath::from_samples({0.0, 0.5, 1.0},
                                             {{0.0, 0.0}, {1.0, 0.0}, {1.0, 2.0}});
}

TEST_CASE("construction validation") {
    CHECK_THROWS(PiecewiseLinearPath({0.0}, {1.0}, 1));                       // one vertex
    CHECK_THROWS(PiecewiseLinearPath({0.0, 0.0}, {0.0, 1.0}, 1));             // equal times
    CHECK_THROWS(PiecewiseLinearPath({1.0, 0.0}, {0.0, 1.0}, 1));             // decreasing
    CHECK_THROWS(PiecewiseLinearPath({0.0, 1.0}, {0.0, 1.0, 2.0}, 2));        // bad size
    CHECK_NOTHROW(PiecewiseLinearPath({0.0, 1.0}, {0.0, 0.0, 1.0, 1.0}, 2));
}

TEST_CASE("geometry accessors") {
    const auto p = zigzag();
    CHECK(p.dim() == 2);
    CHECK(p.num_segments() == 2);
    CHECK(p.segment_duration(0) == doctest::Approx(0.5));
    const auto v0 = p.velocity(0);
    CHECK(v0[0] == doctest::Approx(2.0));
    CHECK(v0[1] == doctest::Approx(0.0));
    const auto i1 = p.increment(1);
    CHECK(i1[0] == doctest::Approx(0.0));
    CHECK(i1[1] == doctest::Approx(2.0));
}

TEST_CASE("length is additive and prorated") {
    const auto p = zigzag();
    CHECK(p.length() == doctest::Approx(3.0));
    CHECK(p.length_to(0.5) == doctest::Approx(1.0));
    CHECK(p.length_to(0.75) == doctest::Approx(2.0));
    CHECK(p.length_to(0.0) == doctest::Approx(0.0));
}

TEST_CASE("restrict_to interpolates the final vertex") {
    const auto p = zigzag();
    const auto q = p.restrict_to(0.75);
    CHECK(q.num_vertices() == 3);
    CHECK(q.t_end() == doctest::Approx(0.75));
    CHECK(q.point(2, 0) == doctest::Approx(1.0));
    CHECK(q.point(2, 1) == doctest::Approx(1.0));
    CHECK_THROWS(p.restrict_to(0.0));
    CHECK_THROWS(p.restrict_to(1.5));
}

TEST_CASE("scaling") {
    const auto p = zigzag().scale(-2.0);
    CHECK(p.point(1, 0) == doctest::Approx(-2.0));
    CHECK(p.length() == doctest::Approx(6.0));
    const auto c = scale(zigzag(), Complex(0.0, 1.0));
    CHECK(c.re.point(1, 0) == doctest::Approx(0.0));
    CHECK(c.im.point(1, 0) == doctest::Approx(1.0));
}

TEST_CASE("csv round trip") {
    const auto p = zigzag();
    std::stringstream ss;
    write_path_csv(ss, p);
    const auto q = read_path_csv(ss);
    REQUIRE(q.num_vertices() == p.num_vertices());
    for (std::size_t i = 0; i < p.num_vertices(); ++i) {
        CHECK(q.times()[i] == p.times()[i]);
        for (int c = 0; c < p.dim(); ++c) CHECK(q.point(i, c) == p.point(i, c));
    }
}
