#include "doctest.h"
#include "stokes/errors.hpp"
#include "stokes/tracking.hpp"

#include <algorithm>
#include <cmath>

using namespace stokes;

namespace {
PolyQ P(std::initializer_list<long> low_to_high) {
    std::vector<Rational> c;
    for (long x : low_to_high) c.emplace_back(x);
    return PolyQ(c);
}
std::vector<double> sorted(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v;
}
MatrixD s2(double a) {
    MatrixD s = MatrixD::identity(2);
    s(0, 1) = a;
    return s;
}
}  // namespace

TEST_CASE("simplex paths") {
    auto id = simplex_path_track(gamma_base(1, 3), 10);
    for (const auto& row : id.alpha)
        for (double a : row) CHECK(std::fabs(a) < 1e-12);
    auto edge = simplex_path_track(poly_to_matrix(P({1, 2, 1}), 1), 128);
    auto e = sorted(edge.endpoint());
    CHECK(e[0] == doctest::Approx(-0.5).epsilon(1e-10));
    CHECK(e[1] == doctest::Approx(0.5).epsilon(1e-10));
    auto three = simplex_path_track(poly_to_matrix(P({1, 3, 3, 1}), 1), 256);
    auto t = sorted(three.endpoint());
    CHECK(t[0] == doctest::Approx(-1.0));
    CHECK(std::fabs(t[1]) < 1e-8);
    CHECK(t[2] == doctest::Approx(1.0));
    CHECK(edge.r.size() >= 129);
}

TEST_CASE("generic paths") {
    auto flat = generic_path_track({MatrixD::identity(2), MatrixD::identity(2)}, 16);
    for (double a : flat.paths.endpoint()) CHECK(std::fabs(a) < 1e-12);
    auto line = generic_path_track({MatrixD::identity(2), s2(2.0)}, 512);
    auto e = sorted(line.paths.endpoint());
    CHECK(e[0] == doctest::Approx(-0.5).epsilon(1e-6));
    CHECK(e[1] == doctest::Approx(0.5).epsilon(1e-6));
    REQUIRE(!line.collisions.empty());
    CHECK(line.collisions.back().r == doctest::Approx(1.0));
    CHECK(!line.ambiguous);
    CHECK_THROWS_WITH_AS(generic_path_track({MatrixD::identity(2), s2(3.0)}, 64), doctest::Contains("LeftT"), Error);
    CHECK_THROWS_WITH_AS(generic_path_track({s2(1.0)}, 8), doctest::Contains("BadPath"), Error);
}

TEST_CASE("a path inside the HOR1 simplex agrees with simplex tracking") {
    MatrixD target = to_double(poly_to_matrix(P({1, 1, 1}), 1).S);
    auto g = sorted(generic_path_track({MatrixD::identity(2), target}, 256).paths.endpoint());
    auto s = sorted(simplex_path_track(poly_to_matrix(P({1, 1, 1}), 1), 256).endpoint());
    CHECK(g[0] == doctest::Approx(s[0]).epsilon(1e-8));
    CHECK(g[1] == doctest::Approx(s[1]).epsilon(1e-8));
}
