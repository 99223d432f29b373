#include "doctest.h"
#include "stokes/errors.hpp"
#include "stokes/lowdim.hpp"

using namespace stokes;

namespace {
Number q(long p, long d = 1) { return Number(ratio(p, d)); }
T3Point pt(long a, long b, long c) { return {q(a), q(b), q(c)}; }
}  // namespace

TEST_CASE("membership") {
    CHECK(f3(pt(0, 0, 0)) == q(4));
    CHECK(member3(pt(0, 0, 0)));
    CHECK(f3(pt(2, 2, 2)) == q(0));
    CHECK(member3(pt(2, 2, 2)));
    CHECK(f3(pt(1, 2, 0)) == q(-1));
    CHECK(!member3(pt(1, 2, 0)));
}

TEST_CASE("strata of T(3,R)") {
    auto c = classify3(pt(1, 1, 1));
    CHECK(c.stratum == Stratum3::InteriorPos);
    CHECK(c.f == q(2));
    CHECK(same_types(c.types, {IrrType::f1(1, 1, 1), IrrType::f2complex(q(1, 4), 1, q(-1, 8))}));
    auto e = classify3(pt(2, 2, 2));
    CHECK(e.stratum == Stratum3::Exceptional);
    CHECK(same_types(e.types, {IrrType::f1(1, 1, 1), IrrType::f2real(-1, 1)}));
    auto j = classify3(pt(3, 3, 3));
    CHECK(j.stratum == Stratum3::Jordan3Boundary);
    CHECK(same_types(j.types, {IrrType::f1(1, 3, 1)}));
    CHECK(classify3(pt(0, 0, 0)).stratum == Stratum3::Identity);
    CHECK(classify3(pt(1, 2, 0)).stratum == Stratum3::Outside);
    CHECK(classify3(pt(1, 1, 1)).charpoly_ok);
    auto numeric = classify3({Number(1.0), Number(1.0), Number(1.0)});
    CHECK(numeric.stratum == Stratum3::InteriorPos);
}

TEST_CASE("exact cosine angles") {
    CHECK(cos_angle(q(1)) == q(0));
    CHECK(cos_angle(q(1, 2)) == q(1, 6));
    CHECK(cos_angle(q(0)) == q(1, 4));
    CHECK(cos_angle(q(-1)) == q(1, 2));
    CHECK(!cos_angle(q(1, 3)).exact());
}

TEST_CASE("n=2 solutions") {
    auto two = solve2(q(2));
    CHECK(two.alpha1 == q(1, 2));
    CHECK(two.spp == Spp{{q(-1, 2), 2}, {q(1, 2), 0}});
    CHECK(same_types(two.types, {IrrType::f1(-1, 2, 1)}));
    auto zero = solve2(q(0));
    CHECK(zero.alpha1 == q(0));
    CHECK(same_types(zero.types, {IrrType::f1(1, 1, 1), IrrType::f1(1, 1, 1)}));
    CHECK(solve2(q(1)).alpha1 == q(1, 6));
    CHECK_THROWS_WITH_AS(solve2(q(5)), doctest::Contains("OutOfT"), Error);
}

TEST_CASE("HOR1 line in T(3,R)") {
    CHECK(hor1_line3(q(-1)).spp == Spp{{q(0), 1}, {q(-1, 2), 2}, {q(1, 2), 0}});
    CHECK(hor1_line3(q(3)).spp == Spp{{q(-1), 3}, {q(0), 1}, {q(1), -1}});
    auto one = hor1_line3(q(1));
    CHECK(one.beta[0] == q(1, 4));
    CHECK(one.alpha == std::vector<Number>{q(1, 4), q(0), q(-1, 4)});
    CHECK_THROWS_AS(hor1_line3(q(4)), Error);
}
