#include "doctest.h"
#include "stokes/errors.hpp"
#include "stokes/polycore.hpp"

#include <cmath>

using namespace stokes;

namespace {
PolyQ P(std::initializer_list<long> low_to_high) {
    std::vector<Rational> c;
    for (long x : low_to_high) c.emplace_back(x);
    return PolyQ(c);
}
Number q(long p, long d = 1) { return Number(ratio(p, d)); }
}  // namespace

TEST_CASE("signed products") {
    CHECK(expand_signed_product({{1, 1}}) == P({-1, 1}));
    CHECK(expand_signed_product({{1, -1}, {3, 1}}) == P({1, 1, 1}));
    CHECK(expand_signed_product({{1, 1}, {3, -1}, {6, 1}}) == P({-1, 1, 0, -1, 1}));
    auto angles = signed_product_angles({{1, 1}, {3, -1}, {6, 1}});
    CHECK(angles.flatten() == std::vector<Number>{q(0), q(1, 6), q(1, 2), q(5, 6)});
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == P({-1, 1}));
    CHECK(cyclotomic(6) == P({1, -1, 1}));
    CHECK(cyclotomic(12) == P({1, 0, -1, 0, 1}));
    CHECK(euler_phi(12) == 4);
    auto f = cyclotomic_factors(P({-1, 1, 0, -1, 1}));
    REQUIRE(f.has_value());
    CHECK(f->size() == 3);
    CHECK(!cyclotomic_factors(P({1, -3, 1})).has_value());
}

TEST_CASE("roots on the unit circle") {
    CHECK(unit_circle_angles(P({1, 1, 1})).flatten() == std::vector<Number>{q(1, 3), q(2, 3)});
    auto triple = unit_circle_angles(P({-1, 3, -3, 1}));
    REQUIRE(triple.items.size() == 1);
    CHECK(triple.items[0].angle == q(0));
    CHECK(triple.items[0].mult == 3);
    auto dbl = unit_circle_angles(P({1, 2, 1}));
    REQUIRE(dbl.items.size() == 1);
    CHECK(dbl.items[0].angle == q(1, 2));
    CHECK(dbl.items[0].mult == 2);
    CHECK(roots_on_unit_circle(P({1, 1, 1})));
    CHECK(!roots_on_unit_circle(P({1, -3, 1})));
    auto num = unit_circle_angles(to_double(P({1, 1, 1})));
    REQUIRE(num.items.size() == 2);
    CHECK(std::fabs(num.items[0].angle.value() - 1.0 / 3) < 1e-9);
}

TEST_CASE("palindrome classes") {
    CHECK(palindrome_class(P({1, 1, 1})).k == 1);
    CHECK(palindrome_class(P({-1, 1, 0, -1, 1})).k == 2);
    CHECK(palindrome_class(P({1, -3, 1})).k == 0);
}

TEST_CASE("companion matrix") {
    PolyQ p = P({1, 5, 1});
    MatrixQ r = companion_matrix(p);
    CHECK(r(0, 0) == -5);
    CHECK(r(0, 1) == -1);
    CHECK(r(1, 0) == 1);
    CHECK(r(1, 1) == 0);
    CHECK(companion_matrix(P({-1, 1}))(0, 0) == 1);
}

TEST_CASE("Jordan chains of companion matrices") {
    PolyD p = to_double(P({1, -2, 1}));
    auto v = jordan_chain_vectors(p, {1.0, 0.0}, 1);
    REQUIRE(v.size() == 2);
    CHECK(std::abs(v[0][0] - 1.0) < 1e-12);
    CHECK(std::abs(v[0][1] - 1.0) < 1e-12);
    CHECK(std::abs(v[1][0] - 1.0) < 1e-12);
    CHECK(std::abs(v[1][1]) < 1e-12);
    auto w = jordan_chain_vectors(to_double(P({1, 2, 1})), {-1.0, 0.0}, 1);
    CHECK(std::abs(w[0][0] + 1.0) < 1e-12);
    CHECK(std::abs(w[0][1] - 1.0) < 1e-12);
    CHECK(std::abs(w[1][0] + 1.0) < 1e-12);
    CHECK(std::abs(w[1][1]) < 1e-12);
    auto e = jordan_chain_vectors(P({-1, 1, 0, -1, 1}), ratio(1, 6), 0);
    REQUIRE(e.size() == 1);
    CHECK(e[0].size() == 4);
}
