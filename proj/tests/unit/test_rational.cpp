#include "doctest.h"
#include "stokes/errors.hpp"
#include "stokes/linalg.hpp"
#include "stokes/number.hpp"

using namespace stokes;

TEST_CASE("parse and print") {
    CHECK(parse_rational("2/6") == ratio(1, 3));
    CHECK(to_string(parse_rational("-4/8")) == "-1/2");
    CHECK(parse_rational("0.25") == ratio(1, 4));
    CHECK(parse_rational("1e-2") == ratio(1, 100));
    CHECK(to_string(parse_rational(" 7 ")) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("number keeps exactness") {
    Number a(ratio(1, 3)), b(ratio(1, 6));
    CHECK((a + b).exact());
    CHECK(a + b == Number(ratio(1, 2)));
    Number c(0.5);
    CHECK(!(a + c).exact());
    CHECK(Number(ratio(3, 2)).mod(Number(1)) == Number(ratio(1, 2)));
    CHECK(Number(ratio(-1, 3)).mod(Number(1)) == Number(ratio(2, 3)));
    CHECK(Number(Rational(2, 4)).str() == "1/2");
}

TEST_CASE("exact linear algebra") {
    MatrixQ s = MatrixQ::identity(3);
    s(0, 1) = 2;
    s(0, 2) = 2;
    s(1, 2) = 2;
    MatrixQ sym = s + s.transpose();
    Inertia in = inertia(sym);
    CHECK(in == Inertia{1, 2, 0});
    CHECK(rank(sym) == 1);
    MatrixQ inv = inverse_unit_upper(s);
    CHECK(inv * s == MatrixQ::identity(3));
    PolyQ cp = charpoly(inv * s.transpose());
    // (x-1)(x+1)^2
    CHECK(cp == PolyQ({Rational(-1), Rational(-1), Rational(1), Rational(1)}));
}
