#include "doctest.h"
#include "stokes/serialize.hpp"

using namespace stokes;

namespace {
Number q(long p, long d = 1) { return Number(ratio(p, d)); }
}  // namespace

TEST_CASE("spectral pairs as JSON") {
    Spp s{{q(-1, 2), 2}, {q(1, 2), 0}};
    json j = encode(s);
    CHECK(j.dump() == R"([{"alpha":"-1/2","level":2,"mult":1},{"alpha":"1/2","level":0,"mult":1}])");
    CHECK(decode_spp(j) == s);
}

TEST_CASE("types round trip") {
    TypeList t{IrrType::f1(-1, 2, 1), IrrType::f2real(-1, 1), IrrType::f2complex(q(1, 3), 1, q(-1, 6)),
               IrrType::f1(1, 3, 1)};
    json j = encode(t);
    CHECK(j[0].contains("family"));
    CHECK(j[0].contains("n"));
    CHECK(same_types(decode_types(j), t));
}

TEST_CASE("numbers and matrices") {
    CHECK(encode(q(3, 6)) == "1/2");
    CHECK(decode_number(json("2/4")) == q(1, 2));
    CHECK(!decode_number(json(0.25)).exact());
    MatrixQ m = MatrixQ::identity(2);
    m(0, 1) = ratio(-3, 2);
    json f = encode_matrix_file(m);
    CHECK(f["n"] == 2);
    MatrixFile back = decode_matrix(f);
    CHECK(back.exact);
    CHECK(back.q == m);
    MatrixFile fl = decode_matrix(json::parse("[[1, 0.5], [0, 1]]"));
    CHECK(!fl.exact);
    CHECK(fl.d(0, 1) == 0.5);
}

TEST_CASE("scalar data and ladders round trip") {
    HorScal b{2, {q(0), q(1, 6), q(1, 2), q(5, 6)}};
    HorScal c = decode_scal(encode(b));
    CHECK(c.k == 2);
    CHECK(c.beta == b.beta);
    SppLadder l{q(-1), 1, 2};
    CHECK(decode_ladder(encode(l)) == l);
    PolyQ p({Rational(-1), Rational(1), Rational(0), Rational(-1), Rational(1)});
    CHECK(decode_poly(encode(p)) == p);
}

TEST_CASE("float rounding") {
    json j = {{"x", 0.1234567891234}, {"y", json::array({1.0 / 3})}};
    round_floats(j, 4);
    CHECK(j["x"].get<double>() == 0.1235);
    CHECK(j["y"][0].get<double>() == 0.3333);
}
