#include "doctest.h"
#include "stokes/chain.hpp"
#include "stokes/errors.hpp"

#include <algorithm>

using namespace stokes;

namespace {
std::vector<Rational> R(std::initializer_list<std::pair<long, long>> v) {
    std::vector<Rational> out;
    for (auto [p, q] : v) out.push_back(ratio(p, q));
    return out;
}
std::vector<Rational> sorted(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return v;
}
PolyQ P(std::initializer_list<long> low_to_high) {
    std::vector<Rational> c;
    for (long x : low_to_high) c.emplace_back(x);
    return PolyQ(c);
}
}  // namespace

TEST_CASE("invariants") {
    auto a3 = chain_invariants({3});
    CHECK(a3.milnor == 2);
    CHECK(a3.w == R({{1, 3}}));
    auto d4 = chain_invariants({3, 2});
    CHECK(d4.r == std::vector<long>{3, 6});
    CHECK(d4.mu == std::vector<long>{2, 4});
    CHECK(d4.w == R({{1, 3}, {1, 3}}));
    CHECK(d4.milnor == 4);
    auto a1 = chain_invariants({2});
    CHECK(a1.milnor == 1);
    CHECK(a1.w == R({{1, 2}}));
    CHECK_THROWS_AS(chain_invariants({1}), Error);
    CHECK_THROWS_AS(chain_invariants({3, 0}), Error);
}

TEST_CASE("Stokes polynomials") {
    auto a = stokes_poly({3});
    CHECK(a.p == P({1, 1, 1}));
    CHECK(a.k == 1);
    auto d = stokes_poly({3, 2});
    CHECK(d.p == P({-1, 1, 0, -1, 1}));
    CHECK(d.k == 2);
    CHECK(d.angles.flatten() ==
          std::vector<Number>{Number(0), Number(ratio(1, 6)), Number(ratio(1, 2)), Number(ratio(5, 6))});
    CHECK(stokes_poly({4}).p == P({1, 1, 1, 1}));
}

TEST_CASE("quasihomogeneous spectra") {
    auto e12 = sorted(qh_spectrum(R({{1, 3}, {1, 7}})));
    REQUIRE(e12.size() == 12);
    CHECK(e12.front() == ratio(-11, 21));
    CHECK(e12.back() == ratio(11, 21));
    CHECK(sorted(qh_spectrum(R({{1, 4}}))) == R({{-3, 4}, {-1, 2}, {-1, 4}}));
    CHECK(qh_spectrum(R({{1, 2}})) == R({{-1, 2}}));
    CHECK_THROWS_AS(qh_spectrum(R({{1, 1}})), Error);
}

TEST_CASE("Jacobi bases") {
    auto b = jacobi_basis({3, 2});
    CHECK(b.size() == 4);
    CHECK(std::find(b.begin(), b.end(), Monomial{0, 1}) != b.end());
    CHECK(std::find(b.begin(), b.end(), Monomial{2, 0}) != b.end());
    CHECK(sorted(spectrum_from_basis({3, 2})) == R({{-1, 3}, {0, 1}, {0, 1}, {1, 3}}));
    CHECK(sorted(spectrum_from_basis({4})) == R({{-3, 4}, {-1, 2}, {-1, 4}}));
    CHECK(sorted(spectrum_from_basis({3})) == R({{-2, 3}, {-1, 3}}));
}

TEST_CASE("chain graph") {
    auto g = chain_graph({3, 2});
    REQUIRE(g.vertices.size() == 4);
    CHECK(g.vertices.front() == Monomial{0, 1});
    CHECK(g.vertices.back() == Monomial{2, 0});
    CHECK(g.labels == std::vector<int>{1, 0, 0});
    CHECK(g.increments == R({{-1, 3}, {1, 3}, {1, 3}}));
    auto h = chain_graph({4});
    CHECK(h.vertices.front() == Monomial{2});
    CHECK(h.vertices.back() == Monomial{0});
}

TEST_CASE("spectrum shift") {
    auto a = verify_spectrum_shift({3});
    CHECK(a.holds);
    CHECK(sorted(a.sp_stokes) == R({{-1, 6}, {1, 6}}));
    auto d = verify_spectrum_shift({3, 2});
    CHECK(d.holds);
    CHECK(d.shift == 0);
    CHECK(d.sp_stokes == R({{0, 1}, {-1, 3}, {0, 1}, {1, 3}}));
    auto a1 = verify_spectrum_shift({2});
    CHECK(a1.holds);
    CHECK(a1.sp_stokes == R({{0, 1}}));
}

TEST_CASE("reductions") {
    auto r = reduce_chain({2, 3});
    CHECK(r.suspensions == 1);
    CHECK(r.shift == ratio(-1, 2));
    CHECK(r.reduced == std::vector<long>{6});
    auto s = reduce_chain({3, 2, 1, 2});
    CHECK(s.suspensions == 2);
    CHECK(s.shift == -1);
    CHECK(s.reduced == std::vector<long>{3, 4});
    auto t = reduce_chain({3, 2});
    CHECK(t.suspensions == 0);
    CHECK(t.shift == 0);
    CHECK(t.reduced == std::vector<long>{3, 2});
}

TEST_CASE("Thom-Sebastiani") {
    MatrixQ a2 = MatrixQ::identity(2);
    a2(0, 1) = 1;
    auto one = thom_sebastiani(a2, MatrixQ::identity(1));
    CHECK(one.S == a2);
    CHECK(one.monodromy_ok);
    auto t = thom_sebastiani(a2, a2);
    CHECK(t.S.rows() == 4);
    CHECK(t.monodromy_ok);
    CHECK(sorted(qh_ts_spectrum(R({{1, 3}}), R({{1, 3}}))) == R({{-1, 3}, {0, 1}, {0, 1}, {1, 3}}));
}
