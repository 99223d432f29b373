#include "doctest.h"
#include "stokes/errors.hpp"
#include "stokes/hor.hpp"
#include "stokes/orbit.hpp"

using namespace stokes;

namespace {
MatrixQ upper(int n, std::initializer_list<long> above) {
    MatrixQ s = MatrixQ::identity(n);
    auto it = above.begin();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s(i, j) = *it++;
    return s;
}
PolyQ mono(const MatrixQ& s) { return charpoly(inverse_unit_upper(s) * s.transpose()); }
}  // namespace

TEST_CASE("sign action") {
    MatrixQ s = upper(3, {1, 2, 3});
    CHECK(sign_act({1, 1, 1}, s) == s);
    MatrixQ t = sign_act({1, -1, 1}, s);
    CHECK(t(0, 1) == -1);
    CHECK(t(0, 2) == 2);
    CHECK(t(1, 2) == -3);
    CHECK(sign_act({1, -1}, upper(2, {1}))(0, 1) == -1);
    CHECK_THROWS_AS(sign_act({1}, s), Error);
}

TEST_CASE("braid action") {
    MatrixQ s = upper(3, {1, -2, 3});
    for (int i = 1; i <= 2; ++i)
        for (int d : {1, -1}) {
            MatrixQ t = braid_act(i, s, d);
            CHECK(mono(t) == mono(s));
            CHECK(braid_act(i, t, -d) == s);
        }
    CHECK_THROWS_AS(braid_act(3, s, 1), Error);
    CHECK_THROWS_AS(braid_act(1, s, 0), Error);
    // braid relation s1 s2 s1 = s2 s1 s2
    MatrixQ a = braid_act(1, braid_act(2, braid_act(1, s, 1), 1), 1);
    MatrixQ b = braid_act(2, braid_act(1, braid_act(2, s, 1), 1), 1);
    CHECK(a == b);
}

TEST_CASE("orbits") {
    auto id = orbit_explore(MatrixQ::identity(3), 4, 1000);
    CHECK(id.nodes.size() == 1);
    CHECK(!id.exhausted);
    auto a2 = orbit_explore(upper(2, {1}), 6, 1000);
    CHECK(!a2.exhausted);
    CHECK(a2.charpoly_invariant);
    CHECK(a2.nodes.size() <= 2);
    auto a3 = orbit_explore(upper(3, {1, 0, 1}), 8, 10000);
    CHECK(!a3.exhausted);
    CHECK(a3.charpoly_invariant);
}

TEST_CASE("eigenvalue stratum report") {
    auto pool = cyclotomic_hor_pool(2);
    CHECK(!pool.empty());
    auto rep = stratum_experiment(pool);
    int members = 0;
    for (const auto& g : rep.groups) members += static_cast<int>(g.members.size());
    CHECK(members == static_cast<int>(pool.size()));
    // x^2+x+1 and x^2-x+1 have different monodromy polynomials
    std::vector<HorMatrixQ> two{poly_to_matrix(PolyQ({Rational(1), Rational(1), Rational(1)}), 1),
                                poly_to_matrix(PolyQ({Rational(1), Rational(-1), Rational(1)}), 1)};
    auto r2 = stratum_experiment(two);
    CHECK(r2.violations.empty());
}

TEST_CASE("negation keeps spectra in one group") {
    PolyQ p({Rational(-1), Rational(1), Rational(0), Rational(-1), Rational(1)});
    auto [pn, kn] = negate_poly_transform(p, 2);
    std::vector<HorMatrixQ> pool{poly_to_matrix(p, 2), poly_to_matrix(pn, kn)};
    auto rep = stratum_experiment(pool);
    for (const auto& g : rep.groups) CHECK(!g.spectra_differ);
}
