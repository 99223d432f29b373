#include "doctest.h"
#include "stokes/errors.hpp"
#include "stokes/hor.hpp"

#include <cmath>

using namespace stokes;

namespace {
Number q(long p, long d = 1) { return Number(ratio(p, d)); }
PolyQ P(std::initializer_list<long> low_to_high) {
    std::vector<Rational> c;
    for (long x : low_to_high) c.emplace_back(x);
    return PolyQ(c);
}
HorScal scal(int k, std::vector<Number> beta) { return HorScal{k, std::move(beta)}; }
}  // namespace

TEST_CASE("scalar data and polynomials") {
    CHECK(scal_to_poly_exact(gamma_base(2, 2)) == P({-1, 0, 1}));
    CHECK(scal_to_poly_exact(scal(1, {q(1, 3), q(2, 3)})) == P({1, 1, 1}));
    CHECK(scal_to_poly_exact(scal(2, {q(0), q(1, 6), q(1, 2), q(5, 6)})) == P({-1, 1, 0, -1, 1}));
    HorScal back = poly_to_scal(P({-1, 1, 0, -1, 1}), 2);
    CHECK(back.beta == std::vector<Number>{q(0), q(1, 6), q(1, 2), q(5, 6)});
    CHECK_THROWS_AS(validate(scal(1, {q(2, 3), q(1, 3)})), Error);
}

TEST_CASE("banded matrices") {
    auto h = poly_to_matrix(P({1, 1, 1}), 1);
    CHECK(h.S(0, 1) == 1);
    auto h3 = poly_to_matrix(P({1, 2, 2, 1}), 1);
    CHECK(h3.S(0, 1) == 2);
    CHECK(h3.S(0, 2) == 2);
    CHECK(h3.S(1, 2) == 2);
    auto e2 = poly_to_matrix(P({-1, 0, 1}), 2);
    CHECK(e2.S == MatrixQ::identity(2));
    MatrixQ r = r_matrix(e2);
    CHECK(r(0, 1) == 1);
    CHECK(r(1, 0) == 1);
    CHECK(r(0, 0) == 0);
    auto rec = hor_from_matrix(h3.S);
    REQUIRE(rec.has_value());
    CHECK(rec->p == h3.p);
}

TEST_CASE("recipe spectrum") {
    auto g = recipe_spectrum(gamma_base(1, 5));
    for (const auto& a : g) CHECK(a == q(0));
    CHECK(recipe_spectrum(scal(1, {q(1, 3), q(2, 3)})) == std::vector<Number>{q(1, 6), q(-1, 6)});
    CHECK(recipe_spectrum(scal(2, {q(0), q(1, 6), q(1, 2), q(5, 6)})) ==
          std::vector<Number>{q(0), q(-1, 3), q(0), q(1, 3)});
}

TEST_CASE("recipe spectral pairs") {
    Spp zeros;
    zeros.add({q(0), 1}, 4);
    CHECK(recipe_spectral_pairs(gamma_base(1, 4)) == zeros);
    CHECK(recipe_spectral_pairs(scal(1, {q(0), q(1)})) == Spp{{q(-1, 2), 2}, {q(1, 2), 0}});
    CHECK(recipe_spectral_pairs(scal(2, {q(0), q(0), q(1)})) == Spp{{q(-1), 3}, {q(0), 1}, {q(1), -1}});
}

TEST_CASE("realizability") {
    auto w = is_realizable_spectrum({q(0), q(0), q(0)}, 3, 1);
    CHECK(w.has_value());
    CHECK(!is_realizable_spectrum({q(-2), q(2)}, 2, 1).has_value());
    auto v = is_realizable_spectrum({q(-1, 6), q(1, 6)}, 2, 1);
    REQUIRE(v.has_value());
    CHECK(*v == std::vector<Number>{q(1, 6), q(-1, 6)});
    CHECK(max_gap({q(-1, 2), q(1, 2)}) == q(1));
}

TEST_CASE("negation transform") {
    auto [p1, k1] = negate_poly_transform(P({1, 1, 1}), 1);
    CHECK(p1 == P({1, -1, 1}));
    CHECK(k1 == 1);
    CHECK(same_multiset(recipe_spectrum(poly_to_scal(p1, k1)), {q(1, 6), q(-1, 6)}));
    auto [p2, k2] = negate_poly_transform(P({-1, 1, 0, -1, 1}), 2);
    CHECK(p2 == P({-1, -1, 0, 1, 1}));
    CHECK(k2 == 2);
    auto [p3, k3] = negate_poly_transform(P({-1, 1}), 2);
    CHECK(p3 == P({1, 1}));
    CHECK(k3 == 1);
}

TEST_CASE("power identity") {
    for (long a : {-2, -1, 0, 1, 2}) CHECK(verify_power_identity(poly_to_matrix(P({1, a, 1}), 1)).ok());
    CHECK(verify_power_identity(poly_to_matrix(P({-1, 0, 1}), 2)).ok());
    CHECK(verify_power_identity(poly_to_matrix(P({-1, 1, 0, -1, 1}), 2)).ok());
    auto bad = poly_to_matrix(P({1, 1, 1}), 1);
    bad.S(0, 1) = 3;
    CHECK(!verify_power_identity(bad).power_ok);
}

TEST_CASE("factor products") {
    CHECK(pl_factor_product(MatrixQ::identity(3), 1).ok);
    MatrixQ s = MatrixQ::identity(3);
    s(0, 1) = s(0, 2) = s(1, 2) = 1;
    CHECK(pl_factor_product(s, 1).ok);
}

TEST_CASE("enhancement of n=2 matrices") {
    auto generic = hor_enhancement(poly_to_scal(P({1, 1, 1}), 1));
    CHECK(generic.size() == 2);
    for (const auto& e : generic) CHECK(e.phase_ok);
    auto types = enhancement_types(generic);
    REQUIRE(types.size() == 1);
    CHECK(types[0].family == Family::F2complex);
    auto edge = enhancement_types(hor_enhancement(poly_to_scal(P({1, 2, 1}), 1)));
    REQUIRE(edge.size() == 1);
    CHECK(edge[0] == IrrType::f1(-1, 2, 1));
    auto zero = enhancement_types(hor_enhancement(poly_to_scal(P({1, 0, 1}), 1)));
    CHECK(same_types(zero, {IrrType::f1(1, 1, 1), IrrType::f1(1, 1, 1)}));
}

TEST_CASE("signature law") {
    auto id = is_signature(gamma_base(1, 4), MatrixQ::identity(4));
    CHECK(id.predicted == Inertia{4, 0, 0});
    CHECK(id.agree());
    auto a1 = poly_to_matrix(P({1, 1, 1}), 1);
    auto s = is_signature(poly_to_scal(a1.p, 1), a1.S);
    CHECK(s.computed == Inertia{2, 0, 0});
    CHECK(s.agree());
    auto p3 = poly_to_matrix(P({1, 3, 3, 1}), 1);
    auto t = is_signature(poly_to_scal(p3.p, 1), p3.S);
    CHECK(t.predicted.pos == 1);
    CHECK(t.agree());
}

TEST_CASE("dual basis") {
    auto d = dual_basis_matrix(poly_to_matrix(P({1, -1, 1}), 1));
    CHECK(d.shape_ok);
    CHECK(d.matrix(0, 0) == 0);
    CHECK(d.matrix(0, 1) == -1);
    CHECK(d.matrix(1, 0) == 1);
    CHECK(d.matrix(1, 1) == 1);
    auto e = dual_basis_matrix(poly_to_matrix(P({-1, 0, 1}), 2));
    CHECK(e.matrix(0, 1) == 1);
    CHECK(e.matrix(1, 0) == 1);
    CHECK(e.matrix(0, 0) == 0);
}

TEST_CASE("sampling stays in the family") {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 6; ++n)
        for (int k : {1, 2}) {
            PolyQ p = random_cyclotomic_hor(n, k, rng);
            CHECK(p.degree() == n);
            CHECK(palindrome_class(p).k == k);
            HorScal b = random_hor_scal(n, k, rng);
            CHECK_NOTHROW(validate(b));
        }
}
