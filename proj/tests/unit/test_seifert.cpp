#include "doctest.h"
#include "stokes/errors.hpp"
#include "stokes/hor.hpp"
#include "stokes/lowdim.hpp"
#include "stokes/seifert.hpp"

using namespace stokes;

namespace {
Number q(long p, long d = 1) { return Number(ratio(p, d)); }
MatrixQ s2(long a) {
    MatrixQ s = MatrixQ::identity(2);
    s(0, 1) = a;
    return s;
}
}  // namespace

TEST_CASE("monodromy and forms") {
    auto f = monodromy_and_forms(MatrixQ::identity(3));
    CHECK(f.M == MatrixQ::identity(3));
    CHECK(f.Is == MatrixQ::identity(3) + MatrixQ::identity(3));
    CHECK(f.Ia == MatrixQ(3, 3));
    auto g = monodromy_and_forms(MatrixQ(s2(3).transpose()));
    CHECK(g.M(0, 0) == 1 - 9);
    CHECK(g.M(0, 1) == -3);
    CHECK(g.M(1, 0) == 3);
    CHECK(g.M(1, 1) == 1);
}

TEST_CASE("classification of small Gram matrices") {
    auto e3 = classify(MatrixQ::identity(3));
    REQUIRE(e3.classified);
    CHECK(same_types(e3.types, TypeList(3, IrrType::f1(1, 1, 1))));
    auto exc = classify(MatrixQ(s3_matrix(std::array<Rational, 3>{2, 2, 2}).transpose()));
    REQUIRE(exc.classified);
    CHECK(same_types(exc.types, {IrrType::f1(1, 1, 1), IrrType::f2real(-1, 1)}));
    for (long a : {-2, 2}) {
        auto c = classify(MatrixQ(s2(a).transpose()));
        REQUIRE(c.classified);
        CHECK(same_types(c.types, {IrrType::f1(-1, 2, 1)}));
    }
    auto numeric = classify(to_double(MatrixQ(s2(1).transpose())));
    REQUIRE(numeric.classified);
    CHECK(same_types(numeric.types, classify(MatrixQ(s2(1).transpose())).types));
}

TEST_CASE("signature table") {
    CHECK(type_signature(IrrType::f1(1, 1, 1)) == Inertia{1, 0, 0});
    CHECK(type_signature(IrrType::f2real(-1, 1)) == Inertia{0, 2, 0});
    CHECK(type_signature(IrrType::f1(-1, 2, 1)) == Inertia{1, 1, 0});
}

TEST_CASE("enhancement checks") {
    SppLadder l{q(-1, 2), 1, 1};
    std::vector<EnhancementBlock> blocks{{l, false, IrrType::f1(-1, 2, 1), 1}};
    CHECK(check_enhancement(MatrixQ(s2(2).transpose()), blocks, false));
    CHECK(!check_enhancement(MatrixQ(s2(2).transpose()), blocks, true));
    std::vector<EnhancementBlock> one{{SppLadder{q(0), 1, 0}, false, IrrType::f1(1, 1, 1), 1}};
    CHECK(check_enhancement(MatrixQ::identity(1), one, false));
    CHECK(check_enhancement(MatrixQ::identity(1), one, true));
}

TEST_CASE("classes from spectral pairs") {
    CHECK(same_types(class_from_spp(Spp{{q(-1, 2), 2}, {q(1, 2), 0}}, 1, false), {IrrType::f1(-1, 2, 1)}));
    Spp zeros;
    zeros.add({q(0), 1}, 3);
    CHECK(same_types(class_from_spp(zeros, 1, false), TypeList(3, IrrType::f1(1, 1, 1))));
    Spp shifted{{q(-1, 2), 2}, {q(5, 2), 0}};
    CHECK(same_types(class_from_spp(shifted, 1, false), {IrrType::f1(-1, 2, 1)}));
}

TEST_CASE("isomorphism") {
    auto same = iso_equal(MatrixQ(s2(1).transpose()), MatrixQ(s2(-1).transpose()));
    REQUIRE(same.has_value());
    CHECK(*same);
    auto differ = iso_equal(MatrixQ(s2(1).transpose()), MatrixQ::identity(2));
    REQUIRE(differ.has_value());
    CHECK(!*differ);
}

TEST_CASE("semiorthogonal splittings") {
    MatrixQ s = s2(1);
    MatrixQ g = s.transpose();
    auto std_split = splitting_from_basis(g, MatrixQ::identity(2));
    CHECK(std_split.eps == std::vector<int>{1, 1});
    MatrixQ flipped = MatrixQ::identity(2);
    flipped(1, 1) = -1;
    auto f = splitting_from_basis(g, flipped);
    CHECK(same_splitting(f.basis, std_split.basis));
    MatrixQ flag = flag_from_splitting(std_split);
    CHECK(same_splitting(splitting_from_flag(g, flag).basis, std_split.basis));
    MatrixQ hyp(2, 2);
    hyp(0, 1) = 1;
    hyp(1, 0) = 1;
    CHECK_THROWS_WITH_AS(splitting_from_flag(hyp, MatrixQ::identity(2)), doctest::Contains("DegenerateFlag"), Error);
}
