#include "doctest.h"
#include "stokes/errors.hpp"
#include "stokes/spectra.hpp"

using namespace stokes;

namespace {
Number q(long p, long d = 1) { return Number(ratio(p, d)); }
}  // namespace

TEST_CASE("ladder members") {
    CHECK(ladder_members({q(-1, 2), 1, 1}) == Spp{{q(-1, 2), 2}, {q(1, 2), 0}});
    CHECK(ladder_members({q(-1), 1, 2}) == Spp{{q(-1), 3}, {q(0), 1}, {q(1), -1}});
    CHECK(ladder_members({q(2, 7), 5, 0}) == Spp{{q(2, 7), 5}});
}

TEST_CASE("partner ladders") {
    auto self = partner_ladder({q(-1, 2), 1, 1});
    CHECK(self.single);
    CHECK(self.distance == q(0));
    auto p = partner_ladder({q(-1, 3), 1, 0});
    CHECK(!p.single);
    CHECK(p.partner.alpha == q(1, 3));
    CHECK(p.distance == q(-2, 3));
    CHECK(partner_ladder({q(0), 1, 0}).single);
}

TEST_CASE("Kleinian images") {
    CHECK(kleinian_image({q(0), 3}, 3, Kleinian::Pi3) == SpectralPair{q(0), 3});
    CHECK(kleinian_image({q(-1, 2), 2}, 1, Kleinian::Pi3) == SpectralPair{q(1, 2), 0});
    // pi1 of ((m-1)/2 + a, m + k) is ((m-1)/2 - a, m - k)
    CHECK(kleinian_image({q(1) + q(1, 5), 5}, 3, Kleinian::Pi1) == SpectralPair{q(1) - q(1, 5), 1});
}

TEST_CASE("ladder decomposition") {
    Spp s{{q(-1, 2), 2}, {q(1, 2), 0}, {q(0), 1}};
    auto d = decompose_into_ladders(s, 1);
    REQUIRE(d.size() == 2);
    int singles = 0;
    for (const auto& e : d) {
        CHECK(e.role == LadderEntry::Role::Single);
        if (e.ladder == SppLadder{q(-1, 2), 1, 1} || e.ladder == SppLadder{q(0), 1, 0}) ++singles;
    }
    CHECK(singles == 2);
    Spp zeros;
    zeros.add({q(0), 1}, 5);
    auto z = decompose_into_ladders(zeros, 1);
    CHECK(z.size() == 5);
    CHECK_THROWS_WITH_AS(decompose_into_ladders(Spp{{q(0), 2}}, 1), doctest::Contains("NotLadderComposed"), Error);
}

TEST_CASE("shifts and mod 2 equality") {
    Spp a2{{q(-2, 3), 1}, {q(-1, 3), 1}};
    CHECK(spp_shift(a2, q(-1, 2), 0) == Spp{{q(-1, 6), 1}, {q(1, 6), 1}});
    CHECK(spp_mod2_equal(Spp{{q(0), 1}}, Spp{{q(2), 1}}));
    CHECK(!spp_mod2_equal(Spp{{q(0), 1}}, Spp{{q(1), 1}}));
    CHECK(same_multiset({q(1), q(2)}, {q(2), q(1)}));
}
