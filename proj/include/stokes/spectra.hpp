#pragma once

#include "stokes/number.hpp"

#include <string>
#include <vector>

namespace stokes {

struct SpectralPair {
    Number alpha;
    int level = 0;
    friend bool operator==(const SpectralPair& a, const SpectralPair& b) {
        return a.level == b.level && a.alpha == b.alpha;
    }
};

// Multiset of spectral pairs, kept sorted by (level, alpha).
class Spp {
public:
    struct Entry {
        SpectralPair pair;
        int mult;
    };

    Spp() = default;
    Spp(std::initializer_list<SpectralPair> pairs);

    void add(const SpectralPair& p, int mult = 1);
    void add(const Spp& other);
    int size() const { return static_cast<int>(pairs_.size()); }
    bool empty() const { return pairs_.empty(); }
    bool exact() const;
    const std::vector<SpectralPair>& pairs() const { return pairs_; }
    std::vector<Entry> entries() const;
    // Spectral numbers only, ascending.
    std::vector<Number> alphas() const;

    friend bool operator==(const Spp& a, const Spp& b);
    friend bool operator!=(const Spp& a, const Spp& b) { return !(a == b); }

    std::string str() const;

private:
    std::vector<SpectralPair> pairs_;
};

struct SppLadder {
    Number alpha;  // first spectral number
    int m = 1;     // center
    int l = 0;     // length minus one
    friend bool operator==(const SppLadder& a, const SppLadder& b) {
        return a.m == b.m && a.l == b.l && a.alpha == b.alpha;
    }
};

Spp ladder_members(const SppLadder& ladder);

struct PartnerInfo {
    SppLadder partner;
    Number distance;  // 2 alpha + l + 1 - m
    bool single;
};

PartnerInfo partner_ladder(const SppLadder& ladder);

enum class Kleinian { Pi1, Pi2, Pi3 };

SpectralPair kleinian_image(const SpectralPair& p, int m, Kleinian which);

struct LadderEntry {
    enum class Role { Single, Paired, Unpaired };
    SppLadder ladder;
    Role role = Role::Single;
    int partner = -1;  // index of the partner entry when Paired
};

std::vector<LadderEntry> decompose_into_ladders(const Spp& s, int m);

// Subtracts (d_alpha, d_level) from every pair.
Spp spp_shift(const Spp& s, const Number& d_alpha, int d_level);
bool spp_mod2_equal(const Spp& a, const Spp& b);

// Multiset equality of plain spectra.
bool same_multiset(std::vector<Number> a, std::vector<Number> b);
void sort_numbers(std::vector<Number>& v);

}  // namespace stokes
