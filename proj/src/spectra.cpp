#include "stokes/spectra.hpp"
#include "stokes/errors.hpp"

#include <algorithm>

namespace stokes {

namespace {

bool number_less(const Number& a, const Number& b) {
    if (a.exact() && b.exact()) return a.rational() < b.rational();
    return a.value() < b.value();
}

bool pair_less(const SpectralPair& a, const SpectralPair& b) {
    if (a.level != b.level) return a.level < b.level;
    return number_less(a.alpha, b.alpha);
}

std::string pair_str(const SpectralPair& p) { return "(" + p.alpha.str() + "," + std::to_string(p.level) + ")"; }

}  // namespace

void sort_numbers(std::vector<Number>& v) { std::sort(v.begin(), v.end(), number_less); }

bool same_multiset(std::vector<Number> a, std::vector<Number> b) {
    if (a.size() != b.size()) return false;
    sort_numbers(a);
    sort_numbers(b);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Spp::Spp(std::initializer_list<SpectralPair> pairs) {
    for (const auto& p : pairs) add(p);
}

void Spp::add(const SpectralPair& p, int mult) {
    for (int i = 0; i < mult; ++i) {
        auto it = std::upper_bound(pairs_.begin(), pairs_.end(), p, pair_less);
        pairs_.insert(it, p);
    }
}

void Spp::add(const Spp& other) {
    for (const auto& p : other.pairs_) add(p);
}

bool Spp::exact() const {
    return std::all_of(pairs_.begin(), pairs_.end(), [](const SpectralPair& p) { return p.alpha.exact(); });
}

std::vector<Spp::Entry> Spp::entries() const {
    std::vector<Entry> out;
    for (const auto& p : pairs_) {
        if (!out.empty() && out.back().pair == p) ++out.back().mult;
        else out.push_back({p, 1});
    }
    return out;
}

std::vector<Number> Spp::alphas() const {
    std::vector<Number> a;
    for (const auto& p : pairs_) a.push_back(p.alpha);
    sort_numbers(a);
    return a;
}

bool operator==(const Spp& a, const Spp& b) {
    if (a.pairs_.size() != b.pairs_.size()) return false;
    for (size_t i = 0; i < a.pairs_.size(); ++i)
        if (!(a.pairs_[i] == b.pairs_[i])) return false;
    return true;
}

std::string Spp::str() const {
    std::string s = "{";
    bool first = true;
    for (const auto& e : entries()) {
        if (!first) s += ", ";
        first = false;
        if (e.mult > 1) s += std::to_string(e.mult) + "*";
        s += pair_str(e.pair);
    }
    return s + "}";
}

Spp ladder_members(const SppLadder& ladder) {
    Spp s;
    for (int k = 0; k <= ladder.l; ++k) s.add({ladder.alpha + Number(k), ladder.m + ladder.l - 2 * k});
    return s;
}

PartnerInfo partner_ladder(const SppLadder& ladder) {
    PartnerInfo info;
    info.partner = {Number(ladder.m - ladder.l - 1) - ladder.alpha, ladder.m, ladder.l};
    info.distance = Number(2) * ladder.alpha + Number(ladder.l + 1 - ladder.m);
    info.single = info.distance.is_zero();
    return info;
}

SpectralPair kleinian_image(const SpectralPair& p, int m, Kleinian which) {
    int k = p.level - m;
    switch (which) {
        case Kleinian::Pi1: return {Number(m - 1) - p.alpha, m - k};
        case Kleinian::Pi2: return {Number(m - 1 - k) - p.alpha, m + k};
        case Kleinian::Pi3: return {p.alpha + Number(k), m - k};
    }
    return p;
}

std::vector<LadderEntry> decompose_into_ladders(const Spp& s, int m) {
    std::vector<SpectralPair> rest = s.pairs();
    std::vector<LadderEntry> out;
    while (!rest.empty()) {
        // Highest level, then smallest alpha: this pair must start a ladder.
        auto top = std::max_element(rest.begin(), rest.end(), [](const SpectralPair& a, const SpectralPair& b) {
            if (a.level != b.level) return a.level < b.level;
            return number_less(b.alpha, a.alpha);
        });
        SpectralPair head = *top;
        int l = head.level - m;
        if (l < 0) fail("NotLadderComposed", "pair " + pair_str(head) + " lies below the center " + std::to_string(m));
        for (int k = 0; k <= l; ++k) {
            SpectralPair want{head.alpha + Number(k), head.level - 2 * k};
            auto it = std::find(rest.begin(), rest.end(), want);
            if (it == rest.end())
                fail("NotLadderComposed", "pair " + pair_str(head) + " cannot be extended: missing " + pair_str(want));
            rest.erase(it);
        }
        out.push_back({SppLadder{head.alpha, m, l}, LadderEntry::Role::Single, -1});
    }
    for (size_t i = 0; i < out.size(); ++i) {
        if (out[i].partner >= 0) continue;
        PartnerInfo info = partner_ladder(out[i].ladder);
        if (info.single) {
            out[i].role = LadderEntry::Role::Single;
            continue;
        }
        out[i].role = LadderEntry::Role::Unpaired;
        for (size_t j = i + 1; j < out.size(); ++j) {
            if (out[j].partner >= 0 || !(out[j].ladder == info.partner)) continue;
            out[i].role = out[j].role = LadderEntry::Role::Paired;
            out[i].partner = static_cast<int>(j);
            out[j].partner = static_cast<int>(i);
            break;
        }
    }
    return out;
}

Spp spp_shift(const Spp& s, const Number& d_alpha, int d_level) {
    Spp out;
    for (const auto& p : s.pairs()) out.add({p.alpha - d_alpha, p.level - d_level});
    return out;
}

bool spp_mod2_equal(const Spp& a, const Spp& b) {
    Spp ra, rb;
    for (const auto& p : a.pairs()) ra.add({p.alpha.mod(Number(2)), p.level});
    for (const auto& p : b.pairs()) rb.add({p.alpha.mod(Number(2)), p.level});
    return ra == rb;
}

}  // namespace stokes
