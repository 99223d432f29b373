#include "stokes/serialize.hpp"
#include "stokes/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace stokes {

namespace {

template <class T>
json encode_list(const std::vector<T>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(encode(x));
    return a;
}

json encode_numbers(const std::vector<Number>& v) { return encode_list(v); }

}  // namespace

json encode(const Number& x) {
    if (x.exact()) return to_string(x.rational());
    return x.value();
}

json encode(const Rational& x) { return to_string(x); }

json encode(const MatrixQ& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json encode(const MatrixD& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

json encode(const PolyQ& p) { return encode_list(p.coeffs()); }

json encode(const Inertia& in) { return json::array({in.pos, in.zero, in.neg}); }

json encode(const Spp& s) {
    json a = json::array();
    auto entries = s.entries();
    std::stable_sort(entries.begin(), entries.end(), [](const Spp::Entry& x, const Spp::Entry& y) {
        if (x.pair.alpha != y.pair.alpha) return x.pair.alpha < y.pair.alpha;
        return x.pair.level < y.pair.level;
    });
    for (const auto& e : entries)
        a.push_back({{"alpha", encode(e.pair.alpha)}, {"level", e.pair.level}, {"mult", e.mult}});
    return a;
}

json encode(const SppLadder& l) { return {{"alpha", encode(l.alpha)}, {"m", l.m}, {"l", l.l}}; }

json encode(const IrrType& t) {
    json j = {{"family", family_name(t.family)}, {"n", t.size}, {"str", t.str()}};
    switch (t.family) {
        case Family::F1:
            j["lambda"] = encode(t.lambda);
            j["eps"] = t.eps;
            break;
        case Family::F2real:
            j["lambda"] = encode(t.lambda);
            break;
        case Family::F2complex:
            j["lambda"] = encode(t.lambda);
            j["zeta"] = encode(t.zeta);
            break;
        default:
            j["lambda"] = json::array({t.lambda_c.real(), t.lambda_c.imag()});
    }
    return j;
}

json encode(const TypeList& t) {
    TypeList s = t;
    sort_types(s);
    return encode_list(s);
}

json encode(const HorScal& b) { return {{"k", b.k}, {"beta", encode_numbers(b.beta)}}; }

json encode(const HorMatrixQ& h) { return {{"k", h.k}, {"p", encode(h.p)}, {"S", encode(h.S)}}; }

json encode(const KappaGroup& g) {
    json idx = json::array();
    for (int i : g.indices) idx.push_back(i + 1);
    return {{"kappa", encode(g.kappa)}, {"indices", idx}, {"ladder", encode(g.ladder)}};
}

json encode(const EnhancementEntry& e) {
    return {{"kappa", encode(e.kappa)},       {"ladder", encode(e.ladder)},
            {"types", encode(e.types)},       {"representative", e.representative},
            {"phase_ok", e.phase_ok},         {"phase_error", e.phase_error}};
}

json encode(const Classification& c) {
    json j = {{"classified", c.classified}, {"types", encode(c.types)}};
    if (!c.classified) j["diagnostic"] = c.diagnostic;
    else j["summary"] = types_str(c.types);
    return j;
}

json encode(const ChainSing& c) {
    json w = json::array();
    for (const auto& x : c.w) w.push_back(to_string(x));
    return {{"a", c.a}, {"r", c.r}, {"mu_k", c.mu}, {"w", w}, {"mu", c.milnor}};
}

json encode(const ShiftReport& r) {
    return {{"holds", r.holds},
            {"sp_stokes", encode_list(r.sp_stokes)},
            {"sp_f", encode_list(r.sp_f)},
            {"shift", to_string(r.shift)},
            {"basis_route", r.basis_route},
            {"chain_order_ok", r.chain_order_ok}};
}

json encode(const Reduction& r) {
    return {{"suspensions", r.suspensions}, {"shift", to_string(r.shift)}, {"reduced", r.reduced}};
}

json encode(const ChainGraph& g) {
    return {{"vertices", g.vertices}, {"labels", g.labels}, {"increments", encode_list(g.increments)}};
}

json encode(const Class3& c) {
    return {{"stratum", stratum_name(c.stratum)}, {"f", encode(c.f)},
            {"types", encode(c.types)},           {"charpoly", encode_numbers(c.charpoly)},
            {"is_signature", encode(c.is_signature)}, {"charpoly_ok", c.charpoly_ok}};
}

json encode(const Solve2& s) {
    return {{"beta1", encode(s.beta1)}, {"alpha1", encode(s.alpha1)}, {"spp", encode(s.spp)}, {"types", encode(s.types)}};
}

json encode(const Line3& l) {
    return {{"beta", encode_numbers(l.beta)}, {"alpha", encode_numbers(l.alpha)}, {"spp", encode(l.spp)}};
}

json encode(const OrbitReport& r) {
    json nodes = json::array();
    for (const auto& n : r.nodes) nodes.push_back({{"S", encode(n.S)}, {"depth", n.depth}, {"moves", n.moves}});
    return {{"size", r.nodes.size()},
            {"exhausted", r.exhausted},
            {"depth_reached", r.depth_reached},
            {"charpoly_invariant", r.charpoly_invariant},
            {"nodes", nodes}};
}

json encode(const StratumReport& r) {
    json groups = json::array();
    for (const auto& g : r.groups) {
        json sp = json::array();
        for (const auto& s : g.spectra) sp.push_back(encode_numbers(s));
        groups.push_back({{"charpoly", encode(g.charpoly)}, {"members", g.members}, {"spectra", sp}, {"seifert", g.seifert},
                          {"agree", g.agree}, {"spectra_differ", g.spectra_differ}});
    }
    return {{"groups", groups}, {"violations", r.violations}, {"collisions", json::array()}};
}

json encode(const AlphaPaths& p) { return {{"r", p.r}, {"alpha", p.alpha}, {"endpoint", p.endpoint()}}; }

json encode(const TrackResult& r) {
    json col = json::array();
    for (const auto& c : r.collisions) col.push_back({{"r", c.r}, {"i", c.i + 1}, {"j", c.j + 1}});
    return {{"paths", encode(r.paths)}, {"collisions", col}, {"ambiguous", r.ambiguous}};
}

Rational decode_rational(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    fail("BadInput", "expected an exact number, got " + j.dump());
}

Number decode_number(const json& j) {
    if (j.is_string() || j.is_number_integer()) return Number(decode_rational(j));
    if (j.is_number()) return Number(j.get<double>());
    fail("BadInput", "expected a number, got " + j.dump());
}

Spp decode_spp(const json& j) {
    Spp s;
    for (const auto& e : j) s.add({decode_number(e.at("alpha")), e.at("level").get<int>()}, e.value("mult", 1));
    return s;
}

SppLadder decode_ladder(const json& j) {
    return {decode_number(j.at("alpha")), j.at("m").get<int>(), j.at("l").get<int>()};
}

IrrType decode_type(const json& j) {
    Family f = family_from_name(j.at("family").get<std::string>());
    int size = j.at("n").get<int>();
    auto sign = [&] { return decode_number(j.at("lambda")).is_zero() ? 1 : -1; };
    switch (f) {
        case Family::F1: return IrrType::f1(sign(), size, j.at("eps").get<int>());
        case Family::F2real: return IrrType::f2real(sign(), size);
        case Family::F2complex:
            return IrrType::f2complex(decode_number(j.at("lambda")), size, decode_number(j.at("zeta")));
        default: {
            const json& l = j.at("lambda");
            return IrrType::hyperbolic({l.at(0).get<double>(), l.at(1).get<double>()}, size);
        }
    }
}

TypeList decode_types(const json& j) {
    TypeList t;
    for (const auto& e : j) t.push_back(decode_type(e));
    return t;
}

HorScal decode_scal(const json& j) {
    HorScal b;
    b.k = j.at("k").get<int>();
    for (const auto& x : j.at("beta")) b.beta.push_back(decode_number(x));
    return b;
}

PolyQ decode_poly(const json& j) {
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(decode_rational(x));
    return PolyQ(c);
}

HorMatrixQ decode_hor_matrix(const json& j) {
    PolyQ p = decode_poly(j.at("p"));
    return poly_to_matrix(p, j.at("k").get<int>());
}

MatrixFile decode_matrix(const json& j) {
    const json& rows = j.is_object() ? j.at("entries") : j;
    int n = static_cast<int>(rows.size());
    if (j.is_object() && j.contains("n") && j.at("n").get<int>() != n) fail("BadInput", "n disagrees with the entries");
    MatrixFile f;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) fail("BadInput", "matrix is not square");
        for (const auto& x : row)
            if (!(x.is_string() || x.is_number_integer())) f.exact = false;
    }
    f.d = MatrixD(n, n);
    if (f.exact) f.q = MatrixQ(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Number x = decode_number(rows[i][k]);
            f.d(i, k) = x.value();
            if (f.exact) f.q(i, k) = x.rational();
        }
    return f;
}

json encode_matrix_file(const MatrixQ& m) { return {{"n", m.rows()}, {"entries", encode(m)}}; }

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("BadInput", "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        fail("BadInput", path + ": " + e.what());
    }
}

MatrixFile read_matrix_file(const std::string& path) { return decode_matrix(read_json_file(path)); }

}  // namespace stokes
