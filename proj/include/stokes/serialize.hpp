#pragma once

#include "stokes/chain.hpp"
#include "stokes/hor.hpp"
#include "stokes/irrtype.hpp"
#include "stokes/lowdim.hpp"
#include "stokes/orbit.hpp"
#include "stokes/seifert.hpp"
#include "stokes/tracking.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

namespace stokes {

using json = nlohmann::json;

// Exact values print as "p/q" strings, floats as JSON numbers.
json encode(const Number& x);
json encode(const Rational& x);
json encode(const MatrixQ& m);
json encode(const MatrixD& m);
json encode(const PolyQ& p);
json encode(const Inertia& in);
json encode(const Spp& s);
json encode(const SppLadder& l);
json encode(const IrrType& t);
json encode(const TypeList& t);
json encode(const HorScal& b);
json encode(const HorMatrixQ& h);
json encode(const KappaGroup& g);
json encode(const EnhancementEntry& e);
json encode(const Classification& c);
json encode(const ChainSing& c);
json encode(const ShiftReport& r);
json encode(const Reduction& r);
json encode(const ChainGraph& g);
json encode(const Class3& c);
json encode(const Solve2& s);
json encode(const Line3& l);
json encode(const OrbitReport& r);
json encode(const StratumReport& r);
json encode(const AlphaPaths& p);
json encode(const TrackResult& r);

Number decode_number(const json& j);
Rational decode_rational(const json& j);
Spp decode_spp(const json& j);
SppLadder decode_ladder(const json& j);
IrrType decode_type(const json& j);
TypeList decode_types(const json& j);
HorScal decode_scal(const json& j);
PolyQ decode_poly(const json& j);
HorMatrixQ decode_hor_matrix(const json& j);

// {"n": int, "entries": [[...]]}, entries as "p/q" strings or numbers.
struct MatrixFile {
    bool exact = true;
    MatrixQ q;
    MatrixD d;
};

MatrixFile decode_matrix(const json& j);
json encode_matrix_file(const MatrixQ& m);
MatrixFile read_matrix_file(const std::string& path);
json read_json_file(const std::string& path);

// Rounds every float in j to the given number of significant digits.
template <class J>
void round_floats(J& j, int precision) {
    if (j.is_number_float()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", precision, j.template get<double>());
        j = std::strtod(buf, nullptr);
    } else if (j.is_structured()) {
        for (auto& x : j) round_floats(x, precision);
    }
}

}  // namespace stokes
