#include "stokes/acceptance.hpp"
#include "stokes/cli.hpp"
#include "stokes/errors.hpp"
#include "stokes/serialize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace stokes;

namespace {

Number to_number(const std::string& s) { return Number(parse_rational(s)); }

std::vector<Number> to_numbers(const std::vector<std::string>& v) {
    std::vector<Number> out;
    for (const auto& s : v) out.push_back(to_number(s));
    return out;
}

PolyQ to_poly(const std::vector<std::string>& v) {
    std::vector<Rational> c;
    for (const auto& s : v) c.push_back(parse_rational(s));
    return PolyQ(c);
}

MatrixFile to_matrix(const std::string& entries_json) { return decode_matrix(json::parse(entries_json)); }

std::string out(const json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spectral numbers, Seifert forms and chain type singularities";

    static py::exception<Error> stokes_error(m, "StokesError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(stokes_error, (e.code() + "\t" + e.what()).c_str());
        }
    });

    m.def("hor_spectrum", [](int k, const std::vector<std::string>& beta) {
        HorScal b{k, to_numbers(beta)};
        validate(b);
        json j = encode(b);
        j["spectrum"] = json::array();
        for (const auto& a : recipe_spectrum(b)) j["spectrum"].push_back(encode(a));
        j["spp"] = encode(recipe_spectral_pairs(b));
        return out(j);
    });
    m.def("hor_matrix", [](const std::vector<std::string>& poly, int k) {
        PolyQ p = to_poly(poly);
        if (k == 0) k = palindrome_class(p).k;
        if (k == 0) fail("NotInFamily", "polynomial is neither palindromic nor antipalindromic");
        auto h = poly_to_matrix(p, k);
        json j = encode(h);
        j["power_identity"] = verify_power_identity(h).ok();
        return out(j);
    }, py::arg("poly"), py::arg("k") = 0);
    m.def("classify", [](const std::string& gram) {
        MatrixFile f = to_matrix(gram);
        return out(encode(f.exact ? classify(f.q) : classify(f.d)));
    });
    m.def("chain_verify", [](const std::vector<long>& a) {
        json j = encode(verify_spectrum_shift(a));
        j["a"] = a;
        j["mu"] = chain_invariants(a).milnor;
        return out(j);
    });
    m.def("chain_invariants", [](const std::vector<long>& a) { return out(encode(chain_invariants(a))); });
    m.def("reduce_chain", [](const std::vector<long>& a) { return out(encode(reduce_chain(a))); });
    m.def("qh_spectrum", [](const std::vector<std::string>& w) {
        std::vector<Rational> ws;
        for (const auto& s : w) ws.push_back(parse_rational(s));
        json j = json::array();
        for (const auto& a : qh_spectrum(ws)) j.push_back(to_string(a));
        return out(j);
    });
    m.def("solve2", [](const std::string& a) { return out(encode(solve2(to_number(a)))); });
    m.def("hor1_line3", [](const std::string& p1) { return out(encode(hor1_line3(to_number(p1)))); });
    m.def("classify3", [](const std::vector<std::string>& a) {
        if (a.size() != 3) fail("BadInput", "need three coordinates");
        return out(encode(classify3({to_number(a[0]), to_number(a[1]), to_number(a[2])})));
    });
    m.def("orbit_explore", [](const std::string& s, int depth, int budget) {
        MatrixFile f = to_matrix(s);
        if (!f.exact) fail("BadInput", "orbit exploration needs rational entries");
        return out(encode(orbit_explore(f.q, depth, budget)));
    }, py::arg("matrix"), py::arg("depth") = 6, py::arg("budget") = 100000);
    m.def("stratum_experiment", [](int n) { return out(encode(stratum_experiment(cyclotomic_hor_pool(n)))); });
    m.def("run_acceptance", [](const std::vector<int>& only) {
        json j = json::array();
        py::gil_scoped_release release;
        for (const auto& r : run_acceptance(only))
            j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass()}, {"seconds", r.seconds}, {"detail", r.detail}});
        return out(j);
    }, py::arg("only") = std::vector<int>{});
    m.def("cli", [](const std::vector<std::string>& args) {
        std::vector<std::string> full{"spectral-stokes"};
        full.insert(full.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : full) argv.push_back(a.c_str());
        std::ostringstream o, e;
        int code = dispatch(static_cast<int>(argv.size()), argv.data(), o, e);
        return py::make_tuple(code, o.str(), e.str());
    });
}
