#include "stokes/cli.hpp"
#include "stokes/acceptance.hpp"
#include "stokes/errors.hpp"
#include "stokes/serialize.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <ostream>
#include <random>
#include <sstream>

namespace stokes {

namespace {

using ojson = nlohmann::ordered_json;

struct Config {
    std::string mode;  // empty until resolved
    double tol = 1e-9;
    unsigned seed = 0;
    std::string output = "json";
    int precision = 12;

    bool exact() const { return mode != "numeric"; }
};

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

Number parse_number(const std::string& s, const Config& cfg) {
    Rational q = parse_rational(s);
    return cfg.exact() ? Number(q) : Number(to_double(q));
}

std::vector<Number> parse_numbers(const std::string& s, const Config& cfg) {
    std::vector<Number> out;
    for (const auto& x : split(s)) out.push_back(parse_number(x, cfg));
    return out;
}

PolyQ parse_poly(const std::string& s) {
    std::vector<Rational> c;
    for (const auto& x : split(s)) c.push_back(parse_rational(x));
    return PolyQ(c);
}

int infer_k(const PolyQ& p) {
    auto pc = palindrome_class(p);
    if (pc.k == 0) fail("NotInFamily", "polynomial is neither palindromic nor antipalindromic up to sign");
    return pc.k;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string csv_number(const Number& x, int precision) {
    return x.exact() ? to_string(x.rational()) : x.str(precision);
}

template <class J>
void emit(std::ostream& out, J j, const Config& cfg) {
    round_floats(j, cfg.precision);
    out << j.dump() << '\n';
}

json ladders_json(const Spp& spp) {
    json a = json::array();
    auto entries = decompose_into_ladders(spp, 1);
    for (const auto& e : entries) {
        const char* role = e.role == LadderEntry::Role::Single    ? "single"
                           : e.role == LadderEntry::Role::Paired ? "paired"
                                                                 : "unpaired";
        json l = encode(e.ladder);
        l["role"] = role;
        if (e.partner >= 0) l["partner"] = e.partner;
        a.push_back(l);
    }
    return a;
}

json spectrum_json(const HorScal& b) {
    json j = encode(b);
    j["n"] = b.n();
    j["spectrum"] = json::array();
    for (const auto& a : recipe_spectrum(b)) j["spectrum"].push_back(encode(a));
    Spp spp = recipe_spectral_pairs(b);
    j["spp"] = encode(spp);
    j["ladders"] = ladders_json(spp);
    return j;
}

// ---- hor ----

void hor_spectrum(std::ostream& out, const Config& cfg, int k, const std::string& beta, const std::string& poly) {
    HorScal b;
    if (!poly.empty()) {
        PolyQ p = parse_poly(poly);
        int kk = k ? k : infer_k(p);
        b = cfg.exact() ? poly_to_scal(p, kk) : poly_to_scal(to_double(p), kk, cfg.tol);
    } else {
        b.k = k ? k : 1;
        b.beta = parse_numbers(beta, cfg);
        validate(b);
    }
    emit(out, spectrum_json(b), cfg);
}

void hor_matrix(std::ostream& out, const Config& cfg, int k, const std::string& poly) {
    PolyQ p = parse_poly(poly);
    int kk = k ? k : infer_k(p);
    HorMatrixQ h = poly_to_matrix(p, kk);
    json j = encode(h);
    j["matrix"] = encode_matrix_file(h.S);
    j["power_identity"] = verify_power_identity(h).ok();
    emit(out, j, cfg);
}

void hor_verify(std::ostream& out, const Config& cfg, int n, int samples) {
    if (n < 1 || samples < 0) fail("BadInput", "need n >= 1 and samples >= 0");
    std::mt19937_64 rng(cfg.seed);
    int power_ok = 0, signature_ok = 0, near_wall = 0;
    json failures = json::array();
    for (int i = 0; i < samples; ++i) {
        int k = 1 + (i % 2);
        PolyQ p = random_cyclotomic_hor(n, k, rng);
        if (verify_power_identity(poly_to_matrix(p, k)).ok()) ++power_ok;
        else failures.push_back({{"check", "power_identity"}, {"k", k}, {"p", encode(p)}});
        HorScal b = random_hor_scal(n, k, rng);
        auto sig = is_signature(b, banded_matrix(scal_to_poly_numeric(b)), 1e-6);
        if (sig.agree()) ++signature_ok;
        else if (sig.margin <= 1e-6) ++near_wall;
        else failures.push_back({{"check", "signature"}, {"scal", encode(b)}});
    }
    emit(out,
         json{{"n", n},
              {"samples", samples},
              {"seed", cfg.seed},
              {"power_identity_ok", power_ok},
              {"signature_ok", signature_ok},
              {"signature_near_wall", near_wall},
              {"failures", failures}},
         cfg);
}

void hor_track(std::ostream& out, const Config& cfg, int k, const std::string& poly, const std::string& beta, int steps) {
    HorScal b;
    if (!poly.empty()) {
        PolyQ p = parse_poly(poly);
        b = poly_to_scal(p, k ? k : infer_k(p));
    } else {
        b.k = k ? k : 1;
        b.beta = parse_numbers(beta, cfg);
        validate(b);
    }
    AlphaPaths paths = simplex_path_track(b, steps);
    json j = encode(paths);
    j["spectrum"] = json::array();
    for (const auto& a : recipe_spectrum(b)) j["spectrum"].push_back(encode(a));
    emit(out, j, cfg);
}

// ---- seifert ----

std::string resolve_mode(const Config& cfg, bool exact_flag, bool file_exact) {
    if (!cfg.mode.empty()) return cfg.mode;
    if (exact_flag) return "exact";
    return file_exact ? "exact" : "numeric";
}

void seifert_classify(std::ostream& out, const Config& cfg, const std::string& path, bool exact_flag, bool stokes) {
    MatrixFile f = read_matrix_file(path);
    if (stokes) {
        f.d = f.d.transpose();
        if (f.exact) f.q = f.q.transpose();
    }
    std::string mode = resolve_mode(cfg, exact_flag, f.exact);
    if (mode == "exact" && !f.exact) fail("BadInput", "exact mode needs rational entries; use --mode numeric");
    Classification c = mode == "exact" ? classify(f.q) : classify(f.d, std::max(cfg.tol, 1e-8));
    json j = encode(c);
    j["mode"] = mode;
    emit(out, j, cfg);
}

void seifert_iso(std::ostream& out, const Config& cfg, const std::string& a, const std::string& b) {
    MatrixFile fa = read_matrix_file(a), fb = read_matrix_file(b);
    if (!fa.exact || !fb.exact) fail("BadInput", "isomorphism test needs rational entries");
    auto r = iso_equal(fa.q, fb.q);
    json j;
    if (r) j["iso"] = *r;
    else j["iso"] = nullptr;
    emit(out, j, cfg);
}

// ---- chain ----

ojson verify_json(const std::vector<long>& a) {
    ChainSing c = chain_invariants(a);
    ShiftReport r = verify_spectrum_shift(a);
    json full = encode(r);
    ojson o;
    o["a"] = a;
    o["mu"] = c.milnor;
    o["holds"] = r.holds;
    o["shift"] = full["shift"];
    o["sp_stokes"] = full["sp_stokes"];
    o["sp_f"] = full["sp_f"];
    o["basis_route"] = r.basis_route;
    o["chain_order_ok"] = r.chain_order_ok;
    return o;
}

std::string tuple_csv(const std::vector<long>& a) {
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return csv_quote(s);
}

void chain_grid(std::ostream& out, const Config& cfg, long a0_max, long aj_max, int m_max, long a0_min, long aj_min) {
    if (a0_min < 2 || aj_min < 1 || m_max < 0) fail("BadInput", "grid needs a0 >= 2, aj >= 1, m >= 0");
    std::vector<std::vector<long>> tuples;
    std::vector<long> cur;
    std::function<void(int)> rec = [&](int m) {
        tuples.push_back(cur);
        if (m == m_max) return;
        for (long x = aj_min; x <= aj_max; ++x) {
            cur.push_back(x);
            rec(m + 1);
            cur.pop_back();
        }
    };
    for (long a0 = a0_min; a0 <= a0_max; ++a0) {
        cur = {a0};
        rec(0);
    }
    if (cfg.output == "csv") {
        out << "a,mu,holds,basis_route,chain_order_ok\n";
        for (const auto& a : tuples) {
            ShiftReport r = verify_spectrum_shift(a);
            out << tuple_csv(a) << ',' << chain_invariants(a).milnor << ',' << (r.holds ? "true" : "false") << ','
                << (r.basis_route ? "true" : "false") << ',' << (r.chain_order_ok ? "true" : "false") << '\n';
        }
        return;
    }
    ojson rows = ojson::array();
    int holds = 0;
    for (const auto& a : tuples) {
        ojson v = verify_json(a);
        if (v["holds"].get<bool>()) ++holds;
        rows.push_back(v);
    }
    ojson o;
    o["count"] = tuples.size();
    o["holds"] = holds;
    o["rows"] = rows;
    emit(out, o, cfg);
}

void chain_spectrum(std::ostream& out, const Config& cfg, const std::vector<long>& a, const std::string& format) {
    auto st = stokes_spectrum(a);
    auto sf = qh_spectrum(chain_invariants(a).w);
    std::sort(sf.begin(), sf.end());
    if (format == "csv") {
        out << "index,alpha_stokes,alpha_f\n";
        for (size_t i = 0; i < st.size(); ++i)
            out << i + 1 << ',' << to_string(st[i]) << ',' << (i < sf.size() ? to_string(sf[i]) : "") << '\n';
        return;
    }
    json js = json::array(), jf = json::array();
    for (const auto& x : st) js.push_back(to_string(x));
    for (const auto& x : sf) jf.push_back(to_string(x));
    emit(out, json{{"a", a}, {"sp_stokes", js}, {"sp_f", jf}}, cfg);
}

// ---- strata3 ----

T3Point parse_point(const std::string& s, const Config& cfg) {
    auto v = parse_numbers(s, cfg);
    if (v.size() != 3) fail("BadInput", "need three coordinates a1,a2,a3");
    return {v[0], v[1], v[2]};
}

void strata3_classify(std::ostream& out, const Config& cfg, const std::string& a) {
    T3Point p = parse_point(a, cfg);
    json j = encode(classify3(p, cfg.tol));
    j["a"] = json::array({encode(p[0]), encode(p[1]), encode(p[2])});
    emit(out, j, cfg);
}

void strata3_scan(std::ostream& out, const Config& cfg, const std::string& step_s, const std::string& lo_s,
                  const std::string& hi_s) {
    Rational step = parse_rational(step_s), lo = parse_rational(lo_s), hi = parse_rational(hi_s);
    if (step <= 0) fail("BadInput", "step must be positive");
    std::vector<Rational> grid;
    for (Rational x = lo; x <= hi; x += step) grid.push_back(x);
    bool csv = cfg.output != "json";
    if (csv) out << "a1,a2,a3,f,stratum,type\n";
    json rows = json::array();
    for (const auto& x : grid)
        for (const auto& y : grid)
            for (const auto& z : grid) {
                T3Point p{Number(x), Number(y), Number(z)};
                if (!member3(p)) continue;
                Class3 c = classify3(p, cfg.tol);
                if (csv) {
                    out << to_string(x) << ',' << to_string(y) << ',' << to_string(z) << ','
                        << csv_number(c.f, cfg.precision) << ',' << stratum_name(c.stratum) << ','
                        << csv_quote(types_str(c.types)) << '\n';
                } else {
                    json j = encode(c);
                    j["a"] = json::array({to_string(x), to_string(y), to_string(z)});
                    rows.push_back(j);
                }
            }
    if (!csv) emit(out, rows, cfg);
}

// ---- orbit and track ----

MatrixQ exact_matrix(const std::string& path) {
    MatrixFile f = read_matrix_file(path);
    if (!f.exact) fail("BadInput", "this command needs rational entries");
    return f.q;
}

void track(std::ostream& out, const Config& cfg, const std::string& path, int steps, double collision_tol) {
    json doc = read_json_file(path);
    const json& list = doc.is_object() ? doc.at("path") : doc;
    if (!list.is_array()) fail("BadPath", "expected a list of matrices");
    std::vector<MatrixD> samples;
    for (const auto& m : list) samples.push_back(decode_matrix(m).d);
    if (doc.is_object() && doc.contains("steps") && steps <= 0) steps = doc.at("steps").get<int>();
    if (steps <= 0) steps = 512;
    emit(out, encode(generic_path_track(samples, steps, collision_tol)), cfg);
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral numbers and Seifert forms of upper triangular Stokes matrices", "spectral-stokes"};
    app.require_subcommand(1);
    app.fallthrough();
    app.failure_message(CLI::FailureMessage::help);

    Config cfg;
    std::string mode_flag;
    app.add_option("--mode", mode_flag, "exact or numeric")->check(CLI::IsMember({"exact", "numeric"}));
    app.add_option("--tol", cfg.tol, "numeric tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for randomized commands");
    app.add_option("--output", cfg.output, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--precision", cfg.precision, "significant digits for floats")->check(CLI::Range(1, 17));

    // hor
    auto* hor = app.add_subcommand("hor", "scalar HOR family");
    hor->require_subcommand(1);
    int k = 0, n = 8, samples = 1000, steps = 0;
    std::string beta, poly;
    auto* hor_spec = hor->add_subcommand("spectrum", "spectral numbers and pairs");
    hor_spec->add_option("--k", k)->check(CLI::IsMember({1, 2}));
    auto* beta_opt = hor_spec->add_option("--beta", beta, "comma separated angles");
    hor_spec->add_option("--poly", poly, "coefficients, constant term first")->excludes(beta_opt);
    auto* hor_mat = hor->add_subcommand("matrix", "banded matrix of a polynomial");
    hor_mat->add_option("--poly", poly, "coefficients, constant term first")->required();
    hor_mat->add_option("--k", k)->check(CLI::IsMember({1, 2}));
    auto* hor_ver = hor->add_subcommand("verify", "random checks of the power identity and signature law");
    hor_ver->add_option("--n", n)->check(CLI::PositiveNumber);
    hor_ver->add_option("--samples", samples)->check(CLI::NonNegativeNumber);
    auto* hor_trk = hor->add_subcommand("track", "spectral numbers along the segment from the base point");
    hor_trk->add_option("--k", k)->check(CLI::IsMember({1, 2}));
    auto* tp = hor_trk->add_option("--target-poly", poly, "coefficients, constant term first");
    hor_trk->add_option("--target-beta", beta)->excludes(tp);
    hor_trk->add_option("--steps", steps);

    // seifert
    auto* seif = app.add_subcommand("seifert", "real Seifert form pairs");
    seif->require_subcommand(1);
    std::string matrix_path, path_b;
    bool exact_flag = false;
    auto* seif_cls = seif->add_subcommand("classify", "decompose into irreducible summands");
    seif_cls->add_option("--matrix", matrix_path)->required()->check(CLI::ExistingFile);
    seif_cls->add_flag("--exact", exact_flag, "exact arithmetic");
    bool stokes_flag = false;
    seif_cls->add_flag("--stokes", stokes_flag, "the file holds a Stokes matrix S, classify L with Gram matrix S^t");
    auto* seif_iso = seif->add_subcommand("iso", "isomorphism test");
    seif_iso->add_option("a", matrix_path)->required()->check(CLI::ExistingFile);
    seif_iso->add_option("b", path_b)->required()->check(CLI::ExistingFile);

    // chain
    auto* chain = app.add_subcommand("chain", "chain type singularities");
    chain->require_subcommand(1);
    std::vector<long> a;
    long a0_max = 6, aj_max = 4, a0_min = 2, aj_min = 1;
    int m_max = 4;
    std::string format = "json";
    auto* ch_ver = chain->add_subcommand("verify", "check Sp(S) = Sp(f) - (m-1)/2");
    ch_ver->add_option("--a", a, "exponents a0,...,am")->required()->delimiter(',');
    auto* ch_grid = chain->add_subcommand("grid", "verify every tuple in a box");
    ch_grid->add_option("--a0-max", a0_max, "largest a0");
    ch_grid->add_option("--aj-max", aj_max, "largest aj for j >= 1");
    ch_grid->add_option("--m-max", m_max, "largest m");
    ch_grid->add_option("--a0-min", a0_min, "smallest a0");
    ch_grid->add_option("--aj-min", aj_min, "smallest aj");
    auto* ch_spec = chain->add_subcommand("spectrum", "both spectra of one tuple");
    ch_spec->add_option("--a", a)->required()->delimiter(',');
    ch_spec->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    // strata3
    auto* st3 = app.add_subcommand("strata3", "strata of T(3,R)");
    st3->require_subcommand(1);
    std::string point, step = "1/4", lo = "-4", hi = "4", scan_out;
    auto* st_cls = st3->add_subcommand("classify", "stratum and type of one point");
    st_cls->add_option("--a", point, "a1,a2,a3")->required();
    auto* st_scan = st3->add_subcommand("scan", "classify a grid of points");
    st_scan->add_option("--step", step);
    st_scan->add_option("--min", lo);
    st_scan->add_option("--max", hi);
    st_scan->add_option("--out", scan_out, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    // solve2
    auto* s2 = app.add_subcommand("solve2", "n=2 spectral data of S = [[1,a],[0,1]]");
    std::string a2;
    s2->add_option("--a", a2)->required();

    // orbit
    auto* orb = app.add_subcommand("orbit", "braid group orbits");
    orb->require_subcommand(1);
    int depth = 6, budget = 100000, pool_n = 6;
    std::string pool_from = "cyclotomic";
    auto* orb_exp = orb->add_subcommand("explore", "breadth first orbit search");
    orb_exp->add_option("--matrix", matrix_path)->required()->check(CLI::ExistingFile);
    orb_exp->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
    orb_exp->add_option("--budget", budget)->check(CLI::PositiveNumber);
    auto* orb_c16 = orb->add_subcommand("conj16", "monodromy versus spectrum experiment");
    orb_c16->add_option("--n", pool_n)->check(CLI::PositiveNumber);
    orb_c16->add_option("--pool-from", pool_from)->check(CLI::IsMember({"cyclotomic"}));

    // track
    auto* trk = app.add_subcommand("track", "spectral numbers along a path of matrices");
    double collision_tol = 1e-6;
    trk->add_option("--path-file", matrix_path)->required()->check(CLI::ExistingFile);
    trk->add_option("--steps", steps);
    trk->add_option("--collision-tol", collision_tol)->check(CLI::PositiveNumber);

    // selftest
    auto* self = app.add_subcommand("selftest", "run the acceptance criteria");
    std::vector<int> only;
    self->add_option("--only", only, "criterion ids")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? 0 : 2;
    }

    if (!mode_flag.empty()) cfg.mode = mode_flag;
    if (const char* env = std::getenv("SPECTRAL_STOKES_MODE")) {
        std::string m = env;
        if (m != "exact" && m != "numeric") {
            err << json{{"error", "BadInput"}, {"message", "SPECTRAL_STOKES_MODE must be exact or numeric"}}.dump()
                << '\n';
            return 2;
        }
        cfg.mode = m;
    }

    try {
        if (hor_spec->parsed()) {
            if (beta.empty() && poly.empty()) throw CLI::RequiredError("--beta or --poly");
            hor_spectrum(out, cfg, k, beta, poly);
        } else if (hor_mat->parsed()) {
            hor_matrix(out, cfg, k, poly);
        } else if (hor_ver->parsed()) {
            hor_verify(out, cfg, n, samples);
        } else if (hor_trk->parsed()) {
            if (beta.empty() && poly.empty()) throw CLI::RequiredError("--target-poly or --target-beta");
            hor_track(out, cfg, k, poly, beta, steps);
        } else if (seif_cls->parsed()) {
            seifert_classify(out, cfg, matrix_path, exact_flag, stokes_flag);
        } else if (seif_iso->parsed()) {
            seifert_iso(out, cfg, matrix_path, path_b);
        } else if (ch_ver->parsed()) {
            emit(out, verify_json(a), cfg);
        } else if (ch_grid->parsed()) {
            chain_grid(out, cfg, a0_max, aj_max, m_max, a0_min, aj_min);
        } else if (ch_spec->parsed()) {
            chain_spectrum(out, cfg, a, format == "csv" || cfg.output == "csv" ? "csv" : "json");
        } else if (st_cls->parsed()) {
            strata3_classify(out, cfg, point);
        } else if (st_scan->parsed()) {
            Config c = cfg;
            c.output = scan_out.empty() ? (cfg.output == "json" ? "csv" : cfg.output) : scan_out;
            strata3_scan(out, c, step, lo, hi);
        } else if (s2->parsed()) {
            emit(out, encode(solve2(parse_number(a2, cfg))), cfg);
        } else if (orb_exp->parsed()) {
            emit(out, encode(orbit_explore(exact_matrix(matrix_path), depth, budget)), cfg);
        } else if (orb_c16->parsed()) {
            emit(out, encode(stratum_experiment(cyclotomic_hor_pool(pool_n))), cfg);
        } else if (trk->parsed()) {
            track(out, cfg, matrix_path, steps, collision_tol);
        } else if (self->parsed()) {
            bool all = true;
            run_acceptance(only, [&](const CriterionResult& r) {
                out << r.line() << '\n' << std::flush;
                all = all && r.pass();
            }, cfg.seed);
            return all ? 0 : 1;
        }
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << json{{"error", e.code()}, {"message", e.what()}}.dump() << '\n';
        return 1;
    } catch (const json::exception& e) {
        err << json{{"error", "BadInput"}, {"message", e.what()}}.dump() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace stokes
