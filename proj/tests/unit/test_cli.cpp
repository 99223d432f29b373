#include "doctest.h"
#include "stokes/cli.hpp"
#include "stokes/serialize.hpp"

#include <sstream>

using namespace stokes;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "spectral-stokes");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(STOKES_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("chain verify") {
    auto r = run({"chain", "verify", "--a", "3,2"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind(R"({"a":[3,2],"mu":4,"holds":true,)", 0) == 0);
    CHECK(r.err.empty());
}

TEST_CASE("domain and usage errors") {
    auto r = run({"solve2", "--a", "5"});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(json::parse(r.err)["error"] == "OutOfT");
    auto u = run({"chain", "verify", "--bogus"});
    CHECK(u.code == 2);
    CHECK(u.err.find("--a") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"orbit", "conj16", "--pool-from", "random"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("solve2 and hor") {
    auto s = json::parse(run({"solve2", "--a", "2"}).out);
    CHECK(s["spp"].dump() == R"([{"alpha":"-1/2","level":2,"mult":1},{"alpha":"1/2","level":0,"mult":1}])");
    CHECK(s["types"][0]["str"] == "Seif(-1,1,2,1)");
    auto h = json::parse(run({"hor", "spectrum", "--k", "1", "--beta", "1/3,2/3"}).out);
    CHECK(h["spectrum"] == json({"1/6", "-1/6"}));
    auto m = json::parse(run({"hor", "matrix", "--poly", "1,1,1"}).out);
    CHECK(m["k"] == 1);
    CHECK(m["S"] == json::parse(R"([["1","1"],["0","1"]])"));
    auto v = json::parse(run({"hor", "verify", "--n", "4", "--samples", "20"}).out);
    CHECK(v["power_identity_ok"] == 20);
    CHECK(v["failures"].empty());
    auto t = json::parse(run({"hor", "track", "--k", "1", "--target-poly", "1,2,1", "--steps", "128"}).out);
    CHECK(t["endpoint"].size() == 2);
}

TEST_CASE("seifert commands") {
    auto c = json::parse(run({"seifert", "classify", "--matrix", data("exceptional.json"), "--stokes", "--exact"}).out);
    CHECK(c["classified"] == true);
    CHECK(c["summary"] == "Seif(1,1,1,1) + Seif(-1,2,1)");
    auto f = run({"seifert", "classify", "--matrix", data("s2_float.json")});
    CHECK(f.code == 0);
    CHECK(json::parse(f.out)["mode"] == "numeric");
    auto bad = run({"--mode", "exact", "seifert", "classify", "--matrix", data("s2_float.json")});
    CHECK(bad.code == 1);
    auto iso = json::parse(run({"seifert", "iso", data("s2_edge.json"), data("s2_minus.json")}).out);
    CHECK(iso["iso"] == true);
}

TEST_CASE("chain tables") {
    auto csv = run({"chain", "spectrum", "--a", "3,2", "--format", "csv"});
    CHECK(csv.out.rfind("index,alpha_stokes,alpha_f\n1,0,-1/3\n", 0) == 0);
    auto grid = run({"--output", "csv", "chain", "grid", "--a0-max", "3", "--aj-max", "2", "--m-max", "1", "--a0-min", "3",
                     "--aj-min", "2"});
    CHECK(grid.out == "a,mu,holds,basis_route,chain_order_ok\n3,2,true,true,true\n\"3,2\",4,true,true,true\n");
}

TEST_CASE("strata3") {
    auto c = json::parse(run({"strata3", "classify", "--a", "2,2,2"}).out);
    CHECK(c["stratum"] == "Exceptional");
    auto scan = run({"strata3", "scan", "--step", "1", "--min", "2", "--max", "2"});
    CHECK(scan.out.rfind("a1,a2,a3,f,stratum,type\n2,2,2,0,Exceptional,", 0) == 0);
    auto empty = run({"strata3", "scan", "--step", "1/4", "--min", "5", "--max", "6"});
    CHECK(empty.out == "a1,a2,a3,f,stratum,type\n");
}

TEST_CASE("orbit and track") {
    auto o = json::parse(run({"orbit", "explore", "--matrix", data("a2.json"), "--depth", "4"}).out);
    CHECK(o["charpoly_invariant"] == true);
    auto c = json::parse(run({"orbit", "conj16", "--n", "3"}).out);
    CHECK(c.contains("groups"));
    CHECK(c.contains("violations"));
    CHECK(c.contains("collisions"));
    auto t = json::parse(run({"track", "--path-file", data("path_edge.json"), "--steps", "256"}).out);
    CHECK(t["ambiguous"] == false);
    CHECK(!t["collisions"].empty());
    auto left = run({"track", "--path-file", data("path_leaves.json")});
    CHECK(left.code == 1);
    CHECK(json::parse(left.err)["error"] == "LeftT");
}

TEST_CASE("seeded output is reproducible") {
    auto a = run({"--seed", "7", "hor", "verify", "--n", "3", "--samples", "10"});
    auto b = run({"--seed", "7", "hor", "verify", "--n", "3", "--samples", "10"});
    CHECK(a.out == b.out);
}

TEST_CASE("selftest subset") {
    auto r = run({"selftest", "--only", "1,2,5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS criterion 1") != std::string::npos);
}
