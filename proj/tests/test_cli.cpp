#include <doctest.h>

#include "sparsemult/cli.hpp"
#include "sparsemult/json_io.hpp"
#include "sparsemult/random.hpp"

#include <sstream>

using namespace sparsemult;

namespace {

struct Outcome {
    int code = 0;
    Json report;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    Outcome o;
    o.code = run(args, out, err);
    o.err = err.str();
    if (!out.str().empty()) o.report = Json::parse(out.str());
    return o;
}

const char* kPair = R"({"A":{"points":[[0,0],[2,0],[0,2],[1,0],[0,1],[1,1]]},"B":{"points":[[0,0],[1,0],[0,1]]}})";

}  // namespace

TEST_CASE("reports carry version and request") {
    const auto o = call({"bounds", "--json", kPair});
    CHECK(o.code == 0);
    CHECK(o.report["version"] == kVersion);
    CHECK(o.report["status"] == "ok");
    CHECK(o.report["request"]["subcommand"] == "bounds");
    CHECK(o.report["request"]["seed"] == kDefaultSeed);
    CHECK(o.report["result"]["mixed_volume"] == 2);
    CHECK(o.report["result"]["size_A"] == 6);
}

TEST_CASE("construct then verify round trip") {
    Json req = Json::parse(kPair);
    req["m"] = 2;
    const auto built = call({"construct", "--json", req.dump(), "--seed", "9"});
    REQUIRE(built.code == 0);
    CHECK(built.report["request"]["seed"] == 9);
    const Json sys = built.report["result"];

    const auto ok = call({"verify", "--json", sys.dump()});
    CHECK(ok.code == 0);
    CHECK(ok.report["result"]["verified"] == true);

    Json bad = sys;
    bad["multiplicity"] = 3;
    const auto failed = call({"verify", "--json", bad.dump()});
    CHECK(failed.code == 1);
    CHECK(failed.report["status"] == "failed");
}

TEST_CASE("exit codes") {
    CHECK(call({}).code == 2);
    CHECK(call({"bounds"}).code == 2);
    CHECK(call({"bounds", "--json", "{not json"}).code == 2);
    CHECK(call({"bounds", "--json", R"({"A":{"points":[[0,0]]}})"}).code == 2);
    CHECK(call({"bounds", "--json", R"({"A":{"points":[[0,0]]},"B":{"points":[[0,0]]},"extra":1})"}).code == 2);
    CHECK(call({"reproduce", "nonsense"}).code == 2);

    Json too_high = Json::parse(kPair);
    too_high["m"] = 7;
    const auto hv = call({"construct", "--json", too_high.dump()});
    CHECK(hv.code == 3);
    CHECK(hv.report["error"]["kind"] == "HypothesisViolation");

    Json seg = Json::parse(kPair);
    seg["B"] = Json::parse(R"({"points":[[0,0],[1,1]]})");
    seg["m"] = 1;
    CHECK(call({"construct", "--json", seg.dump()}).code == 3);
}

TEST_CASE("other subcommands") {
    const auto tri = call({"triangle", "--json", R"({"triangle":{"points":[[0,0],[1,0],[0,1]]}})"});
    CHECK(tri.code == 0);
    const auto uni = call({"univariate", "--json", R"({"exponents":[0,1,3],"multiplicity":2})"});
    CHECK(uni.code == 0);
    const auto cls = call({"classify", "--json", kPair});
    CHECK(cls.code == 0);
    CHECK(cls.report["result"]["verdict"] == "Impossible");
    Json mp = Json::parse(R"({"A":{"points":[[0,0],[4,0],[0,4]]},"B":{"points":[[0,0],[1,0],[2,0],[3,0],[0,1]]},"multiplicities":[2,1]})");
    mp["A"]["points"] = Json::array();
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j) mp["A"]["points"].push_back({i, j});
    CHECK(call({"multipoint", "--json", mp.dump()}).code == 0);
}

TEST_CASE("reproduce") {
    CHECK(call({"reproduce", "ex3"}).code == 0);
    CHECK(call({"reproduce", "ex10", "--n", "3"}).code == 0);
    const auto atlas = call({"reproduce", "triangle-atlas", "--box", "3"});
    CHECK(atlas.code == 0);
    CHECK(atlas.report["request"]["box"] == 3);
    const auto exim = call({"reproduce", "exim"});
    CHECK(exim.code == 0);
    CHECK(exim.report["result"].contains("notes"));
}
