#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;

    nlohmann::json doc() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cfx::cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("transform") {
    const auto r = run({"transform", "euler", "--x", "2,3", "--y", "1,1", "--json"});
    REQUIRE(r.code == 0);
    const auto j = r.doc();
    CHECK(j["value"] == "1/6");
    CHECK(j["oracle"] == "1/6");
    CHECK(j["match"] == true);
    CHECK(j["cf"]["terms"].size() == 2);

    const auto hone = run({"transform", "hone", "--x", "5", "--y", "1", "--json"});
    CHECK(hone.code == 0);
    CHECK(hone.doc()["value"] == "1/5");

    for (const char* kind : {"varona", "varona-aux"}) {
        const auto v = run({"transform", kind, "--x", "1,1,2,8", "--y", "1,1,1,1", "--json"});
        CHECK(v.code == 0);
        CHECK(v.doc()["match"] == true);
    }

    const auto plain = run({"transform", "hone", "--x", "2,3", "--y", "1,1"});
    CHECK(plain.code == 0);
    CHECK(plain.out.find("match") != std::string::npos);
}

TEST_CASE("transform input errors") {
    const auto short_sum = run({"transform", "varona", "--x", "2", "--y", "1"});
    CHECK(short_sum.code == cfx::cli::kInvalid);
    CHECK(short_sum.err.find("n = 1") != std::string::npos);
    CHECK(run({"transform", "euler", "--x", "2,3", "--y", "1"}).code == cfx::cli::kInvalid);
    CHECK(run({"transform", "euler", "--x", "2,a", "--y", "1,1"}).code == cfx::cli::kInvalid);
    CHECK(run({"transform", "euler", "--x", "0", "--y", "1"}).code == cfx::cli::kInvalid);
    CHECK(run({"transform", "cauchy", "--x", "2", "--y", "1"}).code == cfx::cli::kInvalid);
    CHECK(run({"transform", "euler", "--y", "1"}).code == cfx::cli::kInvalid);
    CHECK(run({}).code == cfx::cli::kInvalid);
}

TEST_CASE("invert") {
    const auto fwd = run({"transform", "euler", "--x", "2,3", "--y", "1,1", "--json"});
    const std::string cf = fwd.doc()["cf"].dump();
    const auto r = run({"invert", "euler", "--cf", cf, "--n", "2", "--json"});
    REQUIRE(r.code == 0);
    const auto j = r.doc();
    CHECK(j["sum"] == "1/6");
    CHECK(j["match"] == true);
    CHECK(j["terms"][0] == "1/2");
    CHECK(j["terms"][1] == "-1/3");

    CHECK(run({"invert", "euler", "--cf", "{\"terms\": 1}", "--n", "1"}).code == cfx::cli::kInvalid);
    CHECK(run({"invert", "euler", "--cf", "not json", "--n", "1"}).code == cfx::cli::kInvalid);
}

TEST_CASE("sequence") {
    const auto r = run({"sequence", "--preset", "a001697", "--n", "4", "--json"});
    REQUIRE(r.code == 0);
    const auto j = r.doc();
    CHECK(j["values"] == nlohmann::json({"1", "1", "2", "8", "96"}));
    CHECK(j["invariants"]["passed"] == true);

    const auto custom = run({"sequence", "--f", "X", "--x1", "3", "--n", "3", "--json"});
    REQUIRE(custom.code == 0);
    CHECK(custom.doc()["values"] == nlohmann::json({"1", "3", "18", "432"}));

    const auto listed = run({"sequence", "--f", "[[1,0,\"1\"]]", "--x1", "3", "--n", "3", "--json"});
    REQUIRE(listed.code == 0);
    CHECK(listed.doc()["values"] == custom.doc()["values"]);

    const auto table = run({"sequence", "--preset", "a001697", "--n", "5"});
    CHECK(table.code == 0);
    CHECK(table.out.find("10368") != std::string::npos);
}

TEST_CASE("sequence errors") {
    const auto big = run({"sequence", "--preset", "a001697", "--n", "50"});
    CHECK(big.code == cfx::cli::kEngine);
    CHECK(big.err.find("budget") != std::string::npos);
    CHECK(run({"sequence", "--preset", "a000001", "--n", "3"}).code == cfx::cli::kInvalid);
    CHECK(run({"sequence", "--preset", "a001697", "--f", "X", "--n", "3"}).code == cfx::cli::kInvalid);
    CHECK(run({"sequence", "--f", "X+", "--x1", "1", "--n", "3"}).code == cfx::cli::kInvalid);
    CHECK(run({"sequence", "--f", "X", "--x1", "0", "--n", "3"}).code == cfx::cli::kInvalid);
}

TEST_CASE("series invS") {
    const auto r = run({"series", "invS", "--f", "X", "--x1", "1", "--h", "3", "--n", "6", "--json"});
    REQUIRE(r.code == 0);
    const auto j = r.doc();
    CHECK(j["shift"]["N"] == 2);
    CHECK(j["shift"]["t"] == "5");
    CHECK(j["cf"]["terms"][0] == nlohmann::json({"2", "5"}));
    CHECK(j["cf"]["terms"][1] == nlohmann::json({"18", "5"}));
    CHECK(j["degenerate_head"] == false);
    CHECK(j["verified"] == true);
}

TEST_CASE("series S and T") {
    const auto s = run({"series", "S", "--f", "X", "--x1", "2", "--h", "1", "--n", "5", "--json"});
    REQUIRE(s.code == 0);
    CHECK(s.doc()["verified"] == true);
    CHECK(s.doc()["cf"]["terms"].size() == 10);

    const auto t = run({"series", "T", "--f", "X", "--x1", "1", "--h", "1", "--n", "5", "--json"});
    REQUIRE(t.code == 0);
    CHECK(t.err.find("b_6 = 0") != std::string::npos);
    CHECK(t.doc()["series"] == "T-contracted");
    CHECK(t.doc()["notice"].is_string());
    CHECK(t.doc()["verified"] == true);

    const auto tc = run({"series", "T-contracted", "--f", "X", "--x1", "1", "--h", "1", "--n", "4", "--json"});
    REQUIRE(tc.code == 0);
    CHECK(tc.doc()["partial_sum"] == "59/96");

    const auto ty = run({"series", "T", "--f", "X+Y", "--x1", "2", "--h", "1", "--n", "5", "--json"});
    REQUIRE(ty.code == 0);
    CHECK(ty.doc()["series"] == "T");
    CHECK(ty.err.empty());

    CHECK(run({"series", "S", "--f", "X", "--x1", "1", "--h", "1", "--n", "4"}).code == cfx::cli::kInvalid);
    CHECK(run({"series", "S", "--f", "X", "--x1", "2", "--h", "0", "--n", "4"}).code == cfx::cli::kInvalid);
    CHECK(run({"series", "T-contracted", "--f", "Y", "--x1", "2", "--h", "1", "--n", "4"}).code == cfx::cli::kInvalid);
}

TEST_CASE("verify") {
    const auto r = run({"verify", "euler", "--trials", "20", "--seed", "3", "--json"});
    REQUIRE(r.code == 0);
    CHECK(r.doc()["ok"] == true);
    CHECK(r.doc()["passed"] == 20);
    CHECK(run({"verify", "nothing"}).code == cfx::cli::kInvalid);
}

TEST_CASE("help") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"series", "--help"}).code == 0);
}
