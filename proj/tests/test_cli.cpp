#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <json.hpp>
#include <string>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(K3FM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json run_json(const std::string& args) {
    RunResult r = run_cli(args);
    REQUIRE(r.exit_code == 0);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("classify output") {
    json j = run_json("classify --d 13 --div 1 --json");
    CHECK(j["command"] == "classify");
    CHECK(j["inputs"]["d"] == "13");
    CHECK(j["result"]["verdict"] == "Derived");
    CHECK(j["result"]["partners_raw"] == "4");
    CHECK(j["result"]["partners_mod_negation"] == "2");
    CHECK(j["result"]["b1_count"] == "2");
    CHECK(!j["warnings"].empty());

    json t = run_json("classify --d 12 --div 1 --json");
    CHECK(t["result"]["verdict"] == "TwistedHalfDelta");

    json v2 = run_json("classify --d 3 --div 2 --json");
    CHECK(v2["result"]["verdict"] == "Derived");
}

TEST_CASE("decompose output") {
    json j = run_json("decompose --d 10 --a 9 --b 0 --json");
    REQUIRE(j["result"]["steps"].size() == 1);
    const json& s = j["result"]["steps"][0];
    CHECK(s["r"] == "2");
    CHECK(s["s"] == "7");
    CHECK(s["l"] == "2");
    CHECK(s["action"] == "(11,0)");
    CHECK(s["twist_x"]["trivial"] == false);
    CHECK(j["result"]["target"] == "(9,0)");
    CHECK(j["result"]["uses_negation"] == true);

    json odd = run_json("decompose --d 5 --a 1 --b 0 --odd-t --json");
    CHECK(odd["result"]["steps"].size() == 2);
    for (const auto& step : odd["result"]["steps"]) {
        CHECK(step["twist_x"]["trivial"] == true);
        CHECK(step["twist_y"]["trivial"] == true);
    }

    json d2 = run_json("decompose --d 15 --a 4 --div 2 --json");
    const json& s2 = d2["result"]["steps"][0];
    CHECK(s2["r"] == "3");
    CHECK(s2["s"] == "2");
    CHECK(s2["l"] == "3");
    CHECK(s2["twist_x"]["trivial"] == true);
}

TEST_CASE("disc output") {
    json j = run_json("disc --d 2 --div 1 --json");
    CHECK(j["result"]["orders"] == json::array({"2", "4"}));
    CHECK(j["result"]["quad"] == json::array({"3/2", "7/4"}));
    CHECK(j["result"]["gamma1_quad"] == "7/4");

    json full = run_json("disc --d 2 --div 1 --model full --json");
    CHECK(full["result"]["orders"] == j["result"]["orders"]);
    CHECK(full["result"]["gamma1_quad"] == j["result"]["gamma1_quad"]);

    json d2 = run_json("disc --d 7 --div 2 --json");
    CHECK(d2["result"]["orders"] == json::array({"7"}));
    CHECK(d2["result"]["delta_class"] == json::array());
}

TEST_CASE("verify output and determinism across job counts") {
    json j = run_json("verify --suite partner-counts --max-d 20 --json");
    CHECK(j["result"]["failure_count"] == 0);
    CHECK(j["result"]["passes"].get<long long>() > 0);
    CHECK(j["warnings"].size() == 2);

    RunResult a = run_cli("verify --suite disc-structure --max-d 15 --jobs 1 --json");
    RunResult b = run_cli("verify --suite disc-structure --max-d 15 --jobs 4 --json");
    CHECK(a.exit_code == 0);
    json ja = json::parse(a.out), jb = json::parse(b.out);
    CHECK(ja["result"]["passes"] == jb["result"]["passes"]);
    CHECK(ja["result"]["failures"] == jb["result"]["failures"]);
}

TEST_CASE("exit code contract") {
    CHECK(run_cli("--help").exit_code == 0);
    // usage errors
    CHECK(run_cli("verify --suite no-such-suite").exit_code == 1);
    CHECK(run_cli("classify").exit_code == 1);
    CHECK(run_cli("classify --d 5 --div 3").exit_code == 1);
    // domain errors
    CHECK(run_cli("classify --d 5 --div 2").exit_code == 2);
    CHECK(run_cli("disc --d 5 --div 2").exit_code == 2);
    CHECK(run_cli("decompose --d 10 --a 2 --b 0").exit_code == 2);
    CHECK(run_cli("decompose --d 10 --a 9 --b 1").exit_code == 2);
}

TEST_CASE("human-readable output mentions the key fields") {
    RunResult r = run_cli("classify --d 13 --div 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verdict") != std::string::npos);
    CHECK(r.out.find("Derived") != std::string::npos);
    CHECK(r.out.find("warning:") != std::string::npos);
}
