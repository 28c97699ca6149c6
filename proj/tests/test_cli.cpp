#include "polyharm/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

using Json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = polyharm::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args, int expected_code) {
    args.insert(args.begin(), "--json");
    Result r = invoke(args);
    CHECK(r.code == expected_code);
    Json j = Json::parse(r.out);
    CHECK(j.is_object());
    return j;
}

}  // namespace

TEST_CASE("order") {
    Result r = invoke({"order", "z*zbar"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
    CHECK(invoke_json({"order", "z^2*zbar^3 + z"}, 0)["order"] == 3);
}

TEST_CASE("derivative subcommands") {
    CHECK(invoke({"dz", "z^2*zbar^3"}).out == "2*z*zbar^3\n");
    CHECK(invoke({"dzbar", "z^2*zbar^3"}).out == "3*z^2*zbar^2\n");
    CHECK(invoke({"laplacian", "--times", "2", "z^2*zbar^3"}).out == "192*zbar\n");
    CHECK(invoke({"laplacian", "z*zbar"}).out == "4\n");
    CHECK(invoke({"laplacian", "--times", "0", "z"}).code == 2);
    Json j = invoke_json({"laplacian", "z^2*zbar^3"}, 0);
    CHECK(j["result"] == "24*z*zbar^2");
}

TEST_CASE("almansi") {
    Json j = invoke_json({"almansi", "z^2*zbar^3 + z"}, 0);
    CHECK(j["order"] == 3);
    CHECK(j["components"] == Json::array({"z", "0", "zbar"}));
    CHECK(invoke({"almansi", "z*zbar + 7"}).out == "G_1 = 7\nG_2 = 1\n");
}

TEST_CASE("compose takes the outer mapping first") {
    CHECK(invoke({"compose", "z^2", "z + zbar"}).out == "zbar^2 + 2*z*zbar + z^2\n");
    CHECK(invoke({"compose", "zbar", "z^2"}).out == "zbar^2\n");
}

TEST_CASE("classify") {
    Result r = invoke({"classify", "3*z + 2*zbar + 1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("is_affine=true") != std::string::npos);
    CHECK(r.out.find("harmonic_degree=1") != std::string::npos);
    Json j = invoke_json({"classify", "z*zbar"}, 0);
    CHECK(j["order"] == 2);
    CHECK(j["is_harmonic"] == false);
    CHECK(j["harmonic_degree"].is_null());
}

TEST_CASE("witness") {
    Result r = invoke({"witness", "--theorem", "1b", "--l", "1", "z^2"});
    CHECK(r.code == 1);
    CHECK(r.out.find("F = zbar^2 + z^2") != std::string::npos);
    CHECK(r.out.find("composition_order: 3") != std::string::npos);

    Json j = invoke_json({"witness", "--theorem", "1b", "--l", "1", "z^2"}, 1);
    CHECK(j["verdict"] == "violation");
    CHECK(j["witness"] == "zbar^2 + z^2");
    CHECK(j["composition_order"] == 3);

    Json ok = invoke_json({"witness", "--theorem", "1a", "--l", "2", "z^3 + zbar"}, 0);
    CHECK(ok["verdict"] == "compliant");
    CHECK(ok["witness"].is_null());

    Json a = invoke_json({"witness", "--theorem", "2a", "--l", "1", "z + zbar"}, 1);
    CHECK(a["witness"] == "z^4");

    Json b = invoke_json({"witness", "--theorem", "3c", "z^2"}, 1);
    CHECK(b["witness"] == "z*zbar");
    CHECK(b["composition_order"] == 3);
    CHECK(b["l"] == 2);

    Json c = invoke_json({"witness", "--theorem", "2b", "--q", "3", "--l", "4", "z^3"}, 1);
    CHECK(c["witness"] == "z^2*zbar^2");
    CHECK(c["composition_order"] == 7);

    Json open = invoke_json({"witness", "--theorem", "2a", "--l", "3", "z*zbar"}, 0);
    CHECK(open["verdict"] == "conjecture_only");

    Json post = invoke_json({"witness", "--theorem", "1c", "--q", "3", "--l", "2", "2*z + zbar + 1"}, 1);
    CHECK(post["verdict"] == "violation");
    CHECK(post["composition_order"] > 2);

    CHECK(invoke({"witness", "--theorem", "9z", "--l", "1", "z"}).code == 2);
    CHECK(invoke({"witness", "--theorem", "1a", "z"}).code == 2);
    CHECK(invoke({"witness", "--theorem", "1c", "--q", "1", "--l", "2", "z"}).code == 2);
    CHECK(invoke({"witness", "--theorem", "3b", "--l", "2", "z"}).code == 2);
}

TEST_CASE("verify") {
    Json j = invoke_json({"verify", "--suite", "prop22", "--seed", "1", "--cases", "500"}, 0);
    CHECK(j["suite"] == "prop22");
    CHECK(j["cases_run"] == 500);
    CHECK(j["failures"] == 0);
    CHECK(j["seed"] == 1);
    CHECK(invoke({"verify", "--suite", "bogus"}).code == 2);
    Result r = invoke({"verify", "--suite", "thm1_suff", "--seed", "4", "--cases", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.find("failures: 0") != std::string::npos);
}

TEST_CASE("seed falls back to the environment and the flag wins") {
    setenv("POLYHARM_SEED", "1234", 1);
    CHECK(invoke_json({"verify", "--suite", "prop21", "--cases", "5"}, 0)["seed"] == 1234);
    CHECK(invoke_json({"verify", "--suite", "prop21", "--cases", "5", "--seed", "9"}, 0)["seed"] == 9);
    setenv("POLYHARM_SEED", "abc", 1);
    CHECK(invoke({"verify", "--suite", "prop21", "--cases", "5"}).code == 2);
    unsetenv("POLYHARM_SEED");
    CHECK(invoke_json({"verify", "--suite", "prop21", "--cases", "5"}, 0)["seed"] == 1);
}

TEST_CASE("conjecture") {
    Json j = invoke_json({"conjecture", "--seed", "3", "--cases", "100", "--l", "3"}, 0);
    CHECK(j["suite"] == "conjecture_search");
    CHECK(j["failures"] == 0);
    CHECK(j["counters"]["candidates"] == 0);
    CHECK(j.contains("note"));
    CHECK(invoke({"conjecture", "--l", "2"}).code == 2);
}

TEST_CASE("reich") {
    CHECK(invoke({"reich", "--alpha", "0", "--c", "0", "z"}).out == "false\n");
    CHECK(invoke({"reich", "--alpha", "i", "--c", "1", "1"}).out == "true\n");
    CHECK(invoke_json({"reich", "--alpha", "1", "--c", "-1", "z"}, 0)["reich_condition"] == false);
    CHECK(invoke({"reich", "--alpha", "1", "--c", "i", "z"}).code == 2);
    CHECK(invoke({"reich", "--alpha", "z", "--c", "1", "z"}).code == 2);
    CHECK(invoke({"reich", "zbar"}).code == 2);
}

TEST_CASE("eval") {
    CHECK(invoke({"eval", "z*zbar", "--at", "3,4"}).out == "25\n");
    CHECK(invoke({"eval", "z^2*zbar^3 + z", "--at", "1,1"}).out == "5 - 3*i\n");
    Json j = invoke_json({"eval", "z", "--at", "1/2,-3"}, 0);
    CHECK(j["re"] == "1/2");
    CHECK(j["im"] == "-3");
    CHECK(invoke({"eval", "z", "--at", "1"}).code == 2);
}

TEST_CASE("fdcheck") {
    Json j = invoke_json({"fdcheck", "z^2*zbar^3", "--points", "4", "--h", "1e-4", "--seed", "2"}, 0);
    CHECK(j["points"].size() == 4);
    CHECK(j["abs_error"] < 1e-5);
    CHECK(j["passed"] == true);
    Json tight = invoke_json({"fdcheck", "z^4*zbar^4", "--h", "1e-1", "--abs-tol", "0", "--rel-tol", "0"}, 1);
    CHECK(tight["passed"] == false);
}

TEST_CASE("usage and parse errors exit 2 with a position") {
    Result r = invoke({"order", "2z"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("offset 1") != std::string::npos);
    CHECK(invoke({"order", "1/0"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"order"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({"--help"}).out.find("abs2") != std::string::npos);
}

TEST_CASE("output is deterministic") {
    std::vector<std::string> args{"--json", "verify", "--suite", "thm1_nec", "--seed", "5", "--cases", "30"};
    CHECK(invoke(args).out == invoke(args).out);
    std::vector<std::string> fd{"fdcheck", "z^3*zbar", "--seed", "8"};
    CHECK(invoke(fd).out == invoke(fd).out);
}
