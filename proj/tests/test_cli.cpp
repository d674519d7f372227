#include <doctest.h>

#include "selberglab/catalog.hpp"
#include "selberglab/cli.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>

using namespace selberglab;
using nlohmann::json;

namespace {

cli::CommandRequest request(const std::string& sub, const std::string& input) {
    cli::CommandRequest req;
    req.subcommand = sub;
    req.input = input;
    req.mode = "exact";
    return req;
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = std::string("/tmp/") + name;
    std::ofstream out(path);
    out << text;
    return path;
}

}  // namespace

TEST_CASE("classify subcommand") {
    auto res = cli::run(request("classify", "ramanujan_normalized"));
    CHECK(res.exit_code == 0);
    auto doc = json::parse(res.report);
    CHECK(doc["result"]["verdict"] == "holomorphic_cusp_form");
    CHECK(doc["result"]["weight"]["exact"] == "12");
    CHECK(doc["pass"] == true);

    // odd weight: verdict stands, diagnostics flag nonexistence, exit 1
    auto odd = cli::run(request("classify", "hecke(2)"));
    CHECK(odd.exit_code == 1);
    auto odd_doc = json::parse(odd.report);
    CHECK(odd_doc["result"]["verdict"] == "holomorphic_cusp_form");
    bool some_fail = false;
    for (const auto& c : odd_doc["checks"]) some_fail |= !c["pass"].get<bool>();
    CHECK(some_fail);
}

TEST_CASE("invariants subcommand and input handling") {
    auto res = cli::run(request("invariants", "zeta_squared"));
    CHECK(res.exit_code == 0);
    auto doc = json::parse(res.report);
    CHECK(doc["result"]["chi"]["re"] == "0");
    CHECK(doc["result"]["degree"]["exact"] == "2");

    // document input round trips through the serializer
    auto path = write_temp("cli_zeta.json", serialize_gamma(load_entry("zeta_squared").data));
    auto req = request("invariants", path);
    req.input_is_path = true;
    auto file_res = cli::run(req);
    CHECK(file_res.exit_code == 0);
    CHECK(json::parse(file_res.report)["result"]["chi"]["re"] == "0");

    // schema violation: exit 2 with an error field
    auto bad_path = write_temp("cli_bad.json",
                               R"({"Q": {"rational": "1", "two_exp": 0, "pi_exp": -1},
                                   "omega": {"re": "1", "im": "0"},
                                   "factors": [{"lambda": "-1/2", "mu": {"re": "0", "im": "0"}}],
                                   "coefficients": {"kind": "zeta_squared", "n_max": 8},
                                   "pole_order": 2})");
    auto bad_req = request("invariants", bad_path);
    bad_req.input_is_path = true;
    auto bad_res = cli::run(bad_req);
    CHECK(bad_res.exit_code == 2);
    CHECK(json::parse(bad_res.report).contains("error"));

    CHECK(cli::run(request("invariants", "no_such_entry")).exit_code == 2);
    CHECK(cli::run(request("frobnicate", "zeta_squared")).exit_code == 2);
}

TEST_CASE("structural subcommand") {
    auto req = request("structural", "ramanujan_normalized");
    req.l_max = 4;
    auto res = cli::run(req);
    CHECK(res.exit_code == 0);
    auto doc = json::parse(res.report);
    CHECK(doc["result"]["d"].size() == 5);
    CHECK(doc["result"]["d"][1]["pipeline"]["re"] == "483/8");
    CHECK(doc["result"]["d"][1].contains("oracle"));

    req.l_max = 40;
    CHECK(cli::run(req).exit_code == 2);
}

TEST_CASE("verify-quadratic subcommand") {
    auto req = request("verify-quadratic", "hecke(3/2)");
    req.N = 3;
    auto res = cli::run(req);
    CHECK(res.exit_code == 0);
    auto doc = json::parse(res.report);
    CHECK(doc["result"]["residual"]["exact"] == "0");

    // float mode hits the tolerance branch instead of exact zero
    req.mode = "float";
    auto fres = cli::run(req);
    CHECK(fres.exit_code == 0);
    CHECK(json::parse(fres.report)["result"]["residual"]["provenance"] == "float");
}

TEST_CASE("verify-identity and period-check subcommands") {
    CHECK(cli::run(request("verify-identity", "maass(0,2)")).exit_code == 0);

    auto res = cli::run(request("period-check", "ramanujan_normalized"));
    CHECK(res.exit_code == 0);
    auto doc = json::parse(res.report);
    CHECK(doc["result"].contains("modularity_max_relative"));

    // divisor data checks the three-term identity only
    auto zres = cli::run(request("period-check", "zeta_squared"));
    CHECK(zres.exit_code == 0);
    CHECK_FALSE(json::parse(zres.report)["result"].contains("modularity_max_relative"));
}

TEST_CASE("sweep subcommand") {
    cli::CommandRequest req;
    req.subcommand = "sweep";
    req.mode = "exact";
    req.family = "hecke";
    req.grid = "1/2:3/2:3";
    auto res = cli::run(req);
    CHECK(res.exit_code == 0);
    auto doc = json::parse(res.report);
    CHECK(doc["result"]["points"].size() == 3);
    CHECK(doc["result"]["points"][0]["entry"] == "hecke(1/2)");

    req.family = "maass";
    req.grid = "1,1/2";  // unsorted list input comes back sorted
    auto mres = cli::run(req);
    CHECK(mres.exit_code == 0);
    auto mdoc = json::parse(mres.report);
    CHECK(mdoc["result"]["points"].size() == 4);  // both parities per point
    CHECK(mdoc["result"]["points"][0]["entry"] == "maass(0,1/2)");

    req.family = "other";
    CHECK(cli::run(req).exit_code == 2);
    req.family = "hecke";
    req.grid = "";
    CHECK(cli::run(req).exit_code == 2);
}

TEST_CASE("determinism and mode resolution") {
    auto a = cli::run(request("classify", "maass(1,3/2)"));
    auto b = cli::run(request("classify", "maass(1,3/2)"));
    CHECK(a.report == b.report);

    // empty mode falls back to the environment override
    cli::CommandRequest req = request("invariants", "zeta_squared");
    req.mode.clear();
    setenv("SELBERGLAB_MODE", "float", 1);
    auto fres = cli::run(req);
    CHECK(json::parse(fres.report)["mode"] == "float");
    CHECK(json::parse(fres.report)["result"]["chi"]["provenance"] == "float");
    setenv("SELBERGLAB_MODE", "bogus", 1);
    CHECK(cli::run(req).exit_code == 2);
    unsetenv("SELBERGLAB_MODE");
    CHECK(json::parse(cli::run(req).report)["mode"] == "exact");
}
