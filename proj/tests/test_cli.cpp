#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "effalg/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace effalg;

namespace {

RunConfig config_for(const std::string& command, const std::string& file = {})
{
    RunConfig c;
    c.command = command;
    if (!file.empty())
        c.input = std::string(EFFALG_DATA_DIR) + "/" + file;
    return c;
}

int run(std::vector<std::string> args, std::string& out)
{
    std::vector<char*> argv;
    args.insert(args.begin(), "effalg");
    for (auto& a : args)
        argv.push_back(a.data());
    std::ostringstream o, e;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), o, e);
    out = o.str();
    return code;
}

} // namespace

TEST_CASE("validate")
{
    auto ok = run_command(config_for("validate", "boolean2.json"));
    CHECK(ok.exit_code == kPass);
    CHECK(ok.report["valid"] == true);
    auto bad = run_command(config_for("validate", "invalid_zero_one.json"));
    CHECK(bad.exit_code == kCheckFailed);
    CHECK(bad.report["violation"]["axiom"] == "zero-one");
    CHECK(bad.report["violation"]["witness"] == Json::array({1}));
}

TEST_CASE("operators on boolean(2) with n = 3")
{
    auto c = config_for("operators", "boolean2.json");
    c.n = 3;
    auto r = run_command(c);
    CHECK(r.exit_code == kPass);
    CHECK(r.report["endomorphisms"] == 4);
    CHECK(r.report["operator_count"] == 4);
    CHECK(r.report["idempotent"] == 3);
    CHECK(r.report["strictly_n_potent"] == 1);
}

TEST_CASE("states on chain(2) x chain(2)")
{
    auto r = run_command(config_for("states", "chain2_squared.json"));
    CHECK(r.exit_code == kPass);
    CHECK(r.report["vertex_count"] == 2);
    CHECK(r.report["vertices"][0][3] == "1/2");
    CHECK(r.report["active_set_cross_check"]["agree"] == true);
}

TEST_CASE("analyze even_subsets(4)")
{
    auto r = run_command(config_for("analyze", "even_subsets4.json"));
    CHECK(r.exit_code == kPass);
    CHECK(r.report["rdp"]["holds"] == false);
    CHECK(r.report["rdp"]["witness"].size() == 4);
    CHECK(r.report["ideal_count"] == 28);
}

TEST_CASE("duality")
{
    auto r = run_command(config_for("duality", "simplex_swap.json"));
    CHECK(r.exit_code == kPass);
    CHECK(r.report["round_trip"]["ok"] == true);
    auto c = config_for("duality", "simplex_swap.json");
    c.n = 2;
    CHECK(run_command(c).exit_code == kCheckFailed);
    CHECK(run_command(config_for("duality", "simplex_constant.json")).exit_code == kPass);
}

TEST_CASE("materialized group input")
{
    auto r = run_command(config_for("analyze", "interval_2_1.json"));
    CHECK(r.exit_code == kPass);
    CHECK(r.report["n"] == 6);
    CHECK(r.report["rdp"]["holds"] == true);
}

TEST_CASE("errors map to exit code 2")
{
    CHECK(run_command(config_for("analyze", "missing.json")).exit_code == kUsageError);
    auto c = config_for("operators", "even_subsets4.json");
    c.guard_elements = 4;
    auto r = run_command(c);
    CHECK(r.exit_code == kUsageError);
    CHECK(r.report.contains("error"));
    CHECK(run_command(config_for("frobnicate")).exit_code == kUsageError);
    auto strict = config_for("states");
    strict.input = std::string(EFFALG_DATA_DIR) + "/invalid_zero_one.json";
    CHECK(run_command(strict).exit_code == kUsageError);
}

TEST_CASE("command line parsing and reproducible reports")
{
    std::string a, b;
    const std::string input = std::string(EFFALG_DATA_DIR) + "/chain2_squared.json";
    CHECK(run({"operators", "--input", input, "--n", "3", "--seed", "9"}, a) == kPass);
    CHECK(run({"operators", "--input", input, "--n", "3", "--seed", "9"}, b) == kPass);
    CHECK(a == b);
    CHECK(Json::parse(a)["operator_count"] == 4);
    std::string unused;
    CHECK(run({}, unused) == kUsageError);
    CHECK(run({"operators"}, unused) == kUsageError);
    CHECK(run({"--help"}, unused) == kPass);

    const std::string path = "cli_test_output.json";
    CHECK(run({"validate", "--input", std::string(EFFALG_DATA_DIR) + "/chain3.json", "--output", path},
              unused)
        == kPass);
    std::ifstream in(path);
    CHECK(Json::parse(in)["valid"] == true);
    std::remove(path.c_str());
}
