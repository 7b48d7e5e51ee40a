#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "serialize.hpp"
#include "variety.hpp"

#ifndef MMSET_CLI_PATH
#error "MMSET_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string out_file = "/tmp/mmset_cli_stdout.txt";
    std::string cmd = std::string(MMSET_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream is(out_file);
    std::stringstream ss;
    ss << is.rdbuf();
    return {WEXITSTATUS(status), ss.str()};
}

}  // namespace

TEST_CASE("build writes a summary line and a loadable file") {
    auto r = run_cli("build --family grassmann --m 5 --p 2 --out /tmp/mmset_cli_g5.mmset");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("d=4") != std::string::npos);
    CHECK(r.out.find("N=14") != std::string::npos);
    CHECK(r.out.find("points=651") != std::string::npos);
    auto loaded = mmset::ser::load_file("/tmp/mmset_cli_g5.mmset");
    CHECK(loaded.size() == 651);
}

TEST_CASE("build rejects e6 over q != 2 with exit code 3") {
    auto r = run_cli("build --family e6 --p 3 --out /tmp/mmset_cli_e6bad.mmset");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("q=2") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("build --family nosuch --p 2 --out /tmp/x.mmset").exit_code == 2);
    CHECK(run_cli("verify --in /nonexistent.mmset").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("verify passes on a built variety and reports are deterministic") {
    REQUIRE(run_cli("build --family veronese --n 2 --p 3 --out /tmp/mmset_cli_v23.mmset").exit_code == 0);
    auto r1 = run_cli("verify --in /tmp/mmset_cli_v23.mmset --seed 9 --format json --out /tmp/mmset_cli_rep1.json");
    CHECK(r1.exit_code == 0);
    auto r2 = run_cli("verify --in /tmp/mmset_cli_v23.mmset --seed 9 --format json --out /tmp/mmset_cli_rep2.json");
    CHECK(r2.exit_code == 0);
    std::ifstream a("/tmp/mmset_cli_rep1.json"), b("/tmp/mmset_cli_rep2.json");
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(!sa.str().empty());
    auto parsed = nlohmann::json::parse(sa.str());
    CHECK(parsed["all_pass"] == true);
    CHECK(parsed["header"]["points"] == 13);
}

TEST_CASE("verify on a corrupted file exits 1 with a witness") {
    using namespace mmset;
    auto s22 = var::segre(2, 2, gf::field(2, 1));
    var::MMSet corrupted = s22;
    corrupted.symps.erase(corrupted.symps.begin());  // orphan a pair
    ser::save_file(corrupted, "/tmp/mmset_cli_corrupt.mmset");
    auto r = run_cli("verify --in /tmp/mmset_cli_corrupt.mmset --seed 5 --format json");
    CHECK(r.exit_code == 1);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["all_pass"] == false);
    bool witness_found = false;
    for (const auto& rec : parsed["checks"])
        if (rec["name"] == "mm1" && rec["status"] == "fail" && !rec["witnesses"].empty())
            witness_found = true;
    CHECK(witness_found);
}

TEST_CASE("verify demands a seed when sampling") {
    REQUIRE(run_cli("build --family halfspin --p 2 --out /tmp/mmset_cli_hs.mmset").exit_code == 0);
    auto r = run_cli("verify --in /tmp/mmset_cli_hs.mmset --checks quadrangle");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("seed") != std::string::npos);
}

TEST_CASE("residue command writes a re-verifiable file with tower comparison") {
    REQUIRE(run_cli("build --family grassmann --m 4 --p 2 --out /tmp/mmset_cli_g4.mmset").exit_code == 0);
    auto r = run_cli("residue --in /tmp/mmset_cli_g4.mmset --point 0 --out /tmp/mmset_cli_g4res.mmset");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["status"] == "ok");
    CHECK(parsed["expected_family"] == "segre");
    CHECK(parsed["counts_match"] == true);
    auto rv = run_cli("verify --in /tmp/mmset_cli_g4res.mmset --seed 2");
    CHECK(rv.exit_code == 0);
}

TEST_CASE("residue of a non-proper input reports degenerate status") {
    REQUIRE(run_cli("build --family grassmann --m 3 --p 2 --out /tmp/mmset_cli_g3.mmset").exit_code == 0);
    auto r = run_cli("residue --in /tmp/mmset_cli_g3.mmset --point 0");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["status"] == "degenerate");
}
