/* test_cli.cpp: end-to-end checks of the command-line surface */

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "cli_helpers.hpp"

using easter_test::run_cli;

namespace {

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("cli: year with trace prints the walkthrough values")
{
    const auto r = run_cli("year 1994 --trace");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("z_a   = 71") != std::string::npos);
    CHECK(r.output.find("m_ac  = 7") != std::string::npos);
    CHECK(r.output.find("z_p   = 86") != std::string::npos);
    CHECK(r.output.find("27 March") != std::string::npos);
}

TEST_CASE("cli: year where the three methods agree")
{
    const auto r = run_cli("year 2010");
    CHECK(r.exit_code == 0);
    size_t hits = 0;
    size_t pos = 0;
    while ((pos = r.output.find("4 April", pos)) != std::string::npos) {
        ++hits;
        pos += 1;
    }
    CHECK(hits == 3);
}

TEST_CASE("cli: out-of-range year exits 2")
{
    const auto r = run_cli("year 1200");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("out of supported range") != std::string::npos);
}

TEST_CASE("cli: inverted range exits 2")
{
    const auto r = run_cli("range --from 2000 --to 1999");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli: unknown arguments exit 2")
{
    CHECK(run_cli("range --from 2000").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("cli: single-year csv row")
{
    const auto r = run_cli("range --from 1994 --to 1994 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "year,orthodox,catholic,astronomical\n"
          "1994,1994-05-01,1994-04-03,1994-03-27\n");
}

TEST_CASE("cli: range output is byte-identical across runs")
{
    const auto first = run_cli("range --from 1950 --to 2050 --format table");
    const auto second = run_cli("range --from 1950 --to 2050 --format table");
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
}

TEST_CASE("cli: stats over the fixture century")
{
    const auto r = run_cli("stats --from 1950 --to 2050");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("years analyzed: 101") != std::string::npos);
    CHECK(r.output.find("-7:") != std::string::npos);
    CHECK(r.output.find("+28:") != std::string::npos);
}

TEST_CASE("cli: verify against the shipped fixture")
{
    const auto r = run_cli("verify");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("303/303 dates match") != std::string::npos);
}

TEST_CASE("cli: verify flags a corrupted cell and exits 1")
{
    std::ifstream in(EASTER_FIXTURE_PATH);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    const std::string good = "1994,1994-05-01,1994-04-03,1994-03-27";
    const std::string bad = "1994,1994-05-01,1994-04-03,1994-04-03";
    const auto pos = content.find(good);
    REQUIRE(pos != std::string::npos);
    content.replace(pos, good.size(), bad);
    const std::string path = temp_path("easter_cli_fault.csv");
    std::ofstream(path, std::ios::trunc) << content;

    const auto r = run_cli("verify --fixture \"" + path + "\"");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("1994") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cli: verify on an empty fixture exits 3")
{
    const std::string path = temp_path("easter_cli_empty.csv");
    std::ofstream(path, std::ios::trunc);
    const auto r = run_cli("verify --fixture \"" + path + "\"");
    CHECK(r.exit_code == 3);
    std::remove(path.c_str());
}

TEST_CASE("cli: verify on a missing fixture exits 3")
{
    const auto r = run_cli("verify --fixture /nonexistent/easter.csv");
    CHECK(r.exit_code == 3);
}
