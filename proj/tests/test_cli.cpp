#include "cli.hpp"

#include <gpm/edge_list.hpp>
#include <gpm/generators.hpp>
#include <gpm/transforms.hpp>

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {
struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string & input = {})
{
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = gpm::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string & s)
{
    return s.substr(0, s.find('\n'));
}
}

TEST_CASE("gen pipes into saturation and matching")
{
    auto g = run({"gen", "path", "8", "--power", "3"});
    REQUIRE(g.code == 0);
    auto s = run({"saturation", "-"}, g.out);
    CHECK(s.code == 0);
    CHECK(first_line(s.out) == "3");
    CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 4);

    auto f = run({"gen", "friendship", "4", "--subdiv", "2"});
    auto m = run({"matching", "-"}, f.out);
    CHECK(m.code == 0);
    CHECK(first_line(m.out) == "9");
}

TEST_CASE("gen output is lossless")
{
    auto g = run({"gen", "cactus", "3", "--power", "2", "--subdiv", "3"});
    REQUIRE(g.code == 0);
    auto expected = gpm::fractional_power(gpm::chain_triangular_cactus(3), 2, 3);
    auto parsed = gpm::parse_edge_list(g.out);
    CHECK(parsed == expected);
    CHECK(gpm::format_edge_list(parsed) == g.out);
    CHECK(run({"gen", "bipartite", "3", "2"}).out == gpm::format_edge_list(gpm::complete_bipartite(2, 3)));
}

TEST_CASE("formula")
{
    CHECK(run({"formula", "saturation", "cactus", "--k", "5", "--subdiv", "4"}).out == "19\n");
    CHECK(run({"formula", "matching", "friendship", "--k", "4", "--subdiv", "2"}).out == "9\n");
    CHECK(run({"formula", "matching", "bipartite", "--m", "1", "--n", "3", "--subdiv", "2"}).out
        == "UnsupportedDomain\n");
    CHECK(run({"formula", "saturation", "friendship", "--k", "4"}).out == "NotCovered\n");
    CHECK(run({"formula", "bounds", "cactus", "--k", "2", "--power", "6", "--subdiv", "3"}).out == "[6,8]\n");
    CHECK(run({"formula", "unsaturated", "path", "--k", "8", "--power", "3"}).out == "2\n");
}

TEST_CASE("verify")
{
    auto r = run({"verify", "path", "--quantity", "matching", "--k", "2..8", "--m", "1..4", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 29);

    // Mismatch rows do not change the exit code.
    auto f = run({"verify", "friendship", "--k", "3", "--m", "1", "--n", "2", "--format", "json"});
    CHECK(f.code == 0);
    CHECK(f.out.find("\"Mismatch\"") != std::string::npos);

    auto path = std::filesystem::temp_directory_path() / "gpm_cli_test_report.md";
    auto w = run({"verify", "cycle", "--k", "3..5", "--n", "2", "--format", "md", "--out", path.string()});
    CHECK(w.code == 0);
    CHECK(w.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str().rfind("### cycle / matching", 0) == 0);
    std::filesystem::remove(path);
}

TEST_CASE("figures")
{
    auto r = run({"figures"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
    CHECK(r.out.find("PASS P_8^3") != std::string::npos);
    CHECK(r.out.find("PASS F_4^{1/2}") != std::string::npos);
}

TEST_CASE("budget from the environment")
{
    auto g = run({"gen", "cactus", "3", "--power", "3", "--subdiv", "3"});
    ::setenv("GPM_BUDGET", "5", 1);
    CHECK(run({"saturation", "-"}, g.out).out == "Exceeded\n");
    ::setenv("GPM_BUDGET", "junk", 1);
    CHECK(run({"saturation", "-"}, g.out).code == gpm::cli::exit_input_error);
    ::unsetenv("GPM_BUDGET");
    CHECK(run({"saturation", "-", "--budget", "5"}, g.out).out == "Exceeded\n");
}

TEST_CASE("input errors exit with 1")
{
    using gpm::cli::exit_input_error;
    CHECK(run({}).code == exit_input_error);
    CHECK(run({"frobnicate"}).code == exit_input_error);
    CHECK(run({"gen", "wheel", "5"}).code == exit_input_error);
    CHECK(run({"gen", "cycle", "2"}).code == exit_input_error);
    CHECK(run({"gen", "bipartite", "3"}).code == exit_input_error);
    CHECK(run({"matching", "-"}, "p 3 1\n0 5\n").code == exit_input_error);
    CHECK(run({"matching", "/nonexistent/graph.txt"}).code == exit_input_error);
    CHECK(run({"saturation", "-", "--budget", "x"}, "p 1 0\n").code == exit_input_error);
    CHECK(run({"formula", "saturation", "cactus"}).code == exit_input_error);
    CHECK(run({"formula", "speed", "cactus", "--k", "2"}).code == exit_input_error);
    CHECK(run({"verify", "path", "--k", "5..2"}).code == exit_input_error);
    CHECK(run({"verify", "path", "--k", "2", "--format", "xml"}).code == exit_input_error);
    CHECK(run({"verify", "path", "--k", "2", "--quantity", "speed"}).code == exit_input_error);
    auto e = run({"gen", "cycle", "2"});
    CHECK_FALSE(e.err.empty());
    CHECK(e.out.empty());
}

TEST_CASE("help exits cleanly")
{
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
}
