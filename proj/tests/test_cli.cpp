// Drives the installed command line binary end to end through a shell and
// checks the JSON it prints. The binary path comes in through a compile
// definition so the tests always exercise the freshly built tool.

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args)
{
    std::string cmd = std::string(ORLIK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json run_json(const std::string& args, int expect_code = 0)
{
    RunResult r = run_cli(args);
    REQUIRE(r.exit_code == expect_code);
    return json::parse(r.out);
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("decompose a triple join of nodes")
    {
        json j = run_json("decompose 'chain(1)+chain(1)+chain(1)'");
        CHECK(j["input"] == "chain(1)+chain(1)+chain(1)");
        CHECK(j["mu"] == 1);
        CHECK(j["covering"] == json::parse("[[2]]"));
        CHECK(j["p_j"] == json::parse("[[1,1]]"));
        CHECK(j["orders"] == json::parse(R"({"2":{"s":1,"S":[0,1]}})"));
        CHECK(j["compatible"] == true);
        CHECK(j["conjectural"] == false);
    }

    TEST_CASE("tensor check reports the failing edge")
    {
        json j = run_json("check-tensor --m 3 --n 2,3");
        CHECK(j == json::parse(R"({"sufficient":false,"witness":{"p":2,"edge":[6,3]}})"));

        json ok = run_json("check-tensor --m 3 --n 1,2,3");
        CHECK(ok["sufficient"] == true);
        CHECK(ok["witness"].is_null());
    }

    TEST_CASE("power check")
    {
        json j = run_json("check-power --m 1,2,6 --mu 4");
        CHECK(j["sufficient"] == true);
        CHECK(j["witness"].is_null());
    }

    TEST_CASE("link homology of the triple join")
    {
        json j = run_json("link 'chain(1)+chain(1)+chain(1)'");
        CHECK(j["l"] == 0);
        CHECK(j["torsion"] == json::parse("[2]"));
    }

    TEST_CASE("characteristic polynomial of a weight system")
    {
        json j = run_json("charpoly 'weights(1/2,1/3)'");
        CHECK(j["input"] == "weights(1/2,1/3)");
        CHECK(j["kind"] == "weights");
        CHECK(j["mu"] == 2);
        CHECK(j["chi"] == json::parse(R"({"6":1})"));
        CHECK(j["coefficients"] == json::parse("[1,-1,1]"));

        json e = run_json("charpoly 'chain(2,2)'");
        CHECK(e["kind"] == "expression");
        CHECK(e["mu"] == 4);
        CHECK(e["chi"] == json::parse(R"({"1":2,"3":1})"));
    }

    TEST_CASE("verify emits a unimodular conjugation")
    {
        json j = run_json("verify 'chain(2)+chain(2)'");
        CHECK(j["rank"] == 4);
        CHECK(j["verified"] == true);
        CHECK((j["det"] == 1 || j["det"] == -1));
        CHECK(j["covering"] == json::parse("[[1,3],[1]]"));
        CHECK(j["p_j"] == json::parse("[[-1,0,0,1],[-1,1]]"));
        CHECK(j["monodromy"].size() == 4);
        CHECK(j["basis"].size() == 4);
    }

    TEST_CASE("covering enumeration")
    {
        json j = run_json("coverings 'cycle(2,3)'");
        CHECK(j["chi"] == json::parse(R"({"1":2,"5":1})"));
        CHECK(j["count"] == 1);
        CHECK(j["coverings"] == json::parse("[[[1,5],[1]]]"));
    }

    TEST_CASE("invalid input exits with code one")
    {
        CHECK(run_cli("decompose 'chaim(2)'").exit_code == 1);
        CHECK(run_cli("decompose 'cycle(1,1)'").exit_code == 1);
        CHECK(run_cli("verify 'weights(1/2,1/3)'").exit_code == 1);
        CHECK(run_cli("check-power --m 0 --mu 2").exit_code == 1);
        CHECK(run_cli("link 'chain(2,2)'").exit_code == 1);
    }

    TEST_CASE("an inconsistent weight system exits with code two")
    {
        CHECK(run_cli("charpoly 'weights(2/5,4/5)'").exit_code == 2);
    }

    TEST_CASE("output is deterministic")
    {
        RunResult a = run_cli("decompose 'chain(3,2)+cycle(2,3)'");
        RunResult b = run_cli("decompose 'chain(3,2)+cycle(2,3)'");
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
    }

    TEST_CASE("table format")
    {
        RunResult r = run_cli("--format table decompose 'chain(2,2)'");
        CHECK(r.exit_code == 0);
        CHECK(!r.out.empty());
        CHECK(r.out[0] != '{');
        CHECK(r.out.find("mu: 4") != std::string::npos);
    }

    TEST_CASE("out flag writes the json to a file")
    {
        std::string path = "cli_out_test.json";
        std::remove(path.c_str());
        RunResult r = run_cli("--out " + path + " decompose 'chain(2,2)'");
        CHECK(r.exit_code == 0);
        std::ifstream f(path);
        REQUIRE(f.good());
        std::stringstream ss;
        ss << f.rdbuf();
        CHECK(json::parse(ss.str()) == json::parse(r.out));
        std::remove(path.c_str());
    }

    TEST_CASE("bounded sweep")
    {
        json j = run_json("--max-mu 12 --max-rank 12 --seed 1 sweep");
        CHECK(j["sections"]["chains"]["instances"].get<long long>() > 0);
        CHECK(j["sections"]["cycles"]["instances"].get<long long>() > 0);
        CHECK(j["sections"]["sums"]["instances"] == 20);
        CHECK(j["sections"]["tensor"]["instances"] == 50);
        CHECK(j["evidence"].is_array());
    }

    TEST_CASE("help exits cleanly")
    {
        RunResult r = run_cli("--help");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("decompose") != std::string::npos);
    }
}
