#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <regex>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(KRON_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string scrub_elapsed(std::string text) {
    static const std::regex elapsed("\"elapsed_ms\": [0-9.eE+-]+");
    return std::regex_replace(text, elapsed, "\"elapsed_ms\": X");
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("count with cross-checked engines") {
    const RunResult r = run_cli("count --n 3 --method all");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "k(3) = 19\n");
}

TEST_CASE("count single engines") {
    CHECK(run_cli("count --n 0 --method partition").output == "k(0) = 1\n");
    CHECK(run_cli("count --n 0 --method enumerate").output == "k(0) = 1\n");
    CHECK(run_cli("count --n 100 --method series").output == "k(100) = 13445370780675\n");
    CHECK(run_cli("count --n 5 --method enumerate").output == "k(5) = 81\n");
}

TEST_CASE("count JSON envelope") {
    const RunResult r = run_cli("count --n 20 --method series --format json");
    CHECK(r.exit_code == 0);
    const auto envelope = nlohmann::json::parse(r.output);
    CHECK(envelope["command"] == "count");
    CHECK(envelope["inputs"]["n"] == 20);
    CHECK(envelope["inputs"]["method"] == "series");
    CHECK(envelope["result"]["k"] == "96143");
    CHECK(envelope["elapsed_ms"].is_number());
}

TEST_CASE("count guards the enumerate method") {
    CHECK(run_cli("count --n 13 --method enumerate").exit_code == 2);
    CHECK(run_cli("count --n 13 --method enumerate --guard-override").output == "k(13) = 5675\n");
}

TEST_CASE("enumerate text output") {
    const RunResult r = run_cli("enumerate --n 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "degree 1: 3 candidates, 3 Kronecker polynomials\n"
                      "  z - 1  =  g_1\n"
                      "  z  =  z\n"
                      "  z + 1  =  g_2\n");
}

TEST_CASE("enumerate JSON matches the schema") {
    const RunResult r = run_cli("enumerate --n 2 --format json");
    CHECK(r.exit_code == 0);
    const auto envelope = nlohmann::json::parse(r.output);
    const auto& result = envelope["result"];
    CHECK(result["degree"] == 2);
    CHECK(result["candidates"] == "15");
    CHECK(result["count"] == 9);
    REQUIRE(result["polynomials"].size() == 9);
    // first entry in ascending coefficient order: z^2 - 1
    const auto& first = result["polynomials"][0];
    CHECK(first["coeffs"] == nlohmann::json({"-1", "0", "1"}));
    CHECK(first["shift"] == 0);
    REQUIRE(first["factors"].size() == 2);
    CHECK(first["factors"][0]["index"] == 1);
    CHECK(first["factors"][0]["multiplicity"] == 1);
    CHECK(first["factors"][1]["index"] == 2);

    std::size_t shifted = 0;
    for (const auto& entry : result["polynomials"])
        if (entry["shift"] != 0)
            ++shifted;
    CHECK(shifted == 3); // z^2, z(z-1), z(z+1)
}

TEST_CASE("enumerate guard") {
    CHECK(run_cli("enumerate --n 13").exit_code == 2);
    CHECK(run_cli("enumerate --n 0").exit_code == 2);
}

TEST_CASE("check verdicts and exit codes") {
    RunResult r = run_cli("check --poly 1,1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "Kronecker: z^2 + z + 1  =  g_3\n");

    r = run_cli("check --poly -1,0,0,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "Kronecker: z^3 - 1  =  g_1 * g_3\n");

    r = run_cli("check --poly -1,-1,1");
    CHECK(r.exit_code == 1);
    CHECK(r.output == "not Kronecker: z^2 - z - 1\n");
}

TEST_CASE("check JSON") {
    const RunResult r = run_cli("check --poly 0,0,1,1 --format json");
    CHECK(r.exit_code == 0);
    const auto envelope = nlohmann::json::parse(r.output);
    CHECK(envelope["result"]["kronecker"] == true);
    CHECK(envelope["result"]["shift"] == 2);
    CHECK(envelope["result"]["factors"][0]["index"] == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("check --poly 1,x,1").exit_code == 2);
    CHECK(run_cli("check --poly 1,2").exit_code == 2);       // not monic
    CHECK(run_cli("check --poly 5").exit_code == 2);         // degree 0
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("count").exit_code == 2);                  // missing --n
    CHECK(run_cli("count --n 3 --method bogus").exit_code == 2);
    CHECK(run_cli("count --n -4").exit_code == 2);
}

TEST_CASE("cyclotomic command") {
    CHECK(run_cli("cyclotomic --n 6").output == "g_6 = z^2 - z + 1\n");
    const RunResult r = run_cli("cyclotomic --n 12 --format json");
    const auto envelope = nlohmann::json::parse(r.output);
    CHECK(envelope["result"]["degree"] == 4);
    CHECK(envelope["result"]["coeffs"] == nlohmann::json({"1", "0", "-1", "0", "1"}));
    CHECK(envelope["result"]["pretty"] == "z^4 - z^2 + 1");
}

TEST_CASE("inv-totient command") {
    CHECK(run_cli("inv-totient --j 8").output == "15 16 20 24 30\n");
    CHECK(run_cli("inv-totient --j 3").output == "phi^-1(3) is empty\n");
    const RunResult r = run_cli("inv-totient --j 2 --format json");
    const auto envelope = nlohmann::json::parse(r.output);
    CHECK(envelope["result"]["count"] == 3);
    CHECK(envelope["result"]["members"] == nlohmann::json({3, 4, 6}));
}

TEST_CASE("power-map command") {
    CHECK(run_cli("power-map --poly 1,-1,1 --k 2").output == "z^2 + z + 1\n");
    CHECK(run_cli("power-map --poly 1,1 --k 2").output == "z - 1\n");
    CHECK(run_cli("power-map --poly 1,1 --k 0").exit_code == 2);
}

TEST_CASE("JSON output is byte-identical across runs modulo elapsed_ms") {
    const std::string args = "enumerate --n 4 --format json";
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(scrub_elapsed(first.output) == scrub_elapsed(second.output));
    CHECK(scrub_elapsed(first.output) != first.output); // elapsed_ms was present
}

TEST_CASE("help exits zero") {
    CHECK(run_cli("--help").exit_code == 0);
}

} // TEST_SUITE
