#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// Exercises the installed binary end to end. The binary path arrives in the
// MSDB_CLI environment variable, set by the test harness.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_path() {
    const char* path = std::getenv("MSDB_CLI");
    REQUIRE_MESSAGE(path != nullptr, "MSDB_CLI must point at the binary");
    return path;
}

RunResult run(const std::string& args) {
    const std::string command = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string strip(std::string text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == ' '))
        text.pop_back();
    return text;
}

} // namespace

TEST_CASE("generate prints the reference greedy sequence") {
    const auto result = run("generate -a 2 -m 2 -n 5 --algorithm greedy");
    CHECK(result.exit_code == 0);
    CHECK(strip(result.output) ==
          "0000011111110111010110111011001110011001010011000100001010100010000");
}

TEST_CASE("generate emits json when asked") {
    const auto result = run("generate -a 2 -m 1 -n 2 --format json");
    CHECK(result.exit_code == 0);
    const json j = json::parse(result.output);
    CHECK(j.at("word") == "00110");
    CHECK(j.at("length") == 5);
    CHECK(j.at("algorithm") == "auto");
}

TEST_CASE("generate output is bit-identical across runs") {
    const auto first = run("generate -a 3 -m 2 -n 5");
    const auto second = run("generate -a 3 -m 2 -n 5");
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
}

TEST_CASE("verify accepts the reference sequence and reports through exit codes") {
    CHECK(run("verify -a 2 -m 2 -n 3 00010011100110110").exit_code == 0);
    CHECK(run("verify -a 2 -m 1 -n 2 00000").exit_code == 1);
    CHECK(run("verify -a 2 -m 1 -n 2 00210").exit_code == 2);
    CHECK(run("verify -a 2 -m 1 -n 29 0011").exit_code == 3);
}

TEST_CASE("verify reads a word from stdin") {
    const std::string command = "echo 00110 | " + cli_path() + " verify -a 2 -m 1 -n 2 -";
    CHECK(WEXITSTATUS(std::system(command.c_str())) == 0);
}

TEST_CASE("verify json report") {
    const auto result = run("verify -a 2 -m 1 -n 2 00110 --format json");
    CHECK(result.exit_code == 0);
    const json j = json::parse(result.output);
    CHECK(j.at("ok") == true);
    CHECK(j.at("missing_count") == 0);
}

TEST_CASE("count reports the exact value and branch") {
    const auto result = run("count -a 2 -m 2 -n 3 --format json");
    CHECK(result.exit_code == 0);
    const json j = json::parse(result.output);
    CHECK(j.at("exact") == "576");
    CHECK(j.at("branch") == "shift_at_most_order");
    CHECK(j.at("digits") == 3);
}

TEST_CASE("count omits the exact value past the digit guard") {
    const auto result = run("count -a 2 -m 1 -n 24 --format json");
    CHECK(result.exit_code == 0);
    const json j = json::parse(result.output);
    CHECK(j.at("exact").is_null());
}

TEST_CASE("enumerate lists small families") {
    const auto result = run("enumerate -a 2 -m 1 -n 2 --words --format json");
    CHECK(result.exit_code == 0);
    const json j = json::parse(result.output);
    CHECK(j.at("count") == "4");
    CHECK(j.at("words").size() == 4);
    CHECK(run("enumerate -a 2 -m 2 -n 3 --cap 100").exit_code == 3);
}

TEST_CASE("graph statistics as json") {
    const auto result = run("graph -a 2 -m 2 -n 1");
    CHECK(result.exit_code == 0);
    const json j = json::parse(result.output);
    CHECK(j.at("vertices") == 2);
    CHECK(j.at("arcs") == 8);
    CHECK(j.at("degree") == 4);
    CHECK(j.at("connected") == true);
    CHECK(j.at("arborescences") == "2");
    CHECK(j.at("euler_tours") == "72");
}

TEST_CASE("frobenius analysis of the reference instance") {
    const auto result = run("frobenius -a 2 -m 3 -n 7 --words");
    CHECK(result.exit_code == 0);
    const json j = json::parse(result.output);
    CHECK(j.at("l") == 52);
    CHECK(j.at("g") == 101);
    CHECK(j.at("excluded_count") == 15);
    CHECK(j.at("finite") == true);
    CHECK(j.at("longest_length") == 101);
    CHECK(j.at("longest_count") == "8");
    CHECK(j.at("longest_words").size() == 8);
}

TEST_CASE("frobenius generator dump") {
    const auto result = run("frobenius -a 2 -m 2 -n 3 --dump-s");
    CHECK(result.exit_code == 0);
    // Sigma^2 plus Sigma^3 minus the excluded window 001.
    CHECK(strip(result.output) == "00\n01\n10\n11\n000\n010\n011\n100\n101\n110\n111");
}

TEST_CASE("argument errors use exit code 2") {
    CHECK(run("generate -a 2 -m 2 -n 5 --algorithm multiple").exit_code == 2);
    CHECK(run("generate -a 2 -m 2").exit_code == 2);
    CHECK(run("frobenius -a 2 -m 2 -n 4").exit_code == 2);
}

TEST_CASE("generate output feeds back into verify") {
    const struct {
        const char* args;
        const char* check;
    } cases[] = {
        {"generate -a 2 -m 1 -n 3", "verify -a 2 -m 1 -n 3 -"},
        {"generate -a 2 -m 2 -n 5", "verify -a 2 -m 2 -n 5 -"},
        {"generate -a 3 -m 2 -n 4", "verify -a 3 -m 2 -n 4 -"},
        {"generate -a 2 -m 4 -n 2", "verify -a 2 -m 4 -n 2 -"},
        {"generate -a 2 -m 3 -n 5 --algorithm interleave", "verify -a 2 -m 3 -n 5 -"},
        {"generate -a 4 -m 2 -n 3 --prefer smallest", "verify -a 4 -m 2 -n 3 -"},
    };
    for (const auto& c : cases) {
        const std::string command =
            cli_path() + " " + c.args + " | " + cli_path() + " " + c.check + " >/dev/null";
        CHECK_MESSAGE(WEXITSTATUS(std::system(command.c_str())) == 0, c.args);
    }
}
