#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

/// Runs the CLI with `args`, capturing stdout; stderr is discarded.
Run run(const std::string& args) {
    const std::string cmd = std::string(SPX_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::size_t line_count(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) n += c == '\n' ? 1 : 0;
    return n;
}

}  // namespace

TEST_CASE("gen writes one graph6 line per class") {
    CHECK(line_count(run("gen --n 5").out) == 34);
    CHECK(line_count(run("gen --n 5 --forbid K3").out) == 14);
    CHECK(run("gen --n 7 --jobs 1").out == run("gen --n 7 --jobs 3").out);
}

TEST_CASE("exit codes") {
    CHECK(run("").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("extremal --n 5").status == 2);
    CHECK(run("extremal --n 5 --forbid Q3").status == 3);
    CHECK(run("spectral --g6 'D~ {'").status == 3);
    CHECK(run("secular --parts 2,x,1").status == 3);
    CHECK(run("gen --n 11").status == 4);
    CHECK(run("extremal --n 11 --forbid K3").status == 4);
    CHECK(run("turan --n 3 --r 5").status == 2);
    CHECK(run("--help").status == 0);
}

TEST_CASE("extremal JSON") {
    const auto r = run("extremal --n 6 --forbid F2 --json");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["ex"] == 10);
    CHECK(j["excess"] == 1);
    CHECK(j["contained"] == true);
    CHECK(j["spec"]["chi"] == 3);
    CHECK(j["reference"] == "no external reference");
}

TEST_CASE("verify output does not depend on jobs") {
    const auto a = run("verify --forbid K3 --n-min 3 --n-max 8 --json --jobs 1");
    const auto b = run("verify --forbid K3 --n-min 3 --n-max 8 --json --jobs 4");
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["rows"].size() == 6);
    for (const auto& row : j["rows"]) CHECK(row["contained"] == true);
    CHECK(line_count(run("verify --forbid K3 --n-min 3 --n-max 8").out) == 9);
}

TEST_CASE("spectral, secular and turan") {
    auto j = nlohmann::json::parse(run("spectral --g6 D~{ --exact --json").out);
    CHECK(std::abs(j["lambda"].get<double>() - 4.0) < 1e-10);
    CHECK(j["exact"] == true);
    CHECK(j["x"].size() == 5);

    j = nlohmann::json::parse(run("secular --parts 2,2,1 --json").out);
    CHECK(std::abs(j["lambda"].get<double>() - (1.0 + std::sqrt(5.0))) < 1e-10);

    j = nlohmann::json::parse(run("turan --n 7 --r 3 --json").out);
    CHECK(j["edges"] == 16);
    CHECK(j["k"] == 1);
    CHECK(std::abs(j["lambda"].get<double>() - (1.0 + std::sqrt(13.0))) < 1e-10);
}

TEST_CASE("diagnose") {
    const auto r = run("diagnose --g6 EFz_ --forbid K3 --a 0 --json");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["lemma_report"]["checks"].size() == 7);
    CHECK(j["wl"].contains("W"));
}

TEST_CASE("environment defaults") {
    CHECK(run("gen --n 6").out == run("gen --n 6 --jobs 2").out);
    const auto env = run("gen --n 6");
    setenv("JOBS", "2", 1);
    CHECK(run("gen --n 6").out == env.out);
    unsetenv("JOBS");
}
