#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exitCode = -1;
    std::string output; // stdout + stderr
};

RunResult run(const std::string& args) {
    const char* bin = std::getenv("HILB10_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
    int status = pclose(pipe);
    r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string dataFile(const std::string& name) {
    const char* dir = std::getenv("HILB10_DATA");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/" + name;
}

} // namespace

TEST_CASE("hilbert subcommand") {
    RunResult local = run("hilbert --local " + dataFile("a42210_t1.ideal"));
    CHECK(local.exitCode == 0);
    CHECK(local.output == "(1,4,2,2,1)\n");

    RunResult graded = run("hilbert --graded " + dataFile("graded_1441.ideal"));
    CHECK(graded.exitCode == 0);
    CHECK(graded.output == "(1,4,4,1)\n");

    RunResult defaulted = run("hilbert " + dataFile("a42210_t1.ideal"));
    CHECK(defaulted.output == "(1,4,2,2,1)\n");

    RunResult fp = run("hilbert --local " + dataFile("fp7_fat_point.ideal"));
    CHECK(fp.exitCode == 0);
    CHECK(fp.output == "(1,2,1)\n");
}

TEST_CASE("gb subcommand golden output") {
    RunResult r = run("gb " + dataFile("origin.ideal"));
    CHECK(r.exitCode == 0);
    CHECK(r.output == "x1\nx2\n");
}

TEST_CASE("profile subcommand") {
    RunResult r = run("profile " + dataFile("graded_1441.ideal"));
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("dim: 10") != std::string::npos);
    CHECK(r.output.find("hilbert: (1,4,4,1)") != std::string::npos);
    CHECK(r.output.find("emdim: 4") != std::string::npos);
    CHECK(r.output.find("msdeg: 3") != std::string::npos);
    CHECK(r.output.find("socle dimension: 1") != std::string::npos);
    CHECK(r.output.find("gorenstein: yes") != std::string::npos);
}

TEST_CASE("apolar subcommand") {
    RunResult r = run("apolar --vars 4 \"y4^3 + y1*y2*y3\"");
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("generators: 7") != std::string::npos);
    CHECK(r.output.find("beta: 1") != std::string::npos);
}

TEST_CASE("tangent subcommand") {
    RunResult r = run("tangent " + dataFile("graded_1441.ideal"));
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("dim S/I: 10") != std::string::npos);
    CHECK(r.output.find("dim S/I^2: 50") != std::string::npos);
    CHECK(r.output.find("h0: 40") != std::string::npos);
    CHECK(r.output.find("obstructed: no") != std::string::npos);
}

TEST_CASE("fiber subcommand") {
    RunResult r = run("fiber " + dataFile("family_1441.ideal") + " --b 0");
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("-x1^3 + x4^3") != std::string::npos);
    CHECK(r.output.find("b") == std::string::npos);

    RunResult half = run("fiber " + dataFile("family_1441.ideal") + " --b 1/2");
    CHECK(half.exitCode == 0);
    CHECK(half.output.find("1/4") != std::string::npos);
}

TEST_CASE("intersect subcommand") {
    RunResult r = run("intersect " + dataFile("origin.ideal") + " " +
                      dataFile("shifted_point.ideal"));
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("x2^2 - x2") != std::string::npos);
    CHECK(r.output.find("x1") != std::string::npos);
}

TEST_CASE("verify subcommand on single entries") {
    RunResult r = run("verify --entry prop4.3/I");
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("PASS prop4.3/I") != std::string::npos);
    CHECK(r.output.find("summary: 1 passed, 0 failed") != std::string::npos);

    RunResult unknown = run("verify --entry no-such-entry");
    CHECK(unknown.exitCode == 2);
}

TEST_CASE("verify --json is deterministic across runs") {
    RunResult a = run("verify --entry prop3.3 --json");
    RunResult b = run("verify --entry prop3.3 --json");
    CHECK(a.exitCode == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"seed\": 20260824") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("").exitCode == 2);
    CHECK(run("bogus-subcommand").exitCode == 2);
    CHECK(run("hilbert").exitCode == 2);
    CHECK(run("hilbert /nonexistent.ideal").exitCode == 2);
    CHECK(run("hilbert --local --graded " + dataFile("origin.ideal")).exitCode == 2);
    CHECK(run("apolar --vars 4 \"z9^3\"").exitCode == 2);
}
