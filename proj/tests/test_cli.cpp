#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef DOMPOLY_CLI_PATH
#error "DOMPOLY_CLI_PATH must point at the built command line binary"
#endif

#ifdef _WIN32
#define WEXITSTATUS(s) (s)
#define WIFEXITED(s) 1
#else
#include <sys/wait.h>
#endif

namespace {

using nlohmann::ordered_json;

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "dompoly-cli-tests";
    std::filesystem::create_directories(dir);
    return dir;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const auto dir = scratch_dir();
    const auto out = dir / ("out" + std::to_string(counter));
    const auto err = dir / ("err" + std::to_string(counter));
    ++counter;
    const std::string cmd = std::string("\"") + DOMPOLY_CLI_PATH + "\" " + args +
                            " >\"" + out.string() + "\" 2>\"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

}  // namespace

TEST_CASE("cli: poly emits exact coefficients as json") {
    const RunResult r = run_cli("poly path:n=1");
    REQUIRE(r.code == 0);
    const ordered_json j = ordered_json::parse(r.out);
    CHECK(j["graph"] == "path:n=1");
    CHECK(j["coefficients"] == ordered_json::array({"0", "1"}));
    CHECK(j["domination_number"] == 1);
    CHECK(j["vertex_count"] == 1);
}

TEST_CASE("cli: windmill closed form") {
    const RunResult r = run_cli("poly windmill:n=2 --method=closed-form");
    REQUIRE(r.code == 0);
    const ordered_json j = ordered_json::parse(r.out);
    CHECK(j["method"] == "closed-form");
    CHECK(j["coefficients"] == ordered_json::array({"0", "1", "8", "10", "5", "1"}));
}

TEST_CASE("cli: csv output") {
    const RunResult r = run_cli("poly star:n=1 --format=csv");
    REQUIRE(r.code == 0);
    CHECK(r.out == "k,coefficient\n0,0\n1,2\n2,1\n");
}

TEST_CASE("cli: brute force over an edge list file") {
    const auto file = scratch_dir() / "k3.txt";
    std::ofstream(file) << "3 3\n0 1\n1 2\n0 2\n";
    const RunResult r = run_cli("poly \"" + file.string() + "\" --method=brute");
    REQUIRE(r.code == 0);
    const ordered_json j = ordered_json::parse(r.out);
    CHECK(j["method"] == "brute-force");
    CHECK(j["coefficients"] == ordered_json::array({"0", "3", "3", "1"}));
}

TEST_CASE("cli: --out redirects the payload into a file") {
    const auto file = scratch_dir() / "poly.json";
    const RunResult r = run_cli("poly cycle:n=4 --out \"" + file.string() + "\"");
    REQUIRE(r.code == 0);
    const ordered_json j = ordered_json::parse(slurp(file));
    CHECK(j["coefficients"] == ordered_json::array({"0", "0", "6", "4", "1"}));
}

TEST_CASE("cli: roots reports the star zero root and -2") {
    const RunResult r = run_cli("roots star:n=1");
    REQUIRE(r.code == 0);
    const ordered_json j = ordered_json::parse(r.out);
    CHECK(j["zero_root_multiplicity"] == 1);
    REQUIRE(j["complex_roots"].size() == 1);
    CHECK(j["complex_roots"][0]["re"].get<double>() == -2.0);
    CHECK(j["complex_roots"][0]["im"].get<double>() == 0.0);
}

TEST_CASE("cli: certified no-real-roots claim") {
    const RunResult r = run_cli("roots kn,n:n=2 --certify");
    REQUIRE(r.code == 0);
    const ordered_json j = ordered_json::parse(r.out);
    CHECK(j["certified"] == true);
    CHECK(j["certified_real_root_count"] == 0);
}

TEST_CASE("cli: usage errors exit 2") {
    CHECK(run_cli("poly nosuchfamily:n=3").code == 2);
    CHECK(run_cli("poly /nonexistent/file.txt").code == 2);
    CHECK(run_cli("poly star:n=0").code == 2);
    CHECK(run_cli("verify nosuch").code == 2);
    CHECK(run_cli("sweep --family=star --from=5 --to=2").code == 2);
    CHECK(run_cli("nosuchcommand").code == 2);
    CHECK(run_cli("").code == 2);
}

TEST_CASE("cli: enumeration budget exits 3") {
    CHECK(run_cli("poly star:n=40 --method=brute").code == 3);
    CHECK(run_cli("poly path:n=27 --method=brute").code == 3);
}

TEST_CASE("cli: help exits 0") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("poly --help").code == 0);
}

TEST_CASE("cli: verify single suite") {
    const RunResult r = run_cli("verify recurrence-bases --format=json");
    REQUIRE(r.code == 0);
    const ordered_json j = ordered_json::parse(r.out);
    CHECK(j["all_pass"] == true);
}

TEST_CASE("cli: sweep csv on stdout") {
    const RunResult r = run_cli("sweep --family=star --from=1 --to=3 --format=csv");
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("re,im,residual,family,param,error\n", 0) == 0);
    CHECK(r.out.find(",star,3,\n") != std::string::npos);
}

TEST_CASE("cli: export-triangle rows are coefficient lists") {
    const RunResult r = run_cli("export-triangle --family=gem --from=1 --to=2");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("1,0,3,3,1\n") != std::string::npos);
    CHECK(r.out.find("2,0,2,6,4,1\n") != std::string::npos);
}

TEST_CASE("cli: interp-demo round trip") {
    const RunResult r = run_cli("interp-demo path:n=4 --lambda=1");
    REQUIRE(r.code == 0);
    const ordered_json j = ordered_json::parse(r.out);
    CHECK(j["match"] == true);
    CHECK(j["lambda"] == "1");
    const RunResult bad = run_cli("interp-demo path:n=4 --lambda=-1");
    CHECK(bad.code == 2);
}
