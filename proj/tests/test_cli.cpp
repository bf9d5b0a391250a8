#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "support.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(EARCLIP_CLI) + " " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch() {
    const fs::path dir = fs::temp_directory_path() / "earclip_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string write(const std::string& name, const std::string& text) {
    const fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

const std::string kFixtures = EARCLIP_FIXTURES;

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run("triangulate --input " + kFixtures + "/comb.txt").code == 0);
    CHECK(run("triangulate --input " + write("bad.txt", "ring 0,0 1,0\n")).code == 2);
    CHECK(run("triangulate --validate --input " + write("bowtie.txt", "ring 0,0 2,2 2,0 0,2\n")).code == 2);
    CHECK(run("triangulate --input /nonexistent/poly.txt").code == 4);
    CHECK(run("triangulate --algorithm fastest --input " + kFixtures + "/comb.txt").code == 4);
    CHECK(run("triangulate").code == 4);
    CHECK(run("--help").code == 0);
}

TEST_CASE("emit formats") {
    const std::string in = " --input " + kFixtures + "/comb.txt";
    CHECK(run("triangulate --emit json" + in).out.rfind("{\"vertices\":", 0) == 0);
    CHECK(run("triangulate --emit obj" + in).out.rfind("# earclip", 0) == 0);
    CHECK(run("triangulate --emit svg" + in).out.find("<svg") != std::string::npos);
    CHECK(run("triangulate --emit stats" + in).out.find("[45,60]") != std::string::npos);
}

TEST_CASE("outputs are deterministic") {
    for (const char* alg : {"basic", "traditional", "improved"}) {
        for (const char* emit : {"json", "svg"}) {
            const std::string args = std::string("triangulate --algorithm ") + alg + " --emit " + emit +
                                     " --input " + kFixtures + "/spiral.txt";
            const auto a = run(args);
            const auto b = run(args);
            CHECK(a.code == 0);
            CHECK(a.out == b.out);
        }
    }
}

TEST_CASE("improved with bound 0 prints what basic prints") {
    const std::string in = " --input " + kFixtures + "/spiral.txt";
    CHECK(run("triangulate --algorithm improved --bound 0" + in).out == run("triangulate --algorithm basic" + in).out);
}

TEST_CASE("gen-corpus and bench") {
    const fs::path dir = scratch() / "corpus";
    fs::remove_all(dir);
    REQUIRE(run("gen-corpus --seed 3 --count 5 --vertices 10..30 --holes 0..1 --out-dir " + dir.string()).code == 0);
    CHECK(fs::exists(dir / "polygon_0000.txt"));
    CHECK(fs::exists(dir / "polygon_0004.txt"));
    const auto first = test::read_file((dir / "polygon_0002.txt").string());
    fs::remove_all(dir);
    run("gen-corpus --seed 3 --count 5 --vertices 10..30 --holes 0..1 --out-dir " + dir.string());
    CHECK(test::read_file((dir / "polygon_0002.txt").string()) == first);

    const auto csv = run("bench --report csv --algorithms basic,improved --bounds 0,30 --corpus " + dir.string());
    CHECK(csv.code == 0);
    CHECK(csv.out.find("algorithm,min_0_15") == 0);
    CHECK(csv.out.find("\nimproved(30),") != std::string::npos);
    CHECK(run("gen-corpus --count 0 --out-dir " + dir.string()).code == 4);
}
