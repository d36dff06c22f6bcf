#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "equiproj/io.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path& workdir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("equiproj_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string path(const std::string& name) { return (workdir() / name).string(); }

int shell(const std::string& cmd, const std::string& out) {
    std::string full = cmd + " > " + path(out) + " 2> " + path("stderr.txt");
    int status = std::system(full.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Runs the tool with stdout captured to `out` (relative to the work dir).
int run(const std::string& args, const std::string& out = "stdout.txt") {
    return shell(std::string(EQUIPROJ_CLI) + " " + args, out);
}

std::string slurp(const std::string& name) {
    std::ifstream in(path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write(const std::string& name, const std::string& text) { std::ofstream(path(name)) << text; }

equiproj::Json json_out(const std::string& name = "stdout.txt") { return equiproj::Json::parse(slurp(name)); }

}  // namespace

TEST_CASE("gen prints predicted kappa") {
    CHECK(run("gen prism --sides 5 -o " + path("p5.json")) == 0);
    CHECK(slurp("stdout.txt").find("predicted kappa: 7") != std::string::npos);
    CHECK(run("gen odd --k 9 --seed 1 -o " + path("odd9.json")) == 0);
    CHECK(slurp("stdout.txt").find("predicted kappa: 9") != std::string::npos);
    CHECK(run("gen zonotope --generators \"1,0,0;0,1,0;0,0,1\" -o " + path("cube.json")) == 0);
    CHECK(slurp("stdout.txt").find("predicted kappa: 6") != std::string::npos);
    CHECK(run("gen simplex -o " + path("tet.json")) == 0);
    CHECK(run("gen zonotope --count 4 --seed 3 -o " + path("z4.json")) == 0);
    CHECK(slurp("stdout.txt").find("predicted kappa: 8") != std::string::npos);

    CHECK(run("gen prism --sides 2") == 3);
    CHECK(run("gen odd --k 8") == 3);
    CHECK(run("gen zonotope --generators \"1,0,0;2,0,0\"") == 3);
    CHECK(run("gen") == 3);
}

TEST_CASE("check verdicts and exit codes") {
    REQUIRE(run("gen zonotope --generators \"1,0,0;0,1,0;0,0,1\" -o " + path("cube.json")) == 0);
    REQUIRE(run("gen simplex -o " + path("tet.json")) == 0);

    CHECK(run("check " + path("cube.json") + " --method both --oracle-samples 100") == 0);
    auto j = json_out();
    CHECK(j["is_equiprojective"] == true);
    CHECK(j["kappa"] == 6);
    CHECK(j["agreement"] == true);
    CHECK(j["oracle"]["histogram"]["6"] == 100);

    CHECK(run("check " + path("tet.json")) == 1);
    CHECK(json_out()["is_equiprojective"] == false);
    CHECK(run("check " + path("tet.json") + " --method matching") == 1);

    write("square.json", R"({"vertices": [["0","0","0"],["1","0","0"],["0","1","0"],["1","1","0"]]})");
    CHECK(run("check " + path("square.json")) == 3);
    write("bad.json", R"({"vertices": [["0","0","1/0"]]})");
    CHECK(run("check " + path("bad.json")) == 3);
    CHECK(run("check " + path("missing.json")) == 3);
    CHECK(run("check " + path("cube.json") + " --method bogus") == 3);
}

TEST_CASE("sum") {
    REQUIRE(run("gen zonotope --generators \"1,0,0;0,1,0;0,0,1\" -o " + path("cube.json")) == 0);
    CHECK(run("sum " + path("cube.json") + " " + path("cube.json") + " -o " + path("cc.json")) == 0);
    auto j = json_out();
    CHECK(j["predicted_kappa"] == 6);
    CHECK(j["direct_kappa"] == 6);
    CHECK(j["certificate"]["lambda"] == 6);
    CHECK(run("check " + path("cc.json")) == 0);

    write("square.json", R"({"vertices": [["0","0","0"],["1","0","0"],["0","1","0"],["1","1","0"]]})");
    write("seg.json", R"({"vertices": [["0","0","0"],["0","0","1"]]})");
    CHECK(run("sum " + path("square.json") + " " + path("seg.json")) == 0);
    CHECK(json_out()["predicted_kappa"] == 6);

    write("t1.json", R"({"vertices": [["0","0","0"],["1","0","0"],["0","1","0"]]})");
    write("t2.json", R"({"vertices": [["0","0","0"],["1","0","2"],["-1","0","1"]]})");
    CHECK(run("sum " + path("t1.json") + " " + path("t2.json")) == 0);
    CHECK(json_out()["direct_kappa"] == 6);

    REQUIRE(run("gen simplex -o " + path("tet.json")) == 0);
    CHECK(run("sum " + path("tet.json") + " " + path("cube.json")) == 3);
}

TEST_CASE("project") {
    REQUIRE(run("gen zonotope --generators \"1,0,0;0,1,0;0,0,1\" -o " + path("cube.json")) == 0);
    REQUIRE(run("gen simplex -o " + path("tet.json")) == 0);
    CHECK(run("project " + path("cube.json") + " --direction 1,2,3") == 0);
    CHECK(json_out()["shadow_vertices"] == 6);
    CHECK(run("project " + path("cube.json") + " --direction 1,0,0") == 3);
    CHECK(slurp("stderr.txt").find("facet") != std::string::npos);
    CHECK(run("project " + path("tet.json") + " --histogram 500") == 0);
    auto h = json_out()["histogram"];
    CHECK(h.contains("3"));
    CHECK(h.contains("4"));
    CHECK(run("project " + path("tet.json")) == 3);
}

TEST_CASE("omatroid") {
    write("g.json", R"({"generators": [[1,0,0],[0,1,0],[0,0,1]]})");
    write("g2.json", R"({"generators": [[0,0,1],[1,0,0],[0,1,0]]})");
    write("g4.json", R"({"generators": [[1,0,0],[0,1,0],[0,0,1],[1,1,0]]})");
    CHECK(run("omatroid covectors " + path("g.json")) == 0);
    CHECK(json_out()["result"]["count"] == 26);
    CHECK(run("omatroid equiv " + path("g.json") + " " + path("g2.json")) == 0);
    CHECK(json_out()["equivalent"] == true);
    CHECK(run("omatroid equiv " + path("g.json") + " " + path("g4.json")) == 1);
    CHECK(run("omatroid census --n 3 --samples 50 --seed 2") == 0);
    CHECK(json_out()["result"]["distinct_types"] == 1);
    write("g9.json",
          R"({"generators": [[1,0,0],[0,1,0],[0,0,1],[1,1,0],[1,0,1],[0,1,1],[1,1,1],[1,2,3],[3,1,2]]})");
    CHECK(run("omatroid covectors " + path("g9.json")) == 4);
}

TEST_CASE("export") {
    REQUIRE(run("gen zonotope --generators \"1,0,0;0,1,0;0,0,1\" -o " + path("cube.json")) == 0);
    CHECK(run("export " + path("cube.json") + " --format off") == 0);
    CHECK(slurp("stdout.txt").rfind("OFF\n8 6 12\n", 0) == 0);
    CHECK(run("export " + path("cube.json") + " --format json -o " + path("cube2.json")) == 0);
    CHECK(slurp("cube2.json") == slurp("cube.json"));
}

TEST_CASE("seeded commands are reproducible") {
    REQUIRE(run("gen prism --sides 6 -o " + path("p6.json")) == 0);
    CHECK(run("check " + path("p6.json") + " --oracle-samples 50 --seed 17", "r1.json") == 0);
    CHECK(run("check " + path("p6.json") + " --oracle-samples 50 --seed 17", "r2.json") == 0);
    CHECK(slurp("r1.json") == slurp("r2.json"));
    CHECK(shell("EQUIPROJ_SEED=17 " EQUIPROJ_CLI " check " + path("p6.json") + " --oracle-samples 50", "r3.json") ==
          0);
    CHECK(slurp("r3.json") == slurp("r1.json"));
    CHECK(run("gen odd --k 11 --seed 4", "o1.json") == 0);
    CHECK(run("gen odd --k 11 --seed 4", "o2.json") == 0);
    CHECK(slurp("o1.json") == slurp("o2.json"));
}
