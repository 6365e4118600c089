#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string output;
};

const fs::path& scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::path(QDOUBLE_TEST_TMP) / "cli";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Run run(const std::string& args) {
  const fs::path log = scratch() / "last.log";
  const std::string cmd = std::string("\"") + QDOUBLE_CLI + "\" " + args + " > \"" + log.string() + "\" 2>&1";
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(log)};
}

std::string out_dir(const std::string& name) { return (scratch() / name).string(); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("compute binary_tetrahedral") {
  const auto r = run("compute binary_tetrahedral --out " + out_dir("bt"));
  INFO(r.output);
  CHECK(r.status == 0);
  const auto summary = slurp(fs::path(out_dir("bt")) / "summary.txt");
  CHECK(summary.find("7,7,6,6,4,6,6") != std::string::npos);
  CHECK(summary.find("576") != std::string::npos);
  CHECK(summary.find("FAIL") == std::string::npos);
  for (const char* f : {"modular_data.json", "fusion.json", "chartables.json", "chartables.txt"}) {
    CHECK(fs::exists(fs::path(out_dir("bt")) / f));
  }
  const auto j = nlohmann::json::parse(slurp(fs::path(out_dir("bt")) / "modular_data.json"));
  CHECK(j.at("rank") == 42);
}

TEST_CASE("compute cyclic:1") {
  const auto r = run("compute cyclic:1 --out " + out_dir("c1"));
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(slurp(fs::path(out_dir("c1")) / "modular_data.json"));
  CHECK(j.at("rank") == 1);
  REQUIRE(j.at("S").size() == 1);
  CHECK(j.at("S")[0][0] == nlohmann::json::parse(R"({"conductor":1,"coeffs":[[0,"1"]]})"));
}

TEST_CASE("oracle check and Hopf check") {
  auto r = run("compute sl2:3 --oracle-check --out " + out_dir("sl23"));
  INFO(r.output);
  CHECK(r.status == 0);
  CHECK(r.output.find("PASS oracle_agreement") != std::string::npos);
  r = run("compute symmetric:3 --hopf-check --out " + out_dir("s3"));
  CHECK(r.status == 0);
  CHECK(r.output.find("FAIL") == std::string::npos);
  CHECK(r.output.find("hopf.") != std::string::npos);
}

TEST_CASE("fundamental graph output") {
  const auto r = run("compute binary_tetrahedral --graph 3 --out " + out_dir("btg"));
  INFO(r.output);
  CHECK(r.status == 0);
  CHECK(fs::exists(fs::path(out_dir("btg")) / "graphs" / "fusion_3.edges"));
  CHECK(fs::exists(fs::path(out_dir("btg")) / "graphs" / "fusion_3.dot"));
}

TEST_CASE("verify fresh output") {
  REQUIRE(run("compute dihedral:4 --out " + out_dir("d4")).status == 0);
  const auto r = run("verify " + out_dir("d4"));
  INFO(r.output);
  CHECK(r.status == 0);
  CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("verify a perturbed S") {
  REQUIRE(run("compute symmetric:3 --out " + out_dir("s3p")).status == 0);
  const fs::path file = fs::path(out_dir("s3p")) / "modular_data.json";
  auto j = nlohmann::json::parse(slurp(file));
  j["S"][1][2] = "1/2";
  std::ofstream(file) << j.dump(1);
  const auto r = run("verify " + file.string());
  INFO(r.output);
  CHECK(r.status == 1);
  CHECK(r.output.find("FAIL modular.symmetric") != std::string::npos);
  CHECK(r.output.find("VerificationFailed") != std::string::npos);
}

TEST_CASE("verify hand-written Z2 data") {
  const fs::path file = scratch() / "z2.json";
  std::ofstream(file) << R"({
  "S": [["1/2","1/2","1/2","1/2"],["1/2","1/2","-1/2","-1/2"],["1/2","-1/2","1/2","-1/2"],["1/2","-1/2","-1/2","1/2"]],
  "T": [[[0,0],1],[[1,1],1],[[2,2],1],[[3,3],-1]]
})";
  const auto r = run("verify " + file.string());
  INFO(r.output);
  CHECK(r.status == 0);
  CHECK(r.output.find("PASS fusion.associative") != std::string::npos);
}

TEST_CASE("input errors exit with 2") {
  auto r = run("compute nonexistent --out " + out_dir("bad"));
  CHECK(r.status == 2);
  CHECK(r.output.find("UnknownEntry") != std::string::npos);
  CHECK(run("compute cyclic:0 --out " + out_dir("bad")).status == 2);
  CHECK(run("compute 'perm:(0,1' --out " + out_dir("bad")).status == 2);
  CHECK(run("compute cyclic:3 --format float:3 --out " + out_dir("bad")).status == 2);
  CHECK(run("compute symmetric:5 --max-order 50 --out " + out_dir("bad")).status == 2);
  const fs::path junk = scratch() / "junk.json";
  std::ofstream(junk) << "{ not json";
  r = run("verify " + junk.string());
  CHECK(r.status == 2);
  CHECK(r.output.find("ParseError") != std::string::npos);
  CHECK(run("verify " + (scratch() / "missing.json").string()).status == 2);
}

TEST_CASE("float format") {
  const auto r = run("compute cyclic:3 --format float:8 --out " + out_dir("fl"));
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(slurp(fs::path(out_dir("fl")) / "modular_data.json"));
  CHECK(j.contains("S_float"));
}

TEST_CASE("list-groups") {
  const auto r = run("list-groups");
  CHECK(r.status == 0);
  CHECK(r.output.find("binary_tetrahedral") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across thread counts") {
  REQUIRE(run("compute binary_tetrahedral --graph all --threads 1 --out " + out_dir("det1")).status == 0);
  REQUIRE(run("compute binary_tetrahedral --graph all --threads 4 --out " + out_dir("det4")).status == 0);
  std::size_t files = 0;
  for (const auto& e : fs::recursive_directory_iterator(out_dir("det1"))) {
    if (!e.is_regular_file()) continue;
    const auto rel = fs::relative(e.path(), out_dir("det1"));
    CAPTURE(rel.string());
    CHECK(slurp(e.path()) == slurp(fs::path(out_dir("det4")) / rel));
    ++files;
  }
  CHECK(files >= 42 * 2 + 5);
}

}  // TEST_SUITE
