// Runs the linkinv binary and checks exit codes and printed values against
// the library.
#include "helpers.hpp"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(LINKINV_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string corpus_file(const std::string& name) { return std::string(LINKINV_CORPUS_DIR) + "/links/" + name; }

std::string scratch(const std::string& name, const std::string& text) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("polys prints library values") {
  Run r = run("polys " + corpus_file("hopf.txt") + " --which conway");
  CHECK(r.code == 0);
  CHECK(r.out == "z\n");
  r = run("polys " + corpus_file("trefoil_right.txt") + " --which homfly");
  CHECK(r.code == 0);
  CHECK(r.out == to_string(homfly(trefoil())) + "\n");
  r = run("polys " + corpus_file("borromean.txt") + " --which nbl --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "linkinv-report/1");
  CHECK(j["nbl"] == "z1*z2*z3");
  r = run("polys " + corpus_file("borromean.txt") + " --which omega --colors 1,2,3");
  CHECK(r.out == to_string(potential_function(borromean()).value) + "\n");
}

TEST_CASE("invariants report") {
  Run r = run("invariants " + corpus_file("hopf.txt") + " --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "linkinv-report/1");
  CHECK(j["omega"] == "1");
  CHECK(j["c"][0] == "1");
  CHECK(j["nabla_bold"] == "1");
  CHECK(j["cap"] == 12);
  r = run("invariants " + corpus_file("unlink2.txt") + " --json --cap 4");
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["omega"] == "0");
  CHECK(j["conway"] == "0");
  CHECK(j["cap"] == 4);
  r = run("invariants " + corpus_file("borromean.txt") + " --json");
  j = nlohmann::json::parse(r.out);
  CHECK(j["omega"] == to_string(potential_function(borromean()).value));
  CHECK(j["gamma"] == "1");
}

TEST_CASE("decompose") {
  Run r = run("decompose " + corpus_file("borromean.txt") + " --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["parts"]["P"] == "1/2*z1*z2*z3");
  CHECK(run("decompose " + corpus_file("trefoil_right.txt")).code == 2);
}

TEST_CASE("render and sum") {
  Run r = run("render " + corpus_file("hopf.txt"));
  CHECK(r.code == 0);
  CHECK(parse_pd(r.out) == hopf());
  r = run("sum " + corpus_file("hopf.txt") + " " + corpus_file("hopf.txt"));
  CHECK(r.code == 0);
  CHECK(parse_pd(r.out) == connected_sum(hopf(), hopf(), 0, 0));
}

TEST_CASE("exit codes") {
  SUBCASE("parse error with position") {
    Run r = run("invariants " + scratch("linkinv-bad.pd", "X[1,2,3"));
    CHECK(r.code == 2);
    CHECK(r.out.find("offset 7") != std::string::npos);
  }
  SUBCASE("validation error") {
    CHECK(run("invariants " + scratch("linkinv-bad2.pd", "X[1,2,3,4]")).code == 2);
    CHECK(run("invariants " + corpus_file("hopf.txt") + " --colors 1").code == 2);
  }
  SUBCASE("missing file and bad flags") {
    CHECK(run("invariants /no/such/file").code == 2);
    CHECK(run("polys " + corpus_file("hopf.txt") + " --which jones").code == 2);
  }
  SUBCASE("resource cap") {
    CHECK(run("polys " + corpus_file("chain4.txt") + " --which homfly --budget 3").code == 3);
  }
  SUBCASE("unknown suite") {
    Run r = run("verify --suite nope");
    CHECK(r.code == 2);
    CHECK(r.out.find("nope") != std::string::npos);
  }
}

TEST_CASE("verify") {
  SUBCASE("a single suite") {
    Run r = run("verify --suite lemma41 --json");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "linkinv-verify/1");
    CHECK(j["passed"] == true);
  }
  SUBCASE("witness suite") {
    Run r = run("verify --suite finite-type-witnesses");
    CHECK(r.code == 0);
  }
  SUBCASE("a corrupted entry fails and is named") {
    fs::path dir = fs::temp_directory_path() / "linkinv-cli-corpus";
    fs::remove_all(dir);
    fs::copy(LINKINV_CORPUS_DIR, dir, fs::copy_options::recursive);
    nlohmann::json j;
    {
      std::ifstream in(dir / "corpus.json");
      in >> j;
    }
    for (auto& e : j["links"])
      if (e["name"] == "trefoil_left") e["expected"]["conway"]["value"] = "1 + 2*z^2";
    std::ofstream(dir / "corpus.json") << j.dump(2);
    Run r = run("verify --suite lemma41 --corpus " + dir.string());
    CHECK(r.code == 1);
    CHECK(r.out.find("trefoil_left") != std::string::npos);
  }
}
