#include "helpers.hpp"

#include "linkinv/suites.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>

using namespace testing;
namespace fs = std::filesystem;

namespace {

// Copies the corpus into a scratch directory and applies `edit` to its JSON.
std::string corrupted_copy(const std::string& tag, const std::function<void(nlohmann::json&)>& edit) {
  fs::path dir = fs::temp_directory_path() / ("linkinv-corpus-" + tag);
  fs::remove_all(dir);
  fs::copy(LINKINV_CORPUS_DIR, dir, fs::copy_options::recursive);
  nlohmann::json j;
  {
    std::ifstream in(dir / "corpus.json");
    in >> j;
  }
  edit(j);
  std::ofstream(dir / "corpus.json") << j.dump(2);
  return dir.string();
}

nlohmann::json& entry(nlohmann::json& j, const std::string& name) {
  for (auto& e : j["links"])
    if (e["name"] == name) return e;
  throw std::runtime_error("no entry " + name);
}

}  // namespace

TEST_CASE("corpus contents") {
  const Corpus& c = corpus();
  for (auto name : {"unknot", "unlink2", "unlink3", "hopf", "hopf_negative", "trefoil_right", "trefoil_left",
                    "figure8", "whitehead", "borromean", "chain2", "chain3", "chain4"})
    CHECK_NOTHROW(c.link(name));
  int probes = 0;
  for (const auto& e : c.links) {
    probes += e.has_tag("probe");
    LinkDiagram d = e.diagram();
    CHECK(d.num_crossings() <= 12);
    for (const auto& [key, ev] : e.expected) {
      CAPTURE(e.name);
      CAPTURE(key);
      CHECK_FALSE(ev.value.empty());
      CHECK_FALSE(ev.provenance.empty());
    }
  }
  CHECK(probes >= 6);
  CHECK_FALSE(c.evidence.empty());
  CHECK_FALSE(c.witnesses.empty());
  CHECK_THROWS_AS(c.link("no-such-link"), ValidationError);
}

TEST_CASE("frozen values agree with both routes") {
  SuiteReport r = check_corpus_values(corpus());
  for (const auto& c : r.results) {
    CAPTURE(c.entry);
    CAPTURE(c.check);
    CAPTURE(c.detail);
    CHECK(c.ok);
  }
}

TEST_CASE("named values from the corpus") {
  auto value = [](const std::string& name, const std::string& key) {
    return corpus().link(name).expected.at(key).value;
  };
  CHECK(value("trefoil_right", "conway") == "1 + z^2");
  CHECK(value("figure8", "conway") == "1 - z^2");
  CHECK(value("borromean", "conway") == "z^4");
  CHECK(value("hopf", "omega") == "1");
  CHECK(value("whitehead", "delta") == "{(1,1): -1}");
}

TEST_CASE("every suite passes on the bundled corpus") {
  for (const auto& name : suite_names()) {
    SuiteReport r = run_suite(name, corpus());
    CAPTURE(name);
    CHECK_FALSE(r.results.empty());
    for (const auto& c : r.results) {
      CAPTURE(c.entry);
      CAPTURE(c.check);
      CAPTURE(c.detail);
      CHECK(c.ok);
    }
  }
  CHECK_THROWS_AS(run_suite("no-such-suite", corpus()), ValidationError);
}

TEST_CASE("a corrupted value is reported with its entry") {
  std::string dir = corrupted_copy("value", [](nlohmann::json& j) {
    entry(j, "figure8")["expected"]["conway"]["value"] = "1 + z^2";
  });
  SuiteReport r = check_corpus_values(load_corpus(dir));
  CHECK_FALSE(r.passed());
  for (const auto& c : r.results)
    if (!c.ok) CHECK(c.entry == "figure8");
}

TEST_CASE("a corrupted diagram is reported with its entry") {
  std::string dir = corrupted_copy("diagram", [](nlohmann::json& j) {
    auto& e = entry(j, "whitehead");
    e.erase("file");
    e["text"] = "X[1,2,3";
  });
  SuiteReport r = check_corpus_values(load_corpus(dir));
  CHECK_FALSE(r.passed());
  bool named = false;
  for (const auto& c : r.results) named = named || (!c.ok && c.entry == "whitehead");
  CHECK(named);
}

TEST_CASE("malformed corpus files are rejected with the entry named") {
  std::string dir = corrupted_copy("provenance", [](nlohmann::json& j) {
    entry(j, "hopf")["expected"]["conway"]["provenance"] = "GUESS";
  });
  try {
    load_corpus(dir);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("hopf") != std::string::npos);
  }
  std::string schema = corrupted_copy("schema", [](nlohmann::json& j) { j["schema"] = "other/9"; });
  CHECK_THROWS_AS(load_corpus(schema), ValidationError);
}
