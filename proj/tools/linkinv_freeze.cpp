// Fills empty DERIVED values in corpus.json. A value is written only when the
// primary pipeline and the second route render the same text.
#include "linkinv/corpus.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using nlohmann::ordered_json;

int main(int argc, char** argv) {
  CLI::App app{"freeze derived corpus values"};
  std::string dir;
  bool check_only = false;
  app.add_option("corpus", dir, "corpus directory")->required();
  app.add_flag("--check", check_only, "report without writing");
  CLI11_PARSE(app, argc, argv);

  linkinv::Corpus corpus = linkinv::load_corpus(dir);
  ordered_json j;
  {
    std::ifstream in(dir + "/corpus.json");
    in >> j;
  }
  int written = 0, failures = 0;
  auto freeze = [&](ordered_json& list, const std::vector<linkinv::CorpusEntry>& entries) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& e = entries[i];
      for (auto& [key, v] : list[i]["expected"].items()) {
        if (v["provenance"] != "DERIVED" || !v["value"].get<std::string>().empty()) continue;
        auto r1 = linkinv::render_entry_value(e, key, 1);
        auto r2 = linkinv::render_entry_value(e, key, 2);
        if (!r1 || !r2 || *r1 != *r2) {
          std::cerr << e.name << " " << key << ": routes disagree or missing ("
                    << r1.value_or("-") << " | " << r2.value_or("-") << ")\n";
          ++failures;
          continue;
        }
        v["value"] = *r1;
        ++written;
      }
    }
  };
  freeze(j["links"], corpus.links);
  freeze(j["witnesses"], corpus.witnesses);
  std::cout << written << " values frozen, " << failures << " refused\n";
  if (!check_only && failures == 0) {
    std::ofstream out(dir + "/corpus.json");
    out << j.dump(2) << "\n";
  }
  return failures == 0 ? 0 : 1;
}
