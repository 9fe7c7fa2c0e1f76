#pragma once

#include "linkinv/diagram.hpp"
#include "linkinv/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace linkinv {

struct ExpectedValue {
  std::string value;
  std::string provenance;  // PAPER, DERIVED or TRIVIAL
  std::string note;
};

/// Records that an entry is the band sum of two other corpus links.
struct SumSpec {
  std::string left, right;
  int left_component = 0, right_component = 0;
};

struct CorpusEntry {
  std::string name;
  std::string file;  // relative to the corpus directory
  std::string text;
  std::optional<std::vector<int>> colors;
  std::vector<std::string> tags;
  std::map<std::string, ExpectedValue> expected;
  std::optional<SumSpec> sum;
  std::vector<int> params;  // construction parameters of a singular fixture

  LinkDiagram diagram() const;
  bool has_tag(const std::string& t) const;
};

/// Singular links on which `invariant` is extended; evidence families are
/// expected to give 0 on every member, witnesses carry an expected value.
struct SingularFamily {
  std::string name;
  std::vector<std::string> invariants;
  int points = 0;
  std::vector<CorpusEntry> members;
};

struct Corpus {
  std::string directory;
  std::vector<CorpusEntry> links;
  std::vector<SingularFamily> evidence;
  std::vector<CorpusEntry> witnesses;  // expected key "extend:<invariant>"

  const CorpusEntry& link(const std::string& name) const;
};

inline constexpr const char* kCorpusSchema = "linkinv-corpus/1";

/// Reads corpus.json from `directory`; diagram files are read relative to it.
/// Throws ValidationError on a malformed file.
Corpus load_corpus(const std::string& directory);

/// Keys with a renderer: components, lk, conway, omega, homfly, kauffman,
/// nbl, c, alpha, c_table, alpha_table, delta, beta, gamma, and
/// extend:<invariant> for singular links.
const std::vector<std::string>& value_keys();

/// Canonical text of the value `key` on `d`. Route 1 is the primary
/// pipeline; route 2 reaches the same value another way (Alexander module
/// versus skein engine, or a second descent order). Returns nullopt when the
/// key does not apply to `d`.
std::optional<std::string> render_value(const LinkDiagram& d, const std::string& key, int route,
                                        int cap = kDefaultCap);

/// render_value on the entry's diagram; for a witness built with parameters
/// (a, b, c, d), route 2 of extend:alpha2 is the closed jump formula.
std::optional<std::string> render_entry_value(const CorpusEntry& e, const std::string& key, int route,
                                              int cap = kDefaultCap);

}  // namespace linkinv
