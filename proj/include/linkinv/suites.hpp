#pragma once

#include "linkinv/corpus.hpp"

#include <string>
#include <vector>

namespace linkinv {

struct CheckResult {
  std::string check;
  std::string entry;
  bool ok = true;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> results;

  int failures() const;
  bool passed() const { return failures() == 0; }
};

/// skein-relations, lemma41, decomposition-roundtrip, starred-pl-isotopy,
/// congruences, finite-type-evidence, finite-type-witnesses.
const std::vector<std::string>& suite_names();

/// Frozen corpus values against both computation routes. Failures name the
/// entry and key.
SuiteReport check_corpus_values(const Corpus& corpus, int cap = kDefaultCap);

/// Throws ValidationError for an unknown name. ResourceLimitError propagates;
/// any other exception inside a check is recorded as a failure.
SuiteReport run_suite(const std::string& name, const Corpus& corpus, int cap = kDefaultCap);

}  // namespace linkinv
