#pragma once

#include "linkinv/corpus.hpp"
#include "linkinv/invariants.hpp"
#include "linkinv/skein.hpp"

#include <string>

namespace testing {

using namespace linkinv;

inline LinkDiagram link(const std::string& text) { return parse_pd(text); }

inline const Corpus& corpus() {
  static const Corpus c = load_corpus(LINKINV_CORPUS_DIR);
  return c;
}

inline LinkDiagram corpus_link(const std::string& name) { return corpus().link(name).diagram(); }

inline LaurentPolynomial var(const VariableList& vars, std::size_t i, int power = 1) {
  return LaurentPolynomial::variable(vars, i, power);
}

inline LaurentPolynomial cst(const VariableList& vars, long c) {
  return LaurentPolynomial::constant(vars, make_rational(c));
}

inline LaurentPolynomial z(int power = 1) { return var({"z"}, 0, power); }

/// x - x^-1 over `vars`.
inline LaurentPolynomial braced(const VariableList& vars, std::size_t i) {
  return var(vars, i) - var(vars, i, -1);
}

inline LinkDiagram unknot() { return link("braid(1):"); }
inline LinkDiagram hopf() { return link("braid(2): s1 s1"); }
inline LinkDiagram trefoil() { return link("braid(2): s1 s1 s1"); }
inline LinkDiagram figure8() { return link("braid(3): s1 -s2 s1 -s2"); }
inline LinkDiagram whitehead() { return link("braid(3): s1 s1 -s2 s1 -s2"); }
inline LinkDiagram borromean() { return link("braid(3): s1 -s2 s1 -s2 s1 -s2"); }
inline LinkDiagram unlink(int m) { return link("braid(" + std::to_string(m) + "):"); }

}  // namespace testing
