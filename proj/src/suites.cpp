#include "linkinv/suites.hpp"

#include "linkinv/finitetype.hpp"
#include "linkinv/invariants.hpp"
#include "linkinv/skein.hpp"

#include <functional>
#include <map>
#include <optional>

namespace linkinv {

namespace {

// Runs one check; a thrown error other than a resource cap counts as failure.
class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  void check(const std::string& name, const std::string& entry, const std::function<bool()>& f) {
    CheckResult r{name, entry, true, {}};
    try {
      r.ok = f();
    } catch (const ResourceLimitError&) {
      throw;
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = e.what();
    }
    report_.results.push_back(std::move(r));
  }

  bool last_ok() const { return report_.results.back().ok; }
  const std::string& last_detail() const { return report_.results.back().detail; }
  void annotate(std::string detail) { report_.results.back().detail = std::move(detail); }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

LinkDiagram monochrome(const LinkDiagram& d) {
  return d.recolored(std::vector<int>(d.num_components(), 1));
}

VariableList xvars(int n) { return indexed_variables("x", static_cast<std::size_t>(n)); }
VariableList zvars(int n) { return indexed_variables("z", static_cast<std::size_t>(n)); }

LaurentPolynomial brace_of(int n, int color) {
  return brace_variable(xvars(n), static_cast<std::size_t>(color - 1));
}

// (x_i - x_i^{-1}) Omega as a Laurent polynomial.
LaurentPolynomial scaled_omega(const LinkDiagram& d, int color) {
  PotentialFunction om = potential_function(d);
  if (om.knot_denominator) return om.value;
  return brace_of(d.num_colors(), color) * om.value;
}

// z_i times nabla-bold; for knots this is Conway.
LaurentPolynomial scaled_nbl(const LinkDiagram& d, int color) {
  if (d.num_components() == 1) return conway(d);
  LaurentPolynomial z = LaurentPolynomial::variable(zvars(d.num_colors()), color - 1);
  return z * nabla_bold(decompose(potential_function(d)));
}

struct Resolutions {
  LinkDiagram plus, minus, zero;
};

Resolutions resolutions(const LinkDiagram& d, int x) {
  LinkDiagram sw = switch_crossing(d, x);
  LinkDiagram zero = smooth_oriented(d, x);
  if (d.crossings()[x].sign > 0) return {d, sw, zero};
  return {sw, d, zero};
}

std::string label(const std::string& entry, int crossing) {
  return entry + " @" + std::to_string(crossing);
}

bool parity_ok(const LaurentPolynomial& f, int m, const std::vector<int>& parities,
               const std::vector<int>& subset) {
  for (const auto& [e, v] : f.terms()) {
    if (((e.total_degree() - m) % 2 + 2) % 2 != 0) return false;
    for (std::size_t i = 0; i < parities.size() && i < e.size(); ++i) {
      bool inside = false;
      for (int s : subset) inside = inside || s == static_cast<int>(i) + 1;
      bool matches = ((e[i] - parities[i]) % 2 + 2) % 2 == 0;
      if (matches == inside) return false;
    }
  }
  return true;
}

SuiteReport skein_relations(const Corpus& corpus, int cap) {
  Recorder rec("skein-relations");
  const LaurentPolynomial x = LaurentPolynomial::variable({"x", "y"}, 0);
  const LaurentPolynomial xi = LaurentPolynomial::variable({"x", "y"}, 0, -1);
  const LaurentPolynomial y = LaurentPolynomial::variable({"x", "y"}, 1);
  const LaurentPolynomial z = LaurentPolynomial::variable({"z"}, 0);
  for (const auto& e : corpus.links) {
    LinkDiagram d = e.diagram();
    for (int c = 0; c < d.num_crossings(); ++c) {
      Resolutions r = resolutions(d, c);
      std::string at = label(e.name, c);
      rec.check("conway", at, [&] { return conway(r.plus) - conway(r.minus) == z * conway(r.zero); });
      rec.check("homfly", at, [&] {
        return x * homfly(r.plus) - xi * homfly(r.minus) == y * homfly(r.zero);
      });
      rec.check("kauffman", at, [&] {
        LinkDiagram inf = smooth_infinity(d, c);
        int shift = writhe(inf) - writhe(r.zero);
        LaurentPolynomial mono = LaurentPolynomial::variable({"x", "y"}, 0, shift);
        return x * kauffman_f(r.plus) - xi * kauffman_f(r.minus) ==
               y * (kauffman_f(r.zero) - mono * kauffman_f(inf));
      });
      int ca = d.components()[d.component_at(c, 0)].color;
      int cb = d.components()[d.component_at(c, 1)].color;
      if (ca != cb) continue;
      rec.check("colored-omega", at, [&] {
        LaurentPolynomial b = brace_of(d.num_colors(), ca);
        return scaled_omega(r.plus, ca) - scaled_omega(r.minus, ca) == b * scaled_omega(r.zero, ca);
      });
      rec.check("nabla-bold", at, [&] {
        LaurentPolynomial zi = LaurentPolynomial::variable(zvars(d.num_colors()), ca - 1);
        return scaled_nbl(r.plus, ca) - scaled_nbl(r.minus, ca) == zi * scaled_nbl(r.zero, ca);
      });
    }
    rec.check("descent-independence", e.name, [&] {
      LaurentPolynomial ref = conway(d);
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SkeinOptions opts;
        opts.seed = seed;
        if (!(conway(d, opts) == ref)) return false;
      }
      return true;
    });
    rec.check("homfly-at-one", e.name, [&] {
      // H(1, z): x -> 1, then y renamed to z.
      LaurentPolynomial h = homfly(d).embed({"x", "y"}).evaluate_at_one(0);
      return h.map_exponents({"z"}, [](const Exponent& ex) { return ex; }) == conway(d);
    });
    rec.check("bridge", e.name, [&] {
      PotentialFunction om = potential_function(monochrome(d));
      LaurentPolynomial lhs = monochromatic_numerator(om);
      LaurentPolynomial nabla = conway(d);
      LaurentPolynomial img = LaurentPolynomial::variable({"x"}, 0) - LaurentPolynomial::variable({"x"}, 0, -1);
      LaurentPolynomial rhs = nabla.is_zero() ? LaurentPolynomial({"x"}) : nabla.compose({img});
      return lhs == rhs;
    });
    int m = d.num_components();
    if (m == 2 || m == 3) {
      rec.check("c0", e.name, [&] {
        auto lk = linking_matrix(d);
        auto c = conway_coeffs(d);
        Rational c0 = c.empty() ? Rational(0) : c[0];
        if (m == 2) return c0 == lk[0][1];
        return c0 == lk[0][1] * lk[1][2] + lk[1][2] * lk[0][2] + lk[0][2] * lk[0][1];
      });
    }
    if (m <= 3) {
      rec.check("exp-base-case", e.name, [&] {
        CoefficientTable p = exp_expand_homfly(homfly(d), cap);
        CoefficientTable q = exp_expand_kauffman(kauffman_f(d), cap);
        for (int i = 0; i <= m + 1; ++i) {
          Rational want = i == m - 1 ? 1 : 0;
          if (p.at({0, i}) != want || q.at({0, i}) != want) return false;
        }
        return true;
      });
    }
    if (e.sum) {
      rec.check("connected-sum-conway", e.name, [&] {
        return conway(d) == conway(corpus.link(e.sum->left).diagram()) *
                                conway(corpus.link(e.sum->right).diagram());
      });
      rec.check("connected-sum-omega", e.name, [&] {
        return connected_sum_check(corpus.link(e.sum->left).diagram(),
                                   corpus.link(e.sum->right).diagram(), e.sum->left_component,
                                   e.sum->right_component);
      });
    }
  }
  return rec.take();
}

SuiteReport lemma41(const Corpus& corpus, int) {
  Recorder rec("lemma41");
  for (const auto& e : corpus.links) {
    LinkDiagram d = e.diagram();
    PotentialFunction om = potential_function(d);
    int m = d.num_components();
    std::vector<int> par = parity_signature(d);
    rec.check("sign-determined", e.name, [&] { return om.sign != SignProvenance::Ambiguous; });
    rec.check("a:bar-invariant", e.name, [&] { return bar_substitute(om.value) == om.value; });
    rec.check("symmetry", e.name, [&] {
      LaurentPolynomial inv = invert_variables(om.value);
      // A knot's numerator is symmetric, the denominator antisymmetric.
      int sign = om.knot_denominator ? 1 : (m % 2 == 0 ? 1 : -1);
      return inv * Rational(sign) == om.value;
    });
    if (m > 1) {
      rec.check("b:total-degree", e.name, [&] {
        for (const auto& [ex, v] : om.value.terms())
          if (((ex.total_degree() - m) % 2 + 2) % 2 != 0) return false;
        return true;
      });
      rec.check("c:color-degree", e.name, [&] {
        for (const auto& [ex, v] : om.value.terms())
          for (std::size_t i = 0; i < par.size(); ++i)
            if (((ex[i] - par[i]) % 2 + 2) % 2 != 0) return false;
        return true;
      });
      rec.check("parts-parity", e.name, [&] {
        Decomposition dec = decompose(om);
        for (const auto& [subset, part] : dec.parts)
          if (!parity_ok(part, m, par, subset)) return false;
        return true;
      });
    }
    for (int c = 0; c < m && m > 1; ++c) {
      int color = d.components()[c].color, same = 0;
      for (const auto& comp : d.components()) same += comp.color == color;
      if (same != 1) continue;
      rec.check("deletion", e.name + " component " + std::to_string(c),
                [&] { return deletion_check(om, d, c); });
    }
  }
  return rec.take();
}

SuiteReport decomposition_roundtrip(const Corpus& corpus, int cap) {
  Recorder rec("decomposition-roundtrip");
  rec.check("decompose-zero", "-", [] {
    for (int n = 1; n <= 3; ++n) {
      Decomposition dec = decompose(LaurentPolynomial(xvars(n)), n);
      for (const auto& [s, p] : dec.parts)
        if (!p.is_zero()) return false;
    }
    return true;
  });
  for (const auto& e : corpus.links) {
    LinkDiagram d = e.diagram();
    int m = d.num_components();
    PotentialFunction om = potential_function(d);
    rec.check("mho-root-independence", e.name, [&] { return mho(om, cap, true) == mho(om, cap, false); });
    rec.check("mho-degree-parity", e.name, [&] {
      PoleSeries s = mho(om, cap);
      int shift = s.pole ? -1 : 0;
      for (const auto& [ex, v] : s.series.terms())
        if (((ex.total_degree() + shift - m) % 2 + 2) % 2 != 0) return false;
      return true;
    });
    if (m < 2) continue;
    rec.check("mho-4y-integral", e.name,
              [&] { return mho(om, cap).series.scale_variables(4).has_integer_coefficients(); });
    Decomposition dec = decompose(om);
    rec.check("reconstruct", e.name, [&] { return reconstruct(dec) == om.value; });
    rec.check("half-integral", e.name, [&] {
      for (const auto& [s, p] : dec.parts)
        for (const auto& [ex, v] : p.terms())
          if (!is_half_integer(v)) return false;
      return true;
    });
    if (dec.n == 2)
      rec.check("p12-integral", e.name, [&] { return dec.part({1, 2}).has_integer_coefficients(); });
    rec.check("omega-from-nbl", e.name, [&] {
      return omega_from_nbl(nabla_bold(dec), parity_signature(d), m) == om.value;
    });
    rec.check("nbl-integral", e.name, [&] { return nabla_bold(dec).has_integer_coefficients(); });
    rec.check("nbl-star-integral", e.name,
              [&] { return nabla_bold_star(d, cap).series.has_integer_coefficients(); });
    rec.check("conway-is-z-nbl", e.name, [&] {
      LaurentPolynomial nb = nabla_bold(dec);
      LaurentPolynomial diag = nb.is_zero() ? LaurentPolynomial({"z"}) : nb.identify_variables("z");
      return LaurentPolynomial::variable({"z"}, 0) * diag == conway(d);
    });
  }
  return rec.take();
}

SuiteReport starred_pl_isotopy(const Corpus& corpus, int cap) {
  Recorder rec("starred-pl-isotopy");
  const LinkDiagram knots[2] = {corpus.link("trefoil_right").diagram(), corpus.link("figure8").diagram()};
  const char* knot_names[2] = {"trefoil", "figure8"};
  for (const auto& e : corpus.links) {
    if (!e.has_tag("probe")) continue;
    LinkDiagram d = e.diagram();
    TruncatedSeries conway0 = conway_star(d, cap);
    PoleSeries mho0 = mho_star(d, cap), nbl0 = nabla_bold_star(d, cap);
    HSeries h0 = homfly_star(d, cap), f0 = kauffman_star(d, cap);
    for (int k = 0; k < 2; ++k) {
      for (int c = 0; c < d.num_components(); ++c) {
        LinkDiagram t = connected_sum(d, knots[k], c, 0, true);
        std::string at = e.name + " + " + knot_names[k] + " on " + std::to_string(c);
        rec.check("conway*", at, [&] { return conway_star(t, cap) == conway0; });
        rec.check("mho*", at, [&] { return mho_star(t, cap) == mho0; });
        rec.check("nabla-bold*", at, [&] { return nabla_bold_star(t, cap) == nbl0; });
        rec.check("homfly*", at, [&] { return homfly_star(t, cap) == h0; });
        rec.check("kauffman*", at, [&] { return kauffman_star(t, cap) == f0; });
      }
    }
  }
  return rec.take();
}

SuiteReport congruences(const Corpus& corpus, int cap) {
  Recorder rec("congruences");
  for (const auto& e : corpus.links) {
    LinkDiagram d = e.diagram();
    int m = d.num_components();
    if (m == 3) {
      for (int lone = 0; lone < 3; ++lone) {
        std::vector<int> colors(3, 1);
        colors[lone] = 2;
        LinkDiagram two = d.recolored(colors);
        rec.check("table-identities", e.name + " colors " + std::to_string(lone), [&] {
          auto v = two_color_violations(two, two_color_tables(two, cap));
          return v.empty();
        });
      }
    }
    if (m != 2) continue;
    LinkDiagram two = two_colored(d);
    int lk = linking_matrix(d)[0][1];
    TwoColorTables t = two_color_tables(two, cap);
    auto violations = two_color_violations(two, t);
    std::string joined;
    for (const auto& v : violations) joined += (joined.empty() ? "" : "; ") + v;
    rec.check("table-identities", e.name, [&] { return violations.empty(); });
    if (!violations.empty()) rec.annotate(joined);
    auto alpha = alpha_coeffs(d, cap);
    auto at = [](const std::vector<Rational>& v, std::size_t i) { return i < v.size() ? v[i] : Rational(0); };
    if (e.has_tag("chain"))
      rec.check("c11-chain", e.name, [&] {
        return unoriented_sl(d) == at(alpha, 1) - make_rational(lk * lk * lk - lk, 12);
      });
    rec.check("reversal", e.name, [&] { return reversal_identity_holds(d); });
    rec.check("alpha1", e.name, [&] {
      auto c = conway_coeffs(d);
      auto k = component_conways(d);
      Rational c1k = 0;
      for (const auto& p : k) c1k += p.is_zero() ? Rational(0) : p.embed({"z"}).coefficient(Exponent{2});
      return at(alpha, 1) == at(c, 1) - at(c, 0) * c1k;
    });
    rec.check("traldi", e.name, [&] {
      PotentialFunction om = potential_function(two);
      return traldi_congruence_failures(traldi_expand(om, lk, cap), decompose(om)).empty();
    });
    rec.check("delta-congruence", e.name, [&] {
      CongruenceReport r = congruence_report(two, cap);
      if (!r.unknotted_components) return true;
      // With unknotted components nabla-bold* is the polynomial nabla-bold itself.
      CoefficientTable poly = table_of(
          TruncatedSeries::from_polynomial(nabla_bold(decompose(potential_function(two))), cap),
          SeriesSource::NablaBoldStar);
      for (const auto& c : r.entries)
        if (c.delta != poly.at({c.i, c.j})) return false;
      return true;
    });
    if (lk == 0) {
      rec.check("beta-agrees-with-beta-hat", e.name, [&] {
        for (int k = 1; 2 * k <= cap; ++k)
          if (cochran_beta(d, k) != beta_hat(d, k)) return false;
        return true;
      });
      rec.check("delta11-is-alpha1", e.name, [&] { return t.delta.at({1, 1}) == at(alpha, 1); });
    }
  }
  return rec.take();
}

SuiteReport finite_type_evidence(const Corpus& corpus, int) {
  Recorder rec("finite-type-evidence");
  for (const auto& fam : corpus.evidence) {
    std::vector<LinkDiagram> members;
    for (const auto& m : fam.members) members.push_back(m.diagram());
    for (const auto& key : fam.invariants) {
      std::string found;
      rec.check(key, fam.name, [&] {
        for (const auto& x : type_falsify(invariant_by_key(key), members, fam.points - 1))
          found += (found.empty() ? "nonzero on " : ", ") + x.name + " = " + to_string(x.value);
        return found.empty();
      });
      if (!found.empty()) rec.annotate(found);
    }
  }
  return rec.take();
}

SuiteReport finite_type_witnesses(const Corpus& corpus, int cap) {
  Recorder rec("finite-type-witnesses");
  for (const auto& w : corpus.witnesses) {
    LinkDiagram d = w.diagram();
    for (const auto& [key, ev] : w.expected) {
      if (key.rfind("extend:", 0) != 0) continue;
      std::string got;
      rec.check(key, w.name, [&] {
        got = render_entry_value(w, key, 1, cap).value_or("-");
        return got == ev.value;
      });
      if (!rec.last_ok()) rec.annotate("expected " + ev.value + ", got " + got);
      if (w.params.size() == 4)
        rec.check("jump-formula", w.name, [&] { return render_entry_value(w, key, 2, cap) == ev.value; });
      InvariantFunction chi = invariant_by_key(key.substr(7));
      auto pts = singular_points(d);
      if (pts.empty()) continue;
      rec.check("multilinear", w.name, [&] {
        return extend(chi, d) ==
               extend(chi, resolve_singular(d, pts[0], 1)) - extend(chi, resolve_singular(d, pts[0], -1));
      });
    }
  }
  InvariantFunction lk{"lk", [](const LinkDiagram& x) { return Rational(linking_matrix(x)[0][1]); },
                       ColorContext::Monochromatic};
  for (const auto& w : corpus.witnesses) {
    LinkDiagram d = w.diagram();
    if (singular_points(d).size() != 1 || d.num_components() != 2) continue;
    rec.check("leibniz", w.name,
              [&] { return leibniz_restrict(lk, lk, d) && leibniz_restrict(lk, parity_of_lk(), d); });
  }
  return rec.take();
}

}  // namespace

int SuiteReport::failures() const {
  int n = 0;
  for (const auto& r : results) n += !r.ok;
  return n;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "skein-relations", "lemma41",     "decomposition-roundtrip", "starred-pl-isotopy",
      "congruences",     "finite-type-evidence", "finite-type-witnesses"};
  return names;
}

SuiteReport check_corpus_values(const Corpus& corpus, int cap) {
  Recorder rec("corpus-values");
  auto run = [&](const CorpusEntry& e) {
    for (const auto& [key, ev] : e.expected) {
      for (int route = 1; route <= 2; ++route) {
        std::optional<std::string> got;
        rec.check(key + " route " + std::to_string(route), e.name, [&] {
          got = render_entry_value(e, key, route, cap);
          // Only derived values are required to have a second route.
          if (!got) return route == 2 && ev.provenance != "DERIVED";
          return *got == ev.value;
        });
        if (!rec.last_ok() && rec.last_detail().empty())
          rec.annotate("expected " + ev.value + ", got " + got.value_or("nothing"));
      }
    }
  };
  for (const auto& e : corpus.links) run(e);
  for (const auto& w : corpus.witnesses) run(w);
  return rec.take();
}

SuiteReport run_suite(const std::string& name, const Corpus& corpus, int cap) {
  using Runner = SuiteReport (*)(const Corpus&, int);
  static const std::map<std::string, Runner> runners = {
      {"skein-relations", skein_relations},
      {"lemma41", lemma41},
      {"decomposition-roundtrip", decomposition_roundtrip},
      {"starred-pl-isotopy", starred_pl_isotopy},
      {"congruences", congruences},
      {"finite-type-evidence", finite_type_evidence},
      {"finite-type-witnesses", finite_type_witnesses},
  };
  auto it = runners.find(name);
  if (it == runners.end()) throw ValidationError("unknown suite: " + name);
  return it->second(corpus, cap);
}

}  // namespace linkinv
