// linkinv command-line interface.
//
// Exit codes: 0 success, 1 verification failure (or internal inconsistency),
// 2 input error, 3 resource cap.
#include "linkinv/corpus.hpp"
#include "linkinv/finitetype.hpp"
#include "linkinv/invariants.hpp"
#include "linkinv/skein.hpp"
#include "linkinv/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef LINKINV_CORPUS_DIR
#define LINKINV_CORPUS_DIR "corpus"
#endif

using nlohmann::ordered_json;
using namespace linkinv;

namespace {

constexpr const char* kReportSchema = "linkinv-report/1";
constexpr const char* kVerifySchema = "linkinv-verify/1";

struct Options {
  std::string colors;
  int cap = kDefaultCap;
  bool json = false;
  std::size_t budget = 0;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_colors(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  std::size_t offset = 0;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("--colors: expected a positive integer, got '" + item + "'", offset);
    }
    offset += item.size() + 1;
  }
  return out;
}

LinkDiagram load_diagram(const std::string& path, const Options& opt) {
  LinkDiagram d = parse_pd(read_input(path));
  if (d.name().empty() && path != "-") d.set_name(std::filesystem::path(path).stem().string());
  if (!opt.colors.empty()) {
    std::vector<int> colors = parse_colors(opt.colors);
    if (static_cast<int>(colors.size()) != d.num_components())
      throw ValidationError("--colors: " + std::to_string(colors.size()) + " colors for " +
                            std::to_string(d.num_components()) + " components");
    d = d.recolored(colors);
  }
  return d;
}

ordered_json table_json(const CoefficientTable& t) {
  ordered_json out = ordered_json::object();
  for (const auto& [idx, v] : t.entries) {
    if (v == 0) continue;
    std::string key;
    for (std::size_t i = 0; i < idx.size(); ++i) key += (i ? "," : "") + std::to_string(idx[i]);
    out[key] = to_string(v);
  }
  return out;
}

ordered_json list_json(const std::vector<Rational>& v) {
  ordered_json out = ordered_json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

std::string subset_name(const std::vector<int>& s) {
  if (s.empty()) return "P";
  std::string out = "P";
  for (int i : s) out += "_" + std::to_string(i);
  return out;
}

ordered_json decomposition_json(const Decomposition& dec) {
  ordered_json out = ordered_json::object();
  for (const auto& [s, p] : dec.parts) out[subset_name(s)] = to_string(p);
  return out;
}

std::string omega_text(const PotentialFunction& om) {
  if (om.knot_denominator) return "(" + to_string(om.value) + ") / (x - x^-1)";
  return to_string(om.value);
}

ordered_json report_json(const InvariantReport& r) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["name"] = r.name;
  j["cap"] = r.cap;
  j["components"] = r.components;
  j["colors"] = r.colors;
  j["lk"] = r.lk;
  j["conway"] = to_string(r.conway);
  j["omega"] = omega_text(r.omega);
  j["omega_sign"] = to_string(r.omega.sign);
  j["mho"] = to_string(r.mho);
  if (r.decomposition) j["decomposition"] = decomposition_json(*r.decomposition);
  if (r.nabla_bold) j["nabla_bold"] = to_string(*r.nabla_bold);
  j["c"] = list_json(r.c);
  j["alpha"] = list_json(r.alpha);
  if (r.tables) {
    j["c_table"] = table_json(r.tables->c);
    j["alpha_table"] = table_json(r.tables->alpha);
    j["delta"] = table_json(r.tables->delta);
    j["table_violations"] = r.table_violations;
    j["milnor_lifting"] = "delta_ij is stated to lift a Milnor invariant; not verified";
  }
  if (!r.beta.empty()) j["beta"] = list_json(r.beta);
  if (!r.beta_hat.empty()) j["beta_hat"] = list_json(r.beta_hat);
  if (r.unoriented_sl) j["unoriented_sl"] = to_string(*r.unoriented_sl);
  if (r.casson_walker) j["casson_walker_surrogate"] = to_string(*r.casson_walker);
  if (r.gamma) j["gamma"] = to_string(*r.gamma);
  if (r.congruences) {
    ordered_json c = ordered_json::array();
    for (const auto& e : r.congruences->entries)
      c.push_back({{"i", e.i}, {"j", e.j}, {"delta", to_string(e.delta)},
                   {"modulus", e.modulus.get_str()}, {"residue", e.residue.get_str()},
                   {"flagged", e.nonzero_residue}});
    j["congruences"] = c;
    ordered_json flags = ordered_json::array();
    for (const auto& [i, jj] : r.congruences->flagged()) flags.push_back(std::to_string(i) + "," + std::to_string(jj));
    j["congruence_flags"] = flags;
    j["unknotted_components"] = r.congruences->unknotted_components;
  }
  return j;
}

void print_text(const ordered_json& j, const std::string& indent = "") {
  for (const auto& [k, v] : j.items()) {
    if (k == "schema" || k == "congruences") continue;
    if (v.is_object() && !v.empty()) {
      std::cout << indent << k << ":\n";
      print_text(v, indent + "  ");
    } else if (v.is_string()) {
      std::cout << indent << k << ": " << v.get<std::string>() << "\n";
    } else {
      std::cout << indent << k << ": " << v.dump() << "\n";
    }
  }
}

void emit(const ordered_json& j, bool as_json) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    print_text(j);
}

int cmd_invariants(const std::string& input, const Options& opt) {
  InvariantReport r = invariant_report(load_diagram(input, opt), opt.cap);
  emit(report_json(r), opt.json);
  return 0;
}

int cmd_decompose(const std::string& input, const Options& opt) {
  LinkDiagram d = load_diagram(input, opt);
  if (d.num_components() < 2) throw ValidationError("decompose needs at least two components");
  PotentialFunction om = potential_function(d);
  ordered_json j;
  j["schema"] = kReportSchema;
  j["omega"] = omega_text(om);
  j["parts"] = decomposition_json(decompose(om));
  emit(j, opt.json);
  return 0;
}

int cmd_polys(const std::string& input, const std::string& which, const Options& opt) {
  LinkDiagram d = load_diagram(input, opt);
  std::string value;
  if (which == "conway") {
    value = to_string(conway(d));
  } else if (which == "homfly") {
    value = to_string(homfly(d));
  } else if (which == "kauffman") {
    value = to_string(kauffman_f(d));
  } else if (which == "omega") {
    value = omega_text(potential_function(d));
  } else {
    value = d.num_components() == 1 ? to_string(nabla_bold_series(d, opt.cap))
                                    : to_string(nabla_bold(decompose(potential_function(d))));
  }
  ordered_json j;
  j["schema"] = kReportSchema;
  j[which] = value;
  if (opt.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << value << "\n";
  return 0;
}

int cmd_render(const std::string& input, const Options& opt) {
  std::cout << render_pd(load_diagram(input, opt));
  return 0;
}

int cmd_sum(const std::string& a, const std::string& b, int ca, int cb, bool share,
            const Options& opt) {
  Options plain = opt;
  plain.colors.clear();
  LinkDiagram s = connected_sum(load_diagram(a, plain), load_diagram(b, plain), ca, cb, share);
  if (!opt.colors.empty()) s = s.recolored(parse_colors(opt.colors));
  std::cout << render_pd(s);
  return 0;
}

int cmd_verify(const std::string& dir, const std::vector<std::string>& suites, const Options& opt) {
  for (const auto& s : suites) {
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), s) == known.end())
      throw ValidationError("unknown suite '" + s + "'");
  }
  Corpus corpus = load_corpus(dir);
  std::vector<SuiteReport> reports;
  reports.push_back(check_corpus_values(corpus, opt.cap));
  for (const auto& s : suites.empty() ? suite_names() : suites)
    reports.push_back(run_suite(s, corpus, opt.cap));

  bool passed = true;
  ordered_json j;
  j["schema"] = kVerifySchema;
  j["corpus"] = dir;
  j["suites"] = ordered_json::array();
  for (const auto& r : reports) {
    passed = passed && r.passed();
    ordered_json failures = ordered_json::array();
    for (const auto& c : r.results)
      if (!c.ok) failures.push_back({{"check", c.check}, {"entry", c.entry}, {"detail", c.detail}});
    j["suites"].push_back({{"suite", r.suite},
                           {"checks", r.results.size()},
                           {"passed", r.passed()},
                           {"failures", failures}});
  }
  j["passed"] = passed;
  if (opt.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << " (" << r.results.size()
                << " checks, " << r.failures() << " failed)\n";
      for (const auto& c : r.results)
        if (!c.ok)
          std::cout << "  " << c.entry << ": " << c.check << (c.detail.empty() ? "" : ": ")
                    << c.detail << "\n";
    }
  }
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact link invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--colors", opt.colors, "one color per component, e.g. 1,2,2");
  app.add_option("--cap", opt.cap, "series truncation degree")->check(CLI::Range(0, 64));
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--budget", opt.budget, "skein node budget per call");

  std::string input, input2, which, corpus_dir = LINKINV_CORPUS_DIR;
  std::vector<std::string> suites;
  int ca = 0, cb = 0;
  bool share = false;

  auto* inv = app.add_subcommand("invariants", "full invariant report");
  inv->add_option("input", input, "diagram file or -")->required();
  auto* dec = app.add_subcommand("decompose", "parts of the potential function");
  dec->add_option("input", input, "diagram file or -")->required();
  auto* polys = app.add_subcommand("polys", "a single polynomial");
  polys->add_option("input", input, "diagram file or -")->required();
  polys->add_option("--which", which, "conway, homfly, kauffman, omega or nbl")
      ->required()
      ->check(CLI::IsMember({"conway", "homfly", "kauffman", "omega", "nbl"}));
  auto* render = app.add_subcommand("render", "canonical PD text");
  render->add_option("input", input, "diagram file or -")->required();
  auto* sum = app.add_subcommand("sum", "band sum of two diagrams");
  sum->add_option("left", input, "diagram file")->required();
  sum->add_option("right", input2, "diagram file")->required();
  sum->add_option("--left-component", ca, "component of the left diagram");
  sum->add_option("--right-component", cb, "component of the right diagram");
  sum->add_flag("--share-colors", share, "keep the right diagram's colors");
  auto* verify = app.add_subcommand("verify", "check the corpus");
  verify->add_option("--corpus", corpus_dir, "corpus directory");
  verify->add_option("--suite", suites, "suite to run (repeatable); default all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (opt.budget > 0) default_skein_budget() = opt.budget;

  try {
    if (*inv) return cmd_invariants(input, opt);
    if (*dec) return cmd_decompose(input, opt);
    if (*polys) return cmd_polys(input, which, opt);
    if (*render) return cmd_render(input, opt);
    if (*sum) return cmd_sum(input, input2, ca, cb, share, opt);
    if (*verify) return cmd_verify(corpus_dir, suites, opt);
  } catch (const ParseError& e) {
    std::cerr << "linkinv: parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "linkinv: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    std::cerr << "linkinv: resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "linkinv: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
