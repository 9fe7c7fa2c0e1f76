#include "linkinv/corpus.hpp"

#include "linkinv/finitetype.hpp"
#include "linkinv/invariants.hpp"
#include "linkinv/skein.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace linkinv {

namespace {

using nlohmann::json;

constexpr std::uint64_t kSecondDescentSeed = 20011;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CorpusEntry entry_from_json(const json& j, const std::string& dir) {
  CorpusEntry e;
  e.name = j.at("name").get<std::string>();
  try {
    if (j.contains("file")) {
      e.file = j.at("file").get<std::string>();
      e.text = read_file(dir + "/" + e.file);
    } else {
      e.text = j.at("text").get<std::string>();
    }
    if (j.contains("colors")) e.colors = j.at("colors").get<std::vector<int>>();
    if (j.contains("tags")) e.tags = j.at("tags").get<std::vector<std::string>>();
    if (j.contains("sum")) {
      const json& s = j.at("sum");
      e.sum = SumSpec{s.at("left").get<std::string>(), s.at("right").get<std::string>(),
                      s.at("left_component").get<int>(), s.at("right_component").get<int>()};
    }
    if (j.contains("params")) e.params = j.at("params").get<std::vector<int>>();
    if (j.contains("expected")) {
      for (const auto& [key, v] : j.at("expected").items()) {
        ExpectedValue ev;
        ev.value = v.at("value").get<std::string>();
        ev.provenance = v.at("provenance").get<std::string>();
        if (v.contains("note")) ev.note = v.at("note").get<std::string>();
        if (ev.provenance != "PAPER" && ev.provenance != "DERIVED" && ev.provenance != "TRIVIAL")
          throw ValidationError("key '" + key + "' has no valid provenance");
        e.expected[key] = ev;
      }
    }
  } catch (const std::exception& ex) {
    throw ValidationError("corpus entry '" + e.name + "': " + ex.what());
  }
  return e;
}

std::string render_list(const std::vector<Rational>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "]";
}

std::string render_table(const CoefficientTable& t, int cap) {
  std::string s = "{";
  bool first = true;
  for (const auto& [idx, v] : t.entries) {
    int total = 0;
    for (int k : idx) total += k;
    if (v == 0 || total > cap) continue;
    s += first ? "" : ", ";
    first = false;
    s += "(";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    s += "): " + to_string(v);
  }
  return s + "}";
}

std::string render_omega(const PotentialFunction& om) {
  if (om.knot_denominator) return "(" + to_string(om.value) + ") / (x - x^-1)";
  return to_string(om.value);
}

// Omega from the other Fox minor, with a second skein descent for the sign.
PotentialFunction omega_second_route(const LinkDiagram& d) {
  SkeinOptions opts;
  opts.seed = kSecondDescentSeed;
  return normalize_potential(alexander_poly(d, true), d.num_components(), d.num_colors(),
                             conway(d, opts));
}

// z times the monochromatic Mho of Omega, as a series in z.
TruncatedSeries conway_from_omega(const LinkDiagram& d, int cap) {
  LinkDiagram mono = d.recolored(std::vector<int>(d.num_components(), 1));
  PoleSeries s = mho(omega_second_route(mono), cap);
  if (s.pole) return s.series;
  return s.series * TruncatedSeries::variable({"z"}, cap, 0);
}

Rational z_coeff(const TruncatedSeries& s, int k) {
  if (s.is_zero()) return 0;
  return s.embed({"z"}).coefficient(Exponent{k});
}

std::vector<Rational> trimmed(std::vector<Rational> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::vector<Rational> c_second_route(const LinkDiagram& d, int cap) {
  int shift = d.num_components() - 1;
  TruncatedSeries nabla = conway_from_omega(d, cap);
  std::vector<Rational> c;
  for (int k = 0; shift + 2 * k <= cap; ++k) c.push_back(z_coeff(nabla, shift + 2 * k));
  return trimmed(c);
}

std::vector<Rational> alpha_second_route(const LinkDiagram& d, int cap) {
  int shift = d.num_components() - 1;
  TruncatedSeries star = starred(conway_from_omega(d, cap), d);
  std::vector<Rational> a;
  for (int k = 0; shift + 2 * k <= cap; ++k) a.push_back(z_coeff(star, shift + 2 * k));
  return trimmed(a);
}

// Two-colour tables from the second Omega; each table's diagonal sums are
// checked against the skein-side c_k and alpha_k before it is returned.
TwoColorTables tables_second_route(const LinkDiagram& d, int cap) {
  PotentialFunction om = omega_second_route(d);
  TwoColorTables t;
  t.c = table_of(mho(om, cap).series, SeriesSource::Mho);
  t.alpha = table_of(starred(mho(om, cap), d).series, SeriesSource::MhoStar);
  PoleSeries nb{TruncatedSeries::from_polynomial(nabla_bold(decompose(om)), cap), false};
  t.delta = table_of(starred(nb, d).series, SeriesSource::NablaBoldStar);
  auto c = conway_coeffs(d);
  auto alpha = alpha_coeffs(d, cap + 1);
  auto at = [](const std::vector<Rational>& v, int k) {
    return k < static_cast<int>(v.size()) ? v[k] : Rational(0);
  };
  for (int k = 0; 2 * k <= cap; ++k) {
    Rational sc = 0, sa = 0, sd = 0;
    for (int i = 0; i <= 2 * k; ++i) {
      sc += t.c.at({i, 2 * k - i});
      sa += t.alpha.at({i, 2 * k - i});
      sd += t.delta.at({i, 2 * k - i});
    }
    if (sc != at(c, k) || sa != at(alpha, k) || sd != at(alpha, k))
      throw DomainError("two-colour table diagonal disagrees with the skein route");
  }
  return t;
}

std::optional<std::string> render_extend(const LinkDiagram& d, const std::string& inv, int route) {
  if (route == 1) return to_string(extend(invariant_by_key(inv), d));
  if (inv != "(-1)^lk") return std::nullopt;
  LinkDiagram plus = d;
  for (int x : singular_points(d)) plus = resolve_singular(plus, x, 1);
  int k = static_cast<int>(singular_points(d).size());
  Rational v = Rational(Integer(1) << k);
  if (linking_matrix(plus)[0][1] % 2 != 0) v = -v;
  return to_string(v);
}

}  // namespace

LinkDiagram CorpusEntry::diagram() const {
  LinkDiagram d = parse_pd(text);
  if (colors) d = d.recolored(*colors);
  d.set_name(name);
  return d;
}

bool CorpusEntry::has_tag(const std::string& t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

const CorpusEntry& Corpus::link(const std::string& name) const {
  for (const auto& e : links)
    if (e.name == name) return e;
  throw ValidationError("no corpus link named '" + name + "'");
}

Corpus load_corpus(const std::string& directory) {
  json j;
  try {
    j = json::parse(read_file(directory + "/corpus.json"));
  } catch (const json::exception& ex) {
    throw ValidationError(std::string("corpus.json: ") + ex.what());
  }
  if (j.value("schema", "") != kCorpusSchema)
    throw ValidationError("corpus.json: unsupported schema");
  Corpus c;
  c.directory = directory;
  try {
    for (const auto& e : j.at("links")) c.links.push_back(entry_from_json(e, directory));
    for (const auto& f : j.at("evidence")) {
      SingularFamily fam;
      fam.name = f.at("name").get<std::string>();
      fam.invariants = f.at("invariants").get<std::vector<std::string>>();
      fam.points = f.at("points").get<int>();
      for (const auto& m : f.at("members")) fam.members.push_back(entry_from_json(m, directory));
      c.evidence.push_back(std::move(fam));
    }
    for (const auto& w : j.at("witnesses")) c.witnesses.push_back(entry_from_json(w, directory));
  } catch (const json::exception& ex) {
    throw ValidationError(std::string("corpus.json: ") + ex.what());
  }
  return c;
}

const std::vector<std::string>& value_keys() {
  static const std::vector<std::string> keys = {
      "components", "lk",    "conway",  "omega",       "homfly", "kauffman", "nbl",
      "c",          "alpha", "c_table", "alpha_table", "delta",  "beta",     "gamma"};
  return keys;
}

std::optional<std::string> render_value(const LinkDiagram& d, const std::string& key, int route,
                                        int cap) {
  const int m = d.num_components();
  if (key.rfind("extend:", 0) == 0) return render_extend(d, key.substr(7), route);
  if (d.has_singular()) return std::nullopt;
  SkeinOptions second;
  second.seed = kSecondDescentSeed;
  if (key == "components") return std::to_string(m);
  if (key == "lk") {
    if (route == 2) return std::nullopt;
    std::string s = "[";
    auto lk = linking_matrix(d);
    for (std::size_t i = 0; i < lk.size(); ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < lk[i].size(); ++j) s += (j ? ", " : "") + std::to_string(lk[i][j]);
      s += "]";
    }
    return s + "]";
  }
  if (key == "conway") {
    if (route == 1) return to_string(conway(d));
    int deg = std::max(cap, d.num_crossings() + m);
    return to_string(conway_from_omega(d, deg).to_polynomial());
  }
  if (key == "omega") return render_omega(route == 1 ? potential_function(d) : omega_second_route(d));
  if (key == "homfly") return to_string(route == 1 ? homfly(d) : homfly(d, second));
  if (key == "kauffman") return to_string(route == 1 ? kauffman_f(d) : kauffman_f(d, second));
  if (key == "nbl") {
    if (m < 2) return std::nullopt;
    return to_string(nabla_bold(decompose(route == 1 ? potential_function(d) : omega_second_route(d))));
  }
  if (key == "c") return render_list(route == 1 ? conway_coeffs(d) : c_second_route(d, cap));
  if (key == "alpha") return render_list(route == 1 ? alpha_coeffs(d, cap) : alpha_second_route(d, cap));
  if (key == "c_table" || key == "alpha_table" || key == "delta") {
    if (m != 2) return std::nullopt;
    LinkDiagram two = two_colored(d);
    TwoColorTables t = route == 1 ? two_color_tables(two, cap) : tables_second_route(two, cap);
    const CoefficientTable& tab = key == "c_table" ? t.c : key == "alpha_table" ? t.alpha : t.delta;
    return render_table(tab, cap);
  }
  if (key == "beta") {
    if (m != 2 || linking_matrix(d)[0][1] != 0) return std::nullopt;
    std::vector<Rational> b;
    for (int k = 1; 2 * k <= cap; ++k) b.push_back(route == 1 ? cochran_beta(d, k) : beta_hat(d, k));
    return render_list(b);
  }
  if (key == "gamma") {
    if (m != 3) return std::nullopt;
    if (route == 1) return to_string(gamma3(d));
    auto at = [](const std::vector<Rational>& v, std::size_t i) { return i < v.size() ? v[i] : Rational(0); };
    Rational g = at(alpha_second_route(d, 4), 1);
    std::vector<std::vector<Rational>> sub;
    for (int drop = 2; drop >= 0; --drop) sub.push_back(alpha_second_route(delete_component(d, drop), 3));
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        if (a != b) g -= at(sub[a], 0) * at(sub[b], 1);
    return to_string(g);
  }
  throw ValidationError("unknown value key '" + key + "'");
}

std::optional<std::string> render_entry_value(const CorpusEntry& e, const std::string& key, int route,
                                              int cap) {
  if (route == 2 && key == "extend:alpha2") {
    if (e.params.size() != 4) return std::nullopt;
    return to_string(prop33_formula(e.params[0], e.params[1], e.params[2], e.params[3]));
  }
  return render_value(e.diagram(), key, route, cap);
}

}  // namespace linkinv
