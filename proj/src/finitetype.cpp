#include "linkinv/finitetype.hpp"

#include "linkinv/invariants.hpp"
#include "linkinv/skein.hpp"

#include <cstdlib>
#include <regex>

namespace linkinv {

namespace {

bool same_color(const InvariantFunction& chi, const LinkDiagram& d, int x) {
  int a = d.component_at(x, 0), b = d.component_at(x, 1);
  switch (chi.context) {
    case ColorContext::Monochromatic:
      return true;
    case ColorContext::PerComponent:
      return a == b;
    case ColorContext::AsGiven:
      break;
  }
  return d.components()[a].color == d.components()[b].color;
}

void append_power(std::vector<int>& word, int letter, int power) {
  for (int i = 0; i < std::abs(power); ++i) word.push_back(power > 0 ? letter : -letter);
}

}  // namespace

InvariantFunction operator*(const InvariantFunction& a, const InvariantFunction& b) {
  InvariantFunction out;
  out.name = a.name + "*" + b.name;
  out.context = a.context;
  out.eval = [ea = a.eval, eb = b.eval](const LinkDiagram& d) -> Rational { return ea(d) * eb(d); };
  return out;
}

std::vector<int> singular_points(const LinkDiagram& d) {
  std::vector<int> out;
  for (int x = 0; x < d.num_crossings(); ++x)
    if (d.crossings()[x].singular) out.push_back(x);
  return out;
}

Rational extend(const InvariantFunction& chi, const LinkDiagram& s) {
  std::vector<int> pts = singular_points(s);
  for (int x : pts)
    if (!same_color(chi, s, x))
      throw ValidationError("double point at crossing " + std::to_string(x) +
                            " joins strands of different colors");
  if (pts.size() > 20) throw ResourceLimitError("too many double points to resolve");
  Rational total = 0;
  unsigned long count = 1ul << pts.size();
  for (unsigned long mask = 0; mask < count; ++mask) {
    LinkDiagram r = s;
    int minus = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      bool neg = (mask >> i) & 1u;
      minus += neg;
      r = resolve_singular(r, pts[i], neg ? -1 : 1);
    }
    Rational v = chi(r);
    if (minus % 2) total -= v;
    else total += v;
  }
  return total;
}

std::vector<TypeWitness> type_falsify(const InvariantFunction& chi,
                                      const std::vector<LinkDiagram>& family, int r) {
  std::vector<TypeWitness> out;
  for (const auto& s : family) {
    if (static_cast<int>(singular_points(s).size()) != r + 1)
      throw ValidationError("family member '" + s.name() + "' does not have " +
                            std::to_string(r + 1) + " double points");
    Rational v = extend(chi, s);
    if (v != 0) out.push_back({s.name(), v});
  }
  return out;
}

Rational prop33_formula(int a, int b, int c, int d) {
  auto q = [](long x) { return Rational(x); };
  return q(a + b + c + d) * d - q(a + c + d) * (b + d) - q(a + b + d) * (c + d) -
         q(b + c + d) * (a + d);
}

SingularFixture prop33_witness(int a, int b, int c, int d) {
  if (a + b + c + 2 * d != 0) throw ValidationError("prop33 witness needs a + b + c + 2d = 0");
  // Strand 1 is the threading knot; strands 2 and 3 close up to the singular
  // curve. sigma_1^{2e} between two double points passes e times through the
  // lobe there, and sigma_1 sigma_2^2 sigma_1 once through the center.
  BraidWord w;
  w.strands = 3;
  const int lobes[3] = {a, b, c};
  for (int e : lobes) {
    w.word.push_back(2);
    w.singular.push_back(true);
    std::size_t before = w.word.size();
    append_power(w.word, 1, 2 * e);
    w.singular.resize(w.singular.size() + (w.word.size() - before), false);
  }
  for (int i = 0; i < std::abs(d); ++i) {
    int s = d > 0 ? 1 : -1;
    for (int letter : {1, 2, 2, 1}) {
      w.word.push_back(s * letter);
      w.singular.push_back(false);
    }
  }
  SingularFixture f{braid_closure(w), prop33_formula(a, b, c, d)};
  f.link.set_name("prop33(" + std::to_string(a) + "," + std::to_string(b) + "," +
                  std::to_string(c) + "," + std::to_string(d) + ")");
  return f;
}

SingularFixture prop21_fixture(int k) {
  if (k < 0) throw ValidationError("prop21 fixture needs k >= 0");
  BraidWord w;
  w.strands = 2;
  w.word.assign(k + k % 2, 1);
  w.singular.assign(w.word.size(), false);
  for (int i = 0; i < k; ++i) w.singular[i] = true;
  int lk_plus = (k + k % 2) / 2;
  Rational expected = Rational(Integer(1) << k);
  if (lk_plus % 2) expected = -expected;
  SingularFixture f{braid_closure(w, {1, 1}), expected};
  f.link.set_name("prop21(" + std::to_string(k) + ")");
  return f;
}

bool leibniz_restrict(const InvariantFunction& chi, const InvariantFunction& psi,
                      const LinkDiagram& s) {
  std::vector<int> pts = singular_points(s);
  if (pts.size() != 1) throw ValidationError("the product rule is checked at one double point");
  LinkDiagram plus = resolve_singular(s, pts[0], 1);
  LinkDiagram minus = resolve_singular(s, pts[0], -1);
  Rational lhs = extend(chi * psi, s);
  Rational rhs = chi(plus) * extend(psi, s) + extend(chi, s) * psi(minus);
  return lhs == rhs;
}

InvariantFunction parity_of_lk() {
  InvariantFunction f;
  f.name = "(-1)^lk";
  f.context = ColorContext::Monochromatic;
  f.eval = [](const LinkDiagram& d) {
    if (d.num_components() != 2) throw ValidationError("(-1)^lk needs two components");
    return Rational(linking_matrix(d)[0][1] % 2 == 0 ? 1 : -1);
  };
  return f;
}

InvariantFunction alpha2_kl() {
  InvariantFunction f;
  f.name = "alpha2";
  f.context = ColorContext::PerComponent;
  f.eval = [](const LinkDiagram& d) {
    auto a = alpha_coeffs(d, d.num_components() - 1 + 4);
    return a.size() > 2 ? a[2] : Rational(0);
  };
  return f;
}

InvariantFunction conway_coefficient_kl(int k) {
  InvariantFunction f;
  f.name = "c" + std::to_string(k);
  f.context = ColorContext::PerComponent;
  f.eval = [k](const LinkDiagram& d) {
    auto c = conway_coeffs(d);
    return k < static_cast<int>(c.size()) ? c[k] : Rational(0);
  };
  return f;
}

InvariantFunction mho_coefficient(int n) {
  InvariantFunction f;
  f.name = "mho" + std::to_string(n);
  f.context = ColorContext::Monochromatic;
  f.eval = [n](const LinkDiagram& d) {
    LinkDiagram mono = d.recolored(std::vector<int>(d.num_components(), 1));
    PoleSeries s = mho(potential_function(mono), n + 1);
    if (s.series.is_zero()) return Rational(0);
    return s.series.embed({"z"}).coefficient(Exponent{s.pole ? n + 1 : n});
  };
  return f;
}

InvariantFunction homfly_exp_coefficient(int k, int i) {
  InvariantFunction f;
  f.name = "p" + std::to_string(k) + "," + std::to_string(i);
  f.context = ColorContext::Monochromatic;
  f.eval = [k, i](const LinkDiagram& d) { return exp_expand_homfly(homfly(d), k).at({k, i}); };
  return f;
}

InvariantFunction kauffman_exp_coefficient(int k, int i) {
  InvariantFunction f;
  f.name = "q" + std::to_string(k) + "," + std::to_string(i);
  f.context = ColorContext::Monochromatic;
  f.eval = [k, i](const LinkDiagram& d) { return exp_expand_kauffman(kauffman_f(d), k).at({k, i}); };
  return f;
}

InvariantFunction invariant_by_key(const std::string& key) {
  static const std::regex one(R"(^(c|mho)(\d+)$)"), two(R"(^([pq])(\d+),(\d+)$)");
  std::smatch m;
  if (key == "(-1)^lk") return parity_of_lk();
  if (key == "alpha2") return alpha2_kl();
  if (std::regex_match(key, m, one)) {
    int n = std::stoi(m[2]);
    return m[1] == "c" ? conway_coefficient_kl(n) : mho_coefficient(n);
  }
  if (std::regex_match(key, m, two)) {
    int k = std::stoi(m[2]), i = std::stoi(m[3]);
    return m[1] == "p" ? homfly_exp_coefficient(k, i) : kauffman_exp_coefficient(k, i);
  }
  throw ValidationError("unknown invariant key '" + key + "'");
}

}  // namespace linkinv
