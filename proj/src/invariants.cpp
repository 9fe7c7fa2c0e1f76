#include "linkinv/invariants.hpp"

#include "linkinv/skein.hpp"

namespace linkinv {

namespace {

Rational z_coefficient(const LaurentPolynomial& f, int k) {
  if (f.is_zero()) return 0;
  return f.embed({"z"}).coefficient(Exponent{k});
}

Rational z_coefficient(const TruncatedSeries& s, int k) {
  if (s.is_zero()) return 0;
  return s.embed({"z"}).coefficient(Exponent{k});
}

int link_lk(const LinkDiagram& d) { return linking_matrix(d)[0][1]; }

bool all_unknotted(const LinkDiagram& d) {
  for (const auto& k : component_conways(d))
    if (!(k == LaurentPolynomial::constant({"z"}, 1))) return false;
  return true;
}

}  // namespace

std::vector<Rational> conway_coeffs(const LinkDiagram& d) {
  LaurentPolynomial nabla = conway(d);
  int shift = d.num_components() - 1;
  std::vector<Rational> c;
  if (nabla.is_zero()) return c;
  LaurentPolynomial f = nabla.embed({"z"});
  for (const auto& [e, v] : f.terms()) {
    int k = e[0] - shift;
    if (k < 0 || k % 2 != 0)
      throw DomainError("Conway polynomial is not of the form z^{m-1} f(z^2)");
    std::size_t idx = static_cast<std::size_t>(k / 2);
    if (c.size() <= idx) c.resize(idx + 1, Rational(0));
    c[idx] = v;
  }
  return c;
}

std::vector<Rational> alpha_coeffs(const LinkDiagram& d, int cap) {
  int shift = d.num_components() - 1;
  TruncatedSeries star = conway_star(d, cap);
  std::vector<Rational> alpha;
  for (int k = 0; shift + 2 * k <= cap; ++k) alpha.push_back(z_coefficient(star, shift + 2 * k));
  // Independent route: alpha_i = c_i - (alpha_{i-1} b_1 + ... + alpha_0 b_i).
  std::vector<Rational> c = conway_coeffs(d);
  LaurentPolynomial prod = LaurentPolynomial::constant({"z"}, 1);
  for (const auto& k : component_conways(d)) prod = prod * k;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    Rational v = i < c.size() ? c[i] : Rational(0);
    for (std::size_t j = 0; j < i; ++j) v -= alpha[j] * z_coefficient(prod, static_cast<int>(2 * (i - j)));
    if (v != alpha[i]) throw DomainError("alpha recursion disagrees with Conway*");
  }
  while (!alpha.empty() && alpha.back() == 0) alpha.pop_back();
  return alpha;
}

LinkDiagram two_colored(const LinkDiagram& d) {
  if (d.num_components() != 2) throw ValidationError("expected a two-component link");
  return d.recolored({1, 2});
}

TwoColorTables two_color_tables(const LinkDiagram& d, int cap) {
  if (d.num_colors() != 2) throw ValidationError("two-color tables need exactly two colors");
  PotentialFunction omega = potential_function(d);
  TwoColorTables t;
  t.c = table_of(mho(omega, cap).series, SeriesSource::Mho);
  t.alpha = table_of(starred(mho(omega, cap), d).series, SeriesSource::MhoStar);
  PoleSeries nb{TruncatedSeries::from_polynomial(nabla_bold(decompose(omega)), cap), false};
  t.delta = table_of(starred(nb, d).series, SeriesSource::NablaBoldStar);
  return t;
}

std::vector<std::string> two_color_violations(const LinkDiagram& d, const TwoColorTables& t) {
  std::vector<std::string> out;
  auto lk = linking_matrix(d);
  const auto& c = t.c.require(SeriesSource::Mho);
  const auto& alpha = t.alpha.require(SeriesSource::MhoStar);
  const auto& delta = t.delta.require(SeriesSource::NablaBoldStar);
  if (d.num_components() == 2) {
    Rational l = lk[0][1];
    if (c.at({0, 0}) != l) out.push_back("c00 = lk");
    if (delta.at({0, 0}) != l) out.push_back("delta00 = lk");
    if (alpha.at({0, 0}) != l) out.push_back("alpha00 = lk");
    int lpar = ((lk[0][1] % 2) + 2) % 2;
    for (const auto& [idx, v] : delta.entries) {
      int i = idx[0], j = idx[1];
      if ((i + j) % 2 != 0 && v != 0) out.push_back("delta" + std::to_string(i) + "," + std::to_string(j) + " = 0");
      // Entries fed by the integral part P_12 only: i, j and lk of one parity.
      if (i % 2 == lpar && j % 2 == lpar) {
        if (!is_integer(v) || mod_floor(v.get_num(), 2) != 0)
          out.push_back("delta" + std::to_string(i) + "," + std::to_string(j) + " even");
      }
      if (!is_integer(v)) out.push_back("delta" + std::to_string(i) + "," + std::to_string(j) + " integral");
    }
    for (const auto& [idx, v] : alpha.entries)
      if ((idx[0] + idx[1]) % 2 != 0 && v != 0)
        out.push_back("alpha" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + " = 0");
  }
  if (d.num_components() == 3) {
    // The color with two components, K1 and K1', against the single K2.
    std::vector<int> by_color[2];
    for (int k = 0; k < 3; ++k) by_color[d.components()[k].color - 1].push_back(k);
    int pair_color = by_color[0].size() == 2 ? 0 : 1;
    const auto& pr = by_color[pair_color];
    int other = by_color[1 - pair_color][0];
    Rational expected = lk[pr[0]][pr[1]] * (lk[pr[0]][other] + lk[pr[1]][other]);
    std::vector<int> idx = pair_color == 0 ? std::vector<int>{1, 0} : std::vector<int>{0, 1};
    if (c.at(idx) != expected) out.push_back("c10 = lk(K1,K1')(lk(K1,K2)+lk(K1',K2))");
  }
  return out;
}

Rational cochran_beta(const LinkDiagram& d, int k) {
  LinkDiagram l = two_colored(d);
  if (link_lk(l) != 0)
    throw UndefinedInvariant("Cochran's invariant is only defined for linking number 0");
  if (k < 1) throw ValidationError("Cochran's invariants are indexed from 1");
  CoefficientTable delta =
      table_of(nabla_bold_star(l, std::max(kDefaultCap, 2 * k)).series, SeriesSource::NablaBoldStar);
  Rational v = delta.at({1, 2 * k - 1});
  return k % 2 == 1 ? v : Rational(-v);
}

Rational beta_hat(const LinkDiagram& d, int k) {
  LinkDiagram l = two_colored(d);
  if (k < 1) throw ValidationError("beta-hat is indexed from 1");
  CoefficientTable alpha =
      table_of(mho_star(l, std::max(kDefaultCap, 2 * k)).series, SeriesSource::MhoStar);
  Rational v = alpha.at({1, 2 * k - 1});
  return k % 2 == 1 ? v : Rational(-v);
}

Rational unoriented_sl(const LinkDiagram& d) {
  LinkDiagram l = two_colored(d);
  return table_of(mho(potential_function(l), 2).series, SeriesSource::Mho).at({1, 1});
}

Rational casson_walker_surrogate(const LinkDiagram& d) {
  int lk = link_lk(two_colored(d));
  if (lk == 0) throw UndefinedInvariant("Casson-Walker surrogate needs nonzero linking number");
  return 2 * unoriented_sl(d) / Rational(lk * lk);
}

bool reversal_identity_holds(const LinkDiagram& d) {
  auto a1 = [](const LinkDiagram& l) {
    auto a = alpha_coeffs(l, 3);
    return a.size() > 1 ? a[1] : Rational(0);
  };
  Rational lhs = unoriented_sl(d);
  return 2 * lhs == a1(d) + a1(reverse_component(d, 1));
}

Rational gamma3(const LinkDiagram& d) {
  if (d.num_components() != 3) throw ValidationError("gamma needs a three-component link");
  auto at = [](const std::vector<Rational>& v, std::size_t i) { return i < v.size() ? v[i] : Rational(0); };
  Rational g = at(alpha_coeffs(d, 4), 1);
  std::vector<std::vector<Rational>> sub;
  for (int drop = 2; drop >= 0; --drop) sub.push_back(alpha_coeffs(delete_component(d, drop), 3));
  for (std::size_t a = 0; a < sub.size(); ++a)
    for (std::size_t b = 0; b < sub.size(); ++b)
      if (a != b) g -= at(sub[a], 0) * at(sub[b], 1);
  return g;
}

std::vector<std::pair<int, int>> CongruenceReport::flagged() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : entries)
    if (e.nonzero_residue) out.emplace_back(e.i, e.j);
  return out;
}

CongruenceReport congruence_report(const LinkDiagram& d, int cap) {
  LinkDiagram l = d.num_colors() == 2 ? d : two_colored(d);
  CoefficientTable delta = table_of(nabla_bold_star(l, cap).series, SeriesSource::NablaBoldStar);
  CongruenceReport r;
  r.unknotted_components = all_unknotted(l);
  for (int s = 0; s <= cap; ++s) {
    for (int i = 0; i <= s; ++i) {
      int j = s - i;
      CongruenceEntry e;
      e.i = i;
      e.j = j;
      e.delta = delta.at({i, j});
      if (!is_integer(e.delta)) throw DomainError("nabla-bold* has a non-integer coefficient");
      e.modulus = 0;
      for (int k = 0; k <= i; ++k)
        for (int m = 0; m <= j; ++m)
          if (k + m < i + j) e.modulus = gcd(e.modulus, delta.at({k, m}).get_num());
      e.residue = mod_floor(e.delta.get_num(), e.modulus);
      // delta_00 = lk has no lower coefficients to be congruent to.
      e.nonzero_residue = s > 0 && e.residue != 0;
      r.entries.push_back(e);
    }
  }
  return r;
}

InvariantReport invariant_report(const LinkDiagram& d, int cap) {
  InvariantReport r;
  r.name = d.name();
  r.cap = cap;
  r.components = d.num_components();
  r.colors = d.num_colors();
  r.lk = linking_matrix(d);
  r.conway = conway(d);
  r.omega = potential_function(d);
  r.mho = mho(r.omega, cap);
  r.c = conway_coeffs(d);
  r.alpha = alpha_coeffs(d, cap);
  if (!r.omega.knot_denominator) {
    r.decomposition = decompose(r.omega);
    r.nabla_bold = nabla_bold(*r.decomposition);
  }
  std::optional<LinkDiagram> two;
  if (d.num_colors() == 2)
    two = d;
  else if (d.num_components() == 2)
    two = two_colored(d);
  if (two) {
    r.tables = two_color_tables(*two, cap);
    r.table_violations = two_color_violations(*two, *r.tables);
  }
  if (d.num_components() == 2) {
    int lk = r.lk[0][1];
    for (int k = 1; 2 * k <= cap; ++k) {
      Rational bh = r.tables->alpha.at({1, 2 * k - 1});
      r.beta_hat.push_back(k % 2 == 1 ? bh : Rational(-bh));
      if (lk == 0) {
        Rational b = r.tables->delta.at({1, 2 * k - 1});
        r.beta.push_back(k % 2 == 1 ? b : Rational(-b));
      }
    }
    r.unoriented_sl = r.tables->c.at({1, 1});
    if (lk != 0) r.casson_walker = 2 * *r.unoriented_sl / Rational(lk * lk);
    r.congruences = congruence_report(*two, cap);
  }
  if (d.num_components() == 3) r.gamma = gamma3(d);
  return r;
}

}  // namespace linkinv
