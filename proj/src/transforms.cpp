#include "linkinv/transforms.hpp"

#include "linkinv/skein.hpp"

#include <stdexcept>

namespace linkinv {

namespace {

VariableList z_vars(int n) { return indexed_variables("z", static_cast<std::size_t>(n)); }
VariableList x_vars(int n) { return indexed_variables("x", static_cast<std::size_t>(n)); }

/// Sum over subsets S of {m_S} * poly_S, with {m_empty} = {1}.
using BraceSum = std::map<std::vector<int>, LaurentPolynomial>;

void accumulate(BraceSum& acc, const BraceSum& r, const LaurentPolynomial& factor) {
  for (const auto& [s, p] : r) {
    auto it = acc.find(s);
    if (it == acc.end())
      acc.emplace(s, factor * p);
    else
      it->second += factor * p;
  }
}

class BraceReducer {
 public:
  explicit BraceReducer(int n) : n_(n), zv_(z_vars(n)) {}

  const BraceSum& reduce(const Exponent& p) {
    auto it = memo_.find(p);
    if (it != memo_.end()) return it->second;
    BraceSum r = compute(p);
    return memo_.emplace(p, std::move(r)).first->second;
  }

 private:
  LaurentPolynomial z(std::size_t i) const { return LaurentPolynomial::variable(zv_, i); }
  LaurentPolynomial constant(const Rational& c) const { return LaurentPolynomial::constant(zv_, c); }

  static Exponent with(Exponent p, std::size_t i, int v) {
    p[i] = v;
    return p;
  }

  BraceSum compute(const Exponent& p) {
    BraceSum out;
    std::size_t n = static_cast<std::size_t>(n_);
    // {x_i M} = {x_i^{-1} M} + {x_i}{M} lowers |p_i| until it is at most 1.
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] >= 2) {
        accumulate(out, reduce(with(p, i, p[i] - 2)), constant(1));
        accumulate(out, reduce(with(p, i, p[i] - 1)), z(i));
        return out;
      }
      if (p[i] <= -2) {
        accumulate(out, reduce(with(p, i, p[i] + 2)), constant(1));
        accumulate(out, reduce(with(p, i, p[i] + 1)), -z(i));
        return out;
      }
    }
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i)
      if (p[i] != 0) support.push_back(i);
    std::size_t k = support.size();
    if (k == 0) {
      out.emplace(std::vector<int>{}, constant(1));
      return out;
    }
    if (p[support[0]] < 0) {
      accumulate(out, reduce(-p), constant(k % 2 == 0 ? 1 : -1));
      return out;
    }
    for (std::size_t j = 1; j < k; ++j) {
      std::size_t t = support[j];
      int want = j % 2 == 0 ? 1 : -1;
      if (p[t] == want) continue;
      accumulate(out, reduce(with(p, t, want)), constant(1));
      accumulate(out, reduce(with(p, t, 0)), p[t] > 0 ? z(t) : -z(t));
      return out;
    }
    if (k % 2 == 0) {
      std::vector<int> s;
      for (std::size_t t : support) s.push_back(static_cast<int>(t) + 1);
      out.emplace(std::move(s), constant(1));
      return out;
    }
    // Odd alternating word: 2{u_T} = sum_j (-1)^{j+1} {x_{t_j}} {m_{T - t_j}}.
    for (std::size_t j = 0; j < k; ++j) {
      Exponent q(n);
      int sign = 1;
      for (std::size_t l = 0; l < k; ++l) {
        if (l == j) continue;
        q[support[l]] = sign;
        sign = -sign;
      }
      LaurentPolynomial f = z(support[j]) * Rational(1, 2);
      accumulate(out, reduce(q), j % 2 == 0 ? f : -f);
    }
    return out;
  }

  int n_;
  VariableList zv_;
  std::map<Exponent, BraceSum> memo_;
};

Rational coefficient_at(const LaurentPolynomial& f, const std::vector<int>& idx) {
  Exponent e(f.num_variables());
  for (std::size_t i = 0; i < idx.size() && i < e.size(); ++i) e[i] = idx[i];
  return f.coefficient(e);
}

LaurentPolynomial rename_single(const LaurentPolynomial& f, const std::string& name) {
  return f.map_exponents({name}, [](const Exponent& e) { return e; });
}

}  // namespace

std::string to_string(const PoleSeries& s) {
  std::string body = to_string(s.series);
  if (!s.pole) return body;
  return "(" + body + ") / " + (s.series.variables().empty() ? "z" : s.series.variables()[0]);
}

PoleSeries mho(const PotentialFunction& omega, int cap, bool plus_root) {
  if (cap < 0) throw std::domain_error("series cap must be non-negative");
  int n = omega.num_colors;
  VariableList zv = z_vars(n);
  PoleSeries out{TruncatedSeries(zv, cap), omega.knot_denominator};
  if (omega.value.is_zero()) return out;
  std::vector<TruncatedSeries> pos, neg;
  for (const auto& name : zv) {
    auto [x, xinv] = x_of_z(cap, name, plus_root);
    pos.push_back(x);
    neg.push_back(xinv);
  }
  out.series = substitute_series(omega.value.embed(x_vars(n)), pos, neg, cap).embed(zv);
  return out;
}

LaurentPolynomial Decomposition::part(const std::vector<int>& subset) const {
  auto it = parts.find(subset);
  return it == parts.end() ? LaurentPolynomial(z_vars(n)) : it->second;
}

Decomposition decompose(const LaurentPolynomial& omega, int n) {
  VariableList xv = x_vars(n);
  LaurentPolynomial f = omega.is_zero() ? LaurentPolynomial(xv) : omega.embed(xv);
  if (!(bar_substitute(f) == f))
    throw DomainError("decompose: input is not invariant under x_i -> -1/x_i");
  BraceReducer reducer(n);
  BraceSum total;
  // f is bar-invariant, so f = (1/2) sum_p A_p {x^p}.
  for (const auto& [e, c] : f.terms())
    accumulate(total, reducer.reduce(e), LaurentPolynomial::constant(z_vars(n), c / 2));
  Decomposition dec;
  dec.n = n;
  for (auto& [s, p] : total)
    if (!p.is_zero()) dec.parts.emplace(s, p.embed(z_vars(n)));
  return dec;
}

Decomposition decompose(const PotentialFunction& omega) {
  if (omega.knot_denominator) throw DomainError("decompose needs a link with at least two components");
  return decompose(omega.value, omega.num_colors);
}

LaurentPolynomial alternating_monomial(const std::vector<int>& subset, int n) {
  Exponent e(static_cast<std::size_t>(n));
  int sign = 1;
  for (int i : subset) {
    e[static_cast<std::size_t>(i - 1)] = sign;
    sign = -sign;
  }
  return LaurentPolynomial::monomial(x_vars(n), e);
}

LaurentPolynomial reconstruct(const Decomposition& dec) {
  VariableList xv = x_vars(dec.n);
  std::vector<LaurentPolynomial> images;
  for (std::size_t i = 0; i < xv.size(); ++i) images.push_back(brace_variable(xv, i));
  LaurentPolynomial out(xv);
  for (const auto& [s, p] : dec.parts) {
    if (p.is_zero()) continue;
    out += brace(alternating_monomial(s, dec.n)) * p.embed(z_vars(dec.n)).compose(images);
  }
  return out.embed(xv);
}

LaurentPolynomial nabla_bold(const Decomposition& dec) {
  LaurentPolynomial out(z_vars(dec.n));
  for (const auto& [s, p] : dec.parts) out += p;
  return (out * Rational(2)).embed(z_vars(dec.n));
}

std::vector<int> parity_signature(const LinkDiagram& d) {
  auto lk = linking_matrix(d);
  std::vector<int> par(d.num_colors(), 0);
  for (int a = 0; a < d.num_components(); ++a) {
    int ca = d.components()[a].color;
    int v = 1;
    for (int b = 0; b < d.num_components(); ++b)
      if (d.components()[b].color != ca) v += lk[a][b];
    par[ca - 1] += v;
  }
  for (int& p : par) p = ((p % 2) + 2) % 2;
  return par;
}

LaurentPolynomial omega_from_nbl(const LaurentPolynomial& nbl, const std::vector<int>& parities,
                                 int num_components) {
  int n = static_cast<int>(parities.size());
  Decomposition dec;
  dec.n = n;
  if (nbl.is_zero()) return reconstruct(dec);
  LaurentPolynomial aligned = nbl.embed(z_vars(n));
  for (const auto& [e, c] : aligned.terms()) {
    if (((e.total_degree() - num_components) % 2 + 2) % 2 != 0)
      throw DomainError("nabla-bold term has total degree of the wrong parity");
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (((e[i] - parities[i]) % 2 + 2) % 2 != 0) s.push_back(i + 1);
    if (s.size() % 2 != 0)
      throw DomainError("nabla-bold term matches no even subset of colors");
    auto it = dec.parts.try_emplace(s, LaurentPolynomial(z_vars(n))).first;
    it->second.add_term(e, c / 2);
  }
  return reconstruct(dec);
}

PoleSeries nabla_bold_series(const LinkDiagram& d, int cap) {
  if (d.num_components() == 1)
    return {TruncatedSeries::from_polynomial(conway(d), cap), true};
  LaurentPolynomial nb = nabla_bold(decompose(potential_function(d)));
  return {TruncatedSeries::from_polynomial(nb, cap), false};
}

std::vector<LaurentPolynomial> component_conways(const LinkDiagram& d) {
  std::vector<LaurentPolynomial> out;
  for (int c = 0; c < d.num_components(); ++c) out.push_back(conway(restrict_components(d, {c})));
  return out;
}

TruncatedSeries starred(const TruncatedSeries& numerator, const LinkDiagram& d) {
  const VariableList& vars = numerator.variables();
  TruncatedSeries denom = TruncatedSeries::constant(vars, numerator.cap(), 1);
  auto knots = component_conways(d);
  for (int c = 0; c < d.num_components(); ++c) {
    std::size_t slot = vars.size() == 1 ? 0 : static_cast<std::size_t>(d.components()[c].color - 1);
    if (slot >= vars.size()) throw VariableMismatch("starred: numerator lacks a color variable");
    LaurentPolynomial k = rename_single(knots[c], vars[slot]).embed(vars);
    denom = denom * TruncatedSeries::from_polynomial(k, numerator.cap());
  }
  return numerator * series_invert(denom);
}

PoleSeries starred(const PoleSeries& numerator, const LinkDiagram& d) {
  return {starred(numerator.series, d), numerator.pole};
}

TruncatedSeries conway_star(const LinkDiagram& d, int cap) {
  return starred(TruncatedSeries::from_polynomial(conway(d), cap), d);
}

PoleSeries mho_star(const LinkDiagram& d, int cap) {
  return starred(mho(potential_function(d), cap), d);
}

PoleSeries nabla_bold_star(const LinkDiagram& d, int cap) {
  return starred(nabla_bold_series(d, cap), d);
}

std::string to_string(SeriesSource s) {
  switch (s) {
    case SeriesSource::Mho:
      return "mho";
    case SeriesSource::MhoStar:
      return "mho*";
    case SeriesSource::NablaBoldStar:
      return "nabla-bold*";
    case SeriesSource::ConwayStar:
      return "conway*";
    case SeriesSource::Traldi:
      return "traldi";
    case SeriesSource::HomflyExp:
      return "homfly-exp";
    case SeriesSource::KauffmanExp:
      return "kauffman-exp";
  }
  return "unknown";
}

Rational CoefficientTable::at(const std::vector<int>& index) const {
  auto it = entries.find(index);
  return it == entries.end() ? Rational(0) : it->second;
}

const CoefficientTable& CoefficientTable::require(SeriesSource expected) const {
  if (source != expected)
    throw std::logic_error("coefficient table from " + to_string(source) + " used as " +
                           to_string(expected));
  return *this;
}

CoefficientTable table_of(const TruncatedSeries& s, SeriesSource source) {
  CoefficientTable t;
  t.source = source;
  t.cap = s.cap();
  for (const auto& [e, c] : s.terms()) {
    std::vector<int> idx(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) idx[i] = e[i];
    t.entries.emplace(std::move(idx), c);
  }
  return t;
}

CoefficientTable table_of(const HSeries& s, SeriesSource source) {
  CoefficientTable t;
  t.source = source;
  t.cap = s.cap();
  for (int k = 0; k <= s.cap(); ++k) {
    if (s[k].is_zero()) continue;
    LaurentPolynomial row = s[k].embed({"c"});
    for (const auto& [e, c] : row.terms()) t.entries.emplace(std::vector<int>{k, e[0]}, c);
  }
  return t;
}

namespace {

/// f(e^{(a c + b) h}, e^{h/2} - e^{-h/2}) in Q[c][[h]].
HSeries exp_substitute(const LaurentPolynomial& f, const Rational& a, const Rational& b, int cap) {
  if (f.is_zero()) return HSeries(cap);
  LaurentPolynomial g = f.embed({"x", "y"});
  int shift = std::max(0, -g.min_degree(1));
  int work = cap + shift + 1;
  HSeries y = exp_series(0, Rational(1, 2), work) - exp_series(0, Rational(-1, 2), work);
  std::vector<HSeries> ypow{HSeries::constant(work, 1)};
  HSeries r(work);
  for (const auto& [e, c] : g.terms()) {
    std::size_t k = static_cast<std::size_t>(e[1] + shift);
    while (ypow.size() <= k) ypow.push_back(ypow.back() * y);
    HSeries term = exp_series(a * e[0], b * e[0], work) * ypow[k];
    r += term * LaurentPolynomial::constant({"c"}, c);
  }
  HSeries out = r.shift_down(shift);
  if (shift > 0) {
    HSeries uinv = hseries_invert(y.shift_down(1));
    for (int i = 0; i < shift; ++i) out = out * uinv;
  }
  return out.truncated(cap);
}

HSeries starred_h(const LinkDiagram& d, int cap,
                  LaurentPolynomial (*poly)(const LinkDiagram&, const SkeinOptions&),
                  HSeries (*subst)(const LaurentPolynomial&, int)) {
  HSeries out = subst(poly(d, {}), cap);
  for (int c = 0; c < d.num_components(); ++c)
    out = out * hseries_invert(subst(poly(restrict_components(d, {c}), {}), cap));
  return out;
}

}  // namespace

HSeries homfly_substitute(const LaurentPolynomial& h_poly, int cap) {
  return exp_substitute(h_poly, Rational(1, 2), 0, cap);
}

HSeries kauffman_substitute(const LaurentPolynomial& f_poly, int cap) {
  return exp_substitute(f_poly, Rational(1, 2), Rational(-1, 2), cap);
}

CoefficientTable exp_expand_homfly(const LaurentPolynomial& h_poly, int cap) {
  return table_of(homfly_substitute(h_poly, cap), SeriesSource::HomflyExp);
}

CoefficientTable exp_expand_kauffman(const LaurentPolynomial& f_poly, int cap) {
  return table_of(kauffman_substitute(f_poly, cap), SeriesSource::KauffmanExp);
}

HSeries homfly_star(const LinkDiagram& d, int cap) {
  return starred_h(d, cap, &homfly, &homfly_substitute);
}

HSeries kauffman_star(const LinkDiagram& d, int cap) {
  return starred_h(d, cap, &kauffman_f, &kauffman_substitute);
}

CoefficientTable traldi_expand(const PotentialFunction& omega, int lk, int cap) {
  if (omega.num_colors != 2 || omega.num_components != 2)
    throw DomainError("Traldi expansion needs a two-component link with two colors");
  VariableList yv = {"y1", "y2"};
  CoefficientTable t;
  t.source = SeriesSource::Traldi;
  t.cap = cap;
  if (omega.value.is_zero()) return t;
  int lambda = lk % 2 != 0 ? 0 : 1;
  LaurentPolynomial f = omega.value.embed(x_vars(2)).shifted(Exponent{-lambda, -lambda});
  LaurentPolynomial half = f.map_exponents(x_vars(2), [](const Exponent& e) {
    if (e[0] % 2 != 0 || e[1] % 2 != 0)
      throw DomainError("Traldi expansion: odd exponent after the lambda shift");
    return Exponent{e[0] / 2, e[1] / 2};
  });
  std::vector<TruncatedSeries> pos, neg;
  for (const auto& y : yv) {
    pos.push_back(TruncatedSeries::constant({y}, cap, 1) + TruncatedSeries::variable({y}, cap, 0));
    neg.push_back(binomial_series(-1, y, cap));
  }
  return table_of(substitute_series(half, pos, neg, cap).embed(yv), SeriesSource::Traldi);
}

std::vector<std::pair<int, int>> traldi_congruence_failures(const CoefficientTable& traldi,
                                                            const Decomposition& dec) {
  traldi.require(SeriesSource::Traldi);
  LaurentPolynomial p0 = dec.part({}), p12 = dec.part({1, 2});
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= traldi.cap; ++i) {
    for (int j = 0; i + j <= traldi.cap; ++j) {
      if ((i + j) % 2 != 0) continue;
      Integer g = 0;
      for (int k = 0; k <= i; ++k)
        for (int l = 0; l <= j; ++l)
          if (k != i || l != j) g = gcd(g, traldi.at({k, l}).get_num());
      Rational diff = traldi.at({i, j}) - 2 * (coefficient_at(p0, {i, j}) + coefficient_at(p12, {i, j}));
      bool ok = is_integer(diff) && (g == 0 ? diff == 0 : mod_floor(diff.get_num(), g) == 0);
      if (!ok) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace linkinv
