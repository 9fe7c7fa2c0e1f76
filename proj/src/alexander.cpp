#include "linkinv/alexander.hpp"

#include "linkinv/skein.hpp"

#include <numeric>

namespace linkinv {

namespace {

int find_root(std::vector<int>& parent, int a) {
  while (parent[a] != a) a = parent[a] = parent[parent[a]];
  return a;
}

LaurentPolynomial x_minus_inverse(const VariableList& vars, std::size_t i) {
  return brace_variable(vars, i);
}

/// Positional renaming of variables; exponent vectors are kept as they are.
LaurentPolynomial rename(const LaurentPolynomial& f, const VariableList& target) {
  return f.map_exponents(target, [](const Exponent& e) { return e; });
}

/// Moves exponents of variable j of `f` to slot map[j] of `target`.
LaurentPolynomial reindex(const LaurentPolynomial& f, const VariableList& target,
                          const std::vector<int>& map) {
  return f.map_exponents(target, [&](const Exponent& e) {
    Exponent out(target.size());
    for (std::size_t j = 0; j < e.size(); ++j) out[map[j]] += e[j];
    return out;
  });
}

}  // namespace

WirtingerPresentation wirtinger(const LinkDiagram& d) {
  if (d.has_singular())
    throw ValidationError("Wirtinger presentation needs a diagram without double points");
  int arcs = d.num_arcs();
  std::vector<int> parent(arcs);
  std::iota(parent.begin(), parent.end(), 0);
  for (int x = 0; x < d.num_crossings(); ++x) {
    const auto& c = d.crossings()[x];
    int a = find_root(parent, c.arcs[1]), b = find_root(parent, c.arcs[3]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  WirtingerPresentation p;
  p.num_colors = d.num_colors();
  std::vector<int> gen(arcs, -1);
  for (int a = 0; a < arcs; ++a) {
    int r = find_root(parent, a);
    if (gen[r] < 0) {
      gen[r] = static_cast<int>(p.generator_colors.size());
      p.generator_colors.push_back(d.components()[d.component_of_arc(a)].color);
    }
    gen[a] = gen[r];
  }
  for (int x = 0; x < d.num_crossings(); ++x) {
    const auto& c = d.crossings()[x];
    int a = gen[c.arcs[0]], cc = gen[c.arcs[2]], b = gen[c.arcs[1]];
    if (c.sign > 0)
      p.relations.push_back({{cc, 1}, {b, 1}, {a, -1}, {b, -1}});
    else
      p.relations.push_back({{cc, 1}, {b, -1}, {a, -1}, {b, 1}});
  }
  return p;
}

VariableList alexander_variables(int num_colors) {
  return indexed_variables("t", static_cast<std::size_t>(num_colors));
}

PolyMatrix fox_matrix(const WirtingerPresentation& p) {
  VariableList vars = alexander_variables(p.num_colors);
  std::size_t gens = p.generator_colors.size();
  PolyMatrix m(p.relations.size(), std::vector<LaurentPolynomial>(gens, LaurentPolynomial(vars)));
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    Exponent prefix(vars.size());
    for (auto [g, e] : p.relations[r]) {
      std::size_t col = static_cast<std::size_t>(p.generator_colors[g] - 1);
      if (e > 0) {
        m[r][g].add_term(prefix, 1);
        prefix[col] += 1;
      } else {
        prefix[col] -= 1;
        m[r][g].add_term(prefix, -1);
      }
    }
  }
  return m;
}

LaurentPolynomial determinant(PolyMatrix m, const VariableList& vars) {
  std::size_t n = m.size();
  LaurentPolynomial one = LaurentPolynomial::constant(vars, 1);
  if (n == 0) return one;
  LaurentPolynomial prev = one;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return LaurentPolynomial(vars);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPolynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw DomainError("fraction-free elimination lost exactness");
        m[i][j] = *q;
      }
      m[i][k] = LaurentPolynomial(vars);
    }
    prev = m[k][k];
  }
  LaurentPolynomial det = m[n - 1][n - 1];
  return sign > 0 ? det : -det;
}

LaurentPolynomial alexander_poly(const LinkDiagram& d, bool alternate) {
  VariableList vars = alexander_variables(d.num_colors());
  LaurentPolynomial zero(vars), one = LaurentPolynomial::constant(vars, 1);
  int m = d.num_components();
  if (d.num_crossings() == 0) return m == 1 ? one : zero;
  if (is_split(d)) return zero;
  WirtingerPresentation p = wirtinger(d);
  // A component that never passes under can be lifted off the rest.
  if (p.generator_colors.size() != p.relations.size()) return zero;
  PolyMatrix full = fox_matrix(p);
  std::size_t n = full.size();
  std::size_t skip = alternate ? 0 : n - 1;
  PolyMatrix minor;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == skip) continue;
    std::vector<LaurentPolynomial> row;
    for (std::size_t c = 0; c < n; ++c)
      if (c != skip) row.push_back(full[r][c]);
    minor.push_back(std::move(row));
  }
  LaurentPolynomial det = determinant(std::move(minor), vars);
  if (m == 1) return det;
  std::size_t color = static_cast<std::size_t>(p.generator_colors[skip] - 1);
  auto q = divide_exact(det, LaurentPolynomial::variable(vars, color) - one);
  if (!q) throw DomainError("Alexander minor is not divisible by t - 1");
  return *q;
}

std::string to_string(SignProvenance s) {
  switch (s) {
    case SignProvenance::ViaConway:
      return "via-conway";
    case SignProvenance::ViaSublink:
      return "via-sublink";
    case SignProvenance::Ambiguous:
      return "ambiguous";
  }
  return "ambiguous";
}

LaurentPolynomial monochromatic_numerator(const PotentialFunction& omega) {
  VariableList x = {"x"};
  LaurentPolynomial mono = omega.value.is_zero() ? LaurentPolynomial(x)
                                                 : omega.value.identify_variables("x");
  if (omega.knot_denominator) return mono;
  return x_minus_inverse(x, 0) * mono;
}

LaurentPolynomial deletion_lhs(const PotentialFunction& omega, int color) {
  VariableList target = indexed_variables("x", static_cast<std::size_t>(omega.num_colors - 1));
  if (omega.value.is_zero()) return LaurentPolynomial(target);
  VariableList full = indexed_variables("x", static_cast<std::size_t>(omega.num_colors));
  return rename(omega.value.embed(full).evaluate_at_one(static_cast<std::size_t>(color - 1)),
                target);
}

PotentialFunction normalize_potential(
    const LaurentPolynomial& delta, int num_components, int num_colors,
    const LaurentPolynomial& conway_poly,
    const std::function<std::vector<DeletionWitness>()>& fallback) {
  VariableList tv = alexander_variables(num_colors);
  VariableList xv = indexed_variables("x", static_cast<std::size_t>(num_colors));
  PotentialFunction out;
  out.num_components = num_components;
  out.num_colors = num_colors;
  out.knot_denominator = num_components == 1;
  out.lambda.assign(num_colors, 0);
  out.value = LaurentPolynomial(xv);
  if (delta.is_zero()) return out;

  LaurentPolynomial p = delta.embed(tv).map_exponents(xv, [](const Exponent& e) {
    Exponent o = e;
    for (std::size_t i = 0; i < o.size(); ++i) o[i] *= 2;
    return o;
  });
  Exponent shift(xv.size());
  for (std::size_t i = 0; i < xv.size(); ++i) {
    out.lambda[i] = -(p.min_degree(i) + p.max_degree(i)) / 2;
    shift[i] = out.lambda[i];
  }
  LaurentPolynomial q = p.shifted(shift);
  int parity = num_components == 1 ? 1 : (num_components % 2 == 0 ? 1 : -1);
  if (!(invert_variables(q) == q * Rational(parity)))
    throw DomainError("no symmetrizing shift for the Alexander polynomial");

  out.value = q;
  LaurentPolynomial lhs = monochromatic_numerator(out);
  LaurentPolynomial z_image = x_minus_inverse({"x"}, 0);
  LaurentPolynomial rhs = conway_poly.is_zero() ? LaurentPolynomial(VariableList{"x"})
                                                : conway_poly.compose({z_image});
  if (!lhs.is_zero()) {
    if (lhs == rhs) return out;
    if (lhs == -rhs) {
      out.value = -q;
      return out;
    }
    throw DomainError("potential function disagrees with the Conway polynomial: " +
                      to_string(lhs) + " vs " + to_string(rhs));
  }
  if (!rhs.is_zero())
    throw DomainError("potential function vanishes on the diagonal but Conway does not");
  if (fallback) {
    for (const DeletionWitness& w : fallback()) {
      if (w.expected.is_zero()) continue;
      LaurentPolynomial l = deletion_lhs(out, w.color);
      if (l.is_zero()) continue;
      out.sign = SignProvenance::ViaSublink;
      if (l == w.expected) return out;
      if (l == -w.expected) {
        out.value = -q;
        return out;
      }
      throw DomainError("potential function disagrees with the deletion formula");
    }
  }
  out.sign = SignProvenance::Ambiguous;
  return out;
}

std::optional<LaurentPolynomial> deletion_rhs(const LinkDiagram& d, int component) {
  int color = d.components().at(component).color;
  for (int c = 0; c < d.num_components(); ++c)
    if (c != component && d.components()[c].color == color)
      throw ValidationError("component " + std::to_string(component) +
                            " is not alone in its color");
  if (d.num_components() < 2) throw ValidationError("deletion needs at least two components");
  LinkDiagram sub = delete_component(d, component);
  PotentialFunction omega = potential_function(sub);
  VariableList vars = indexed_variables("x", static_cast<std::size_t>(sub.num_colors()));
  if (omega.value.is_zero()) return LaurentPolynomial(vars);
  if (omega.sign == SignProvenance::Ambiguous) return std::nullopt;
  auto lk = linking_matrix(d);
  Exponent l(vars.size());
  for (int c = 0; c < sub.num_components(); ++c) {
    int orig = c < component ? c : c + 1;
    l[static_cast<std::size_t>(sub.components()[c].color - 1)] += lk[component][orig];
  }
  LaurentPolynomial factor =
      LaurentPolynomial::monomial(vars, l) - LaurentPolynomial::monomial(vars, -l);
  if (!omega.knot_denominator) return factor * omega.value;
  auto q = divide_exact(factor, x_minus_inverse(vars, 0));
  if (!q) throw DomainError("x^l - x^-l is not divisible by x - x^-1");
  return *q * omega.value;
}

PotentialFunction potential_function(const LinkDiagram& d) {
  LaurentPolynomial delta = alexander_poly(d);
  LaurentPolynomial nabla = conway(d);
  auto fallback = [&d]() {
    std::vector<DeletionWitness> out;
    if (d.num_components() < 2) return out;
    for (int c = 0; c < d.num_components(); ++c) {
      int color = d.components()[c].color;
      int same = 0;
      for (const auto& comp : d.components()) same += comp.color == color;
      if (same != 1) continue;
      if (auto rhs = deletion_rhs(d, c)) out.push_back({color, *rhs});
    }
    return out;
  };
  return normalize_potential(delta, d.num_components(), d.num_colors(), nabla, fallback);
}

bool deletion_check(const PotentialFunction& omega, const LinkDiagram& d, int component) {
  auto rhs = deletion_rhs(d, component);
  if (!rhs) return false;
  return deletion_lhs(omega, d.components()[component].color) == *rhs;
}

bool connected_sum_check(const LinkDiagram& a, const LinkDiagram& b, int ca, int cb) {
  LinkDiagram s = connected_sum(a, b, ca, cb);
  PotentialFunction os = potential_function(s), oa = potential_function(a),
                    ob = potential_function(b);
  VariableList sv = indexed_variables("x", static_cast<std::size_t>(s.num_colors()));
  int ma = a.num_components();
  std::vector<int> map_a(a.num_colors()), map_b(b.num_colors());
  for (int c = 0; c < ma; ++c)
    map_a[a.components()[c].color - 1] = s.components()[c].color - 1;
  for (int c = 0; c < b.num_components(); ++c) {
    int idx = c == cb ? ca : ma + (c < cb ? c : c - 1);
    map_b[b.components()[c].color - 1] = s.components()[idx].color - 1;
  }
  std::size_t merged = static_cast<std::size_t>(s.components()[ca].color - 1);
  LaurentPolynomial br = x_minus_inverse(sv, merged);
  LaurentPolynomial na = reindex(oa.value.embed(indexed_variables("x", map_a.size())), sv, map_a);
  LaurentPolynomial nb = reindex(ob.value.embed(indexed_variables("x", map_b.size())), sv, map_b);
  LaurentPolynomial lhs = os.value.embed(sv);
  for (int k = 0; k < oa.knot_denominator + ob.knot_denominator; ++k) lhs = lhs * br;
  LaurentPolynomial rhs = br * na * nb;
  if (os.knot_denominator) rhs = rhs * br;
  return lhs == rhs;
}

}  // namespace linkinv
