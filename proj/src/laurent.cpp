#include "linkinv/laurent.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace linkinv {

// ---------------------------------------------------------------- Exponent

Exponent::Exponent(std::size_t n) {
  if (n > kMaxVariables) throw std::length_error("too many variables");
  size_ = static_cast<std::uint8_t>(n);
}

Exponent::Exponent(std::initializer_list<int> values) : Exponent(values.size()) {
  std::size_t i = 0;
  for (int v : values) e_[i++] = v;
}

int Exponent::total_degree() const {
  int s = 0;
  for (std::size_t i = 0; i < size_; ++i) s += e_[i];
  return s;
}

bool Exponent::is_zero() const {
  for (std::size_t i = 0; i < size_; ++i)
    if (e_[i] != 0) return false;
  return true;
}

bool Exponent::is_nonnegative() const {
  for (std::size_t i = 0; i < size_; ++i)
    if (e_[i] < 0) return false;
  return true;
}

Exponent Exponent::operator+(const Exponent& o) const {
  Exponent r(*this);
  for (std::size_t i = 0; i < size_; ++i) r.e_[i] += o.e_[i];
  return r;
}

Exponent Exponent::operator-(const Exponent& o) const {
  Exponent r(*this);
  for (std::size_t i = 0; i < size_; ++i) r.e_[i] -= o.e_[i];
  return r;
}

Exponent Exponent::operator-() const {
  Exponent r(*this);
  for (std::size_t i = 0; i < size_; ++i) r.e_[i] = -r.e_[i];
  return r;
}

// ------------------------------------------------------- LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(VariableList vars) : vars_(std::move(vars)) {
  if (vars_.size() > kMaxVariables) throw std::length_error("too many variables");
}

LaurentPolynomial LaurentPolynomial::constant(VariableList vars, const Rational& c) {
  LaurentPolynomial p(std::move(vars));
  p.add_term(Exponent(p.num_variables()), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(VariableList vars, const Exponent& e,
                                              const Rational& c) {
  LaurentPolynomial p(std::move(vars));
  if (e.size() != p.num_variables()) throw VariableMismatch("exponent length mismatch");
  p.add_term(e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(VariableList vars, std::size_t index,
                                              int power) {
  Exponent e(vars.size());
  e[index] = power;
  return monomial(std::move(vars), e);
}

bool LaurentPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Rational LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int LaurentPolynomial::min_degree(std::size_t i) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[i] < m) m = e[i];
    first = false;
  }
  return m;
}

int LaurentPolynomial::max_degree(std::size_t i) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[i] > m) m = e[i];
    first = false;
  }
  return m;
}

bool LaurentPolynomial::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return is_integer(t.second); });
}

bool LaurentPolynomial::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.is_nonnegative(); });
}

LaurentPolynomial LaurentPolynomial::embed(const VariableList& target) const {
  if (target == vars_) return *this;
  std::vector<int> where(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(target.begin(), target.end(), vars_[i]);
    if (it != target.end()) where[i] = static_cast<int>(it - target.begin());
  }
  LaurentPolynomial r(target);
  for (const auto& [e, c] : terms_) {
    Exponent f(target.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (where[i] >= 0) {
        f[where[i]] = e[i];
      } else if (e[i] != 0) {
        throw VariableMismatch("variable '" + vars_[i] + "' missing from target list");
      }
    }
    r.add_term(f, c);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::map_exponents(
    const VariableList& target, const std::function<Exponent(const Exponent&)>& f) const {
  LaurentPolynomial r(target);
  for (const auto& [e, c] : terms_) r.add_term(f(e), c);
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponent& shift) const {
  LaurentPolynomial r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + shift, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::evaluate_at_one(std::size_t i) const {
  VariableList target = vars_;
  target.erase(target.begin() + static_cast<long>(i));
  return map_exponents(target, [&](const Exponent& e) {
    Exponent f(target.size());
    for (std::size_t k = 0, j = 0; k < e.size(); ++k)
      if (k != i) f[j++] = e[k];
    return f;
  });
}

LaurentPolynomial LaurentPolynomial::identify_variables(const std::string& name) const {
  return map_exponents({name}, [](const Exponent& e) { return Exponent{e.total_degree()}; });
}

LaurentPolynomial LaurentPolynomial::compose(
    const std::vector<LaurentPolynomial>& images) const {
  if (images.size() != vars_.size()) throw VariableMismatch("compose arity mismatch");
  VariableList target;
  for (const auto& im : images) target = unify_variables(target, im.variables());
  std::vector<std::vector<LaurentPolynomial>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    powers[i].push_back(LaurentPolynomial::constant(target, 1));
  LaurentPolynomial r(target);
  for (const auto& [e, c] : terms_) {
    if (!e.is_nonnegative()) throw std::domain_error("compose needs a polynomial");
    LaurentPolynomial t = LaurentPolynomial::constant(target, c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      auto& pw = powers[i];
      while (pw.size() <= static_cast<std::size_t>(e[i]))
        pw.push_back(pw.back() * images[i].embed(target));
      if (e[i] > 0) t = t * pw[e[i]];
    }
    r += t;
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial result = constant(vars_, 1);
  LaurentPolynomial base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  if (o.vars_ != vars_) {
    VariableList u = unify_variables(vars_, o.vars_);
    if (u != vars_) *this = embed(u);
    LaurentPolynomial b = o.embed(u);
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  return *this += -o;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
  a += b;
  return a;
}

LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
  a -= b;
  return a;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.vars_ != b.vars_) {
    VariableList u = unify_variables(a.vars_, b.vars_);
    return a.embed(u) * b.embed(u);
  }
  LaurentPolynomial r(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) {
  a *= c;
  return a;
}

LaurentPolynomial operator*(const Rational& c, LaurentPolynomial a) {
  a *= c;
  return a;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  try {
    VariableList u = unify_variables(a.vars_, b.vars_);
    return a.embed(u).terms_ == b.embed(u).terms_;
  } catch (const VariableMismatch&) {
    return false;
  }
}

// --------------------------------------------------------------- free fns

VariableList unify_variables(const VariableList& a, const VariableList& b) {
  if (a.empty()) return b;
  if (b.empty() || a == b) return a;
  std::set<std::string> s(a.begin(), a.end());
  s.insert(b.begin(), b.end());
  if (s.size() > kMaxVariables) throw VariableMismatch("too many variables after alignment");
  return VariableList(s.begin(), s.end());
}

LaurentPolynomial bar_substitute(const LaurentPolynomial& f) {
  LaurentPolynomial r(f.variables());
  for (const auto& [e, c] : f.terms())
    r.add_term(-e, (e.total_degree() % 2 == 0) ? c : Rational(-c));
  return r;
}

LaurentPolynomial brace(const LaurentPolynomial& f) { return f + bar_substitute(f); }

LaurentPolynomial bracket(const LaurentPolynomial& f) { return f - bar_substitute(f); }

LaurentPolynomial invert_variables(const LaurentPolynomial& f) {
  LaurentPolynomial r(f.variables());
  for (const auto& [e, c] : f.terms()) r.add_term(-e, c);
  return r;
}

LaurentPolynomial brace_variable(const VariableList& vars, std::size_t i) {
  return LaurentPolynomial::variable(vars, i, 1) - LaurentPolynomial::variable(vars, i, -1);
}

namespace {

Exponent min_exponent(const LaurentPolynomial& f) {
  Exponent m(f.num_variables());
  for (std::size_t i = 0; i < f.num_variables(); ++i) m[i] = f.min_degree(i);
  return m;
}

Exponent max_exponent(const LaurentPolynomial& f) {
  Exponent m(f.num_variables());
  for (std::size_t i = 0; i < f.num_variables(); ++i) m[i] = f.max_degree(i);
  return m;
}

}  // namespace

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& f,
                                              const LaurentPolynomial& g) {
  if (g.is_zero()) return std::nullopt;
  VariableList u = unify_variables(f.variables(), g.variables());
  LaurentPolynomial a = f.embed(u);
  LaurentPolynomial b = g.embed(u);
  if (a.is_zero()) return LaurentPolynomial(u);
  // Strip monomial content so both are polynomials with no variable factor;
  // the quotient of such polynomials, if it exists, is again a polynomial.
  Exponent amin = min_exponent(a), bmin = min_exponent(b);
  a = a.shifted(-amin);
  b = b.shifted(-bmin);
  Exponent bound = max_exponent(a) - max_exponent(b);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (bound[i] < 0) return std::nullopt;
  const auto& [blead, bc] = *b.terms().rbegin();
  LaurentPolynomial q(u);
  while (!a.is_zero()) {
    const auto& [alead, ac] = *a.terms().rbegin();
    Exponent d = alead - blead;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (d[i] < 0 || d[i] > bound[i]) return std::nullopt;
    Rational c = ac / bc;
    q.add_term(d, c);
    a -= LaurentPolynomial::monomial(u, d, c) * b;
  }
  return q.shifted(amin - bmin);
}

std::optional<Rational> proportionality(const LaurentPolynomial& f,
                                        const LaurentPolynomial& g) {
  if (g.is_zero()) return f.is_zero() ? std::optional<Rational>(0) : std::nullopt;
  VariableList u = unify_variables(f.variables(), g.variables());
  LaurentPolynomial a = f.embed(u), b = g.embed(u);
  if (a.size() != b.size() && !a.is_zero()) return std::nullopt;
  if (a.is_zero()) return Rational(0);
  Rational c = a.terms().begin()->second / b.terms().begin()->second;
  if (a == b * c) return c;
  return std::nullopt;
}

std::optional<std::pair<int, Exponent>> unit_ratio(const LaurentPolynomial& f,
                                                   const LaurentPolynomial& g) {
  VariableList u = unify_variables(f.variables(), g.variables());
  LaurentPolynomial a = f.embed(u), b = g.embed(u);
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return std::make_pair(1, Exponent(u.size()));
    return std::nullopt;
  }
  if (a.size() != b.size()) return std::nullopt;
  Exponent shift = a.terms().begin()->first - b.terms().begin()->first;
  Rational c = a.terms().begin()->second / b.terms().begin()->second;
  if (c != 1 && c != -1) return std::nullopt;
  if (a == b.shifted(shift) * c) return std::make_pair(c > 0 ? 1 : -1, shift);
  return std::nullopt;
}

std::string to_string(const LaurentPolynomial& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Exponent, Rational>> terms(f.terms().begin(), f.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = a.first.total_degree(), db = b.first.total_degree();
    if (da != db) return da < db;
    return a.first < b.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string v = f.variables()[i];
      if (e[i] != 1) v += "^" + std::to_string(e[i]);
      factors.push_back(v);
    }
    if (factors.empty()) {
      out << to_string(mag);
      continue;
    }
    if (mag != 1) out << to_string(mag) << "*";
    for (std::size_t k = 0; k < factors.size(); ++k) out << (k ? "*" : "") << factors[k];
  }
  return out.str();
}

VariableList indexed_variables(const std::string& stem, std::size_t n) {
  if (n == 1) return {stem};
  VariableList v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

}  // namespace linkinv
