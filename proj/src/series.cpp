#include "linkinv/series.hpp"

#include <algorithm>
#include <sstream>

namespace linkinv {

TruncatedSeries::TruncatedSeries(VariableList vars, int cap)
    : vars_(std::move(vars)), cap_(cap) {
  if (cap_ < 0) throw std::domain_error("series cap must be non-negative");
  if (vars_.size() > kMaxVariables) throw std::length_error("too many variables");
}

TruncatedSeries TruncatedSeries::constant(VariableList vars, int cap, const Rational& c) {
  TruncatedSeries s(std::move(vars), cap);
  s.add_term(Exponent(s.num_variables()), c);
  return s;
}

TruncatedSeries TruncatedSeries::variable(VariableList vars, int cap, std::size_t index) {
  TruncatedSeries s(std::move(vars), cap);
  Exponent e(s.num_variables());
  e[index] = 1;
  s.add_term(e, 1);
  return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const LaurentPolynomial& p, int cap) {
  TruncatedSeries s(p.variables(), cap);
  for (const auto& [e, c] : p.terms()) {
    if (!e.is_nonnegative()) throw std::domain_error("negative exponent in series");
    s.add_term(e, c);
  }
  return s;
}

Rational TruncatedSeries::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::constant_term() const {
  return coefficient(Exponent(vars_.size()));
}

void TruncatedSeries::add_term(const Exponent& e, const Rational& c) {
  if (c == 0 || e.total_degree() > cap_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedSeries TruncatedSeries::embed(const VariableList& target) const {
  if (target == vars_) return *this;
  LaurentPolynomial p(vars_);
  for (const auto& [e, c] : terms_) p.add_term(e, c);
  return from_polynomial(p.embed(target), cap_);
}

TruncatedSeries TruncatedSeries::truncated(int cap) const {
  TruncatedSeries s(vars_, std::min(cap, cap_));
  for (const auto& [e, c] : terms_) s.add_term(e, c);
  return s;
}

LaurentPolynomial TruncatedSeries::to_polynomial() const {
  LaurentPolynomial p(vars_);
  for (const auto& [e, c] : terms_) p.add_term(e, c);
  return p;
}

bool TruncatedSeries::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return is_integer(t.second); });
}

TruncatedSeries TruncatedSeries::scale_variables(const Rational& factor) const {
  TruncatedSeries s(vars_, cap_);
  for (const auto& [e, c] : terms_) {
    Rational f = 1;
    for (int k = 0; k < e.total_degree(); ++k) f *= factor;
    s.add_term(e, c * f);
  }
  return s;
}

TruncatedSeries TruncatedSeries::pow(unsigned k) const {
  TruncatedSeries result = constant(vars_, cap_, 1);
  TruncatedSeries base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  VariableList u = unify_variables(vars_, o.vars_);
  int cap = std::min(cap_, o.cap_);
  if (u != vars_ || cap != cap_) *this = embed(u).truncated(cap);
  const TruncatedSeries& b = (o.vars_ == u) ? o : o.embed(u);
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) { return *this += -o; }

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
  a += b;
  return a;
}

TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
  a -= b;
  return a;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.vars_ != b.vars_) {
    VariableList u = unify_variables(a.vars_, b.vars_);
    return a.embed(u) * b.embed(u);
  }
  TruncatedSeries r(a.vars_, std::min(a.cap_, b.cap_));
  for (const auto& [ea, ca] : a.terms_) {
    int da = ea.total_degree();
    if (da > r.cap_) continue;
    for (const auto& [eb, cb] : b.terms_) {
      if (da + eb.total_degree() > r.cap_) continue;
      r.add_term(ea + eb, ca * cb);
    }
  }
  return r;
}

TruncatedSeries operator*(TruncatedSeries a, const Rational& c) {
  a *= c;
  return a;
}

TruncatedSeries operator*(const Rational& c, TruncatedSeries a) {
  a *= c;
  return a;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  int cap = std::min(a.cap_, b.cap_);
  TruncatedSeries d = a.truncated(cap) - b.truncated(cap);
  return d.is_zero();
}

TruncatedSeries series_invert(const TruncatedSeries& s) {
  Rational c0 = s.constant_term();
  if (c0 == 0) throw std::domain_error("series_invert: zero constant term");
  // 1/s = (1/c0) * sum_k (-r/c0)^k where r = s - c0 has no constant term,
  // so r^k starts in degree k and the sum stops at k = cap.
  TruncatedSeries r = s;
  r.add_term(Exponent(s.num_variables()), -c0);
  TruncatedSeries q = r * Rational(-1 / c0);
  TruncatedSeries term = TruncatedSeries::constant(s.variables(), s.cap(), 1);
  TruncatedSeries sum = term;
  for (int k = 1; k <= s.cap(); ++k) {
    term = term * q;
    if (term.is_zero()) break;
    sum += term;
  }
  return sum * Rational(1 / c0);
}

TruncatedSeries binomial_series(const Rational& alpha, const std::string& var, int cap) {
  TruncatedSeries s({var}, cap);
  Rational coef = 1;
  for (int k = 0; k <= cap; ++k) {
    s.add_term(Exponent{k}, coef);
    coef = coef * (alpha - k) / (k + 1);
  }
  return s;
}

std::pair<TruncatedSeries, TruncatedSeries> x_of_z(int cap, const std::string& var,
                                                   bool plus_root) {
  // sqrt(1 + z^2/4) = sum_k binom(1/2, k) (z^2/4)^k
  TruncatedSeries root({var}, cap);
  Rational coef = 1, quarter_pow = 1;
  for (int k = 0; 2 * k <= cap; ++k) {
    root.add_term(Exponent{2 * k}, coef * quarter_pow);
    coef = coef * (Rational(1, 2) - k) / (k + 1);
    quarter_pow /= 4;
  }
  TruncatedSeries half_z = TruncatedSeries::variable({var}, cap, 0) * Rational(1, 2);
  TruncatedSeries x = plus_root ? half_z + root : half_z - root;
  TruncatedSeries xinv = x - TruncatedSeries::variable({var}, cap, 0);
  return {x, xinv};
}

TruncatedSeries substitute_series(const LaurentPolynomial& f,
                                  const std::vector<TruncatedSeries>& pos,
                                  const std::vector<TruncatedSeries>& neg, int cap) {
  std::size_t n = f.num_variables();
  if (pos.size() != n || neg.size() != n) throw VariableMismatch("substitute arity mismatch");
  VariableList target;
  for (std::size_t i = 0; i < n; ++i) target = unify_variables(target, pos[i].variables());
  std::vector<std::vector<TruncatedSeries>> ppow(n), npow(n);
  auto one = TruncatedSeries::constant(target, cap, 1);
  for (std::size_t i = 0; i < n; ++i) {
    ppow[i].push_back(one);
    npow[i].push_back(one);
  }
  auto power = [&](std::vector<TruncatedSeries>& table, const TruncatedSeries& base,
                   int k) -> const TruncatedSeries& {
    while (static_cast<int>(table.size()) <= k)
      table.push_back(table.back() * base.embed(target).truncated(cap));
    return table[k];
  };
  TruncatedSeries result(target, cap);
  for (const auto& [e, c] : f.terms()) {
    TruncatedSeries t = one * c;
    for (std::size_t i = 0; i < n && !t.is_zero(); ++i) {
      if (e[i] > 0) t = t * power(ppow[i], pos[i], e[i]);
      if (e[i] < 0) t = t * power(npow[i], neg[i], -e[i]);
    }
    result += t;
  }
  return result;
}

std::string to_string(const TruncatedSeries& s) {
  std::string body = to_string(s.to_polynomial());
  return body + " + O(" + std::to_string(s.cap() + 1) + ")";
}

// ----------------------------------------------------------------- HSeries

namespace {
const VariableList kC = {"c"};
}

HSeries::HSeries(int cap) {
  if (cap < 0) throw std::domain_error("series cap must be non-negative");
  coef_.assign(cap + 1, LaurentPolynomial(kC));
}

HSeries HSeries::constant(int cap, const Rational& c) {
  HSeries s(cap);
  s.coef_[0] = LaurentPolynomial::constant(kC, c);
  return s;
}

bool HSeries::is_zero() const {
  return std::all_of(coef_.begin(), coef_.end(), [](const auto& p) { return p.is_zero(); });
}

int HSeries::valuation() const {
  for (int k = 0; k <= cap(); ++k)
    if (!coef_[k].is_zero()) return k;
  return cap() + 1;
}

HSeries HSeries::shift_down(int k) const {
  if (k > cap() + 1) throw std::domain_error("shift beyond cap");
  for (int i = 0; i < k; ++i)
    if (!coef_[i].is_zero()) throw std::domain_error("h-adic division is not exact");
  HSeries s(cap() - k);
  for (int i = k; i <= cap(); ++i) s.coef_[i - k] = coef_[i];
  return s;
}

HSeries HSeries::truncated(int cap) const {
  HSeries s(std::min(cap, this->cap()));
  for (int i = 0; i <= s.cap(); ++i) s.coef_[i] = coef_[i];
  return s;
}

HSeries& HSeries::operator+=(const HSeries& o) {
  if (o.cap() < cap()) *this = truncated(o.cap());
  for (int i = 0; i <= cap(); ++i) coef_[i] += o.coef_[i];
  return *this;
}

HSeries& HSeries::operator-=(const HSeries& o) {
  if (o.cap() < cap()) *this = truncated(o.cap());
  for (int i = 0; i <= cap(); ++i) coef_[i] -= o.coef_[i];
  return *this;
}

HSeries operator+(HSeries a, const HSeries& b) {
  a += b;
  return a;
}

HSeries operator-(HSeries a, const HSeries& b) {
  a -= b;
  return a;
}

HSeries operator*(const HSeries& a, const HSeries& b) {
  HSeries r(std::min(a.cap(), b.cap()));
  for (int i = 0; i <= r.cap(); ++i) {
    if (a.coef_[i].is_zero()) continue;
    for (int j = 0; i + j <= r.cap(); ++j) {
      if (b.coef_[j].is_zero()) continue;
      r.coef_[i + j] += a.coef_[i] * b.coef_[j];
    }
  }
  return r;
}

HSeries operator*(HSeries a, const LaurentPolynomial& c) {
  for (auto& p : a.coef_) p = p * c;
  return a;
}

bool operator==(const HSeries& a, const HSeries& b) {
  int cap = std::min(a.cap(), b.cap());
  for (int i = 0; i <= cap; ++i)
    if (!(a.coef_[i] == b.coef_[i])) return false;
  return true;
}

HSeries exp_series(const Rational& a, const Rational& b, int cap) {
  HSeries s(cap);
  LaurentPolynomial t = LaurentPolynomial::variable(kC, 0) * a + LaurentPolynomial::constant(kC, b);
  LaurentPolynomial power = LaurentPolynomial::constant(kC, 1);
  Rational fact = 1;
  for (int n = 0; n <= cap; ++n) {
    if (n > 0) {
      power = power * t;
      fact *= n;
    }
    s[n] = power * Rational(1 / fact);
  }
  return s;
}

HSeries hseries_invert(const HSeries& s) {
  const LaurentPolynomial& c0 = s[0];
  if (!c0.is_constant() || c0.is_zero())
    throw std::domain_error("hseries_invert: h^0 coefficient is not a nonzero constant");
  Rational inv = 1 / c0.coefficient(Exponent(1));
  HSeries r(s.cap());
  r[0] = LaurentPolynomial::constant(kC, inv);
  // r_n = -(1/s_0) * sum_{k=1..n} s_k r_{n-k}
  for (int n = 1; n <= s.cap(); ++n) {
    LaurentPolynomial acc(kC);
    for (int k = 1; k <= n; ++k)
      if (!s[k].is_zero()) acc += s[k] * r[n - k];
    r[n] = acc * Rational(-inv);
  }
  return r;
}

std::string to_string(const HSeries& s) {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= s.cap(); ++k) {
    if (s[k].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(s[k]) << ")*h^" << k;
  }
  if (first) out << "0";
  out << " + O(h^" << s.cap() + 1 << ")";
  return out.str();
}

}  // namespace linkinv
