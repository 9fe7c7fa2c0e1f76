#pragma once

#include "linkinv/laurent.hpp"

#include <utility>

namespace linkinv {

inline constexpr int kDefaultCap = 12;

/// Multivariate power series truncated at total degree `cap` (inclusive).
class TruncatedSeries {
 public:
  using Terms = std::map<Exponent, Rational>;

  TruncatedSeries() = default;
  TruncatedSeries(VariableList vars, int cap);

  static TruncatedSeries constant(VariableList vars, int cap, const Rational& c);
  static TruncatedSeries variable(VariableList vars, int cap, std::size_t index);
  /// Truncation of a polynomial; negative exponents are rejected.
  static TruncatedSeries from_polynomial(const LaurentPolynomial& p, int cap);

  const VariableList& variables() const { return vars_; }
  std::size_t num_variables() const { return vars_.size(); }
  int cap() const { return cap_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponent& e) const;
  Rational constant_term() const;
  void add_term(const Exponent& e, const Rational& c);

  TruncatedSeries embed(const VariableList& target) const;
  TruncatedSeries truncated(int cap) const;
  LaurentPolynomial to_polynomial() const;
  bool has_integer_coefficients() const;

  /// z_i -> factor * z_i for every variable.
  TruncatedSeries scale_variables(const Rational& factor) const;

  TruncatedSeries pow(unsigned k) const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c);
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a);
  /// Equality of coefficients up to the smaller of the two caps.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  VariableList vars_;
  int cap_ = kDefaultCap;
  Terms terms_;
};

/// Multiplicative inverse; throws std::domain_error on a zero constant term.
TruncatedSeries series_invert(const TruncatedSeries& s);

/// (1 + t)^alpha in the single variable `var`.
TruncatedSeries binomial_series(const Rational& alpha, const std::string& var, int cap);

/// The two roots of x - 1/x = z as series in `var`, as (x, x^{-1}).
/// `plus_root` selects z/2 + sqrt(1 + z^2/4); otherwise z/2 - sqrt(1 + z^2/4).
std::pair<TruncatedSeries, TruncatedSeries> x_of_z(int cap, const std::string& var = "z",
                                                   bool plus_root = true);

/// Substitutes univariate series for each variable of a Laurent polynomial:
/// x_i^k -> pos[i]^k for k >= 0 and neg[i]^{-k} for k < 0.
TruncatedSeries substitute_series(const LaurentPolynomial& f,
                                  const std::vector<TruncatedSeries>& pos,
                                  const std::vector<TruncatedSeries>& neg, int cap);

std::string to_string(const TruncatedSeries& s);

/// Power series in one formal variable h whose coefficients are polynomials
/// in a parameter c; truncated at h-degree `cap`.
class HSeries {
 public:
  HSeries() = default;
  explicit HSeries(int cap);

  static HSeries constant(int cap, const Rational& c);

  int cap() const { return static_cast<int>(coef_.size()) - 1; }
  /// Coefficient of h^k, a polynomial in "c".
  const LaurentPolynomial& operator[](int k) const { return coef_[k]; }
  LaurentPolynomial& operator[](int k) { return coef_[k]; }
  bool is_zero() const;
  /// Lowest k with a nonzero h^k coefficient, or cap + 1.
  int valuation() const;

  /// Divides by h^k; the low coefficients must vanish. Cap drops by k.
  HSeries shift_down(int k) const;
  HSeries truncated(int cap) const;

  HSeries& operator+=(const HSeries& o);
  HSeries& operator-=(const HSeries& o);
  friend HSeries operator+(HSeries a, const HSeries& b);
  friend HSeries operator-(HSeries a, const HSeries& b);
  friend HSeries operator*(const HSeries& a, const HSeries& b);
  friend HSeries operator*(HSeries a, const LaurentPolynomial& c);
  friend bool operator==(const HSeries& a, const HSeries& b);

 private:
  std::vector<LaurentPolynomial> coef_;
};

/// exp((a*c + b) * h).
HSeries exp_series(const Rational& a, const Rational& b, int cap);

/// Inverse in Q[c][[h]]; the h^0 coefficient must be a nonzero rational.
HSeries hseries_invert(const HSeries& s);

std::string to_string(const HSeries& s);

}  // namespace linkinv
