#pragma once

#include "linkinv/rational.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace linkinv {

inline constexpr std::size_t kMaxVariables = 8;

/// Dense exponent vector of fixed capacity. Entries may be negative.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t n);
  Exponent(std::initializer_list<int> values);

  std::size_t size() const { return size_; }
  int operator[](std::size_t i) const { return e_[i]; }
  int& operator[](std::size_t i) { return e_[i]; }

  int total_degree() const;
  bool is_zero() const;
  bool is_nonnegative() const;

  Exponent operator+(const Exponent& o) const;
  Exponent operator-(const Exponent& o) const;
  Exponent operator-() const;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  std::array<int, kMaxVariables> e_{};
  std::uint8_t size_ = 0;
};

using VariableList = std::vector<std::string>;

class VariableMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sparse multivariate Laurent polynomial with rational coefficients.
///
/// Terms are keyed by exponent vectors of length `variables().size()`; zero
/// coefficients are never stored. Binary operations on operands with
/// different variable lists embed both into the lexicographically sorted
/// union of the two lists (a constant with no variables embeds into anything).
class LaurentPolynomial {
 public:
  using Terms = std::map<Exponent, Rational>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(VariableList vars);

  static LaurentPolynomial constant(VariableList vars, const Rational& c);
  static LaurentPolynomial monomial(VariableList vars, const Exponent& e,
                                    const Rational& c = 1);
  /// The variable `vars[index]` raised to `power`.
  static LaurentPolynomial variable(VariableList vars, std::size_t index,
                                    int power = 1);

  const VariableList& variables() const { return vars_; }
  std::size_t num_variables() const { return vars_.size(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  /// Lowest and highest exponent of variable i over the support.
  int min_degree(std::size_t i) const;
  int max_degree(std::size_t i) const;
  bool has_integer_coefficients() const;
  bool is_polynomial() const;  // no negative exponents

  /// Re-expresses the polynomial over `target`, which must contain every
  /// variable this polynomial actually uses.
  LaurentPolynomial embed(const VariableList& target) const;

  /// Maps every exponent through `f`; coefficients of colliding images add.
  LaurentPolynomial map_exponents(const VariableList& target,
                                  const std::function<Exponent(const Exponent&)>& f) const;

  /// Multiplies by the monomial x^shift.
  LaurentPolynomial shifted(const Exponent& shift) const;

  /// Substitutes 1 for variable i and drops it from the variable list.
  LaurentPolynomial evaluate_at_one(std::size_t i) const;

  /// Substitutes the single variable `name` for every variable.
  LaurentPolynomial identify_variables(const std::string& name) const;

  /// Replaces each variable by the given polynomial; only defined for
  /// polynomials (no negative exponents).
  LaurentPolynomial compose(const std::vector<LaurentPolynomial>& images) const;

  LaurentPolynomial pow(unsigned k) const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Rational& c);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c);
  friend LaurentPolynomial operator*(const Rational& c, LaurentPolynomial a);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

 private:
  VariableList vars_;
  Terms terms_;
};

/// Sorted union of two variable lists; a list is returned unchanged when the
/// other one is empty or equal to it.
VariableList unify_variables(const VariableList& a, const VariableList& b);

/// f(x_1, ..., x_n) -> f(-1/x_1, ..., -1/x_n).
LaurentPolynomial bar_substitute(const LaurentPolynomial& f);
/// f + bar(f).
LaurentPolynomial brace(const LaurentPolynomial& f);
/// f - bar(f).
LaurentPolynomial bracket(const LaurentPolynomial& f);

/// f(1/x_1, ..., 1/x_n).
LaurentPolynomial invert_variables(const LaurentPolynomial& f);

/// x_i - x_i^{-1} over `vars`.
LaurentPolynomial brace_variable(const VariableList& vars, std::size_t i);

/// Exact quotient f / g in the Laurent ring, or nullopt when g does not divide f.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& f,
                                              const LaurentPolynomial& g);

/// If f = c * g for a rational c, returns c.
std::optional<Rational> proportionality(const LaurentPolynomial& f,
                                        const LaurentPolynomial& g);

/// If f = +-x^e * g, returns (sign, e).
std::optional<std::pair<int, Exponent>> unit_ratio(const LaurentPolynomial& f,
                                                   const LaurentPolynomial& g);

/// Canonical rendering: ascending total degree, ties in ascending
/// lexicographic exponent order; e.g. "x^-2 - 1 + x^2", "1/2*z1*z2".
std::string to_string(const LaurentPolynomial& f);

/// Standard variable names: {"x"} for n == 1, otherwise {"x1", ..., "xn"}.
VariableList indexed_variables(const std::string& stem, std::size_t n);

}  // namespace linkinv
