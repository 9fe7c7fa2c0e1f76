#pragma once

#include "linkinv/transforms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace linkinv {

/// c_0, c_1, ... with Conway = z^{m-1} (c_0 + c_1 z^2 + ...). Throws
/// DomainError if the polynomial is not of that form.
std::vector<Rational> conway_coeffs(const LinkDiagram& d);

/// alpha_0, alpha_1, ... read off Conway* up to z-degree `cap`; the
/// recursion through the component polynomials is checked on the way.
std::vector<Rational> alpha_coeffs(const LinkDiagram& d, int cap = kDefaultCap);

struct TwoColorTables {
  CoefficientTable c;      // Mho
  CoefficientTable alpha;  // Mho*
  CoefficientTable delta;  // nabla-bold*
};

/// Requires exactly two colors.
TwoColorTables two_color_tables(const LinkDiagram& d, int cap = kDefaultCap);

/// Names of the table identities that fail on `d`; empty when all hold.
std::vector<std::string> two_color_violations(const LinkDiagram& d, const TwoColorTables& t);

/// Two-component link colored 1, 2 (component order); throws otherwise.
LinkDiagram two_colored(const LinkDiagram& d);

/// (-1)^{k+1} delta_{1,2k-1}; UndefinedInvariant unless lk = 0.
Rational cochran_beta(const LinkDiagram& d, int k);
/// (-1)^{k+1} alpha_{1,2k-1}.
Rational beta_hat(const LinkDiagram& d, int k);

/// c_11 of the two-colored link.
Rational unoriented_sl(const LinkDiagram& d);
/// 2 c_11 / lk^2; UndefinedInvariant when lk = 0.
Rational casson_walker_surrogate(const LinkDiagram& d);
/// c_11(L) = (alpha_1(L) + alpha_1(L')) / 2 with L' reversing component 2.
bool reversal_identity_holds(const LinkDiagram& d);

/// alpha_1(L) - sum over ordered pairs of distinct two-component sublinks
/// of alpha_0(L0) alpha_1(L1). Three components only.
Rational gamma3(const LinkDiagram& d);

struct CongruenceEntry {
  int i = 0, j = 0;
  Rational delta;
  Integer modulus;   // gcd of the lower delta_kl; 0 when they all vanish
  Integer residue;   // delta mod modulus (delta itself when modulus is 0)
  bool nonzero_residue = false;
};

struct CongruenceReport {
  std::vector<CongruenceEntry> entries;
  bool unknotted_components = false;
  /// Entries with nonzero residue.
  std::vector<std::pair<int, int>> flagged() const;
};

CongruenceReport congruence_report(const LinkDiagram& d, int cap = kDefaultCap);

struct InvariantReport {
  std::string name;
  int components = 0;
  int colors = 0;
  std::vector<std::vector<int>> lk;
  LaurentPolynomial conway;
  PotentialFunction omega;
  PoleSeries mho;
  std::optional<Decomposition> decomposition;
  std::optional<LaurentPolynomial> nabla_bold;
  std::vector<Rational> c;
  std::vector<Rational> alpha;
  std::optional<TwoColorTables> tables;
  std::vector<std::string> table_violations;
  std::vector<Rational> beta;      // present only when lk = 0
  std::vector<Rational> beta_hat;
  std::optional<Rational> unoriented_sl;
  std::optional<Rational> casson_walker;
  std::optional<Rational> gamma;
  std::optional<CongruenceReport> congruences;
  int cap = kDefaultCap;
};

/// Everything the series layer exposes for `d`, within `cap`.
InvariantReport invariant_report(const LinkDiagram& d, int cap = kDefaultCap);

}  // namespace linkinv
