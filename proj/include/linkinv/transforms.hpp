#pragma once

#include "linkinv/alexander.hpp"
#include "linkinv/series.hpp"

#include <map>
#include <string>
#include <vector>

namespace linkinv {

/// A series that may carry a simple pole in its single variable: the
/// represented value is `series / z` when `pole` is set (knots only).
struct PoleSeries {
  TruncatedSeries series;
  bool pole = false;

  friend bool operator==(const PoleSeries& a, const PoleSeries& b) {
    return a.pole == b.pole && a.series == b.series;
  }
};

std::string to_string(const PoleSeries& s);

/// Omega with x_i -> x(z_i); variables z or z1..zn.
PoleSeries mho(const PotentialFunction& omega, int cap = kDefaultCap, bool plus_root = true);

/// Parts P_S of the unique expansion of Omega over alternating brace
/// monomials; S runs over even subsets of {1..n} (1-based, sorted).
struct Decomposition {
  int n = 1;
  std::map<std::vector<int>, LaurentPolynomial> parts;

  /// P_S, or zero when absent.
  LaurentPolynomial part(const std::vector<int>& subset) const;
};

/// Omega must be bar-invariant; throws DomainError otherwise.
Decomposition decompose(const LaurentPolynomial& omega, int n);
/// Throws DomainError for knots.
Decomposition decompose(const PotentialFunction& omega);
LaurentPolynomial reconstruct(const Decomposition& dec);

/// x_{i1} x_{i2}^{-1} x_{i3} ... over indexed_variables("x", n).
LaurentPolynomial alternating_monomial(const std::vector<int>& subset, int n);

/// Twice the sum of all parts; variables z or z1..zn.
LaurentPolynomial nabla_bold(const Decomposition& dec);
/// k_i + l_i mod 2 for each color.
std::vector<int> parity_signature(const LinkDiagram& d);
/// Inverse of nabla_bold . decompose given the parity signature; throws
/// DomainError on a term whose signature matches no even subset.
LaurentPolynomial omega_from_nbl(const LaurentPolynomial& nbl, const std::vector<int>& parities,
                                 int num_components);
/// The nabla-bold polynomial of a diagram, z^{-1} Conway for knots.
PoleSeries nabla_bold_series(const LinkDiagram& d, int cap = kDefaultCap);

/// Conway polynomials of the individual components.
std::vector<LaurentPolynomial> component_conways(const LinkDiagram& d);

/// Divides by prod_k Conway_{K_k}(z_{c(k)}); a single-variable numerator is
/// treated as monochromatic.
TruncatedSeries starred(const TruncatedSeries& numerator, const LinkDiagram& d);
PoleSeries starred(const PoleSeries& numerator, const LinkDiagram& d);

TruncatedSeries conway_star(const LinkDiagram& d, int cap = kDefaultCap);
PoleSeries mho_star(const LinkDiagram& d, int cap = kDefaultCap);
PoleSeries nabla_bold_star(const LinkDiagram& d, int cap = kDefaultCap);

enum class SeriesSource { Mho, MhoStar, NablaBoldStar, ConwayStar, Traldi, HomflyExp, KauffmanExp };
std::string to_string(SeriesSource s);

/// Coefficients indexed by exponent vectors, labelled with their source.
struct CoefficientTable {
  SeriesSource source = SeriesSource::Mho;
  int cap = kDefaultCap;
  std::map<std::vector<int>, Rational> entries;

  Rational at(const std::vector<int>& index) const;
  /// Throws std::logic_error unless the table comes from `expected`.
  const CoefficientTable& require(SeriesSource expected) const;
};

CoefficientTable table_of(const TruncatedSeries& s, SeriesSource source);
CoefficientTable table_of(const HSeries& s, SeriesSource source);

/// H(e^{ch/2}, e^{h/2} - e^{-h/2}) in Q[c][[h]].
HSeries homfly_substitute(const LaurentPolynomial& h_poly, int cap = kDefaultCap);
/// F(e^{(c-1)h/2}, e^{h/2} - e^{-h/2}) in Q[c][[h]].
HSeries kauffman_substitute(const LaurentPolynomial& f_poly, int cap = kDefaultCap);
/// Entries (k, i) hold the coefficient of c^i h^k.
CoefficientTable exp_expand_homfly(const LaurentPolynomial& h_poly, int cap = kDefaultCap);
CoefficientTable exp_expand_kauffman(const LaurentPolynomial& f_poly, int cap = kDefaultCap);

HSeries homfly_star(const LinkDiagram& d, int cap = kDefaultCap);
HSeries kauffman_star(const LinkDiagram& d, int cap = kDefaultCap);

/// Coefficients e_ij of (x1 x2)^{-lambda} Omega in y_i = x_i^2 - 1, with
/// lambda = 0 for odd and 1 for even linking number. Two colors only.
CoefficientTable traldi_expand(const PotentialFunction& omega, int lk, int cap = kDefaultCap);

/// Indices (i, j), i + j even, where e_ij is not congruent to
/// 2(d'_ij + d''_ij) modulo the gcd of the e_kl with (k, l) < (i, j).
std::vector<std::pair<int, int>> traldi_congruence_failures(const CoefficientTable& traldi,
                                                            const Decomposition& dec);

}  // namespace linkinv
