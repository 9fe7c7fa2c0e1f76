#pragma once

#include "linkinv/diagram.hpp"
#include "linkinv/laurent.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace linkinv {

/// Wirtinger presentation over the over-arcs of a diagram.
struct WirtingerPresentation {
  std::vector<int> generator_colors;  // 1-based color per generator
  /// One word per crossing; letters are (generator, +-1).
  std::vector<std::vector<std::pair<int, int>>> relations;
  int num_colors = 1;
};

WirtingerPresentation wirtinger(const LinkDiagram& d);

/// Variables of the abelianization: {"t"} or {"t1", ..., "tn"}.
VariableList alexander_variables(int num_colors);

using PolyMatrix = std::vector<std::vector<LaurentPolynomial>>;

/// Abelianized Fox Jacobian; rows are relations, columns generators.
PolyMatrix fox_matrix(const WirtingerPresentation& p);

/// Determinant by fraction-free elimination with exact Laurent division.
LaurentPolynomial determinant(PolyMatrix m, const VariableList& vars);

/// Multivariable Alexander polynomial, defined up to +-t^a. By default the
/// last generator and last relation are deleted; `alternate` deletes the first
/// of each instead.
LaurentPolynomial alexander_poly(const LinkDiagram& d, bool alternate = false);

enum class SignProvenance { ViaConway, ViaSublink, Ambiguous };

std::string to_string(SignProvenance s);

/// Normalized Conway potential function. For knots `value` is the numerator
/// (x - x^{-1}) * Omega and `knot_denominator` is set.
struct PotentialFunction {
  LaurentPolynomial value;
  std::vector<int> lambda;
  SignProvenance sign = SignProvenance::ViaConway;
  bool knot_denominator = false;
  int num_components = 1;
  int num_colors = 1;
};

/// Candidate sign fix from the component-deletion formula: `expected` is
/// what Omega(..., 1, ...) must equal, with the color's variable dropped.
struct DeletionWitness {
  int color = 1;
  LaurentPolynomial expected;
};

/// Symmetrizes Delta(x^2) and pins its sign. `conway_poly` is the Conway
/// polynomial of the monochromatic link; `fallback` is only called when the
/// monochromatic specialization vanishes. Throws DomainError when no
/// symmetrizing shift exists.
PotentialFunction normalize_potential(
    const LaurentPolynomial& delta, int num_components, int num_colors,
    const LaurentPolynomial& conway_poly,
    const std::function<std::vector<DeletionWitness>()>& fallback = {});

PotentialFunction potential_function(const LinkDiagram& d);

/// Omega(x, ..., x) multiplied by (x - x^{-1}), in the single variable "x".
LaurentPolynomial monochromatic_numerator(const PotentialFunction& omega);

/// Right side of the component-deletion formula for a component that is
/// alone in its color, in the variables of the remaining colors; nullopt
/// when the sublink's sign is ambiguous.
std::optional<LaurentPolynomial> deletion_rhs(const LinkDiagram& d, int component);

/// Omega_L with the deleted component's color set to 1, renamed to the
/// variables of the sublink.
LaurentPolynomial deletion_lhs(const PotentialFunction& omega, int color);

/// Throws ValidationError unless `component` is alone in its color.
bool deletion_check(const PotentialFunction& omega, const LinkDiagram& d, int component);

/// Formula for Omega of a connected sum, comparing both sides after
/// clearing the knot denominators.
bool connected_sum_check(const LinkDiagram& a, const LinkDiagram& b, int ca, int cb);

}  // namespace linkinv
