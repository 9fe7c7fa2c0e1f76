#pragma once

#include "linkinv/diagram.hpp"
#include "linkinv/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace linkinv {

/// Which strands a marked double point may join.
enum class ColorContext {
  AsGiven,        // the diagram's own coloring
  Monochromatic,  // any two strands
  PerComponent,   // strands of one component only
};

/// An isotopy invariant of (nonsingular) diagrams with values in Q.
struct InvariantFunction {
  std::string name;
  std::function<Rational(const LinkDiagram&)> eval;
  ColorContext context = ColorContext::AsGiven;

  Rational operator()(const LinkDiagram& d) const { return eval(d); }
};

/// Pointwise product; the context is taken from `a`.
InvariantFunction operator*(const InvariantFunction& a, const InvariantFunction& b);

/// Marked double points of `d`, in crossing order.
std::vector<int> singular_points(const LinkDiagram& d);

/// Sum over all resolutions of the marked points of (-1)^{#negative} chi.
/// Throws ValidationError if a marked point joins strands of different
/// colors in chi's context.
Rational extend(const InvariantFunction& chi, const LinkDiagram& s);

struct TypeWitness {
  std::string name;
  Rational value;
};

/// Members of `family` on which extend(chi) is nonzero. Every member must
/// carry exactly r + 1 marked points. An empty result is evidence only.
std::vector<TypeWitness> type_falsify(const InvariantFunction& chi,
                                      const std::vector<LinkDiagram>& family, int r);

/// (a+b+c+d)d - (a+c+d)(b+d) - (a+b+d)(c+d) - (b+c+d)(a+d).
Rational prop33_formula(int a, int b, int c, int d);

struct SingularFixture {
  LinkDiagram link;
  Rational expected;
};

/// Two-component link whose first component is a curve with three double
/// points winding twice around a center region D, the second component
/// threading its three lobes a, b, c times and D d times. Requires
/// a + b + c + 2d = 0 (zero linking number).
SingularFixture prop33_witness(int a, int b, int c, int d);

/// Two-component link with k double points between the components and no
/// other marked points; extend((-1)^lk) is expected to be (-1)^{lk} 2^k
/// for the all-positive resolution.
SingularFixture prop21_fixture(int k);

/// extend(chi psi, s) == chi(L+) extend(psi, s) + extend(chi, s) psi(L-) for
/// one marked point.
bool leibniz_restrict(const InvariantFunction& chi, const InvariantFunction& psi,
                      const LinkDiagram& s);

/// (-1)^lk of a two-component link, with any two strands allowed to meet.
InvariantFunction parity_of_lk();
/// alpha_2 from Conway*, with double points on a single component.
InvariantFunction alpha2_kl();

/// c_k, with double points on a single component.
InvariantFunction conway_coefficient_kl(int k);
/// Coefficient of the monochromatic Mho at total degree n.
InvariantFunction mho_coefficient(int n);
/// p_ki and q_ki of the exponential expansions of H and F.
InvariantFunction homfly_exp_coefficient(int k, int i);
InvariantFunction kauffman_exp_coefficient(int k, int i);

/// Invariant named by a corpus key: "(-1)^lk", "alpha2", "c<k>", "mho<n>",
/// "p<k>,<i>" or "q<k>,<i>". Throws ValidationError on anything else.
InvariantFunction invariant_by_key(const std::string& key);

}  // namespace linkinv
