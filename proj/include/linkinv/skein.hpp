#pragma once

#include "linkinv/diagram.hpp"
#include "linkinv/laurent.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>

namespace linkinv {

/// Budget given to a default-constructed SkeinOptions; process-wide.
std::size_t& default_skein_budget();

struct SkeinOptions {
  /// Maximum number of freshly evaluated diagrams per call.
  std::size_t budget = default_skein_budget();
  /// When set, component order and basepoints are shuffled at every node and
  /// a private memo table is used, so the resolution tree really differs.
  std::optional<std::uint64_t> seed;
  /// Reidemeister I/II cleanup before each node.
  bool simplify = true;
};

/// Conway polynomial in "z".
LaurentPolynomial conway(const LinkDiagram& d, const SkeinOptions& opts = {});
/// HOMFLY polynomial in "x", "y": x H(L+) - x^-1 H(L-) = y H(L0), H(unknot) = 1.
LaurentPolynomial homfly(const LinkDiagram& d, const SkeinOptions& opts = {});
/// Regular-isotopy Dubrovnik polynomial D in "x", "y" of the unoriented
/// diagram: D(L+) - D(L-) = y (D(L0) - D(Linf)), D(kink) = x^{+-1} D.
LaurentPolynomial dubrovnik(const LinkDiagram& d, const SkeinOptions& opts = {});
/// F = x^{-w} D, an ambient isotopy invariant.
LaurentPolynomial kauffman_f(const LinkDiagram& d, const SkeinOptions& opts = {});

/// (x - x^-1)/y over {"x","y"}: the HOMFLY value of a split unknot factor.
LaurentPolynomial homfly_loop_factor();
/// 1 + (x - x^-1)/y: the Dubrovnik split unknot factor.
LaurentPolynomial kauffman_loop_factor();

/// Number of entries in the shared memo tables (all engines).
std::size_t skein_memo_size();

}  // namespace linkinv
