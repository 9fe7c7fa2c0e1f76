#include "helpers.hpp"

#include <doctest.h>

using namespace testing;

namespace {

const VariableList XY = {"x", "y"};

// (x - x^-1) / y, written out term by term.
LaurentPolynomial loop_factor() {
  return var(XY, 0) * var(XY, 1, -1) - var(XY, 0, -1) * var(XY, 1, -1);
}

LaurentPolynomial homfly_at_one(const LaurentPolynomial& h) {
  return h.embed(XY).evaluate_at_one(0).map_exponents({"z"}, [](const Exponent& e) { return e; });
}

}  // namespace

TEST_CASE("Conway polynomial examples") {
  CHECK(conway(unknot()) == cst({"z"}, 1));
  // Switching one Hopf crossing gives the unlink (0), smoothing the unknot (1).
  LaurentPolynomial hopf_oracle = cst({"z"}, 0) + z() * cst({"z"}, 1);
  CHECK(conway(hopf()) == hopf_oracle);
  // Switching one trefoil crossing unknots it; smoothing gives the Hopf link.
  CHECK(conway(trefoil()) == cst({"z"}, 1) + z() * hopf_oracle);
  // From the potential function {x}{y}{z}: (x - 1/x) Omega(x, x, x) = (x - 1/x)^4.
  CHECK(conway(borromean()) == z(4));
  CHECK(conway(unlink(3)).is_zero());
}

TEST_CASE("HOMFLY examples") {
  CHECK(homfly(unknot()) == cst(XY, 1));
  for (int m = 1; m <= 3; ++m) CHECK(homfly(unlink(m)) == loop_factor().pow(m - 1));
  CHECK(homfly_loop_factor() == loop_factor());
  CHECK(homfly_at_one(homfly(trefoil())) == cst({"z"}, 1) + z(2));
}

TEST_CASE("Kauffman examples") {
  CHECK(kauffman_f(unknot()) == cst(XY, 1));
  // One-crossing diagram of the unknot: a single positive kink.
  LinkDiagram kink = link("braid(2): s1");
  REQUIRE(kink.num_components() == 1);
  REQUIRE(writhe(kink) == 1);
  CHECK(dubrovnik(kink) == var(XY, 0));
  CHECK(kauffman_f(kink) == cst(XY, 1));
  CHECK(kauffman_f(unlink(2)) == cst(XY, 1) + loop_factor());
  CHECK(kauffman_loop_factor() == cst(XY, 1) + loop_factor());
}

TEST_CASE("property: H(1, z) equals the Conway polynomial") {
  for (const auto& e : corpus().links) {
    CAPTURE(e.name);
    LinkDiagram d = e.diagram();
    CHECK(homfly_at_one(homfly(d)) == conway(d));
  }
}

TEST_CASE("property: descent order does not matter") {
  for (const auto& e : corpus().links) {
    CAPTURE(e.name);
    LinkDiagram d = e.diagram();
    LaurentPolynomial c = conway(d), h = homfly(d), f = kauffman_f(d);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      SkeinOptions opts;
      opts.seed = seed;
      CHECK(conway(d, opts) == c);
      if (seed <= 3) {
        CHECK(homfly(d, opts) == h);
        CHECK(kauffman_f(d, opts) == f);
      }
    }
    SkeinOptions raw;
    raw.simplify = false;
    CHECK(conway(d, raw) == c);
  }
}

TEST_CASE("property: skein relations hold at every crossing") {
  const LaurentPolynomial x = var(XY, 0), xi = var(XY, 0, -1), y = var(XY, 1);
  for (const auto& e : corpus().links) {
    CAPTURE(e.name);
    LinkDiagram d = e.diagram();
    for (int c = 0; c < d.num_crossings(); ++c) {
      CAPTURE(c);
      LinkDiagram other = switch_crossing(d, c), zero = smooth_oriented(d, c);
      const LinkDiagram& plus = d.crossings()[c].sign > 0 ? d : other;
      const LinkDiagram& minus = d.crossings()[c].sign > 0 ? other : d;
      CHECK(conway(plus) - conway(minus) == z() * conway(zero));
      CHECK(x * homfly(plus) - xi * homfly(minus) == y * homfly(zero));
      LinkDiagram inf = smooth_infinity(d, c);
      LaurentPolynomial shift = var(XY, 0, writhe(inf) - writhe(zero));
      CHECK(x * kauffman_f(plus) - xi * kauffman_f(minus) ==
            y * (kauffman_f(zero) - shift * kauffman_f(inf)));
      CHECK(dubrovnik(plus) - dubrovnik(minus) == y * (dubrovnik(zero) - dubrovnik(inf)));
    }
  }
}

TEST_CASE("property: c0 is the linking number (m = 2) and ab + bc + ca (m = 3)") {
  for (const auto& e : corpus().links) {
    LinkDiagram d = e.diagram();
    auto lk = linking_matrix(d);
    auto c = conway(d);
    int m = d.num_components();
    Rational c0 = c.is_zero() ? Rational(0) : c.coefficient(Exponent{m - 1});
    CAPTURE(e.name);
    if (m == 2) CHECK(c0 == lk[0][1]);
    if (m == 3) CHECK(c0 == lk[0][1] * lk[1][2] + lk[1][2] * lk[0][2] + lk[0][2] * lk[0][1]);
  }
  LinkDiagram chain = link("braid(3): s1 s1 s2 s2");
  CHECK(conway(chain) == z(2));
}

TEST_CASE("property: Conway is multiplicative under connected sum") {
  for (const auto& e : corpus().links) {
    if (!e.sum) continue;
    CAPTURE(e.name);
    CHECK(conway(e.diagram()) ==
          conway(corpus_link(e.sum->left)) * conway(corpus_link(e.sum->right)));
  }
  CHECK(conway(connected_sum(trefoil(), figure8(), 0, 0)) == conway(trefoil()) * conway(figure8()));
}

TEST_CASE("resource cap") {
  SkeinOptions tiny;
  tiny.budget = 2;
  tiny.seed = 99;  // private memo table, so nothing is cached
  CHECK_THROWS_AS(conway(corpus_link("chain4"), tiny), ResourceLimitError);
}
