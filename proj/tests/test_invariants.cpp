#include "helpers.hpp"

#include <doctest.h>

using namespace testing;

namespace {

Rational at(const std::vector<Rational>& v, std::size_t i) { return i < v.size() ? v[i] : Rational(0); }

Rational alpha1(const LinkDiagram& d) { return at(alpha_coeffs(d), 1); }

std::vector<LinkDiagram> two_component_links() {
  std::vector<LinkDiagram> out;
  for (const auto& e : corpus().links) {
    LinkDiagram d = e.diagram();
    if (d.num_components() == 2) out.push_back(d);
  }
  out.push_back(link("braid(2): s1 s1 s1 s1 s1 s1 s1 s1 s1 s1"));
  out.push_back(connected_sum(whitehead(), trefoil(), 0, 0, true));
  return out;
}

}  // namespace

TEST_CASE("Conway coefficients and alpha") {
  CHECK(conway_coeffs(hopf()) == std::vector<Rational>{1});
  CHECK(at(alpha_coeffs(hopf()), 0) == 1);
  for (const auto& r : conway_coeffs(unlink(2))) CHECK(r == 0);
  for (const auto& r : alpha_coeffs(unlink(2))) CHECK(r == 0);
  // A local trefoil does not change alpha.
  LinkDiagram t = connected_sum(hopf(), trefoil(), 0, 0, true);
  CHECK(alpha_coeffs(t) == alpha_coeffs(hopf()));
  CHECK(conway_coeffs(t) != conway_coeffs(hopf()));
}

TEST_CASE("two-color tables") {
  SUBCASE("Hopf") {
    TwoColorTables t = two_color_tables(hopf());
    CHECK(t.c.at({0, 0}) == 1);
    CHECK(t.delta.at({0, 0}) == 1);
    // lk = 1 makes the cubic correction vanish.
    CHECK(t.c.at({1, 1}) == alpha1(hopf()));
    CHECK(two_color_violations(hopf(), t).empty());
  }
  SUBCASE("Whitehead") {
    // Unknotted components, so Conway* = Conway = -z^3 and alpha_1 = -1.
    LinkDiagram w = whitehead();
    REQUIRE(conway(w) == -z(3));
    TwoColorTables t = two_color_tables(w);
    CHECK(t.delta.at({0, 0}) == 0);
    CHECK(t.delta.at({1, 1}) == -1);
    CHECK(t.delta.at({1, 1}) == alpha1(w));
  }
  SUBCASE("three components in two colors") {
    LinkDiagram d = link("braid(3): s1 s1 s2 s2 s2 s2").recolored({1, 1, 2});
    auto lk = linking_matrix(d);
    TwoColorTables t = two_color_tables(d);
    // c_10 = lk(K1, K1')(lk(K1, K2) + lk(K1', K2)) with K1, K1' of color 1.
    CHECK(t.c.at({1, 0}) == lk[0][1] * (lk[0][2] + lk[1][2]));
    CHECK(two_color_violations(d, t).empty());
  }
  SUBCASE("color count is checked") { CHECK_THROWS(two_color_tables(borromean())); }
  SUBCASE("the table identities catch a tampered entry") {
    TwoColorTables t = two_color_tables(whitehead());
    t.delta.entries[{1, 0}] = 3;
    CHECK_FALSE(two_color_violations(whitehead(), t).empty());
  }
}

TEST_CASE("Cochran invariants") {
  for (int k = 1; k <= 6; ++k) {
    CHECK(cochran_beta(unlink(2), k) == 0);
    CHECK(beta_hat(unlink(2), k) == 0);
  }
  CHECK(cochran_beta(whitehead(), 1) == two_color_tables(whitehead()).delta.at({1, 1}));
  CHECK(cochran_beta(whitehead(), 1) == alpha1(whitehead()));
  CHECK_THROWS_AS(cochran_beta(hopf(), 1), UndefinedInvariant);
  CHECK_NOTHROW(beta_hat(hopf(), 1));
}

TEST_CASE("unoriented Sato-Levine and the Casson-Walker surrogate") {
  CHECK(unoriented_sl(hopf()) == alpha1(hopf()));
  CHECK(unoriented_sl(unlink(2)) == 0);
  LinkDiagram solomon = corpus_link("chain2");
  CHECK(casson_walker_surrogate(solomon) == 2 * unoriented_sl(solomon) / 4);
  CHECK_THROWS_AS(casson_walker_surrogate(whitehead()), UndefinedInvariant);
  int checked = 0;
  for (const auto& d : two_component_links()) {
    Rational lhs = unoriented_sl(d);
    CHECK(2 * lhs == alpha1(d) + alpha1(reverse_component(d, 1)));
    CHECK(reversal_identity_holds(d));
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("gamma") {
  CHECK(gamma3(unlink(3)) == 0);
  CHECK(gamma3(borromean()) == alpha1(borromean()));
  CHECK(gamma3(disjoint_union(hopf(), unknot())) == 0);
  CHECK_THROWS(gamma3(hopf()));
}

TEST_CASE("congruence reports") {
  SUBCASE("Hopf") {
    CongruenceReport r = congruence_report(hopf());
    CHECK(r.flagged().empty());
    for (const auto& e : r.entries)
      if (e.i == 1 && e.j == 1) CHECK(e.modulus == 1);
  }
  SUBCASE("Whitehead") {
    CongruenceReport r = congruence_report(whitehead(), 8);
    CHECK(r.flagged() == std::vector<std::pair<int, int>>{{1, 1}});
  }
  SUBCASE("unlink") {
    CongruenceReport r = congruence_report(unlink(2));
    for (const auto& e : r.entries) CHECK(e.delta == 0);
    CHECK(r.flagged().empty());
  }
}

TEST_CASE("property: alpha_1 from c_1, c_0 and the component Conway polynomials") {
  for (const auto& d : two_component_links()) {
    auto c = conway_coeffs(d);
    Rational knots = 0;
    for (const auto& k : component_conways(d))
      if (!k.is_zero()) knots += k.coefficient(Exponent{2});
    CHECK(alpha1(d) == at(c, 1) - at(c, 0) * knots);
  }
}

TEST_CASE("property: chain links satisfy c11 = alpha_1 - (lk^3 - lk)/12") {
  for (int n = 1; n <= 4; ++n) {
    std::string word = "braid(2):";
    for (int i = 0; i < 2 * n; ++i) word += " s1";
    LinkDiagram d = link(word);
    REQUIRE(linking_matrix(d)[0][1] == n);
    CHECK(unoriented_sl(d) == alpha1(d) - make_rational(n * n * n - n, 12));
  }
}

TEST_CASE("property: delta tables have the zero and evenness patterns") {
  for (const auto& d : two_component_links()) {
    TwoColorTables t = two_color_tables(d);
    int lk = linking_matrix(d)[0][1];
    CHECK(t.delta.at({0, 0}) == lk);
    CHECK(t.c.at({0, 0}) == lk);
    for (const auto& [idx, v] : t.delta.entries) {
      int i = idx[0], j = idx[1];
      if ((i + j) % 2) CHECK(v == 0);
      CHECK(is_integer(v));
      if (((i - lk) % 2 == 0) && ((j - lk) % 2 == 0)) CHECK(is_integer(v / 2));
    }
    for (const auto& [idx, v] : t.alpha.entries)
      if ((idx[0] + idx[1]) % 2) CHECK(v == 0);
    CHECK(two_color_violations(d, t).empty());
  }
}

TEST_CASE("property: PL-isotopy invariance of the named invariants") {
  const LinkDiagram knots[] = {trefoil(), figure8()};
  for (const auto& d : {hopf(), whitehead(), corpus_link("chain2")}) {
    TwoColorTables base = two_color_tables(d, 8);
    for (const auto& k : knots) {
      for (int c = 0; c < 2; ++c) {
        LinkDiagram t = connected_sum(d, k, c, 0, true);
        TwoColorTables tied = two_color_tables(t, 8);
        CHECK(tied.alpha.entries == base.alpha.entries);
        CHECK(tied.delta.entries == base.delta.entries);
        CHECK(alpha_coeffs(t, 8) == alpha_coeffs(d, 8));
        for (int j = 1; j <= 3; ++j) CHECK(beta_hat(t, j) == beta_hat(d, j));
      }
    }
  }
}

TEST_CASE("invariant report") {
  InvariantReport r = invariant_report(whitehead());
  CHECK(r.components == 2);
  CHECK(r.conway == -z(3));
  REQUIRE(r.tables);
  CHECK(r.table_violations.empty());
  CHECK(r.beta.size() == 6);
  CHECK(r.beta[0] == -1);
  CHECK_FALSE(r.casson_walker);
  InvariantReport h = invariant_report(hopf());
  CHECK(h.beta.empty());
  REQUIRE(h.casson_walker);
  InvariantReport b = invariant_report(borromean());
  REQUIRE(b.gamma);
  CHECK(*b.gamma == 1);
}
