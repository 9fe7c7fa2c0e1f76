#include "helpers.hpp"

#include <doctest.h>

using namespace testing;

namespace {

int crossing_sign_sum(const LinkDiagram& d) {
  int s = 0;
  for (const auto& c : d.crossings()) s += c.sign;
  return s;
}

// Half the signed count of crossings between components a and b, read
// directly off the crossing records.
int lk_by_hand(const LinkDiagram& d, int a, int b) {
  int s = 0;
  for (int x = 0; x < d.num_crossings(); ++x) {
    int p = d.component_at(x, 0), q = d.component_at(x, 1);
    if ((p == a && q == b) || (p == b && q == a)) s += d.crossings()[x].sign;
  }
  return s / 2;
}

std::vector<LinkDiagram> sample_links() {
  return {hopf(),       trefoil(),   figure8(),   whitehead(),
          borromean(),  link("braid(2): s1 s1 s1 s1"), link("braid(3): s1 s2 s1 s2"),
          corpus_link("trefoil_sum_hopf")};
}

}  // namespace

TEST_CASE("PD parsing: Hopf link") {
  LinkDiagram d = link("X[1,3,2,4] X[3,1,4,2] colors: [1,1]");
  CHECK(d.num_crossings() == 2);
  CHECK(d.num_components() == 2);
  CHECK(d.num_colors() == 1);
  auto lk = linking_matrix(d);
  CHECK((lk[0][1] == 1 || lk[0][1] == -1));
  CHECK(lk[0][1] == lk_by_hand(d, 0, 1));
}

TEST_CASE("braid closures") {
  SUBCASE("sigma_1^3 closes to one component") {
    LinkDiagram d = trefoil();
    CHECK(d.num_components() == 1);
    CHECK(d.num_crossings() == 3);
    CHECK(writhe(d) == 3);
  }
  SUBCASE("empty word closes to a crossing-free unknot") {
    LinkDiagram d = unknot();
    CHECK(d.num_crossings() == 0);
    CHECK(d.num_components() == 1);
    CHECK(d.is_free_loop(0));
  }
  SUBCASE("singular letters") {
    BraidWord b = parse_braid("braid(2): s1* -s1");
    CHECK(b.word == std::vector<int>{1, -1});
    CHECK(b.singular == std::vector<bool>{true, false});
    CHECK(braid_closure(b).has_singular());
  }
  SUBCASE("default coloring is one color per component") {
    CHECK(borromean().colors() == std::vector<int>{1, 2, 3});
  }
}

TEST_CASE("parse errors report positions") {
  try {
    parse_pd("X[1,2,3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
  }
  CHECK_THROWS_AS(parse_pd("X[1,2,3,4]"), ValidationError);
  CHECK_THROWS_AS(parse_pd("braid(2): s1 s1 colors: [1]"), ValidationError);
  CHECK_THROWS_AS(braid_closure(parse_braid("braid(2): s1 s1"), {1}), ValidationError);
  CHECK_THROWS_AS(parse_braid("braid(2): s2"), ParseError);
}

TEST_CASE("linking matrix") {
  CHECK(linking_matrix(hopf()) == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(linking_matrix(unlink(2)) == std::vector<std::vector<int>>{{0, 0}, {0, 0}});
  CHECK(linking_matrix(borromean()) == std::vector<std::vector<int>>(3, std::vector<int>(3, 0)));
}

TEST_CASE("crossing surgery on the Hopf link") {
  LinkDiagram h = hopf();
  SUBCASE("switch gives a link with lk 0") {
    LinkDiagram s = switch_crossing(h, 0);
    CHECK(linking_matrix(s)[0][1] == 0);
    CHECK(conway(s).is_zero());
  }
  SUBCASE("oriented smoothing merges the components") {
    LinkDiagram s = smooth_oriented(h, 0);
    CHECK(s.num_components() == 1);
    CHECK(conway(s) == cst({"z"}, 1));
  }
  SUBCASE("switch is an involution") { CHECK(switch_crossing(switch_crossing(h, 1), 1) == h); }
  SUBCASE("unknown crossing") { CHECK_THROWS(switch_crossing(h, 5)); }
}

TEST_CASE("writhe, reversal and deletion") {
  CHECK(writhe(hopf()) == 2);
  CHECK(linking_matrix(reverse_component(hopf(), 1))[0][1] == -1);
  for (int c = 0; c < 3; ++c) {
    LinkDiagram s = delete_component(borromean(), c);
    CHECK(s.num_components() == 2);
    CHECK(linking_matrix(s)[0][1] == 0);
    CHECK(potential_function(s).value.is_zero());
  }
  CHECK_THROWS(delete_component(hopf(), 2));
}

TEST_CASE("canonical codes") {
  LinkDiagram a = link("X[1,3,2,4] X[3,1,4,2]");
  LinkDiagram b = link("X[2,4,3,1] X[4,2,1,3]");
  CHECK(canonical_code(a) == canonical_code(b));
  CHECK(canonical_code(a) != canonical_code(unlink(2)));
  CHECK(canonical_code(a) != canonical_code(switch_crossing(a, 0)));
}

TEST_CASE("property: writhe drops by 2 when a positive crossing is switched") {
  for (const auto& d : sample_links()) {
    CHECK(writhe(d) == crossing_sign_sum(d));
    for (int x = 0; x < d.num_crossings(); ++x) {
      int w = writhe(switch_crossing(d, x));
      CHECK(w == writhe(d) - 2 * d.crossings()[x].sign);
    }
  }
}

TEST_CASE("property: oriented smoothing changes the component count by one") {
  for (const auto& d : sample_links()) {
    for (int x = 0; x < d.num_crossings(); ++x) {
      LinkDiagram s = smooth_oriented(d, x);
      int delta = s.num_components() - d.num_components();
      CHECK((delta == 1 || delta == -1));
      CHECK(delta == (d.is_self_crossing(x) ? 1 : -1));
      // Writhe bookkeeping w(L+) - 1 = w(L-) + 1 = w(L0).
      int w0 = writhe(s);
      int wp = d.crossings()[x].sign > 0 ? writhe(d) : writhe(switch_crossing(d, x));
      CHECK(wp - 1 == w0);
    }
  }
}

TEST_CASE("property: linking matrix ignores self-crossing changes") {
  for (const auto& d : sample_links())
    for (int x = 0; x < d.num_crossings(); ++x)
      if (d.is_self_crossing(x)) CHECK(linking_matrix(switch_crossing(d, x)) == linking_matrix(d));
}

TEST_CASE("property: render and parse round trip") {
  for (const auto& d : sample_links()) CHECK(parse_pd(render_pd(d)) == d);
  for (const auto& e : corpus().links) {
    LinkDiagram d = e.diagram();
    CHECK(parse_pd(render_pd(d)) == d);
  }
}

TEST_CASE("property: disjoint unions are split") {
  CHECK(is_split(disjoint_union(hopf(), trefoil())));
  CHECK(is_split(unlink(2)));
  CHECK_FALSE(is_split(hopf()));
  CHECK_FALSE(is_split(borromean()));
}

TEST_CASE("connected sum and mirror") {
  LinkDiagram s = connected_sum(hopf(), hopf(), 0, 0);
  CHECK(s.num_components() == 3);
  CHECK(s.num_crossings() == 4);
  CHECK(connected_sum(hopf(), trefoil(), 1, 0, true).num_colors() == 2);
  CHECK(writhe(mirror(trefoil())) == -3);
}
