#pragma once

#include "linkinv/errors.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace linkinv {

/// A crossing in PD convention: arcs listed counterclockwise starting from
/// the incoming under-strand, so the under-strand runs slot 0 -> slot 2 and
/// the over-strand occupies slots 1 and 3.
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;           // +1 when the over-strand runs slot 3 -> slot 1
  bool singular = false;  // marked double point; over/under is a placeholder

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Component {
  std::vector<int> arcs;  // in orientation order
  int color = 1;          // 1-based

  friend bool operator==(const Component&, const Component&) = default;
};

struct Port {
  int crossing = -1;  // -1 for a crossing-free loop
  int slot = 0;

  friend bool operator==(const Port&, const Port&) = default;
};

/// Input to LinkDiagram construction. Arc ids are 0-based and dense.
struct DiagramSpec {
  std::vector<Crossing> crossings;  // `sign` is ignored and recomputed
  std::vector<int> free_loops;      // arcs of crossing-free components
  /// Optional component arc lists. For components that pass under some
  /// crossing the orientation is forced by the PD convention; otherwise the
  /// list order orients the component, and a two-arc list means its first
  /// arc leaves the lower-indexed crossing.
  std::vector<std::vector<int>> components;
  /// Optional colors, one per component (after inference when inferred).
  std::vector<int> colors;
  /// Optional explicit orientation: the head port of every non-loop arc.
  std::vector<Port> heads;
  std::string name;
};

/// Oriented, colored link diagram. Immutable once built.
///
/// Every component's arc list starts at the arc leaving its lowest-indexed
/// crossing (ties broken by slot); crossing-free components consist of a
/// single arc.
class LinkDiagram {
 public:
  LinkDiagram() = default;
  /// Validates `spec`, infers orientation and signs. Throws ValidationError.
  explicit LinkDiagram(const DiagramSpec& spec);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Component>& components() const { return components_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  int num_crossings() const { return static_cast<int>(crossings_.size()); }
  int num_components() const { return static_cast<int>(components_.size()); }
  int num_arcs() const { return static_cast<int>(tail_.size()); }
  int num_colors() const;
  std::vector<int> colors() const;

  Port head(int arc) const { return head_[arc]; }
  Port tail(int arc) const { return tail_[arc]; }
  int component_of_arc(int arc) const { return arc_component_[arc]; }
  bool is_free_loop(int component) const;

  /// Component of the strand through (crossing, slot).
  int component_at(int crossing, int slot) const {
    return arc_component_[crossings_[crossing].arcs[slot]];
  }
  /// Slot at which the over-strand enters (1 or 3).
  int over_in_slot(int crossing) const { return crossings_[crossing].sign > 0 ? 3 : 1; }
  int over_out_slot(int crossing) const { return crossings_[crossing].sign > 0 ? 1 : 3; }
  bool is_self_crossing(int crossing) const {
    return component_at(crossing, 0) == component_at(crossing, 1);
  }
  bool has_singular() const;

  /// Returns a copy with the given coloring (one color per component).
  LinkDiagram recolored(const std::vector<int>& colors) const;

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.crossings_ == b.crossings_ && a.components_ == b.components_;
  }

 private:
  std::vector<Crossing> crossings_;
  std::vector<Component> components_;
  std::vector<Port> head_, tail_;
  std::vector<int> arc_component_;
  std::string name_;
};

struct BraidWord {
  int strands = 1;
  std::vector<int> word;        // +-i for sigma_i^{+-1}, 1-based
  std::vector<bool> singular;   // per letter; empty means none marked
};

/// Parses the PD grammar: X[a,b,c,d], S[a,b,c,d] (marked double point),
/// O[a], optional "components: [[...],...]", "colors: [...]", "name: ...",
/// and "#" comments. Text whose first token is "braid(n):" is read as a
/// braid word and closed. Throws ParseError or ValidationError.
LinkDiagram parse_pd(const std::string& text);

/// "braid(n): s1 s1 -s2 ..."; a trailing "*" on a letter marks a double point.
BraidWord parse_braid(const std::string& text);

/// Trace closure of a braid. Components are ordered by their lowest strand
/// position; `colors` defaults to one color per component.
LinkDiagram braid_closure(const BraidWord& b, const std::vector<int>& colors = {});

/// Canonical PD text; parse_pd(render_pd(d)) == d.
std::string render_pd(const LinkDiagram& d);

std::vector<std::vector<int>> linking_matrix(const LinkDiagram& d);
int writhe(const LinkDiagram& d);

/// Crossing change; signs negate, labels are unchanged.
LinkDiagram switch_crossing(const LinkDiagram& d, int crossing);
/// Replaces the crossing by the orientation-respecting smoothing.
LinkDiagram smooth_oriented(const LinkDiagram& d, int crossing);
/// Replaces the crossing by the other smoothing; the result is reoriented.
LinkDiagram smooth_infinity(const LinkDiagram& d, int crossing);
/// Resolves a marked double point into a positive or negative crossing.
LinkDiagram resolve_singular(const LinkDiagram& d, int crossing, int sign);

LinkDiagram reverse_component(const LinkDiagram& d, int component);
LinkDiagram delete_component(const LinkDiagram& d, int component);
/// Keeps exactly the listed components (in their original order).
LinkDiagram restrict_components(const LinkDiagram& d, const std::vector<int>& keep);
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);
/// Band sum of component `ca` of `a` with component `cb` of `b`, using the
/// first arc of each. The merged component keeps `a`'s color; `b`'s other
/// colors are shifted past `a`'s unless `share_colors` is set.
LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b, int ca, int cb,
                          bool share_colors = false);
LinkDiagram mirror(const LinkDiagram& d);

/// Removes nugatory kinks (Reidemeister I) and bigon faces (Reidemeister II)
/// until none remain. `kink_sum` receives the sum of removed kink signs.
/// Marked double points are never touched.
LinkDiagram simplify(const LinkDiagram& d, int* kink_sum = nullptr, bool bigons = true);

/// Groups of components whose strands are connected through crossings;
/// crossing-free loops are groups of their own.
std::vector<std::vector<int>> split_pieces(const LinkDiagram& d);
bool is_split(const LinkDiagram& d);

/// Relabeling-invariant key. With `use_colors` false the coloring is ignored.
std::string canonical_code(const LinkDiagram& d, bool use_colors = true);

}  // namespace linkinv
