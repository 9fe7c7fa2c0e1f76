#include "linkinv/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace linkinv {

// ------------------------------------------------------------ construction

namespace {

int index_of(const std::vector<Port>& occ, Port p) {
  for (std::size_t i = 0; i < occ.size(); ++i)
    if (occ[i] == p) return static_cast<int>(i);
  return -1;
}

bool port_less(Port a, Port b) {
  return a.crossing != b.crossing ? a.crossing < b.crossing : a.slot < b.slot;
}

std::vector<int> compact_colors(const std::vector<int>& colors) {
  std::set<int> used(colors.begin(), colors.end());
  std::map<int, int> rank;
  int r = 1;
  for (int c : used) rank[c] = r++;
  std::vector<int> out;
  for (int c : colors) out.push_back(rank[c]);
  return out;
}

}  // namespace

LinkDiagram::LinkDiagram(const DiagramSpec& spec) : crossings_(spec.crossings), name_(spec.name) {
  const int nx = static_cast<int>(crossings_.size());
  int num_arcs = 0;
  for (const auto& c : crossings_)
    for (int a : c.arcs) {
      if (a < 0) throw ValidationError("negative arc id");
      num_arcs = std::max(num_arcs, a + 1);
    }
  for (int a : spec.free_loops) {
    if (a < 0) throw ValidationError("negative arc id");
    num_arcs = std::max(num_arcs, a + 1);
  }
  std::vector<std::vector<Port>> occ(num_arcs);
  for (int x = 0; x < nx; ++x)
    for (int s = 0; s < 4; ++s) occ[crossings_[x].arcs[s]].push_back({x, s});
  std::vector<char> is_loop(num_arcs, 0);
  for (int a : spec.free_loops) {
    if (!occ[a].empty() || is_loop[a])
      throw ValidationError("loop arc " + std::to_string(a + 1) + " also used elsewhere");
    is_loop[a] = 1;
  }
  for (int a = 0; a < num_arcs; ++a)
    if (!is_loop[a] && occ[a].size() != 2)
      throw ValidationError("arc " + std::to_string(a + 1) + " used " +
                            std::to_string(occ[a].size()) + " times (expected 2)");

  // dir[a] = index in occ[a] of the occurrence where arc a ends.
  std::vector<int> dir(num_arcs, -1);
  std::deque<int> queue;
  auto set_head = [&](int a, Port p) {
    int idx = index_of(occ[a], p);
    if (dir[a] == -1) {
      dir[a] = idx;
      queue.push_back(a);
    } else if (dir[a] != idx) {
      throw ValidationError("inconsistent orientation on arc " + std::to_string(a + 1));
    }
  };
  auto set_tail = [&](int a, Port p) {
    int idx = index_of(occ[a], p);
    if (occ[a][0] == occ[a][1]) throw ValidationError("degenerate arc");
    set_head(a, occ[a][1 - idx]);
  };
  auto propagate = [&] {
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      Port h = occ[a][dir[a]], t = occ[a][1 - dir[a]];
      Port hn{h.crossing, (h.slot + 2) % 4};
      set_tail(crossings_[hn.crossing].arcs[hn.slot], hn);
      Port tp{t.crossing, (t.slot + 2) % 4};
      set_head(crossings_[tp.crossing].arcs[tp.slot], tp);
    }
  };

  if (!spec.heads.empty()) {
    if (static_cast<int>(spec.heads.size()) != num_arcs)
      throw ValidationError("orientation data has wrong length");
    for (int a = 0; a < num_arcs; ++a) {
      if (is_loop[a]) continue;
      int idx = index_of(occ[a], spec.heads[a]);
      if (idx < 0) throw ValidationError("orientation data does not match arcs");
      dir[a] = idx;
    }
  } else {
    for (int x = 0; x < nx; ++x) {
      set_head(crossings_[x].arcs[0], {x, 0});
      set_tail(crossings_[x].arcs[2], {x, 2});
    }
    propagate();
    // Components that only pass over: orient from the component list.
    auto seed = [&](const std::vector<int>& list) {
      if (list.empty() || is_loop[list[0]] || dir[list[0]] != -1) return;
      int a1 = list[0];
      if (list.size() >= 3) {
        int a2 = list[1];
        for (int i = 0; i < 2; ++i) {
          Port p = occ[a1][i];
          if (crossings_[p.crossing].arcs[(p.slot + 2) % 4] == a2) {
            set_head(a1, p);
            break;
          }
        }
        if (dir[a1] == -1) throw ValidationError("component list is not a cycle");
      } else {
        int lo = port_less(occ[a1][0], occ[a1][1]) ? 0 : 1;
        set_tail(a1, occ[a1][lo]);
      }
      propagate();
    };
    for (const auto& list : spec.components) {
      for (int a : list)
        if (a < 0 || a >= num_arcs) throw ValidationError("component lists unknown arc");
      seed(list);
    }
    for (int a = 0; a < num_arcs; ++a)
      if (!is_loop[a] && dir[a] == -1) seed({a});
  }

  head_.assign(num_arcs, Port{});
  tail_.assign(num_arcs, Port{});
  for (int a = 0; a < num_arcs; ++a) {
    if (is_loop[a]) continue;
    head_[a] = occ[a][dir[a]];
    tail_[a] = occ[a][1 - dir[a]];
  }
  for (int x = 0; x < nx; ++x) {
    const auto& arcs = crossings_[x].arcs;
    if (!(head_[arcs[0]] == Port{x, 0}) || !(tail_[arcs[2]] == Port{x, 2}))
      throw ValidationError("crossing " + std::to_string(x + 1) +
                            " does not start at its incoming under-strand");
    bool in3 = head_[arcs[3]] == Port{x, 3};
    bool in1 = head_[arcs[1]] == Port{x, 1};
    if (in1 == in3)
      throw ValidationError("inconsistent over-strand orientation at crossing " +
                            std::to_string(x + 1));
    crossings_[x].sign = in3 ? 1 : -1;
  }

  // Trace components.
  auto next_arc = [&](int a) {
    Port h = head_[a];
    return crossings_[h.crossing].arcs[(h.slot + 2) % 4];
  };
  auto trace = [&](int start) {
    std::vector<int> cyc;
    if (is_loop[start]) return std::vector<int>{start};
    int a = start;
    do {
      cyc.push_back(a);
      a = next_arc(a);
    } while (a != start);
    return cyc;
  };
  arc_component_.assign(num_arcs, -1);
  std::vector<std::vector<int>> cycles;
  if (!spec.components.empty()) {
    for (const auto& list : spec.components) {
      if (list.empty()) throw ValidationError("empty component list");
      auto cyc = trace(list[0]);
      if (std::set<int>(cyc.begin(), cyc.end()) != std::set<int>(list.begin(), list.end()))
        throw ValidationError("component list does not match the diagram's strands");
      for (int a : cyc) {
        if (arc_component_[a] != -1) throw ValidationError("arc in two components");
        arc_component_[a] = static_cast<int>(cycles.size());
      }
      cycles.push_back(cyc);
    }
    for (int a = 0; a < num_arcs; ++a)
      if (arc_component_[a] == -1) throw ValidationError("component lists do not cover all arcs");
  } else {
    for (int a = 0; a < num_arcs; ++a) {
      if (arc_component_[a] != -1) continue;
      auto cyc = trace(a);
      for (int b : cyc) arc_component_[b] = static_cast<int>(cycles.size());
      cycles.push_back(cyc);
    }
  }
  std::vector<int> colors = spec.colors;
  if (colors.empty()) {
    colors.resize(cycles.size());
    std::iota(colors.begin(), colors.end(), 1);
  }
  if (colors.size() != cycles.size())
    throw ValidationError("coloring has " + std::to_string(colors.size()) +
                          " entries for " + std::to_string(cycles.size()) + " components");
  if (compact_colors(colors) != colors)
    throw ValidationError("coloring must be onto {1..n}");
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    auto& cyc = cycles[c];
    if (!is_loop[cyc[0]]) {
      auto it = std::min_element(cyc.begin(), cyc.end(), [&](int a, int b) {
        return port_less(tail_[a], tail_[b]);
      });
      std::rotate(cyc.begin(), it, cyc.end());
    }
    components_.push_back({cyc, colors[c]});
  }
}

int LinkDiagram::num_colors() const {
  int n = 0;
  for (const auto& c : components_) n = std::max(n, c.color);
  return n;
}

std::vector<int> LinkDiagram::colors() const {
  std::vector<int> v;
  for (const auto& c : components_) v.push_back(c.color);
  return v;
}

bool LinkDiagram::is_free_loop(int component) const {
  const auto& arcs = components_[component].arcs;
  return arcs.size() == 1 && tail_[arcs[0]].crossing < 0;
}

bool LinkDiagram::has_singular() const {
  return std::any_of(crossings_.begin(), crossings_.end(),
                     [](const Crossing& c) { return c.singular; });
}

namespace {

DiagramSpec spec_of(const LinkDiagram& d) {
  DiagramSpec s;
  s.crossings = d.crossings();
  for (int c = 0; c < d.num_components(); ++c) {
    s.components.push_back(d.components()[c].arcs);
    s.colors.push_back(d.components()[c].color);
    if (d.is_free_loop(c)) s.free_loops.push_back(d.components()[c].arcs[0]);
  }
  s.heads.resize(d.num_arcs());
  for (int a = 0; a < d.num_arcs(); ++a) s.heads[a] = d.head(a);
  s.name = d.name();
  return s;
}

}  // namespace

LinkDiagram LinkDiagram::recolored(const std::vector<int>& colors) const {
  DiagramSpec s = spec_of(*this);
  s.colors = colors;
  return LinkDiagram(s);
}

// ----------------------------------------------------------------- parsing

namespace {

class Scanner {
 public:
  explicit Scanner(const std::string& s) : s_(s) {}

  void skip() {
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ';') {
        ++i_;
      } else if (c == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
  }
  bool at_end() {
    skip();
    return i_ >= s_.size();
  }
  std::size_t pos() const { return i_; }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool starts_with(const std::string& w) {
    skip();
    return s_.compare(i_, w.size(), w) == 0;
  }
  void expect(char c) {
    skip();
    if (i_ >= s_.size() || s_[i_] != c)
      throw ParseError(std::string("expected '") + c + "'", i_);
    ++i_;
  }
  void expect_word(const std::string& w) {
    if (!starts_with(w)) throw ParseError("expected '" + w + "'", i_);
    i_ += w.size();
  }
  long integer() {
    skip();
    std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == digits) throw ParseError("expected an integer", start);
    if (i_ - digits > 9) throw ParseError("integer too large", start);
    return std::stol(s_.substr(start, i_ - start));
  }
  std::vector<long> int_list() {
    std::vector<long> v;
    expect('[');
    while (peek() != ']') {
      if (at_end()) throw ParseError("unterminated list", i_);
      v.push_back(integer());
    }
    expect(']');
    return v;
  }
  std::string rest_of_line() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && s_[i_] != '\n') ++i_;
    std::string r = s_.substr(start, i_ - start);
    while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) r.pop_back();
    return r;
  }
  void advance(std::size_t n) { i_ += n; }
  char raw(std::size_t k = 0) const { return i_ + k < s_.size() ? s_[i_ + k] : '\0'; }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

struct BraidText {
  BraidWord braid;
  std::vector<int> colors;
  std::string name;
};

void parse_trailer(Scanner& sc, std::vector<int>* colors, std::string* name,
                   std::vector<std::vector<long>>* components) {
  if (sc.starts_with("colors:")) {
    sc.expect_word("colors:");
    for (long c : sc.int_list()) colors->push_back(static_cast<int>(c));
  } else if (sc.starts_with("name:")) {
    sc.expect_word("name:");
    *name = sc.rest_of_line();
  } else if (components && sc.starts_with("components:")) {
    sc.expect_word("components:");
    sc.expect('[');
    while (sc.peek() != ']') {
      if (sc.at_end()) throw ParseError("unterminated components block", sc.pos());
      components->push_back(sc.int_list());
    }
    sc.expect(']');
  } else {
    throw ParseError("unexpected token", sc.pos());
  }
}

BraidText parse_braid_text(const std::string& text) {
  Scanner sc(text);
  BraidText out;
  sc.expect_word("braid");
  sc.expect('(');
  std::size_t npos = sc.pos();
  long n = sc.integer();
  if (n < 1) throw ParseError("strand count must be positive", npos);
  sc.expect(')');
  sc.expect(':');
  out.braid.strands = static_cast<int>(n);
  bool any_marked = false;
  std::vector<bool> marks;
  while (!sc.at_end()) {
    char c = sc.peek();
    if (c == 's' || c == '-') {
      std::size_t start = sc.pos();
      int sgn = 1;
      if (c == '-') {
        sgn = -1;
        sc.advance(1);
      }
      if (sc.raw() != 's') throw ParseError("expected braid letter", sc.pos());
      sc.advance(1);
      long g = sc.integer();
      if (g < 1 || g >= n) throw ParseError("generator index out of range", start);
      bool marked = false;
      if (sc.raw() == '*') {
        marked = true;
        any_marked = true;
        sc.advance(1);
      }
      out.braid.word.push_back(sgn * static_cast<int>(g));
      marks.push_back(marked);
    } else {
      parse_trailer(sc, &out.colors, &out.name, nullptr);
    }
  }
  if (any_marked) out.braid.singular = marks;
  return out;
}

}  // namespace

BraidWord parse_braid(const std::string& text) { return parse_braid_text(text).braid; }

LinkDiagram parse_pd(const std::string& text) {
  Scanner sc(text);
  if (sc.starts_with("braid")) {
    BraidText bt = parse_braid_text(text);
    LinkDiagram d = braid_closure(bt.braid, bt.colors);
    d.set_name(bt.name);
    return d;
  }
  struct Raw {
    std::array<long, 4> arcs;
    bool singular;
  };
  std::vector<Raw> raw;
  std::vector<long> loops;
  std::vector<int> colors;
  std::vector<std::vector<long>> components;
  std::string name;
  while (!sc.at_end()) {
    char c = sc.peek();
    if ((c == 'X' || c == 'S') && sc.raw(1) == '[') {
      sc.advance(1);
      sc.expect('[');
      Raw r{{}, c == 'S'};
      for (int k = 0; k < 4; ++k) r.arcs[k] = sc.integer();
      sc.expect(']');
      raw.push_back(r);
    } else if (c == 'O' && sc.raw(1) == '[') {
      sc.advance(1);
      sc.expect('[');
      loops.push_back(sc.integer());
      sc.expect(']');
    } else {
      parse_trailer(sc, &colors, &name, &components);
    }
  }
  std::set<long> labels(loops.begin(), loops.end());
  for (const auto& r : raw) labels.insert(r.arcs.begin(), r.arcs.end());
  std::map<long, int> id;
  for (long l : labels) id.emplace(l, static_cast<int>(id.size()));
  DiagramSpec spec;
  for (const auto& r : raw) {
    Crossing x;
    for (int k = 0; k < 4; ++k) x.arcs[k] = id[r.arcs[k]];
    x.singular = r.singular;
    spec.crossings.push_back(x);
  }
  for (long l : loops) spec.free_loops.push_back(id[l]);
  for (const auto& comp : components) {
    std::vector<int> arcs;
    for (long l : comp) {
      auto it = id.find(l);
      if (it == id.end())
        throw ValidationError("component lists unknown arc " + std::to_string(l));
      arcs.push_back(it->second);
    }
    spec.components.push_back(arcs);
  }
  spec.colors = colors;
  spec.name = name;
  return LinkDiagram(spec);
}

LinkDiagram braid_closure(const BraidWord& b, const std::vector<int>& colors) {
  const int n = b.strands;
  if (n < 1) throw ValidationError("braid needs at least one strand");
  std::vector<int> pos(n);
  std::iota(pos.begin(), pos.end(), 0);
  int next = n;
  std::vector<Crossing> crossings;
  std::map<int, Port> head_of;
  for (std::size_t k = 0; k < b.word.size(); ++k) {
    int g = b.word[k];
    int i = std::abs(g) - 1;
    if (i < 0 || i + 1 >= n) throw ValidationError("braid generator out of range");
    int p = pos[i], q = pos[i + 1];
    int p2 = next++, q2 = next++;
    int x = static_cast<int>(crossings.size());
    Crossing c;
    if (g > 0) {
      c.arcs = {q, p2, q2, p};
      head_of[q] = {x, 0};
      head_of[p] = {x, 3};
    } else {
      c.arcs = {p, q, p2, q2};
      head_of[p] = {x, 0};
      head_of[q] = {x, 1};
    }
    c.singular = !b.singular.empty() && b.singular[k];
    crossings.push_back(c);
    pos[i] = q2;
    pos[i + 1] = p2;
  }
  // Identify the top of each position with its bottom.
  std::vector<int> parent(next);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int k = 0; k < n; ++k) {
    int ra = find(pos[k]), rb = find(k);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<int, int> dense;
  for (int a = 0; a < next; ++a) dense.emplace(find(a), 0);
  int counter = 0;
  for (auto& [rep, idx] : dense) idx = counter++;
  DiagramSpec spec;
  for (auto& c : crossings) {
    for (int& a : c.arcs) a = dense[find(a)];
    spec.crossings.push_back(c);
  }
  spec.heads.assign(counter, Port{});
  for (const auto& [label, port] : head_of) spec.heads[dense[find(label)]] = port;
  for (int k = 0; k < n; ++k)
    if (pos[k] == k) spec.free_loops.push_back(dense[find(k)]);
  spec.colors = colors;
  return LinkDiagram(spec);
}

std::string render_pd(const LinkDiagram& d) {
  std::ostringstream out;
  if (!d.name().empty()) out << "name: " << d.name() << "\n";
  bool first = true;
  for (const auto& c : d.crossings()) {
    out << (first ? "" : " ") << (c.singular ? "S[" : "X[") << c.arcs[0] + 1 << ","
        << c.arcs[1] + 1 << "," << c.arcs[2] + 1 << "," << c.arcs[3] + 1 << "]";
    first = false;
  }
  for (int c = 0; c < d.num_components(); ++c)
    if (d.is_free_loop(c)) {
      out << (first ? "" : " ") << "O[" << d.components()[c].arcs[0] + 1 << "]";
      first = false;
    }
  out << "\ncomponents: [";
  for (int c = 0; c < d.num_components(); ++c) {
    out << (c ? ", [" : "[");
    const auto& arcs = d.components()[c].arcs;
    for (std::size_t k = 0; k < arcs.size(); ++k) out << (k ? "," : "") << arcs[k] + 1;
    out << "]";
  }
  out << "]\ncolors: [";
  for (int c = 0; c < d.num_components(); ++c)
    out << (c ? "," : "") << d.components()[c].color;
  out << "]\n";
  return out.str();
}

// ------------------------------------------------------- simple queries

std::vector<std::vector<int>> linking_matrix(const LinkDiagram& d) {
  int m = d.num_components();
  std::vector<std::vector<int>> twice(m, std::vector<int>(m, 0));
  for (int x = 0; x < d.num_crossings(); ++x) {
    int a = d.component_at(x, 0), b = d.component_at(x, 1);
    if (a == b) continue;
    twice[a][b] += d.crossings()[x].sign;
    twice[b][a] += d.crossings()[x].sign;
  }
  for (auto& row : twice)
    for (int& v : row) v /= 2;
  return twice;
}

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (const auto& c : d.crossings()) w += c.sign;
  return w;
}

namespace {

void check_crossing(const LinkDiagram& d, int x) {
  if (x < 0 || x >= d.num_crossings())
    throw ValidationError("unknown crossing " + std::to_string(x));
}

void check_component(const LinkDiagram& d, int c) {
  if (c < 0 || c >= d.num_components())
    throw ValidationError("component index " + std::to_string(c) + " out of range");
}

// Switches crossing x in place within a spec whose heads are explicit.
void switch_in_spec(DiagramSpec& s, int x) {
  Crossing& c = s.crossings[x];
  auto old = c.arcs;
  int shift;
  if (c.sign > 0) {
    c.arcs = {old[3], old[0], old[1], old[2]};
    shift = 1;
  } else {
    c.arcs = {old[1], old[2], old[3], old[0]};
    shift = 3;
  }
  c.sign = -c.sign;
  for (auto& h : s.heads)
    if (h.crossing == x) h.slot = (h.slot + shift) % 4;
}

}  // namespace

LinkDiagram switch_crossing(const LinkDiagram& d, int crossing) {
  check_crossing(d, crossing);
  DiagramSpec s = spec_of(d);
  switch_in_spec(s, crossing);
  return LinkDiagram(s);
}

LinkDiagram resolve_singular(const LinkDiagram& d, int crossing, int sign) {
  check_crossing(d, crossing);
  if (!d.crossings()[crossing].singular)
    throw ValidationError("crossing " + std::to_string(crossing) + " is not a double point");
  DiagramSpec s = spec_of(d);
  s.crossings[crossing].singular = false;
  if (s.crossings[crossing].sign != sign) switch_in_spec(s, crossing);
  return LinkDiagram(s);
}

LinkDiagram mirror(const LinkDiagram& d) {
  DiagramSpec s = spec_of(d);
  for (int x = 0; x < d.num_crossings(); ++x) switch_in_spec(s, x);
  return LinkDiagram(s);
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  DiagramSpec s = spec_of(a);
  DiagramSpec t = spec_of(b);
  int off = a.num_arcs(), xoff = a.num_crossings(), coff = a.num_colors();
  for (auto c : t.crossings) {
    for (int& v : c.arcs) v += off;
    s.crossings.push_back(c);
  }
  for (int l : t.free_loops) s.free_loops.push_back(l + off);
  for (auto comp : t.components) {
    for (int& v : comp) v += off;
    s.components.push_back(comp);
  }
  for (int c : t.colors) s.colors.push_back(c + coff);
  for (auto h : t.heads) {
    if (h.crossing >= 0) h.crossing += xoff;
    s.heads.push_back(h);
  }
  s.name = a.name().empty() || b.name().empty() ? "" : a.name() + "+" + b.name();
  return LinkDiagram(s);
}

// ------------------------------------------------------------- port graph

namespace {

/// Mutable view of a diagram as crossings with four ports each, joined by
/// arcs. Crossings can be dissolved (strands pass straight through along
/// `through`), ports dropped, and arcs rewired; `build` then traces the new
/// strands and produces a normalized diagram.
struct PortGraph {
  int nx = 0;
  std::vector<int> link;        // port -> other end of its arc
  std::vector<char> keep;       // per crossing
  std::vector<char> singular;   // per crossing
  std::vector<int> through;     // port -> port on a dissolved crossing, -1 when dropped
  std::vector<char> out;        // orientation hint: strand leaves through this port
  std::vector<int> color;       // per port
  std::vector<int> key;         // per port: ordering key (original component)
  std::vector<int> start_order; // ports in original traversal order
  struct Loop {
    int key, color;
  };
  std::vector<Loop> loops;
  std::string name;

  explicit PortGraph(const LinkDiagram& d) : nx(d.num_crossings()) {
    link.assign(4 * nx, -1);
    keep.assign(nx, 1);
    singular.assign(nx, 0);
    through.assign(4 * nx, -1);
    out.assign(4 * nx, 0);
    color.assign(4 * nx, 0);
    key.assign(4 * nx, 0);
    name = d.name();
    for (int x = 0; x < nx; ++x) singular[x] = d.crossings()[x].singular;
    for (int c = 0; c < d.num_components(); ++c) {
      const auto& comp = d.components()[c];
      if (d.is_free_loop(c)) {
        loops.push_back({c, comp.color});
        continue;
      }
      for (int a : comp.arcs) {
        int t = port(d.tail(a)), h = port(d.head(a));
        link[t] = h;
        link[h] = t;
        out[t] = 1;
        for (int p : {t, h}) {
          color[p] = comp.color;
          key[p] = c;
        }
        start_order.push_back(t);
        start_order.push_back(h);
      }
    }
  }

  static int port(Port p) { return 4 * p.crossing + p.slot; }

  void dissolve_straight(int x) {
    keep[x] = 0;
    for (int s = 0; s < 4; ++s) through[4 * x + s] = 4 * x + (s + 2) % 4;
  }

  LinkDiagram build() const {
    std::vector<char> visited(4 * nx, 0);
    struct NewComp {
      int key;
      int color;
      std::vector<std::pair<int, int>> arcs;  // (tail port, head port); empty for loops
    };
    std::vector<NewComp> comps;
    auto trace = [&](int p) {
      NewComp nc{key[p], color[p], {}};
      int cur = p;
      do {
        visited[cur] = 1;
        nc.color = std::min(nc.color, color[cur]);
        int q = link[cur];
        while (!keep[q / 4]) {
          visited[q] = 1;
          int r = through[q];
          if (r < 0) throw DomainError("strand runs into a dropped port");
          visited[r] = 1;
          nc.color = std::min(nc.color, color[q]);
          q = link[r];
        }
        visited[q] = 1;
        nc.arcs.emplace_back(cur, q);
        cur = 4 * (q / 4) + (q % 4 + 2) % 4;
      } while (cur != p);
      comps.push_back(std::move(nc));
    };
    for (int p : start_order)
      if (keep[p / 4] && out[p] && !visited[p]) trace(p);
    for (int p : start_order)
      if (keep[p / 4] && !visited[p]) trace(p);
    for (const auto& l : loops) comps.push_back({l.key, l.color, {}});
    // Closed strands left on dissolved crossings become crossing-free loops.
    for (int p : start_order) {
      if (keep[p / 4] || visited[p] || through[p] < 0) continue;
      NewComp nc{key[p], color[p], {}};
      int u = p;
      do {
        visited[u] = 1;
        int v = through[u];
        visited[v] = 1;
        nc.key = std::min(nc.key, key[u]);
        nc.color = std::min(nc.color, color[u]);
        u = link[v];
      } while (u != p);
      comps.push_back(nc);
    }
    std::stable_sort(comps.begin(), comps.end(),
                     [](const NewComp& a, const NewComp& b) { return a.key < b.key; });

    std::vector<int> new_index(nx, -1);
    int kept = 0;
    for (int x = 0; x < nx; ++x)
      if (keep[x]) new_index[x] = kept++;
    std::vector<std::array<int, 4>> at(kept);
    std::vector<int> rot(kept, 0);
    DiagramSpec spec;
    spec.name = name;
    std::vector<int> raw_colors;
    std::vector<Port> raw_heads;
    int label = 0;
    for (const auto& nc : comps) {
      std::vector<int> arcs;
      if (nc.arcs.empty()) {
        spec.free_loops.push_back(label);
        raw_heads.push_back(Port{});
        arcs.push_back(label++);
      } else {
        for (auto [t, h] : nc.arcs) {
          at[new_index[t / 4]][t % 4] = label;
          at[new_index[h / 4]][h % 4] = label;
          if (h % 4 == 2) rot[new_index[h / 4]] = 2;
          raw_heads.push_back({new_index[h / 4], h % 4});
          arcs.push_back(label++);
        }
      }
      spec.components.push_back(arcs);
      raw_colors.push_back(nc.color);
    }
    for (int x = 0; x < nx; ++x) {
      if (!keep[x]) continue;
      int nxi = new_index[x];
      Crossing c;
      for (int k = 0; k < 4; ++k) c.arcs[k] = at[nxi][(k + rot[nxi]) % 4];
      c.singular = singular[x];
      spec.crossings.push_back(c);
    }
    for (auto& h : raw_heads)
      if (h.crossing >= 0) h.slot = (h.slot - rot[h.crossing] + 4) % 4;
    spec.heads = raw_heads;
    spec.colors = compact_colors(raw_colors);
    return LinkDiagram(spec);
  }
};

}  // namespace

LinkDiagram smooth_oriented(const LinkDiagram& d, int crossing) {
  check_crossing(d, crossing);
  PortGraph g(d);
  int b = 4 * crossing;
  int in_o = b + d.over_in_slot(crossing), out_o = b + d.over_out_slot(crossing);
  g.keep[crossing] = 0;
  g.through[b + 0] = out_o;
  g.through[out_o] = b + 0;
  g.through[in_o] = b + 2;
  g.through[b + 2] = in_o;
  return g.build();
}

LinkDiagram smooth_infinity(const LinkDiagram& d, int crossing) {
  check_crossing(d, crossing);
  PortGraph g(d);
  int b = 4 * crossing;
  int in_o = b + d.over_in_slot(crossing), out_o = b + d.over_out_slot(crossing);
  g.keep[crossing] = 0;
  g.through[b + 0] = in_o;
  g.through[in_o] = b + 0;
  g.through[b + 2] = out_o;
  g.through[out_o] = b + 2;
  return g.build();
}

LinkDiagram reverse_component(const LinkDiagram& d, int component) {
  check_component(d, component);
  PortGraph g(d);
  for (int a : d.components()[component].arcs) {
    if (d.tail(a).crossing < 0) continue;
    g.out[PortGraph::port(d.tail(a))] = 0;
    g.out[PortGraph::port(d.head(a))] = 1;
  }
  return g.build();
}

LinkDiagram restrict_components(const LinkDiagram& d, const std::vector<int>& keep) {
  std::vector<char> kept(d.num_components(), 0);
  for (int c : keep) {
    check_component(d, c);
    kept[c] = 1;
  }
  if (std::find(kept.begin(), kept.end(), 1) == kept.end())
    throw ValidationError("cannot delete every component");
  PortGraph g(d);
  for (int x = 0; x < d.num_crossings(); ++x) {
    bool ku = kept[d.component_at(x, 0)], ko = kept[d.component_at(x, 1)];
    if (ku && ko) continue;
    g.keep[x] = 0;
    for (int s = 0; s < 4; ++s) {
      bool strand_kept = (s % 2 == 0) ? ku : ko;
      g.through[4 * x + s] = strand_kept ? 4 * x + (s + 2) % 4 : -1;
    }
  }
  std::vector<int> order;
  for (int p : g.start_order)
    if (kept[g.key[p]]) order.push_back(p);
  g.start_order = order;
  std::vector<PortGraph::Loop> loops;
  for (const auto& l : g.loops)
    if (kept[l.key]) loops.push_back(l);
  g.loops = loops;
  return g.build();
}

LinkDiagram delete_component(const LinkDiagram& d, int component) {
  check_component(d, component);
  std::vector<int> keep;
  for (int c = 0; c < d.num_components(); ++c)
    if (c != component) keep.push_back(c);
  return restrict_components(d, keep);
}

LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b, int ca, int cb,
                          bool share_colors) {
  check_component(a, ca);
  check_component(b, cb);
  LinkDiagram u = disjoint_union(a, b);
  int alpha = ca, beta = a.num_components() + cb;
  int alpha_color = a.components()[ca].color;
  PortGraph g(u);
  auto recolor_b = [&](int comp, int color, int key) {
    for (int arc : u.components()[comp].arcs) {
      if (u.tail(arc).crossing < 0) continue;
      for (Port p : {u.tail(arc), u.head(arc)}) {
        g.color[PortGraph::port(p)] = color;
        g.key[PortGraph::port(p)] = key;
      }
    }
  };
  if (share_colors)
    for (int c = 0; c < b.num_components(); ++c)
      recolor_b(a.num_components() + c, b.components()[c].color, a.num_components() + c);
  for (auto& l : g.loops)
    if (share_colors && l.key >= a.num_components())
      l.color = b.components()[l.key - a.num_components()].color;
  bool alpha_loop = u.is_free_loop(alpha), beta_loop = u.is_free_loop(beta);
  auto drop_loop = [&](int key) {
    g.loops.erase(std::remove_if(g.loops.begin(), g.loops.end(),
                                 [&](const PortGraph::Loop& l) { return l.key == key; }),
                  g.loops.end());
  };
  if (beta_loop) {
    drop_loop(beta);
  } else if (alpha_loop) {
    drop_loop(alpha);
    recolor_b(beta, alpha_color, alpha);
  } else {
    recolor_b(beta, alpha_color, alpha);
    int ra = u.components()[alpha].arcs[0], rb = u.components()[beta].arcs[0];
    int ta = PortGraph::port(u.tail(ra)), ha = PortGraph::port(u.head(ra));
    int tb = PortGraph::port(u.tail(rb)), hb = PortGraph::port(u.head(rb));
    g.link[ta] = hb;
    g.link[hb] = ta;
    g.link[tb] = ha;
    g.link[ha] = tb;
  }
  // Keep traversal order by original component index.
  std::stable_sort(g.start_order.begin(), g.start_order.end(),
                   [&](int p, int q) { return g.key[p] < g.key[q]; });
  g.name = a.name().empty() || b.name().empty() ? "" : a.name() + "#" + b.name();
  return g.build();
}

// ------------------------------------------------------------ simplification

namespace {

std::optional<int> find_kink(const LinkDiagram& d) {
  for (int x = 0; x < d.num_crossings(); ++x) {
    if (d.crossings()[x].singular) continue;
    for (int s = 0; s < 4; ++s) {
      int a = d.crossings()[x].arcs[s];
      Port t = d.tail(a), h = d.head(a);
      if (t.crossing == x && h.crossing == x && (t.slot - h.slot + 4) % 2 == 1) return x;
    }
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> find_bigon(const LinkDiagram& d) {
  int nx = d.num_crossings();
  auto other_end = [&](int p) {
    int a = d.crossings()[p / 4].arcs[p % 4];
    Port t = d.tail(a), h = d.head(a);
    Port mine{p / 4, p % 4};
    Port o = (t == mine) ? h : t;
    return 4 * o.crossing + o.slot;
  };
  auto phi = [&](int p) {
    int q = other_end(p);
    return 4 * (q / 4) + (q % 4 + 1) % 4;
  };
  for (int p = 0; p < 4 * nx; ++p) {
    int q = phi(p);
    if (q == p || phi(q) != p) continue;
    int x = p / 4, y = q / 4;
    if (x == y || d.crossings()[x].singular || d.crossings()[y].singular) continue;
    int pe = other_end(p), qe = other_end(q);
    if (pe / 4 != y || qe / 4 != x) continue;
    bool p_over = p % 2, pe_over = pe % 2, q_over = q % 2, qe_over = qe % 2;
    if (p_over == pe_over && q_over == qe_over && p_over != q_over) return std::make_pair(x, y);
  }
  return std::nullopt;
}

}  // namespace

LinkDiagram simplify(const LinkDiagram& d, int* kink_sum, bool bigons) {
  LinkDiagram cur = d;
  int kinks = 0;
  while (true) {
    if (auto x = find_kink(cur)) {
      kinks += cur.crossings()[*x].sign;
      PortGraph g(cur);
      g.dissolve_straight(*x);
      cur = g.build();
      continue;
    }
    if (bigons) {
      if (auto xy = find_bigon(cur)) {
        PortGraph g(cur);
        g.dissolve_straight(xy->first);
        g.dissolve_straight(xy->second);
        cur = g.build();
        continue;
      }
    }
    break;
  }
  if (kink_sum) *kink_sum = kinks;
  cur.set_name(d.name());
  return cur;
}

// ------------------------------------------------------- pieces and codes

std::vector<std::vector<int>> split_pieces(const LinkDiagram& d) {
  int m = d.num_components();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int x = 0; x < d.num_crossings(); ++x) {
    int a = find(d.component_at(x, 0)), b = find(d.component_at(x, 1));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> groups;
  for (int c = 0; c < m; ++c) groups[find(c)].push_back(c);
  std::vector<std::vector<int>> out;
  for (auto& [r, g] : groups) out.push_back(g);
  return out;
}

bool is_split(const LinkDiagram& d) { return split_pieces(d).size() > 1; }

namespace {

std::string piece_code(const LinkDiagram& d, const std::vector<int>& piece, bool use_colors) {
  if (piece.size() == 1 && d.is_free_loop(piece[0]))
    return use_colors ? "O" + std::to_string(d.components()[piece[0]].color) : "O";
  const int na = d.num_arcs(), nx = d.num_crossings(), m = d.num_components();
  std::vector<int> label(na), xorder(nx), queued(m), arc_pos(na);
  for (int c : piece) {
    const auto& arcs = d.components()[c].arcs;
    for (std::size_t k = 0; k < arcs.size(); ++k) arc_pos[arcs[k]] = static_cast<int>(k);
  }
  std::string best;
  bool have = false;
  std::vector<int> xs;
  std::deque<std::pair<int, int>> queue;
  for (int c0 : piece) {
    for (int start : d.components()[c0].arcs) {
      std::fill(label.begin(), label.end(), -1);
      std::fill(xorder.begin(), xorder.end(), -1);
      std::fill(queued.begin(), queued.end(), 0);
      xs.clear();
      queue.clear();
      queue.emplace_back(c0, start);
      queued[c0] = 1;
      int next_label = 0;
      std::string comp_part;
      while (!queue.empty()) {
        auto [cc, sa] = queue.front();
        queue.pop_front();
        const auto& arcs = d.components()[cc].arcs;
        int len = static_cast<int>(arcs.size());
        int off = arc_pos[sa];
        for (int k = 0; k < len; ++k) {
          int a = arcs[(off + k) % len];
          label[a] = next_label++;
          Port h = d.head(a);
          if (xorder[h.crossing] == -1) {
            xorder[h.crossing] = static_cast<int>(xs.size());
            xs.push_back(h.crossing);
          }
          int other_slot = (h.slot + 1) % 4;
          int oc = d.component_at(h.crossing, other_slot);
          if (!queued[oc]) {
            queued[oc] = 1;
            int in_arc = d.crossings()[h.crossing].arcs[other_slot];
            if (!(d.head(in_arc) == Port{h.crossing, other_slot}))
              in_arc = d.crossings()[h.crossing].arcs[(other_slot + 2) % 4];
            queue.emplace_back(oc, in_arc);
          }
        }
        comp_part += "(" + std::to_string(len);
        if (use_colors) comp_part += ":" + std::to_string(d.components()[cc].color);
        comp_part += ")";
      }
      std::string code;
      code.reserve(16 * xs.size() + comp_part.size());
      for (int x : xs) {
        const auto& c = d.crossings()[x];
        code += '[';
        for (int k = 0; k < 4; ++k) {
          code += std::to_string(label[c.arcs[k]]);
          code += ',';
        }
        code += c.singular ? 's' : (c.sign > 0 ? '+' : '-');
        code += ']';
      }
      code += comp_part;
      if (!have || code < best) {
        best = std::move(code);
        have = true;
      }
    }
  }
  return best;
}

}  // namespace

std::string canonical_code(const LinkDiagram& d, bool use_colors) {
  std::vector<std::string> codes;
  for (const auto& piece : split_pieces(d)) codes.push_back(piece_code(d, piece, use_colors));
  std::sort(codes.begin(), codes.end());
  std::string out;
  for (std::size_t i = 0; i < codes.size(); ++i) out += (i ? "|" : "") + codes[i];
  return out;
}

}  // namespace linkinv
