#include "linkinv/skein.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

namespace linkinv {

std::size_t& default_skein_budget() {
  static std::size_t budget = 1'000'000;
  return budget;
}

namespace {

enum class Engine { Conway, Homfly, Dubrovnik };

const VariableList kZ = {"z"};
const VariableList kXY = {"x", "y"};

/// Write-once table shared between calls; values never change once inserted.
class MemoTable {
 public:
  std::optional<LaurentPolynomial> find(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void insert(const std::string& key, const LaurentPolynomial& value) {
    std::lock_guard<std::mutex> lock(mu_);
    table_.emplace(key, value);
  }
  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return table_.size();
  }

 private:
  mutable std::mutex mu_;
  std::map<std::string, LaurentPolynomial> table_;
};

MemoTable& shared_memo(Engine e) {
  static MemoTable tables[3];
  return tables[static_cast<int>(e)];
}

LaurentPolynomial xy_monomial(int px, int py, const Rational& c = 1) {
  return LaurentPolynomial::monomial(kXY, Exponent{px, py}, c);
}

struct Context {
  Engine engine;
  const SkeinOptions& opts;
  MemoTable* memo;
  std::size_t nodes = 0;
  std::optional<std::mt19937_64> rng;

  LaurentPolynomial zero() const { return LaurentPolynomial(engine == Engine::Conway ? kZ : kXY); }
  LaurentPolynomial one() const {
    return LaurentPolynomial::constant(engine == Engine::Conway ? kZ : kXY, 1);
  }
  LaurentPolynomial split_factor() const {
    return engine == Engine::Homfly ? homfly_loop_factor() : kauffman_loop_factor();
  }

  /// First crossing met as an under-pass when walking the components from
  /// their basepoints, or -1 for a descending diagram.
  int descent_crossing(const LinkDiagram& d) {
    int m = d.num_components();
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> start(m, 0);
    if (rng) {
      std::shuffle(order.begin(), order.end(), *rng);
      for (int c = 0; c < m; ++c)
        start[c] = static_cast<int>((*rng)() % d.components()[c].arcs.size());
    }
    std::vector<char> seen(d.num_crossings(), 0);
    for (int c : order) {
      const auto& arcs = d.components()[c].arcs;
      if (d.is_free_loop(c)) continue;
      for (std::size_t k = 0; k < arcs.size(); ++k) {
        Port h = d.head(arcs[(start[c] + k) % arcs.size()]);
        if (seen[h.crossing]) continue;
        seen[h.crossing] = 1;
        if (h.slot == 0) return h.crossing;
      }
    }
    return -1;
  }

  LaurentPolynomial base_value(const LinkDiagram& d) {
    int m = d.num_components();
    switch (engine) {
      case Engine::Conway:
        return m == 1 ? one() : zero();
      case Engine::Homfly:
        return split_factor().pow(m - 1);
      case Engine::Dubrovnik:
        return xy_monomial(writhe(d), 0) * split_factor().pow(m - 1);
    }
    return zero();
  }

  LaurentPolynomial eval(const LinkDiagram& input) {
    int kinks = 0;
    LinkDiagram d = opts.simplify ? simplify(input, &kinks) : input;
    LaurentPolynomial factor = one();
    if (engine == Engine::Dubrovnik && kinks != 0) factor = xy_monomial(kinks, 0);
    std::string key = canonical_code(d, false);
    if (auto hit = memo->find(key)) return factor * *hit;
    if (++nodes > opts.budget)
      throw ResourceLimitError("skein node budget of " + std::to_string(opts.budget) +
                               " exceeded");
    LaurentPolynomial value = compute(d);
    memo->insert(key, value);
    return factor * value;
  }

  LaurentPolynomial compute(const LinkDiagram& d) {
    auto pieces = split_pieces(d);
    if (pieces.size() > 1) {
      if (engine == Engine::Conway) return zero();
      LaurentPolynomial v = split_factor().pow(static_cast<unsigned>(pieces.size() - 1));
      for (const auto& piece : pieces) v = v * eval(restrict_components(d, piece));
      return v;
    }
    int x = descent_crossing(d);
    if (x < 0) return base_value(d);
    int sign = d.crossings()[x].sign;
    LaurentPolynomial other = eval(switch_crossing(d, x));
    LaurentPolynomial zero_res = eval(smooth_oriented(d, x));
    switch (engine) {
      case Engine::Conway: {
        LaurentPolynomial z = LaurentPolynomial::variable(kZ, 0);
        return sign > 0 ? other + z * zero_res : other - z * zero_res;
      }
      case Engine::Homfly:
        // x H+ - x^-1 H- = y H0
        return sign > 0 ? xy_monomial(-2, 0) * other + xy_monomial(-1, 1) * zero_res
                        : xy_monomial(2, 0) * other - xy_monomial(1, 1) * zero_res;
      case Engine::Dubrovnik: {
        LaurentPolynomial inf = eval(smooth_infinity(d, x));
        LaurentPolynomial t = xy_monomial(0, 1) * (zero_res - inf);
        return sign > 0 ? other + t : other - t;
      }
    }
    return zero();
  }
};

LaurentPolynomial run(Engine e, const LinkDiagram& d, const SkeinOptions& opts) {
  if (d.has_singular())
    throw ValidationError("skein engines need a diagram without marked double points");
  MemoTable local;
  Context ctx{e, opts, opts.seed ? &local : &shared_memo(e), 0, std::nullopt};
  if (opts.seed) ctx.rng.emplace(*opts.seed);
  return ctx.eval(d);
}

}  // namespace

LaurentPolynomial homfly_loop_factor() {
  return xy_monomial(1, -1) - xy_monomial(-1, -1);
}

LaurentPolynomial kauffman_loop_factor() {
  return LaurentPolynomial::constant(kXY, 1) + homfly_loop_factor();
}

LaurentPolynomial conway(const LinkDiagram& d, const SkeinOptions& opts) {
  return run(Engine::Conway, d, opts);
}

LaurentPolynomial homfly(const LinkDiagram& d, const SkeinOptions& opts) {
  return run(Engine::Homfly, d, opts);
}

LaurentPolynomial dubrovnik(const LinkDiagram& d, const SkeinOptions& opts) {
  return run(Engine::Dubrovnik, d, opts);
}

LaurentPolynomial kauffman_f(const LinkDiagram& d, const SkeinOptions& opts) {
  return xy_monomial(-writhe(d), 0) * dubrovnik(d, opts);
}

std::size_t skein_memo_size() {
  return shared_memo(Engine::Conway).size() + shared_memo(Engine::Homfly).size() +
         shared_memo(Engine::Dubrovnik).size();
}

}  // namespace linkinv
