#include "aarp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "aarp/errors.hpp"

namespace aarp {

namespace {

// Direct evaluation of a transformation on a point (no theory helpers).
Point act(const Transform& f, const Point& x) {
  Point out = x;
  if (const auto* s = std::get_if<Scaling>(&f)) {
    for (auto& v : out) v *= s->alpha;
  } else if (const auto* t = std::get_if<Translation>(&f)) {
    if (!out.empty()) out[0] += t->t;
  } else if (const auto* a = std::get_if<AffineMap>(&f)) {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a->alpha * out[k] + a->offset.at(k);
  }
  return out;
}

Transform undo(const Transform& f) {
  if (const auto* s = std::get_if<Scaling>(&f)) return Scaling{1 / s->alpha};
  if (const auto* t = std::get_if<Translation>(&f)) return Translation{-t->t};
  if (const auto* a = std::get_if<AffineMap>(&f)) {
    Point off(a->offset.size());
    for (std::size_t k = 0; k < off.size(); ++k) off[k] = -a->offset[k] / a->alpha;
    return AffineMap{1 / a->alpha, off};
  }
  if (const auto* p = std::get_if<Permutation>(&f)) {
    Permutation q{std::vector<std::size_t>(p->image.size())};
    for (std::size_t i = 0; i < p->image.size(); ++i) q.image.at(p->image[i]) = i;
    return q;
  }
  return f;
}

Bundle act_bundle(const Transform& f, const Bundle& x, const Universe& u) {
  if (const auto* p = std::get_if<Permutation>(&f)) {
    if (!x.index || *x.index >= p->image.size()) throw InvalidData("permutation applied outside the universe");
    return u.bundle(p->image[*x.index]);
  }
  if (std::holds_alternative<Identity>(f)) return x;
  return u.bundle(act(f, x.point));
}

// Order used by the ordered-consistency flag.
bool at_most(const Transform& f, const Transform& g) {
  auto param = [](const Transform& h) -> std::optional<Rational> {
    if (const auto* s = std::get_if<Scaling>(&h)) return s->alpha;
    if (const auto* t = std::get_if<Translation>(&h)) return t->t;
    return std::nullopt;
  };
  const auto a = param(f), b = param(g);
  if (a && b) return *a <= *b;
  return f == g;  // identity-only theories are trivially ordered
}

// Images of every universe index under every theory element.
std::vector<std::vector<std::size_t>> image_table(const Theory& theory, const Universe& u) {
  std::vector<std::vector<std::size_t>> table;
  for (const auto& f : theory.elements()) {
    std::vector<std::size_t> row;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const Bundle b = act_bundle(f, u.bundle(i), u);
      if (!b.index) throw OrbitEscape("oracle: theory element maps " + u.name(i) + " outside the universe");
      row.push_back(*b.index);
    }
    table.push_back(std::move(row));
  }
  return table;
}

std::vector<std::size_t> budget_members(const DataSet& d, std::size_t i) {
  if (!d[i].budget.is_explicit()) throw InvalidData("oracle needs explicit budgets");
  return d[i].budget.as_explicit().members;
}

std::size_t checked_size(const DataSet& d, std::size_t cap, std::vector<std::string>& notes) {
  if (cap > 5) throw CapExceeded("oracle cap is at most 5 alternatives");
  const std::size_t n = d.universe().size();
  if (n > cap) throw CapExceeded("oracle: universe of " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
  if (n == 5) notes.push_back("warning: 5 alternatives means about one million candidate relations");
  return n;
}

struct Enumerator {
  std::size_t n;
  std::vector<Pair> off;

  explicit Enumerator(std::size_t size) : n(size) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (x != y) off.emplace_back(x, y);
  }
  std::uint64_t count() const { return std::uint64_t{1} << off.size(); }
  Relation make(std::uint64_t mask) const {
    Relation r = Relation::diagonal(n);
    for (std::size_t b = 0; b < off.size(); ++b)
      if (mask >> b & 1) r.insert(off[b].first, off[b].second);
    return r;
  }
};

bool complete(const Relation& r) {
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = 0; y < r.size(); ++y)
      if (!r.contains(x, y) && !r.contains(y, x)) return false;
  return true;
}

bool transitive(const Relation& r) {
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!r.contains(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (r.contains(y, z) && !r.contains(x, z)) return false;
    }
  return true;
}

bool consistent(const Relation& r, const std::vector<std::vector<std::size_t>>& images) {
  const std::size_t n = r.size();
  for (const auto& img : images)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (r.contains(x, y) && !r.contains(img[x], img[y])) return false;
  return true;
}

bool ordered_consistent(const Relation& r, const Theory& theory, const std::vector<std::vector<std::size_t>>& images) {
  const auto& el = theory.elements();
  const std::size_t n = r.size();
  for (std::size_t a = 0; a < el.size(); ++a)
    for (std::size_t b = 0; b < el.size(); ++b) {
      if (!at_most(el[b], el[a])) continue;  // g = el[a] ≥ f = el[b]
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (r.contains(x, y) && !r.contains(images[a][x], images[b][y])) return false;
    }
  return true;
}

bool strictly(const Relation& r, std::size_t x, std::size_t y) { return r.contains(x, y) && !r.contains(y, x); }

}  // namespace

std::vector<std::size_t> maximal_points(const Relation& r, const std::vector<std::size_t>& budget) {
  std::vector<std::size_t> out;
  for (auto x : budget) {
    bool best = true;
    for (auto y : budget)
      if (!r.contains(x, y) || strictly(r, y, x)) best = false;
    if (best) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool check_maximality(const Relation& r, const std::vector<std::size_t>& budget, std::vector<std::size_t> chosen) {
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  return maximal_points(r, budget) == chosen;
}

bool generates_choice(const Relation& r, const std::vector<std::size_t>& budget, const std::vector<std::size_t>& chosen,
                      bool strict) {
  if (!check_maximality(r, budget, chosen)) return false;
  if (!strict) return true;
  for (auto y : budget) {
    if (std::find(chosen.begin(), chosen.end(), y) != chosen.end()) continue;
    for (auto x : chosen)
      if (!strictly(r, x, y)) return false;
  }
  return true;
}

OracleResult brute_force_rationalizable(const DataSet& d, const Theory& theory, const OracleFlags& flags,
                                        std::size_t cap) {
  OracleResult result;
  const std::size_t n = checked_size(d, cap, result.notes);
  const auto images = image_table(theory, d.universe());
  std::vector<std::vector<std::size_t>> budgets;
  for (std::size_t i = 0; i < d.size(); ++i) budgets.push_back(budget_members(d, i));
  const Enumerator e(n);
  for (std::uint64_t mask = 0; mask < e.count(); ++mask) {
    const Relation r = e.make(mask);
    if (flags.require_complete && !complete(r)) continue;
    if (flags.require_transitive && !transitive(r)) continue;
    if (!consistent(r, images)) continue;
    if (flags.ordered_consistency && !ordered_consistent(r, theory, images)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < d.size() && ok; ++i) ok = generates_choice(r, budgets[i], d[i].chosen, flags.strict_rejection);
    if (!ok) continue;
    result.rationalizable = true;
    result.certificate = r;
    return result;
  }
  return result;
}

// ---------------------------------------------------------------------------

std::vector<SimpleCycle> enumerate_simple_cycles(const std::vector<std::vector<OracleWeight>>& weights,
                                                 CycleMode mode) {
  const std::size_t n = weights.size();
  if (n > 8) throw CapExceeded("simple-cycle enumeration is limited to 8 nodes");
  std::vector<SimpleCycle> out;
  std::vector<std::size_t> path;
  std::vector<bool> used(n, false);
  auto emit = [&]() {
    SimpleCycle c;
    c.nodes = path;
    c.aggregate = mode == CycleMode::Product ? 1 : 0;
    for (std::size_t k = 0; k < path.size(); ++k) {
      const auto& w = weights[path[k]][path[(k + 1) % path.size()]];
      if (w.infinite) c.unbounded = true;
      else if (mode == CycleMode::Product) c.aggregate *= w.value;
      else c.aggregate += w.value;
    }
    out.push_back(std::move(c));
  };
  // Cycles through `start` whose other nodes are all larger than it.
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t start, std::size_t v) {
    if (weights[v][start].present) emit();
    for (std::size_t w = start + 1; w < n; ++w) {
      if (used[w] || !weights[v][w].present) continue;
      used[w] = true;
      path.push_back(w);
      extend(start, w);
      path.pop_back();
      used[w] = false;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, false);
    used[s] = true;
    extend(s, s);
  }
  return out;
}

namespace {

struct CycleOracleSpec {
  CycleMode mode;
  std::function<OracleWeight(const LinearBudget&, const Point&)> weight;
};

bool cycle_violation(const DataSet& d, const CycleOracleSpec& spec) {
  const auto& u = d.universe();
  std::vector<std::pair<std::size_t, std::size_t>> nodes;  // (observation, chosen alternative)
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i].budget.is_linear()) throw InvalidData("cycle oracle needs linear budgets");
    for (auto c : d[i].chosen) nodes.emplace_back(i, c);
  }
  const std::size_t n = nodes.size();
  std::vector<std::vector<OracleWeight>> w(n, std::vector<OracleWeight>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      w[a][b] = spec.weight(d[nodes[a].first].budget.as_linear(), u[nodes[b].second].point);
  const bool product = spec.mode == CycleMode::Product;
  for (const auto& c : enumerate_simple_cycles(w, spec.mode)) {
    if (c.unbounded) return true;
    if (product ? c.aggregate > 1 : c.aggregate > 0) return true;
    if (c.aggregate != (product ? 1 : 0)) continue;
    // Boundary: the landing is pinned by the closing edge of each rotation.
    const std::size_t len = c.nodes.size();
    if (len == 1) continue;  // the landing is the chosen point itself
    for (std::size_t r = 0; r < len; ++r) {
      const std::size_t first = c.nodes[r], last = c.nodes[(r + len - 1) % len];
      const Point& x1 = u[nodes[first].second].point;
      const Rational& close = w[last][first].value;
      Point land = x1;
      if (product) {
        for (auto& v : land) v *= close;
      } else {
        land[0] += close;
      }
      if (d[nodes[last].first].strictly_unchosen(u.bundle(land))) return true;
    }
  }
  return false;
}

}  // namespace

bool harp_violation_oracle(const DataSet& d) {
  CycleOracleSpec spec{CycleMode::Product, [](const LinearBudget& b, const Point& x) {
                         Rational cost = 0;
                         for (std::size_t k = 0; k < x.size(); ++k) cost += b.prices[k] * x[k];
                         OracleWeight w;
                         if (cost <= 0) w.infinite = true;
                         else w.value = b.income / cost;
                         return w;
                       }};
  return cycle_violation(d, spec);
}

bool qarp_violation_oracle(const DataSet& d) {
  CycleOracleSpec spec{CycleMode::Sum, [](const LinearBudget& b, const Point& x) {
                         Rational cost = 0;
                         for (std::size_t k = 0; k < x.size(); ++k) cost += b.prices[k] * x[k];
                         OracleWeight w;
                         w.value = (b.income - cost) / b.prices.at(0);
                         return w;
                       }};
  return cycle_violation(d, spec);
}

// ---------------------------------------------------------------------------

OracleResult sequential_oracle(const DataSet& d, const Theory& g1, const Theory& g2, std::size_t cap) {
  OracleResult result;
  const std::size_t n = checked_size(d, cap, result.notes);
  const auto img1 = image_table(g1, d.universe());
  const auto img2 = image_table(g2, d.universe());
  std::vector<std::vector<std::size_t>> budgets;
  for (std::size_t i = 0; i < d.size(); ++i) budgets.push_back(budget_members(d, i));
  const Enumerator e(n);

  std::vector<Relation> second;
  for (std::uint64_t mask = 0; mask < e.count(); ++mask) {
    Relation r = e.make(mask);
    if (complete(r) && transitive(r) && consistent(r, img2) && ordered_consistent(r, g2, img2))
      second.push_back(std::move(r));
  }
  std::set<std::vector<std::vector<std::size_t>>> tried;
  for (std::uint64_t mask = 0; mask < e.count(); ++mask) {
    const Relation r1 = e.make(mask);
    if (!complete(r1) || !consistent(r1, img1)) continue;
    std::vector<std::vector<std::size_t>> gamma;
    bool valid = true;
    for (const auto& b : budgets) {
      gamma.push_back(maximal_points(r1, b));
      valid = valid && generates_choice(r1, b, gamma.back(), true);
    }
    if (!valid || !tried.insert(gamma).second) continue;
    for (const auto& r2 : second) {
      bool ok = true;
      for (std::size_t i = 0; i < d.size() && ok; ++i) ok = generates_choice(r2, gamma[i], d[i].chosen, true);
      if (!ok) continue;
      result.rationalizable = true;
      result.certificate = r2;
      return result;
    }
  }
  return result;
}

OracleResult good_enough_oracle(const DataSet& d, const Theory& g, std::size_t k, std::size_t cap) {
  OracleResult result;
  const std::size_t n = checked_size(d, cap, result.notes);
  const auto images = image_table(g, d.universe());
  std::vector<std::vector<std::size_t>> budgets;
  for (std::size_t i = 0; i < d.size(); ++i) budgets.push_back(budget_members(d, i));
  const Enumerator e(n);
  for (std::uint64_t mask = 0; mask < e.count(); ++mask) {
    const Relation r = e.make(mask);
    if (!complete(r) || !transitive(r) || !consistent(r, images)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < d.size() && ok; ++i) {
      const auto& chosen = d[i].chosen;
      for (auto a : chosen)
        for (auto b : chosen)
          if (!r.contains(a, b)) ok = false;
      std::size_t above = 0;
      for (auto y : budgets[i])
        if (r.contains(y, chosen.front())) ++above;
      if (above > k) ok = false;
    }
    if (!ok) continue;
    result.rationalizable = true;
    result.certificate = r;
    return result;
  }
  return result;
}

// ---------------------------------------------------------------------------

ReplayResult replay_witness(const DataSet& d, const Witness& w) {
  const auto& u = d.universe();
  const std::size_t n = w.observations.size();
  if (n < 1 || w.chosen.size() != n || w.transforms.size() + 1 != n)
    return {false, "witness sequences have inconsistent lengths"};
  for (auto i : w.observations)
    if (i >= d.size()) return {false, "observation index out of range"};
  for (std::size_t j = 0; j < n; ++j)
    if (!d[w.observations[j]].is_chosen(w.chosen[j]))
      return {false, "bundle " + std::to_string(j) + " is not chosen at its observation"};
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const Bundle moved = act_bundle(w.transforms[j], w.chosen[j + 1], u);
    if (!d[w.observations[j]].budget.contains(moved))
      return {false, "transformed bundle " + std::to_string(j + 1) + " is outside budget " + std::to_string(j)};
  }
  Bundle landing = w.chosen.front();
  for (const auto& f : w.transforms) landing = act_bundle(undo(f), landing, u);
  if (!(landing == w.landing)) return {false, "recorded landing differs from the replayed one"};
  if (!d[w.observations.back()].strictly_unchosen(landing))
    return {false, "landing is not an unchosen member of the last budget"};
  return {true, ""};
}

AuditResult audit_certificate(const Relation& r, const DataSet& d, const Theory& theory, bool require_transitive,
                              bool require_complete) {
  AuditResult out;
  const auto& u = d.universe();
  const std::size_t n = u.size();
  if (r.size() != n) {
    out.failures.push_back("relation size differs from the universe");
    return out;
  }
  if (require_complete && !complete(r)) out.failures.push_back("not complete");
  if (require_transitive && !transitive(r)) out.failures.push_back("not transitive");
  if (theory.enumerable()) {
    for (const auto& f : theory.elements()) {
      std::vector<std::optional<std::size_t>> img(n);
      for (std::size_t x = 0; x < n; ++x) img[x] = act_bundle(f, u.bundle(x), u).index;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (r.contains(x, y) && img[x] && img[y] && !r.contains(*img[x], *img[y]))
            out.failures.push_back("not consistent: (" + u.name(x) + ", " + u.name(y) + ") under " + to_string(f));
    }
  }
  // R_E ⊆ R with every strict revealed pair kept strict.
  Relation re = Relation::diagonal(n);
  for (const auto& obs : d.observations()) {
    const auto members = obs.budget.members(u);
    for (auto c : obs.chosen)
      for (auto y : members) re.insert(c, y);
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (re.contains(x, y) && !r.contains(x, y)) out.failures.push_back("misses revealed pair (" + u.name(x) + ", " + u.name(y) + ")");
      if (strictly(re, x, y) && !strictly(r, x, y))
        out.failures.push_back("loses strict revealed pair (" + u.name(x) + ", " + u.name(y) + ")");
    }
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i].budget.is_explicit() && !check_maximality(r, d[i].budget.as_explicit().members, d[i].chosen))
      out.failures.push_back("observation " + std::to_string(i) + ": chosen set is not max(B, R)");
  return out;
}

}  // namespace aarp
