#include "aarp/axioms.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "aarp/errors.hpp"

namespace aarp {

namespace {

Rational half_power(std::size_t k) {
  Rational r(1);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  return r;
}

struct ChosenRef {
  std::size_t obs;
  std::size_t alt;
};

std::vector<ChosenRef> chosen_refs(const DataSet& d) {
  std::vector<ChosenRef> out;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (auto c : d[i].chosen) out.push_back({i, c});
  return out;
}

Verdict violation(std::string axiom, Witness w) {
  Verdict v;
  v.axiom = std::move(axiom);
  v.pass = false;
  v.witness = std::move(w);
  return v;
}

Verdict passed(std::string axiom) {
  Verdict v;
  v.axiom = std::move(axiom);
  return v;
}

// ---------------------------------------------------------------------------
// Parameter sets for one-parameter theories (scaling alpha > 0, translation t).

struct Interval {
  std::optional<Rational> lo, hi;
  bool lo_closed = true, hi_closed = true;
  bool empty_set = false;

  bool contains(const Rational& v) const {
    if (empty_set) return false;
    if (lo && (lo_closed ? v < *lo : v <= *lo)) return false;
    if (hi && (hi_closed ? v > *hi : v >= *hi)) return false;
    return true;
  }

  bool empty() const {
    if (empty_set) return true;
    if (lo && hi) {
      if (*lo > *hi) return true;
      if (*lo == *hi && !(lo_closed && hi_closed)) return true;
    }
    return false;
  }

  Interval intersect(const Interval& o) const {
    Interval r = *this;
    r.empty_set = empty_set || o.empty_set;
    if (o.lo && (!r.lo || *o.lo > *r.lo || (*o.lo == *r.lo && !o.lo_closed))) {
      r.lo = o.lo;
      r.lo_closed = o.lo_closed;
    }
    if (o.hi && (!r.hi || *o.hi < *r.hi || (*o.hi == *r.hi && !o.hi_closed))) {
      r.hi = o.hi;
      r.hi_closed = o.hi_closed;
    }
    return r;
  }

  // Up to `count` distinct members, boundary points first.
  std::vector<Rational> samples(std::size_t count) const {
    std::vector<Rational> out;
    if (empty()) return out;
    auto push = [&](const Rational& v) {
      if (out.size() < count && contains(v) && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    };
    if (hi && hi_closed) push(*hi);
    if (lo && lo_closed) push(*lo);
    for (std::size_t k = 1; out.size() < count && k < 4 * count + 8; ++k) {
      const Rational step = half_power(k);
      if (lo && hi) {
        push(*lo + (*hi - *lo) * step);
      } else if (hi) {
        // (lo = 0 open for scaling is always explicit, so this is translation.)
        push(*hi - Rational(static_cast<long>(k)));
      } else if (lo) {
        push(*lo + Rational(static_cast<long>(k)));
      } else {
        push(Rational(static_cast<long>(k / 2)) * ((k % 2) ? 1 : -1));
      }
    }
    return out;
  }
};

Interval all_params(TheoryKind kind) {
  Interval i;
  if (kind == TheoryKind::Scaling) {
    i.lo = Rational(0);
    i.lo_closed = false;
  }
  return i;
}

Interval nothing() {
  Interval i;
  i.empty_set = true;
  return i;
}

Transform make_param(TheoryKind kind, const Rational& v) {
  if (kind == TheoryKind::Scaling) return Scaling{v};
  return Translation{v};
}

// {v : f_v(x) ∈ budget} for a linear budget.
Interval forward_params(TheoryKind kind, const Point& x, const LinearBudget& b) {
  Interval i = all_params(kind);
  const Rational spent = dot(b.prices, x);
  if (kind == TheoryKind::Scaling) {
    if (spent > 0) i.hi = b.income / spent;
    return i;
  }
  const Rational& p1 = b.prices[0];
  if (p1 > 0) {
    i.hi = (b.income - spent) / p1;
    return i;
  }
  return spent <= b.income ? i : nothing();
}

// {v : f_v⁻¹(x) ∈ budget} for a linear budget.
Interval backward_params(TheoryKind kind, const Point& x, const LinearBudget& b) {
  Interval i = all_params(kind);
  const Rational spent = dot(b.prices, x);
  if (kind == TheoryKind::Scaling) {
    if (spent > 0) i.lo = spent / b.income;  // closed
    return i;
  }
  const Rational& p1 = b.prices[0];
  if (p1 > 0) {
    i.lo = (spent - b.income) / p1;
    return i;
  }
  return spent <= b.income ? i : nothing();
}

// Parameters v with f_v(x) = target for some target in an explicit budget;
// nullopt means "every parameter" (a fixed point of the whole group).
std::optional<std::vector<Rational>> explicit_params(const Theory& theory, const Bundle& x,
                                                     const std::vector<std::size_t>& targets, const Universe& u) {
  std::vector<Rational> out;
  for (auto t : targets) {
    const auto sol = theory.solve(x.point, u[t].point);
    if (sol.kind == ParamSolution::Kind::Any) return std::nullopt;
    if (sol.kind == ParamSolution::Kind::Unique) out.push_back(sol.value);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Witness> waarp_pair_parametric(const DataSet& d, const Theory& theory, const ChosenRef& ri,
                                             const ChosenRef& rj) {
  const auto& u = d.universe();
  const auto kind = theory.kind();
  const Bundle xi = u.bundle(ri.alt);
  const Bundle xj = u.bundle(rj.alt);
  const auto& bi = d[ri.obs];
  const auto& bj = d[rj.obs];

  // Candidate parameters: finite list when either budget is explicit, else an interval.
  std::optional<std::vector<Rational>> finite;
  Interval range = all_params(kind);
  auto restrict_finite = [&](std::optional<std::vector<Rational>> values) {
    if (!values) return;
    if (!finite) {
      finite = std::move(values);
      return;
    }
    std::vector<Rational> keep;
    for (const auto& v : *finite)
      if (std::binary_search(values->begin(), values->end(), v)) keep.push_back(v);
    finite = std::move(keep);
  };
  if (bj.budget.is_explicit()) {
    restrict_finite(explicit_params(theory, xi, bj.budget.as_explicit().members, u));
  } else {
    range = range.intersect(forward_params(kind, xi.point, bj.budget.as_linear()));
  }
  if (bi.budget.is_explicit()) {
    // f⁻¹(xj) = b ⇔ f(b) = xj, for unchosen members b.
    std::vector<Rational> values;
    bool any = false;
    for (auto b : bi.budget.as_explicit().members) {
      if (bi.is_chosen(u.bundle(b))) continue;
      const auto sol = theory.solve(u[b].point, xj.point);
      if (sol.kind == ParamSolution::Kind::Any) any = true;
      if (sol.kind == ParamSolution::Kind::Unique) values.push_back(sol.value);
    }
    if (!any) {
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
      restrict_finite(std::move(values));
    }
  } else {
    range = range.intersect(backward_params(kind, xj.point, bi.budget.as_linear()));
  }

  std::vector<Rational> candidates;
  if (finite) {
    for (const auto& v : *finite)
      if (range.contains(v)) candidates.push_back(v);
  } else {
    candidates = range.samples(bi.chosen.size() + 2);
  }
  for (const auto& v : candidates) {
    const Transform f = make_param(kind, v);
    const Bundle fx = theory.apply(f, xi, u);
    const Bundle landing = theory.apply(inverse(f), xj, u);
    if (bj.budget.contains(fx) && bi.strictly_unchosen(landing)) {
      return Witness{{rj.obs, ri.obs}, {xj, xi}, {f}, landing, {}};
    }
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------

Verdict check_waarp(const DataSet& d, const Theory& theory) {
  const auto& u = d.universe();
  if (d.size() > 0) theory.check_compatible(u);
  const auto refs = chosen_refs(d);
  if (theory.enumerable()) {
    const auto& elements = theory.elements();
    for (const auto& ri : refs)
      for (const auto& rj : refs)
        for (const auto& f : elements) {
          const Bundle xi = u.bundle(ri.alt);
          if (!d[rj.obs].budget.contains(theory.apply(f, xi, u))) continue;
          const Bundle xj = u.bundle(rj.alt);
          const Bundle landing = theory.apply(inverse(f), xj, u);
          if (d[ri.obs].strictly_unchosen(landing)) {
            return violation("waarp", Witness{{rj.obs, ri.obs}, {xj, xi}, {f}, landing, {}});
          }
        }
    return passed("waarp");
  }
  for (const auto& ri : refs)
    for (const auto& rj : refs)
      if (auto w = waarp_pair_parametric(d, theory, ri, rj)) return violation("waarp", std::move(*w));
  return passed("waarp");
}

Verdict check_saarp_generic(const DataSet& d, const Theory& theory, const SearchLimits& limits) {
  const auto& u = d.universe();
  if (d.size() > 0) theory.check_compatible(u);
  const auto& elements = theory.elements();
  const bool group = theory.closed_under_composition();
  Verdict verdict = passed("saarp");

  struct State {
    std::size_t obs;
    Transform acc;
    std::size_t parent;
    std::size_t via;  // index into elements of the edge into this state
    Bundle chosen;
  };
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  for (const auto& start : chosen_refs(d)) {
    const Bundle x1 = u.bundle(start.alt);
    std::vector<State> states{{start.obs, theory.identity(), kNone, kNone, x1}};
    std::set<std::pair<std::size_t, std::string>> seen{{start.obs, key(states.front().acc)}};
    for (std::size_t head = 0; head < states.size(); ++head) {
      const State cur = states[head];
      const Bundle landing = theory.apply(inverse(cur.acc), x1, u);
      if (d[cur.obs].strictly_unchosen(landing)) {
        Witness w;
        w.landing = landing;
        for (std::size_t s = head; s != kNone; s = states[s].parent) {
          w.observations.push_back(states[s].obs);
          w.chosen.push_back(states[s].chosen);
          if (states[s].via != kNone) w.transforms.push_back(elements[states[s].via]);
        }
        std::reverse(w.observations.begin(), w.observations.end());
        std::reverse(w.chosen.begin(), w.chosen.end());
        std::reverse(w.transforms.begin(), w.transforms.end());
        return violation("saarp", std::move(w));
      }
      const auto& budget = d[cur.obs].budget;
      for (std::size_t j = 0; j < d.size(); ++j)
        for (std::size_t k = 0; k < elements.size(); ++k) {
          const auto& f = elements[k];
          std::optional<Bundle> next;
          for (auto c : d[j].chosen) {
            const Bundle xc = u.bundle(c);
            if (budget.contains(theory.apply(f, xc, u))) {
              next = xc;
              break;
            }
          }
          if (!next) continue;
          Transform acc = compose(cur.acc, f);
          if (!seen.insert({j, key(acc)}).second) continue;
          if (states.size() >= limits.max_states) {
            verdict.exhaustive = false;
            continue;
          }
          states.push_back({j, std::move(acc), head, k, *next});
        }
    }
  }
  if (!group) {
    verdict.notes.push_back("element list is not closed under composition; accumulated products were searched directly");
  }
  if (!verdict.exhaustive) verdict.notes.push_back("state cap reached; pass is conservative");
  return verdict;
}

// ---------------------------------------------------------------------------

Verdict check_sarp(const DataSet& d) {
  const auto& u = d.universe();
  const std::size_t m = d.size();
  // edge i→j: some x ∈ C(Bj) lies in Bi; strict when it lies in Bi ∖ C(Bi).
  std::vector<std::vector<std::optional<std::size_t>>> edge(m, std::vector<std::optional<std::size_t>>(m));
  std::vector<std::vector<std::optional<std::size_t>>> strict(m, std::vector<std::optional<std::size_t>>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (auto c : d[j].chosen) {
        const Bundle x = u.bundle(c);
        if (!d[i].budget.contains(x)) continue;
        if (!edge[i][j]) edge[i][j] = c;
        if (!strict[i][j] && !d[i].is_chosen(x)) strict[i][j] = c;
      }

  // Tarjan's strongly connected components.
  std::vector<std::size_t> index(m, 0), low(m, 0), comp(m, 0);
  std::vector<bool> visited(m, false), on_stack(m, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0, components = 0;
  std::function<void(std::size_t)> connect = [&](std::size_t v) {
    visited[v] = true;
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < m; ++w) {
      if (!edge[v][w]) continue;
      if (!visited[w]) {
        connect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = components;
      } while (w != v);
      ++components;
    }
  };
  for (std::size_t v = 0; v < m; ++v)
    if (!visited[v]) connect(v);

  for (std::size_t first = 0; first < m; ++first)
    for (std::size_t last = 0; last < m; ++last) {
      // Closing edge last → first must be strict; first must reach last.
      if (!strict[last][first] || comp[last] != comp[first]) continue;
      std::vector<std::size_t> parent(m, m);
      std::deque<std::size_t> queue{first};
      parent[first] = first;
      while (!queue.empty() && parent[last] == m) {
        const auto v = queue.front();
        queue.pop_front();
        for (std::size_t w = 0; w < m; ++w)
          if (edge[v][w] && parent[w] == m) {
            parent[w] = v;
            queue.push_back(w);
          }
      }
      std::vector<std::size_t> path{last};
      while (path.back() != first) path.push_back(parent[path.back()]);
      std::reverse(path.begin(), path.end());
      Witness w;
      w.observations = path;
      w.chosen.push_back(u.bundle(*strict[last][first]));
      for (std::size_t k = 1; k < path.size(); ++k) {
        w.chosen.push_back(u.bundle(*edge[path[k - 1]][path[k]]));
        w.transforms.push_back(Identity{});
      }
      w.landing = w.chosen.front();
      return violation("sarp", std::move(w));
    }
  return passed("sarp");
}

// ---------------------------------------------------------------------------
// HARP / QARP: all-pairs extremal path dynamic programs over exact rationals.

namespace {

/// Nonnegative extended rational (maximal scalings may be unbounded).
struct Weight {
  bool infinite = false;
  Rational value;

  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
};

struct CycleProblem {
  // Nodes are (observation, chosen alternative) pairs.
  std::vector<ChosenRef> nodes;
  std::vector<std::vector<Weight>> w;
  bool product = true;  // product of scalings, else sum of shifts
};

Weight combine(const CycleProblem& p, const Weight& a, const Weight& b) {
  if (a.infinite || b.infinite) return {true, 0};
  return {false, p.product ? Rational(a.value * b.value) : Rational(a.value + b.value)};
}

const Rational& neutral(const CycleProblem& p) {
  static const Rational one(1), zero(0);
  return p.product ? one : zero;
}

bool exceeds_neutral(const CycleProblem& p, const Weight& a) { return a.infinite || a.value > neutral(p); }

struct PathTable {
  std::vector<std::vector<Weight>> best;
  std::vector<std::vector<std::size_t>> via;  // intermediate node, or n for a direct edge
};

// Expands the best path i → j recorded in the table into its node sequence (without j).
void unroll(const PathTable& t, std::size_t i, std::size_t j, std::vector<std::size_t>& out) {
  const std::size_t k = t.via[i][j];
  if (k == t.via.size()) {
    out.push_back(i);
    return;
  }
  unroll(t, i, k, out);
  unroll(t, k, j, out);
}

/// Closed walk (as node list, closing edge back to the front) with aggregate
/// above neutral, if any; otherwise fills `table` with extremal path values.
std::optional<std::vector<std::size_t>> positive_cycle(const CycleProblem& p, PathTable& table) {
  const std::size_t n = p.nodes.size();
  table.best = p.w;
  table.via.assign(n, std::vector<std::size_t>(n, n));
  for (std::size_t i = 0; i < n; ++i)
    if (exceeds_neutral(p, p.w[i][i])) return std::vector<std::size_t>{i, i};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Weight cand = combine(p, table.best[i][k], table.best[k][j]);
        if (!(table.best[i][j] < cand)) continue;
        if (i == j && exceeds_neutral(p, cand)) {
          std::vector<std::size_t> walk;
          unroll(table, i, k, walk);
          unroll(table, k, i, walk);
          return walk;
        }
        table.best[i][j] = cand;
        table.via[i][j] = k;
      }
  return std::nullopt;
}

std::vector<std::size_t> rotate_to_min(std::vector<std::size_t> walk) {
  auto it = std::min_element(walk.begin(), walk.end());
  std::rotate(walk.begin(), it, walk.end());
  if (walk.size() == 1) walk.push_back(walk.front());
  return walk;
}

}  // namespace

namespace {

struct LinearCycleSpec {
  std::string axiom;
  bool product;
  // edge weight for budget of `from` and chosen point of `to`
  std::function<Weight(const LinearBudget&, const Point&)> weight;
  // landing of x1 after the path aggregate `agg` (as a transformation inverse)
  std::function<Point(const Point&, const Rational&)> landing;
  std::function<Transform(const Rational&)> element;
};

Verdict linear_cycle_check(const DataSet& d, const LinearCycleSpec& spec) {
  const auto& u = d.universe();
  CycleProblem p;
  p.product = spec.product;
  p.nodes = chosen_refs(d);
  const std::size_t n = p.nodes.size();
  p.w.assign(n, std::vector<Weight>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      p.w[a][b] = spec.weight(d[p.nodes[a].obs].budget.as_linear(), u[p.nodes[b].alt].point);

  // Builds the witness for a closed walk v1..vL (closing edge vL → v1) whose
  // path aggregate may be anything in [lower, upper].
  auto build = [&](const std::vector<std::size_t>& walk) -> std::optional<Witness> {
    const std::size_t len = walk.size();
    const Point& x1 = u[p.nodes[walk.front()].alt].point;
    const auto& last = d[p.nodes[walk.back()].obs];
    const Weight close = p.w[walk.back()][walk.front()];
    std::vector<Weight> path;
    for (std::size_t k = 0; k + 1 < len; ++k) path.push_back(p.w[walk[k]][walk[k + 1]]);
    Weight upper{false, neutral(p)};
    for (const auto& e : path) upper = combine(p, upper, e);
    // Aggregate range keeping the landing affordable in the last budget.
    std::optional<Rational> lower;
    if (!close.infinite) lower = p.product ? Rational(1 / close.value) : Rational(-close.value);
    std::vector<Rational> candidates;
    if (!upper.infinite) candidates.push_back(upper.value);
    for (std::size_t k = 1; candidates.size() < last.chosen.size() + 3 && k < 64; ++k) {
      if (lower && !upper.infinite) {
        candidates.push_back(*lower + (upper.value - *lower) * half_power(k));
      } else if (lower) {
        candidates.push_back(p.product ? Rational(*lower * (k + 1)) : Rational(*lower + k));
      } else if (!upper.infinite) {
        candidates.push_back(p.product ? Rational(upper.value / (k + 1)) : Rational(upper.value - k));
      } else {
        candidates.push_back(Rational(static_cast<long>(k)));
      }
    }
    for (const auto& agg : candidates) {
      if (p.product && agg <= 0) continue;
      const Point land = spec.landing(x1, agg);
      const Bundle landing = u.bundle(land);
      if (!last.strictly_unchosen(landing)) continue;
      // Realise the aggregate with per-edge parameters not above their maxima.
      std::vector<Rational> params;
      Rational finite_part = neutral(p);
      std::optional<std::size_t> open_edge;
      for (std::size_t k = 0; k < path.size(); ++k) {
        if (path[k].infinite && !open_edge) {
          open_edge = k;
          params.push_back(neutral(p));
        } else {
          const Rational v = path[k].infinite ? neutral(p) : path[k].value;
          params.push_back(v);
          finite_part = p.product ? Rational(finite_part * v) : Rational(finite_part + v);
        }
      }
      const std::size_t adjust = open_edge.value_or(0);
      if (!params.empty()) {
        if (open_edge) {
          params[adjust] = p.product ? Rational(agg / finite_part) : Rational(agg - finite_part);
        } else {
          params[adjust] = p.product ? Rational(params[adjust] * agg / finite_part)
                                     : Rational(params[adjust] + (agg - finite_part));
        }
      } else if (agg != neutral(p)) {
        continue;
      }
      Witness w;
      for (auto v : walk) {
        w.observations.push_back(p.nodes[v].obs);
        w.chosen.push_back(u.bundle(p.nodes[v].alt));
      }
      for (const auto& v : params) w.transforms.push_back(spec.element(v));
      w.landing = landing;
      for (std::size_t k = 0; k < len; ++k) {
        const Weight& e = p.w[walk[k]][walk[(k + 1) % len]];
        w.cycle_weights.push_back(e.infinite ? std::nullopt : std::optional<Rational>(e.value));
      }
      return w;
    }
    return std::nullopt;
  };

  PathTable table;
  if (auto walk = positive_cycle(p, table)) {
    auto canonical = rotate_to_min(*walk);
    if (auto w = build(canonical)) return violation(spec.axiom, std::move(*w));
    // Every rotation of a positive walk leaves room for a non-chosen landing;
    // reaching here means the walk degenerated (e.g. a zero bundle).
    for (std::size_t r = 1; r < canonical.size(); ++r) {
      std::rotate(canonical.begin(), canonical.begin() + 1, canonical.end());
      if (auto w = build(canonical)) return violation(spec.axiom, std::move(*w));
    }
    throw InvalidData(spec.axiom + ": positive cycle without a constructible witness");
  }
  // No positive cycle: only exact-boundary cycles can violate.
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      Weight best = table.best[s][t];
      bool empty_path = false;
      if (s == t && best < Weight{false, neutral(p)}) {
        best = Weight{false, neutral(p)};
        empty_path = true;
      }
      const Weight total = combine(p, best, p.w[t][s]);
      if (total.infinite || total.value != neutral(p)) continue;
      std::vector<std::size_t> walk{s};
      if (!empty_path) {
        walk.clear();
        unroll(table, s, t, walk);
        walk.push_back(t);
      }
      if (walk.size() == 1) continue;  // a single observation lands on its own choice
      const Point land = spec.landing(u[p.nodes[s].alt].point, Rational(p.product ? Rational(1 / p.w[t][s].value)
                                                                                 : Rational(-p.w[t][s].value)));
      if (!d[p.nodes[t].obs].strictly_unchosen(u.bundle(land))) continue;
      if (auto w = build(walk)) return violation(spec.axiom, std::move(*w));
    }
  return passed(spec.axiom);
}

void require_linear(const DataSet& d, const std::string& axiom) {
  if (!d.all_linear()) throw InvalidData(axiom + " needs linear budgets on every observation");
}

}  // namespace

Verdict check_harp(const DataSet& d) {
  require_linear(d, "harp");
  for (const auto& obs : d.observations())
    for (auto c : obs.chosen)
      if (is_zero(d.universe()[c].point)) throw InvalidData("harp: chosen bundles must be nonzero");
  LinearCycleSpec spec;
  spec.axiom = "harp";
  spec.product = true;
  spec.weight = [](const LinearBudget& b, const Point& x) -> Weight {
    const Rational cost = dot(b.prices, x);
    if (cost <= 0) return {true, 0};
    return {false, b.income / cost};
  };
  spec.landing = [](const Point& x1, const Rational& agg) { return scaled(x1, 1 / agg); };
  spec.element = [](const Rational& v) -> Transform { return Scaling{v}; };
  return linear_cycle_check(d, spec);
}

Verdict check_qarp(const DataSet& d) {
  require_linear(d, "qarp");
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i].budget.as_linear().prices[0] <= 0)
      throw InvalidData("qarp: numeraire price must be positive (observation " + std::to_string(i) + ")");
  LinearCycleSpec spec;
  spec.axiom = "qarp";
  spec.product = false;
  spec.weight = [](const LinearBudget& b, const Point& x) -> Weight {
    return {false, (b.income - dot(b.prices, x)) / b.prices[0]};
  };
  spec.landing = [](const Point& x1, const Rational& agg) {
    Point out = x1;
    out[0] -= agg;
    return out;
  };
  spec.element = [](const Rational& v) -> Transform { return Translation{v}; };
  return linear_cycle_check(d, spec);
}

Verdict check_iarp(const DataSet& d, const std::vector<AffineMap>& elements, const SearchLimits& limits) {
  if (elements.empty()) throw InvalidData("iarp needs a nonempty element list");
  std::set<std::string> keys;
  for (const auto& e : elements) keys.insert(key(Transform{e}));
  for (const auto& e : elements)
    if (!keys.count(key(Transform{inverse_of(e)})))
      throw InvalidData("iarp element list is not closed under inverse: missing inverse of " + to_string(Transform{e}));
  const Theory theory = Theory::affine(elements);
  Verdict v = check_saarp_generic(d, theory, limits);
  v.axiom = "iarp";
  if (v.pass) v.notes.push_back("pass covers compositions of the supplied affine maps only");
  return v;
}

}  // namespace aarp
