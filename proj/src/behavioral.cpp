#include "aarp/behavioral.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "aarp/errors.hpp"

namespace aarp {

namespace {

// Subsets of `pool` (sorted), by increasing size then lexicographically.
std::vector<std::vector<std::size_t>> subsets_by_size(const std::vector<std::size_t>& pool) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = pool.size();
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    do {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) s.push_back(pool[i]);
      out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

std::vector<std::size_t> set_union(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::size_t> set_minus(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void require_explicit(const DataSet& d, const char* axiom) {
  if (!d.all_explicit()) throw InvalidData(std::string(axiom) + " needs explicit budgets");
}

void check_cap(std::uint64_t total, const BehavioralLimits& limits, const char* axiom) {
  if (total > limits.max_candidates) {
    throw CapExceeded(std::string(axiom) + ": " + std::to_string(total) + " candidate selections exceed the cap of " +
                      std::to_string(limits.max_candidates));
  }
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

Observation explicit_obs(std::vector<std::size_t> budget, std::vector<std::size_t> chosen) {
  return Observation{Budget(ExplicitBudget{std::move(budget)}), std::move(chosen)};
}

Verdict fail(const char* axiom, std::string note) {
  Verdict v;
  v.axiom = axiom;
  v.pass = false;
  v.notes.push_back(std::move(note));
  return v;
}

}  // namespace

std::vector<std::size_t> k_max_set(const Relation& r, const std::vector<std::size_t>& budget, std::size_t k) {
  if (k == 0) throw InvalidData("k must be positive");
  for (auto x : budget)
    for (auto y : budget) {
      if (!r.contains(x, y) && !r.contains(y, x)) throw InvalidData("relation is not complete on the budget");
      for (auto z : budget)
        if (r.contains(x, y) && r.contains(y, z) && !r.contains(x, z))
          throw InvalidData("relation is not transitive on the budget");
    }
  std::vector<std::size_t> result;
  std::vector<std::size_t> rest = budget;
  std::sort(rest.begin(), rest.end());
  for (std::size_t layer = 0; layer < k && !rest.empty(); ++layer) {
    std::vector<std::size_t> top;
    for (auto x : rest)
      if (std::all_of(rest.begin(), rest.end(), [&](std::size_t y) { return r.contains(x, y); })) top.push_back(x);
    result = set_union(result, top);
    rest = set_minus(rest, top);
  }
  return result;
}

Verdict check_s_saarp(const DataSet& d, const Theory& g1, const Theory& g2, const BehavioralLimits& limits) {
  require_explicit(d, "s-saarp");
  const auto& u = d.universe();
  const auto reg = is_regular(d, g2);
  if (!reg.regular) {
    throw PreconditionFailure("s-saarp: data set is not regular under the second theory (" + reg.condition +
                              ", observation " + std::to_string(reg.observation) + ")");
  }
  std::uint64_t total = 1;
  for (const auto& obs : d.observations())
    total = saturating_mul(total, std::uint64_t{1} << std::min<std::size_t>(
                                      63, obs.budget.as_explicit().members.size() - obs.chosen.size()));
  check_cap(total, limits, "s-saarp");

  const std::size_t m = d.size();
  std::vector<std::vector<std::size_t>> gamma(m);

  // (B, Γ) and (Γ, C) over the first `len` observations.
  auto prefix_ok = [&](std::size_t len) {
    std::vector<Observation> first, second;
    for (std::size_t i = 0; i < len; ++i) {
      first.push_back(explicit_obs(d[i].budget.as_explicit().members, gamma[i]));
      second.push_back(explicit_obs(gamma[i], d[i].chosen));
    }
    const DataSet stage1(u, std::move(first));
    const DataSet stage2(u, std::move(second));
    if (!is_regular(stage2, g2).regular) return false;
    if (!check_waarp(stage1, g1).pass) return false;
    return check_saarp_generic(stage2, g2, limits.saarp).pass;
  };

  Verdict verdict;
  verdict.axiom = "s-saarp";
  verdict.notes.push_back(std::string("regularity reading: ") + kRegularityReading);

  for (std::size_t i = 0; i < m; ++i) gamma[i] = d[i].budget.as_explicit().members;
  if (prefix_ok(m)) {
    verdict.selection = gamma;
    verdict.notes.push_back("full attention (consideration set = budget) suffices");
    return verdict;
  }

  std::vector<std::vector<std::vector<std::size_t>>> candidates(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto free = set_minus(d[i].budget.as_explicit().members, d[i].chosen);
    for (const auto& extra : subsets_by_size(free)) candidates[i].push_back(set_union(d[i].chosen, extra));
  }
  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == m) return true;
    for (const auto& g : candidates[i]) {
      gamma[i] = g;
      if (prefix_ok(i + 1) && search(i + 1)) return true;
    }
    return false;
  };
  if (search(0)) {
    verdict.selection = gamma;
    return verdict;
  }
  verdict.pass = false;
  verdict.notes.push_back("no consideration map satisfies both stages");
  return verdict;
}

DataSet build_truncated_dataset(const DataSet& d, const std::vector<std::vector<std::size_t>>& retained,
                                std::optional<std::size_t> k) {
  require_explicit(d, "truncation");
  if (retained.size() != d.size()) throw InvalidData("one retained set per observation is required");
  std::vector<Observation> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto low = retained[i];
    std::sort(low.begin(), low.end());
    low.erase(std::unique(low.begin(), low.end()), low.end());
    const auto& budget = d[i].budget.as_explicit().members;
    const auto& chosen = d[i].chosen;
    const auto unchosen = set_minus(budget, chosen);
    if (!set_minus(low, unchosen).empty())
      throw InvalidData("retained set of observation " + std::to_string(i) + " must avoid chosen points and stay in the budget");
    const auto upper = set_minus(budget, low);
    if (k && upper.size() > *k)
      throw InvalidData("observation " + std::to_string(i) + " keeps " + std::to_string(upper.size()) +
                        " alternatives above the retained set, more than k = " + std::to_string(*k));
    out.push_back(explicit_obs(set_union(low, chosen), chosen));
    for (auto y : set_minus(upper, chosen)) out.push_back(explicit_obs(set_union(low, {y}), {y}));
  }
  return DataSet(d.universe(), std::move(out));
}

Verdict check_ge_saarp(const DataSet& d, const Theory& g, std::size_t k, const BehavioralLimits& limits) {
  require_explicit(d, "ge-saarp");
  if (k == 0) throw InvalidData("ge-saarp: k must be positive");
  Verdict verdict;
  verdict.axiom = "ge-saarp";
  verdict.notes.push_back(std::string("regularity reading: ") + kRegularityReading);
  if (k == 1) verdict.notes.push_back("k = 1 is outside the model's range 1 < k < |X|; the test reduces to plain maximization");
  if (k >= d.universe().size())
    verdict.notes.push_back("k >= |X| is outside the model's range 1 < k < |X|");

  const std::size_t m = d.size();
  std::vector<std::vector<std::vector<std::size_t>>> candidates(m);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& budget = d[i].budget.as_explicit().members;
    const auto unchosen = set_minus(budget, d[i].chosen);
    auto subs = subsets_by_size(unchosen);
    // Largest retained sets first, lexicographic within a size.
    std::stable_sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (auto& s : subs)
      if (budget.size() - s.size() <= k) candidates[i].push_back(std::move(s));
    if (candidates[i].empty())
      return fail("ge-saarp", "observation " + std::to_string(i) + " chooses more than k alternatives");
    total = saturating_mul(total, candidates[i].size());
  }
  check_cap(total, limits, "ge-saarp");

  std::vector<std::vector<std::size_t>> retained(m);
  auto prefix_ok = [&](std::size_t len) {
    std::vector<Observation> obs(d.observations().begin(), d.observations().begin() + static_cast<long>(len));
    const DataSet prefix(d.universe(), std::move(obs));
    const std::vector<std::vector<std::size_t>> sel(retained.begin(), retained.begin() + static_cast<long>(len));
    const DataSet truncated = build_truncated_dataset(prefix, sel, k);
    return is_regular(truncated, g).regular && check_saarp_generic(truncated, g, limits.saarp).pass;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == m) return true;
    for (const auto& c : candidates[i]) {
      retained[i] = c;
      if (prefix_ok(i + 1) && search(i + 1)) return true;
    }
    return false;
  };
  if (search(0)) {
    verdict.selection = retained;
    return verdict;
  }
  verdict.pass = false;
  verdict.notes.push_back("no truncation within the bound is regular and satisfies SAARP");
  return verdict;
}

}  // namespace aarp
