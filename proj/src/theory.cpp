#include "aarp/theory.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "aarp/errors.hpp"

namespace aarp {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void mixed_kinds() { throw InvalidData("cannot combine transformations of different theories"); }

Permutation identity_permutation(std::size_t n) {
  Permutation p;
  p.image.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.image[i] = i;
  return p;
}

std::string join(const Point& x) {
  std::string out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) out += ",";
    out += to_string(x[k]);
  }
  return out;
}

bool intersects(const ParamSolution& a, const ParamSolution& b) {
  using K = ParamSolution::Kind;
  if (a.kind == K::None || b.kind == K::None) return false;
  if (a.kind == K::Any || b.kind == K::Any) return true;
  return a.value == b.value;
}

// ∃ a ∈ A, b ∈ B with a ≤ b, in a group unbounded in both directions.
bool ordered_intersects(const ParamSolution& a, const ParamSolution& b) {
  using K = ParamSolution::Kind;
  if (a.kind == K::None || b.kind == K::None) return false;
  if (a.kind == K::Any || b.kind == K::Any) return true;
  return a.value <= b.value;
}

}  // namespace

AffineMap AffineMap::mixing(const Rational& alpha, const Point& z) {
  if (alpha <= 0) throw InvalidData("affine scalar must be positive");
  return AffineMap{alpha, scaled(z, Rational(1) - alpha)};
}

std::optional<Point> AffineMap::mixing_point() const {
  if (alpha == 1) return std::nullopt;
  return scaled(offset, Rational(1) / (Rational(1) - alpha));
}

AffineMap compose_affine(const AffineMap& f, const AffineMap& g) {
  // f(g(x)) = f.alpha (g.alpha x + g.offset) + f.offset
  return AffineMap{f.alpha * g.alpha, plus(scaled(g.offset, f.alpha), f.offset)};
}

AffineMap inverse_of(const AffineMap& f) {
  const Rational inv = Rational(1) / f.alpha;
  return AffineMap{inv, scaled(f.offset, -inv)};
}

Transform compose(const Transform& a, const Transform& b) {
  if (std::holds_alternative<Identity>(a)) return b;
  if (std::holds_alternative<Identity>(b)) return a;
  if (a.index() != b.index()) mixed_kinds();
  return std::visit(
      overloaded{
          [&](const Permutation& p) -> Transform {
            const auto& q = std::get<Permutation>(b);
            if (p.image.size() != q.image.size()) throw InvalidData("permutations of different size");
            Permutation out;
            out.image.resize(p.image.size());
            for (std::size_t i = 0; i < p.image.size(); ++i) out.image[i] = p.image[q.image[i]];
            return out;
          },
          [&](const Scaling& s) -> Transform { return Scaling{s.alpha * std::get<Scaling>(b).alpha}; },
          [&](const Translation& t) -> Transform { return Translation{t.t + std::get<Translation>(b).t}; },
          [&](const AffineMap& f) -> Transform { return compose_affine(f, std::get<AffineMap>(b)); },
          [&](const Identity&) -> Transform { return b; },
      },
      a);
}

Transform inverse(const Transform& f) {
  return std::visit(overloaded{
                        [](const Identity& i) -> Transform { return i; },
                        [](const Permutation& p) -> Transform {
                          Permutation out;
                          out.image.resize(p.image.size());
                          for (std::size_t i = 0; i < p.image.size(); ++i) out.image[p.image[i]] = i;
                          return out;
                        },
                        [](const Scaling& s) -> Transform { return Scaling{Rational(1) / s.alpha}; },
                        [](const Translation& t) -> Transform { return Translation{-t.t}; },
                        [](const AffineMap& a) -> Transform { return inverse_of(a); },
                    },
                    f);
}

Point apply_point(const Transform& f, const Point& x) {
  return std::visit(overloaded{
                        [&](const Identity&) -> Point { return x; },
                        [&](const Permutation&) -> Point {
                          throw InvalidData("permutations act on universe indices, not points");
                        },
                        [&](const Scaling& s) -> Point { return scaled(x, s.alpha); },
                        [&](const Translation& t) -> Point {
                          if (x.empty()) throw InvalidData("translation needs a numeraire coordinate");
                          Point out = x;
                          out[0] += t.t;
                          return out;
                        },
                        [&](const AffineMap& a) -> Point {
                          if (a.offset.size() != x.size()) throw InvalidData("affine map dimension mismatch");
                          return plus(scaled(x, a.alpha), a.offset);
                        },
                    },
                    f);
}

std::string to_string(const Transform& f) {
  return std::visit(overloaded{
                        [](const Identity&) -> std::string { return "id"; },
                        [](const Permutation& p) -> std::string {
                          std::string out = "perm[";
                          for (std::size_t i = 0; i < p.image.size(); ++i) {
                            if (i) out += ",";
                            out += std::to_string(p.image[i]);
                          }
                          return out + "]";
                        },
                        [](const Scaling& s) -> std::string { return "alpha=" + to_string(s.alpha); },
                        [](const Translation& t) -> std::string { return "t=" + to_string(t.t); },
                        [](const AffineMap& a) -> std::string {
                          if (auto z = a.mixing_point()) return "alpha=" + to_string(a.alpha) + ",z=(" + join(*z) + ")";
                          return "alpha=1,offset=(" + join(a.offset) + ")";
                        },
                    },
                    f);
}

std::string key(const Transform& f) { return std::to_string(f.index()) + ":" + to_string(f); }

std::string to_string(TheoryKind kind) {
  switch (kind) {
    case TheoryKind::Trivial: return "trivial";
    case TheoryKind::Permutation: return "permutation";
    case TheoryKind::Scaling: return "scaling";
    case TheoryKind::Translation: return "translation";
    case TheoryKind::Affine: return "affine";
  }
  return "unknown";
}

Theory Theory::trivial() { return Theory(TheoryKind::Trivial, std::vector<Transform>{Identity{}}); }

Theory Theory::permutation(std::size_t n, const std::vector<std::vector<std::size_t>>& generators) {
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.size() != n) throw InvalidData("permutation generator has wrong length");
    std::vector<bool> seen(n, false);
    for (auto v : g) {
      if (v >= n || seen[v]) throw InvalidData("permutation generator is not a bijection");
      seen[v] = true;
    }
    gens.push_back(Permutation{g});
  }
  std::vector<Transform> elements{identity_permutation(n)};
  std::set<std::vector<std::size_t>> seen{std::get<Permutation>(elements.front()).image};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      auto next = std::get<Permutation>(compose(g, elements[head]));
      if (seen.insert(next.image).second) elements.emplace_back(std::move(next));
    }
  }
  return Theory(TheoryKind::Permutation, std::move(elements), n);
}

Theory Theory::scaling(std::optional<std::vector<Rational>> grid) {
  if (!grid) return Theory(TheoryKind::Scaling, std::nullopt);
  std::vector<Transform> elements;
  for (const auto& a : *grid) {
    if (a <= 0) throw InvalidData("scaling factors must be positive, got " + to_string(a));
    elements.emplace_back(Scaling{a});
  }
  return Theory(TheoryKind::Scaling, std::move(elements));
}

Theory Theory::translation(std::optional<std::vector<Rational>> grid) {
  if (!grid) return Theory(TheoryKind::Translation, std::nullopt);
  std::vector<Transform> elements;
  for (const auto& t : *grid) elements.emplace_back(Translation{t});
  return Theory(TheoryKind::Translation, std::move(elements));
}

Theory Theory::affine(std::vector<AffineMap> elements) {
  if (elements.empty()) throw InvalidData("affine theory needs a nonempty element list");
  const std::size_t dim = elements.front().offset.size();
  std::vector<Transform> list;
  for (auto& e : elements) {
    if (e.alpha <= 0) throw InvalidData("affine scalar must be positive");
    if (e.offset.size() != dim) throw InvalidData("affine elements of different dimension");
    list.emplace_back(std::move(e));
  }
  Theory t(TheoryKind::Affine, std::move(list));
  t.affine_dim_ = dim;
  return t;
}

Theory Theory::from_elements(TheoryKind kind, std::vector<Transform> elements) {
  if (elements.empty()) throw InvalidData("theory needs at least one element");
  std::size_t n = 0;
  if (kind == TheoryKind::Permutation) n = std::get<Permutation>(elements.front()).image.size();
  Theory t(kind, std::move(elements), n);
  if (kind == TheoryKind::Affine) t.affine_dim_ = std::get<AffineMap>(t.elements_->front()).offset.size();
  return t;
}

bool Theory::ordered() const {
  switch (kind_) {
    case TheoryKind::Trivial:
    case TheoryKind::Scaling:
    case TheoryKind::Translation: return true;
    case TheoryKind::Permutation: return elements_ && elements_->size() == 1;
    case TheoryKind::Affine: return false;
  }
  return false;
}

const std::vector<Transform>& Theory::elements() const {
  if (!elements_) throw NotEnumerable(name() + " theory without a grid cannot be enumerated");
  return *elements_;
}

bool Theory::closed_under_composition() const {
  if (!elements_) return false;
  std::set<std::string> keys;
  for (const auto& e : *elements_) keys.insert(key(e));
  for (const auto& a : *elements_) {
    if (!keys.count(key(inverse(a)))) return false;
    for (const auto& b : *elements_)
      if (!keys.count(key(compose(a, b)))) return false;
  }
  return true;
}

Transform Theory::identity() const {
  switch (kind_) {
    case TheoryKind::Trivial: return Identity{};
    case TheoryKind::Permutation: return identity_permutation(perm_size_);
    case TheoryKind::Scaling: return Scaling{1};
    case TheoryKind::Translation: return Translation{0};
    case TheoryKind::Affine: return AffineMap{1, Point(affine_dim_, Rational(0))};
  }
  return Identity{};
}

bool Theory::less_equal(const Transform& f, const Transform& g) const {
  if (!ordered()) throw OrderMissing(name() + " theory carries no order");
  switch (kind_) {
    case TheoryKind::Scaling: return std::get<Scaling>(f).alpha <= std::get<Scaling>(g).alpha;
    case TheoryKind::Translation: return std::get<Translation>(f).t <= std::get<Translation>(g).t;
    default: return true;  // single-element group
  }
}

Bundle Theory::apply(const Transform& f, const Bundle& x, const Universe& u) const {
  if (const auto* p = std::get_if<Permutation>(&f)) {
    if (!x.index) throw InvalidData("permutation applied to an alternative outside the universe");
    if (p->image.size() != u.size()) throw InvalidData("permutation size does not match the universe");
    return u.bundle(p->image[*x.index]);
  }
  if (std::holds_alternative<Identity>(f)) return x;
  if (x.point.empty()) throw InvalidData(name() + " theory needs vector alternatives");
  return u.bundle(apply_point(f, x.point));
}

std::optional<std::size_t> Theory::image(const Transform& f, std::size_t i, const Universe& u) const {
  return apply(f, u.bundle(i), u).index;
}

ParamSolution Theory::solve(const Point& x, const Point& target) const {
  using K = ParamSolution::Kind;
  if (x.size() != target.size()) throw InvalidData("dimension mismatch");
  if (kind_ == TheoryKind::Scaling) {
    if (is_zero(x)) return is_zero(target) ? ParamSolution{K::Any, 0} : ParamSolution{};
    std::size_t k = 0;
    while (x[k] == 0) ++k;
    const Rational alpha = target[k] / x[k];
    if (alpha <= 0 || scaled(x, alpha) != target) return {};
    return {K::Unique, alpha};
  }
  if (kind_ == TheoryKind::Translation) {
    if (x.empty()) return {};
    for (std::size_t k = 1; k < x.size(); ++k)
      if (x[k] != target[k]) return {};
    return {K::Unique, target[0] - x[0]};
  }
  throw InvalidData("solve is defined for scaling and translation theories only");
}

bool Theory::maps_pair(const Universe& u, const Bundle& x, const Bundle& y, const Bundle& ux, const Bundle& vy) const {
  if (!elements_) return intersects(solve(x.point, ux.point), solve(y.point, vy.point));
  for (const auto& f : *elements_)
    if (apply(f, x, u) == ux && apply(f, y, u) == vy) return true;
  return false;
}

bool Theory::maps_pair_ordered(const Universe& u, const Bundle& x, const Bundle& y, const Bundle& ux,
                               const Bundle& vy) const {
  if (!ordered()) throw OrderMissing(name() + " theory carries no order");
  if (!elements_) return ordered_intersects(solve(x.point, ux.point), solve(y.point, vy.point));
  for (const auto& lo : *elements_) {
    if (!(apply(lo, x, u) == ux)) continue;
    for (const auto& hi : *elements_)
      if (less_equal(lo, hi) && apply(hi, y, u) == vy) return true;
  }
  return false;
}

void Theory::check_compatible(const Universe& u) const {
  switch (kind_) {
    case TheoryKind::Trivial: return;
    case TheoryKind::Permutation:
      if (perm_size_ != u.size()) throw InvalidData("permutation theory acts on " + std::to_string(perm_size_) +
                                                    " alternatives, universe has " + std::to_string(u.size()));
      return;
    case TheoryKind::Affine:
      if (!u.is_vector() || u.dimension() != affine_dim_)
        throw InvalidData("affine theory needs vector alternatives of dimension " + std::to_string(affine_dim_));
      return;
    default:
      if (!u.is_vector()) throw InvalidData(name() + " theory needs vector alternatives");
  }
}

Universe orbit_carrier(const Universe& u, const Theory& theory, std::size_t depth) {
  Universe out = u;
  const auto& elements = theory.elements();
  if (!out.is_vector() && theory.kind() != TheoryKind::Permutation && theory.kind() != TheoryKind::Trivial) {
    throw InvalidData("orbit carrier needs vector alternatives");
  }
  auto escapes = [&](const Universe& w) -> std::optional<std::string> {
    for (std::size_t i = 0; i < w.size(); ++i)
      for (const auto& f : elements)
        if (!theory.apply(f, w.bundle(i), w).index) return to_string(f) + " maps " + w.name(i) + " outside";
    return std::nullopt;
  };
  if (!out.is_vector()) {
    if (auto e = escapes(out)) throw OrbitEscape(*e);
    return out;
  }
  for (std::size_t round = 0; round < depth; ++round) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& f : elements) out.add_point(apply_point(f, out[i].point));
  }
  if (auto e = escapes(out)) throw OrbitEscape(*e + " after " + std::to_string(depth) + " augmentation round(s)");
  return out;
}

GroupOps group_ops(const Theory& theory, const Universe& u) {
  GroupOps ops;
  ops.identity = [&theory] { return theory.identity(); };
  ops.compose = [](const Transform& a, const Transform& b) { return compose(a, b); };
  ops.inverse = [](const Transform& f) { return inverse(f); };
  ops.apply = [&theory, &u](const Transform& f, const Bundle& x) { return theory.apply(f, x, u); };
  if (theory.ordered()) {
    ops.less_equal = [&theory](const Transform& a, const Transform& b) { return theory.less_equal(a, b); };
  }
  return ops;
}

namespace {

// Triples (a, b, c): all of them for small samples, one rotating c per pair otherwise.
template <class Fn>
void for_triples(std::size_t n, Fn&& fn) {
  if (n == 0) return;
  const bool full = n <= 24;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (full) {
        for (std::size_t k = 0; k < n; ++k) fn(i, j, k);
      } else {
        fn(i, j, (i * 7 + j * 13 + 1) % n);
      }
    }
}

}  // namespace

LawReport verify_group_laws(const GroupOps& ops, std::span<const Transform> samples, std::span<const Bundle> points) {
  LawReport report;
  auto fail = [&](std::string law, std::string detail) { report.failures.push_back({std::move(law), std::move(detail)}); };
  const Transform id = ops.identity();
  for (const auto& x : points) {
    ++report.checks;
    if (!(ops.apply(id, x) == x)) fail("identity", "identity moves " + to_string(x));
  }
  for (const auto& f : samples) {
    const Transform inv = ops.inverse(f);
    const Transform left = ops.compose(f, inv);
    const Transform right = ops.compose(inv, f);
    for (const auto& x : points) {
      report.checks += 2;
      if (!(ops.apply(left, x) == x)) fail("inverse", to_string(f) + " composed with its inverse moves " + to_string(x));
      if (!(ops.apply(right, x) == x)) fail("inverse", "inverse of " + to_string(f) + " composed with it moves " + to_string(x));
    }
  }
  for_triples(samples.size(), [&](std::size_t i, std::size_t j, std::size_t k) {
    const auto& f = samples[i];
    const auto& g = samples[j];
    const auto& h = samples[k];
    const Transform lhs = ops.compose(ops.compose(f, g), h);
    const Transform rhs = ops.compose(f, ops.compose(g, h));
    const Transform fg = ops.compose(f, g);
    for (const auto& x : points) {
      report.checks += 2;
      if (!(ops.apply(lhs, x) == ops.apply(rhs, x))) {
        fail("associativity", to_string(f) + ", " + to_string(g) + ", " + to_string(h) + " at " + to_string(x));
      }
      if (!(ops.apply(fg, x) == ops.apply(f, ops.apply(g, x)))) {
        fail("composition", to_string(f) + " after " + to_string(g) + " at " + to_string(x));
      }
    }
  });
  return report;
}

LawReport verify_ordered_group_laws(const GroupOps& ops, std::span<const Transform> samples) {
  if (!ops.less_equal) throw OrderMissing("group operations carry no order");
  LawReport report;
  const auto& le = ops.less_equal;
  auto fail = [&](std::string law, std::string detail) { report.failures.push_back({std::move(law), std::move(detail)}); };
  for_triples(samples.size(), [&](std::size_t i, std::size_t j, std::size_t k) {
    const auto& f = samples[i];
    const auto& g = samples[j];
    const auto& h = samples[k];
    const std::string tag = to_string(f) + ", " + to_string(g) + ", " + to_string(h);
    report.checks += 4;
    if (!le(f, g) && !le(g, f)) fail("totality", to_string(f) + " vs " + to_string(g));
    if (le(g, f)) {
      if (!le(ops.compose(h, g), ops.compose(h, f))) fail("left invariance", tag);
      if (!le(ops.compose(g, h), ops.compose(f, h))) fail("right invariance", tag);
      if (!le(ops.inverse(f), ops.inverse(g))) fail("inverse reverses order", to_string(f) + ", " + to_string(g));
      // f ≥ g and h ≥ h' (take h' = the smaller of h and g) ⇒ f∘h ≥ g∘h'
      const Transform& lower = le(g, h) ? g : h;
      if (!le(ops.compose(g, lower), ops.compose(f, h))) fail("monotone composition", tag);
    }
  });
  return report;
}

}  // namespace aarp
