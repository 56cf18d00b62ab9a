#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "aarp/rational.hpp"
#include "aarp/universe.hpp"

namespace aarp {

/// The identity of the trivial theory.
struct Identity {
  friend bool operator==(const Identity&, const Identity&) = default;
};

/// Bijection on universe indices: i ↦ image[i].
struct Permutation {
  std::vector<std::size_t> image;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// x ↦ alpha·x with alpha > 0.
struct Scaling {
  Rational alpha;
  friend bool operator==(const Scaling&, const Scaling&) = default;
};

/// x ↦ x + t·e, e the first unit vector (the numeraire).
struct Translation {
  Rational t;
  friend bool operator==(const Translation&, const Translation&) = default;
};

/// x ↦ alpha·x + offset with alpha > 0. Mixing maps alpha·x + (1 - alpha)·z are
/// the members with offset = (1 - alpha)·z; compositions whose scalar is 1 keep
/// a possibly nonzero offset, so the offset form is the stored one.
struct AffineMap {
  Rational alpha;
  Point offset;

  static AffineMap mixing(const Rational& alpha, const Point& z);
  /// z with offset = (1 - alpha)·z; nullopt when alpha = 1.
  std::optional<Point> mixing_point() const;
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

using Transform = std::variant<Identity, Permutation, Scaling, Translation, AffineMap>;

/// (a ∘ b)(x) = a(b(x)).
Transform compose(const Transform& a, const Transform& b);
Transform inverse(const Transform& f);
AffineMap compose_affine(const AffineMap& f, const AffineMap& g);
AffineMap inverse_of(const AffineMap& f);

Point apply_point(const Transform& f, const Point& x);
std::string to_string(const Transform& f);
/// Canonical key; equal keys iff equal maps.
std::string key(const Transform& f);

enum class TheoryKind { Trivial, Permutation, Scaling, Translation, Affine };

std::string to_string(TheoryKind kind);

/// Solution set {f : f(x) = u} of a one-parameter theory.
struct ParamSolution {
  enum class Kind { None, Unique, Any } kind = Kind::None;
  Rational value;
};

/// A theory: a group of transformations on alternatives, optionally totally
/// ordered, optionally restricted to a finite list of elements (a grid).
///
/// Scaling and translation without a grid are handled symbolically: closures
/// and pair-mapping queries are decided exactly over the whole group.
class Theory {
 public:
  static Theory trivial();
  /// Group generated by `generators` on {0..n-1}; enumerated by closure.
  static Theory permutation(std::size_t n, const std::vector<std::vector<std::size_t>>& generators);
  static Theory scaling(std::optional<std::vector<Rational>> grid = std::nullopt);
  static Theory translation(std::optional<std::vector<Rational>> grid = std::nullopt);
  static Theory affine(std::vector<AffineMap> elements);
  /// Any explicit finite element list (used for mutation tests and subgroups).
  static Theory from_elements(TheoryKind kind, std::vector<Transform> elements);

  TheoryKind kind() const { return kind_; }
  std::string name() const { return to_string(kind_); }
  bool ordered() const;
  bool enumerable() const { return elements_.has_value(); }
  bool parametric() const { return !elements_ && (kind_ == TheoryKind::Scaling || kind_ == TheoryKind::Translation); }

  /// Finite element list; throws NotEnumerable for parametric theories.
  const std::vector<Transform>& elements() const;
  /// True when the element list is closed under composition and inverse.
  bool closed_under_composition() const;

  Transform identity() const;
  /// f ≤ g in the theory's order; throws OrderMissing when unordered.
  bool less_equal(const Transform& f, const Transform& g) const;

  /// Image of a bundle; the result's index is set when it lands in the universe.
  Bundle apply(const Transform& f, const Bundle& x, const Universe& u) const;
  std::optional<std::size_t> image(const Transform& f, std::size_t i, const Universe& u) const;

  /// {f : f(x) = target} for scaling/translation.
  ParamSolution solve(const Point& x, const Point& target) const;

  /// ∃ f: f(x) = u' and f(y) = v'.
  bool maps_pair(const Universe& u, const Bundle& x, const Bundle& y, const Bundle& ux, const Bundle& vy) const;
  /// ∃ f̄ ≤ f: f̄(x) = u' and f(y) = v'.
  bool maps_pair_ordered(const Universe& u, const Bundle& x, const Bundle& y, const Bundle& ux,
                         const Bundle& vy) const;

  /// Checks that the theory can act on the universe (vector theories need points,
  /// permutations need a matching size). Throws InvalidData otherwise.
  void check_compatible(const Universe& u) const;

 private:
  Theory(TheoryKind kind, std::optional<std::vector<Transform>> elements, std::size_t perm_size = 0)
      : kind_(kind), elements_(std::move(elements)), perm_size_(perm_size) {}

  TheoryKind kind_;
  std::optional<std::vector<Transform>> elements_;
  std::size_t perm_size_ = 0;
  std::size_t affine_dim_ = 0;
};

/// Augments a vector universe with the images of every element, `depth` rounds;
/// throws OrbitEscape when the result is still not closed under the elements.
Universe orbit_carrier(const Universe& u, const Theory& theory, std::size_t depth = 1);

/// Group operations as plain callables, so law checks can run against
/// deliberately broken implementations.
struct GroupOps {
  std::function<Transform()> identity;
  std::function<Transform(const Transform&, const Transform&)> compose;
  std::function<Transform(const Transform&)> inverse;
  std::function<Bundle(const Transform&, const Bundle&)> apply;
  std::function<bool(const Transform&, const Transform&)> less_equal;
};

GroupOps group_ops(const Theory& theory, const Universe& u);

struct LawFailure {
  std::string law;
  std::string detail;
};

struct LawReport {
  std::size_t checks = 0;
  std::vector<LawFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Identity, inverse, associativity and composition-consistency, pointwise on
/// the sample points.
LawReport verify_group_laws(const GroupOps& ops, std::span<const Transform> samples, std::span<const Bundle> points);

/// Totality, left/right translation invariance of the order, and
/// f ≥ f', g ≥ g' ⇒ f∘g ≥ f'∘g'; f ≥ g ⇒ f⁻¹ ≤ g⁻¹.
LawReport verify_ordered_group_laws(const GroupOps& ops, std::span<const Transform> samples);

}  // namespace aarp
