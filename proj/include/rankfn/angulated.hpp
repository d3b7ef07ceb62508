#pragma once

#include "rankfn/report.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace rankfn {

/// Label of an isomorphism class of indecomposable objects.
using IndecId = std::string;

/// An object up to isomorphism: the multiset of its indecomposable summands.
/// The zero object is the empty multiset.
class ObjectClass {
 public:
  ObjectClass() = default;
  ObjectClass(std::initializer_list<IndecId> summands);
  explicit ObjectClass(const std::vector<IndecId>& summands);

  void add(const IndecId& id, std::size_t multiplicity = 1);

  const std::map<IndecId, std::size_t>& summands() const { return summands_; }
  bool is_zero() const { return summands_.empty(); }
  std::size_t count() const;
  std::size_t multiplicity(const IndecId& id) const;

  /// Sorted, with repetitions.
  std::vector<IndecId> labels() const;

  ObjectClass& operator+=(const ObjectClass& other);
  friend ObjectClass operator+(ObjectClass a, const ObjectClass& b) { return a += b; }

  friend bool operator==(const ObjectClass&, const ObjectClass&) = default;
  friend auto operator<=>(const ObjectClass&, const ObjectClass&) = default;

 private:
  std::map<IndecId, std::size_t> summands_;
};

std::string to_string(const ObjectClass& x);

/// The suspension on objects, as a permutation of the indecomposables.
struct Suspension {
  std::map<IndecId, IndecId> perm;

  /// Throws InputError on a label outside the permutation.
  const IndecId& apply(const IndecId& id) const;
  ObjectClass apply(const ObjectClass& x) const;

  /// Smallest k >= 1 with perm^k = id (1 for the empty permutation).
  std::size_t order() const;
};

/// Objects X_0, ..., X_{d+1} of a (d+2)-angle X_0 -> ... -> X_{d+1} -> Sigma X_0.
/// Arrows are not stored.
struct AngleTemplate {
  int d = 1;
  std::vector<ObjectClass> objects;

  friend bool operator==(const AngleTemplate&, const AngleTemplate&) = default;
  friend auto operator<=>(const AngleTemplate&, const AngleTemplate&) = default;
};

std::string to_string(const AngleTemplate& a);

/// Finite presentation of a (pre-)(d+2)-angulated category: indecomposables,
/// suspension and a generating list of angles.
struct CategorySkeleton {
  int d = 1;
  std::vector<IndecId> indecs;
  Suspension suspension;
  std::vector<AngleTemplate> angles;

  bool contains(const IndecId& id) const;
};

/// Every violated structural invariant, each with its location.
Report validate_skeleton(const CategorySkeleton& s);

/// (X_0, ..., X_{d+1}) -> (X_1, ..., X_{d+1}, Sigma X_0).
AngleTemplate rotate_angle(const AngleTemplate& a, const CategorySkeleton& s);

/// Applies the suspension to every entry.
AngleTemplate suspend_angle(const AngleTemplate& a, const Suspension& sigma);

/// Componentwise direct sum; throws InputError when the d differ.
AngleTemplate direct_sum_angles(const AngleTemplate& a, const AngleTemplate& b);

/// (X, X, 0, ..., 0).
AngleTemplate trivial_angle(const ObjectClass& x, int d);

/// Generators closed under rotation. depth 0 returns the (deduplicated)
/// generators; depth k follows each generator through k suspension layers,
/// i.e. k*(d+2) rotations, stopping once the orbit returns to its start.
/// Order: generators in input order, each followed by its unseen rotations.
std::vector<AngleTemplate> angle_closure(const CategorySkeleton& s, std::size_t depth);

/// Order of the suspension permutation; always finite for a skeleton.
std::size_t default_depth(const CategorySkeleton& s);

}  // namespace rankfn
