#pragma once

#include "rankfn/angulated.hpp"
#include "rankfn/rank_objects.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace rankfn {

using IntVector = std::vector<Integer>;

/// Rank functions on objects of a skeleton as {x : x_i = x_j for each
/// equality, row . x >= 0 for each inequality}, with the integral points
/// taken in {x in Z^n : row . x in Z for each integrality row}.
struct RankCone {
  std::vector<IndecId> labels;
  std::vector<std::pair<std::size_t, std::size_t>> equalities;
  std::vector<std::vector<Rational>> inequalities;
  std::vector<std::string> row_origin;
  std::vector<std::vector<Rational>> integrality_rows;

  std::size_t dimension() const { return labels.size(); }
};

/// Nonnegativity per indec, one equality per suspension pair, one defect row
/// per closure angle, in that order.
RankCone build_cone(const CategorySkeleton& s, std::size_t depth);

enum class Lattice { Objects, Morphisms };

/// Morphisms: integral points are those whose Psi value on every closure
/// marked angle is an integer (odd d only).
RankCone with_lattice(RankCone c, const CategorySkeleton& s, std::size_t depth, Lattice lattice);

RankCone make_cone(const CategorySkeleton& s, std::size_t depth, Lattice lattice = Lattice::Objects);

struct ConeLimits {
  std::size_t max_dimension = 24;
  std::size_t max_enumeration = 4'000'000;

  /// Defaults, with max_dimension overridden by RANKFN_CONE_DIM_BOUND.
  static ConeLimits from_env();
};

bool contains(const RankCone& c, const std::vector<Rational>& x);
bool in_lattice(const RankCone& c, const std::vector<Rational>& x);

/// Primitive integer generators of the extreme rays, lexicographically sorted.
std::vector<IntVector> extreme_rays(const RankCone& c, const ConeLimits& limits = ConeLimits::from_env());

struct IrreducibilityCertificate {
  std::size_t splits_checked = 0;
  bool irreducible = true;
};

struct HilbertBasisResult {
  std::vector<IntVector> generators;  // sorted by degree, then lexicographically
  std::vector<IrreducibilityCertificate> certificates;
};

HilbertBasisResult hilbert_basis(const RankCone& c, const ConeLimits& limits = ConeLimits::from_env());

struct DecompositionResult {
  std::vector<std::vector<std::size_t>> decompositions;  // multisets of generator indices
  bool unique = false;
  bool truncated = false;
};

/// All decompositions of r into generators, up to `cap`. Throws InputError if
/// r is not an integral point of c.
DecompositionResult decompose_integral(const RankOnObjects& r, const RankCone& c,
                                       const HilbertBasisResult& basis, std::size_t cap = 16);

std::vector<Rational> coordinates(const RankOnObjects& r, const RankCone& c);

}  // namespace rankfn
