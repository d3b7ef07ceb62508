#pragma once

#include "rankfn/angulated.hpp"
#include "rankfn/rank_objects.hpp"

#include <map>

namespace rankfn {

/// An angle whose first arrow X_0 -> X_1 is the morphism being evaluated.
using MarkedAngle = AngleTemplate;

/// Throws ParityError unless d is odd.
void require_odd(int d, const std::string& operation);

/// 1/2 (r(X_0) + sum_{i=1}^{d+1} (-1)^{i-1} r(X_i)), without any gate.
Rational psi_formula(const RankOnObjects& r, const MarkedAngle& m);

/// Psi(r) on the marked arrow. ParityError for even d; Ro2Violation when the
/// value is negative.
Rational psi_eval(const RankOnObjects& r, const MarkedAngle& m);

/// The rank function on morphisms Psi(base).
struct RankOnMorphismsView {
  RankOnObjects base;
  int d = 1;

  Rational operator()(const MarkedAngle& m) const { return psi_eval(base, m); }
};

/// Phi: the value on 1_X, read through the trivial angle. No parity needed.
Rational phi_eval(const RankOnMorphismsView& rm, const ObjectClass& x);

/// A rank function on morphisms stored as explicit values: one per closure
/// marked angle and one per identity of an indecomposable.
struct MorphismRankTable {
  int d = 1;
  std::map<MarkedAngle, Rational> arrows;
  std::map<IndecId, Rational> identities;
};

MorphismRankTable tabulate(const RankOnObjects& r, const CategorySkeleton& s, std::size_t depth);

/// Phi of a table: X |-> value on 1_X.
RankOnObjects phi_of_table(const MorphismRankTable& t);

/// Phi(Psi(r)) = r on indecs, and every closure value of Psi(r) agrees with
/// the telescoped identity values 1/2 sum_{i=1}^{d+2} (-1)^{i-1} rho(1_{X_i}).
Report roundtrip_check(const RankOnObjects& r, const CategorySkeleton& s, std::size_t depth);

/// Compares an explicit morphism table with r: identities against r, arrow
/// values against the telescoping of r.
Report roundtrip_check(const MorphismRankTable& t, const RankOnObjects& r,
                       const CategorySkeleton& s, std::size_t depth);

/// RM0-RM3 and the suspension identity for Psi(r) on the closure.
Report rm_axiom_suite(const RankOnObjects& r, const CategorySkeleton& s, std::size_t depth);

}  // namespace rankfn
