#pragma once

#include "rankfn/angulated.hpp"
#include "rankfn/rational.hpp"
#include "rankfn/report.hpp"

#include <map>
#include <vector>

namespace rankfn {

/// Nonnegative rational value on each indecomposable.
class RankOnObjects {
 public:
  RankOnObjects() = default;
  /// Throws InputError on a negative value.
  explicit RankOnObjects(std::map<IndecId, Rational> values);

  const std::map<IndecId, Rational>& values() const { return values_; }
  /// Throws InputError for a label outside the domain.
  const Rational& at(const IndecId& id) const;

  friend RankOnObjects operator+(const RankOnObjects& a, const RankOnObjects& b);
  friend RankOnObjects operator*(const Rational& c, const RankOnObjects& r);
  friend bool operator==(const RankOnObjects&, const RankOnObjects&) = default;

 private:
  std::map<IndecId, Rational> values_;
};

struct AngleDefect {
  AngleTemplate angle;
  Rational defect;
};

Rational eval_object(const RankOnObjects& r, const ObjectClass& x);

/// sum_i (-1)^i r(X_i)
AngleDefect angle_defect(const RankOnObjects& r, const AngleTemplate& a);

struct RoCheck {
  Report report;
  std::vector<AngleDefect> defects;  // one per closure angle, closure order
};

/// RO0/RO1 structural, RO2 on angle_closure(s, depth), RO3 on the suspension,
/// plus a domain section (values defined exactly on the skeleton's indecs).
RoCheck check_rank_on_objects(const RankOnObjects& r, const CategorySkeleton& s,
                              std::size_t depth);

bool is_integral(const RankOnObjects& r);

}  // namespace rankfn
