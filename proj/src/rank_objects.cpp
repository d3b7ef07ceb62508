#include "rankfn/rank_objects.hpp"

#include "rankfn/errors.hpp"

#include <set>

namespace rankfn {

RankOnObjects::RankOnObjects(std::map<IndecId, Rational> values) : values_(std::move(values)) {
  for (const auto& [id, v] : values_) {
    if (v < 0) throw InputError("negative rank value " + format_rational(v) + " on \"" + id + "\"");
  }
}

const Rational& RankOnObjects::at(const IndecId& id) const {
  auto it = values_.find(id);
  if (it == values_.end()) throw InputError("rank function undefined on \"" + id + "\"");
  return it->second;
}

RankOnObjects operator+(const RankOnObjects& a, const RankOnObjects& b) {
  auto values = a.values_;
  for (const auto& [id, v] : b.values_) values[id] += v;
  return RankOnObjects(std::move(values));
}

RankOnObjects operator*(const Rational& c, const RankOnObjects& r) {
  auto values = r.values_;
  for (auto& [id, v] : values) v *= c;
  return RankOnObjects(std::move(values));
}

Rational eval_object(const RankOnObjects& r, const ObjectClass& x) {
  Rational total = 0;
  for (const auto& [id, m] : x.summands()) total += r.at(id) * static_cast<long>(m);
  return total;
}

AngleDefect angle_defect(const RankOnObjects& r, const AngleTemplate& a) {
  Rational total = 0;
  for (std::size_t i = 0; i < a.objects.size(); ++i) {
    const Rational v = eval_object(r, a.objects[i]);
    if (i % 2 == 0) total += v;
    else total -= v;
  }
  return {a, total};
}

RoCheck check_rank_on_objects(const RankOnObjects& r, const CategorySkeleton& s,
                              std::size_t depth) {
  RoCheck out;
  auto& rep = out.report;

  auto& dom = rep.add("domain");
  std::set<IndecId> known(s.indecs.begin(), s.indecs.end());
  for (const auto& id : s.indecs) {
    ++dom.checked;
    if (!r.values().count(id)) dom.fail(id, "no value for \"" + id + "\"");
  }
  for (const auto& [id, v] : r.values()) {
    if (!known.count(id)) dom.fail(id, "value given for unknown indec \"" + id + "\"");
  }
  if (!dom.ok()) return out;

  rep.add_structural("RO0", "objects are multisets of indecomposables; isomorphic objects coincide");
  rep.add_structural("RO1", "values on objects are sums over summands");

  auto& ro2 = rep.add("RO2");
  auto closure = angle_closure(s, depth);
  for (std::size_t k = 0; k < closure.size(); ++k) {
    auto def = angle_defect(r, closure[k]);
    ++ro2.checked;
    if (def.defect < 0) {
      ro2.fail("closure[" + std::to_string(k) + "] " + to_string(closure[k]),
               "defect " + format_rational(def.defect) + " < 0");
    }
    out.defects.push_back(std::move(def));
  }

  auto& ro3 = rep.add("RO3");
  for (const auto& id : s.indecs) {
    ++ro3.checked;
    const auto& img = s.suspension.apply(id);
    if (r.at(id) != r.at(img)) {
      ro3.fail(id, "value " + format_rational(r.at(id)) + " but suspension \"" + img +
                       "\" has " + format_rational(r.at(img)));
    }
  }
  return out;
}

bool is_integral(const RankOnObjects& r) {
  for (const auto& [id, v] : r.values()) {
    if (!is_integer(v)) return false;
  }
  return true;
}

}  // namespace rankfn
