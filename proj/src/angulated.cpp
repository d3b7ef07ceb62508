#include "rankfn/angulated.hpp"

#include "rankfn/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rankfn {

ObjectClass::ObjectClass(std::initializer_list<IndecId> summands) {
  for (const auto& id : summands) add(id);
}

ObjectClass::ObjectClass(const std::vector<IndecId>& summands) {
  for (const auto& id : summands) add(id);
}

void ObjectClass::add(const IndecId& id, std::size_t multiplicity) {
  if (multiplicity == 0) return;
  summands_[id] += multiplicity;
}

std::size_t ObjectClass::count() const {
  std::size_t total = 0;
  for (const auto& [id, m] : summands_) total += m;
  return total;
}

std::size_t ObjectClass::multiplicity(const IndecId& id) const {
  auto it = summands_.find(id);
  return it == summands_.end() ? 0 : it->second;
}

std::vector<IndecId> ObjectClass::labels() const {
  std::vector<IndecId> out;
  for (const auto& [id, m] : summands_) out.insert(out.end(), m, id);
  return out;
}

ObjectClass& ObjectClass::operator+=(const ObjectClass& other) {
  for (const auto& [id, m] : other.summands_) summands_[id] += m;
  return *this;
}

std::string to_string(const ObjectClass& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& id : x.labels()) {
    if (!out.empty()) out += "+";
    out += id;
  }
  return out;
}

const IndecId& Suspension::apply(const IndecId& id) const {
  auto it = perm.find(id);
  if (it == perm.end()) throw InputError("suspension undefined on \"" + id + "\"");
  return it->second;
}

ObjectClass Suspension::apply(const ObjectClass& x) const {
  ObjectClass out;
  for (const auto& [id, m] : x.summands()) out.add(apply(id), m);
  return out;
}

std::size_t Suspension::order() const {
  std::size_t order = 1;
  std::set<IndecId> seen;
  for (const auto& [start, image] : perm) {
    if (seen.count(start)) continue;
    std::size_t len = 0;
    IndecId cur = start;
    // a non-bijective map may never come back; cap the walk
    while (len <= perm.size()) {
      seen.insert(cur);
      auto it = perm.find(cur);
      if (it == perm.end()) break;
      cur = it->second;
      ++len;
      if (cur == start) break;
    }
    if (cur == start && len > 0) order = std::lcm(order, len);
  }
  return order;
}

std::string to_string(const AngleTemplate& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.objects.size(); ++i) {
    if (i) out += ", ";
    out += to_string(a.objects[i]);
  }
  return out + ")";
}

bool CategorySkeleton::contains(const IndecId& id) const {
  return std::find(indecs.begin(), indecs.end(), id) != indecs.end();
}

Report validate_skeleton(const CategorySkeleton& s) {
  Report report;
  std::set<IndecId> known;

  auto& dsec = report.add("d");
  dsec.checked = 1;
  if (s.d < 1) dsec.fail("d", "d must be a positive integer, got " + std::to_string(s.d));

  auto& ids = report.add("indecs");
  for (std::size_t i = 0; i < s.indecs.size(); ++i) {
    ++ids.checked;
    if (!known.insert(s.indecs[i]).second) {
      ids.fail("indecs[" + std::to_string(i) + "]", "duplicate IndecId \"" + s.indecs[i] + "\"");
    }
  }

  auto& sus = report.add("suspension");
  std::set<IndecId> images;
  for (const auto& [from, to] : s.suspension.perm) {
    ++sus.checked;
    if (!known.count(from)) sus.fail("suspension." + from, "unknown IndecId \"" + from + "\"");
    if (!known.count(to)) sus.fail("suspension." + from, "unknown IndecId \"" + to + "\"");
    if (!images.insert(to).second) {
      sus.fail("suspension." + from, "not a bijection: \"" + to + "\" is hit twice");
    }
  }
  for (const auto& id : known) {
    if (!s.suspension.perm.count(id)) sus.fail("suspension", "undefined on \"" + id + "\"");
  }

  auto& ang = report.add("angles");
  const std::size_t want = static_cast<std::size_t>(std::max(s.d, 0)) + 2;
  for (std::size_t a = 0; a < s.angles.size(); ++a) {
    ++ang.checked;
    const auto& angle = s.angles[a];
    const std::string loc = "angles[" + std::to_string(a) + "]";
    if (angle.d != s.d) {
      ang.fail(loc, "angle has d=" + std::to_string(angle.d) + ", skeleton has d=" +
                        std::to_string(s.d));
    }
    if (angle.objects.size() != want) {
      ang.fail(loc, "angle length " + std::to_string(angle.objects.size()) + ", expected " +
                        std::to_string(want));
    }
    for (std::size_t i = 0; i < angle.objects.size(); ++i) {
      for (const auto& [id, m] : angle.objects[i].summands()) {
        if (!known.count(id)) {
          ang.fail(loc + "[" + std::to_string(i) + "]", "unknown IndecId \"" + id + "\"");
        }
      }
    }
  }
  return report;
}

AngleTemplate rotate_angle(const AngleTemplate& a, const CategorySkeleton& s) {
  AngleTemplate out{a.d, {}};
  if (a.objects.empty()) return out;
  out.objects.assign(a.objects.begin() + 1, a.objects.end());
  out.objects.push_back(s.suspension.apply(a.objects.front()));
  return out;
}

AngleTemplate suspend_angle(const AngleTemplate& a, const Suspension& sigma) {
  AngleTemplate out{a.d, {}};
  for (const auto& x : a.objects) out.objects.push_back(sigma.apply(x));
  return out;
}

AngleTemplate direct_sum_angles(const AngleTemplate& a, const AngleTemplate& b) {
  if (a.d != b.d || a.objects.size() != b.objects.size()) {
    throw InputError("direct sum of angles with d=" + std::to_string(a.d) + " and d=" +
                     std::to_string(b.d));
  }
  AngleTemplate out = a;
  for (std::size_t i = 0; i < out.objects.size(); ++i) out.objects[i] += b.objects[i];
  return out;
}

AngleTemplate trivial_angle(const ObjectClass& x, int d) {
  if (d < 1) throw InputError("d must be positive");
  AngleTemplate out{d, std::vector<ObjectClass>(static_cast<std::size_t>(d) + 2)};
  out.objects[0] = x;
  out.objects[1] = x;
  return out;
}

std::vector<AngleTemplate> angle_closure(const CategorySkeleton& s, std::size_t depth) {
  std::vector<AngleTemplate> out;
  std::set<AngleTemplate> seen;
  const std::size_t steps = depth * (static_cast<std::size_t>(s.d) + 2);
  for (const auto& g : s.angles) {
    if (!seen.insert(g).second) continue;
    out.push_back(g);
    AngleTemplate cur = g;
    for (std::size_t k = 0; k < steps; ++k) {
      cur = rotate_angle(cur, s);
      if (cur == g) break;
      if (seen.insert(cur).second) out.push_back(cur);
    }
  }
  return out;
}

std::size_t default_depth(const CategorySkeleton& s) { return s.suspension.order(); }

}  // namespace rankfn
