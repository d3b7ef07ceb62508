#include "rankfn/rank_morphisms.hpp"

#include "rankfn/errors.hpp"

namespace rankfn {

void require_odd(int d, const std::string& operation) {
  if (d % 2 == 0) {
    throw ParityError(operation + " refused for d=" + std::to_string(d) +
                      ": the correspondence between rank functions on objects and on "
                      "morphisms holds for odd d only");
  }
}

Rational psi_formula(const RankOnObjects& r, const MarkedAngle& m) {
  if (m.objects.empty()) return 0;
  Rational total = eval_object(r, m.objects[0]);
  for (std::size_t i = 1; i < m.objects.size(); ++i) {
    const Rational v = eval_object(r, m.objects[i]);
    if (i % 2 == 1) total += v;
    else total -= v;
  }
  return half(total);
}

Rational psi_eval(const RankOnObjects& r, const MarkedAngle& m) {
  require_odd(m.d, "Psi");
  Rational v = psi_formula(r, m);
  if (v < 0) {
    throw Ro2Violation("Psi value " + format_rational(v) + " on " + to_string(m) +
                       ": the rotated angle has negative defect");
  }
  return v;
}

Rational phi_eval(const RankOnMorphismsView& rm, const ObjectClass& x) {
  return psi_formula(rm.base, trivial_angle(x, rm.d));
}

MorphismRankTable tabulate(const RankOnObjects& r, const CategorySkeleton& s, std::size_t depth) {
  require_odd(s.d, "Psi");
  MorphismRankTable t{s.d, {}, {}};
  for (const auto& a : angle_closure(s, depth)) t.arrows[a] = psi_eval(r, a);
  for (const auto& id : s.indecs) t.identities[id] = psi_eval(r, trivial_angle({id}, s.d));
  return t;
}

RankOnObjects phi_of_table(const MorphismRankTable& t) { return RankOnObjects(t.identities); }

namespace {

Rational identity_value(const std::map<IndecId, Rational>& ids, const ObjectClass& x) {
  Rational total = 0;
  for (const auto& [id, m] : x.summands()) {
    auto it = ids.find(id);
    if (it == ids.end()) throw InputError("no identity value for \"" + id + "\"");
    total += it->second * static_cast<long>(m);
  }
  return total;
}

// 2 rho(x_0) = sum_{i=1}^{d+2} (-1)^{i-1} rho(1_{X_i}), X_{d+2} = Sigma X_0
Rational telescoped(const std::map<IndecId, Rational>& ids, const MarkedAngle& a,
                    const Suspension& sigma) {
  Rational total = 0;
  for (std::size_t i = 1; i <= a.objects.size(); ++i) {
    const ObjectClass& x = i < a.objects.size() ? a.objects[i] : sigma.apply(a.objects[0]);
    const Rational v = identity_value(ids, x);
    if (i % 2 == 1) total += v;
    else total -= v;
  }
  return half(total);
}

void compare_identities(CheckSection& sec, const std::map<IndecId, Rational>& got,
                        const RankOnObjects& r, const CategorySkeleton& s) {
  for (const auto& id : s.indecs) {
    ++sec.checked;
    auto it = got.find(id);
    if (it == got.end()) {
      sec.fail(id, "no identity value");
    } else if (it->second != r.at(id)) {
      sec.fail(id, "Phi gives " + format_rational(it->second) + ", rank function has " +
                       format_rational(r.at(id)));
    }
  }
}

}  // namespace

Report roundtrip_check(const RankOnObjects& r, const CategorySkeleton& s, std::size_t depth) {
  return roundtrip_check(tabulate(r, s, depth), r, s, depth);
}

Report roundtrip_check(const MorphismRankTable& t, const RankOnObjects& r,
                       const CategorySkeleton& s, std::size_t depth) {
  require_odd(s.d, "round trip");
  Report rep;
  auto& phi = rep.add("phi-psi");
  compare_identities(phi, t.identities, r, s);

  auto& tel = rep.add("telescoping");
  std::map<IndecId, Rational> ids;
  for (const auto& [id, v] : r.values()) ids[id] = v;
  for (const auto& a : angle_closure(s, depth)) {
    ++tel.checked;
    auto it = t.arrows.find(a);
    const Rational expect = telescoped(ids, a, s.suspension);
    if (it == t.arrows.end()) {
      tel.fail(to_string(a), "marked angle missing from table");
    } else if (it->second != expect) {
      tel.fail(to_string(a), "value " + format_rational(it->second) +
                                 ", telescoped identities give " + format_rational(expect));
    }
  }
  return rep;
}

Report rm_axiom_suite(const RankOnObjects& r, const CategorySkeleton& s, std::size_t depth) {
  require_odd(s.d, "RM axiom suite");
  Report rep;
  const auto closure = angle_closure(s, depth);
  RankOnMorphismsView rho{r, s.d};

  auto& rm0 = rep.add("RM0");
  for (const auto& a : closure) {
    ++rm0.checked;
    try {
      rho(a);
    } catch (const Ro2Violation& e) {
      rm0.fail(to_string(a), e.what());
    }
  }
  for (const auto& id : s.indecs) {
    ++rm0.checked;
    if (phi_eval(rho, {id}) < 0) rm0.fail(id, "negative value on identity");
  }
  if (!rm0.ok()) return rep;

  auto& rm1 = rep.add("RM1");
  for (std::size_t i = 0; i < closure.size(); ++i) {
    for (std::size_t j = i; j < closure.size(); ++j) {
      ++rm1.checked;
      const auto sum = direct_sum_angles(closure[i], closure[j]);
      const Rational lhs = rho(sum);
      const Rational rhs = rho(closure[i]) + rho(closure[j]);
      if (lhs != rhs) {
        rm1.fail(to_string(sum), format_rational(lhs) + " != " + format_rational(rhs));
      }
    }
  }

  auto& rm2 = rep.add("RM2");
  for (const auto& a : closure) {
    AngleTemplate cur = a;
    for (int i = 0; i <= s.d + 1; ++i) {
      ++rm2.checked;
      AngleTemplate next = rotate_angle(cur, s);
      const Rational v = rho(cur) - phi_eval(rho, cur.objects[1]) + rho(next);
      if (v != 0) {
        rm2.fail(to_string(a) + " arrows " + std::to_string(i) + "," + std::to_string(i + 1),
                 "rho(f) - rho(1_Y) + rho(g) = " + format_rational(v));
      }
      cur = std::move(next);
    }
  }

  auto& rm3 = rep.add("RM3");
  for (const auto& a : closure) {
    ++rm3.checked;
    const Rational v = rho(a);
    const Rational w = rho(suspend_angle(a, s.suspension));
    if (v != w) {
      rm3.fail(to_string(a), format_rational(v) + " before suspension, " + format_rational(w) +
                                 " after");
    }
  }

  auto& lem = rep.add("suspension-identity");
  for (const auto& a : closure) {
    ++lem.checked;
    const auto sa = suspend_angle(a, s.suspension);
    Rational rhs = 0;
    for (std::size_t i = 0; i < a.objects.size(); ++i) {
      const ObjectClass& x = i + 1 < a.objects.size() ? a.objects[i + 1] : sa.objects[0];
      const Rational v = phi_eval(rho, x);
      if (i % 2 == 0) rhs += v;
      else rhs -= v;
    }
    const Rational lhs = rho(a) + rho(sa);
    if (lhs != rhs) {
      lem.fail(to_string(a), format_rational(lhs) + " != " + format_rational(rhs));
    }
  }
  return rep;
}

}  // namespace rankfn
