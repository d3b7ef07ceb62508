#include "rankfn/additive.hpp"

#include "rankfn/errors.hpp"
#include "rankfn/rank_morphisms.hpp"

#include <random>

namespace rankfn {

AdditiveFn::AdditiveFn(std::vector<Rational> simple_values) : values_(std::move(simple_values)) {
  for (std::size_t v = 0; v < values_.size(); ++v) {
    if (values_[v] < 0) {
      throw InputError("negative additive value " + format_rational(values_[v]) + " on S_" +
                       std::to_string(v + 1));
    }
  }
}

AdditiveFn operator+(const AdditiveFn& a, const AdditiveFn& b) {
  if (a.values_.size() != b.values_.size()) throw InputError("additive functions on different algebras");
  auto values = a.values_;
  for (std::size_t v = 0; v < values.size(); ++v) values[v] += b.values_[v];
  return AdditiveFn(std::move(values));
}

namespace {

void require_size(const AdditiveFn& alpha, int n) {
  if (alpha.size() != n) {
    throw InputError("additive function has " + std::to_string(alpha.size()) +
                     " simple values, algebra has " + std::to_string(n) + " vertices");
  }
}

}  // namespace

Rational eval_additive(const AdditiveFn& alpha, const NakayamaModule& m, const NakayamaAlgebra& a) {
  require_size(alpha, a.n);
  const auto factors = composition_factors(m, a);
  Rational total = 0;
  for (std::size_t v = 0; v < factors.size(); ++v) total += alpha.values()[v] * factors[v];
  return total;
}

bool check_sigma_invariant(const AdditiveFn& alpha, const TwistData& t) {
  require_size(alpha, static_cast<int>(t.sigma.size()));
  for (int v = 1; v <= alpha.size(); ++v) {
    if (alpha.at(t.apply(v)) != alpha.at(v)) return false;
  }
  return true;
}

Rational varphi_eval(const AdditiveFn& alpha, const ProjMorphism& f, const NakayamaAlgebra& a) {
  return eval_additive(alpha, image_of(f, a), a);
}

ProjMorphism presenting_morphism(const NakayamaModule& m, const NakayamaAlgebra& a) {
  validate_module(m, a);
  if (!a.self_injective()) throw InputError("presenting morphisms need a cyclic (self-injective) algebra");
  ProjMorphism f = ProjMorphism::zero({}, {});
  for (const auto& x : m.summands) {
    f = direct_sum(f, ProjMorphism::single_path(x.top, a.vertex(x.top + a.ell - x.length),
                                                a.ell - x.length));
  }
  return f;
}

Rational psi_mod_eval(const MorphismRank& rm, const NakayamaModule& m, const NakayamaAlgebra& a,
                      int d) {
  require_odd(d, "psi");
  return rm(presenting_morphism(m, a));
}

AdditiveFn orbit_indicator(const std::vector<int>& orbit, int n) {
  std::vector<Rational> values(static_cast<std::size_t>(n), 0);
  for (int v : orbit) values.at(static_cast<std::size_t>(v - 1)) = 1;
  return AdditiveFn(std::move(values));
}

std::vector<OrbitTerm> decompose_invariant(const AdditiveFn& alpha, const TwistData& t) {
  for (int v = 1; v <= alpha.size(); ++v) {
    if (!is_integer(alpha.at(v))) {
      throw InputError("decomposition needs an integral additive function; S_" + std::to_string(v) +
                       " has " + format_rational(alpha.at(v)));
    }
  }
  if (!check_sigma_invariant(alpha, t)) throw InputError("additive function is not Sigma-invariant");
  std::vector<OrbitTerm> out;
  for (const auto& orbit : t.orbits) {
    const Integer c = numerator(alpha.at(orbit.front()));
    if (c != 0) out.push_back({orbit, c});
  }
  return out;
}

EngineContext make_context(const NakayamaAlgebra& a, int d) { return {a, twist_data(a, d)}; }

MorphismRank varphi(const AdditiveFn& alpha, const EngineContext& ctx) {
  require_size(alpha, ctx.algebra.n);
  return [alpha, a = ctx.algebra](const ProjMorphism& f) { return varphi_eval(alpha, f, a); };
}

MorphismRank psi_from_objects(const RankOnObjects& rho, const EngineContext& ctx) {
  require_odd(ctx.twist.d, "Psi");
  return [rho, ctx](const ProjMorphism& f) {
    return psi_eval(rho, complete_morphism(f, ctx.algebra, ctx.twist));
  };
}

RankOnObjects objects_from_additive(const AdditiveFn& alpha, const EngineContext& ctx) {
  std::map<IndecId, Rational> values;
  for (int v = 1; v <= ctx.algebra.n; ++v) {
    values[projective_label(v)] = eval_additive(alpha, projective_module(v, ctx.algebra), ctx.algebra);
  }
  return RankOnObjects(std::move(values));
}

AdditiveFn additive_from_morphism_rank(const MorphismRank& rm, const EngineContext& ctx) {
  std::vector<Rational> values;
  for (int v = 1; v <= ctx.algebra.n; ++v) {
    values.push_back(psi_mod_eval(rm, NakayamaModule{{v, 1}}, ctx.algebra, ctx.twist.d));
  }
  return AdditiveFn(std::move(values));
}

std::vector<ProjMorphism> sample_morphisms(const NakayamaAlgebra& a, std::size_t extra,
                                           std::uint32_t seed) {
  std::vector<ProjMorphism> out;
  for (int i = 1; i <= a.n; ++i) {
    for (int j = 1; j <= a.n; ++j) {
      for (int k : hom_basis(i, j, a)) out.push_back(ProjMorphism::single_path(i, j, k));
    }
  }
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> vert(1, a.n);
  std::uniform_int_distribution<int> count(1, 2);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (std::size_t s = 0; s < extra; ++s) {
    std::vector<int> source, target;
    for (int c = count(gen); c > 0; --c) source.push_back(vert(gen));
    for (int c = count(gen); c > 0; --c) target.push_back(vert(gen));
    auto f = ProjMorphism::zero(source, target);
    for (std::size_t r = 0; r < target.size(); ++r) {
      for (std::size_t c = 0; c < source.size(); ++c) {
        for (int k : hom_basis(source[c], target[r], a)) {
          const int x = coeff(gen);
          if (x != 0) f.entries[r][c].push_back({k, x});
        }
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

std::string describe(const ProjMorphism& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.source.size(); ++i) out += (i ? "," : "") + projective_label(f.source[i]);
  out += "]->[";
  for (std::size_t i = 0; i < f.target.size(); ++i) out += (i ? "," : "") + projective_label(f.target[i]);
  out += "]";
  for (const auto& row : f.entries) {
    out += " |";
    for (const auto& cell : row) {
      out += " ";
      if (cell.empty()) out += "0";
      for (std::size_t t = 0; t < cell.size(); ++t) {
        out += (t ? "+" : "") + format_rational(cell[t].coeff) + "*p" + std::to_string(cell[t].length);
      }
    }
  }
  return out;
}

std::string describe(const AdditiveFn& alpha) {
  std::string out = "(";
  for (int v = 1; v <= alpha.size(); ++v) out += (v > 1 ? "," : "") + format_rational(alpha.at(v));
  return out + ")";
}

bool integral(const AdditiveFn& alpha) {
  for (const auto& v : alpha.values()) {
    if (!is_integer(v)) return false;
  }
  return true;
}

}  // namespace

Report correspondence_suite(const std::vector<AdditiveFn>& alphas, const EngineContext& ctx,
                            const std::vector<ProjMorphism>& morphisms) {
  require_odd(ctx.twist.d, "correspondence suite");
  const auto& a = ctx.algebra;
  Report rep;

  auto& inv = rep.add("invariance");
  std::vector<AdditiveFn> ok;
  for (const auto& alpha : alphas) {
    ++inv.checked;
    if (check_sigma_invariant(alpha, ctx.twist)) ok.push_back(alpha);
    else inv.fail(describe(alpha), "not Sigma-invariant");
  }

  auto& pp = rep.add("psi-phi");
  for (const auto& alpha : ok) {
    const auto rm = varphi(alpha, ctx);
    for (const auto& x : all_intervals(a)) {
      ++pp.checked;
      const NakayamaModule m{x};
      const Rational got = psi_mod_eval(rm, m, a, ctx.twist.d);
      const Rational want = eval_additive(alpha, m, a);
      if (got != want) {
        pp.fail(describe(alpha) + " on " + to_string(m),
                "psi(varphi) gives " + format_rational(got) + ", expected " + format_rational(want));
      }
    }
  }

  auto& ph = rep.add("phi-psi");
  std::vector<MorphismRank> rms;
  for (const auto& alpha : ok) {
    const auto rm = psi_from_objects(objects_from_additive(alpha, ctx), ctx);
    rms.push_back(rm);
    const auto back = varphi(additive_from_morphism_rank(rm, ctx), ctx);
    for (const auto& f : morphisms) {
      ++ph.checked;
      try {
        const Rational want = rm(f);
        const Rational got = back(f);
        if (got != want) {
          ph.fail(describe(alpha) + " on " + describe(f),
                  "varphi(psi) gives " + format_rational(got) + ", rank gives " + format_rational(want));
        }
      } catch (const Ro2Violation& e) {
        ph.fail(describe(alpha) + " on " + describe(f), e.what());
      }
    }
  }

  auto& add = rep.add("additivity");
  for (std::size_t i = 0; i < ok.size(); ++i) {
    for (std::size_t j = i; j < ok.size(); ++j) {
      const auto sum = varphi(ok[i] + ok[j], ctx);
      const auto fi = varphi(ok[i], ctx);
      const auto fj = varphi(ok[j], ctx);
      for (const auto& f : morphisms) {
        ++add.checked;
        if (sum(f) != fi(f) + fj(f)) {
          add.fail(describe(ok[i]) + "+" + describe(ok[j]) + " on " + describe(f), "varphi is not additive");
        }
      }
      const MorphismRank rsum = [&](const ProjMorphism& f) { return rms[i](f) + rms[j](f); };
      ++add.checked;
      const auto lhs = additive_from_morphism_rank(rsum, ctx);
      const auto rhs = additive_from_morphism_rank(rms[i], ctx) + additive_from_morphism_rank(rms[j], ctx);
      if (lhs != rhs) {
        add.fail(describe(ok[i]) + "+" + describe(ok[j]), "psi is not additive: " + describe(lhs) +
                                                            " vs " + describe(rhs));
      }
    }
  }

  auto& integ = rep.add("integrality");
  for (std::size_t i = 0; i < ok.size(); ++i) {
    const auto rm = varphi(ok[i], ctx);
    bool all_integral = true;
    for (const auto& f : morphisms) all_integral = all_integral && is_integer(rm(f));
    for (int v = 1; v <= a.n; ++v) {
      all_integral = all_integral && is_integer(rm(presenting_morphism(NakayamaModule{{v, 1}}, a)));
    }
    ++integ.checked;
    if (all_integral != integral(ok[i])) {
      integ.fail(describe(ok[i]), integral(ok[i]) ? "integral additive function, non-integral rank values"
                                                  : "non-integral additive function, integral rank values");
    }
    ++integ.checked;
    if (integral(additive_from_morphism_rank(rms[i], ctx)) != integral(ok[i])) {
      integ.fail(describe(ok[i]), "psi does not preserve integrality");
    }
  }

  auto& irr = rep.add("irreducibility");
  const auto& orbits = ctx.twist.orbits;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    ++irr.checked;
    const auto beta = orbit_indicator(orbits[o], a.n);
    std::size_t splits = 0;
    for (unsigned mask = 1; mask + 1 < (1u << orbits[o].size()); ++mask) {
      std::vector<int> part;
      for (std::size_t b = 0; b < orbits[o].size(); ++b) {
        if (mask & (1u << b)) part.push_back(orbits[o][b]);
      }
      if (check_sigma_invariant(orbit_indicator(part, a.n), ctx.twist)) ++splits;
    }
    if (splits) irr.fail(describe(beta), "orbit indicator splits");
    const auto rm = varphi(beta, ctx);
    for (const auto& f : morphisms) {
      if (!is_integer(rm(f))) {
        irr.fail(describe(beta), "image is not an integral rank function");
        break;
      }
    }
  }
  return rep;
}

}  // namespace rankfn
