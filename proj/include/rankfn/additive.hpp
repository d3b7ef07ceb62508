#pragma once

#include "rankfn/nakayama.hpp"
#include "rankfn/rank_objects.hpp"
#include "rankfn/report.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace rankfn {

/// Additive function on mod A, stored by its values on the simples S_1..S_n.
class AdditiveFn {
 public:
  AdditiveFn() = default;
  /// Throws InputError on a negative value.
  explicit AdditiveFn(std::vector<Rational> simple_values);

  const std::vector<Rational>& values() const { return values_; }
  const Rational& at(int v) const { return values_.at(static_cast<std::size_t>(v - 1)); }
  int size() const { return static_cast<int>(values_.size()); }

  friend AdditiveFn operator+(const AdditiveFn& a, const AdditiveFn& b);
  friend bool operator==(const AdditiveFn&, const AdditiveFn&) = default;

 private:
  std::vector<Rational> values_;
};

Rational eval_additive(const AdditiveFn& alpha, const NakayamaModule& m, const NakayamaAlgebra& a);

bool check_sigma_invariant(const AdditiveFn& alpha, const TwistData& t);

/// alpha(Im f)
Rational varphi_eval(const AdditiveFn& alpha, const ProjMorphism& f, const NakayamaAlgebra& a);

using MorphismRank = std::function<Rational(const ProjMorphism&)>;

/// Projective cover of m followed by the envelope path into P(top + ell - t),
/// summand by summand; its image is m.
ProjMorphism presenting_morphism(const NakayamaModule& m, const NakayamaAlgebra& a);

/// psi(rm)(m) = rm(f) for the presenting morphism f of m. ParityError for even d.
Rational psi_mod_eval(const MorphismRank& rm, const NakayamaModule& m, const NakayamaAlgebra& a,
                      int d);

struct OrbitTerm {
  std::vector<int> orbit;
  Integer multiplicity;
};

AdditiveFn orbit_indicator(const std::vector<int>& orbit, int n);

/// alpha = sum c_O * indicator(O) over the sigma orbits with c_O != 0.
/// Throws InputError unless alpha is integral and invariant.
std::vector<OrbitTerm> decompose_invariant(const AdditiveFn& alpha, const TwistData& t);

struct EngineContext {
  NakayamaAlgebra algebra;
  TwistData twist;
};

EngineContext make_context(const NakayamaAlgebra& a, int d);

MorphismRank varphi(const AdditiveFn& alpha, const EngineContext& ctx);

/// f |-> Psi(rho)(f), evaluated on the completion of f to an angle.
MorphismRank psi_from_objects(const RankOnObjects& rho, const EngineContext& ctx);

/// P(v) |-> alpha(P(v)), labels "P<v>".
RankOnObjects objects_from_additive(const AdditiveFn& alpha, const EngineContext& ctx);

/// S_v |-> rm(presenting morphism of S_v). ParityError for even d.
AdditiveFn additive_from_morphism_rank(const MorphismRank& rm, const EngineContext& ctx);

/// Fixed-seed sample: every single-path morphism plus `extra` random
/// combinations between sums of at most two projectives.
std::vector<ProjMorphism> sample_morphisms(const NakayamaAlgebra& a, std::size_t extra,
                                           std::uint32_t seed = 20240601u);

/// Both round trips, additivity of varphi and psi on all pairs, preservation
/// of integrality, and irreducibility of orbit indicators.
Report correspondence_suite(const std::vector<AdditiveFn>& alphas, const EngineContext& ctx,
                            const std::vector<ProjMorphism>& morphisms);

}  // namespace rankfn
