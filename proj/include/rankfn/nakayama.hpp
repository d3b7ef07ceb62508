#pragma once

#include "rankfn/angulated.hpp"
#include "rankfn/linalg.hpp"
#include "rankfn/rational.hpp"
#include "rankfn/report.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace rankfn {

enum class Shape { Cyclic, Linear };

/// kQ/rad^ell for the cyclic or linear quiver on vertices 1..n with arrows
/// i -> i-1. M(i,t) has top S_i and factors S_i, S_{i-1}, ..., S_{i-t+1}.
struct NakayamaAlgebra {
  int n = 1;
  int ell = 2;
  Shape shape = Shape::Cyclic;

  /// Throws InputError unless n >= 1 and ell >= 2.
  void validate() const;

  /// Vertex v reduced into 1..n (cyclic); 0 when off the quiver (linear).
  int vertex(int v) const;
  /// Length of P(v).
  int projective_length(int v) const;
  bool self_injective() const { return shape == Shape::Cyclic; }

  friend bool operator==(const NakayamaAlgebra&, const NakayamaAlgebra&) = default;
};

std::string to_string(Shape s);

/// M(top, length)
struct Interval {
  int top = 1;
  int length = 1;
  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

struct NakayamaModule {
  std::vector<Interval> summands;  // sorted

  NakayamaModule() = default;
  NakayamaModule(std::initializer_list<Interval> list);
  explicit NakayamaModule(std::vector<Interval> list);

  void add(Interval x, std::size_t multiplicity = 1);
  bool is_zero() const { return summands.empty(); }

  NakayamaModule& operator+=(const NakayamaModule& other);
  friend NakayamaModule operator+(NakayamaModule a, const NakayamaModule& b) { return a += b; }
  friend bool operator==(const NakayamaModule&, const NakayamaModule&) = default;
  friend auto operator<=>(const NakayamaModule&, const NakayamaModule&) = default;
};

std::string to_string(const NakayamaModule& m);

/// Throws InputError on an interval that does not exist over a.
void validate_module(const NakayamaModule& m, const NakayamaAlgebra& a);

bool is_projective(const Interval& x, const NakayamaAlgebra& a);
NakayamaModule projective_module(int v, const NakayamaAlgebra& a);

/// Every indecomposable module, ordered by top then length.
std::vector<Interval> all_intervals(const NakayamaAlgebra& a);

/// Multiplicity of each simple S_1..S_n (index v-1).
std::vector<long> composition_factors(const NakayamaModule& m, const NakayamaAlgebra& a);

/// Basis of Hom(P(i), P(j)): lengths k of the paths j -> ... -> j-k = i with k < len P(j).
std::vector<int> hom_basis(int i, int j, const NakayamaAlgebra& a);

struct PathTerm {
  int length = 0;
  Rational coeff = 1;
  friend bool operator==(const PathTerm&, const PathTerm&) = default;
};

/// A morphism between direct sums of indecomposable projectives; entry
/// [r][c] is a combination of paths from target slot r down to source slot c.
struct ProjMorphism {
  std::vector<int> source;
  std::vector<int> target;
  std::vector<std::vector<std::vector<PathTerm>>> entries;

  static ProjMorphism zero(std::vector<int> source, std::vector<int> target);
  static ProjMorphism identity(const std::vector<int>& objects);
  static ProjMorphism single_path(int from, int to, int length, Rational coeff = 1);
};

/// Throws InputError if shapes disagree or a term is not a Hom basis path.
void validate_morphism(const ProjMorphism& f, const NakayamaAlgebra& a);

/// g o f; paths that run past the bottom of their target vanish.
ProjMorphism compose(const ProjMorphism& g, const ProjMorphism& f, const NakayamaAlgebra& a);
ProjMorphism direct_sum(const ProjMorphism& f, const ProjMorphism& g);

/// A module as a graded vector space with the action of the arrows: basis
/// vector b sits at vertex[b]; arrow maps vertex v to v-1.
struct Representation {
  std::vector<int> vertex;
  Matrix arrow;
};

Representation realize(const NakayamaModule& m, const NakayamaAlgebra& a);
Representation realize_projectives(const std::vector<int>& objects, const NakayamaAlgebra& a);

/// Linear map of f in the bases of realize_projectives.
Matrix morphism_matrix(const ProjMorphism& f, const NakayamaAlgebra& a);

/// Iso class of the subrepresentation spanned by the columns of span.
NakayamaModule identify_subrepresentation(const Representation& v, const Matrix& span,
                                          const NakayamaAlgebra& a);
/// Iso class of v / span.
NakayamaModule identify_quotient(const Representation& v, const Matrix& span,
                                 const NakayamaAlgebra& a);

NakayamaModule image_of(const ProjMorphism& f, const NakayamaAlgebra& a);
NakayamaModule kernel_of(const ProjMorphism& f, const NakayamaAlgebra& a);
NakayamaModule cokernel_of(const ProjMorphism& f, const NakayamaAlgebra& a);

/// Tops of the summands, i.e. P(v) for each.
std::vector<int> projective_cover(const NakayamaModule& m, const NakayamaAlgebra& a);
/// Kernel of the projective cover.
NakayamaModule syzygy(const NakayamaModule& m, const NakayamaAlgebra& a);
/// Injective envelope as projectives (self-injective only).
std::vector<int> injective_envelope(const NakayamaModule& m, const NakayamaAlgebra& a);
/// Cokernel of the injective envelope (self-injective only).
NakayamaModule cosyzygy(const NakayamaModule& m, const NakayamaAlgebra& a);

NakayamaModule projective_part(const NakayamaModule& m, const NakayamaAlgebra& a);
NakayamaModule nonprojective_part(const NakayamaModule& m, const NakayamaAlgebra& a);

/// Sigma_d as a vertex permutation: Sigma(S_v) = S_{sigma[v-1]}, with
/// Omega^{d+2}(S_v) = S_{omega[v-1]} and omega the inverse of sigma.
struct TwistData {
  int d = 1;
  std::vector<int> sigma;
  std::vector<int> omega;
  std::vector<std::vector<int>> orbits;  // orbits of sigma, each sorted, sorted by first vertex

  int apply(int v) const { return sigma[static_cast<std::size_t>(v - 1)]; }
  int apply_inverse(int v) const { return omega[static_cast<std::size_t>(v - 1)]; }
};

/// Requires a cyclic algebra. Throws UnsupportedPeriodicity if some
/// Omega^{d+2}(S_i) is not simple.
TwistData twist_data(const NakayamaAlgebra& a, int d);

NakayamaModule suspend(const NakayamaModule& m, const TwistData& t);
NakayamaModule desuspend(const NakayamaModule& m, const TwistData& t);
std::vector<int> suspend(const std::vector<int>& objects, const TwistData& t);

/// A (d+2)-angle in proj A: objects[k] lists the projective summands of X_k,
/// maps[k] : X_k -> X_{k+1} for k <= d and maps[d+1] : X_{d+1} -> Sigma X_0.
struct ProjAngle {
  int d = 1;
  std::vector<std::vector<int>> objects;
  std::vector<ProjMorphism> maps;
};

/// The minimal projective resolution of m, read as an angle: X_k = Q_{d+1-k},
/// closed by the envelope path Q_0 -> Sigma Q_{d+1}. Throws InputError when m
/// has projective summands.
ProjAngle generate_angle(const NakayamaModule& m, const NakayamaAlgebra& a, const TwistData& t);

/// Adds P(v) at positions j and j+1 (0 <= j <= d) joined by the identity.
ProjAngle pad_contractible(const ProjAngle& x, int v, int j, const TwistData& t);

/// Exactness at every X_1..X_{d+1}, and ker(x_0) isomorphic to Sigma^{-1} Im(x_{d+1}).
Report check_exactness(const ProjAngle& x, const NakayamaAlgebra& a, const TwistData& t);

NakayamaModule last_image(const ProjAngle& x, const NakayamaAlgebra& a);

struct SchanuelResult {
  bool homotopy_equivalent = false;
  bool balanced = false;
  std::vector<int> lhs;  // sorted vertices of sum (X_{2i} + Y_{2i+1})
  std::vector<int> rhs;  // sorted vertices of sum (X_{2i+1} + Y_{2i})
};

SchanuelResult schanuel_check(const ProjAngle& x, const ProjAngle& y, const NakayamaAlgebra& a);

std::string projective_label(int v);
/// Inverse of projective_label; throws InputError.
int parse_projective_label(const std::string& label);

AngleTemplate to_template(const ProjAngle& x);

/// Objects of a (d+2)-angle whose first arrow is f: X_0 = source, X_1 = target,
/// X_{k+2} = envelope of Omega^{-k}(coker f), and Sigma of the projective
/// summands of ker f added to X_{d+1}.
AngleTemplate complete_morphism(const ProjMorphism& f, const NakayamaAlgebra& a,
                                const TwistData& t);

}  // namespace rankfn
