#include "rankfn/nakayama.hpp"

#include "rankfn/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>

namespace rankfn {

void NakayamaAlgebra::validate() const {
  if (n < 1) throw InputError("algebra needs n >= 1, got " + std::to_string(n));
  if (ell < 2) throw InputError("algebra needs ell >= 2, got " + std::to_string(ell));
}

int NakayamaAlgebra::vertex(int v) const {
  if (shape == Shape::Cyclic) return ((v - 1) % n + n) % n + 1;
  return (v >= 1 && v <= n) ? v : 0;
}

int NakayamaAlgebra::projective_length(int v) const {
  if (shape == Shape::Cyclic) return ell;
  return std::min(ell, v);
}

std::string to_string(Shape s) { return s == Shape::Cyclic ? "cyclic" : "linear"; }

NakayamaModule::NakayamaModule(std::initializer_list<Interval> list) : summands(list) {
  std::sort(summands.begin(), summands.end());
}

NakayamaModule::NakayamaModule(std::vector<Interval> list) : summands(std::move(list)) {
  std::sort(summands.begin(), summands.end());
}

void NakayamaModule::add(Interval x, std::size_t multiplicity) {
  summands.insert(std::upper_bound(summands.begin(), summands.end(), x), multiplicity, x);
}

NakayamaModule& NakayamaModule::operator+=(const NakayamaModule& other) {
  summands.insert(summands.end(), other.summands.begin(), other.summands.end());
  std::sort(summands.begin(), summands.end());
  return *this;
}

std::string to_string(const NakayamaModule& m) {
  if (m.is_zero()) return "0";
  std::string out;
  for (const auto& x : m.summands) {
    if (!out.empty()) out += "+";
    out += "M(" + std::to_string(x.top) + "," + std::to_string(x.length) + ")";
  }
  return out;
}

void validate_module(const NakayamaModule& m, const NakayamaAlgebra& a) {
  for (const auto& x : m.summands) {
    if (x.top < 1 || x.top > a.n) {
      throw InputError("vertex " + std::to_string(x.top) + " outside 1.." + std::to_string(a.n));
    }
    if (x.length < 1 || x.length > a.projective_length(x.top)) {
      throw InputError("no module M(" + std::to_string(x.top) + "," + std::to_string(x.length) +
                       ") over this algebra");
    }
  }
}

bool is_projective(const Interval& x, const NakayamaAlgebra& a) {
  return x.length == a.projective_length(x.top);
}

NakayamaModule projective_module(int v, const NakayamaAlgebra& a) {
  return NakayamaModule{{v, a.projective_length(v)}};
}

std::vector<Interval> all_intervals(const NakayamaAlgebra& a) {
  std::vector<Interval> out;
  for (int i = 1; i <= a.n; ++i) {
    for (int t = 1; t <= a.projective_length(i); ++t) out.push_back({i, t});
  }
  return out;
}

std::vector<long> composition_factors(const NakayamaModule& m, const NakayamaAlgebra& a) {
  std::vector<long> out(static_cast<std::size_t>(a.n), 0);
  for (const auto& x : m.summands) {
    for (int k = 0; k < x.length; ++k) ++out[static_cast<std::size_t>(a.vertex(x.top - k) - 1)];
  }
  return out;
}

std::vector<int> hom_basis(int i, int j, const NakayamaAlgebra& a) {
  std::vector<int> out;
  for (int k = 0; k < a.projective_length(j); ++k) {
    if (a.vertex(j - k) == i) out.push_back(k);
  }
  return out;
}

ProjMorphism ProjMorphism::zero(std::vector<int> source, std::vector<int> target) {
  ProjMorphism f;
  f.entries.assign(target.size(), std::vector<std::vector<PathTerm>>(source.size()));
  f.source = std::move(source);
  f.target = std::move(target);
  return f;
}

ProjMorphism ProjMorphism::identity(const std::vector<int>& objects) {
  auto f = zero(objects, objects);
  for (std::size_t i = 0; i < objects.size(); ++i) f.entries[i][i].push_back({0, 1});
  return f;
}

ProjMorphism ProjMorphism::single_path(int from, int to, int length, Rational coeff) {
  auto f = zero({from}, {to});
  f.entries[0][0].push_back({length, std::move(coeff)});
  return f;
}

void validate_morphism(const ProjMorphism& f, const NakayamaAlgebra& a) {
  a.validate();
  for (int v : f.source) validate_module(projective_module(v, a), a);
  for (int v : f.target) validate_module(projective_module(v, a), a);
  if (f.entries.size() != f.target.size()) {
    throw InputError("morphism has " + std::to_string(f.entries.size()) + " rows, expected " +
                     std::to_string(f.target.size()));
  }
  for (std::size_t r = 0; r < f.entries.size(); ++r) {
    if (f.entries[r].size() != f.source.size()) {
      throw InputError("morphism row " + std::to_string(r) + " has " +
                       std::to_string(f.entries[r].size()) + " entries, expected " +
                       std::to_string(f.source.size()));
    }
    for (std::size_t c = 0; c < f.source.size(); ++c) {
      const auto basis = hom_basis(f.source[c], f.target[r], a);
      for (const auto& term : f.entries[r][c]) {
        if (std::find(basis.begin(), basis.end(), term.length) == basis.end()) {
          throw InputError("entry [" + std::to_string(r) + "][" + std::to_string(c) +
                           "]: no path of length " + std::to_string(term.length) + " from P" +
                           std::to_string(f.target[r]) + " to P" + std::to_string(f.source[c]));
        }
      }
    }
  }
}

namespace {

void add_term(std::vector<PathTerm>& cell, int length, const Rational& coeff) {
  for (auto it = cell.begin(); it != cell.end(); ++it) {
    if (it->length == length) {
      it->coeff += coeff;
      if (it->coeff == 0) cell.erase(it);
      return;
    }
  }
  if (coeff != 0) cell.push_back({length, coeff});
}

}  // namespace

ProjMorphism compose(const ProjMorphism& g, const ProjMorphism& f, const NakayamaAlgebra& a) {
  if (g.source != f.target) throw InputError("composition of morphisms with mismatched objects");
  auto h = ProjMorphism::zero(f.source, g.target);
  for (std::size_t r = 0; r < g.target.size(); ++r) {
    const int bottom = a.projective_length(g.target[r]);
    for (std::size_t c = 0; c < f.source.size(); ++c) {
      for (std::size_t q = 0; q < f.target.size(); ++q) {
        for (const auto& gt : g.entries[r][q]) {
          for (const auto& ft : f.entries[q][c]) {
            if (gt.length + ft.length < bottom) {
              add_term(h.entries[r][c], gt.length + ft.length, gt.coeff * ft.coeff);
            }
          }
        }
      }
      std::sort(h.entries[r][c].begin(), h.entries[r][c].end(),
                [](const PathTerm& x, const PathTerm& y) { return x.length < y.length; });
    }
  }
  return h;
}

ProjMorphism direct_sum(const ProjMorphism& f, const ProjMorphism& g) {
  auto source = f.source;
  source.insert(source.end(), g.source.begin(), g.source.end());
  auto target = f.target;
  target.insert(target.end(), g.target.begin(), g.target.end());
  auto h = ProjMorphism::zero(source, target);
  for (std::size_t r = 0; r < f.target.size(); ++r) {
    for (std::size_t c = 0; c < f.source.size(); ++c) h.entries[r][c] = f.entries[r][c];
  }
  for (std::size_t r = 0; r < g.target.size(); ++r) {
    for (std::size_t c = 0; c < g.source.size(); ++c) {
      h.entries[f.target.size() + r][f.source.size() + c] = g.entries[r][c];
    }
  }
  return h;
}

namespace {

Representation realize_intervals(const std::vector<Interval>& list, const NakayamaAlgebra& a) {
  std::size_t dim = 0;
  for (const auto& x : list) dim += static_cast<std::size_t>(x.length);
  Representation rep{{}, Matrix(dim, dim)};
  std::size_t off = 0;
  for (const auto& x : list) {
    for (int k = 0; k < x.length; ++k) {
      rep.vertex.push_back(a.vertex(x.top - k));
      if (k + 1 < x.length) rep.arrow(off + k + 1, off + k) = 1;
    }
    off += static_cast<std::size_t>(x.length);
  }
  return rep;
}

std::vector<std::size_t> rows_at(const Representation& v, int vertex) {
  std::vector<std::size_t> rows;
  for (std::size_t b = 0; b < v.vertex.size(); ++b) {
    if (v.vertex[b] == vertex) rows.push_back(b);
  }
  return rows;
}

// profile(k, v) = dim at v of rad^k of the module; recovers the intervals
NakayamaModule identify_from_profile(const std::function<long(int, int)>& profile,
                                     const NakayamaAlgebra& a) {
  std::map<std::pair<int, int>, long> cache;
  auto r = [&](int k, int v) -> long {
    if (v == 0) return 0;
    auto key = std::make_pair(k, v);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache[key] = profile(k, v);
  };
  auto g = [&](int k, int v) { return r(k, v) - r(k + 1, v); };
  NakayamaModule out;
  for (const auto& x : all_intervals(a)) {
    const int t = x.length;
    const long mult = g(t - 1, a.vertex(x.top - t + 1)) - g(t, a.vertex(x.top - t));
    if (mult < 0) throw std::logic_error("negative interval multiplicity");
    out.add(x, static_cast<std::size_t>(mult));
  }
  return out;
}

std::vector<Matrix> arrow_powers(const Representation& v, int count) {
  std::vector<Matrix> pw{Matrix::identity(v.vertex.size())};
  for (int k = 1; k <= count; ++k) pw.push_back(v.arrow * pw.back());
  return pw;
}

}  // namespace

Representation realize(const NakayamaModule& m, const NakayamaAlgebra& a) {
  validate_module(m, a);
  return realize_intervals(m.summands, a);
}

Representation realize_projectives(const std::vector<int>& objects, const NakayamaAlgebra& a) {
  std::vector<Interval> list;
  for (int v : objects) list.push_back({v, a.projective_length(v)});
  return realize_intervals(list, a);
}

Matrix morphism_matrix(const ProjMorphism& f, const NakayamaAlgebra& a) {
  auto offsets = [&](const std::vector<int>& objs) {
    std::vector<std::size_t> off{0};
    for (int v : objs) off.push_back(off.back() + static_cast<std::size_t>(a.projective_length(v)));
    return off;
  };
  const auto so = offsets(f.source);
  const auto to = offsets(f.target);
  Matrix m(to.back(), so.back());
  for (std::size_t r = 0; r < f.target.size(); ++r) {
    const int lr = a.projective_length(f.target[r]);
    for (std::size_t c = 0; c < f.source.size(); ++c) {
      const int lc = a.projective_length(f.source[c]);
      for (const auto& term : f.entries[r][c]) {
        for (int k = 0; k < lc && k + term.length < lr; ++k) {
          m(to[r] + static_cast<std::size_t>(k + term.length), so[c] + static_cast<std::size_t>(k)) +=
              term.coeff;
        }
      }
    }
  }
  return m;
}

NakayamaModule identify_subrepresentation(const Representation& v, const Matrix& span,
                                          const NakayamaAlgebra& a) {
  const auto pw = arrow_powers(v, a.ell);
  std::vector<Matrix> images;
  for (const auto& p : pw) images.push_back(p * span);
  return identify_from_profile(
      [&](int k, int vert) -> long {
        if (k > a.ell) return 0;
        const auto rows = rows_at(v, vert);
        return static_cast<long>(rank(select_rows(images[static_cast<std::size_t>(k)], rows)));
      },
      a);
}

NakayamaModule identify_quotient(const Representation& v, const Matrix& span,
                                 const NakayamaAlgebra& a) {
  const auto pw = arrow_powers(v, a.ell);
  return identify_from_profile(
      [&](int k, int vert) -> long {
        if (k > a.ell) return 0;
        const auto rows = rows_at(v, vert);
        const auto sub = select_rows(span, rows);
        const auto big = select_rows(hconcat(pw[static_cast<std::size_t>(k)], span), rows);
        return static_cast<long>(rank(big)) - static_cast<long>(rank(sub));
      },
      a);
}

NakayamaModule image_of(const ProjMorphism& f, const NakayamaAlgebra& a) {
  validate_morphism(f, a);
  return identify_subrepresentation(realize_projectives(f.target, a), morphism_matrix(f, a), a);
}

NakayamaModule kernel_of(const ProjMorphism& f, const NakayamaAlgebra& a) {
  validate_morphism(f, a);
  return identify_subrepresentation(realize_projectives(f.source, a),
                                    nullspace(morphism_matrix(f, a)), a);
}

NakayamaModule cokernel_of(const ProjMorphism& f, const NakayamaAlgebra& a) {
  validate_morphism(f, a);
  return identify_quotient(realize_projectives(f.target, a), morphism_matrix(f, a), a);
}

std::vector<int> projective_cover(const NakayamaModule& m, const NakayamaAlgebra& a) {
  validate_module(m, a);
  std::vector<int> out;
  for (const auto& x : m.summands) out.push_back(x.top);
  return out;
}

NakayamaModule syzygy(const NakayamaModule& m, const NakayamaAlgebra& a) {
  validate_module(m, a);
  NakayamaModule out;
  for (const auto& x : m.summands) {
    const int p = a.projective_length(x.top);
    if (x.length < p) out.add({a.vertex(x.top - x.length), p - x.length});
  }
  return out;
}

namespace {

void require_self_injective(const NakayamaAlgebra& a, const std::string& what) {
  if (!a.self_injective()) throw InputError(what + " needs a cyclic (self-injective) algebra");
}

}  // namespace

std::vector<int> injective_envelope(const NakayamaModule& m, const NakayamaAlgebra& a) {
  require_self_injective(a, "injective envelope");
  validate_module(m, a);
  std::vector<int> out;
  for (const auto& x : m.summands) out.push_back(a.vertex(x.top + a.ell - x.length));
  return out;
}

NakayamaModule cosyzygy(const NakayamaModule& m, const NakayamaAlgebra& a) {
  require_self_injective(a, "cosyzygy");
  validate_module(m, a);
  NakayamaModule out;
  for (const auto& x : m.summands) {
    if (x.length < a.ell) out.add({a.vertex(x.top + a.ell - x.length), a.ell - x.length});
  }
  return out;
}

NakayamaModule projective_part(const NakayamaModule& m, const NakayamaAlgebra& a) {
  NakayamaModule out;
  for (const auto& x : m.summands) {
    if (is_projective(x, a)) out.add(x);
  }
  return out;
}

NakayamaModule nonprojective_part(const NakayamaModule& m, const NakayamaAlgebra& a) {
  NakayamaModule out;
  for (const auto& x : m.summands) {
    if (!is_projective(x, a)) out.add(x);
  }
  return out;
}

TwistData twist_data(const NakayamaAlgebra& a, int d) {
  a.validate();
  require_self_injective(a, "twist data");
  if (d < 1) throw InputError("d must be positive, got " + std::to_string(d));
  TwistData t;
  t.d = d;
  t.omega.assign(static_cast<std::size_t>(a.n), 0);
  t.sigma.assign(static_cast<std::size_t>(a.n), 0);
  for (int v = 1; v <= a.n; ++v) {
    NakayamaModule m{{v, 1}};
    for (int k = 0; k < d + 2; ++k) m = syzygy(m, a);
    if (m.summands.size() != 1 || m.summands[0].length != 1) {
      throw UnsupportedPeriodicity("Omega^" + std::to_string(d + 2) + "(S_" + std::to_string(v) +
                                   ") = " + to_string(m) + " is not simple over kC_" +
                                   std::to_string(a.n) + "/rad^" + std::to_string(a.ell));
    }
    const int w = m.summands[0].top;
    t.omega[static_cast<std::size_t>(v - 1)] = w;
    t.sigma[static_cast<std::size_t>(w - 1)] = v;
  }
  std::vector<bool> seen(static_cast<std::size_t>(a.n), false);
  for (int v = 1; v <= a.n; ++v) {
    if (seen[static_cast<std::size_t>(v - 1)]) continue;
    std::vector<int> orbit;
    for (int w = v; !seen[static_cast<std::size_t>(w - 1)]; w = t.apply(w)) {
      seen[static_cast<std::size_t>(w - 1)] = true;
      orbit.push_back(w);
    }
    std::sort(orbit.begin(), orbit.end());
    t.orbits.push_back(orbit);
  }
  return t;
}

NakayamaModule suspend(const NakayamaModule& m, const TwistData& t) {
  NakayamaModule out;
  for (const auto& x : m.summands) out.add({t.apply(x.top), x.length});
  return out;
}

NakayamaModule desuspend(const NakayamaModule& m, const TwistData& t) {
  NakayamaModule out;
  for (const auto& x : m.summands) out.add({t.apply_inverse(x.top), x.length});
  return out;
}

std::vector<int> suspend(const std::vector<int>& objects, const TwistData& t) {
  std::vector<int> out;
  for (int v : objects) out.push_back(t.apply(v));
  return out;
}

namespace {

ProjAngle zero_angle(int d) {
  ProjAngle x;
  x.d = d;
  x.objects.assign(static_cast<std::size_t>(d) + 2, {});
  x.maps.assign(static_cast<std::size_t>(d) + 2, ProjMorphism::zero({}, {}));
  return x;
}

ProjAngle angle_sum(const ProjAngle& x, const ProjAngle& y) {
  ProjAngle z = x;
  for (std::size_t k = 0; k < z.objects.size(); ++k) {
    z.objects[k].insert(z.objects[k].end(), y.objects[k].begin(), y.objects[k].end());
    z.maps[k] = direct_sum(x.maps[k], y.maps[k]);
  }
  return z;
}

ProjAngle indecomposable_angle(const Interval& m, const NakayamaAlgebra& a, const TwistData& t) {
  const int d = t.d;
  std::vector<int> tops{m.top};
  std::vector<int> lengths{m.length};
  for (int k = 0; k <= d; ++k) {
    tops.push_back(a.vertex(tops.back() - lengths.back()));
    lengths.push_back(a.ell - lengths.back());
  }
  const int envelope = a.vertex(m.top + a.ell - m.length);
  if (t.apply(tops[static_cast<std::size_t>(d) + 1]) != envelope) {
    throw std::logic_error("twist does not close the resolution of " + to_string(NakayamaModule{m}));
  }
  ProjAngle x;
  x.d = d;
  for (int k = 0; k <= d + 1; ++k) x.objects.push_back({tops[static_cast<std::size_t>(d + 1 - k)]});
  for (int k = 0; k <= d; ++k) {
    const auto q = static_cast<std::size_t>(d - k);
    x.maps.push_back(ProjMorphism::single_path(tops[q + 1], tops[q], lengths[q]));
  }
  x.maps.push_back(ProjMorphism::single_path(m.top, envelope, a.ell - m.length));
  return x;
}

void append_column(ProjMorphism& f, int v) {
  f.source.push_back(v);
  for (auto& row : f.entries) row.emplace_back();
}

void append_row(ProjMorphism& f, int v) {
  f.target.push_back(v);
  f.entries.emplace_back(f.source.size());
}

}  // namespace

ProjAngle generate_angle(const NakayamaModule& m, const NakayamaAlgebra& a, const TwistData& t) {
  require_self_injective(a, "angle generation");
  validate_module(m, a);
  if (!projective_part(m, a).is_zero()) {
    throw InputError("cannot generate an angle for " + to_string(m) + ": it has projective summands");
  }
  ProjAngle x = zero_angle(t.d);
  for (const auto& s : m.summands) x = angle_sum(x, indecomposable_angle(s, a, t));
  return x;
}

ProjAngle pad_contractible(const ProjAngle& x, int v, int j, const TwistData& t) {
  if (j < 0 || j > x.d) throw InputError("padding position must lie in 0..d");
  ProjAngle y = x;
  const auto J = static_cast<std::size_t>(j);
  const std::size_t last = static_cast<std::size_t>(x.d) + 1;
  y.objects[J].push_back(v);
  y.objects[J + 1].push_back(v);
  // X_j is the source of map j and (as Sigma X_0 when j = 0) a target
  append_column(y.maps[J], v);
  if (J == 0) append_row(y.maps[last], t.apply(v));
  else append_row(y.maps[J - 1], v);
  append_row(y.maps[J], v);
  append_column(y.maps[J + 1], v);
  y.maps[J].entries.back().back().push_back({0, 1});
  return y;
}

NakayamaModule last_image(const ProjAngle& x, const NakayamaAlgebra& a) {
  return image_of(x.maps.back(), a);
}

Report check_exactness(const ProjAngle& x, const NakayamaAlgebra& a, const TwistData& t) {
  Report rep;
  auto& shape = rep.add("shape");
  const std::size_t len = static_cast<std::size_t>(x.d) + 2;
  ++shape.checked;
  if (x.objects.size() != len || x.maps.size() != len) {
    shape.fail("angle", "expected " + std::to_string(len) + " objects and maps");
    return rep;
  }
  for (std::size_t k = 0; k < len; ++k) {
    ++shape.checked;
    const auto& want_target = k + 1 < len ? x.objects[k + 1] : suspend(x.objects[0], t);
    if (x.maps[k].source != x.objects[k] || x.maps[k].target != want_target) {
      shape.fail("map " + std::to_string(k), "source or target does not match the objects");
    }
  }
  if (!shape.ok()) return rep;

  auto& c1 = rep.add("C1");
  std::vector<Matrix> mats;
  for (const auto& f : x.maps) {
    validate_morphism(f, a);
    mats.push_back(morphism_matrix(f, a));
  }
  for (std::size_t p = 1; p < len; ++p) {
    ++c1.checked;
    const auto& f = mats[p - 1];
    const auto& g = mats[p];
    const std::size_t dim = f.rows();
    const bool zero = (g * f).is_zero();
    if (!zero || rank(f) + rank(g) != dim) {
      c1.fail("X_" + std::to_string(p), zero ? "image smaller than kernel" : "consecutive maps do not compose to zero");
    }
  }
  ++c1.checked;
  const auto k0 = kernel_of(x.maps.front(), a);
  const auto expect = desuspend(last_image(x, a), t);
  if (k0 != expect) {
    c1.fail("X_0", "kernel " + to_string(k0) + " differs from desuspended image " + to_string(expect));
  }
  return rep;
}

SchanuelResult schanuel_check(const ProjAngle& x, const ProjAngle& y, const NakayamaAlgebra& a) {
  SchanuelResult res;
  if (x.d != y.d || x.objects.size() != y.objects.size()) return res;
  res.homotopy_equivalent = last_image(x, a) == last_image(y, a);
  if (!res.homotopy_equivalent) return res;
  for (std::size_t k = 0; k < x.objects.size(); ++k) {
    auto& xs = k % 2 == 0 ? res.lhs : res.rhs;
    auto& ys = k % 2 == 0 ? res.rhs : res.lhs;
    xs.insert(xs.end(), x.objects[k].begin(), x.objects[k].end());
    ys.insert(ys.end(), y.objects[k].begin(), y.objects[k].end());
  }
  std::sort(res.lhs.begin(), res.lhs.end());
  std::sort(res.rhs.begin(), res.rhs.end());
  res.balanced = res.lhs == res.rhs;
  return res;
}

std::string projective_label(int v) { return "P" + std::to_string(v); }

int parse_projective_label(const std::string& label) {
  if (label.size() < 2 || label[0] != 'P') throw InputError("not a projective label: \"" + label + "\"");
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i]))) {
      throw InputError("not a projective label: \"" + label + "\"");
    }
  }
  return std::stoi(label.substr(1));
}

namespace {

ObjectClass labels_of(const std::vector<int>& objects) {
  ObjectClass x;
  for (int v : objects) x.add(projective_label(v));
  return x;
}

}  // namespace

AngleTemplate to_template(const ProjAngle& x) {
  AngleTemplate out{x.d, {}};
  for (const auto& obj : x.objects) out.objects.push_back(labels_of(obj));
  return out;
}

AngleTemplate complete_morphism(const ProjMorphism& f, const NakayamaAlgebra& a,
                                const TwistData& t) {
  require_self_injective(a, "morphism completion");
  validate_morphism(f, a);
  AngleTemplate out{t.d, {labels_of(f.source), labels_of(f.target)}};
  NakayamaModule cur = cokernel_of(f, a);
  for (int k = 0; k < t.d; ++k) {
    out.objects.push_back(labels_of(injective_envelope(cur, a)));
    cur = cosyzygy(cur, a);
  }
  const auto kp = projective_part(kernel_of(f, a), a);
  for (const auto& x : kp.summands) out.objects.back().add(projective_label(t.apply(x.top)));
  return out;
}

}  // namespace rankfn
