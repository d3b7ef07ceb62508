#include "oracles.hpp"

#include <map>
#include <stdexcept>

namespace oracle {

namespace {

int reduce(int v, const NakayamaAlgebra& a) {
  if (a.shape == rankfn::Shape::Cyclic) return ((v - 1) % a.n + a.n) % a.n + 1;
  return v;
}

// nonzero paths of kQ/rad^ell starting at vertex i, by length
std::vector<int> path_targets(int i, const NakayamaAlgebra& a) {
  std::vector<int> out{i};
  while (static_cast<int>(out.size()) < a.ell) {
    const int next = out.back() - 1;
    if (a.shape == rankfn::Shape::Linear && next < 1) break;
    out.push_back(reduce(next, a));
  }
  return out;
}

}  // namespace

Rep interval(const Interval& x, const NakayamaAlgebra& a) {
  const auto targets = path_targets(x.top, a);
  if (x.length < 1 || x.length > static_cast<int>(targets.size())) throw std::invalid_argument("no such interval");
  Rep r{{}, Matrix(static_cast<std::size_t>(x.length), static_cast<std::size_t>(x.length))};
  for (int k = 0; k < x.length; ++k) r.vertex.push_back(targets[static_cast<std::size_t>(k)]);
  for (int k = 0; k + 1 < x.length; ++k) r.arrow(static_cast<std::size_t>(k + 1), static_cast<std::size_t>(k)) = 1;
  return r;
}

Rep sum(const std::vector<Rep>& parts) {
  Rep r;
  Matrix arrow;
  for (const auto& p : parts) {
    r.vertex.insert(r.vertex.end(), p.vertex.begin(), p.vertex.end());
    arrow = rankfn::block_diagonal(arrow, p.arrow);
  }
  r.arrow = arrow;
  return r;
}

Rep module(const NakayamaModule& m, const NakayamaAlgebra& a) {
  std::vector<Rep> parts;
  for (const auto& x : m.summands) parts.push_back(interval(x, a));
  return sum(parts);
}

std::vector<Matrix> hom(const Rep& v, const Rep& w) {
  // unknowns X[r][c] with vertex(w_r) == vertex(v_c)
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  for (std::size_t r = 0; r < w.dim(); ++r) {
    for (std::size_t c = 0; c < v.dim(); ++c) {
      if (w.vertex[r] == v.vertex[c]) vars.emplace_back(r, c);
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t k = 0; k < vars.size(); ++k) index[vars[k]] = k;
  // X A_v - A_w X = 0, entrywise
  std::vector<std::vector<rankfn::Rational>> rows;
  for (std::size_t r = 0; r < w.dim(); ++r) {
    for (std::size_t c = 0; c < v.dim(); ++c) {
      std::vector<rankfn::Rational> eq(vars.size(), 0);
      bool any = false;
      for (std::size_t k = 0; k < v.dim(); ++k) {
        if (v.arrow(k, c) != 0) {
          auto it = index.find({r, k});
          if (it != index.end()) {
            eq[it->second] += v.arrow(k, c);
            any = true;
          }
        }
      }
      for (std::size_t k = 0; k < w.dim(); ++k) {
        if (w.arrow(r, k) != 0) {
          auto it = index.find({k, c});
          if (it != index.end()) {
            eq[it->second] -= w.arrow(r, k);
            any = true;
          }
        }
      }
      if (any) rows.push_back(std::move(eq));
    }
  }
  Matrix sys(rows.size(), vars.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < vars.size(); ++k) sys(i, k) = rows[i][k];
  }
  std::vector<Matrix> out;
  if (vars.empty()) return out;
  const Matrix ns = rankfn::nullspace(sys);
  for (std::size_t b = 0; b < ns.cols(); ++b) {
    Matrix x(w.dim(), v.dim());
    for (std::size_t k = 0; k < vars.size(); ++k) x(vars[k].first, vars[k].second) = ns(k, b);
    out.push_back(std::move(x));
  }
  return out;
}

namespace {

// basis of span adapted to the vertex grading: project each column to each
// vertex (valid because span is a subrepresentation)
Matrix graded_basis(const Rep& v, const Matrix& span) {
  std::vector<std::vector<rankfn::Rational>> cols;
  std::map<int, bool> verts;
  for (int x : v.vertex) verts[x] = true;
  Matrix all(v.dim(), 0);
  for (const auto& [vert, unused] : verts) {
    Matrix proj = span;
    for (std::size_t r = 0; r < v.dim(); ++r) {
      if (v.vertex[r] != vert) {
        for (std::size_t c = 0; c < proj.cols(); ++c) proj(r, c) = 0;
      }
    }
    all = rankfn::hconcat(all, rankfn::column_basis(proj));
  }
  return all;
}

Matrix solve_columns(const Matrix& basis, const Matrix& targets) {
  // coordinates of each target column in the (independent) columns of basis
  Matrix aug = rankfn::hconcat(basis, targets);
  std::vector<std::size_t> piv;
  Matrix red = rankfn::rref(aug, &piv);
  Matrix out(basis.cols(), targets.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] >= basis.cols()) throw std::logic_error("column outside the span");
    for (std::size_t c = 0; c < targets.cols(); ++c) out(piv[r], c) = red(r, basis.cols() + c);
  }
  return out;
}

}  // namespace

Rep subrep(const Rep& v, const Matrix& span) {
  const Matrix b = graded_basis(v, span);
  Rep r;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t row = 0; row < v.dim(); ++row) {
      if (b(row, c) != 0) {
        r.vertex.push_back(v.vertex[row]);
        break;
      }
    }
  }
  r.arrow = solve_columns(b, v.arrow * b);
  return r;
}

Rep quotient(const Rep& v, const Matrix& span) {
  const Matrix sub = graded_basis(v, span);
  // complete by standard vectors (each at a single vertex)
  Matrix basis = sub;
  std::vector<std::size_t> extra;
  for (std::size_t e = 0; e < v.dim(); ++e) {
    Matrix unit(v.dim(), 1);
    unit(e, 0) = 1;
    Matrix trial = rankfn::hconcat(basis, unit);
    if (rankfn::rank(trial) > rankfn::rank(basis)) {
      basis = trial;
      extra.push_back(e);
    }
  }
  const Matrix coords = solve_columns(basis, v.arrow * basis);
  Rep r;
  const std::size_t k = sub.cols();
  r.arrow = Matrix(extra.size(), extra.size());
  for (std::size_t i = 0; i < extra.size(); ++i) {
    r.vertex.push_back(v.vertex[extra[i]]);
    for (std::size_t j = 0; j < extra.size(); ++j) r.arrow(i, j) = coords(k + i, k + j);
  }
  return r;
}

NakayamaModule identify(const Rep& v, const NakayamaAlgebra& a) {
  const auto intervals = rankfn::all_intervals(a);
  const std::size_t m = intervals.size();
  // H[s][x] = dim Hom(s, x); V's vector h = sum mult_x H[.][x]
  Matrix sys(m, m + 1);
  for (std::size_t s = 0; s < m; ++s) {
    const Rep src = interval(intervals[s], a);
    for (std::size_t x = 0; x < m; ++x) sys(s, x) = static_cast<long>(hom(src, interval(intervals[x], a)).size());
    sys(s, m) = static_cast<long>(hom(src, v).size());
  }
  std::vector<std::size_t> piv;
  const Matrix red = rankfn::rref(sys, &piv);
  if (piv.size() != m || piv.back() >= m) throw std::logic_error("Hom dimensions do not separate intervals");
  NakayamaModule out;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& c = red(r, m);
    if (!rankfn::is_integer(c) || c < 0) throw std::logic_error("non-integral multiplicity");
    out.add(intervals[piv[r]], numerator(c).convert_to<std::size_t>());
  }
  return out;
}

std::vector<long> dimension_vector(const Rep& v, int n) {
  std::vector<long> out(static_cast<std::size_t>(n), 0);
  for (int x : v.vertex) ++out[static_cast<std::size_t>(x - 1)];
  return out;
}

Matrix path_map(int i, int j, int k, const NakayamaAlgebra& a) {
  const Rep pi = interval({i, static_cast<int>(path_targets(i, a).size())}, a);
  const Rep pj = interval({j, static_cast<int>(path_targets(j, a).size())}, a);
  Matrix target(pj.dim(), 1);
  target(static_cast<std::size_t>(k), 0) = 1;
  Matrix out(pj.dim(), pi.dim());
  Matrix col = target;
  for (std::size_t m = 0; m < pi.dim(); ++m) {
    for (std::size_t r = 0; r < pj.dim(); ++r) out(r, m) = col(r, 0);
    col = pj.arrow * col;
  }
  return out;
}

NakayamaModule syzygy(const Interval& x, const NakayamaAlgebra& a) {
  const int p = static_cast<int>(path_targets(x.top, a).size());
  const Rep proj = interval({x.top, p}, a);
  const Rep target = interval(x, a);
  // the surjection: top to top, compatible with arrows
  Matrix cover(target.dim(), proj.dim());
  Matrix col(target.dim(), 1);
  col(0, 0) = 1;
  for (std::size_t m = 0; m < proj.dim(); ++m) {
    for (std::size_t r = 0; r < target.dim(); ++r) cover(r, m) = col(r, 0);
    col = target.arrow * col;
  }
  return identify(subrep(proj, rankfn::nullspace(cover)), a);
}

}  // namespace oracle
