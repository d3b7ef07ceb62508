#include "rankfn/cone.hpp"

#include "rankfn/errors.hpp"
#include "rankfn/rank_morphisms.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>

namespace rankfn {

RankCone build_cone(const CategorySkeleton& s, std::size_t depth) {
  RankCone c;
  c.labels = s.indecs;
  std::map<IndecId, std::size_t> index;
  for (std::size_t i = 0; i < c.labels.size(); ++i) index[c.labels[i]] = i;
  const std::size_t n = c.labels.size();

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(n, 0);
    row[i] = 1;
    c.inequalities.push_back(std::move(row));
    c.row_origin.push_back("nonnegative " + c.labels[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = index.at(s.suspension.apply(c.labels[i]));
    if (i != j) c.equalities.emplace_back(i, j);
  }
  const auto closure = angle_closure(s, depth);
  for (std::size_t k = 0; k < closure.size(); ++k) {
    std::vector<Rational> row(n, 0);
    for (std::size_t p = 0; p < closure[k].objects.size(); ++p) {
      for (const auto& [id, m] : closure[k].objects[p].summands()) {
        auto it = index.find(id);
        if (it == index.end()) throw InputError("angle uses unknown indec \"" + id + "\"");
        row[it->second] += p % 2 == 0 ? static_cast<long>(m) : -static_cast<long>(m);
      }
    }
    c.inequalities.push_back(std::move(row));
    c.row_origin.push_back("defect " + to_string(closure[k]));
  }
  return c;
}

RankCone with_lattice(RankCone c, const CategorySkeleton& s, std::size_t depth, Lattice lattice) {
  c.integrality_rows.clear();
  if (lattice == Lattice::Objects) return c;
  require_odd(s.d, "morphism lattice");
  std::map<IndecId, std::size_t> index;
  for (std::size_t i = 0; i < c.labels.size(); ++i) index[c.labels[i]] = i;
  for (const auto& a : angle_closure(s, depth)) {
    std::vector<Rational> row(c.labels.size(), 0);
    for (std::size_t p = 0; p < a.objects.size(); ++p) {
      const Rational sign = (p == 0 || p % 2 == 1) ? Rational(1, 2) : Rational(-1, 2);
      for (const auto& [id, m] : a.objects[p].summands()) row[index.at(id)] += sign * static_cast<long>(m);
    }
    c.integrality_rows.push_back(std::move(row));
  }
  return c;
}

RankCone make_cone(const CategorySkeleton& s, std::size_t depth, Lattice lattice) {
  return with_lattice(build_cone(s, depth), s, depth, lattice);
}

ConeLimits ConeLimits::from_env() {
  ConeLimits limits;
  if (const char* env = std::getenv("RANKFN_CONE_DIM_BOUND")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      throw InputError(std::string("RANKFN_CONE_DIM_BOUND must be a positive integer, got \"") + env + "\"");
    }
    limits.max_dimension = v;
  }
  return limits;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

// the cone after identifying coordinates forced equal
struct Reduced {
  std::size_t m = 0;
  std::vector<std::size_t> cls;
  std::vector<std::size_t> rep;
  std::vector<IntVector> rows;
  std::vector<std::vector<Rational>> congruences;
};

Reduced reduce(const RankCone& c) {
  const std::size_t n = c.dimension();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [i, j] : c.equalities) {
    if (i >= n || j >= n) throw InputError("equality references a missing coordinate");
    parent[find_root(parent, i)] = find_root(parent, j);
  }
  Reduced r;
  std::map<std::size_t, std::size_t> number;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find_root(parent, i);
    auto it = number.find(root);
    if (it == number.end()) {
      it = number.emplace(root, r.m++).first;
      r.rep.push_back(i);
    }
    r.cls.push_back(it->second);
  }
  for (const auto& row : c.inequalities) {
    if (row.size() != n) throw InputError("inequality row has the wrong length");
    std::vector<Rational> y(r.m, 0);
    for (std::size_t i = 0; i < n; ++i) y[r.cls[i]] += row[i];
    Integer scale = 1;
    for (const auto& v : y) scale = lcm(scale, denominator(v));
    IntVector out;
    bool zero = true;
    for (const auto& v : y) {
      out.push_back(numerator(Rational(v * scale)));
      zero = zero && v == 0;
    }
    if (!zero) r.rows.push_back(std::move(out));
  }
  for (const auto& row : c.integrality_rows) {
    if (row.size() != n) throw InputError("integrality row has the wrong length");
    std::vector<Rational> y(r.m, 0);
    for (std::size_t i = 0; i < n; ++i) y[r.cls[i]] += row[i];
    r.congruences.push_back(std::move(y));
  }
  return r;
}

bool is_unit_row(const IntVector& row, std::size_t& which) {
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] != 0) {
      if (row[i] < 0) return false;
      which = i;
      ++nonzero;
    }
  }
  return nonzero == 1;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, abs(x));
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

// double description in reduced coordinates, starting from the orthant
std::vector<IntVector> reduced_rays(const Reduced& r) {
  const std::size_t m = r.m;
  std::vector<bool> has_unit(m, false);
  std::vector<const IntVector*> pending;
  for (const auto& row : r.rows) {
    std::size_t w = 0;
    if (is_unit_row(row, w)) has_unit[w] = true;
    else pending.push_back(&row);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!has_unit[i]) throw InputError("cone is not contained in the nonnegative orthant");
  }

  const std::size_t total = m + pending.size();
  using Bits = boost::dynamic_bitset<>;
  std::vector<IntVector> rays;
  std::vector<Bits> tight;
  for (std::size_t i = 0; i < m; ++i) {
    IntVector e(m, 0);
    e[i] = 1;
    rays.push_back(std::move(e));
    Bits b(total);
    for (std::size_t j = 0; j < m; ++j) b[j] = j != i;
    tight.push_back(std::move(b));
  }

  for (std::size_t k = 0; k < pending.size(); ++k) {
    const std::size_t bit = m + k;
    const IntVector& row = *pending[k];
    std::vector<Integer> val;
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val.push_back(dot(row, rays[i]));
      if (val.back() > 0) pos.push_back(i);
      else if (val.back() < 0) neg.push_back(i);
      else tight[i][bit] = true;
    }
    if (neg.empty()) continue;

    std::vector<IntVector> next;
    std::vector<Bits> next_tight;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] >= 0) {
        next.push_back(rays[i]);
        next_tight.push_back(tight[i]);
      }
    }
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        const Bits common = tight[p] & tight[q];
        if (m >= 2 && common.count() + 2 < m) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == q) continue;
          if ((common & tight[o]) == common) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector v(m);
        for (std::size_t i = 0; i < m; ++i) v[i] = val[p] * rays[q][i] - val[q] * rays[p][i];
        make_primitive(v);
        Bits b = common;
        b[bit] = true;
        next.push_back(std::move(v));
        next_tight.push_back(std::move(b));
      }
    }
    rays = std::move(next);
    tight = std::move(next_tight);
  }
  return rays;
}

void check_dimension(const Reduced& r, const ConeLimits& limits) {
  if (r.m > limits.max_dimension) {
    throw BoundExceeded("cone dimension " + std::to_string(r.m) + " exceeds the bound " +
                        std::to_string(limits.max_dimension));
  }
}

IntVector expand(const Reduced& r, const IntVector& y) {
  IntVector x;
  for (std::size_t c : r.cls) x.push_back(y[c]);
  return x;
}

// int64 membership tests for enumeration
struct FastCone {
  std::size_t m = 0;
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::vector<std::int64_t>> cong;  // row . y == 0 mod modulus
  std::vector<std::int64_t> modulus;

  bool contains(const std::vector<std::int64_t>& y) const {
    for (const auto& row : rows) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < m; ++i) s += row[i] * y[i];
      if (s < 0) return false;
    }
    return in_lattice(y);
  }

  bool in_lattice(const std::vector<std::int64_t>& y) const {
    for (std::size_t k = 0; k < cong.size(); ++k) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < m; ++i) s += cong[k][i] * y[i];
      if (s % modulus[k] != 0) return false;
    }
    return true;
  }
};

std::int64_t to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int32_t>::max() || v < std::numeric_limits<std::int32_t>::min()) {
    throw BoundExceeded("cone coefficient " + v.str() + " is too large for enumeration");
  }
  return v.convert_to<std::int64_t>();
}

FastCone fast(const Reduced& r) {
  FastCone f;
  f.m = r.m;
  for (const auto& row : r.rows) {
    std::vector<std::int64_t> out;
    for (const auto& v : row) out.push_back(to_int64(v));
    f.rows.push_back(std::move(out));
  }
  for (const auto& row : r.congruences) {
    Integer scale = 1;
    for (const auto& v : row) scale = lcm(scale, denominator(v));
    if (scale == 1) continue;
    std::vector<std::int64_t> out;
    for (const auto& v : row) out.push_back(to_int64(numerator(Rational(v * scale))));
    f.cong.push_back(std::move(out));
    f.modulus.push_back(to_int64(scale));
  }
  return f;
}

std::int64_t degree(const std::vector<std::int64_t>& y) {
  return std::accumulate(y.begin(), y.end(), std::int64_t{0});
}


}  // namespace

bool contains(const RankCone& c, const std::vector<Rational>& x) {
  if (x.size() != c.dimension()) return false;
  for (const auto& [i, j] : c.equalities) {
    if (x[i] != x[j]) return false;
  }
  for (const auto& row : c.inequalities) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += row[i] * x[i];
    if (s < 0) return false;
  }
  return true;
}

bool in_lattice(const RankCone& c, const std::vector<Rational>& x) {
  for (const auto& v : x) {
    if (!is_integer(v)) return false;
  }
  for (const auto& row : c.integrality_rows) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += row[i] * x[i];
    if (!is_integer(s)) return false;
  }
  return true;
}

std::vector<IntVector> extreme_rays(const RankCone& c, const ConeLimits& limits) {
  const Reduced r = reduce(c);
  check_dimension(r, limits);
  std::vector<IntVector> out;
  for (const auto& y : reduced_rays(r)) out.push_back(expand(r, y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HilbertBasisResult hilbert_basis(const RankCone& c, const ConeLimits& limits) {
  const Reduced r = reduce(c);
  check_dimension(r, limits);
  const FastCone fc = fast(r);
  const std::size_t m = r.m;

  std::vector<IntVector> rays = reduced_rays(r);
  for (auto& ray : rays) {
    Integer k = 1;
    for (const auto& row : r.congruences) {
      Rational s = 0;
      for (std::size_t i = 0; i < m; ++i) s += row[i] * ray[i];
      k = lcm(k, denominator(s));
    }
    for (auto& x : ray) x *= k;
  }

  // a basis element is a combination of at most m linearly independent rays
  // with coefficients below 1
  std::vector<std::int64_t> bound(m, 0);
  std::size_t count = 1;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Integer> coord;
    for (const auto& ray : rays) coord.push_back(ray[i]);
    std::sort(coord.rbegin(), coord.rend());
    Integer b = 0;
    for (std::size_t k = 0; k < std::min(m, coord.size()); ++k) b += coord[k];
    bound[i] = to_int64(b);
    const auto width = static_cast<std::size_t>(bound[i] + 1);
    if (count > limits.max_enumeration / width) {
      throw BoundExceeded("Hilbert basis enumeration box exceeds " +
                          std::to_string(limits.max_enumeration) + " points");
    }
    count *= width;
  }

  std::vector<std::vector<std::int64_t>> candidates;
  std::vector<std::int64_t> y(m, 0);
  while (true) {
    if (degree(y) > 0 && fc.contains(y)) candidates.push_back(y);
    std::size_t i = 0;
    while (i < m && y[i] == bound[i]) y[i++] = 0;
    if (i == m) break;
    ++y[i];
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    return degree(a) != degree(b) ? degree(a) < degree(b) : a < b;
  });

  std::vector<std::vector<std::int64_t>> basis;
  std::vector<std::int64_t> diff(m);
  for (const auto& p : candidates) {
    bool reducible = false;
    for (const auto& h : basis) {
      bool nonneg = true;
      for (std::size_t i = 0; i < m && nonneg; ++i) {
        diff[i] = p[i] - h[i];
        nonneg = diff[i] >= 0;
      }
      if (nonneg && fc.contains(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(p);
  }

  HilbertBasisResult out;
  for (const auto& g : basis) {
    IrreducibilityCertificate cert;
    std::vector<std::int64_t> u(m, 0), rest(m);
    while (true) {
      const std::int64_t du = degree(u);
      if (du > 0 && du < degree(g)) {
        ++cert.splits_checked;
        for (std::size_t i = 0; i < m; ++i) rest[i] = g[i] - u[i];
        if (fc.contains(u) && fc.contains(rest)) cert.irreducible = false;
      }
      std::size_t i = 0;
      while (i < m && u[i] == g[i]) u[i++] = 0;
      if (i == m) break;
      ++u[i];
    }
    IntVector big;
    for (auto v : g) big.push_back(Integer(v));
    out.generators.push_back(expand(r, big));
    out.certificates.push_back(cert);
  }
  return out;
}

std::vector<Rational> coordinates(const RankOnObjects& r, const RankCone& c) {
  std::vector<Rational> x;
  for (const auto& id : c.labels) x.push_back(r.at(id));
  for (const auto& [id, v] : r.values()) {
    if (std::find(c.labels.begin(), c.labels.end(), id) == c.labels.end()) {
      throw InputError("rank function has a value on \"" + id + "\", which is not a cone coordinate");
    }
  }
  return x;
}

DecompositionResult decompose_integral(const RankOnObjects& r, const RankCone& c,
                                       const HilbertBasisResult& basis, std::size_t cap) {
  const auto x = coordinates(r, c);
  if (!contains(c, x)) throw InputError("rank function is not in the cone");
  if (!in_lattice(c, x)) throw InputError("rank function is not an integral point of the cone");
  const Reduced red = reduce(c);
  const FastCone fc = fast(red);
  const std::size_t m = red.m;

  std::vector<std::int64_t> target;
  for (std::size_t k = 0; k < m; ++k) target.push_back(to_int64(numerator(x[red.rep[k]])));
  std::vector<std::vector<std::int64_t>> gens;
  for (const auto& g : basis.generators) {
    std::vector<std::int64_t> y;
    for (std::size_t k = 0; k < m; ++k) y.push_back(to_int64(g.at(red.rep[k])));
    gens.push_back(std::move(y));
  }

  DecompositionResult out;
  std::vector<std::size_t> chosen;
  auto search = [&](auto&& self, std::size_t start, std::vector<std::int64_t>& rest) -> void {
    if (out.truncated) return;
    if (degree(rest) == 0) {
      if (out.decompositions.size() == cap) out.truncated = true;
      else out.decompositions.push_back(chosen);
      return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
      bool fits = true;
      for (std::size_t k = 0; k < m && fits; ++k) fits = gens[i][k] <= rest[k];
      if (!fits) continue;
      for (std::size_t k = 0; k < m; ++k) rest[k] -= gens[i][k];
      if (fc.contains(rest)) {
        chosen.push_back(i);
        self(self, i, rest);
        chosen.pop_back();
      }
      for (std::size_t k = 0; k < m; ++k) rest[k] += gens[i][k];
    }
  };
  search(search, 0, target);
  out.unique = out.decompositions.size() == 1 && !out.truncated;
  return out;
}

}  // namespace rankfn
