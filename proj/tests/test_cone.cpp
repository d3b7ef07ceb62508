#include "helpers.hpp"

#include "rankfn/additive.hpp"
#include "rankfn/cone.hpp"
#include "rankfn/errors.hpp"
#include "rankfn/gallery.hpp"
#include "rankfn/rank_morphisms.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

using namespace rankfn;

namespace {

RankCone plain_cone(std::vector<IndecId> labels, std::vector<std::vector<Rational>> rows) {
  RankCone c;
  c.labels = std::move(labels);
  for (std::size_t i = 0; i < c.labels.size(); ++i) {
    std::vector<Rational> e(c.labels.size(), 0);
    e[i] = 1;
    c.inequalities.push_back(e);
    c.row_origin.push_back("nonneg");
  }
  for (auto& r : rows) {
    c.inequalities.push_back(std::move(r));
    c.row_origin.push_back("extra");
  }
  return c;
}

IntVector iv(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<Rational> as_rational(const IntVector& v) { return {v.begin(), v.end()}; }

RankOnObjects as_rank(const RankCone& c, const IntVector& v) {
  std::map<IndecId, Rational> m;
  for (std::size_t i = 0; i < v.size(); ++i) m[c.labels[i]] = Rational(v[i]);
  return RankOnObjects(m);
}

// classes of coordinates forced equal, found directly from the equality list
std::vector<std::vector<std::size_t>> classes(const RankCone& c) {
  std::vector<std::size_t> id(c.dimension());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : c.equalities) {
      const auto m = std::min(id[a], id[b]);
      if (id[a] != m || id[b] != m) {
        id[a] = id[b] = m;
        changed = true;
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < id.size(); ++i) groups[id[i]].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [k, g] : groups) out.push_back(g);
  return out;
}

// every integral point of the cone with coordinates in [0, bound]
std::vector<IntVector> box_points(const RankCone& c, long bound) {
  const auto cls = classes(c);
  std::vector<IntVector> out;
  IntVector x(c.dimension(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cls.size()) {
      const auto q = as_rational(x);
      if (contains(c, q) && in_lattice(c, q)) out.push_back(x);
      return;
    }
    for (long v = 0; v <= bound; ++v) {
      for (auto i : cls[k]) x[i] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

bool leq(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

IntVector minus(IntVector a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

// irreducible points of the box by exhaustive splitting
std::set<IntVector> box_irreducibles(const RankCone& c, long bound) {
  const auto pts = box_points(c, bound);
  const std::set<IntVector> members(pts.begin(), pts.end());
  const IntVector zero(c.dimension(), 0);
  std::set<IntVector> out;
  for (const auto& p : pts) {
    if (p == zero) continue;
    bool splits = false;
    for (const auto& h : pts) {
      if (h == zero || h == p || !leq(h, p)) continue;
      if (members.count(minus(p, h))) {
        splits = true;
        break;
      }
    }
    if (!splits) out.insert(p);
  }
  return out;
}

void check_hilbert_against_oracle(const RankCone& c) {
  const auto hb = hilbert_basis(c);
  long bound = 1;
  for (const auto& g : hb.generators) {
    for (const auto& x : g) bound = std::max(bound, x.convert_to<long>());
  }
  const auto oracle = box_irreducibles(c, bound + 1);
  const std::set<IntVector> got(hb.generators.begin(), hb.generators.end());
  CHECK(got == oracle);
  REQUIRE(hb.certificates.size() == hb.generators.size());
  for (const auto& cert : hb.certificates) CHECK(cert.irreducible);
  // every small integral point decomposes, and sums back exactly
  for (const auto& p : box_points(c, std::min(bound, 3L))) {
    const auto r = as_rank(c, p);
    const auto dec = decompose_integral(r, c, hb, 4);
    REQUIRE_FALSE(dec.decompositions.empty());
    for (const auto& combo : dec.decompositions) {
      IntVector sum(c.dimension(), 0);
      for (auto g : combo) {
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += hb.generators[g][i];
      }
      CHECK(sum == p);
    }
  }
}

void check_ray_certificates(const RankCone& c) {
  const auto rays = extreme_rays(c);
  for (const auto& ray : rays) {
    const auto x = as_rational(ray);
    CHECK(contains(c, x));
    std::vector<std::vector<Rational>> tight;
    for (const auto& row : c.inequalities) {
      Rational dot = 0;
      for (std::size_t i = 0; i < row.size(); ++i) dot += row[i] * x[i];
      if (dot == 0) tight.push_back(row);
    }
    for (auto [a, b] : c.equalities) {
      std::vector<Rational> row(c.dimension(), 0);
      row[a] = 1;
      row[b] = -1;
      tight.push_back(row);
    }
    Matrix m(tight.size(), c.dimension());
    for (std::size_t r = 0; r < tight.size(); ++r) {
      for (std::size_t i = 0; i < c.dimension(); ++i) m(r, i) = tight[r][i];
    }
    CHECK(rank(m) + 1 == c.dimension());
    // primitive
    Integer g = 0;
    for (const auto& v : ray) g = gcd(g, v);
    CHECK(g == 1);
  }
  CHECK(std::is_sorted(rays.begin(), rays.end()));
}

}  // namespace

TEST_SUITE("cone-tools") {

TEST_CASE("no angles: invariant orthant") {
  CategorySkeleton s;
  s.d = 1;
  s.indecs = {"a", "b", "c"};
  s.suspension.perm = {{"a", "a"}, {"b", "b"}, {"c", "c"}};
  const auto c = make_cone(s, 1);
  CHECK(extreme_rays(c) == std::vector<IntVector>{iv({0, 0, 1}), iv({0, 1, 0}), iv({1, 0, 0})});
  const auto hb = hilbert_basis(c);
  CHECK(hb.generators.size() == 3);

  s.suspension.perm = {{"a", "b"}, {"b", "a"}, {"c", "c"}};
  CHECK(extreme_rays(make_cone(s, 1)) == std::vector<IntVector>{iv({0, 0, 1}), iv({1, 1, 0})});
}

TEST_CASE("hand-computed cones") {
  const auto half = plain_cone({"x", "y"}, {{1, -1}});
  CHECK(extreme_rays(half) == std::vector<IntVector>{iv({1, 0}), iv({1, 1})});
  check_ray_certificates(half);
  CHECK(hilbert_basis(plain_cone({"x", "y"}, {})).generators == std::vector<IntVector>{iv({0, 1}), iv({1, 0})});

  const auto ones = plain_cone({"x", "y"}, {{1, -1}, {-1, 1}});
  const auto hb = hilbert_basis(ones);
  CHECK(hb.generators == std::vector<IntVector>{iv({1, 1})});
  const auto dec = decompose_integral(as_rank(ones, iv({2, 2})), ones, hb);
  CHECK(dec.unique);
  CHECK(dec.decompositions == std::vector<std::vector<std::size_t>>{{0, 0}});
}

TEST_CASE("non-unique decompositions are surfaced") {
  // generated by (1,0) and (1,2); Hilbert basis adds (1,1)
  const auto c = plain_cone({"x", "y"}, {{2, -1}});
  const auto hb = hilbert_basis(c);
  CHECK(hb.generators == std::vector<IntVector>{iv({1, 0}), iv({1, 1}), iv({1, 2})});
  const auto dec = decompose_integral(as_rank(c, iv({2, 2})), c, hb);
  CHECK_FALSE(dec.unique);
  CHECK(dec.decompositions.size() == 2);
  check_hilbert_against_oracle(c);
}

TEST_CASE("O_A: a single all-ones ray") {
  for (int d : {1, 2, 3, 5}) {
    const auto e = build_oa_cluster(d);
    const auto c = make_cone(e.skeleton, default_depth(e.skeleton));
    const auto rays = extreme_rays(c);
    REQUIRE(rays.size() == 1);
    CHECK(rays.front() == IntVector(e.skeleton.indecs.size(), Integer(1)));
    check_ray_certificates(c);
    const auto hb = hilbert_basis(c);
    CHECK(hb.generators == rays);
    std::map<IndecId, Rational> two;
    for (const auto& id : e.skeleton.indecs) two[id] = 2;
    const auto dec = decompose_integral(RankOnObjects(two), c, hb);
    CHECK(dec.unique);
    CHECK(dec.decompositions.front() == std::vector<std::size_t>{0, 0});
  }
}

TEST_CASE("gallery ranks are members; certificates and oracle bases") {
  for (const auto& name : gallery_names()) {
    const auto e = build_entry(name);
    const auto depth = default_depth(e.skeleton);
    const auto c = make_cone(e.skeleton, depth);
    CAPTURE(name);
    for (const auto& [rname, r] : e.reference_ranks) CHECK(contains(c, coordinates(r, c)));
    check_ray_certificates(c);
  }
  const auto e = build_d3_custom();
  const auto c = make_cone(e.skeleton, 1);
  CHECK(contains(c, coordinates(e.rank("custom"), c)));
  check_hilbert_against_oracle(c);
  check_hilbert_against_oracle(make_cone(build_and2_cluster(1).skeleton, 3));
}

TEST_CASE("Nakayama cones: Hilbert basis is the image of the orbit indicators") {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 3}, {4, 1}, {4, 3}}) {
    const auto e = build_nakayama_proj(n, 2, d);
    REQUIRE(e.engine);
    const auto& ctx = *e.engine;
    const auto depth = default_depth(e.skeleton);
    const auto c = make_cone(e.skeleton, depth, Lattice::Morphisms);
    const auto hb = hilbert_basis(c);
    std::set<IntVector> images;
    for (const auto& orbit : ctx.twist.orbits) {
      const auto rho = objects_from_additive(orbit_indicator(orbit, n), ctx);
      IntVector v;
      for (const auto& x : coordinates(rho, c)) v.push_back(numerator(x));
      images.insert(v);
    }
    CAPTURE(n);
    CAPTURE(d);
    CHECK(std::set<IntVector>(hb.generators.begin(), hb.generators.end()) == images);
    check_hilbert_against_oracle(c);
    CHECK(contains(c, coordinates(e.rank("composition_length"), c)));
  }
}

TEST_CASE("Nakayama cones: decompositions agree with orbit decompositions") {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {3, 3}}) {
    const auto e = build_nakayama_proj(n, 2, d);
    const auto& ctx = *e.engine;
    const auto c = make_cone(e.skeleton, default_depth(e.skeleton), Lattice::Morphisms);
    const auto hb = hilbert_basis(c);
    int limit = 1;
    for (int v = 0; v < n; ++v) limit *= 4;
    for (int code = 0; code < limit; ++code) {
      std::vector<Rational> vals;
      for (int v = 0, rest = code; v < n; ++v, rest /= 4) vals.push_back(rest % 4);
      const AdditiveFn alpha(vals);
      if (!check_sigma_invariant(alpha, ctx.twist)) continue;
      const auto dec = decompose_integral(objects_from_additive(alpha, ctx), c, hb);
      CHECK(dec.unique);
      // map each generator back through psi and compare multisets of orbits
      std::map<std::vector<int>, Integer> from_cone;
      for (auto g : dec.decompositions.front()) {
        const auto rm = psi_from_objects(as_rank(c, hb.generators[g]), ctx);
        const auto terms = decompose_invariant(additive_from_morphism_rank(rm, ctx), ctx.twist);
        REQUIRE(terms.size() == 1);
        REQUIRE(terms.front().multiplicity == 1);
        from_cone[terms.front().orbit] += 1;
      }
      std::map<std::vector<int>, Integer> from_orbits;
      for (const auto& t : decompose_invariant(alpha, ctx.twist)) from_orbits[t.orbit] = t.multiplicity;
      CHECK(from_cone == from_orbits);
    }
  }
}

TEST_CASE("lattices and limits") {
  CHECK_THROWS_AS(make_cone(build_and2_cluster(2).skeleton, 1, Lattice::Morphisms), ParityError);
  const auto c = make_cone(build_d3_custom().skeleton, 1);
  CHECK_THROWS_AS(extreme_rays(c, ConeLimits{2, 1000}), BoundExceeded);
  CHECK_THROWS_AS(hilbert_basis(c, ConeLimits{24, 10}), BoundExceeded);
  CHECK_THROWS_AS(decompose_integral(testing::rank({{"x", 1}}), c, hilbert_basis(c)), InputError);
  const auto half = plain_cone({"x", "y"}, {{1, -1}});
  CHECK(contains(half, {2, 1}));
  CHECK_FALSE(contains(half, {1, 2}));
}

}  // TEST_SUITE
