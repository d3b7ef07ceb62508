#include "rankfn/gallery.hpp"

#include "rankfn/errors.hpp"

#include <regex>

namespace rankfn {

const RankOnObjects& GalleryEntry::rank(const std::string& rank_name) const {
  for (const auto& [n, r] : reference_ranks) {
    if (n == rank_name) return r;
  }
  throw InputError("entry " + name + " has no rank function \"" + rank_name + "\"");
}

std::vector<IndecId> and2_base_labels(int d) {
  if (d < 1) throw InputError("d must be positive");
  const std::string sep = d + 1 >= 10 ? "." : "";
  std::vector<IndecId> out{"1"};
  for (int i = 1; i <= d; ++i) out.push_back(std::to_string(i + 1) + sep + std::to_string(i));
  out.push_back(std::to_string(d + 1));
  return out;
}

IndecId and2_label(const IndecId& base, int d, int layer) {
  if (layer == 0) return base;
  return "S^" + std::to_string(d * layer) + "(" + base + ")";
}

GalleryEntry build_and2_cluster(int d, int window) {
  if (window < 2) {
    throw InputError("window " + std::to_string(window) +
                     " too small: rotations of the generating angle need the next layer");
  }
  const auto base = and2_base_labels(d);
  const int lo = -(window - 1) / 2;
  const int hi = window / 2;

  GalleryEntry e;
  e.name = "and2-d" + std::to_string(d) + (window == 3 ? "" : "-w" + std::to_string(window));
  e.skeleton.d = d;
  std::map<IndecId, Rational> dims;
  for (int j = lo; j <= hi; ++j) {
    const int up = j == hi ? lo : j + 1;
    for (std::size_t b = 0; b < base.size(); ++b) {
      const auto id = and2_label(base[b], d, j);
      e.skeleton.indecs.push_back(id);
      e.skeleton.suspension.perm[id] = and2_label(base[b], d, up);
      dims[id] = (b == 0 || b + 1 == base.size()) ? 1 : 2;
    }
  }
  AngleTemplate g{d, {}};
  for (const auto& id : base) g.objects.push_back({id});
  e.skeleton.angles.push_back(g);
  e.reference_ranks.emplace_back("rho_A", RankOnObjects(dims));
  e.notes = "A^" + std::to_string(d) + "_2 cluster tilting subcategory, shift window of " +
            std::to_string(window) + " layers (" + std::to_string(lo) + ".." + std::to_string(hi) +
            ") with wrapping suspension; rho_A is the dimension of the stalk module";
  return e;
}

GalleryEntry build_d3_custom() {
  GalleryEntry e = build_and2_cluster(3, 3);
  e.name = "d3-custom";
  const std::map<IndecId, long> base{{"1", 2}, {"21", 0}, {"32", 1}, {"43", 3}, {"4", 4}};
  std::map<IndecId, Rational> values;
  for (int j = -1; j <= 1; ++j) {
    for (const auto& [id, v] : base) values[and2_label(id, 3, j)] = v;
  }
  e.reference_ranks = {{"custom", RankOnObjects(values)}};
  e.notes = "d = 3 assignment 1:2, 21:0, 32:1, 43:3, 4:4, extended to every layer";
  return e;
}

GalleryEntry build_oa_cluster(int d) {
  const auto base = and2_base_labels(d);
  const int count = 2 * d + 2;
  std::vector<IndecId> cycle(base.begin(), base.end());
  for (int p = 0; static_cast<int>(cycle.size()) < count; ++p) {
    cycle.push_back(and2_label(base[static_cast<std::size_t>(p)], d, 1));
  }
  GalleryEntry e;
  e.name = "oa-d" + std::to_string(d);
  e.skeleton.d = d;
  e.skeleton.indecs = cycle;
  std::map<IndecId, Rational> ones;
  for (int p = 0; p < count; ++p) {
    const auto& id = cycle[static_cast<std::size_t>(p)];
    e.skeleton.suspension.perm[id] = cycle[static_cast<std::size_t>((p + d + 2) % count)];
    ones[id] = 1;
    AngleTemplate a{d, {}};
    for (int k = 0; k < d + 2; ++k) a.objects.push_back({cycle[static_cast<std::size_t>((p + k) % count)]});
    e.skeleton.angles.push_back(a);
  }
  e.reference_ranks.emplace_back("all_ones", RankOnObjects(ones));
  e.notes = "cluster category O_A of A^" + std::to_string(d) +
            "_2: cycle of 2d+2 objects, suspension = shift by d+2, angles = runs of d+2 objects";
  return e;
}

GalleryEntry build_nakayama_proj(int n, int ell, int d) {
  const NakayamaAlgebra a{n, ell, Shape::Cyclic};
  a.validate();
  const EngineContext ctx = make_context(a, d);
  GalleryEntry e;
  e.name = "nakayama-n" + std::to_string(n) + "-l" + std::to_string(ell) + "-d" + std::to_string(d);
  e.skeleton.d = d;
  for (int v = 1; v <= n; ++v) {
    e.skeleton.indecs.push_back(projective_label(v));
    e.skeleton.suspension.perm[projective_label(v)] = projective_label(ctx.twist.apply(v));
  }
  for (const auto& x : all_intervals(a)) {
    if (is_projective(x, a)) continue;
    e.skeleton.angles.push_back(to_template(generate_angle(NakayamaModule{x}, a, ctx.twist)));
  }
  e.reference_ranks.emplace_back(
      "composition_length", objects_from_additive(AdditiveFn(std::vector<Rational>(static_cast<std::size_t>(n), 1)), ctx));
  e.notes = "proj A for A = kC_" + std::to_string(n) + "/rad^" + std::to_string(ell) +
            " with the (d+2)-angulation from the twist; angles are minimal resolutions of the "
            "non-projective indecomposables";
  e.engine = ctx;
  return e;
}

std::vector<std::string> gallery_names() {
  return {"and2-d1",           "and2-d2",           "and2-d3",           "and2-d5",
          "d3-custom",         "oa-d1",             "oa-d2",             "oa-d3",
          "oa-d5",             "nakayama-n2-l2-d1", "nakayama-n3-l2-d1", "nakayama-n3-l2-d3",
          "nakayama-n4-l2-d3", "nakayama-n3-l3-d2"};
}

GalleryEntry build_entry(const std::string& name) {
  std::smatch m;
  if (name == "d3-custom") return build_d3_custom();
  if (std::regex_match(name, m, std::regex(R"(and2-d(\d+)(?:-w(\d+))?)"))) {
    return build_and2_cluster(std::stoi(m[1]), m[2].matched ? std::stoi(m[2]) : 3);
  }
  if (std::regex_match(name, m, std::regex(R"(oa-d(\d+))"))) {
    const int d = std::stoi(m[1]);
    if (d < 1) throw InputError("d must be positive");
    return build_oa_cluster(d);
  }
  if (std::regex_match(name, m, std::regex(R"(nakayama-n(\d+)-l(\d+)-d(\d+))"))) {
    return build_nakayama_proj(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]));
  }
  throw InputError("unknown gallery entry \"" + name + "\"");
}

}  // namespace rankfn
