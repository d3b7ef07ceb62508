#include "rankfn/cli.hpp"

#include "rankfn/additive.hpp"
#include "rankfn/cone.hpp"
#include "rankfn/errors.hpp"
#include "rankfn/gallery.hpp"
#include "rankfn/json_io.hpp"
#include "rankfn/rank_morphisms.hpp"
#include "rankfn/rank_objects.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace rankfn {

namespace {

struct Inputs {
  std::istream& in;
  std::optional<std::string> stdin_text;

  std::string read(const std::string& arg) {
    if (arg == "-") {
      if (!stdin_text) {
        std::ostringstream ss;
        ss << in.rdbuf();
        stdin_text = ss.str();
      }
      return *stdin_text;
    }
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
    std::ifstream file(arg);
    if (!file) throw InputError("cannot open \"" + arg + "\"");
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
  }

  Json json(const std::string& arg) { return parse_json(read(arg), arg == "-" ? "<stdin>" : arg); }
};

struct Loaded {
  CategorySkeleton skeleton;
  std::optional<RankOnObjects> rank;
};

RankOnObjects pick_rank(const Json& entry, const std::string& name) {
  const auto& ranks = entry.at("ranks");
  if (!ranks.is_object() || ranks.empty()) throw InputError("gallery entry carries no rank function");
  if (name.empty()) return rank_from_json(ranks.begin().value());
  if (!ranks.contains(name)) throw InputError("gallery entry has no rank function \"" + name + "\"");
  return rank_from_json(ranks[name]);
}

void require_valid(const CategorySkeleton& s) {
  const auto rep = validate_skeleton(s);
  if (rep.passed()) return;
  for (const auto& sec : rep.sections) {
    for (const auto& f : sec.findings) throw InputError("invalid skeleton: " + f.location + ": " + f.message);
  }
}

Loaded load(Inputs& io, const std::string& skeleton_arg, const std::string& rank_arg,
            const std::string& rank_name, bool need_rank) {
  Loaded out;
  const Json doc = io.json(skeleton_arg);
  if (is_gallery_entry(doc)) {
    out.skeleton = skeleton_from_json(doc["skeleton"]);
    if (rank_arg.empty() && need_rank) out.rank = pick_rank(doc, rank_name);
  } else {
    out.skeleton = skeleton_from_json(doc);
  }
  if (!rank_arg.empty()) {
    const Json r = io.json(rank_arg);
    out.rank = is_gallery_entry(r) ? pick_rank(r, rank_name) : rank_from_json(r);
  }
  if (need_rank && !out.rank) throw InputError("a rank function is required");
  require_valid(out.skeleton);
  return out;
}

std::size_t depth_for(const CategorySkeleton& s, int depth) {
  if (depth < 0) return default_depth(s);
  return static_cast<std::size_t>(depth);
}

int emit(std::ostream& out, const Json& j, int code) {
  out << j.dump(2) << "\n";
  return code;
}

ObjectClass parse_object(const std::vector<std::string>& parts, const CategorySkeleton& s) {
  ObjectClass x;
  for (const auto& part : parts) {
    std::stringstream ss(part);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (id.empty()) continue;
      if (!s.contains(id)) throw InputError("unknown indec \"" + id + "\"");
      x.add(id);
    }
  }
  return x;
}

MorphismRank rank_procedure(const Json& j, const EngineContext& ctx) {
  const std::string kind = j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  if (kind == "varphi") return varphi(additive_from_json(j, ctx.algebra.n), ctx);
  if (kind == "psi") return psi_from_objects(rank_from_json(j), ctx);
  throw InputError("rank-proc: \"kind\" must be \"varphi\" (with simple_values) or \"psi\" (with values)");
}

std::pair<int, int> parse_pad(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument("");
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw InputError("padding must be written vertex:position, got \"" + text + "\"");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"rank functions on (d+2)-angulated categories", "rankfn"};
  app.require_subcommand(1);

  std::string skeleton_arg, rank_arg, rank_name, algebra_arg, extra_arg, module_b_arg, lattice = "objects";
  int depth = -1;
  int angle_index = 0;
  int d = 0;
  std::vector<std::string> object_parts, pads_a, pads_b;
  std::string cone_mode, examples_mode;

  auto add_skeleton = [&](CLI::App* cmd, bool rank_positional) {
    cmd->add_option("skeleton", skeleton_arg, "skeleton or gallery entry (file, - or inline JSON)")->required();
    if (rank_positional) cmd->add_option("rank", rank_arg, "rank function on objects");
    cmd->add_option("--rank-name", rank_name, "rank function of a gallery entry");
    cmd->add_option("--depth", depth, "closure depth (default: order of the suspension)");
  };

  auto* validate = app.add_subcommand("validate", "check a skeleton");
  validate->add_option("skeleton", skeleton_arg)->required();
  auto* check_ro = app.add_subcommand("check-ro", "axioms RO0-RO3");
  add_skeleton(check_ro, true);
  auto* check_rm = app.add_subcommand("check-rm", "axioms RM0-RM3 for Psi and the round trip");
  add_skeleton(check_rm, true);
  auto* psi = app.add_subcommand("psi", "Psi on a closure angle");
  add_skeleton(psi, true);
  psi->add_option("--angle", angle_index, "index in the rotation closure")->required();
  auto* phi = app.add_subcommand("phi", "Phi on an object");
  add_skeleton(phi, true);
  phi->add_option("--object", object_parts, "comma separated labels")->required();

  auto* varphi_cmd = app.add_subcommand("varphi", "varphi(alpha)(f) = alpha(Im f)");
  varphi_cmd->add_option("algebra", algebra_arg)->required();
  varphi_cmd->add_option("additive", extra_arg)->required();
  varphi_cmd->add_option("morphism", module_b_arg)->required();
  auto* psi_mod = app.add_subcommand("psi-mod", "psi(rank)(M) through a presenting morphism");
  psi_mod->add_option("algebra", algebra_arg)->required();
  psi_mod->add_option("rank-proc", extra_arg)->required();
  psi_mod->add_option("module", module_b_arg)->required();
  psi_mod->add_option("--d", d, "angulation degree")->required();
  auto* decompose = app.add_subcommand("decompose", "orbit decomposition of an invariant additive function");
  decompose->add_option("algebra", algebra_arg)->required();
  decompose->add_option("additive", extra_arg)->required();
  decompose->add_option("--d", d, "angulation degree")->required();

  auto* cone = app.add_subcommand("cone", "cone of rank functions on objects");
  cone->add_option("mode", cone_mode, "rays | hilbert | decompose")
      ->required()
      ->check(CLI::IsMember({"rays", "hilbert", "decompose"}));
  add_skeleton(cone, true);
  cone->add_option("--lattice", lattice, "objects | morphisms")->check(CLI::IsMember({"objects", "morphisms"}));

  auto* schanuel = app.add_subcommand("schanuel", "Schanuel identity for two generated angles");
  schanuel->add_option("algebra", algebra_arg)->required();
  schanuel->add_option("moduleA", extra_arg)->required();
  schanuel->add_option("moduleB", module_b_arg)->required();
  schanuel->add_option("--d", d, "angulation degree")->required();
  schanuel->add_option("--pad-a", pads_a, "contractible summand vertex:position for the first angle");
  schanuel->add_option("--pad-b", pads_b, "contractible summand vertex:position for the second angle");

  auto* examples = app.add_subcommand("examples", "built-in examples");
  examples->add_option("mode", examples_mode, "list | emit")->required()->check(CLI::IsMember({"list", "emit"}));
  examples->add_option("name", extra_arg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Inputs io{in, std::nullopt};
  try {
    if (validate->parsed()) {
      const auto s = skeleton_from_json([&] {
        const Json doc = io.json(skeleton_arg);
        return is_gallery_entry(doc) ? doc["skeleton"] : doc;
      }());
      const auto rep = validate_skeleton(s);
      return emit(out, to_json(rep), rep.passed() ? 0 : 1);
    }

    if (check_ro->parsed()) {
      const auto l = load(io, skeleton_arg, rank_arg, rank_name, true);
      const auto res = check_rank_on_objects(*l.rank, l.skeleton, depth_for(l.skeleton, depth));
      Json j = to_json(res.report);
      Json defects = Json::array();
      for (const auto& def : res.defects) {
        defects.push_back({{"angle", to_json(def.angle)}, {"defect", format_rational(def.defect)}});
      }
      j["defects"] = defects;
      j["integral"] = is_integral(*l.rank);
      return emit(out, j, res.report.passed() ? 0 : 1);
    }

    if (check_rm->parsed()) {
      const auto l = load(io, skeleton_arg, rank_arg, rank_name, true);
      require_odd(l.skeleton.d, "check-rm");
      const std::size_t dep = depth_for(l.skeleton, depth);
      auto rep = rm_axiom_suite(*l.rank, l.skeleton, dep);
      if (rep.passed()) rep.append(roundtrip_check(*l.rank, l.skeleton, dep));
      return emit(out, to_json(rep), rep.passed() ? 0 : 1);
    }

    if (psi->parsed()) {
      const auto l = load(io, skeleton_arg, rank_arg, rank_name, true);
      require_odd(l.skeleton.d, "psi");
      const auto closure = angle_closure(l.skeleton, depth_for(l.skeleton, depth));
      if (angle_index < 0 || static_cast<std::size_t>(angle_index) >= closure.size()) {
        throw InputError("angle index " + std::to_string(angle_index) + " outside the closure of size " +
                         std::to_string(closure.size()));
      }
      const auto& a = closure[static_cast<std::size_t>(angle_index)];
      try {
        const Rational v = psi_eval(*l.rank, a);
        return emit(out, {{"status", "pass"}, {"angle", to_json(a)}, {"value", format_rational(v)}}, 0);
      } catch (const Ro2Violation& e) {
        return emit(out, {{"status", "fail"}, {"angle", to_json(a)}, {"message", e.what()}}, 1);
      }
    }

    if (phi->parsed()) {
      const auto l = load(io, skeleton_arg, rank_arg, rank_name, true);
      const auto x = parse_object(object_parts, l.skeleton);
      const Rational v = phi_eval(RankOnMorphismsView{*l.rank, l.skeleton.d}, x);
      Json obj = Json::array();
      for (const auto& id : x.labels()) obj.push_back(id);
      return emit(out, {{"status", "pass"}, {"object", obj}, {"value", format_rational(v)}}, 0);
    }

    if (varphi_cmd->parsed()) {
      const auto a = algebra_from_json(io.json(algebra_arg));
      const auto alpha = additive_from_json(io.json(extra_arg), a.n);
      const auto f = morphism_from_json(io.json(module_b_arg));
      const auto image = image_of(f, a);
      return emit(out,
                  {{"status", "pass"}, {"image", to_json(image)}, {"value", format_rational(eval_additive(alpha, image, a))}},
                  0);
    }

    if (psi_mod->parsed()) {
      require_odd(d, "psi-mod");
      const auto a = algebra_from_json(io.json(algebra_arg));
      const auto ctx = make_context(a, d);
      const auto rm = rank_procedure(io.json(extra_arg), ctx);
      const auto m = module_from_json(io.json(module_b_arg));
      const auto f = presenting_morphism(m, a);
      try {
        const Rational v = psi_mod_eval(rm, m, a, d);
        return emit(out, {{"status", "pass"}, {"presenting_morphism", to_json(f)}, {"value", format_rational(v)}}, 0);
      } catch (const Ro2Violation& e) {
        return emit(out, {{"status", "fail"}, {"message", e.what()}}, 1);
      }
    }

    if (decompose->parsed()) {
      const auto a = algebra_from_json(io.json(algebra_arg));
      const auto t = twist_data(a, d);
      const auto alpha = additive_from_json(io.json(extra_arg), a.n);
      Json terms = Json::array();
      for (const auto& term : decompose_invariant(alpha, t)) {
        terms.push_back({{"orbit", term.orbit}, {"multiplicity", term.multiplicity.convert_to<long long>()}});
      }
      return emit(out, {{"status", "pass"}, {"terms", terms}}, 0);
    }

    if (cone->parsed()) {
      const bool need_rank = cone_mode == "decompose";
      const auto l = load(io, skeleton_arg, rank_arg, rank_name, need_rank);
      const std::size_t dep = depth_for(l.skeleton, depth);
      const auto c = make_cone(l.skeleton, dep, lattice == "morphisms" ? Lattice::Morphisms : Lattice::Objects);
      const auto limits = ConeLimits::from_env();
      Json j{{"status", "pass"}, {"labels", c.labels}, {"lattice", lattice}};
      if (cone_mode == "rays") {
        Json rays = Json::array();
        for (const auto& r : extreme_rays(c, limits)) rays.push_back(to_json(r));
        j["rays"] = rays;
        return emit(out, j, 0);
      }
      const auto hb = hilbert_basis(c, limits);
      Json gens = Json::array();
      for (const auto& g : hb.generators) gens.push_back(to_json(g));
      j["generators"] = gens;
      bool certified = true;
      Json certs = Json::array();
      for (const auto& cert : hb.certificates) {
        certs.push_back({{"splits_checked", cert.splits_checked}, {"irreducible", cert.irreducible}});
        certified = certified && cert.irreducible;
      }
      j["certificates"] = certs;
      if (cone_mode == "hilbert") {
        j["status"] = certified ? "pass" : "fail";
        return emit(out, j, certified ? 0 : 1);
      }
      const auto dec = decompose_integral(*l.rank, c, hb);
      Json decs = Json::array();
      for (const auto& dd : dec.decompositions) decs.push_back(dd);
      j["decompositions"] = decs;
      j["unique"] = dec.unique;
      j["truncated"] = dec.truncated;
      return emit(out, j, 0);
    }

    if (schanuel->parsed()) {
      const auto a = algebra_from_json(io.json(algebra_arg));
      const auto t = twist_data(a, d);
      auto x = generate_angle(module_from_json(io.json(extra_arg)), a, t);
      auto y = generate_angle(module_from_json(io.json(module_b_arg)), a, t);
      for (const auto& p : pads_a) {
        const auto [v, pos] = parse_pad(p);
        validate_module(projective_module(v, a), a);
        x = pad_contractible(x, v, pos, t);
      }
      for (const auto& p : pads_b) {
        const auto [v, pos] = parse_pad(p);
        validate_module(projective_module(v, a), a);
        y = pad_contractible(y, v, pos, t);
      }
      const auto res = schanuel_check(x, y, a);
      const bool ok = !res.homotopy_equivalent || res.balanced;
      Json j{{"status", ok ? "pass" : "fail"},
             {"homotopy_equivalent", res.homotopy_equivalent},
             {"balanced", res.balanced},
             {"even_odd", res.lhs},
             {"odd_even", res.rhs},
             {"angle_a", to_json(x)},
             {"angle_b", to_json(y)}};
      return emit(out, j, ok ? 0 : 1);
    }

    if (examples->parsed()) {
      if (examples_mode == "list") return emit(out, {{"examples", gallery_names()}}, 0);
      if (extra_arg.empty()) throw InputError("examples emit needs a name");
      return emit(out, to_json(build_entry(extra_arg)), 0);
    }
  } catch (const ParityError& e) {
    err << "rankfn: " << e.what() << "\n";
    return emit(out, {{"status", "error"}, {"kind", "parity"}, {"message", e.what()}}, 2);
  } catch (const InputError& e) {
    err << "rankfn: " << e.what() << "\n";
    return emit(out, {{"status", "error"}, {"message", e.what()}}, 2);
  } catch (const std::exception& e) {
    err << "rankfn: internal error: " << e.what() << "\n";
    return emit(out, {{"status", "error"}, {"message", e.what()}}, 2);
  }
  return 2;
}

}  // namespace rankfn
