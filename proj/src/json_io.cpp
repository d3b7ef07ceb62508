#include "rankfn/json_io.hpp"

#include "rankfn/errors.hpp"

namespace rankfn {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) bad(where, "integer out of range");
  return static_cast<int>(v);
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

Rational as_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) bad(where, "expected a rational \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    bad(where, e.what());
  }
}

ObjectClass object_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a list of labels");
  ObjectClass x;
  for (std::size_t i = 0; i < j.size(); ++i) x.add(as_string(j[i], where + "[" + std::to_string(i) + "]"));
  return x;
}

Json object_to_json(const ObjectClass& x) {
  Json out = Json::array();
  for (const auto& id : x.labels()) out.push_back(id);
  return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

AngleTemplate angle_from_json(const Json& j, int d, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a list of objects");
  AngleTemplate a{d, {}};
  for (std::size_t i = 0; i < j.size(); ++i) {
    a.objects.push_back(object_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return a;
}

CategorySkeleton skeleton_from_json(const Json& j) {
  CategorySkeleton s;
  s.d = as_int(field(j, "d", "skeleton"), "skeleton.d");
  if (s.d < 1) bad("skeleton.d", "d must be positive");
  const auto& ids = field(j, "indecs", "skeleton");
  if (!ids.is_array()) bad("skeleton.indecs", "expected a list");
  for (std::size_t i = 0; i < ids.size(); ++i) {
    s.indecs.push_back(as_string(ids[i], "skeleton.indecs[" + std::to_string(i) + "]"));
  }
  const auto& sus = field(j, "suspension", "skeleton");
  if (!sus.is_object()) bad("skeleton.suspension", "expected an object");
  for (auto it = sus.begin(); it != sus.end(); ++it) {
    s.suspension.perm[it.key()] = as_string(it.value(), "skeleton.suspension." + it.key());
  }
  const auto& angles = field(j, "angles", "skeleton");
  if (!angles.is_array()) bad("skeleton.angles", "expected a list");
  for (std::size_t i = 0; i < angles.size(); ++i) {
    s.angles.push_back(angle_from_json(angles[i], s.d, "skeleton.angles[" + std::to_string(i) + "]"));
  }
  return s;
}

Json to_json(const AngleTemplate& a) {
  Json out = Json::array();
  for (const auto& x : a.objects) out.push_back(object_to_json(x));
  return out;
}

Json to_json(const CategorySkeleton& s) {
  Json out;
  out["d"] = s.d;
  out["indecs"] = s.indecs;
  Json sus = Json::object();
  for (const auto& id : s.indecs) {
    auto it = s.suspension.perm.find(id);
    if (it != s.suspension.perm.end()) sus[id] = it->second;
  }
  out["suspension"] = sus;
  Json angles = Json::array();
  for (const auto& a : s.angles) angles.push_back(to_json(a));
  out["angles"] = angles;
  return out;
}

RankOnObjects rank_from_json(const Json& j) {
  const auto& values = field(j, "values", "rank");
  if (!values.is_object()) bad("rank.values", "expected an object");
  std::map<IndecId, Rational> out;
  for (auto it = values.begin(); it != values.end(); ++it) {
    out[it.key()] = as_rational(it.value(), "rank.values." + it.key());
  }
  try {
    return RankOnObjects(std::move(out));
  } catch (const InputError& e) {
    bad("rank.values", e.what());
  }
}

Json to_json(const RankOnObjects& r) {
  Json values = Json::object();
  for (const auto& [id, v] : r.values()) values[id] = format_rational(v);
  Json out;
  out["values"] = values;
  return out;
}

NakayamaAlgebra algebra_from_json(const Json& j) {
  NakayamaAlgebra a;
  a.n = as_int(field(j, "n", "algebra"), "algebra.n");
  a.ell = as_int(field(j, "ell", "algebra"), "algebra.ell");
  const auto shape = j.contains("shape") ? as_string(j["shape"], "algebra.shape") : std::string("cyclic");
  if (shape == "cyclic") a.shape = Shape::Cyclic;
  else if (shape == "linear") a.shape = Shape::Linear;
  else bad("algebra.shape", "expected \"cyclic\" or \"linear\"");
  try {
    a.validate();
  } catch (const InputError& e) {
    bad("algebra", e.what());
  }
  return a;
}

Json to_json(const NakayamaAlgebra& a) {
  Json out;
  out["n"] = a.n;
  out["ell"] = a.ell;
  out["shape"] = to_string(a.shape);
  return out;
}

NakayamaModule module_from_json(const Json& j) {
  if (!j.is_array()) bad("module", "expected a list of [top, length] pairs");
  NakayamaModule m;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "module[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) bad(where, "expected [top, length]");
    m.add({as_int(j[i][0], where + "[0]"), as_int(j[i][1], where + "[1]")});
  }
  return m;
}

Json to_json(const NakayamaModule& m) {
  Json out = Json::array();
  for (const auto& x : m.summands) out.push_back(Json::array({x.top, x.length}));
  return out;
}

namespace {

std::vector<int> vertices_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a list of projectives");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    if (j[i].is_string()) {
      try {
        out.push_back(parse_projective_label(j[i].get<std::string>()));
      } catch (const InputError& e) {
        bad(w, e.what());
      }
    } else {
      out.push_back(as_int(j[i], w));
    }
  }
  return out;
}

PathTerm term_from_json(const Json& j, const std::string& where) {
  PathTerm t;
  t.length = as_int(field(j, "path_len", where), where + ".path_len");
  t.coeff = j.contains("coeff") ? as_rational(j["coeff"], where + ".coeff") : Rational(1);
  return t;
}

}  // namespace

ProjMorphism morphism_from_json(const Json& j) {
  const auto rows = vertices_from_json(field(j, "rows", "morphism"), "morphism.rows");
  const auto cols = vertices_from_json(field(j, "cols", "morphism"), "morphism.cols");
  auto f = ProjMorphism::zero(cols, rows);
  const auto& entries = field(j, "entries", "morphism");
  if (!entries.is_array() || entries.size() != rows.size()) {
    bad("morphism.entries", "expected " + std::to_string(rows.size()) + " rows");
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string wr = "morphism.entries[" + std::to_string(r) + "]";
    if (!entries[r].is_array() || entries[r].size() != cols.size()) {
      bad(wr, "expected " + std::to_string(cols.size()) + " entries");
    }
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::string w = wr + "[" + std::to_string(c) + "]";
      const auto& cell = entries[r][c];
      if (cell.is_null()) continue;
      if (cell.is_object()) {
        f.entries[r][c].push_back(term_from_json(cell, w));
      } else if (cell.is_array()) {
        for (std::size_t t = 0; t < cell.size(); ++t) {
          f.entries[r][c].push_back(term_from_json(cell[t], w + "[" + std::to_string(t) + "]"));
        }
      } else {
        bad(w, "expected a path term, a list of terms or null");
      }
    }
  }
  return f;
}

Json to_json(const ProjMorphism& f) {
  Json out;
  out["rows"] = f.target;
  out["cols"] = f.source;
  Json entries = Json::array();
  for (const auto& row : f.entries) {
    Json r = Json::array();
    for (const auto& cell : row) {
      Json c = Json::array();
      for (const auto& t : cell) c.push_back({{"path_len", t.length}, {"coeff", format_rational(t.coeff)}});
      r.push_back(c);
    }
    entries.push_back(r);
  }
  out["entries"] = entries;
  return out;
}

AdditiveFn additive_from_json(const Json& j, int n) {
  const auto& values = field(j, "simple_values", "additive");
  if (!values.is_object()) bad("additive.simple_values", "expected an object");
  std::vector<Rational> out(static_cast<std::size_t>(n), 0);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (auto it = values.begin(); it != values.end(); ++it) {
    const std::string where = "additive.simple_values." + it.key();
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(it.key(), &used);
      if (used != it.key().size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      bad(where, "vertex keys must be integers");
    }
    if (v < 1 || v > n) bad(where, "vertex outside 1.." + std::to_string(n));
    out[static_cast<std::size_t>(v - 1)] = as_rational(it.value(), where);
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  for (int v = 1; v <= n; ++v) {
    if (!seen[static_cast<std::size_t>(v - 1)]) bad("additive.simple_values", "no value for vertex " + std::to_string(v));
  }
  try {
    return AdditiveFn(std::move(out));
  } catch (const InputError& e) {
    bad("additive", e.what());
  }
}

Json to_json(const AdditiveFn& a) {
  Json values = Json::object();
  for (int v = 1; v <= a.size(); ++v) values[std::to_string(v)] = format_rational(a.at(v));
  Json out;
  out["simple_values"] = values;
  return out;
}

Json to_json(const Report& r) {
  Json out;
  out["status"] = r.passed() ? "pass" : "fail";
  Json sections = Json::array();
  for (const auto& s : r.sections) {
    Json js;
    js["name"] = s.name;
    js["status"] = to_string(s.status);
    js["checked"] = s.checked;
    Json findings = Json::array();
    for (const auto& f : s.findings) findings.push_back({{"location", f.location}, {"message", f.message}});
    js["findings"] = findings;
    sections.push_back(js);
  }
  out["sections"] = sections;
  return out;
}

Json to_json(const GalleryEntry& e) {
  Json out;
  out["name"] = e.name;
  out["skeleton"] = to_json(e.skeleton);
  Json ranks = Json::object();
  for (const auto& [name, r] : e.reference_ranks) ranks[name] = to_json(r);
  out["ranks"] = ranks;
  out["notes"] = e.notes;
  if (e.engine) {
    Json eng = to_json(e.engine->algebra);
    eng["d"] = e.engine->twist.d;
    eng["sigma"] = e.engine->twist.sigma;
    out["engine"] = eng;
  }
  return out;
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    if (abs(x) < Integer(1) << 62) out.push_back(x.convert_to<long long>());
    else out.push_back(x.str());
  }
  return out;
}

Json to_json(const ProjAngle& x) {
  Json out;
  out["d"] = x.d;
  out["objects"] = x.objects;
  Json maps = Json::array();
  for (const auto& f : x.maps) maps.push_back(to_json(f));
  out["maps"] = maps;
  return out;
}

bool is_gallery_entry(const Json& j) { return j.is_object() && j.contains("skeleton"); }

}  // namespace rankfn
