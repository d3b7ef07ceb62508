#include "rankfn/cli.hpp"
#include "rankfn/errors.hpp"
#include "rankfn/gallery.hpp"
#include "rankfn/json_io.hpp"

#include <doctest.h>

#include <sstream>

using namespace rankfn;

namespace {

struct Result {
  int code = 0;
  Json json;
  std::string err;
};

Result call(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Result r;
  r.code = run(args, in, out, err);
  r.err = err.str();
  if (!out.str().empty() && (out.str()[0] == '{' || out.str()[0] == '[')) r.json = Json::parse(out.str());
  return r;
}

std::string emit(const std::string& name) {
  std::istringstream in;
  std::ostringstream out, err;
  REQUIRE(run({"examples", "emit", name}, in, out, err) == 0);
  return out.str();
}

const char* kC3 = R"({"n": 3, "ell": 2, "shape": "cyclic"})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("json input errors") {
  CHECK_THROWS_WITH_AS(parse_json("{\"d\": 1,", "x.json"), doctest::Contains("x.json"), InputError);
  CHECK_THROWS_AS(skeleton_from_json(Json::parse(R"({"d": 1})")), InputError);
  CHECK_THROWS_AS(rank_from_json(Json::parse(R"({"values": {"a": 0.5}})")), InputError);
  CHECK_THROWS_AS(rank_from_json(Json::parse(R"({"values": {"a": "-1/2"}})")), InputError);
  CHECK_THROWS_AS(module_from_json(Json::parse("[[1]]")), InputError);
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"n": 3, "ell": 2, "shape": "round"})")), InputError);
}

TEST_CASE("json round trips") {
  for (const auto& name : gallery_names()) {
    const auto e = build_entry(name);
    const Json j = to_json(e.skeleton);
    const auto back = skeleton_from_json(Json::parse(j.dump()));
    CHECK(to_json(back) == j);
    for (const auto& [rname, r] : e.reference_ranks) CHECK(rank_from_json(to_json(r)) == r);
  }
  const auto f = morphism_from_json(Json::parse(
      R"({"rows": ["P2", 3], "cols": [1], "entries": [[{"path_len": 1}], [[{"path_len": 2, "coeff": "-3/2"}]]]})"));
  CHECK(f.target == std::vector<int>{2, 3});
  CHECK(f.entries[1][0][0].coeff == Rational(-3, 2));
  CHECK(morphism_from_json(to_json(f)).entries == f.entries);
  const AdditiveFn alpha({1, Rational(1, 3), 0});
  CHECK(additive_from_json(to_json(alpha), 3) == alpha);
}

TEST_CASE("validate and check-ro through stdin") {
  const std::string d3 = emit("d3-custom");
  auto r = call({"validate", "-"}, d3);
  CHECK(r.code == 0);
  CHECK(r.json["status"] == "pass");
  r = call({"check-ro", "-"}, d3);
  CHECK(r.code == 0);
  REQUIRE(r.json["defects"].size() >= 5);
  CHECK(r.json["defects"][0]["defect"] == "4/1");
  CHECK(r.json["integral"] == true);

  for (const auto& name : gallery_names()) {
    CAPTURE(name);
    CHECK(call({"validate", emit(name)}).code == 0);
  }
}

TEST_CASE("failing checks exit 1") {
  const Json e = Json::parse(emit("oa-d3"));
  Json rank = e["ranks"]["all_ones"];
  rank["values"][e["skeleton"]["indecs"][0].get<std::string>()] = "2/1";
  const auto r = call({"check-ro", e["skeleton"].dump(), rank.dump()});
  CHECK(r.code == 1);
  CHECK(r.json["status"] == "fail");

  Json bad = e["skeleton"];
  bad["angles"][0].push_back(Json::array());
  CHECK(call({"validate", bad.dump()}).code == 1);
  CHECK(call({"check-ro", bad.dump(), e["ranks"]["all_ones"].dump()}).code == 2);
}

TEST_CASE("psi, phi and check-rm") {
  const std::string and2 = emit("and2-d3");
  auto r = call({"psi", and2, "--angle", "0"});
  CHECK(r.code == 0);
  CHECK(r.json["value"] == "1/1");
  r = call({"phi", and2, "--object", "21,1"});
  CHECK(r.code == 0);
  CHECK(r.json["value"] == "3/1");
  CHECK(call({"check-rm", and2}).code == 0);
  CHECK(call({"psi", and2, "--angle", "999"}).code == 2);
}

TEST_CASE("parity refusals") {
  const std::string even = emit("and2-d2");
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"psi", even, "--angle", "0"},
           {"check-rm", even},
           {"psi-mod", kC3, R"({"kind": "varphi", "simple_values": {"1": "1", "2": "1", "3": "1"}})", "[[1, 1]]", "--d", "2"},
           {"cone", "hilbert", even, "--lattice", "morphisms"}}) {
    const auto r = call(args);
    CHECK(r.code == 2);
    CHECK(r.json["kind"] == "parity");
  }
  const auto r = call({"phi", even, "--object", "21"});
  CHECK(r.code == 0);
  CHECK(r.json["value"] == "2/1");
}

TEST_CASE("engine commands") {
  auto r = call({"varphi", kC3, R"({"simple_values": {"1": "1", "2": "1", "3": "1"}})",
                 R"({"rows": [2], "cols": [1], "entries": [[{"path_len": 1}]]})"});
  CHECK(r.code == 0);
  CHECK(r.json["value"] == "1/1");
  r = call({"psi-mod", kC3, R"({"kind": "psi", "values": {"P1": "2", "P2": "2", "P3": "2"}})", "[[2, 1]]", "--d", "3"});
  CHECK(r.code == 0);
  CHECK(r.json["value"] == "1/1");
  r = call({"decompose", kC3, R"({"simple_values": {"1": "2", "2": "2", "3": "2"}})", "--d", "3"});
  CHECK(r.code == 0);
  CHECK(r.json["terms"][0]["multiplicity"] == 2);
  CHECK(call({"decompose", kC3, R"({"simple_values": {"1": "2", "2": "1", "3": "2"}})", "--d", "3"}).code == 2);
  r = call({"schanuel", kC3, "[[1, 1]]", "[[1, 1]]", "--d", "3", "--pad-b", "2:1"});
  CHECK(r.code == 0);
  CHECK(r.json["balanced"] == true);
  CHECK(call({"schanuel", kC3, "[[1, 1]]", "[[1, 1]]", "--d", "3", "--pad-b", "2"}).code == 2);
  CHECK(call({"varphi", R"({"n": 3, "ell": 3})", "{}", "{}"}).code == 2);
}

TEST_CASE("cone commands") {
  auto r = call({"cone", "rays", emit("oa-d3")});
  CHECK(r.code == 0);
  REQUIRE(r.json["rays"].size() == 1);
  for (const auto& x : r.json["rays"][0]) CHECK(x == 1);
  r = call({"cone", "hilbert", emit("nakayama-n3-l2-d1"), "--lattice", "morphisms"});
  CHECK(r.code == 0);
  CHECK(r.json["generators"].size() == 3);
  r = call({"cone", "decompose", emit("nakayama-n3-l2-d1"), "--lattice", "morphisms"});
  CHECK(r.code == 0);
  CHECK(r.json["unique"] == true);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"validate", "/no/such/file.json"}).code == 2);
  CHECK(call({"validate", "{not json"}).code == 2);
  CHECK(call({"examples", "emit", "nope"}).code == 2);
  const auto r = call({"examples", "list"});
  CHECK(r.code == 0);
  CHECK(r.json["examples"].size() == gallery_names().size());
}

TEST_CASE("output is deterministic") {
  const std::string a = emit("nakayama-n4-l2-d3");
  CHECK(a == emit("nakayama-n4-l2-d3"));
  std::istringstream in1(a), in2(a);
  std::ostringstream o1, o2, e1, e2;
  run({"cone", "hilbert", "-"}, in1, o1, e1);
  run({"cone", "hilbert", "-"}, in2, o2, e2);
  CHECK(o1.str() == o2.str());
}

}  // TEST_SUITE
