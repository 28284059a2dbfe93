#include "doctest.h"
#include "fixtures.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "iso.hpp"
#include "reports.hpp"

using namespace cmpgeo;

namespace {

const char* kLoop = R"js({
  "name": "loop",
  "vertices": ["1", "2", "3"],
  "arrows": [{"id": "e", "from": "1", "to": "1"},
             {"id": "a", "from": "1", "to": "2"},
             {"id": "b", "from": "2", "to": "3"}],
  "relations": [[{"path": ["e", "e"]}], [{"path": ["e", "a"]}], [{"path": ["a", "b"]}]],
  "modules": ["I(1)+S(1)"]
})js";

ErrorKind kind_of(const std::string& text) {
  try {
    parse_input(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for " << text);
  return ErrorKind::InvariantViolated;
}

std::string message_of(const std::string& text) {
  try {
    parse_input(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("presentation documents round trip") {
  Input in = parse_input(kLoop);
  REQUIRE(in.presentation);
  CHECK(in.name == "loop");
  CHECK(in.modules.size() == 1);
  Algebra A = Algebra::create(*in.presentation, 64);
  CHECK(A.dim() == 6);
  json back = to_json(*in.presentation);
  Presentation again = presentation_from_json(back);
  CHECK(Algebra::create(again, 64).dim() == 6);
}

TEST_CASE("triangulation documents accept objects and short names") {
  Input a = parse_input(R"({"surface": "punctured-disc", "n": 4, "arcs": ["r0", "r1", "r2", "r3"]})");
  Input b = parse_input(to_json(*a.triangulation).dump());
  REQUIRE(a.triangulation);
  REQUIRE(b.triangulation);
  CHECK(a.triangulation->arcs() == b.triangulation->arcs());
  Input c = parse_input(R"({"surface": "punctured-disc", "n": 3, "arcs": ["r0", "r0*", "g1,0"]})");
  CHECK(c.triangulation->contains(Arc::radial(0, Tag::Notched)));
  Input d = parse_input(R"({"surface": "polygon", "n": 5, "arcs": ["c0,2", "c0,3"]})");
  CHECK_FALSE(d.triangulation->surface().punctured());
}

TEST_CASE("diagnostics name the place of the error") {
  CHECK(message_of("{\"surface\": \"polygon\",\n \"n\": 5,\n \"arcs\": [").find("line 3") != std::string::npos);
  CHECK(message_of(R"({"surface": "punctured-disc", "n": 4, "arcs": ["r0", "r1", "g0,9", "r3"]})")
            .find("arcs[2]") != std::string::npos);
  CHECK(message_of(R"({"surface": "punctured-disc", "n": 4, "arcs": [{"type": "radial", "at": 0, "tag": "x"}]})")
            .find("arcs[0].tag") != std::string::npos);
  CHECK(message_of(R"({"vertices": ["1"], "arrows": [{"id": "a", "from": "1", "to": "2"}]})").find("arrows[0].to") !=
        std::string::npos);
  CHECK(kind_of(R"({"n": 3})") == ErrorKind::ParseError);
  CHECK(kind_of(R"({"surface": "torus", "n": 3, "arcs": []})") == ErrorKind::ParseError);
  CHECK(kind_of(R"({"surface": "punctured-disc", "n": 4, "arcs": ["r0", "r1", "g0,2"]})") ==
        ErrorKind::NotATriangulation);
  CHECK(kind_of(R"({"surface": "punctured-disc", "n": 4, "arcs": ["r0", "r1", "r2", "g0,2"]})") ==
        ErrorKind::NotATriangulation);
}

TEST_CASE("module specs") {
  Input in = parse_input(kLoop);
  Algebra A = Algebra::create(*in.presentation, 64);
  Rep M = build_module(A, in.modules[0]);
  CHECK(M.dims() == std::vector<int>{3, 0, 0});

  ModuleSpec explicit_spec{"", {1, 1, 0}, {{"a", {{1}}}}};
  Rep X = build_module(A, explicit_spec);
  CHECK(is_isomorphic(X, projective(A, 1)) == false);
  CHECK(X.total_dim() == 2);
  json j = rep_to_json(X);
  CHECK(j["arrows"]["a"] == json::array({json::array({1})}));

  // e sends the first basis vector to the second, which a does not kill
  ModuleSpec bad{"", {2, 1, 0}, {{"e", {{0, 0}, {1, 0}}}, {"a", {{0, 1}}}}};
  CHECK_THROWS_AS(build_module(A, bad), Error);
  CHECK_THROWS_AS(build_module(A, ModuleSpec{"Q(1)", {}, {}}), Error);
  CHECK_THROWS_AS(build_module(A, ModuleSpec{"M(r0)", {}, {}}), Error);
}

TEST_CASE("fixtures build") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    Workspace W(fixture(name), RunOptions{});
    CHECK(W.algebra().dim() > 0);
    CHECK_FALSE(fixture_description(name).empty());
  }
  CHECK_THROWS_AS(fixture("nope"), Error);
}

TEST_CASE("reports on fixtures") {
  {
    Workspace W(fixture("punctured-square"), RunOptions{});
    CHECK(build_report(W)["summary"] == "dim 12, selfinjective, Gorenstein d=0");
    json c = cmp_report(W, "both");
    CHECK(c["verdict"] == "MATCH");
    CHECK(c["catalog"].size() == 8);
    json it = itdim_report(W, false, {});
    CHECK(it["phidim"] == 0);
    CHECK(it["psidim"] == 0);
  }
  {
    Workspace W(fixture("loop"), RunOptions{});
    json b = build_report(W);
    CHECK(b["table"][0]["pd_I"] == 2);
    CHECK(b["gorenstein"]["verdict"] == "NotGorenstein");
    json it = itdim_report(W, false, {});
    CHECK(it["per_module"][0]["phi"] == 2);
    CHECK(it["per_module"][0]["psi"] == 3);
    CHECK(it["phidim"].is_null());
    json v = verify_report(W, {"characterization"});
    CHECK(v["skipped"]["characterization"].get<std::string>().rfind("NotGorenstein", 0) == 0);
    CHECK_THROWS_AS(arquiver_output(W, "dot"), Error);
  }
  {
    Workspace W(fixture("tail-cycle"), RunOptions{});
    json b = build_report(W);
    CHECK(b["table"][1]["pd_I"] == "inf");
    json it = itdim_report(W, false, {});
    CHECK(it["phidim"] == 1);
    CHECK(it["psidim"] == 1);
  }
  {
    Workspace W(fixture("type-ii"), RunOptions{});
    json c = cmp_report(W, "both");
    CHECK(c["verdict"] == "MATCH");
    CHECK(c["catalog"].empty());
  }
  {
    Workspace W(fixture("hexagon-triangle"), RunOptions{});
    json c = cmp_report(W, "both");
    CHECK(c["catalog"].size() == 3);
    CHECK(c.contains("note"));
  }
}

TEST_CASE("incomplete module lists are refused") {
  Input in = parse_input(kLoop);
  in.modules.clear();
  Workspace W(in, RunOptions{});
  try {
    itdim_report(W, false, {});
    FAIL("expected IncompleteIndecomposableList");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompleteIndecomposableList);
    CHECK(error_class(e.kind()) == ErrorClass::Limitation);
  }
}

TEST_CASE("sweep report lists every syzygy case") {
  VerifyOptions opt;
  opt.checks = {"omega-formula"};
  json j = sweep_json(verify_sweep(Surface{SurfaceKind::PuncturedDisc, 3}, opt, 1));
  CHECK(j["omega_cases"].size() == 12);
  CHECK(j["ok"] == true);
  json e = enumerate_report(Surface{SurfaceKind::Polygon, 6});
  CHECK(e["count"] == 14);
}
