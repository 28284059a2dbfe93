#include <cmpgeo/cmpgeo.h>

#include <string>
#include <thread>

#include "doctest.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct Owned {
  char* s = nullptr;
  ~Owned() { cmpgeo_string_free(s); }
  json parse() const { return json::parse(s); }
};

cmpgeo_input* fixture(const char* name) {
  cmpgeo_options o;
  cmpgeo_options_default(&o);
  cmpgeo_input* in = nullptr;
  REQUIRE(cmpgeo_input_fixture(name, &o, &in) == CMPGEO_OK);
  return in;
}

}  // namespace

TEST_CASE("options and fixtures") {
  cmpgeo_options o;
  cmpgeo_options_default(&o);
  CHECK(o.characteristic == 32003);
  CHECK(o.jobs == 1);
  Owned list;
  REQUIRE(cmpgeo_fixture_list(&list.s) == CMPGEO_OK);
  CHECK(list.parse().size() == 7);
  Owned checks;
  REQUIRE(cmpgeo_check_list(&checks.s) == CMPGEO_OK);
  CHECK(checks.parse().size() == 9);
  CHECK(std::string(cmpgeo_version()).size() > 0);
}

TEST_CASE("status codes follow the error class") {
  cmpgeo_input* in = nullptr;
  CHECK(cmpgeo_input_parse("{\"surface\": ", nullptr, &in) == CMPGEO_INPUT_ERROR);
  CHECK(in == nullptr);
  CHECK(std::string(cmpgeo_last_error()).find("ParseError") == 0);
  CHECK(cmpgeo_input_fixture("nope", nullptr, &in) == CMPGEO_INPUT_ERROR);

  cmpgeo_options o;
  cmpgeo_options_default(&o);
  o.characteristic = 9;
  CHECK(cmpgeo_input_fixture("loop", &o, &in) == CMPGEO_INPUT_ERROR);
  CHECK(std::string(cmpgeo_last_error()).find("InvalidCharacteristic") == 0);

  cmpgeo_input* loop = fixture("loop");
  Owned out;
  CHECK(cmpgeo_arquiver(loop, "dot", &out.s) == CMPGEO_LIMITATION);
  CHECK(out.s == nullptr);
  CHECK(cmpgeo_cmp(loop, "geometric", &out.s) == CMPGEO_LIMITATION);
  CHECK(cmpgeo_cmp(loop, "sideways", &out.s) == CMPGEO_INPUT_ERROR);
  CHECK(cmpgeo_build(nullptr, &out.s) == CMPGEO_INPUT_ERROR);
  cmpgeo_input_free(loop);

  CHECK(cmpgeo_enumerate("polygon", 3, &out.s) == CMPGEO_INPUT_ERROR);
  CHECK(cmpgeo_enumerate("annulus", 5, &out.s) == CMPGEO_INPUT_ERROR);
  const char* checks[] = {"no-such-check"};
  CHECK(cmpgeo_verify_sweep("punctured-disc", 3, checks, 1, nullptr, &out.s) == CMPGEO_INPUT_ERROR);
}

TEST_CASE("reports through the C interface") {
  cmpgeo_input* sq = fixture("punctured-square");
  CHECK(cmpgeo_input_is_triangulation(sq) == 1);
  long dim = 0;
  REQUIRE(cmpgeo_input_algebra_dim(sq, &dim) == CMPGEO_OK);
  CHECK(dim == 12);
  {
    Owned out;
    REQUIRE(cmpgeo_cmp(sq, "both", &out.s) == CMPGEO_OK);
    CHECK(out.parse()["verdict"] == "MATCH");
  }
  {
    Owned a, b;
    REQUIRE(cmpgeo_arquiver(sq, "dot", &a.s) == CMPGEO_OK);
    REQUIRE(cmpgeo_arquiver(sq, "dot", &b.s) == CMPGEO_OK);
    CHECK(std::string(a.s) == std::string(b.s));
    CHECK(std::string(a.s).rfind("digraph", 0) == 0);
  }
  {
    Owned out;
    const char* checks[] = {"omega-formula", "tau-tilde"};
    REQUIRE(cmpgeo_verify_input(sq, checks, 2, &out.s) == CMPGEO_OK);
    json j = out.parse();
    CHECK(j["checks"]["omega-formula"]["pass"] == 8);
    CHECK(j["checks"].size() == 2);
  }
  cmpgeo_input_free(sq);

  cmpgeo_input* loop = fixture("loop");
  CHECK(cmpgeo_input_is_triangulation(loop) == 0);
  {
    Owned out;
    const char* mods[] = {"I(1)+S(1)"};
    REQUIRE(cmpgeo_itdim(loop, 0, mods, 1, &out.s) == CMPGEO_OK);
    json j = out.parse();
    CHECK(j["per_module"][0]["phi"] == 2);
    CHECK(j["per_module"][0]["psi"] == 3);
  }
  cmpgeo_input_free(loop);
}

TEST_CASE("sweeps and enumeration") {
  Owned out;
  REQUIRE(cmpgeo_enumerate("punctured-disc", 4, &out.s) == CMPGEO_OK);
  CHECK(out.parse()["count"] == 50);
  Owned sweep;
  cmpgeo_options o;
  cmpgeo_options_default(&o);
  o.jobs = 2;
  REQUIRE(cmpgeo_verify_sweep("punctured-disc", 4, nullptr, 0, &o, &sweep.s) == CMPGEO_OK);
  json j = sweep.parse();
  CHECK(j["triangulations"] == 50);
  CHECK(j["ok"] == true);
}

TEST_CASE("last error is per thread") {
  cmpgeo_input* in = nullptr;
  CHECK(cmpgeo_input_fixture("nope", nullptr, &in) == CMPGEO_INPUT_ERROR);
  std::string other;
  std::thread t([&] { other = cmpgeo_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(cmpgeo_last_error()).empty());
}
