#include "cmpgeo/cmpgeo.h"

#include <cstring>
#include <new>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fixtures.hpp"
#include "reports.hpp"

struct cmpgeo_input {
  cmpgeo::Workspace ws;
};

namespace {

thread_local std::string last_error;

cmpgeo::RunOptions run_options(const cmpgeo_options* o) {
  cmpgeo::RunOptions r;
  if (!o) return r;
  r.p = o->characteristic;
  r.max_len = o->max_len;
  r.orbit_bound = o->orbit_bound;
  r.seed = o->seed;
  r.jobs = o->jobs;
  cmpgeo::require(r.max_len > 0, cmpgeo::ErrorKind::ParseError, "max_len must be positive");
  cmpgeo::require(r.orbit_bound >= 0, cmpgeo::ErrorKind::ParseError, "orbit bound must be nonnegative");
  cmpgeo::require(r.jobs > 0, cmpgeo::ErrorKind::ParseError, "jobs must be positive");
  return r;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::set<std::string> string_set(const char* const* xs, size_t n) {
  std::set<std::string> out;
  for (size_t i = 0; i < n; ++i) {
    cmpgeo::require(xs && xs[i], cmpgeo::ErrorKind::ParseError, "null string in list");
    out.insert(xs[i]);
  }
  return out;
}

cmpgeo::Surface surface_of(const char* name, int n) {
  cmpgeo::require(name != nullptr, cmpgeo::ErrorKind::ParseError, "missing surface name");
  const std::string s = name;
  cmpgeo::Surface S;
  if (s == "punctured-disc") S.kind = cmpgeo::SurfaceKind::PuncturedDisc;
  else if (s == "polygon") S.kind = cmpgeo::SurfaceKind::Polygon;
  else cmpgeo::fail(cmpgeo::ErrorKind::ParseError, "surface must be punctured-disc or polygon, got '" + s + "'");
  const int lo = S.punctured() ? 3 : 4;
  cmpgeo::require(n >= lo && n <= 16, cmpgeo::ErrorKind::ParseError,
                  "n must lie in " + std::to_string(lo) + "..16 for the " + s);
  S.n = n;
  return S;
}

// Runs f, translating exceptions into status codes.
template <class F>
cmpgeo_status guard(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const cmpgeo::Error& e) {
    last_error = e.what();
    return static_cast<cmpgeo_status>(cmpgeo::error_class(e.kind()));
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CMPGEO_INTERNAL;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return CMPGEO_INTERNAL;
  }
}

cmpgeo_status emit(const cmpgeo::json& j, bool ok, char** out) {
  *out = dup(j.dump(2) + "\n");
  return ok ? CMPGEO_OK : CMPGEO_VERIFICATION_FAILED;
}

template <class F>
cmpgeo_status report(cmpgeo_input* in, char** out, F&& f) {
  if (out) *out = nullptr;
  return guard([&] {
    cmpgeo::require(in != nullptr && out != nullptr, cmpgeo::ErrorKind::ParseError, "null argument");
    return f(in->ws);
  });
}

}  // namespace

extern "C" {

void cmpgeo_options_default(cmpgeo_options* opt) {
  if (!opt) return;
  cmpgeo::RunOptions r;
  opt->characteristic = r.p;
  opt->max_len = r.max_len;
  opt->orbit_bound = r.orbit_bound;
  opt->seed = r.seed;
  opt->jobs = r.jobs;
}

cmpgeo_status cmpgeo_input_parse(const char* text, const cmpgeo_options* opt, cmpgeo_input** out) {
  if (out) *out = nullptr;
  return guard([&] {
    cmpgeo::require(text && out, cmpgeo::ErrorKind::ParseError, "null argument");
    cmpgeo::RunOptions r = run_options(opt);
    *out = new cmpgeo_input{cmpgeo::Workspace(cmpgeo::parse_input(text, r.p), r)};
    return CMPGEO_OK;
  });
}

cmpgeo_status cmpgeo_input_fixture(const char* name, const cmpgeo_options* opt, cmpgeo_input** out) {
  if (out) *out = nullptr;
  return guard([&] {
    cmpgeo::require(name && out, cmpgeo::ErrorKind::ParseError, "null argument");
    cmpgeo::RunOptions r = run_options(opt);
    *out = new cmpgeo_input{cmpgeo::Workspace(cmpgeo::fixture(name, r.p), r)};
    return CMPGEO_OK;
  });
}

void cmpgeo_input_free(cmpgeo_input* in) { delete in; }

int cmpgeo_input_is_triangulation(const cmpgeo_input* in) { return in && in->ws.is_triangulation() ? 1 : 0; }

cmpgeo_status cmpgeo_input_algebra_dim(cmpgeo_input* in, long* dim) {
  return guard([&] {
    cmpgeo::require(in && dim, cmpgeo::ErrorKind::ParseError, "null argument");
    *dim = static_cast<long>(in->ws.algebra().dim());
    return CMPGEO_OK;
  });
}

cmpgeo_status cmpgeo_build(cmpgeo_input* in, char** out) {
  return report(in, out, [&](cmpgeo::Workspace& W) { return emit(cmpgeo::build_report(W), true, out); });
}

cmpgeo_status cmpgeo_cmp(cmpgeo_input* in, const char* method, char** out) {
  return report(in, out, [&](cmpgeo::Workspace& W) {
    cmpgeo::require(method != nullptr, cmpgeo::ErrorKind::ParseError, "missing method");
    cmpgeo::json j = cmpgeo::cmp_report(W, method);
    return emit(j, j["verdict"] != "MISMATCH", out);
  });
}

cmpgeo_status cmpgeo_itdim(cmpgeo_input* in, int assume_complete, const char* const* modules, size_t n_modules,
                           char** out) {
  return report(in, out, [&](cmpgeo::Workspace& W) {
    std::vector<std::string> mods;
    for (const auto& m : string_set(modules, n_modules)) mods.push_back(m);
    return emit(cmpgeo::itdim_report(W, assume_complete != 0, mods), true, out);
  });
}

cmpgeo_status cmpgeo_arquiver(cmpgeo_input* in, const char* format, char** out) {
  return report(in, out, [&](cmpgeo::Workspace& W) {
    cmpgeo::require(format != nullptr, cmpgeo::ErrorKind::ParseError, "missing format");
    *out = dup(cmpgeo::arquiver_output(W, format));
    return CMPGEO_OK;
  });
}

cmpgeo_status cmpgeo_verify_input(cmpgeo_input* in, const char* const* checks, size_t n_checks, char** out) {
  return report(in, out, [&](cmpgeo::Workspace& W) {
    cmpgeo::json j = cmpgeo::verify_report(W, string_set(checks, n_checks));
    return emit(j, j["ok"].get<bool>(), out);
  });
}

cmpgeo_status cmpgeo_verify_sweep(const char* surface, int n, const char* const* checks, size_t n_checks,
                                  const cmpgeo_options* opt, char** out) {
  if (out) *out = nullptr;
  return guard([&] {
    cmpgeo::require(out != nullptr, cmpgeo::ErrorKind::ParseError, "null argument");
    const cmpgeo::Surface S = surface_of(surface, n);
    const cmpgeo::RunOptions r = run_options(opt);
    cmpgeo::VerifyOptions v;
    v.checks = string_set(checks, n_checks);
    v.orbit_bound = r.orbit_bound;
    cmpgeo::validate_checks(v.checks);
    cmpgeo::reseed(r.seed);
    const cmpgeo::SweepReport R = cmpgeo::verify_sweep(S, v, r.jobs);
    return emit(cmpgeo::sweep_json(R), R.ok(), out);
  });
}

cmpgeo_status cmpgeo_enumerate(const char* surface, int n, char** out) {
  if (out) *out = nullptr;
  return guard([&] {
    cmpgeo::require(out != nullptr, cmpgeo::ErrorKind::ParseError, "null argument");
    return emit(cmpgeo::enumerate_report(surface_of(surface, n)), true, out);
  });
}

cmpgeo_status cmpgeo_fixture_list(char** out) {
  if (out) *out = nullptr;
  return guard([&] {
    cmpgeo::require(out != nullptr, cmpgeo::ErrorKind::ParseError, "null argument");
    cmpgeo::json j = cmpgeo::json::array();
    for (const auto& name : cmpgeo::fixture_names())
      j.push_back({{"name", name}, {"description", cmpgeo::fixture_description(name)}});
    return emit(j, true, out);
  });
}

cmpgeo_status cmpgeo_check_list(char** out) {
  if (out) *out = nullptr;
  return guard([&] {
    cmpgeo::require(out != nullptr, cmpgeo::ErrorKind::ParseError, "null argument");
    return emit(cmpgeo::json(cmpgeo::check_names()), true, out);
  });
}

void cmpgeo_string_free(char* s) { std::free(s); }

const char* cmpgeo_last_error(void) { return last_error.c_str(); }

const char* cmpgeo_version(void) { return "0.1.0"; }

}  // extern "C"
