// Command-line front end over the C API.

#include <cmpgeo/cmpgeo.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;

namespace {

struct Config {
  std::string input;
  std::string fixture;
  std::string method = "both";
  std::string format;  // empty: per-command default
  unsigned characteristic = 0;
  int max_len = 0;
  int orbit_bound = -1;
  int sweep = 0;
  std::string surface = "punctured-disc";
  unsigned long long seed = 1;
  int jobs = 1;
  std::vector<std::string> checks;
  std::vector<std::string> modules;
  bool assume_complete = false;
  int n = 0;
};

int fail_with(cmpgeo_status s) {
  std::cerr << "error: " << cmpgeo_last_error() << "\n";
  return static_cast<int>(s);
}

cmpgeo_options options_of(const Config& c) {
  cmpgeo_options o;
  cmpgeo_options_default(&o);
  if (c.characteristic) o.characteristic = c.characteristic;
  if (c.max_len) o.max_len = c.max_len;
  if (c.orbit_bound >= 0) o.orbit_bound = c.orbit_bound;
  o.seed = c.seed;
  o.jobs = c.jobs;
  return o;
}

using InputPtr = std::unique_ptr<cmpgeo_input, decltype(&cmpgeo_input_free)>;

// Returns 0 and sets `in`, or an exit code.
int open_input(const Config& c, InputPtr& in) {
  if (c.input.empty() == c.fixture.empty()) {
    std::cerr << "error: give exactly one of --input and --fixture\n";
    return CMPGEO_INPUT_ERROR;
  }
  const cmpgeo_options o = options_of(c);
  cmpgeo_input* raw = nullptr;
  cmpgeo_status s;
  if (!c.fixture.empty()) {
    s = cmpgeo_input_fixture(c.fixture.c_str(), &o, &raw);
  } else {
    std::stringstream buf;
    if (c.input == "-") {
      buf << std::cin.rdbuf();
    } else {
      std::ifstream f(c.input);
      if (!f) {
        std::cerr << "error: cannot read " << c.input << "\n";
        return CMPGEO_INPUT_ERROR;
      }
      buf << f.rdbuf();
    }
    s = cmpgeo_input_parse(buf.str().c_str(), &o, &raw);
  }
  if (s != CMPGEO_OK) return fail_with(s);
  in.reset(raw);
  return 0;
}

std::vector<const char*> c_strings(const std::vector<std::string>& xs) {
  std::vector<const char*> out;
  for (const auto& x : xs) out.push_back(x.c_str());
  return out;
}

std::string compact(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

// Text renderers; each takes the JSON report.

void text_build(const json& r) {
  std::cout << r["input"].get<std::string>() << ": " << r["summary"].get<std::string>() << "\n";
  if (r.contains("structure")) {
    std::cout << "structure:";
    for (const auto& [k, v] : r["structure"].items()) std::cout << " " << k << "=" << compact(v);
    std::cout << "\n";
  }
  const json& a = r["algebra"];
  std::cout << "characteristic " << a["char"] << ", " << a["vertices"].size() << " vertices\n";
  std::cout << "arrows:\n";
  for (const auto& x : a["arrows"]) std::cout << "  " << x.get<std::string>() << "\n";
  std::cout << "relations:\n";
  for (const auto& x : a["relations"]) std::cout << "  " << x.get<std::string>() << "\n";
  std::printf("%-8s %6s %6s %6s %6s\n", "vertex", "dim P", "dim I", "pd I", "id P");
  for (const auto& row : r["table"])
    std::printf("%-8s %6s %6s %6s %6s\n", compact(row["vertex"]).c_str(), compact(row["dim_P"]).c_str(),
                compact(row["dim_I"]).c_str(), compact(row["pd_I"]).c_str(), compact(row["id_P"]).c_str());
  const json& g = r["gorenstein"];
  std::cout << "Gorenstein: " << g["verdict"].get<std::string>() << " (d_left " << compact(g["d_left"])
            << ", d_right " << compact(g["d_right"]) << ")\n";
  const json& s = r["selfinjective"];
  if (s["selfinjective"].get<bool>()) {
    std::cout << "selfinjective, Nakayama permutation";
    for (const auto& [k, v] : s["nakayama"].items()) std::cout << " " << k << "->" << compact(v);
    std::cout << ", order " << s["order"] << "\n";
  }
}

void text_cmp(const json& r) {
  if (r.contains("structure")) {
    std::cout << "structure:";
    for (const auto& [k, v] : r["structure"].items()) std::cout << " " << k << "=" << compact(v);
    std::cout << "\n";
  }
  if (r.contains("catalog")) {
    std::cout << "geometric catalog (" << r["catalog"].size() << " entries):\n";
    for (const auto& e : r["catalog"]) {
      std::cout << "  " << e["label"].get<std::string>() << "  " << e["arc"].get<std::string>() << "  "
                << e["dims"].dump();
      if (e.contains("omega")) std::cout << "  syzygy " << e["omega"].get<std::string>();
      std::cout << "\n";
    }
    const json& c = r["counts"];
    std::cout << "counts: odot " << c["odot"] << ", delta " << c["delta"] << ", club " << c["club"] << ", total "
              << c["total"] << " (expected " << c["expected"] << ")\n";
    if (r.contains("note")) std::cout << "note: " << r["note"].get<std::string>() << "\n";
  }
  if (r.contains("algebraic")) {
    std::cout << "algebraic CMP set (" << r["algebraic"].size() << " modules):\n";
    for (const auto& e : r["algebraic"]) {
      std::cout << "  ";
      if (e.contains("arc")) std::cout << e["arc"].get<std::string>() << "  ";
      std::cout << e["dims"].dump() << "\n";
    }
  }
  if (r.contains("missing_from_catalog")) {
    for (const auto& a : r["missing_from_catalog"]) std::cout << "missing from catalog: " << compact(a) << "\n";
    for (const auto& a : r["not_cmp"]) std::cout << "listed but not CMP: " << compact(a) << "\n";
  }
  std::cout << "verdict: " << r["verdict"].get<std::string>() << "\n";
}

void text_itdim(const json& r) {
  std::cout << "Gorenstein: " << r["gorenstein"]["verdict"].get<std::string>() << "\n";
  if (!r["phidim"].is_null()) {
    std::cout << "phidim " << r["phidim"] << ", psidim " << r["psidim"] << " over " << r["over"].get<std::string>()
              << " (" << r["modules_considered"] << " modules)";
    if (!r["exact"].get<bool>()) std::cout << ", lower bound only";
    std::cout << "\n";
  } else {
    std::cout << r["notice"].get<std::string>() << "\n";
  }
  for (const auto& m : r["per_module"])
    std::cout << "  " << m["module"].get<std::string>() << " " << m["dims"].dump() << ": phi " << m["phi"] << ", psi "
              << m["psi"] << "\n";
}

void text_verify(const json& r) {
  if (r.contains("triangulations")) {
    std::cout << r["surface"].get<std::string>() << " n=" << r["n"] << ": " << r["triangulations"]
              << " triangulations,";
    for (const auto& [k, v] : r["by_type"].items()) std::cout << " " << k << " " << v;
    std::cout << "; " << r["selfinjective_algebras"] << " selfinjective\n";
  }
  std::printf("%-18s %8s %8s\n", "check", "pass", "fail");
  for (const auto& [name, t] : r["checks"].items()) {
    std::printf("%-18s %8ld %8ld\n", name.c_str(), t["pass"].get<long>(), t["fail"].get<long>());
    if (t.contains("failures"))
      for (const auto& f : t["failures"]) std::cout << "    " << f.get<std::string>() << "\n";
  }
  if (r.contains("skipped"))
    for (const auto& [name, why] : r["skipped"].items())
      std::cout << name << ": skipped, " << why.get<std::string>() << "\n";
  if (r.contains("omega_cases")) {
    std::cout << "syzygy case hits:";
    for (const auto& [k, v] : r["omega_cases"].items()) std::cout << " " << k << "=" << v;
    std::cout << "\n";
  }
  if (r.contains("catalog_sizes") && !r["catalog_sizes"].empty()) {
    std::cout << "catalog entries:";
    for (const auto& [k, v] : r["catalog_sizes"].items()) std::cout << " " << k << "=" << v;
    std::cout << "\n";
  }
  if (r.contains("seconds")) std::printf("%.2f s on %d jobs\n", r["seconds"].get<double>(), r["jobs"].get<int>());
  std::cout << (r["ok"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

void text_enumerate(const json& r) {
  std::cout << r["count"] << " triangulations of the " << r["surface"].get<std::string>() << " with n=" << r["n"]
            << ":";
  for (const auto& [k, v] : r["by_type"].items()) std::cout << " " << k << " " << v;
  std::cout << "\n";
  for (const auto& t : r["triangulations"]) {
    std::cout << "  " << t["type"].get<std::string>() << " ";
    for (const auto& a : t["arcs"]) std::cout << " " << a.get<std::string>();
    std::cout << "\n";
  }
}

void text_fixtures(const json& r) {
  for (const auto& f : r) std::printf("%-18s %s\n", f["name"].get<std::string>().c_str(), f["description"].get<std::string>().c_str());
}

// Prints a report and returns the exit code. `out` is taken by reference so it
// is read after the call that fills it.
int show(cmpgeo_status s, char*& out, const std::string& format, void (*text)(const json&)) {
  if (!out) return fail_with(s);
  std::unique_ptr<char, decltype(&cmpgeo_string_free)> keep(out, cmpgeo_string_free);
  out = nullptr;
  if (format == "json") std::cout << keep.get();
  else text(json::parse(keep.get()));
  return static_cast<int>(s);
}

int run(const std::string& cmd, const Config& c) {
  const std::string fmt = c.format.empty() ? (cmd == "arquiver" ? "dot" : "text") : c.format;
  if (cmd != "arquiver" && fmt == "dot") {
    std::cerr << "error: dot output is only available for arquiver\n";
    return CMPGEO_INPUT_ERROR;
  }
  char* out = nullptr;

  if (cmd == "fixtures") return show(cmpgeo_fixture_list(&out), out, fmt, text_fixtures);
  if (cmd == "enumerate") return show(cmpgeo_enumerate(c.surface.c_str(), c.n, &out), out, fmt, text_enumerate);
  if (cmd == "verify" && c.sweep) {
    if (!c.input.empty() || !c.fixture.empty()) {
      std::cerr << "error: --sweep replaces --input and --fixture\n";
      return CMPGEO_INPUT_ERROR;
    }
    const cmpgeo_options o = options_of(c);
    auto checks = c_strings(c.checks);
    return show(cmpgeo_verify_sweep(c.surface.c_str(), c.sweep, checks.data(), checks.size(), &o, &out), out, fmt,
                text_verify);
  }

  InputPtr in(nullptr, cmpgeo_input_free);
  if (int code = open_input(c, in)) return code;
  if (cmd == "build") return show(cmpgeo_build(in.get(), &out), out, fmt, text_build);
  if (cmd == "cmp") return show(cmpgeo_cmp(in.get(), c.method.c_str(), &out), out, fmt, text_cmp);
  if (cmd == "itdim") {
    auto mods = c_strings(c.modules);
    return show(cmpgeo_itdim(in.get(), c.assume_complete, mods.data(), mods.size(), &out), out, fmt, text_itdim);
  }
  if (cmd == "verify") {
    auto checks = c_strings(c.checks);
    return show(cmpgeo_verify_input(in.get(), checks.data(), checks.size(), &out), out, fmt, text_verify);
  }
  // arquiver: text means the DOT graph
  const cmpgeo_status s = cmpgeo_arquiver(in.get(), fmt == "json" ? "json" : "dot", &out);
  if (!out) return fail_with(s);
  std::cout << out;
  if (fmt == "json") std::cout << "\n";
  cmpgeo_string_free(out);
  return static_cast<int>(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohen-Macaulay projective modules over punctured-disc and polygon algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(cmpgeo_version()));
  Config c;

  app.add_option("-i,--input", c.input, "JSON input file, - for stdin");
  app.add_option("--fixture", c.fixture, "builtin input (see the fixtures command)");
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--char", c.characteristic, "field characteristic (prime)");
  app.add_option("--max-len", c.max_len, "longest path kept when building the algebra")->check(CLI::PositiveNumber);
  app.add_option("--orbit-bound", c.orbit_bound, "bound on syzygy and translate orbits, 0 picks one")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", c.seed, "seed for randomized isomorphism tests");
  app.add_option("--jobs", c.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);

  app.add_subcommand("build", "algebra report: dimensions, quiver, relations, Gorenstein data");
  auto* cmp = app.add_subcommand("cmp", "catalog of indecomposable CMP modules");
  cmp->add_option("--method", c.method, "geometric, algebraic or both")
      ->check(CLI::IsMember({"geometric", "algebraic", "both"}));
  auto* itdim = app.add_subcommand("itdim", "Igusa-Todorov phi and psi dimensions");
  itdim->add_option("--module", c.modules, "module expression such as I(1)+S(1) or M(g0,3)");
  itdim->add_flag("--assume-complete", c.assume_complete, "treat the listed modules as every indecomposable");
  app.add_subcommand("arquiver", "stable AR quiver of the CMP category (dot or json)");
  auto* verify = app.add_subcommand("verify", "check invariants on an input or a sweep");
  verify->add_option("--sweep", c.sweep, "verify every triangulation with n marked points")->check(CLI::Range(3, 16));
  verify->add_option("--surface", c.surface, "surface for --sweep")
      ->check(CLI::IsMember({"punctured-disc", "polygon"}));
  verify->add_option("--check", c.checks, "restrict to these checks");
  auto* enumerate = app.add_subcommand("enumerate", "list all triangulations");
  enumerate->add_option("n", c.n, "number of boundary marked points")->required()->check(CLI::Range(3, 16));
  enumerate->add_option("--surface", c.surface, "punctured-disc or polygon")
      ->check(CLI::IsMember({"punctured-disc", "polygon"}));
  app.add_subcommand("fixtures", "list builtin inputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return CMPGEO_INPUT_ERROR;
  }
  return run(app.get_subcommands().front()->get_name(), c);
}
