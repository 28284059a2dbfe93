#include "reports.hpp"

#include <map>

#include "cmp_geometry.hpp"
#include "iso.hpp"

namespace cmpgeo {

namespace {

std::string relation_string(const Presentation& P, const Relation& r) {
  std::string s;
  for (const auto& t : r) {
    const long long c = P.field.to_signed(t.coeff);
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    if (std::llabs(c) != 1) s += std::to_string(std::llabs(c)) + "*";
    s += path_to_string(P, t.path);
  }
  return s;
}

json dimension_json(const Dimension& d) {
  if (d.kind == Dimension::Finite) return d.value;
  return d.str();
}

std::string verdict_name(GorensteinReport::Verdict v) {
  switch (v) {
    case GorensteinReport::Gorenstein: return "Gorenstein";
    case GorensteinReport::NotGorenstein: return "NotGorenstein";
    case GorensteinReport::Undetermined: return "Undetermined";
  }
  return "?";
}

json gorenstein_json(const GorensteinReport& g) {
  json j;
  j["verdict"] = verdict_name(g.verdict);
  j["d_left"] = dimension_json(g.d_left);
  j["d_right"] = dimension_json(g.d_right);
  if (g.verdict == GorensteinReport::Gorenstein) j["d"] = g.d;
  return j;
}

std::string family_name(CatalogEntry::Family f) {
  switch (f) {
    case CatalogEntry::Odot: return "odot";
    case CatalogEntry::Delta: return "delta";
    case CatalogEntry::Club: return "club";
  }
  return "?";
}

json structure_json(const TriangulationData& D) {
  json j;
  PunctureStructure P = classify(D);
  j["type"] = type_name(P.type);
  if (P.type == TriangulationType::Polygon) {
    j["t"] = P.t;
    return j;
  }
  j["m"] = P.m;
  j["t"] = P.t;
  if (P.type == TriangulationType::I) {
    j["d"] = P.d;
    j["labeling_case"] = colored_labeling(D, P).labeling_case;
  }
  return j;
}


}  // namespace

Workspace::Workspace(Input in, RunOptions opt) : in_(std::move(in)), opt_(opt) {
  require(is_prime(opt_.p), ErrorKind::InvalidCharacteristic, "characteristic " + std::to_string(opt_.p) + " is not prime");
  if (in_.presentation && !in_.presentation->field.p) in_.presentation->field.p = opt_.p;
  reseed(opt_.seed);
}

void Workspace::build() {
  if (A_.valid()) return;
  if (in_.triangulation) {
    D_ = std::make_unique<TriangulationData>(triangulation_data(*in_.triangulation, opt_.p));
    A_ = algebra_of(*D_, opt_.max_len);
  } else {
    A_ = Algebra::create(*in_.presentation, opt_.max_len);
  }
  H_ = std::make_unique<Homology>(A_, opt_.orbit_bound);
}

const Algebra& Workspace::algebra() {
  build();
  return A_;
}

const TriangulationData* Workspace::data() {
  build();
  return D_.get();
}

Homology& Workspace::homology() {
  build();
  return *H_;
}

std::vector<Rep> Workspace::listed_modules() {
  build();
  std::vector<Rep> out;
  for (const auto& spec : in_.modules) out.push_back(build_module(A_, spec, D_.get()));
  return out;
}

Rep Workspace::module(const std::string& expr) {
  build();
  return build_module(A_, ModuleSpec{expr, {}, {}}, D_.get());
}

json build_report(Workspace& W) {
  const Algebra& A = W.algebra();
  Homology& H = W.homology();
  const Presentation& P = A.presentation();
  json j;
  j["input"] = W.input().name;
  j["kind"] = W.is_triangulation() ? "triangulation" : "presentation";
  if (W.is_triangulation()) {
    j["triangulation"] = to_json(*W.input().triangulation);
    j["structure"] = structure_json(*W.data());
  }
  json alg;
  alg["dim"] = A.dim();
  alg["char"] = A.field().p;
  alg["vertices"] = P.vertices;
  json arrows = json::array();
  for (const auto& a : P.arrows) arrows.push_back(a.id + ": " + P.vertices[a.from] + " -> " + P.vertices[a.to]);
  alg["arrows"] = arrows;
  json rels = json::array();
  for (const auto& r : P.relations) rels.push_back(relation_string(P, r));
  alg["relations"] = rels;
  j["algebra"] = alg;

  json table = json::array();
  for (int v = 0; v < A.num_vertices(); ++v) {
    Rep Pv = projective(A, v), Iv = injective(A, v);
    json row;
    row["vertex"] = P.vertices[v];
    row["dim_P"] = Pv.total_dim();
    row["dim_I"] = Iv.total_dim();
    row["pd_I"] = dimension_json(H.proj_dim(Iv));
    row["id_P"] = dimension_json(H.inj_dim(Pv));
    table.push_back(row);
  }
  j["table"] = table;
  const GorensteinReport g = H.gorenstein();
  j["gorenstein"] = gorenstein_json(g);
  SelfinjectiveReport s = H.selfinjective();
  json si;
  si["selfinjective"] = s.selfinjective;
  if (s.selfinjective) {
    json nu = json::object();
    for (int v = 0; v < A.num_vertices(); ++v) nu[P.vertices[v]] = P.vertices[s.nakayama[v]];
    si["nakayama"] = nu;
    si["order"] = s.order;
  }
  j["selfinjective"] = si;

  std::string summary = "dim " + std::to_string(A.dim());
  if (s.selfinjective) summary += ", selfinjective";
  if (g.verdict == GorensteinReport::Gorenstein) summary += ", Gorenstein d=" + std::to_string(g.d);
  else if (g.verdict == GorensteinReport::NotGorenstein) summary += ", not Gorenstein";
  else summary += ", Gorenstein dimension undetermined";
  j["summary"] = summary;
  return j;
}

json cmp_report(Workspace& W, const std::string& method) {
  require(method == "geometric" || method == "algebraic" || method == "both", ErrorKind::ParseError,
          "method must be geometric, algebraic or both");
  json j;
  j["input"] = W.input().name;
  j["method"] = method;
  const Algebra& A = W.algebra();

  if (!W.is_triangulation()) {
    require(method == "algebraic", ErrorKind::TypeOther, "the geometric description needs a triangulation");
    Homology& H = W.homology();
    const GorensteinReport g = H.gorenstein();
    require(g.verdict == GorensteinReport::Gorenstein, ErrorKind::NotGorenstein,
            "CMP membership is tested up to the Gorenstein dimension, which is not finite here");
    std::vector<Rep> found;
    json entries = json::array();
    for (const Rep& M : W.listed_modules())
      for (Rep& X : decompose(M)) {
        bool seen = false;
        for (const Rep& Y : found) seen = seen || is_isomorphic_indecomposable(X, Y);
        if (seen || !H.is_nonprojective_cmp(X)) continue;
        entries.push_back({{"dims", X.dims()}});
        found.push_back(X);
      }
    j["algebraic"] = entries;
    j["complete"] = W.input().complete;
    j["verdict"] = "NONE";
    return j;
  }

  const TriangulationData& D = *W.data();
  j["structure"] = structure_json(D);
  std::set<Arc> geometric, algebraic;
  if (method != "algebraic") {
    CmpCatalog C = cmp_catalog(D, A);
    json entries = json::array();
    for (const auto& e : C.entries) {
      json x;
      x["family"] = family_name(e.family);
      x["label"] = entry_label(e);
      x["arc"] = e.arc.name();
      if (e.family == CatalogEntry::Odot) x["labels"] = {e.i, e.j};
      x["dims"] = arc_module(D, A, e.arc).dims();
      if (e.omega >= 0) x["omega"] = entry_label(C.entries[e.omega]);
      entries.push_back(x);
      geometric.insert(e.arc);
    }
    j["catalog"] = entries;
    j["counts"] = {{"odot", C.count(CatalogEntry::Odot)},
                   {"delta", C.count(CatalogEntry::Delta)},
                   {"club", C.count(CatalogEntry::Club)},
                   {"total", C.entries.size()},
                   {"expected", C.expected_size()}};
    if (C.count(CatalogEntry::Delta) + C.count(CatalogEntry::Club) > 0)
      j["note"] = "triangle entries have periodic projective resolutions of period 3";
  }
  if (method != "geometric") {
    json entries = json::array();
    for (const auto& a : algebraic_cmp_arcs(D, W.homology())) {
      entries.push_back({{"arc", a.name()}, {"dims", arc_module(D, A, a).dims()}});
      algebraic.insert(a);
    }
    j["algebraic"] = entries;
  }
  if (method == "both") {
    json missing = json::array(), extra = json::array();
    for (const auto& a : algebraic)
      if (!geometric.count(a)) missing.push_back(a.name());
    for (const auto& a : geometric)
      if (!algebraic.count(a)) extra.push_back(a.name());
    j["missing_from_catalog"] = missing;
    j["not_cmp"] = extra;
    j["verdict"] = missing.empty() && extra.empty() ? "MATCH" : "MISMATCH";
  } else {
    j["verdict"] = "NONE";
  }
  return j;
}

json itdim_report(Workspace& W, bool assume_complete, const std::vector<std::string>& modules) {
  Homology& H = W.homology();
  const Algebra& A = W.algebra();
  json j;
  j["input"] = W.input().name;
  const GorensteinReport g = H.gorenstein();
  j["gorenstein"] = gorenstein_json(g);

  std::vector<Rep> family;
  bool complete = false;
  std::string source;
  if (W.is_triangulation()) {
    const TriangulationData& D = *W.data();
    for (const auto& a : all_arcs(D.T.surface()))
      if (!D.T.contains(a)) family.push_back(arc_module(D, A, a));
    for (int v = 0; v < A.num_vertices(); ++v) family.push_back(projective(A, v));
    complete = true;
    source = "arc family";
  } else {
    family = W.listed_modules();
    complete = W.input().complete || assume_complete;
    source = W.input().complete ? "listed indecomposables" : "listed modules";
  }

  json per = json::array();
  auto report_module = [&](const std::string& name, const Rep& M) {
    PhiPsi r = H.phi_psi({M});
    per.push_back({{"module", name}, {"dims", M.dims()}, {"phi", r.phi}, {"psi", r.psi}, {"exact", r.exact}});
  };
  for (const auto& expr : modules) report_module(expr, W.module(expr));
  if (!W.is_triangulation() && !complete)
    for (const auto& spec : W.input().modules)
      if (!spec.expr.empty()) report_module(spec.expr, W.module(spec.expr));

  if (complete) {
    PhiPsi r = H.phi_psi(family);
    j["phidim"] = r.phi;
    j["psidim"] = r.psi;
    j["exact"] = r.exact;
    j["over"] = source;
    j["modules_considered"] = family.size();
  } else {
    require(!per.empty(), ErrorKind::IncompleteIndecomposableList,
            "the input does not list every indecomposable; pass --assume-complete or ask for --module values");
    j["phidim"] = nullptr;
    j["psidim"] = nullptr;
    j["notice"] = "phidim and psidim need a complete list of indecomposables";
  }
  j["per_module"] = per;
  return j;
}

std::string arquiver_output(Workspace& W, const std::string& format) {
  require(format == "dot" || format == "json", ErrorKind::ParseError, "format must be dot or json");
  require(W.is_triangulation(), ErrorKind::TypeOther, "the stable AR quiver needs a triangulation");
  StableARQuiver Q = build_stable_ar_quiver(cmp_catalog(*W.data(), W.algebra()));
  return format == "dot" ? to_dot(Q) : to_json(Q);
}

json sweep_json(const SweepReport& R) {
  json j;
  j["surface"] = R.surface;
  j["n"] = R.n;
  j["triangulations"] = R.triangulations;
  j["jobs"] = R.jobs;
  j["seconds"] = R.seconds;
  j["by_type"] = R.by_type;
  j["selfinjective_algebras"] = R.selfinjective;
  j["catalog_sizes"] = R.catalog_sizes;
  json checks = json::object();
  for (const auto& [name, t] : R.checks)
    checks[name] = {{"pass", t.pass}, {"fail", t.fail}, {"failures", t.failures}};
  j["checks"] = checks;
  if (R.checks.count("omega-formula")) {
    json cases = json::object();
    for (const auto& c : omega_case_names()) {
      auto it = R.omega_cases.find(c);
      cases[c] = it == R.omega_cases.end() ? 0 : it->second;
    }
    j["omega_cases"] = cases;
  }
  j["ok"] = R.ok();
  return j;
}

json verify_report(Workspace& W, const std::set<std::string>& checks) {
  validate_checks(checks);
  if (W.is_triangulation()) {
    VerifyOptions opt;
    opt.checks = checks;
    opt.orbit_bound = W.options().orbit_bound;
    json j = sweep_json(verify_triangulation(*W.input().triangulation, opt));
    j["input"] = W.input().name;
    return j;
  }

  // Presentation inputs: only the checks that make sense without arcs.
  auto wants = [&](const std::string& c) { return checks.empty() || checks.count(c); };
  Homology& H = W.homology();
  const GorensteinReport g = H.gorenstein();
  json j;
  j["input"] = W.input().name;
  json results = json::object(), skipped = json::object();
  bool ok = true;
  std::vector<Rep> indecomposables;
  for (const Rep& M : W.listed_modules())
    for (Rep& X : decompose(M)) indecomposables.push_back(std::move(X));

  if (wants("characterization")) {
    if (g.verdict != GorensteinReport::Gorenstein || g.d > 1) {
      skipped["characterization"] = "NotGorenstein: the algebra is not 1-Gorenstein";
    } else {
      long pass = 0, failn = 0;
      for (const Rep& X : indecomposables) {
        Characterization c = H.characterize(X);
        (c.a_consistent() && c.b_consistent() ? pass : failn)++;
      }
      results["characterization"] = {{"pass", pass}, {"fail", failn}};
      ok = ok && failn == 0;
    }
  }
  if (wants("itdim")) {
    if (!W.input().complete) {
      skipped["itdim"] = "IncompleteIndecomposableList: the input does not mark its modules complete";
    } else if (g.verdict != GorensteinReport::Gorenstein) {
      PhiPsi r = H.phi_psi(indecomposables);
      skipped["itdim"] = "NotGorenstein: phidim " + std::to_string(r.phi) + ", psidim " + std::to_string(r.psi) +
                         " reported without a Gorenstein dimension to compare";
    } else {
      PhiPsi r = H.phi_psi(indecomposables);
      const bool pass = r.exact && r.phi == g.d && r.psi == g.d;
      results["itdim"] = {{"pass", pass ? 1 : 0}, {"fail", pass ? 0 : 1}};
      ok = ok && pass;
    }
  }
  if (wants("selfinjective")) {
    SelfinjectiveReport s = H.selfinjective();
    if (!s.selfinjective) {
      skipped["selfinjective"] = "the algebra is not selfinjective";
    } else {
      long pass = 0, failn = 0;
      for (const Rep& X : indecomposables) {
        if (is_projective(X)) continue;
        (H.verify_tau_periodicity(X, s.order) ? pass : failn)++;
      }
      results["selfinjective"] = {{"pass", pass}, {"fail", failn}};
      ok = ok && failn == 0;
    }
  }
  for (const auto& c : check_names())
    if (wants(c) && !results.contains(c) && !skipped.contains(c)) skipped[c] = "needs a triangulation";
  j["checks"] = results;
  j["skipped"] = skipped;
  j["ok"] = ok;
  return j;
}

json enumerate_report(const Surface& S) {
  json j;
  j["surface"] = S.punctured() ? "punctured-disc" : "polygon";
  j["n"] = S.n;
  json list = json::array();
  std::map<std::string, long> by_type;
  for (const auto& T : enumerate_triangulations(S)) {
    json arcs = json::array();
    for (const auto& g : T.arcs()) arcs.push_back(g.name());
    const std::string type = type_name(classify(triangulation_data(T)).type);
    by_type[type]++;
    list.push_back({{"arcs", arcs}, {"type", type}});
  }
  j["count"] = list.size();
  j["by_type"] = by_type;
  j["triangulations"] = list;
  return j;
}

}  // namespace cmpgeo
