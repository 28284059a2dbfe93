#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <thread>

#include "cmp_geometry.hpp"
#include "homology.hpp"
#include "iso.hpp"

namespace cmpgeo {

namespace {

constexpr std::size_t kKeptFailures = 8;

std::string arcs_label(const Triangulation& T) {
  std::string s;
  for (const auto& g : T.arcs()) s += (s.empty() ? "" : " ") + g.name();
  return "{" + s + "}";
}

// The unique non-projective summand of M, if there is exactly one.
std::optional<Rep> sole_nonprojective(const Rep& M) {
  std::optional<Rep> out;
  for (Rep& X : decompose(M)) {
    if (is_projective(X)) continue;
    if (out) return std::nullopt;
    out = std::move(X);
  }
  return out;
}

class Checker {
 public:
  Checker(const Triangulation& T, const VerifyOptions& opt, SweepReport& R)
      : T_(T), opt_(opt), R_(R), D_(triangulation_data(T)), A_(algebra_of(D_)), H_(A_, opt.orbit_bound),
        where_(arcs_label(T)) {}

  const Rep& module(const Arc& g) {
    auto it = modules_.find(g);
    if (it == modules_.end()) it = modules_.emplace(g, arc_module(D_, A_, g)).first;
    return it->second;
  }

  void run() {
    if (opt_.wants("calibration")) calibration();
    if (opt_.wants("characterization")) characterization();
    if (opt_.wants("itdim")) itdim();
    if (opt_.wants("selfinjective")) selfinjective();

    static const std::vector<std::string> catalog_checks = {"classification", "omega-formula", "tau-tilde",
                                                             "periodicity", "ar-arrows"};
    bool any = false;
    for (const auto& c : catalog_checks) any = any || opt_.wants(c);
    if (!any) return;

    CmpCatalog C;
    try {
      C = cmp_catalog(D_, A_);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TypeOther) throw;
      R_.by_type["Other"]++;
      if (opt_.wants("classification")) R_.checks["classification"].record(false, where_ + ": no geometric type");
      return;
    }
    R_.by_type[type_name(C.structure.type)]++;
    R_.catalog_sizes["Odot"] += C.count(CatalogEntry::Odot);
    R_.catalog_sizes["Delta"] += C.count(CatalogEntry::Delta);
    R_.catalog_sizes["Club"] += C.count(CatalogEntry::Club);

    if (opt_.wants("classification")) classification(C);
    if (opt_.wants("omega-formula")) omega_formula(C);
    if (opt_.wants("tau-tilde")) tau_tilde_check(C);
    if (opt_.wants("periodicity")) periodicity(C);
    if (opt_.wants("ar-arrows")) ar_arrows(C);
  }

 private:
  Tally& tally(const std::string& c) { return R_.checks[c]; }

  void calibration() {
    const Surface& S = T_.surface();
    for (int a = 0; a < T_.size(); ++a) {
      const Arc& g = T_.arcs()[a];
      const bool ok = module(tau_inv(S, g)).dims() == projective(A_, a).dims() &&
                      module(tau(S, g)).dims() == injective(A_, a).dims();
      tally("calibration").record(ok, where_ + " at " + g.name());
    }
  }

  std::vector<Rep> arc_family() {
    std::vector<Rep> out;
    for (const auto& g : all_arcs(T_.surface()))
      if (!T_.contains(g)) out.push_back(module(g));
    return out;
  }

  void characterization() {
    const GorensteinReport g = H_.gorenstein();
    if (g.verdict != GorensteinReport::Gorenstein || g.d > 1) {
      tally("characterization").record(false, where_ + ": not 1-Gorenstein");
      return;
    }
    for (const auto& g2 : all_arcs(T_.surface())) {
      if (T_.contains(g2)) continue;
      Characterization c = H_.characterize(module(g2));
      tally("characterization").record(c.a_consistent() && c.b_consistent(), where_ + " at " + g2.name());
    }
  }

  void itdim() {
    const GorensteinReport g = H_.gorenstein();
    if (g.verdict != GorensteinReport::Gorenstein || g.d > 1) {
      tally("itdim").record(false, where_ + ": Gorenstein dimension " + g.d_left.str());
      return;
    }
    PhiPsi r = H_.phi_psi(arc_family());
    tally("itdim").record(r.exact && r.phi == g.d && r.psi == g.d,
                          where_ + ": phi " + std::to_string(r.phi) + " psi " + std::to_string(r.psi) +
                              " d " + std::to_string(g.d));
  }

  void selfinjective() {
    SelfinjectiveReport s = H_.selfinjective();
    if (!s.selfinjective) return;
    R_.selfinjective++;
    for (const auto& g : all_arcs(T_.surface())) {
      if (T_.contains(g) || is_projective(module(g))) continue;
      tally("selfinjective").record(H_.verify_tau_periodicity(module(g), s.order),
                                    where_ + " at " + g.name() + ", order " + std::to_string(s.order));
    }
  }

  void classification(const CmpCatalog& C) {
    std::set<Arc> geometric, algebraic;
    for (const auto& e : C.entries) geometric.insert(e.arc);
    for (const auto& a : algebraic_cmp_arcs(D_, H_)) algebraic.insert(a);
    const bool sizes = static_cast<int>(C.entries.size()) == C.expected_size() &&
                       geometric.size() == C.entries.size();
    tally("classification").record(sizes && geometric == algebraic, where_);
  }

  const CatalogEntry* odot_entry(const CmpCatalog& C, std::pair<int, int> ij) {
    for (const auto& e : C.entries)
      if (e.family == CatalogEntry::Odot && e.i == ij.first && e.j == ij.second) return &e;
    return nullptr;
  }

  void omega_formula(const CmpCatalog& C) {
    if (C.structure.type != TriangulationType::I) return;
    const int N = C.labels.N;
    for (const auto& e : C.entries) {
      if (e.family != CatalogEntry::Odot) continue;
      const Rep& M = module(e.arc);
      R_.omega_cases[omega_case(C.structure, C.labels, e.i, e.j, e.arc, M)]++;
      const CatalogEntry* target = odot_entry(C, syzygy_on_labels(N, e.i, e.j));
      auto parts = decompose(syzygy(M));
      const bool ok = target && parts.size() == 1 && is_isomorphic(parts[0], module(target->arc));
      tally("omega-formula").record(ok, where_ + " at " + entry_label(e));
    }
  }

  void tau_tilde_check(const CmpCatalog& C) {
    if (C.structure.type != TriangulationType::I) return;
    const int N = C.labels.N;
    for (const auto& e : C.entries) {
      if (e.family != CatalogEntry::Odot) continue;
      const CatalogEntry* target = odot_entry(C, tau_tilde(N, e.i, e.j));
      auto X = sole_nonprojective(torsionless_cosyzygy(torsionless_cosyzygy(module(e.arc))));
      const bool ok = target && X && is_isomorphic(*X, module(target->arc));
      tally("tau-tilde").record(ok, where_ + " at " + entry_label(e));
    }
  }

  void periodicity(const CmpCatalog& C) {
    for (const auto& e : C.entries) {
      if (e.family == CatalogEntry::Odot) continue;
      const Rep& M = module(e.arc);
      Rep X = M;
      bool ok = true;
      int k = 0;
      for (int at = static_cast<int>(&e - C.entries.data()); k < 3; ++k) {
        auto next = sole_nonprojective(syzygy(X));
        at = C.entries[at].omega;
        ok = ok && next && at >= 0 && is_isomorphic(*next, module(C.entries[at].arc));
        if (!ok) break;
        X = *next;
        // period exactly three: no earlier return
        if (k < 2) ok = ok && !is_isomorphic(X, M);
      }
      ok = ok && is_isomorphic(X, M);
      tally("periodicity").record(ok, where_ + " at " + entry_label(e));
    }
  }

  void ar_arrows(const CmpCatalog& C) {
    StableARQuiver Q = build_stable_ar_quiver(C);
    const std::size_t V = Q.vertices.size();
    if (V == 0) return;
    std::vector<Rep> objects;
    for (const auto& v : Q.vertices) objects.push_back(module(v.entry.arc));
    auto dims = irreducible_dims(objects);
    std::vector<std::vector<int>> moves(V, std::vector<int>(V, 0));
    for (const auto& a : Q.arrows) moves[a.from][a.to]++;
    bool ok = true;
    for (std::size_t x = 0; x < V; ++x)
      for (std::size_t y = 0; y < V; ++y) ok = ok && moves[x][y] == dims[x][y];
    tally("ar-arrows").record(ok, where_);
  }

  const Triangulation& T_;
  const VerifyOptions& opt_;
  SweepReport& R_;
  TriangulationData D_;
  Algebra A_;
  Homology H_;
  std::string where_;
  std::map<Arc, Rep> modules_;
};

}  // namespace

void Tally::record(bool ok, const std::string& what) {
  if (ok) {
    ++pass;
    return;
  }
  ++fail;
  if (failures.size() < kKeptFailures) failures.push_back(what);
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"calibration", "classification", "omega-formula", "tau-tilde",
                                                 "periodicity", "ar-arrows",      "characterization", "itdim",
                                                 "selfinjective"};
  return names;
}

void validate_checks(const std::set<std::string>& checks) {
  const auto& names = check_names();
  for (const auto& c : checks)
    require(std::find(names.begin(), names.end(), c) != names.end(), ErrorKind::ParseError,
            "unknown check '" + c + "'");
}

void SweepReport::merge(const SweepReport& o) {
  triangulations += o.triangulations;
  selfinjective += o.selfinjective;
  for (const auto& [k, v] : o.by_type) by_type[k] += v;
  for (const auto& [k, t] : o.checks) {
    Tally& mine = checks[k];
    mine.pass += t.pass;
    mine.fail += t.fail;
    for (const auto& f : t.failures)
      if (mine.failures.size() < kKeptFailures) mine.failures.push_back(f);
  }
  for (const auto& [k, v] : o.omega_cases) omega_cases[k] += v;
  for (const auto& [k, v] : o.catalog_sizes) catalog_sizes[k] += v;
}

bool SweepReport::ok() const {
  for (const auto& [k, t] : checks)
    if (!t.ok()) return false;
  return true;
}

SweepReport verify_triangulation(const Triangulation& T, const VerifyOptions& opt) {
  validate_checks(opt.checks);
  SweepReport R;
  R.surface = T.surface().punctured() ? "punctured-disc" : "polygon";
  R.n = T.surface().n;
  R.triangulations = 1;
  const auto start = std::chrono::steady_clock::now();
  Checker(T, opt, R).run();
  R.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return R;
}

SweepReport verify_sweep(const Surface& S, const VerifyOptions& opt, int jobs) {
  validate_checks(opt.checks);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Triangulation> all = enumerate_triangulations(S);
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(all.size())));

  std::atomic<std::size_t> next{0};
  std::vector<SweepReport> partial(jobs);
  std::vector<std::string> errors(jobs);
  auto worker = [&](int w) {
    try {
      for (std::size_t k; (k = next.fetch_add(1)) < all.size();) partial[w].merge(verify_triangulation(all[k], opt));
    } catch (const std::exception& e) {
      errors[w] = e.what();
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < jobs; ++w) pool.emplace_back(worker, w);
  worker(0);
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (!e.empty()) fail(ErrorKind::InvariantViolated, "sweep job failed: " + e);

  SweepReport R;
  R.surface = S.punctured() ? "punctured-disc" : "polygon";
  R.n = S.n;
  R.jobs = jobs;
  for (const auto& p : partial) R.merge(p);
  R.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return R;
}

}  // namespace cmpgeo
