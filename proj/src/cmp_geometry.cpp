#include "cmp_geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace cmpgeo {

const char* type_name(TriangulationType t) {
  switch (t) {
    case TriangulationType::I: return "I";
    case TriangulationType::II: return "II";
    case TriangulationType::III: return "III";
    case TriangulationType::Other: return "other";
    case TriangulationType::Polygon: return "A";
  }
  return "?";
}

std::vector<int> off_puncture_internal_triangles(const TriangulationData& D) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(D.triangles.size()); ++k) {
    const Triangle& tr = D.triangles[k];
    if (tr.at_puncture) continue;
    bool ok = true;
    for (int s : tr.side) ok = ok && s >= 0 && D.arcs[s].kind != Arc::Radial;
    if (ok) out.push_back(k);
  }
  return out;
}

PunctureStructure classify(const TriangulationData& D) {
  PunctureStructure P;
  const Surface& S = D.T.surface();
  P.t = static_cast<int>(off_puncture_internal_triangles(D).size());
  if (!S.punctured()) {
    P.type = TriangulationType::Polygon;
    return P;
  }
  if (D.self_folded >= 0) {
    P.m = 2;
    P.radial = {D.folded_radial, D.folded_loop};
    P.radial_point = {D.self_folded, D.self_folded};
    for (const auto& tr : D.triangles) {
      if (tr.at_puncture || tr.side[2] != D.folded_loop) continue;
      const int x = tr.side[0], y = tr.side[1];
      if (x < 0 || y < 0) {
        P.type = TriangulationType::II;
        P.abar = std::max(x, y);
      } else {
        P.type = TriangulationType::III;
        P.cbar = x;
        P.dbar = y;
      }
    }
    return P;
  }
  std::vector<std::pair<int, int>> rs;
  for (int i = 0; i < static_cast<int>(D.arcs.size()); ++i)
    if (D.arcs[i].kind == Arc::Radial) rs.push_back({D.arcs[i].a, i});
  std::sort(rs.begin(), rs.end());
  P.m = static_cast<int>(rs.size());
  for (auto [p, i] : rs) {
    P.radial_point.push_back(p);
    P.radial.push_back(i);
  }
  for (int k = 0; k < P.m; ++k) {
    const int a = P.radial_point[k], b = P.radial_point[(k + 1) % P.m];
    int third = -2;
    for (const auto& tr : D.triangles)
      if (tr.at_puncture && tr.corner[0] == a && tr.corner[1] == b) third = tr.side[1];
    require(third != -2, ErrorKind::InvariantViolated, "missing puncture sector");
    P.bar.push_back(third);
  }
  if (P.m == 2) {
    const int gap = S.mod(P.radial_point[1] - P.radial_point[0]);
    if (gap == 1 || gap == S.n - 1) {
      P.type = TriangulationType::II;
      P.abar = std::max(P.bar[0], P.bar[1]);
      return P;
    }
  }
  if (P.m < 2) return P;
  P.type = TriangulationType::I;
  int k0 = -1;
  for (int k = 0; k < P.m; ++k)
    if (P.bar[k] < 0) k0 = k;
  if (k0 < 0) {
    P.all_internal = true;
    P.d = P.m;
    return P;
  }
  std::vector<int> run;
  for (int s = 1; s <= P.m; ++s) {
    const int k = (k0 + s) % P.m;
    if (P.bar[k] >= 0) {
      run.push_back(k);
    } else if (!run.empty()) {
      P.runs.push_back(run);
      run.clear();
    }
  }
  if (!run.empty()) P.runs.push_back(run);
  for (const auto& r : P.runs) P.d += static_cast<int>(r.size()) - 1;
  return P;
}

ColoredLabeling colored_labeling(const TriangulationData& D, const PunctureStructure& P) {
  require(P.type == TriangulationType::I, ErrorKind::InvalidLabel, "colored labels need a type I triangulation");
  const Surface& S = D.T.surface();
  const int n = S.n;
  ColoredLabeling L;
  L.N = P.m + P.d;
  std::vector<char> radial(n, 0);
  for (int p : P.radial_point) radial[p] = 1;
  std::set<int> first, last;
  for (const auto& r : P.runs) {
    first.insert(P.radial_point[r.front()]);
    last.insert(P.radial_point[(r.back() + 1) % P.m]);
  }
  L.colored.assign(n, 0);
  L.is_red.assign(n, 0);
  L.is_blue.assign(n, 0);
  for (int p = 0; p < n; ++p) {
    L.colored[p] = radial[p] || radial[S.mod(p + 1)];
    L.is_red[p] = L.colored[p] && !last.count(S.mod(p + 1));
    L.is_blue[p] = L.colored[p] && !first.count(p);
  }
  int lowest = 0;
  while (!L.colored[lowest]) ++lowest;
  int anchor_r = lowest, anchor_b = lowest;
  if (P.all_internal) {
    L.labeling_case = 2;
    // the anchor carries r_1 and b_N
    anchor_b = S.mod(lowest + 1);
  } else if (P.runs.empty()) {
    L.labeling_case = 1;
  } else {
    L.labeling_case = 3;
    // E_1 is the run whose first vertex has the smallest number
    anchor_r = anchor_b = S.mod(*first.begin() - 1);
  }
  L.red = {-1};
  L.blue = {-1};
  for (int s = 0; s < n; ++s) {
    if (L.is_red[S.mod(anchor_r + s)]) L.red.push_back(S.mod(anchor_r + s));
    if (L.is_blue[S.mod(anchor_b + s)]) L.blue.push_back(S.mod(anchor_b + s));
  }
  require(static_cast<int>(L.red.size()) == L.N + 1 && static_cast<int>(L.blue.size()) == L.N + 1,
          ErrorKind::InvariantViolated,
          "expected " + std::to_string(L.N) + " red and blue points, found " + std::to_string(L.red.size() - 1) +
              " and " + std::to_string(L.blue.size() - 1));
  L.red_at.assign(n, 0);
  L.blue_at.assign(n, 0);
  for (int i = 1; i <= L.N; ++i) {
    L.red_at[L.red[i]] = i;
    L.blue_at[L.blue[i]] = i;
  }
  return L;
}

LabelArc gamma_of_labels(const TriangulationData& D, const ColoredLabeling& L, int i, int j) {
  require(i >= 1 && i <= L.N && j >= 1 && j <= L.N, ErrorKind::InvalidLabel,
          "label index out of range 1.." + std::to_string(L.N));
  const Surface& S = D.T.surface();
  const int q = L.red[i], s = L.blue[j];
  LabelArc out;
  if (q == s) {
    const bool plain_in_T = std::find(D.arcs.begin(), D.arcs.end(), Arc::radial(q)) != D.arcs.end();
    out.arc = Arc::radial(q, plain_in_T ? Tag::Notched : Tag::Plain);
    if (D.flipped) out.arc = flip_tag(out.arc);
  } else if (s == S.mod(q + 1)) {
    out.kind = LabelArc::Boundary;
    out.arc = Arc::peripheral(q, s);
    return out;
  } else {
    out.arc = Arc::peripheral(q, s);
  }
  if (D.T.contains(out.arc)) out.kind = LabelArc::InT;
  return out;
}

namespace {

int wrapN(int N, int i) { return ((i - 1) % N + N) % N + 1; }

void check_pair(int N, int i, int j) {
  require(N >= 3 && i >= 1 && i <= N && j >= 1 && j <= N && in_odot(N, i, j), ErrorKind::InvalidLabel,
          "(" + std::to_string(i) + "," + std::to_string(j) + ") is not a label pair for N = " + std::to_string(N));
}

}  // namespace

bool in_odot(int N, int i, int j) {
  const int c = ((j - i) % N + N) % N;
  return c >= 2 && c <= N - 1;
}

std::pair<int, int> syzygy_on_labels(int N, int i, int j) {
  check_pair(N, i, j);
  return {wrapN(N, j - 1), i};
}

std::pair<int, int> tau_tilde(int N, int i, int j) {
  check_pair(N, i, j);
  return {wrapN(N, i + 1), wrapN(N, j + 1)};
}

bool has_red_move(int N, int i, int j) { return in_odot(N, i, j) && in_odot(N, i - 1, j); }
bool has_blue_move(int N, int i, int j) { return in_odot(N, i, j) && in_odot(N, i, j - 1); }

std::pair<int, int> red_move(int N, int i, int j) {
  check_pair(N, i, j);
  require(has_red_move(N, i, j), ErrorKind::InvalidLabel, "no red move from this pair");
  return {wrapN(N, i - 1), j};
}

std::pair<int, int> blue_move(int N, int i, int j) {
  check_pair(N, i, j);
  require(has_blue_move(N, i, j), ErrorKind::InvalidLabel, "no blue move from this pair");
  return {i, wrapN(N, j - 1)};
}

std::string omega_case(const PunctureStructure& P, const ColoredLabeling& L, int i, int j,
                       const Arc& arc, const Rep& M) {
  check_pair(L.N, i, j);
  std::vector<char> radial(M.num_vertices(), 0);
  for (int r : P.radial) radial.at(r) = 1;
  const auto td = top_dims(M);
  int top_radial = 0, top_other = 0;
  for (std::size_t v = 0; v < td.size(); ++v) (radial[v] ? top_radial : top_other) += td[v];
  if (arc.kind == Arc::Radial) return top_other == 0 ? "e" : "f";
  if (top_radial == 0 && top_other == 1) return "d";

  const int pr = L.red.at(i), pb = L.blue.at(j);
  std::string key;
  if (!L.is_blue[pr]) key = "3";
  else key = L.blue_at[pr] == i ? "1" : "2";
  if (!L.is_red[pb]) key += "c";
  else key += L.red_at[pb] == j ? "a" : "b";
  return key;
}

const std::vector<std::string>& omega_case_names() {
  static const std::vector<std::string> names = {"1a", "1b", "1c", "2a", "2b", "2c",
                                                 "3a", "3b", "3c", "d",  "e",  "f"};
  return names;
}

std::vector<Arc> delta_arcs(const TriangulationData& D, int triangle) {
  const Surface& S = D.T.surface();
  const auto& c = D.triangles.at(triangle).corner;
  auto arc = [&](int x, int y) {
    return S.punctured() ? Arc::peripheral(S.mod(x), S.mod(y)) : Arc::chord(S.mod(x), S.mod(y));
  };
  return {arc(c[0] - 1, c[1]), arc(c[1] - 1, c[2]), arc(c[0], c[2] - 1)};
}

int CmpCatalog::count(CatalogEntry::Family f) const {
  int k = 0;
  for (const auto& e : entries) k += e.family == f;
  return k;
}

int CmpCatalog::expected_size() const {
  const auto& P = structure;
  switch (P.type) {
    case TriangulationType::I: return (P.m + P.d) * (P.m + P.d - 2) + 3 * P.t;
    case TriangulationType::II: return 3 * P.t;
    case TriangulationType::III: return 3 * (P.t + 1);
    case TriangulationType::Polygon: return 3 * P.t;
    case TriangulationType::Other: break;
  }
  return -1;
}

namespace {

int find_entry(const std::vector<Rep>& mods, const Rep& X) {
  for (std::size_t k = 0; k < mods.size(); ++k)
    if (mods[k].dims() == X.dims() && is_isomorphic_indecomposable(mods[k], X)) return static_cast<int>(k);
  return -1;
}

// An arc not in T whose module is isomorphic to X.
std::optional<Arc> arc_of_module(const TriangulationData& D, const Algebra& A, const Rep& X) {
  for (const auto& g : all_arcs(D.T.surface())) {
    if (D.T.contains(g) || crossing_vector(D, g) != X.dims()) continue;
    if (is_isomorphic_indecomposable(arc_module(D, A, g), X)) return g;
  }
  return std::nullopt;
}

}  // namespace

CmpCatalog cmp_catalog(const TriangulationData& D, const Algebra& A) {
  CmpCatalog C;
  C.structure = classify(D);
  const PunctureStructure& P = C.structure;
  if (P.type == TriangulationType::Other)
    fail(ErrorKind::TypeOther, "triangulation is not of type I, II or III");
  if (P.type == TriangulationType::I) {
    C.labels = colored_labeling(D, P);
    const int N = C.labels.N;
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) {
        if (!in_odot(N, i, j)) continue;
        LabelArc g = gamma_of_labels(D, C.labels, i, j);
        require(g.kind == LabelArc::Module, ErrorKind::InvariantViolated,
                "label pair (" + std::to_string(i) + "," + std::to_string(j) + ") gives no module");
        CatalogEntry e;
        e.family = CatalogEntry::Odot;
        e.i = i;
        e.j = j;
        e.arc = g.arc;
        C.entries.push_back(e);
      }
    for (auto& e : C.entries) {
      auto [a, b] = syzygy_on_labels(N, e.i, e.j);
      for (std::size_t k = 0; k < C.entries.size(); ++k)
        if (C.entries[k].i == a && C.entries[k].j == b) e.omega = static_cast<int>(k);
    }
  }
  const std::size_t periodic_from = C.entries.size();
  for (int tri : off_puncture_internal_triangles(D))
    for (const Arc& g : delta_arcs(D, tri)) {
      CatalogEntry e;
      e.family = CatalogEntry::Delta;
      e.triangle = tri;
      e.arc = g;
      C.entries.push_back(e);
    }
  if (P.type == TriangulationType::III) {
    std::vector<Rep> found;
    for (int x : {P.radial[0], P.cbar, P.dbar})
      for (const Rep& X : decompose(radical(projective(A, x)).module)) {
        if (is_projective(X) || find_entry(found, X) >= 0) continue;
        found.push_back(X);
      }
    for (const Rep& X : found) {
      auto g = arc_of_module(D, A, X);
      require(g.has_value(), ErrorKind::InvariantViolated, "radical summand without an arc");
      // summands coming from a triangle beyond c or d are already listed
      bool listed = false;
      for (const auto& e : C.entries) listed = listed || e.arc == *g;
      if (listed) continue;
      CatalogEntry e;
      e.family = CatalogEntry::Club;
      e.arc = *g;
      C.entries.push_back(e);
    }
  }
  // the syzygy inside each period-3 family, computed algebraically
  std::vector<Rep> mods;
  for (std::size_t k = periodic_from; k < C.entries.size(); ++k) mods.push_back(arc_module(D, A, C.entries[k].arc));
  for (std::size_t k = periodic_from; k < C.entries.size(); ++k) {
    const int w = find_entry(mods, syzygy(mods[k - periodic_from]));
    if (w >= 0) C.entries[k].omega = static_cast<int>(periodic_from) + w;
  }
  return C;
}

std::vector<Arc> algebraic_cmp_arcs(const TriangulationData& D, Homology& H) {
  const Algebra& A = H.algebra();
  const GorensteinReport g = H.gorenstein();
  require(g.verdict == GorensteinReport::Gorenstein, ErrorKind::NotGorenstein, "algebra is not Gorenstein");
  const int d = std::max(g.d, 1);
  std::vector<Arc> out;
  for (const auto& a : all_arcs(D.T.surface())) {
    if (D.T.contains(a)) continue;
    Rep M = arc_module(D, A, a);
    if (is_projective(M)) continue;
    if (H.is_torsionless(M) && H.is_cmp(M, d)) out.push_back(a);
  }
  return out;
}

std::string entry_label(const CatalogEntry& e) {
  switch (e.family) {
    case CatalogEntry::Odot: return "M(r" + std::to_string(e.i) + ",b" + std::to_string(e.j) + ")";
    case CatalogEntry::Delta: return "Delta(" + std::to_string(e.triangle) + "):" + e.arc.name();
    case CatalogEntry::Club: return "Club:" + e.arc.name();
  }
  return "?";
}

StableARQuiver build_stable_ar_quiver(const CmpCatalog& C) {
  StableARQuiver Q;
  std::map<std::pair<int, int>, int> at;
  for (const auto& e : C.entries) {
    if (e.family == CatalogEntry::Odot) at[{e.i, e.j}] = static_cast<int>(Q.vertices.size());
    Q.vertices.push_back({entry_label(e), e});
  }
  Q.tau.assign(Q.vertices.size(), -1);
  const int N = C.labels.N;
  for (int v = 0; v < static_cast<int>(Q.vertices.size()); ++v) {
    const CatalogEntry& e = Q.vertices[v].entry;
    if (e.family != CatalogEntry::Odot) {
      Q.tau[v] = e.omega;
      continue;
    }
    auto [ti, tj] = tau_tilde(N, e.i, e.j);
    Q.tau[v] = at.at({ti, tj});
    if (has_red_move(N, e.i, e.j)) Q.arrows.push_back({v, at.at(red_move(N, e.i, e.j)), "red"});
    if (has_blue_move(N, e.i, e.j)) Q.arrows.push_back({v, at.at(blue_move(N, e.i, e.j)), "blue"});
  }
  std::sort(Q.arrows.begin(), Q.arrows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.from, a.to, a.color) < std::tie(b.from, b.to, b.color);
  });
  return Q;
}

std::string to_dot(const StableARQuiver& Q) {
  std::ostringstream os;
  os << "digraph stable_cmp {\n";
  for (const auto& v : Q.vertices) os << "  \"" << v.id << "\" [label=\"" << v.id << "\"];\n";
  for (const auto& a : Q.arrows)
    os << "  \"" << Q.vertices[a.from].id << "\" -> \"" << Q.vertices[a.to].id << "\" [color=" << a.color << "];\n";
  for (std::size_t v = 0; v < Q.tau.size(); ++v)
    if (Q.tau[v] >= 0)
      os << "  \"" << Q.vertices[v].id << "\" -> \"" << Q.vertices[Q.tau[v]].id
         << "\" [style=dashed, constraint=false, label=\"tau\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const StableARQuiver& Q) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : Q.vertices) {
    nlohmann::ordered_json x;
    x["id"] = v.id;
    x["family"] = v.entry.family == CatalogEntry::Odot ? "odot" : v.entry.family == CatalogEntry::Delta ? "delta" : "club";
    x["arc"] = v.entry.arc.name();
    if (v.entry.family == CatalogEntry::Odot) x["labels"] = {v.entry.i, v.entry.j};
    j["vertices"].push_back(x);
  }
  j["arrows"] = nlohmann::ordered_json::array();
  for (const auto& a : Q.arrows)
    j["arrows"].push_back({{"from", Q.vertices[a.from].id}, {"to", Q.vertices[a.to].id}, {"color", a.color}});
  j["tau"] = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < Q.tau.size(); ++v)
    if (Q.tau[v] >= 0) j["tau"].push_back({{"from", Q.vertices[v].id}, {"to", Q.vertices[Q.tau[v]].id}});
  return j.dump(2) + "\n";
}

namespace {

using MapBasis = std::vector<std::vector<Matrix>>;

std::vector<u32> flatten(const std::vector<Matrix>& f) {
  std::vector<u32> out;
  for (const auto& m : f) out.insert(out.end(), m.data().begin(), m.data().end());
  return out;
}

Matrix as_rows(const std::vector<std::vector<u32>>& rows, std::size_t width) {
  Matrix M(rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < width; ++c) M(r, c) = rows[r][c];
  return M;
}

std::size_t span_rank(const Field& F, const std::vector<std::vector<u32>>& rows, std::size_t width) {
  if (rows.empty() || width == 0) return 0;
  return rank(F, as_rows(rows, width));
}

std::size_t map_width(const Rep& X, const Rep& Y) {
  std::size_t w = 0;
  for (int v = 0; v < X.num_vertices(); ++v) w += std::size_t(X.dim(v)) * Y.dim(v);
  return w;
}

// Maps X -> Y factoring through a projective; these all factor through the
// projective cover of Y.
MapBasis projective_part(const Rep& X, const Rep& Y) {
  const Field& F = X.field();
  ProjectiveCover pc = projective_cover(Y);
  MapBasis out;
  for (const auto& h : hom_basis(X, pc.P)) {
    std::vector<Matrix> c;
    for (std::size_t v = 0; v < h.size(); ++v) c.push_back(mul(F, pc.map.f[v], h[v]));
    out.push_back(std::move(c));
  }
  return out;
}

// Representatives of a basis of span(maps) modulo span(ideal).
MapBasis complement(const Field& F, const MapBasis& ideal, const MapBasis& maps, std::size_t width) {
  std::vector<std::vector<u32>> rows;
  for (const auto& f : ideal) rows.push_back(flatten(f));
  std::size_t r = span_rank(F, rows, width);
  MapBasis out;
  for (const auto& f : maps) {
    rows.push_back(flatten(f));
    const std::size_t r2 = span_rank(F, rows, width);
    if (r2 > r) {
      out.push_back(f);
      r = r2;
    } else {
      rows.pop_back();
    }
  }
  return out;
}

// Non-invertible endomorphisms of an indecomposable: the radical of the trace form.
MapBasis radical_endomorphisms(const Rep& X) {
  const Field& F = X.field();
  auto E = end_basis(X);
  Matrix T(E.size(), E.size());
  for (std::size_t a = 0; a < E.size(); ++a)
    for (std::size_t b = 0; b < E.size(); ++b) {
      u32 tr = 0;
      for (std::size_t v = 0; v < E[a].size(); ++v) {
        Matrix p = mul(F, E[a][v], E[b][v]);
        for (std::size_t i = 0; i < p.rows(); ++i) tr = F.add(tr, p(i, i));
      }
      T(a, b) = tr;
    }
  Matrix K = nullspace(F, T);
  MapBasis out;
  for (std::size_t c = 0; c < K.cols(); ++c) {
    std::vector<Matrix> f;
    for (std::size_t v = 0; v < E[0].size(); ++v) {
      Matrix m(E[0][v].rows(), E[0][v].cols());
      for (std::size_t a = 0; a < E.size(); ++a) axpy(F, m, K(a, c), E[a][v]);
      f.push_back(std::move(m));
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::size_t stable_hom_dim(const Rep& X, const Rep& Y) {
  const std::size_t w = map_width(X, Y);
  std::vector<std::vector<u32>> rows;
  for (const auto& f : projective_part(X, Y)) rows.push_back(flatten(f));
  return hom_dim(X, Y) - span_rank(X.field(), rows, w);
}

std::vector<std::vector<int>> irreducible_dims(const std::vector<Rep>& objects) {
  const int K = static_cast<int>(objects.size());
  std::vector<std::vector<int>> out(K, std::vector<int>(K, 0));
  if (K == 0) return out;
  const Field& F = objects[0].field();
  // rad[a][b]: representatives of the stable radical, proj[a][b]: the projective part
  std::vector<std::vector<MapBasis>> rad(K, std::vector<MapBasis>(K)), proj(K, std::vector<MapBasis>(K));
  for (int a = 0; a < K; ++a)
    for (int b = 0; b < K; ++b) {
      proj[a][b] = projective_part(objects[a], objects[b]);
      const MapBasis all = a == b ? radical_endomorphisms(objects[a]) : hom_basis(objects[a], objects[b]);
      rad[a][b] = complement(F, proj[a][b], all, map_width(objects[a], objects[b]));
    }
  for (int x = 0; x < K; ++x)
    for (int y = 0; y < K; ++y) {
      if (x == y || rad[x][y].empty()) continue;
      const std::size_t w = map_width(objects[x], objects[y]);
      std::vector<std::vector<u32>> rows;
      for (const auto& f : proj[x][y]) rows.push_back(flatten(f));
      for (int z = 0; z < K; ++z)
        for (const auto& f : rad[x][z])
          for (const auto& g : rad[z][y]) {
            std::vector<Matrix> c;
            for (std::size_t v = 0; v < f.size(); ++v) c.push_back(mul(F, g[v], f[v]));
            rows.push_back(flatten(c));
          }
      const std::size_t below = span_rank(F, rows, w);
      for (const auto& f : rad[x][y]) rows.push_back(flatten(f));
      out[x][y] = static_cast<int>(span_rank(F, rows, w) - below);
    }
  return out;
}

}  // namespace cmpgeo
