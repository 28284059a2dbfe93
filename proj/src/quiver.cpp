#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "surface.hpp"

namespace cmpgeo {

namespace {

// Inside a triangle with sides s0, s1, s2 listed clockwise, each side gets an
// arrow to the side before it. Fixed by the projective calibration in the tests.
constexpr bool kArrowToPreviousSide = true;

int find_arc(const std::vector<Arc>& arcs, const Arc& g) {
  for (std::size_t i = 0; i < arcs.size(); ++i)
    if (arcs[i] == g) return static_cast<int>(i);
  return -1;
}

void polygon_triangles(TriangulationData& D) {
  const int n = D.T.surface().n;
  auto side = [&](int u, int v) -> int {
    if (v == u + 1 || (u == 0 && v == n - 1)) return -1;
    int i = find_arc(D.arcs, Arc::chord(u, v));
    return i >= 0 ? i : -2;
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int a = side(u, v);
      if (a == -2) continue;
      for (int w = v + 1; w < n; ++w) {
        const int b = side(v, w), c = side(u, w);
        if (b == -2 || c == -2) continue;
        D.triangles.push_back({{a, b, c}, false, {u, v, w}});
      }
    }
  require(static_cast<int>(D.triangles.size()) == n - 2, ErrorKind::InvariantViolated,
          "polygon triangulation has the wrong number of triangles");
}

void punctured_triangles(TriangulationData& D) {
  const Surface& S = D.T.surface();
  const int n = S.n;
  // side between consecutive corners u -> v of a triangle away from the puncture
  auto side = [&](int u, int v) -> int {
    if (v == S.mod(u + 1)) return -1;
    if (u == v) return D.folded_loop;
    int i = find_arc(D.arcs, Arc::peripheral(u, v));
    return i >= 0 ? i : -2;
  };
  std::vector<int> radial_points;
  for (const auto& g : D.arcs)
    if (g.kind == Arc::Radial && g.tag == Tag::Plain) radial_points.push_back(g.a);
  std::sort(radial_points.begin(), radial_points.end());

  if (D.self_folded >= 0) {
    D.triangles.push_back({{D.folded_loop, D.folded_radial, D.folded_radial}, true, {D.self_folded, -1, -1}});
  } else {
    const int m = static_cast<int>(radial_points.size());
    if (m < 2)
      fail(ErrorKind::UnsupportedTaggedConfiguration, "fewer than two arcs at the puncture");
    for (int k = 0; k < m; ++k) {
      const int a = radial_points[k], b = radial_points[(k + 1) % m];
      int third = side(a, b);
      require(third != -2, ErrorKind::InvariantViolated, "puncture triangle without a third side");
      D.triangles.push_back({{find_arc(D.arcs, Arc::radial(a)), third, find_arc(D.arcs, Arc::radial(b))}, true, {a, b, -1}});
    }
  }
  // the triangle on the cut-off side of each peripheral arc and of the loop
  for (int i = 0; i < static_cast<int>(D.arcs.size()); ++i) {
    const Arc& g = D.arcs[i];
    int q, s;
    if (g.kind == Arc::Peripheral) {
      q = g.a;
      s = g.b;
    } else if (i == D.folded_loop) {
      q = s = g.a;
    } else {
      continue;
    }
    int found = 0;
    for (int t = S.mod(q + 1); t != s; t = S.mod(t + 1)) {
      const int x = side(q, t), y = side(t, s);
      if (x != -2 && y != -2) {
        D.triangles.push_back({{x, y, i}, false, {q, t, s}});
        ++found;
      }
    }
    require(found == 1, ErrorKind::InvariantViolated, "arc " + g.name() + " bounds " +
                                                          std::to_string(found) + " triangles on its cut-off side");
  }
  require(static_cast<int>(D.triangles.size()) == n, ErrorKind::InvariantViolated,
          "punctured triangulation has the wrong number of triangles");
}

void build_exchange(TriangulationData& D) {
  const int N = static_cast<int>(D.arcs.size());
  D.exchange.assign(N, std::vector<int>(N, 0));
  for (const auto& t : D.triangles) {
    if (D.self_folded >= 0 && t.at_puncture) continue;  // the self-folded triangle carries no arrows
    for (int i = 0; i < 3; ++i) {
      const int x = t.side[i];
      const int y = kArrowToPreviousSide ? t.side[(i + 2) % 3] : t.side[(i + 1) % 3];
      if (x < 0 || y < 0 || x == y) continue;
      ++D.exchange[x][y];
      --D.exchange[y][x];
    }
  }
  if (D.self_folded >= 0) {
    const int R = D.folded_radial, L = D.folded_loop;
    for (int j = 0; j < N; ++j) {
      if (j == R || j == L) continue;
      D.exchange[R][j] = D.exchange[L][j];
      D.exchange[j][R] = D.exchange[j][L];
    }
  }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (std::abs(D.exchange[i][j]) > 1)
        fail(ErrorKind::UnsupportedTaggedConfiguration,
             "double arrow between " + D.arcs[i].name() + " and " + D.arcs[j].name());
}

// Chordless oriented cycles, each listed as arrows starting at its smallest vertex.
std::vector<std::vector<int>> chordless_cycles(const Presentation& P,
                                               const std::vector<std::vector<int>>& between) {
  const int N = static_cast<int>(P.vertices.size());
  std::vector<std::vector<int>> out;
  std::vector<int> path_vertices, path_arrows;
  std::vector<char> on_path(N, 0);
  std::function<void(int, int)> dfs = [&](int start, int v) {
    for (int w = start; w < N; ++w) {
      const int a = between[v][w];
      if (a < 0) continue;
      if (w == start) {
        path_arrows.push_back(a);
        const std::set<int> vs(path_vertices.begin(), path_vertices.end());
        int inside = 0;
        for (const auto& arr : P.arrows) inside += vs.count(arr.from) && vs.count(arr.to);
        if (inside == static_cast<int>(path_vertices.size())) out.push_back(path_arrows);
        path_arrows.pop_back();
        continue;
      }
      if (on_path[w]) continue;
      on_path[w] = 1;
      path_vertices.push_back(w);
      path_arrows.push_back(a);
      dfs(start, w);
      path_arrows.pop_back();
      path_vertices.pop_back();
      on_path[w] = 0;
    }
  };
  for (int s = 0; s < N; ++s) {
    path_vertices = {s};
    on_path.assign(N, 0);
    on_path[s] = 1;
    dfs(s, s);
  }
  return out;
}

void build_presentation(TriangulationData& D, u32 p) {
  const int N = static_cast<int>(D.arcs.size());
  Presentation& P = D.pres;
  P.field = Field{p};
  for (const auto& g : D.T.arcs()) P.vertices.push_back(g.name());
  D.arrow_between.assign(N, std::vector<int>(N, -1));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (D.exchange[i][j] > 0) {
        D.arrow_between[i][j] = static_cast<int>(P.arrows.size());
        P.arrows.push_back({P.vertices[i] + "->" + P.vertices[j], i, j});
      }
  D.cycles = chordless_cycles(P, D.arrow_between);

  // Alternate signs across cycles sharing an arrow, so that every two-term
  // relation is a difference of paths.
  const int C = static_cast<int>(D.cycles.size());
  std::vector<std::vector<int>> cycles_of(P.arrows.size());
  for (int c = 0; c < C; ++c)
    for (int a : D.cycles[c]) cycles_of[a].push_back(c);
  D.cycle_sign.assign(C, 0);
  for (int c0 = 0; c0 < C; ++c0) {
    if (D.cycle_sign[c0]) continue;
    D.cycle_sign[c0] = 1;
    std::vector<int> stack{c0};
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int a : D.cycles[c])
        for (int d : cycles_of[a]) {
          if (d == c) continue;
          if (!D.cycle_sign[d]) {
            D.cycle_sign[d] = -D.cycle_sign[c];
            stack.push_back(d);
          } else if (D.cycle_sign[d] == D.cycle_sign[c]) {
            fail(ErrorKind::UnsupportedTaggedConfiguration, "potential signs cannot alternate");
          }
        }
    }
  }
  for (int a = 0; a < static_cast<int>(P.arrows.size()); ++a) {
    if (cycles_of[a].empty()) continue;
    Relation rel;
    for (int c : cycles_of[a]) {
      const auto& cyc = D.cycles[c];
      const auto pos = std::find(cyc.begin(), cyc.end(), a) - cyc.begin();
      Term t;
      t.coeff = D.cycle_sign[c] > 0 ? 1u : p - 1;
      t.path.start = P.arrows[a].to;
      for (std::size_t k = 1; k < cyc.size(); ++k) t.path.arrows.push_back(cyc[(pos + k) % cyc.size()]);
      rel.push_back(std::move(t));
    }
    P.relations.push_back(std::move(rel));
  }
  P.validate();
}

}  // namespace

TriangulationData triangulation_data(const Triangulation& T, u32 p) {
  TriangulationData D;
  D.T = T;
  D.arcs = T.arcs();
  if (T.surface().punctured()) {
    bool all_notched = true;
    for (const auto& g : D.arcs)
      if (g.kind == Arc::Radial && g.tag == Tag::Plain) all_notched = false;
    if (all_notched) {
      D.flipped = true;
      for (auto& g : D.arcs) g = flip_tag(g);
    }
    for (int i = 0; i < static_cast<int>(D.arcs.size()); ++i)
      if (D.arcs[i].notched()) {
        const int j = find_arc(D.arcs, Arc::radial(D.arcs[i].a, Tag::Plain));
        if (j < 0) fail(ErrorKind::UnsupportedTaggedConfiguration, "notched arc without its plain partner");
        require(D.self_folded < 0, ErrorKind::UnsupportedTaggedConfiguration, "two self-folded triangles");
        D.self_folded = D.arcs[i].a;
        D.folded_radial = j;
        D.folded_loop = i;
      }
    punctured_triangles(D);
  } else {
    polygon_triangles(D);
  }
  build_exchange(D);
  build_presentation(D, p);
  return D;
}

Algebra algebra_of(const TriangulationData& D, int max_len) { return Algebra::create(D.pres, max_len); }

}  // namespace cmpgeo
