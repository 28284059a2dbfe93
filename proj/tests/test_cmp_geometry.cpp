#include <algorithm>
#include <map>
#include <set>

#include "cmp_geometry.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "iso.hpp"
#include "verify.hpp"

using namespace cmpgeo;

namespace {

struct Built {
  TriangulationData D;
  Algebra A;
  explicit Built(const Triangulation& T) : D(triangulation_data(T)), A(algebra_of(D)) {}
};

Built from_fixture(const std::string& name) { return Built(*fixture(name).triangulation); }


}  // namespace

TEST_CASE("label arithmetic") {
  CHECK(syzygy_on_labels(4, 1, 3) == std::pair{2, 1});
  CHECK(tau_tilde(4, 1, 3) == std::pair{2, 4});
  CHECK_THROWS_AS(syzygy_on_labels(4, 1, 2), Error);
  CHECK_THROWS_AS(tau_tilde(5, 2, 2), Error);

  for (int N = 3; N <= 9; ++N)
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) {
        if (!in_odot(N, i, j)) continue;
        auto o1 = syzygy_on_labels(N, i, j);
        REQUIRE(in_odot(N, o1.first, o1.second));
        auto o2 = syzygy_on_labels(N, o1.first, o1.second);
        // Omega^2 shifts both labels down by one
        CHECK(o2.first == (i + N - 2) % N + 1);
        CHECK(o2.second == (j + N - 2) % N + 1);
        CHECK(tau_tilde(N, o2.first, o2.second) == std::pair{i, j});

        std::pair<int, int> t{i, j};
        for (int k = 0; k < N; ++k) t = tau_tilde(N, t.first, t.second);
        CHECK(t == std::pair{i, j});

        std::pair<int, int> o{i, j};
        int steps = 0;
        do {
          o = syzygy_on_labels(N, o.first, o.second);
          ++steps;
        } while (o != std::pair{i, j} && steps <= N * N);
        CHECK(o == std::pair{i, j});
      }
}

TEST_CASE("red and blue moves") {
  const int N = 8;
  // (i, i+2) lies on the boundary row: only the red move leaves it
  CHECK(has_red_move(N, 3, 5));
  CHECK_FALSE(has_blue_move(N, 3, 5));
  CHECK_THROWS_AS(blue_move(N, 3, 5), Error);
  CHECK(has_blue_move(N, 3, 2));
  CHECK_FALSE(has_red_move(N, 3, 2));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (!has_red_move(N, i, j) || !has_blue_move(N, i, j)) continue;
      auto r = red_move(N, i, j), b = blue_move(N, i, j);
      REQUIRE(has_blue_move(N, r.first, r.second));
      REQUIRE(has_red_move(N, b.first, b.second));
      auto rb = blue_move(N, r.first, r.second), br = red_move(N, b.first, b.second);
      CHECK(rb == br);
      CHECK(tau_tilde(N, rb.first, rb.second) == std::pair{i, j});
    }
}

TEST_CASE("punctured square") {
  Built B = from_fixture("punctured-square");
  CmpCatalog C = cmp_catalog(B.D, B.A);
  CHECK(C.structure.type == TriangulationType::I);
  CHECK(C.structure.m == 4);
  CHECK(C.structure.d == 0);
  CHECK(C.labels.labeling_case == 1);
  CHECK(C.entries.size() == 8);
  CHECK(C.expected_size() == 8);

  StableARQuiver Q = build_stable_ar_quiver(C);
  CHECK(Q.vertices.size() == 8);
  CHECK(Q.arrows.size() == 8);
  for (int v = 0; v < 8; ++v) {
    int w = v, order = 0;
    do {
      w = Q.tau[w];
      ++order;
    } while (w != v);
    CHECK(order == 4);
  }
  const std::string dot = to_dot(Q);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("M(r1,b3)") != std::string::npos);
  CHECK(dot.find("dashed") != std::string::npos);
  CHECK(dot == to_dot(build_stable_ar_quiver(cmp_catalog(B.D, B.A))));
}

TEST_CASE("type II and type III fixtures") {
  Built two = from_fixture("type-ii");
  CmpCatalog C2 = cmp_catalog(two.D, two.A);
  CHECK(C2.structure.type == TriangulationType::II);
  CHECK(C2.structure.t == 0);
  CHECK(C2.entries.empty());

  Built three = from_fixture("type-iii");
  CmpCatalog C3 = cmp_catalog(three.D, three.A);
  CHECK(C3.structure.type == TriangulationType::III);
  CHECK(C3.entries.size() == 3);
  CHECK(C3.count(CatalogEntry::Club) == 3);
  StableARQuiver Q = build_stable_ar_quiver(C3);
  CHECK(Q.arrows.empty());
  for (int v = 0; v < 3; ++v) {
    CHECK(Q.tau[v] != v);
    CHECK(Q.tau[Q.tau[Q.tau[v]]] == v);
  }
}

TEST_CASE("ten-gon of type I with two runs of internal sectors") {
  Built B = from_fixture("type-i-ten");
  CmpCatalog C = cmp_catalog(B.D, B.A);
  CHECK(C.structure.m == 6);
  CHECK(C.structure.d == 2);
  CHECK(C.labels.N == 8);
  CHECK(C.labels.labeling_case == 3);
  CHECK(C.count(CatalogEntry::Odot) == 48);
  CHECK(C.entries.size() == 48);

  StableARQuiver Q = build_stable_ar_quiver(C);
  REQUIRE(Q.vertices.size() == 48);
  std::vector<Rep> objects;
  for (const auto& v : Q.vertices) objects.push_back(arc_module(B.D, B.A, v.entry.arc));
  auto dims = irreducible_dims(objects);
  std::map<int, int> out_degree;
  int total = 0;
  for (const auto& a : Q.arrows) {
    CHECK(dims[a.from][a.to] == 1);
    out_degree[a.from]++;
  }
  for (const auto& row : dims)
    for (int x : row) total += x;
  CHECK(total == (int)Q.arrows.size());
  // rows j - i = 3..N-2 of the tube carry two moves, the two boundary rows one
  int two = 0;
  for (const auto& [v, k] : out_degree) two += k == 2;
  CHECK(two == 8 * 4);
  CHECK(Q.arrows.size() == 80);
}

TEST_CASE("labels follow the run structure") {
  for (int n = 3; n <= 7; ++n)
    for (const auto& T : enumerate_triangulations({SurfaceKind::PuncturedDisc, n})) {
      TriangulationData D = triangulation_data(T);
      PunctureStructure P = classify(D);
      if (P.type != TriangulationType::I) continue;
      ColoredLabeling L = colored_labeling(D, P);
      REQUIRE(L.N == P.m + P.d);
      int reds = 0, blues = 0;
      for (int q = 0; q < n; ++q) {
        reds += L.is_red[q];
        blues += L.is_blue[q];
      }
      CHECK(reds == L.N);
      CHECK(blues == L.N);
      for (int q = 0; q < n; ++q) {
        if (!(L.is_red[q] && L.is_blue[q])) continue;
        if (L.labeling_case == 1) CHECK(L.red_at[q] == L.blue_at[q]);
        if (L.labeling_case == 2) CHECK(L.wrap(L.red_at[q] - 1) == L.blue_at[q]);
      }
      if (L.labeling_case != 3) continue;
      for (const auto& run : P.runs) {
        const int first = P.radial_point[run.front()];
        const int last = P.radial_point[(run.back() + 1) % P.m];
        CHECK(L.is_red[first]);
        CHECK_FALSE(L.is_blue[first]);
        CHECK(L.red_at[last] == L.blue_at[last]);
        for (std::size_t k = 1; k < run.size(); ++k) {
          const int mid = P.radial_point[run[k]];
          CHECK(L.wrap(L.red_at[mid] - 1) == L.blue_at[mid]);
        }
      }
      // monochromatic points alternate red, blue along the boundary
      std::vector<char> mono;
      for (int q = 0; q < n; ++q)
        if (L.is_red[q] != L.is_blue[q]) mono.push_back(L.is_red[q] ? 'r' : 'b');
      for (std::size_t k = 0; k < mono.size(); ++k) CHECK(mono[k] != mono[(k + 1) % mono.size()]);
    }
}

TEST_CASE("club arcs are the moves through the triangle around the loop") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& T : enumerate_triangulations({SurfaceKind::PuncturedDisc, n})) {
      Built B(T);
      CmpCatalog C = cmp_catalog(B.D, B.A);
      if (C.structure.type != TriangulationType::III) continue;
      const Surface& S = T.surface();
      const int q = B.D.self_folded;
      const Arc& c = B.D.arcs[C.structure.cbar];
      REQUIRE(c.kind == Arc::Peripheral);
      const int t = c.a == q ? c.b : c.a;
      std::set<Arc> expected = {Arc::peripheral(S.mod(q - 1), t), Arc::peripheral(S.mod(t - 1), q),
                                Arc::peripheral(q, S.mod(q - 1))};
      std::set<Arc> club;
      for (const auto& e : C.entries)
        if (e.family == CatalogEntry::Club) club.insert(e.arc);
      CHECK(club == expected);
    }
}

TEST_CASE("triangle entries have trivial stable maps between them") {
  for (std::string name : {"hexagon-triangle", "type-iii"}) {
    Built B = from_fixture(name);
    CmpCatalog C = cmp_catalog(B.D, B.A);
    REQUIRE(C.entries.size() == 3);
    for (const auto& x : C.entries)
      for (const auto& y : C.entries)
        CHECK(stable_hom_dim(arc_module(B.D, B.A, x.arc), arc_module(B.D, B.A, y.arc)) == (x.arc == y.arc ? 1u : 0u));
  }
  // a type II with one internal triangle
  bool found = false;
  for (const auto& T : enumerate_triangulations({SurfaceKind::PuncturedDisc, 5})) {
    Built B(T);
    if (classify(B.D).type != TriangulationType::II) continue;
    CmpCatalog C = cmp_catalog(B.D, B.A);
    if (C.entries.size() != 3) continue;
    found = true;
    for (const auto& x : C.entries)
      for (const auto& y : C.entries)
        CHECK(stable_hom_dim(arc_module(B.D, B.A, x.arc), arc_module(B.D, B.A, y.arc)) == (x.arc == y.arc ? 1u : 0u));
    break;
  }
  CHECK(found);
}

TEST_CASE("polygons: three arcs per internal triangle") {
  Built fan(Triangulation({SurfaceKind::Polygon, 6}, {Arc::chord(0, 2), Arc::chord(0, 3), Arc::chord(0, 4)}));
  CHECK(cmp_catalog(fan.D, fan.A).entries.empty());

  Built hex = from_fixture("hexagon-triangle");
  CmpCatalog C = cmp_catalog(hex.D, hex.A);
  REQUIRE(C.entries.size() == 3);
  std::set<Arc> arcs;
  for (const auto& e : C.entries) arcs.insert(e.arc);
  CHECK(arcs == std::set<Arc>{Arc::chord(0, 3), Arc::chord(1, 4), Arc::chord(2, 5)});
}

TEST_CASE("syzygy case configurations") {
  const auto& names = omega_case_names();
  CHECK(names.size() == 12);
  std::map<std::string, long> hits;
  for (int n = 3; n <= 5; ++n)
    for (const auto& T : enumerate_triangulations({SurfaceKind::PuncturedDisc, n})) {
      Built B(T);
      CmpCatalog C = cmp_catalog(B.D, B.A);
      if (C.structure.type != TriangulationType::I) continue;
      for (const auto& e : C.entries) {
        Rep M = arc_module(B.D, B.A, e.arc);
        std::string k = omega_case(C.structure, C.labels, e.i, e.j, e.arc, M);
        CHECK(std::find(names.begin(), names.end(), k) != names.end());
        hits[k]++;
      }
    }
  for (std::string k : {"1a", "1b", "1c", "2a", "2b", "3a", "d", "e", "f"}) CHECK(hits[k] > 0);
}

TEST_CASE("geometric and algebraic descriptions agree on small discs and polygons") {
  for (int n = 3; n <= 5; ++n) {
    SweepReport R = verify_sweep({SurfaceKind::PuncturedDisc, n}, {}, 1);
    INFO("n=", n);
    for (const auto& [name, t] : R.checks) {
      INFO(name, " first failure: ", t.failures.empty() ? "" : t.failures[0]);
      CHECK(t.fail == 0);
      CHECK(t.pass > 0);
    }
    CHECK(R.by_type.count("Other") == 0);
  }
  SweepReport P = verify_sweep({SurfaceKind::Polygon, 7}, {}, 2);
  CHECK(P.ok());
  CHECK(P.triangulations == 42);
}

TEST_CASE("type I counts on a ten-gon match the formula") {
  // (m + d)(m + d - 2) + 3t with m = 6, d = 2, t = 0
  Built B = from_fixture("type-i-ten");
  CHECK(cmp_catalog(B.D, B.A).expected_size() == 48);
  CHECK(classify(B.D).t == 0);
  CHECK(off_puncture_internal_triangles(B.D).empty());
}
