#include <functional>
#include <set>

#include "doctest.h"
#include "helpers.hpp"

using namespace cmpgeo;
using namespace testing_util;

TEST_CASE("path algebra of linear A3") {
  Algebra A = linear_a3();
  CHECK(A.dim() == 6);
  auto c = cartan_matrix(A);
  CHECK(c[0] == std::vector<int>{1, 1, 1});
  CHECK(c[1] == std::vector<int>{0, 1, 1});
  CHECK(c[2] == std::vector<int>{0, 0, 1});
}

TEST_CASE("loop example with radical square zero") {
  Algebra A = loop_example();
  CHECK(A.dim() == 6);
  CHECK(projective(A, 0).dims() == std::vector<int>{2, 1, 0});
  CHECK(projective(A, 1).dims() == std::vector<int>{0, 1, 1});
  CHECK(projective(A, 2).dims() == std::vector<int>{0, 0, 1});
  CHECK(injective(A, 0).dims() == std::vector<int>{2, 0, 0});
  CHECK(injective(A, 1).dims() == std::vector<int>{1, 1, 0});
}

TEST_CASE("cycles with truncation") {
  CHECK(four_cycle_rad3().dim() == 12);
  CHECK(tail_cycle_example().dim() == 10);
}

TEST_CASE("commutativity relation identifies parallel paths") {
  Presentation P = quiver({"1", "2", "3", "4"}, {{"a", "1", "2"}, {"b", "2", "4"}, {"c", "1", "3"}, {"d", "3", "4"}},
                          {{{1, "a*b"}, {-1, "c*d"}}});
  Algebra A = Algebra::create(P);
  CHECK(A.dim() == 9);
  SparseVec x = reduce_path(A.presentation(), A.basis(), Path{0, {0, 1}});
  SparseVec y = reduce_path(A.presentation(), A.basis(), Path{0, {2, 3}});
  CHECK(x == y);
  CHECK(x.size() == 1);
}

TEST_CASE("relations with terms of different length") {
  // a 3-cycle x y z with x y = (x y z) x y, which forces x y = 0 in the completion
  // and also in the quotient once z x y z = 0 is imposed.
  Presentation P = quiver({"1", "2", "3"}, {{"x", "1", "2"}, {"y", "2", "3"}, {"z", "3", "1"}},
                          {{{1, "y*z"}, {-1, "y*z*x*y*z"}}, {mono("z*x")}, {mono("x*y")}});
  Algebra A = Algebra::create(P);
  // only the arrows and idempotents survive
  CHECK(A.dim() == 6);
}

TEST_CASE("opposite algebra is an involution") {
  Algebra A = loop_example();
  CHECK(A.opposite() != A);
  CHECK(A.opposite().opposite() == A);
  CHECK(A.opposite().dim() == A.dim());
  CHECK(projective(A.opposite(), 0).dims() == injective(A, 0).dims());
}

TEST_CASE("infinite-dimensional quotients are reported") {
  Presentation P = quiver({"1"}, {{"e", "1", "1"}}, {});
  CHECK_THROWS_AS(compute_path_basis(P, 12), Error);
  try {
    compute_path_basis(P, 12);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFiniteDimensional);
  }
}

TEST_CASE("malformed relations are rejected") {
  Presentation P = quiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "1", "3"}, {"d", "3", "3"}},
                          {{{1, "a*b"}, {-1, "c*d*d"}}});
  P.relations.push_back(quiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "1", "3"}, {"d", "3", "3"}},
                               {{{1, "a*b"}, {1, "d*d"}}})
                            .relations[0]);
  try {
    P.validate();
    FAIL("expected InvalidRelation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidRelation);
  }
  Presentation Q = quiver({"1"}, {}, {}, 32001);
  CHECK_THROWS_AS(Q.validate(), Error);
}

TEST_CASE("monomial algebras: basis size equals number of paths avoiding the relations") {
  std::mt19937_64 g(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + g() % 3;
    std::vector<std::string> verts;
    for (int i = 0; i < n; ++i) verts.push_back(std::to_string(i));
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    const int m = 1 + g() % 5;
    for (int a = 0; a < m; ++a)
      arrows.emplace_back("a" + std::to_string(a), verts[g() % n], verts[g() % n]);
    // kill every path of length 3 plus a random subset of length-2 paths
    Presentation base = quiver(verts, arrows, {});
    std::vector<RelSpec> rels;
    std::set<std::vector<int>> forbidden;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        if (base.arrows[a].to != base.arrows[b].from) continue;
        if (g() % 3 == 0) {
          rels.push_back(mono(base.arrows[a].id + "*" + base.arrows[b].id));
          forbidden.insert({a, b});
          continue;
        }
        for (int c = 0; c < m; ++c)
          if (base.arrows[b].to == base.arrows[c].from) {
            rels.push_back(mono(base.arrows[a].id + "*" + base.arrows[b].id + "*" + base.arrows[c].id));
            forbidden.insert({a, b, c});
          }
      }
    Presentation P = quiver(verts, arrows, rels);
    // oracle: count paths with no forbidden factor by depth-first search
    std::size_t count = n;
    std::function<void(std::vector<int>&)> dfs = [&](std::vector<int>& w) {
      ++count;
      int end = P.arrows[w.back()].to;
      for (int c = 0; c < m; ++c) {
        if (P.arrows[c].from != end) continue;
        w.push_back(c);
        bool ok = true;
        for (std::size_t len = 2; len <= 3 && ok; ++len)
          if (w.size() >= len && forbidden.count(std::vector<int>(w.end() - len, w.end()))) ok = false;
        if (ok) dfs(w);
        w.pop_back();
      }
    };
    for (int a = 0; a < m; ++a) {
      std::vector<int> w{a};
      dfs(w);
    }
    CHECK(Algebra::create(P).dim() == count);
  }
}
