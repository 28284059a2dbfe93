#include "doctest.h"
#include "linalg.hpp"

using namespace cmpgeo;

namespace {

// Determinant by plain elimination, independent of rref().
u32 det(const Field& F, Matrix a) {
  const std::size_t n = a.rows();
  u32 d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = F.neg(d);
    }
    d = F.mul(d, a(c, c));
    u32 iv = F.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      u32 f = F.mul(a(i, c), iv);
      for (std::size_t j = c; j < n; ++j) a(i, j) = F.sub(a(i, j), F.mul(f, a(c, j)));
    }
  }
  return d;
}

u32 eval(const Field& F, const Poly& f, u32 x) {
  u32 v = 0;
  for (std::size_t i = f.size(); i-- > 0;) v = F.add(F.mul(v, x), f[i]);
  return v;
}

}  // namespace

TEST_CASE("field arithmetic") {
  Field F{7};
  CHECK(F.mul(3, 5) == 1);
  CHECK(F.inv(3) == 5);
  CHECK(F.from_int(-1) == 6);
  CHECK(F.to_signed(6) == -1);
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(32001));
}

TEST_CASE("nullspace, rank and solve agree on random matrices") {
  Field F{32003};
  std::mt19937_64 g(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t r = 1 + g() % 6, c = 1 + g() % 6, k = g() % 4;
    // low-rank product so that kernels are nontrivial
    Matrix a = mul(F, random_matrix(F, r, k, g), random_matrix(F, k, c, g));
    Matrix n = nullspace(F, a);
    CHECK(rank(F, a) + n.cols() == c);
    CHECK(mul(F, a, n).is_zero());
    Matrix x = random_matrix(F, c, 2, g);
    auto y = solve(F, a, mul(F, a, x));
    REQUIRE(y);
    CHECK(mul(F, a, *y) == mul(F, a, x));
  }
}

TEST_CASE("inconsistent systems are rejected") {
  Field F{5};
  Matrix a(2, 1), b(2, 1);
  a(0, 0) = 1;
  b(1, 0) = 1;
  CHECK_FALSE(solve(F, a, b).has_value());
}

TEST_CASE("characteristic polynomial matches determinant evaluation") {
  Field F{101};
  std::mt19937_64 g(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + g() % 6;
    Matrix a = random_matrix(F, n, n, g);
    if (trial % 3 == 0)
      for (std::size_t i = 0; i < n; ++i) a(n - 1, i) = 0;
    Poly f = char_poly(F, a);
    REQUIRE(f.size() == n + 1);
    CHECK(f.back() == 1);
    for (u32 x : {0u, 1u, 17u, 99u}) {
      Matrix m = scale(F, a, F.neg(1));
      for (std::size_t i = 0; i < n; ++i) m(i, i) = F.add(m(i, i), x);
      CHECK(eval(F, f, x) == det(F, m));
    }
  }
}

TEST_CASE("roots of split polynomials") {
  Field F{32003};
  std::mt19937_64 g(3);
  Poly f{1};
  for (u32 r : {5u, 77u, 31000u}) f = poly_mul(F, f, Poly{F.neg(r), 1});
  f = poly_mul(F, f, Poly{1, 0, 1});  // t^2 + 1 is irreducible mod 32003
  f = poly_mul(F, f, Poly{F.neg(5), 1});
  auto roots = poly_roots(F, f, g);
  CHECK(roots == std::vector<u32>{5, 77, 31000});
}
