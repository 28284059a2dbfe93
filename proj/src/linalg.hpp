#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cmpgeo {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Prime field GF(p). Elements are kept reduced in [0, p).
struct Field {
  u32 p = 32003;

  u32 add(u32 a, u32 b) const {
    u32 s = a + b;
    return s >= p ? s - p : s;
  }
  u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p - b; }
  u32 neg(u32 a) const { return a ? p - a : 0; }
  u32 mul(u32 a, u32 b) const { return static_cast<u32>(u64(a) * b % p); }
  u32 pow(u32 a, u64 e) const;
  u32 inv(u32 a) const;
  u32 from_int(long long v) const;
  // Signed representative in (-p/2, p/2], used when printing.
  long long to_signed(u32 a) const { return a > p / 2 ? (long long)a - p : a; }

  bool operator==(const Field& o) const { return p == o.p; }
};

bool is_prime(u64 n);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  u32& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  u32 operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  u32* row(std::size_t i) { return a_.data() + i * c_; }
  const u32* row(std::size_t i) const { return a_.data() + i * c_; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix column(std::size_t j) const;
  Matrix columns(std::size_t first, std::size_t count) const;
  Matrix rows_range(std::size_t first, std::size_t count) const;

  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  const std::vector<u32>& data() const { return a_; }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<u32> a_;
};

Matrix mul(const Field& F, const Matrix& a, const Matrix& b);
Matrix add(const Field& F, const Matrix& a, const Matrix& b);
Matrix sub(const Field& F, const Matrix& a, const Matrix& b);
Matrix scale(const Field& F, const Matrix& a, u32 s);
// a + s*b, in place.
void axpy(const Field& F, Matrix& a, u32 s, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);

// In-place reduced row echelon form; returns pivot columns (one per nonzero row).
std::vector<std::size_t> rref(const Field& F, Matrix& a);
std::size_t rank(const Field& F, Matrix a);
// Columns form a basis of {x : a x = 0}.
Matrix nullspace(const Field& F, const Matrix& a);
// Columns of a forming a basis of its column space.
Matrix column_basis(const Field& F, const Matrix& a);
// Some x with a x = b, if one exists.
std::optional<Matrix> solve(const Field& F, const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Field& F, const Matrix& a);
// Full row rank q with ker q = column space of c (c has `ambient` rows).
Matrix quotient_projection(const Field& F, const Matrix& c, std::size_t ambient);

Matrix random_matrix(const Field& F, std::size_t rows, std::size_t cols, std::mt19937_64& rng);

// Dense polynomials over GF(p), coefficient i is the coefficient of t^i.
using Poly = std::vector<u32>;

Poly char_poly(const Field& F, const Matrix& a);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
// Roots of f in GF(p), without multiplicity.
std::vector<u32> poly_roots(const Field& F, const Poly& f, std::mt19937_64& rng);

std::string to_string(const Field& F, const Matrix& a);

}  // namespace cmpgeo
