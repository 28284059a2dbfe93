#include "linalg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace cmpgeo {

u32 Field::pow(u32 a, u64 e) const {
  u64 r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<u32>(r);
}

u32 Field::inv(u32 a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow(a, p - 2);
}

u32 Field::from_int(long long v) const {
  long long m = v % static_cast<long long>(p);
  if (m < 0) m += p;
  return static_cast<u32>(m);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](u32 x) { return x == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::column(std::size_t j) const { return columns(j, 1); }

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
  Matrix m(r_, count);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  return m;
}

Matrix Matrix::rows_range(std::size_t first, std::size_t count) const {
  Matrix m(count, c_);
  std::copy(a_.begin() + first * c_, a_.begin() + (first + count) * c_, m.a_.begin());
  return m;
}

Matrix mul(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in mul");
  Matrix c(a.rows(), b.cols());
  std::vector<u64> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    const u32* ai = a.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      u64 x = ai[k];
      if (!x) continue;
      const u32* bk = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        acc[j] += x * bk[j];
        if (acc[j] >= (u64(1) << 62)) acc[j] %= F.p;
      }
    }
    u32* ci = c.row(i);
    for (std::size_t j = 0; j < b.cols(); ++j) ci[j] = static_cast<u32>(acc[j] % F.p);
  }
  return c;
}

Matrix add(const Field& F, const Matrix& a, const Matrix& b) {
  Matrix c = a;
  axpy(F, c, 1, b);
  return c;
}

Matrix sub(const Field& F, const Matrix& a, const Matrix& b) {
  Matrix c = a;
  axpy(F, c, F.neg(1), b);
  return c;
}

Matrix scale(const Field& F, const Matrix& a, u32 s) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.mul(a(i, j), s);
  return c;
}

void axpy(const Field& F, Matrix& a, u32 s, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch in axpy");
  if (s == 0) return;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = F.add(a(i, j), F.mul(s, b(i, j)));
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i), a.row(i) + a.cols(), c.row(i));
    std::copy(b.row(i), b.row(i) + b.cols(), c.row(i) + a.cols());
  }
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) std::copy(a.row(i), a.row(i) + a.cols(), c.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i)
    std::copy(b.row(i), b.row(i) + b.cols(), c.row(a.rows() + i));
  return c;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

std::vector<std::size_t> rref(const Field& F, Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t n = a.cols();
  for (std::size_t c = 0; c < n && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = c; j < n; ++j) std::swap(a(piv, j), a(r, j));
    u32 iv = F.inv(a(r, c));
    u32* rr = a.row(r);
    for (std::size_t j = c; j < n; ++j) rr[j] = F.mul(rr[j], iv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      u32 f = a(i, c);
      if (!f) continue;
      u32 nf = F.neg(f);
      u32* ri = a.row(i);
      for (std::size_t j = c; j < n; ++j)
        if (rr[j]) ri[j] = static_cast<u32>((ri[j] + u64(nf) * rr[j]) % F.p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Field& F, Matrix a) { return rref(F, a).size(); }

Matrix nullspace(const Field& F, const Matrix& a) {
  Matrix r = a;
  auto piv = rref(F, r);
  std::vector<char> is_piv(a.cols(), 0);
  for (auto c : piv) is_piv[c] = 1;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_piv[c]) free.push_back(c);
  Matrix k(a.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) k(piv[i], f) = F.neg(r(i, free[f]));
  }
  return k;
}

Matrix column_basis(const Field& F, const Matrix& a) {
  Matrix r = a;
  auto piv = rref(F, r);
  Matrix b(a.rows(), piv.size());
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (std::size_t i = 0; i < a.rows(); ++i) b(i, k) = a(i, piv[k]);
  return b;
}

std::optional<Matrix> solve(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  Matrix aug = hstack(a, b);
  auto piv = rref(F, aug);
  Matrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(piv[i], j) = aug(i, a.cols() + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Field& F, const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(F, a) != a.rows()) return std::nullopt;
  return solve(F, a, Matrix::identity(a.rows()));
}

Matrix quotient_projection(const Field& F, const Matrix& c, std::size_t ambient) {
  if (c.cols() == 0) return Matrix::identity(ambient);
  return nullspace(F, c.transpose()).transpose();
}

Matrix random_matrix(const Field& F, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<u32> d(0, F.p - 1);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

namespace {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(const Field& F, Poly a, const Poly& m) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  u32 lead_inv = F.inv(m.back());
  while (a.size() > dm) {
    u32 c = F.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, m[i]));
    trim(a);
  }
  return a;
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u32 iv = F.inv(a.back());
    for (auto& x : a) x = F.mul(x, iv);
  }
  return a;
}

Poly poly_powmod(const Field& F, Poly base, u64 e, const Poly& m) {
  Poly r{1};
  base = poly_mod(F, base, m);
  while (e) {
    if (e & 1) r = poly_mod(F, poly_mul(F, r, base), m);
    base = poly_mod(F, poly_mul(F, base, base), m);
    e >>= 1;
  }
  return r;
}

void split_roots(const Field& F, const Poly& g, std::vector<u32>& out, std::mt19937_64& rng) {
  // g is monic, squarefree and a product of linear factors.
  const std::size_t d = g.size() - 1;
  if (d == 0) return;
  if (d == 1) {
    out.push_back(F.neg(g[0]));
    return;
  }
  if (F.p == 2) {
    for (u32 c = 0; c < 2; ++c) {
      u32 v = 0;
      for (std::size_t i = g.size(); i-- > 0;) v = F.add(F.mul(v, c), g[i]);
      if (!v) out.push_back(c);
    }
    return;
  }
  std::uniform_int_distribution<u32> dist(0, F.p - 1);
  for (;;) {
    Poly h{dist(rng), 1};
    Poly w = poly_powmod(F, h, (F.p - 1) / 2, g);
    if (w.empty()) w = {0};
    w[0] = F.sub(w[0], 1);
    Poly f = poly_gcd(F, g, w);
    std::size_t df = f.empty() ? 0 : f.size() - 1;
    if (df == 0 || df == d) continue;
    split_roots(F, f, out, rng);
    // g / f by long division.
    Poly q(d - df + 1, 0), r = g;
    for (std::size_t k = d - df + 1; k-- > 0;) {
      q[k] = r[k + df];
      for (std::size_t i = 0; i <= df; ++i) r[k + i] = F.sub(r[k + i], F.mul(q[k], f[i]));
    }
    split_roots(F, q, out, rng);
    return;
  }
}

}  // namespace

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  return c;
}

Poly char_poly(const Field& F, const Matrix& m) {
  // Hessenberg reduction followed by the standard recurrence.
  const std::size_t n = m.rows();
  Matrix h = m;
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    std::size_t piv = k + 1;
    while (piv < n && h(piv, k) == 0) ++piv;
    if (piv == n) continue;
    if (piv != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(k + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, k + 1));
    }
    u32 iv = F.inv(h(k + 1, k));
    for (std::size_t i = k + 2; i < n; ++i) {
      u32 f = F.mul(h(i, k), iv);
      if (!f) continue;
      for (std::size_t j = 0; j < n; ++j) h(i, j) = F.sub(h(i, j), F.mul(f, h(k + 1, j)));
      for (std::size_t j = 0; j < n; ++j) h(j, k + 1) = F.add(h(j, k + 1), F.mul(f, h(j, i)));
    }
  }
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly t = poly_mul(F, p[k - 1], Poly{F.neg(h(k - 1, k - 1)), 1});
    u32 prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod = F.mul(prod, h(k - i, k - i - 1));
      u32 c = F.mul(prod, h(k - i - 1, k - 1));
      if (!c) continue;
      const Poly& q = p[k - i - 1];
      for (std::size_t j = 0; j < q.size(); ++j) t[j] = F.sub(t[j], F.mul(c, q[j]));
    }
    p[k] = t;
  }
  return p[n];
}

std::vector<u32> poly_roots(const Field& F, const Poly& f0, std::mt19937_64& rng) {
  Poly f = f0;
  trim(f);
  std::vector<u32> out;
  if (f.size() <= 1) return out;
  u32 iv = F.inv(f.back());
  for (auto& x : f) x = F.mul(x, iv);
  // gcd(f, t^p - t) collects the distinct linear factors.
  Poly tp = poly_powmod(F, Poly{0, 1}, F.p, f);
  if (tp.size() < 2) tp.resize(2, 0);
  tp[1] = F.sub(tp[1], 1);
  Poly g = poly_gcd(F, f, tp);
  if (g.size() <= 1) return out;
  split_roots(F, g, out, rng);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Field& F, const Matrix& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " " : "") << F.to_signed(a(i, j));
    os << "]\n";
  }
  return os.str();
}

}  // namespace cmpgeo
