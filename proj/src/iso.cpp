#include "iso.hpp"

#include <algorithm>

namespace cmpgeo {

namespace {

std::uint64_t g_seed = 0x5eed5eedULL;

thread_local std::mt19937_64 t_rng(g_seed);

int max_dim(const Rep& M) {
  int d = 0;
  for (int x : M.dims()) d = std::max(d, x);
  return d;
}

Matrix power(const Field& F, const Matrix& a, int k) {
  Matrix r = Matrix::identity(a.rows());
  Matrix b = a;
  while (k) {
    if (k & 1) r = mul(F, r, b);
    b = mul(F, b, b);
    k >>= 1;
  }
  return r;
}

std::vector<Matrix> combine(const Field& F, const std::vector<std::vector<Matrix>>& basis,
                            const std::vector<u32>& coeffs) {
  std::vector<Matrix> out = basis[0];
  for (auto& m : out) m = scale(F, m, coeffs[0]);
  for (std::size_t b = 1; b < basis.size(); ++b)
    for (std::size_t v = 0; v < out.size(); ++v) axpy(F, out[v], coeffs[b], basis[b][v]);
  return out;
}

std::vector<u32> random_coeffs(const Field& F, std::size_t n) {
  std::uniform_int_distribution<u32> d(0, F.p - 1);
  std::vector<u32> c(n);
  for (auto& x : c) x = d(rng());
  return c;
}

bool all_invertible(const Field& F, const std::vector<Matrix>& f) {
  for (const auto& m : f)
    if (rank(F, m) != m.rows()) return false;
  return true;
}

bool nilpotent(const Field& F, const std::vector<Matrix>& f, int k) {
  for (const auto& m : f)
    if (!power(F, m, k).is_zero()) return false;
  return true;
}

void split(const Rep& M, std::vector<Rep>& out);

}  // namespace

std::mt19937_64& rng() { return t_rng; }

void reseed(std::uint64_t seed) { t_rng.seed(seed); }

std::vector<std::vector<Matrix>> end_basis(const Rep& M) { return hom_basis(M, M); }

std::size_t end_top_dim(const Rep& M) {
  const Field& F = M.field();
  require(static_cast<u64>(M.total_dim()) < F.p, ErrorKind::FieldTooSmall,
          "trace form needs p > dim M = " + std::to_string(M.total_dim()));
  auto E = end_basis(M);
  Matrix T(E.size(), E.size());
  for (std::size_t a = 0; a < E.size(); ++a)
    for (std::size_t b = a; b < E.size(); ++b) {
      u32 tr = 0;
      for (std::size_t v = 0; v < E[a].size(); ++v) {
        Matrix p = mul(F, E[a][v], E[b][v]);
        for (std::size_t i = 0; i < p.rows(); ++i) tr = F.add(tr, p(i, i));
      }
      T(a, b) = T(b, a) = tr;
    }
  return rank(F, T);
}

bool is_isomorphic_indecomposable(const Rep& M, const Rep& N) {
  require(M.algebra() == N.algebra(), ErrorKind::AlgebraMismatch, "comparing modules over different algebras");
  if (M.dims() != N.dims()) return false;
  if (M.is_zero()) return true;
  const Field& F = M.field();
  auto H = hom_basis(M, N);
  if (H.empty()) return false;
  auto G = hom_basis(N, M);
  const int k = max_dim(M);
  for (const auto& h : H)
    for (const auto& g : G) {
      std::vector<Matrix> c;
      for (std::size_t v = 0; v < h.size(); ++v) c.push_back(mul(F, g[v], h[v]));
      if (!nilpotent(F, c, k)) return true;
    }
  return false;
}

bool is_isomorphic(const Rep& M, const Rep& N) {
  require(M.algebra() == N.algebra(), ErrorKind::AlgebraMismatch, "comparing modules over different algebras");
  if (M.dims() != N.dims()) return false;
  if (M.is_zero()) return true;
  const Field& F = M.field();
  auto H = hom_basis(M, N);
  if (H.empty()) return false;
  for (int t = 0; t < kIsoTrials; ++t)
    if (all_invertible(F, combine(F, H, random_coeffs(F, H.size())))) return true;
  if (hom_dim(N, M) != H.size() || hom_dim(M, M) != H.size() || hom_dim(N, N) != H.size())
    return false;
  auto a = decompose(M), b = decompose(N);
  if (a.size() != b.size()) return false;
  std::vector<char> used(b.size(), 0);
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j)
      if (!used[j] && is_isomorphic_indecomposable(x, b[j])) used[j] = found = true;
    if (!found) return false;
  }
  return true;
}

namespace {

void split(const Rep& M, std::vector<Rep>& out) {
  if (M.is_zero()) return;
  const Field& F = M.field();
  auto E = end_basis(M);
  if (E.size() == 1 || end_top_dim(M) == 1) {
    out.push_back(M);
    return;
  }
  const int k = max_dim(M);
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto x = combine(F, E, random_coeffs(F, E.size()));
    Poly f{1};
    for (const auto& m : x)
      if (m.rows()) f = poly_mul(F, f, char_poly(F, m));
    for (u32 c : poly_roots(F, f, rng())) {
      std::vector<Matrix> y = x;
      for (auto& m : y)
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = F.sub(m(i, i), c);
      std::vector<Matrix> yk;
      for (const auto& m : y) yk.push_back(power(F, m, k));
      RepMap p{M, M, yk};
      SubModule ker = kernel(p), im = image(p);
      if (ker.module.is_zero() || im.module.is_zero()) continue;
      split(ker.module, out);
      split(im.module, out);
      return;
    }
  }
  // End(M) / rad is a division algebra larger than the field.
  out.push_back(M);
}

}  // namespace

std::vector<Rep> decompose(const Rep& M) {
  std::vector<Rep> out;
  split(M, out);
  return out;
}

bool is_indecomposable(const Rep& M) {
  if (M.is_zero()) return false;
  if (end_top_dim(M) == 1) return true;
  return decompose(M).size() == 1;
}

std::optional<int> IsoRegistry::find(const Rep& M) const {
  auto it = by_dims_.find(M.dims());
  if (it == by_dims_.end()) return std::nullopt;
  for (int id : it->second)
    if (is_isomorphic_indecomposable(reps_[id], M)) return id;
  return std::nullopt;
}

int IsoRegistry::classify(const Rep& M) {
  if (!reps_.empty())
    require(reps_[0].algebra() == M.algebra(), ErrorKind::AlgebraMismatch, "registry holds another algebra");
  if (auto id = find(M)) return *id;
  int id = static_cast<int>(reps_.size());
  reps_.push_back(M);
  by_dims_[M.dims()].push_back(id);
  return id;
}

std::vector<int> classify_summands(IsoRegistry& reg, const Rep& M) {
  std::vector<int> ids;
  for (const auto& s : decompose(M)) ids.push_back(reg.classify(s));
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace cmpgeo
