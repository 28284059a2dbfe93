#include "rep.hpp"

#include <map>
#include <numeric>

namespace cmpgeo {

Rep::Rep(const Algebra& alg, std::vector<int> dims, std::vector<Matrix> mats)
    : alg_(alg), dims_(std::move(dims)), mats_(std::move(mats)) {
  check_shapes();
  check_relations();
}

Rep Rep::unchecked(const Algebra& alg, std::vector<int> dims, std::vector<Matrix> mats) {
  Rep r;
  r.alg_ = alg;
  r.dims_ = std::move(dims);
  r.mats_ = std::move(mats);
  return r;
}

Rep Rep::zero(const Algebra& alg) {
  std::vector<Matrix> mats;
  for (int a = 0; a < alg.num_arrows(); ++a) mats.emplace_back(0, 0);
  return unchecked(alg, std::vector<int>(alg.num_vertices(), 0), std::move(mats));
}

int Rep::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

void Rep::check_shapes() const {
  require(alg_.valid(), ErrorKind::InvalidRep, "module has no algebra");
  require(static_cast<int>(dims_.size()) == alg_.num_vertices(), ErrorKind::InvalidRep,
          "dimension vector has the wrong length");
  for (int d : dims_) require(d >= 0, ErrorKind::InvalidRep, "negative dimension");
  require(static_cast<int>(mats_.size()) == alg_.num_arrows(), ErrorKind::InvalidRep,
          "wrong number of arrow matrices");
  for (int a = 0; a < alg_.num_arrows(); ++a) {
    const auto& ar = alg_.arrow(a);
    require(mats_[a].rows() == std::size_t(dims_[ar.to]) && mats_[a].cols() == std::size_t(dims_[ar.from]),
            ErrorKind::DimensionMismatch, "matrix of arrow " + ar.id + " has the wrong shape");
  }
}

Matrix Rep::path_matrix(const Path& p) const {
  Matrix x = Matrix::identity(dims_[p.start]);
  for (int a : p.arrows) x = mul(field(), mats_[a], x);
  return x;
}

Matrix Rep::element_matrix(int from, int to, const SparseVec& x) const {
  const auto& words = alg_.basis().words;
  Matrix out(dims_[to], dims_[from]);
  for (auto [w, c] : x) axpy(field(), out, c, path_matrix(words[w]));
  return out;
}

void Rep::check_relations() const {
  const auto& pres = alg_.presentation();
  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    const auto& rel = pres.relations[r];
    const int s = rel[0].path.start, e = pres.path_end(rel[0].path);
    Matrix acc(dims_[e], dims_[s]);
    for (const auto& t : rel) axpy(field(), acc, t.coeff, path_matrix(t.path));
    require(acc.is_zero(), ErrorKind::RelationViolated, "relation " + std::to_string(r) + " fails");
  }
}

namespace {

Rep from_data(const Algebra& A, const ModuleData& d) { return Rep::unchecked(A, d.dims, d.mats); }

std::size_t map_rank(const RepMap& f) {
  std::size_t r = 0;
  for (const auto& m : f.f) r += rank(f.src.field(), m);
  return r;
}

}  // namespace

Rep projective(const Algebra& A, int i) { return from_data(A, A.projective_data(i)); }
Rep injective(const Algebra& A, int i) { return from_data(A, A.injective_data(i)); }

Rep simple(const Algebra& A, int i) {
  std::vector<int> dims(A.num_vertices(), 0);
  dims[i] = 1;
  std::vector<Matrix> mats;
  for (int a = 0; a < A.num_arrows(); ++a) mats.emplace_back(dims[A.arrow(a).to], dims[A.arrow(a).from]);
  return Rep::unchecked(A, dims, std::move(mats));
}

Rep regular(const Algebra& A) {
  std::vector<Rep> parts;
  for (int i = 0; i < A.num_vertices(); ++i) parts.push_back(projective(A, i));
  return direct_sum(A, parts);
}

bool RepMap::is_homomorphism() const {
  if (src.algebra() != tgt.algebra()) return false;
  const Field& F = src.field();
  const Algebra& A = src.algebra();
  if (static_cast<int>(f.size()) != A.num_vertices()) return false;
  for (int v = 0; v < A.num_vertices(); ++v)
    if (f[v].rows() != std::size_t(tgt.dim(v)) || f[v].cols() != std::size_t(src.dim(v))) return false;
  for (int a = 0; a < A.num_arrows(); ++a) {
    const auto& ar = A.arrow(a);
    if (mul(F, tgt.arrow(a), f[ar.from]) != mul(F, f[ar.to], src.arrow(a))) return false;
  }
  return true;
}

bool RepMap::is_zero() const {
  for (const auto& m : f)
    if (!m.is_zero()) return false;
  return true;
}

void RepMap::check() const {
  require(src.algebra() == tgt.algebra(), ErrorKind::AlgebraMismatch, "maps between different algebras");
  require(is_homomorphism(), ErrorKind::NotAHomomorphism, "linear maps do not commute with arrows");
}

RepMap compose(const RepMap& g, const RepMap& f) {
  require(g.src.algebra() == f.tgt.algebra(), ErrorKind::AlgebraMismatch, "compose across algebras");
  require(g.src.dims() == f.tgt.dims(), ErrorKind::DimensionMismatch, "compose: incompatible modules");
  RepMap h{f.src, g.tgt, {}};
  for (std::size_t v = 0; v < f.f.size(); ++v) h.f.push_back(mul(f.src.field(), g.f[v], f.f[v]));
  return h;
}

RepMap identity_map(const Rep& M) {
  RepMap m{M, M, {}};
  for (int v = 0; v < M.num_vertices(); ++v) m.f.push_back(Matrix::identity(M.dim(v)));
  return m;
}

RepMap make_map(const Rep& M, const Rep& N, std::vector<Matrix> f) {
  RepMap m{M, N, std::move(f)};
  m.check();
  return m;
}

Rep direct_sum(const Rep& a, const Rep& b) {
  require(a.algebra() == b.algebra(), ErrorKind::AlgebraMismatch, "direct sum across algebras");
  std::vector<int> dims(a.num_vertices());
  for (int v = 0; v < a.num_vertices(); ++v) dims[v] = a.dim(v) + b.dim(v);
  std::vector<Matrix> mats;
  for (int x = 0; x < a.algebra().num_arrows(); ++x) mats.push_back(block_diag(a.arrow(x), b.arrow(x)));
  return Rep::unchecked(a.algebra(), dims, std::move(mats));
}

Rep direct_sum(const Algebra& A, const std::vector<Rep>& parts) {
  Rep s = Rep::zero(A);
  for (const auto& p : parts) s = direct_sum(s, p);
  return s;
}

std::vector<int> dim_vector(const Rep& M) { return M.dims(); }

SubModule submodule(const Rep& M, const std::vector<Matrix>& bases) {
  const Algebra& A = M.algebra();
  const Field& F = M.field();
  std::vector<int> dims;
  for (const auto& b : bases) dims.push_back(static_cast<int>(b.cols()));
  std::vector<Matrix> mats;
  for (int a = 0; a < A.num_arrows(); ++a) {
    const auto& ar = A.arrow(a);
    auto x = solve(F, bases[ar.to], mul(F, M.arrow(a), bases[ar.from]));
    if (!x) fail(ErrorKind::InvariantViolated, "subspace is not closed under arrow " + ar.id);
    mats.push_back(std::move(*x));
  }
  Rep S = Rep::unchecked(A, dims, std::move(mats));
  return {S, RepMap{S, M, bases}};
}

SubModule kernel(const RepMap& f) {
  std::vector<Matrix> bases;
  for (const auto& m : f.f) bases.push_back(nullspace(f.src.field(), m));
  return submodule(f.src, bases);
}

SubModule image(const RepMap& f) {
  std::vector<Matrix> bases;
  for (const auto& m : f.f) bases.push_back(column_basis(f.src.field(), m));
  return submodule(f.tgt, bases);
}

QuotientModule cokernel(const RepMap& f) {
  const Rep& N = f.tgt;
  const Algebra& A = N.algebra();
  const Field& F = N.field();
  std::vector<Matrix> pi, lift;
  std::vector<int> dims;
  for (int v = 0; v < N.num_vertices(); ++v) {
    Matrix c = column_basis(F, f.f[v]);
    pi.push_back(quotient_projection(F, c, N.dim(v)));
    dims.push_back(static_cast<int>(pi.back().rows()));
    lift.push_back(*solve(F, pi.back(), Matrix::identity(pi.back().rows())));
  }
  std::vector<Matrix> mats;
  for (int a = 0; a < A.num_arrows(); ++a) {
    const auto& ar = A.arrow(a);
    mats.push_back(mul(F, pi[ar.to], mul(F, N.arrow(a), lift[ar.from])));
  }
  Rep Q = Rep::unchecked(A, dims, std::move(mats));
  return {Q, RepMap{N, Q, pi}};
}

SubModule radical(const Rep& M) {
  const Algebra& A = M.algebra();
  std::vector<Matrix> gens(M.num_vertices());
  for (int v = 0; v < M.num_vertices(); ++v) gens[v] = Matrix(M.dim(v), 0);
  for (int a = 0; a < A.num_arrows(); ++a) {
    const int t = A.arrow(a).to;
    gens[t] = hstack(gens[t], M.arrow(a));
  }
  for (auto& g : gens) g = column_basis(M.field(), g);
  return submodule(M, gens);
}

QuotientModule top(const Rep& M) { return cokernel(radical(M).inclusion); }

std::vector<int> top_dims(const Rep& M) { return top(M).module.dims(); }

namespace {

// Images of the words of P(v) under the map sending the generator to m.
std::vector<Matrix> word_images(const Rep& M, int v, const Matrix& m) {
  const Algebra& A = M.algebra();
  const auto& B = A.basis();
  std::vector<Matrix> out;
  for (int u = 0; u < A.num_vertices(); ++u) {
    const auto& blk = B.block[v][u];
    Matrix x(M.dim(u), blk.size());
    for (std::size_t k = 0; k < blk.size(); ++k) {
      Matrix col = mul(M.field(), M.path_matrix(B.words[blk[k]]), m);
      for (int r = 0; r < M.dim(u); ++r) x(r, k) = col(r, 0);
    }
    out.push_back(std::move(x));
  }
  return out;
}

// Offsets of the summands of a direct sum of projectives at every vertex.
std::vector<std::vector<int>> summand_offsets(const Algebra& A, const std::vector<int>& tops) {
  const auto& B = A.basis();
  std::vector<std::vector<int>> off(tops.size(), std::vector<int>(A.num_vertices(), 0));
  for (int u = 0; u < A.num_vertices(); ++u) {
    int acc = 0;
    for (std::size_t s = 0; s < tops.size(); ++s) {
      off[s][u] = acc;
      acc += static_cast<int>(B.block[tops[s]][u].size());
    }
  }
  return off;
}

Rep sum_of_projectives(const Algebra& A, const std::vector<int>& tops) {
  std::vector<Rep> parts;
  for (int v : tops) parts.push_back(projective(A, v));
  return direct_sum(A, parts);
}

}  // namespace

ProjectiveCover projective_cover(const Rep& M) {
  const Algebra& A = M.algebra();
  const Field& F = M.field();
  QuotientModule q = top(M);
  ProjectiveCover pc;
  std::vector<Matrix> lifts;
  for (int v = 0; v < M.num_vertices(); ++v) {
    const Matrix& pi = q.projection.f[v];
    lifts.push_back(*solve(F, pi, Matrix::identity(pi.rows())));
    for (std::size_t k = 0; k < pi.rows(); ++k) pc.tops.push_back(v);
  }
  pc.P = sum_of_projectives(A, pc.tops);
  std::vector<Matrix> f;
  for (int u = 0; u < M.num_vertices(); ++u) f.emplace_back(M.dim(u), 0);
  std::vector<int> used(M.num_vertices(), 0);
  for (int v : pc.tops) {
    auto imgs = word_images(M, v, lifts[v].column(used[v]++));
    for (int u = 0; u < M.num_vertices(); ++u) f[u] = hstack(f[u], imgs[u]);
  }
  pc.map = RepMap{pc.P, M, std::move(f)};
  return pc;
}

Rep syzygy(const Rep& M) { return kernel(projective_cover(M).map).module; }

Rep syzygy(const Rep& M, int k) {
  Rep X = M;
  for (int i = 0; i < k; ++i) X = syzygy(X);
  return X;
}

Rep duality(const Rep& M) {
  std::vector<Matrix> mats;
  for (const auto& m : M.matrices()) mats.push_back(m.transpose());
  return Rep::unchecked(M.algebra().opposite(), M.dims(), std::move(mats));
}

Rep cosyzygy(const Rep& M) { return duality(syzygy(duality(M))); }

Rep cosyzygy(const Rep& M, int k) {
  Rep X = M;
  for (int i = 0; i < k; ++i) X = cosyzygy(X);
  return X;
}

RepMap projective_map(const Algebra& A, const std::vector<int>& src_tops,
                      const std::vector<int>& tgt_tops,
                      const std::vector<std::vector<SparseVec>>& elements) {
  const auto& B = A.basis();
  const Field& F = A.field();
  Rep S = sum_of_projectives(A, src_tops), T = sum_of_projectives(A, tgt_tops);
  auto soff = summand_offsets(A, src_tops), toff = summand_offsets(A, tgt_tops);
  std::vector<Matrix> f;
  for (int u = 0; u < A.num_vertices(); ++u) f.emplace_back(T.dim(u), S.dim(u));
  for (std::size_t s = 0; s < src_tops.size(); ++s) {
    const int i = src_tops[s];
    for (int u = 0; u < A.num_vertices(); ++u)
      for (int w : B.block[i][u]) {
        const int col = soff[s][u] + B.pos_in_block[w];
        for (std::size_t t = 0; t < tgt_tops.size(); ++t) {
          SparseVec x = elements[s][t];
          for (int a : B.words[w].arrows) {
            if (x.empty()) break;
            x = right_multiply(F, B, x, a);
          }
          for (auto [w2, c] : x) f[u](toff[t][u] + B.pos_in_block[w2], col) = F.add(f[u](toff[t][u] + B.pos_in_block[w2], col), c);
        }
      }
  }
  return RepMap{S, T, std::move(f)};
}

namespace {

// Elements describing P_K -> K -> P_X as a map between sums of projectives.
std::vector<std::vector<SparseVec>> map_elements(const ProjectiveCover& cx, const RepMap& incl,
                                                 const ProjectiveCover& ck) {
  const Algebra& A = cx.P.algebra();
  const auto& B = A.basis();
  RepMap d = compose(incl, ck.map);
  auto off1 = summand_offsets(A, ck.tops), off0 = summand_offsets(A, cx.tops);
  std::vector<std::vector<SparseVec>> el(cx.tops.size(), std::vector<SparseVec>(ck.tops.size()));
  for (std::size_t t = 0; t < ck.tops.size(); ++t) {
    const int j = ck.tops[t];
    const int col = off1[t][j] + B.pos_in_block[B.trivial[j]];
    for (std::size_t s = 0; s < cx.tops.size(); ++s) {
      const int i = cx.tops[s];
      SparseVec x;
      for (int w : B.block[i][j]) {
        u32 c = d.f[j](off0[s][j] + B.pos_in_block[w], col);
        if (c) x.emplace_back(w, c);
      }
      std::sort(x.begin(), x.end());
      el[s][t] = std::move(x);
    }
  }
  return el;
}

// Transfers an element of e_i A e_j to e_j A^op e_i.
SparseVec to_opposite(const Algebra& A, const SparseVec& x) {
  const Algebra op = A.opposite();
  const Field& F = A.field();
  std::map<int, u32> acc;
  for (auto [w, c] : x) {
    const Path& p = A.basis().words[w];
    Path q{A.presentation().path_end(p), {p.arrows.rbegin(), p.arrows.rend()}};
    for (auto [w2, c2] : reduce_path(op.presentation(), op.basis(), q)) {
      u32& slot = acc[w2];
      slot = F.add(slot, F.mul(c, c2));
    }
  }
  SparseVec out;
  for (auto [w, c] : acc)
    if (c) out.emplace_back(w, c);
  return out;
}

// Hom(-, A) applied to P_K -> P_X, a map over the opposite algebra.
RepMap dual_of_presentation(const ProjectiveCover& cx, const RepMap& incl, const ProjectiveCover& ck) {
  const Algebra& A = cx.P.algebra();
  auto el = map_elements(cx, incl, ck);
  for (auto& row : el)
    for (auto& x : row) x = to_opposite(A, x);
  return projective_map(A.opposite(), cx.tops, ck.tops, el);
}

}  // namespace

Rep transpose(const Rep& M) {
  ProjectiveCover c0 = projective_cover(M);
  SubModule K = kernel(c0.map);
  ProjectiveCover c1 = projective_cover(K.module);
  return cokernel(dual_of_presentation(c0, K.inclusion, c1)).module;
}

Rep torsionless_cosyzygy(const Rep& M) { return transpose(syzygy(transpose(M))); }

Rep ar_translate(const Rep& M) { return duality(transpose(M)); }

Rep ar_translate_inv(const Rep& M) { return transpose(duality(M)); }

bool is_projective(const Rep& M) {
  return projective_cover(M).P.total_dim() == M.total_dim();
}

bool is_injective(const Rep& M) { return is_projective(duality(M)); }

std::vector<std::vector<Matrix>> hom_basis(const Rep& M, const Rep& N) {
  require(M.algebra() == N.algebra(), ErrorKind::AlgebraMismatch, "Hom across algebras");
  const Algebra& A = M.algebra();
  const Field& F = M.field();
  const int n = A.num_vertices();
  std::vector<int> off(n + 1, 0);
  for (int v = 0; v < n; ++v) off[v + 1] = off[v] + N.dim(v) * M.dim(v);
  const int U = off[n];
  if (U == 0) return {};
  int E = 0;
  for (int a = 0; a < A.num_arrows(); ++a) E += N.dim(A.arrow(a).to) * M.dim(A.arrow(a).from);
  Matrix sys(E, U);
  int row = 0;
  for (int a = 0; a < A.num_arrows(); ++a) {
    const int u = A.arrow(a).from, w = A.arrow(a).to;
    const Matrix& Na = N.arrow(a);
    const Matrix& Ma = M.arrow(a);
    // (N_a f_u - f_w M_a)[r][c] = 0
    for (int r = 0; r < N.dim(w); ++r)
      for (int c = 0; c < M.dim(u); ++c, ++row) {
        for (int k = 0; k < N.dim(u); ++k)
          if (Na(r, k)) sys(row, off[u] + k * M.dim(u) + c) = F.add(sys(row, off[u] + k * M.dim(u) + c), Na(r, k));
        for (int k = 0; k < M.dim(w); ++k)
          if (Ma(k, c)) sys(row, off[w] + r * M.dim(w) + k) = F.sub(sys(row, off[w] + r * M.dim(w) + k), Ma(k, c));
      }
  }
  Matrix ker = nullspace(F, sys);
  std::vector<std::vector<Matrix>> out;
  for (std::size_t b = 0; b < ker.cols(); ++b) {
    std::vector<Matrix> f;
    for (int v = 0; v < n; ++v) {
      Matrix m(N.dim(v), M.dim(v));
      for (int r = 0; r < N.dim(v); ++r)
        for (int c = 0; c < M.dim(v); ++c) m(r, c) = ker(off[v] + r * M.dim(v) + c, b);
      f.push_back(std::move(m));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t hom_dim(const Rep& M, const Rep& N) { return hom_basis(M, N).size(); }

std::size_t ext_dim_against_algebra(const Rep& M, int i) {
  require(i >= 1, ErrorKind::InvalidRep, "Ext degree must be positive");
  Rep X = syzygy(M, i - 1);
  ProjectiveCover c0 = projective_cover(X);
  SubModule K = kernel(c0.map);
  ProjectiveCover c1 = projective_cover(K.module);
  SubModule K2 = kernel(c1.map);
  ProjectiveCover c2 = projective_cover(K2.module);
  RepMap d1 = dual_of_presentation(c0, K.inclusion, c1);
  RepMap d2 = dual_of_presentation(c1, K2.inclusion, c2);
  const std::size_t total = static_cast<std::size_t>(d1.tgt.total_dim());
  return total - map_rank(d1) - map_rank(d2);
}

}  // namespace cmpgeo
