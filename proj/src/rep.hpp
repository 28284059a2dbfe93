#pragma once

#include <random>
#include <vector>

#include "algebra.hpp"

namespace cmpgeo {

// Right module over a bound quiver algebra: a space per vertex and a linear
// map per arrow (target dim x source dim). Paths act left to right.
class Rep {
 public:
  Rep() = default;
  // Checks shapes and every relation.
  Rep(const Algebra& alg, std::vector<int> dims, std::vector<Matrix> mats);
  static Rep unchecked(const Algebra& alg, std::vector<int> dims, std::vector<Matrix> mats);
  static Rep zero(const Algebra& alg);

  const Algebra& algebra() const { return alg_; }
  const Field& field() const { return alg_.field(); }
  int num_vertices() const { return static_cast<int>(dims_.size()); }
  int dim(int v) const { return dims_[v]; }
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  const Matrix& arrow(int a) const { return mats_[a]; }
  const std::vector<Matrix>& matrices() const { return mats_; }
  Matrix path_matrix(const Path& p) const;
  // Action of an element of e_from A e_to, as a map M_from -> M_to.
  Matrix element_matrix(int from, int to, const SparseVec& x) const;

  void check_shapes() const;
  void check_relations() const;

  bool operator==(const Rep& o) const {
    return alg_ == o.alg_ && dims_ == o.dims_ && mats_ == o.mats_;
  }

 private:
  Algebra alg_;
  std::vector<int> dims_;
  std::vector<Matrix> mats_;
};

Rep projective(const Algebra& A, int i);
Rep injective(const Algebra& A, int i);
Rep simple(const Algebra& A, int i);
// The algebra as a right module over itself.
Rep regular(const Algebra& A);

// Module homomorphism; f[v] is tgt.dim(v) x src.dim(v).
struct RepMap {
  Rep src, tgt;
  std::vector<Matrix> f;

  bool is_homomorphism() const;
  bool is_zero() const;
  // Throws NotAHomomorphism unless the squares commute.
  void check() const;
};

RepMap compose(const RepMap& g, const RepMap& f);
RepMap identity_map(const Rep& M);
// Map M -> N from per-vertex matrices listed in hom_basis order.
RepMap make_map(const Rep& M, const Rep& N, std::vector<Matrix> f);

Rep direct_sum(const Rep& a, const Rep& b);
Rep direct_sum(const Algebra& A, const std::vector<Rep>& parts);
std::vector<int> dim_vector(const Rep& M);

struct SubModule {
  Rep module;
  RepMap inclusion;
};
struct QuotientModule {
  Rep module;
  RepMap projection;
};

SubModule kernel(const RepMap& f);
SubModule image(const RepMap& f);
QuotientModule cokernel(const RepMap& f);
// Submodule of M with the given column bases per vertex (must be closed).
SubModule submodule(const Rep& M, const std::vector<Matrix>& bases);
SubModule radical(const Rep& M);
QuotientModule top(const Rep& M);
std::vector<int> top_dims(const Rep& M);

struct ProjectiveCover {
  Rep P;
  std::vector<int> tops;  // vertex of each indecomposable summand, in order
  RepMap map;             // P -> M, surjective, kernel in rad P
};

ProjectiveCover projective_cover(const Rep& M);
Rep syzygy(const Rep& M);
Rep syzygy(const Rep& M, int k);
// Vector-space dual, a module over the opposite algebra.
Rep duality(const Rep& M);
Rep cosyzygy(const Rep& M);
Rep cosyzygy(const Rep& M, int k);
// Tr Omega Tr M: the inverse of syzygy on torsionless modules, up to
// projective summands. Differs from cosyzygy unless the algebra is selfinjective.
Rep torsionless_cosyzygy(const Rep& M);
// Auslander-Bridger transpose, a module over the opposite algebra.
Rep transpose(const Rep& M);
Rep ar_translate(const Rep& M);
Rep ar_translate_inv(const Rep& M);

bool is_projective(const Rep& M);
bool is_injective(const Rep& M);

// Map between direct sums of indecomposable projectives; elements[s][t] is the
// image of the generator of source summand s in target summand t, an element
// of e_{tgt[t]} A e_{src[s]}.
RepMap projective_map(const Algebra& A, const std::vector<int>& src_tops,
                      const std::vector<int>& tgt_tops,
                      const std::vector<std::vector<SparseVec>>& elements);

// Basis of Hom(M, N); each entry lists the per-vertex matrices.
std::vector<std::vector<Matrix>> hom_basis(const Rep& M, const Rep& N);
std::size_t hom_dim(const Rep& M, const Rep& N);

// dim Ext^i(M, A) for i >= 1, computed from a minimal projective resolution.
std::size_t ext_dim_against_algebra(const Rep& M, int i);

}  // namespace cmpgeo
