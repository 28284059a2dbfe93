#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"

namespace cmpgeo {

struct Arrow {
  std::string id;
  int from = 0;
  int to = 0;
};

// A path is read left to right: arrows[0] is traversed first.
struct Path {
  int start = 0;
  std::vector<int> arrows;

  bool operator<(const Path& o) const {
    return start != o.start ? start < o.start : arrows < o.arrows;
  }
  bool operator==(const Path& o) const { return start == o.start && arrows == o.arrows; }
  std::size_t length() const { return arrows.size(); }
};

struct Term {
  u32 coeff = 1;
  Path path;
};

using Relation = std::vector<Term>;

struct Presentation {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  Field field;

  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& id) const;
  int path_end(const Path& p) const;
  // Reverses every arrow and every relation path; arrow ids are kept.
  Presentation opposite() const;
  // Throws InvalidPresentation / InvalidRelation / InvalidCharacteristic.
  void validate() const;
};

// Sparse vector over basis words; entries sorted by index, no zeros.
using SparseVec = std::vector<std::pair<int, u32>>;

// Standard-monomial basis of kQ/I together with right multiplication by arrows.
struct PathBasis {
  std::vector<Path> words;
  std::vector<int> word_end;
  // block[i][j]: ids of the words from i to j
  std::vector<std::vector<std::vector<int>>> block;
  // position of a word inside its block
  std::vector<int> pos_in_block;
  // right_mult[w][a] = normal form of w*a; empty when zero or not composable
  std::vector<std::vector<SparseVec>> right_mult;
  std::vector<int> trivial;
  // every path of this length lies in the ideal
  int vanishing_length = 0;

  std::size_t dim() const { return words.size(); }
};

PathBasis compute_path_basis(const Presentation& pres, int max_len);
// Normal form of an arbitrary path.
SparseVec reduce_path(const Presentation& pres, const PathBasis& basis, const Path& path);
// x * arrow for an element x of e_i kQ/I.
SparseVec right_multiply(const Field& F, const PathBasis& basis, const SparseVec& x, int arrow);

struct ModuleData {
  std::vector<int> dims;
  std::vector<Matrix> mats;
};

struct AlgebraData {
  Presentation pres[2];
  PathBasis basis[2];
  std::vector<ModuleData> projectives[2];
  std::vector<ModuleData> injectives[2];
};

// Handle to a finite-dimensional bound quiver algebra or its opposite.
// Both sides share one data block, so opposite() is an involution and
// handles compare equal exactly when they denote the same algebra.
class Algebra {
 public:
  Algebra() = default;
  static Algebra create(Presentation pres, int max_len = 64);

  Algebra opposite() const { return Algebra(data_, 1 - side_); }
  int side() const { return side_; }
  bool valid() const { return data_ != nullptr; }

  const Presentation& presentation() const { return data_->pres[side_]; }
  const PathBasis& basis() const { return data_->basis[side_]; }
  const Field& field() const { return data_->pres[side_].field; }
  int num_vertices() const { return static_cast<int>(presentation().vertices.size()); }
  int num_arrows() const { return static_cast<int>(presentation().arrows.size()); }
  const Arrow& arrow(int a) const { return presentation().arrows[a]; }
  std::size_t dim() const { return basis().dim(); }

  const ModuleData& projective_data(int i) const { return data_->projectives[side_][i]; }
  const ModuleData& injective_data(int i) const { return data_->injectives[side_][i]; }

  bool operator==(const Algebra& o) const { return data_ == o.data_ && side_ == o.side_; }
  bool operator!=(const Algebra& o) const { return !(*this == o); }

 private:
  Algebra(std::shared_ptr<const AlgebraData> d, int side) : data_(std::move(d)), side_(side) {}
  std::shared_ptr<const AlgebraData> data_;
  int side_ = 0;
};

// Dimension vector of the algebra as a right module over itself, per vertex pair.
std::vector<std::vector<int>> cartan_matrix(const Algebra& A);

std::string path_to_string(const Presentation& pres, const Path& p);

}  // namespace cmpgeo
