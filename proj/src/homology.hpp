#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iso.hpp"
#include "rep.hpp"

namespace cmpgeo {

struct Dimension {
  enum Kind { Finite, Infinite, Undetermined } kind = Finite;
  int value = 0;

  static Dimension finite(int v) { return {Finite, v}; }
  static Dimension infinite() { return {Infinite, 0}; }
  static Dimension undetermined() { return {Undetermined, 0}; }
  bool is_finite() const { return kind == Finite; }
  std::string str() const;
  bool operator==(const Dimension& o) const { return kind == o.kind && (kind != Finite || value == o.value); }
};

struct GorensteinReport {
  Dimension d_left;   // max proj.dim of the indecomposable injectives
  Dimension d_right;  // max inj.dim of the indecomposable projectives
  enum Verdict { Gorenstein, NotGorenstein, Undetermined } verdict = Undetermined;
  int d = -1;  // valid when Gorenstein
};

struct PhiPsi {
  int phi = 0;
  int psi = 0;
  // true when the syzygy orbit was seen to repeat, so the ranks are final
  bool exact = false;
  std::vector<int> ranks;  // rank of L^t, t = 0, 1, ...
};

struct Characterization {
  bool projective = false, injective = false;
  bool a1 = false, a2 = false, a3 = false, a4 = false;
  bool b1 = false, b2 = false, b3 = false, b4 = false;
  bool a_consistent() const { return a1 == a2 && a2 == a3 && a3 == a4; }
  bool b_consistent() const { return b1 == b2 && b2 == b3 && b3 == b4; }
};

struct SelfinjectiveReport {
  bool selfinjective = false;
  std::vector<int> nakayama;  // P(i) is isomorphic to I(nakayama[i])
  int order = 0;              // order of the permutation
};

// Homological computations over a fixed algebra, with memoised syzygy orbits.
// Single-threaded: give each worker its own instance.
class Homology {
 public:
  explicit Homology(Algebra A, int orbit_bound = 0);

  const Algebra& algebra() const { return A_; }
  IsoRegistry& registry(int side = 0) { return side_[side].reg; }

  Dimension proj_dim(const Rep& M);
  Dimension inj_dim(const Rep& M);
  GorensteinReport gorenstein();

  bool is_torsionless(const Rep& M);
  bool is_cotorsionless(const Rep& M);
  // Ext^i(M, A) = 0 for 1 <= i <= d.
  bool is_cmp(const Rep& M, int d);
  // Non-projective indecomposable CMP, using the Gorenstein dimension.
  bool is_nonprojective_cmp(const Rep& M);
  Characterization characterize(const Rep& M);

  PhiPsi phi_psi(const std::vector<Rep>& summands);
  SelfinjectiveReport selfinjective();
  bool verify_tau_periodicity(const Rep& M, int order);

 private:
  struct Side {
    IsoRegistry reg;
    std::map<int, std::vector<int>> omega;  // class -> summand classes of its syzygy
    std::map<int, bool> projective;
    std::map<int, Dimension> pd;
    std::map<int, int> state;  // 1 = on the stack, 2 = done
  };

  Dimension class_pd(int side, int cls, int& budget);
  const std::vector<int>& omega_of(int side, int cls);
  bool class_projective(int side, int cls);
  Dimension pd_side(int side, const Rep& M);
  int budget() const;
  int gorenstein_d();

  Algebra A_;
  int orbit_bound_;
  Side side_[2];
  std::optional<GorensteinReport> gor_;
};

// Rank over the integers of a small matrix of nonnegative counts.
int integer_rank(const std::vector<std::vector<long long>>& rows);

}  // namespace cmpgeo
