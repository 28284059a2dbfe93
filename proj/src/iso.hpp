#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "rep.hpp"

namespace cmpgeo {

// Per-thread generator used by the Las Vegas routines below.
std::mt19937_64& rng();
void reseed(std::uint64_t seed);

// Number of random homomorphisms tried before falling back to decomposition.
inline constexpr int kIsoTrials = 24;

std::vector<std::vector<Matrix>> end_basis(const Rep& M);
// dim End(M) / rad End(M), via the trace form; requires p > dim M.
std::size_t end_top_dim(const Rep& M);

bool is_isomorphic(const Rep& M, const Rep& N);
// Deterministic test for M indecomposable.
bool is_isomorphic_indecomposable(const Rep& M, const Rep& N);
bool is_indecomposable(const Rep& M);
// Indecomposable summands, unique up to isomorphism and order.
std::vector<Rep> decompose(const Rep& M);

// Keeps one representative per isomorphism class of indecomposables.
// Not synchronised: each thread owns its registry.
class IsoRegistry {
 public:
  // Id of the class of the indecomposable M, inserting it when new.
  int classify(const Rep& M);
  std::optional<int> find(const Rep& M) const;
  const Rep& rep(int id) const { return reps_[id]; }
  std::size_t size() const { return reps_.size(); }

 private:
  std::vector<Rep> reps_;
  std::map<std::vector<int>, std::vector<int>> by_dims_;
};

// Class ids of the indecomposable summands of M, sorted.
std::vector<int> classify_summands(IsoRegistry& reg, const Rep& M);

}  // namespace cmpgeo
