#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "surface.hpp"

namespace cmpgeo {

struct Tally {
  long pass = 0;
  long fail = 0;
  std::vector<std::string> failures;  // first few, for the report

  void record(bool ok, const std::string& what);
  bool ok() const { return fail == 0; }
};

// Checks run per triangulation:
//   calibration       modules of tau^{-1}(a) and tau(a) against P(a), I(a)
//   classification    geometric catalog equals the algebraic CMP set, sizes
//   omega-formula     syzygy of each M(r_i, b_j) against the label formula
//   tau-tilde         Tr Omega Tr twice against the label translation
//   periodicity       syzygies cycle with period 3 on triangle entries
//   ar-arrows         irreducible stable maps against red and blue moves
//   characterization  the a- and b-conditions agree on every arc module
//   itdim             Gorenstein dimension at most one and phi = psi = d
//   selfinjective     when the algebra is selfinjective, tau^{2m} fixes every
//                     non-projective arc module, m the Nakayama order
const std::vector<std::string>& check_names();

struct VerifyOptions {
  std::set<std::string> checks;  // empty means all
  int orbit_bound = 0;
  bool wants(const std::string& c) const { return checks.empty() || checks.count(c); }
};

struct SweepReport {
  std::string surface;
  int n = 0;
  long triangulations = 0;
  std::map<std::string, long> by_type;
  std::map<std::string, Tally> checks;
  std::map<std::string, long> omega_cases;  // hits per configuration of the syzygy proof
  std::map<std::string, long> catalog_sizes;  // entries per family
  long selfinjective = 0;                     // algebras found selfinjective
  double seconds = 0;
  int jobs = 1;

  void merge(const SweepReport& o);
  bool ok() const;
};

void validate_checks(const std::set<std::string>& checks);
SweepReport verify_triangulation(const Triangulation& T, const VerifyOptions& opt);
// Every triangulation of the surface, split over worker threads.
SweepReport verify_sweep(const Surface& S, const VerifyOptions& opt, int jobs);

}  // namespace cmpgeo
