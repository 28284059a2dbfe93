#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "homology.hpp"
#include "io.hpp"
#include "verify.hpp"

namespace cmpgeo {

struct RunOptions {
  u32 p = 32003;
  int max_len = 64;
  int orbit_bound = 0;  // 0 uses the default bound of 256 syzygy steps
  std::uint64_t seed = 1;
  int jobs = 1;
};

// An input together with everything built from it on demand.
class Workspace {
 public:
  Workspace(Input in, RunOptions opt);

  const Input& input() const { return in_; }
  const RunOptions& options() const { return opt_; }
  bool is_triangulation() const { return in_.triangulation.has_value(); }
  const Algebra& algebra();
  // Null for presentation inputs.
  const TriangulationData* data();
  Homology& homology();
  // The input's modules, one entry per spec.
  std::vector<Rep> listed_modules();
  Rep module(const std::string& expr);

 private:
  void build();

  Input in_;
  RunOptions opt_;
  std::unique_ptr<TriangulationData> D_;
  Algebra A_;
  std::unique_ptr<Homology> H_;
};

json build_report(Workspace& W);
// method is "geometric", "algebraic" or "both"; the result carries "verdict".
json cmp_report(Workspace& W, const std::string& method);
json itdim_report(Workspace& W, bool assume_complete, const std::vector<std::string>& modules);
// format is "dot" or "json".
std::string arquiver_output(Workspace& W, const std::string& format);
json verify_report(Workspace& W, const std::set<std::string>& checks);
json sweep_json(const SweepReport& R);
json enumerate_report(const Surface& S);

}  // namespace cmpgeo
