#include "homology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace cmpgeo {

namespace {

constexpr int kDefaultOrbitBound = 256;

bool torsionless_over(const Rep& M) {
  if (M.is_zero()) return true;
  Rep L = regular(M.algebra());
  auto H = hom_basis(M, L);
  for (int v = 0; v < M.num_vertices(); ++v) {
    if (M.dim(v) == 0) continue;
    Matrix stacked(0, M.dim(v));
    for (const auto& h : H) stacked = vstack(stacked, h[v]);
    if (rank(M.field(), stacked) != std::size_t(M.dim(v))) return false;
  }
  return true;
}

bool ext_vanishes(const Rep& M, int d) {
  for (int i = 1; i <= d; ++i)
    if (ext_dim_against_algebra(M, i) != 0) return false;
  return true;
}

}  // namespace

std::string Dimension::str() const {
  switch (kind) {
    case Finite: return std::to_string(value);
    case Infinite: return "inf";
    case Undetermined: return "undetermined";
  }
  return "?";
}

int integer_rank(const std::vector<std::vector<long long>>& rows) {
  using boost::multiprecision::cpp_int;
  if (rows.empty()) return 0;
  std::vector<std::vector<cpp_int>> a;
  for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
  const std::size_t m = a.size(), n = a[0].size();
  cpp_int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

Homology::Homology(Algebra A, int orbit_bound) : A_(std::move(A)), orbit_bound_(orbit_bound) {}

int Homology::budget() const { return orbit_bound_ > 0 ? orbit_bound_ : kDefaultOrbitBound; }

bool Homology::class_projective(int side, int cls) {
  auto& S = side_[side];
  auto it = S.projective.find(cls);
  if (it != S.projective.end()) return it->second;
  bool p = is_projective(S.reg.rep(cls));
  S.projective[cls] = p;
  return p;
}

const std::vector<int>& Homology::omega_of(int side, int cls) {
  auto& S = side_[side];
  auto it = S.omega.find(cls);
  if (it != S.omega.end()) return it->second;
  Rep om = syzygy(S.reg.rep(cls));
  std::vector<int> ids = classify_summands(S.reg, om);
  return S.omega[cls] = std::move(ids);
}

Dimension Homology::class_pd(int side, int cls, int& left) {
  auto& S = side_[side];
  if (auto it = S.pd.find(cls); it != S.pd.end()) return it->second;
  if (S.state[cls] == 1) return Dimension::infinite();
  if (class_projective(side, cls)) return S.pd[cls] = Dimension::finite(0);
  if (!S.omega.count(cls)) {
    if (left <= 0) return Dimension::undetermined();
    --left;
  }
  S.state[cls] = 1;
  const std::vector<int> children = omega_of(side, cls);
  int best = 0;
  bool infinite = false, unknown = false;
  for (int ch : children) {
    Dimension d = class_pd(side, ch, left);
    if (d.kind == Dimension::Infinite) {
      infinite = true;
      break;
    }
    if (d.kind == Dimension::Undetermined) unknown = true;
    else best = std::max(best, d.value);
  }
  S.state[cls] = 0;
  if (infinite) return S.pd[cls] = Dimension::infinite();
  if (unknown) return Dimension::undetermined();
  return S.pd[cls] = Dimension::finite(best + 1);
}

Dimension Homology::pd_side(int side, const Rep& M) {
  if (M.is_zero()) return Dimension::finite(0);
  int left = budget();
  Dimension out = Dimension::finite(0);
  bool unknown = false;
  for (int cls : classify_summands(side_[side].reg, M)) {
    Dimension d = class_pd(side, cls, left);
    if (d.kind == Dimension::Infinite) return d;
    if (d.kind == Dimension::Undetermined) unknown = true;
    else out.value = std::max(out.value, d.value);
  }
  return unknown ? Dimension::undetermined() : out;
}

Dimension Homology::proj_dim(const Rep& M) {
  require(M.algebra() == A_, ErrorKind::AlgebraMismatch, "module over another algebra");
  return pd_side(0, M);
}

Dimension Homology::inj_dim(const Rep& M) {
  require(M.algebra() == A_, ErrorKind::AlgebraMismatch, "module over another algebra");
  return pd_side(1, duality(M));
}

GorensteinReport Homology::gorenstein() {
  if (gor_) return *gor_;
  GorensteinReport g;
  auto fold = [](Dimension acc, Dimension d) {
    if (acc.kind == Dimension::Infinite || d.kind == Dimension::Infinite) return Dimension::infinite();
    if (acc.kind == Dimension::Undetermined || d.kind == Dimension::Undetermined) return Dimension::undetermined();
    return Dimension::finite(std::max(acc.value, d.value));
  };
  g.d_left = g.d_right = Dimension::finite(0);
  for (int i = 0; i < A_.num_vertices(); ++i) {
    g.d_left = fold(g.d_left, proj_dim(injective(A_, i)));
    g.d_right = fold(g.d_right, inj_dim(projective(A_, i)));
  }
  if (g.d_left.kind == Dimension::Infinite || g.d_right.kind == Dimension::Infinite) {
    g.verdict = GorensteinReport::NotGorenstein;
  } else if (g.d_left.is_finite() && g.d_right.is_finite()) {
    require(g.d_left.value == g.d_right.value, ErrorKind::InvariantViolated,
            "finite left and right self-injective dimensions differ");
    g.verdict = GorensteinReport::Gorenstein;
    g.d = g.d_left.value;
  }
  gor_ = g;
  return g;
}

int Homology::gorenstein_d() {
  GorensteinReport g = gorenstein();
  if (g.verdict == GorensteinReport::NotGorenstein)
    fail(ErrorKind::NotGorenstein, "the algebra is not Gorenstein");
  if (g.verdict == GorensteinReport::Undetermined)
    fail(ErrorKind::OrbitBoundExceeded, "Gorenstein dimension could not be determined");
  return g.d;
}

bool Homology::is_torsionless(const Rep& M) { return torsionless_over(M); }

bool Homology::is_cotorsionless(const Rep& M) { return torsionless_over(duality(M)); }

bool Homology::is_cmp(const Rep& M, int d) { return ext_vanishes(M, d); }

bool Homology::is_nonprojective_cmp(const Rep& M) {
  int d = gorenstein_d();
  return !M.is_zero() && !is_projective(M) && ext_vanishes(M, d);
}

Characterization Homology::characterize(const Rep& M) {
  const int d = std::max(gorenstein_d(), 1);
  Characterization c;
  c.projective = is_projective(M);
  c.injective = is_injective(M);
  Rep t = ar_translate(M);
  Rep ti = ar_translate_inv(M);
  c.a1 = !c.projective && is_torsionless(M);
  c.a2 = !c.projective && ext_vanishes(M, d);
  c.a3 = is_isomorphic(syzygy(t, 2), M);
  c.a4 = !c.projective && is_isomorphic(cosyzygy(M, 2), t);
  c.b1 = !c.injective && is_cotorsionless(M);
  c.b2 = !c.injective && ext_vanishes(duality(M), d);
  c.b3 = is_isomorphic(cosyzygy(ti, 2), M);
  c.b4 = !c.injective && is_isomorphic(syzygy(M, 2), ti);
  return c;
}

PhiPsi Homology::phi_psi(const std::vector<Rep>& summands) {
  using State = std::vector<std::map<int, long long>>;
  auto& S = side_[0];
  // one generator per isomorphism class of indecomposable summand
  std::set<int> gens;
  for (const auto& M : summands) {
    require(M.algebra() == A_, ErrorKind::AlgebraMismatch, "module over another algebra");
    for (int cls : classify_summands(S.reg, M))
      if (!class_projective(0, cls)) gens.insert(cls);
  }
  State cur;
  for (int cls : gens) cur.push_back({{cls, 1}});
  auto rank_of = [&](const State& st) {
    std::vector<std::vector<long long>> rows;
    const std::size_t width = S.reg.size();
    for (const auto& m : st) {
      std::vector<long long> r(width, 0);
      for (auto [cls, k] : m) r[cls] = k;
      rows.push_back(std::move(r));
    }
    return integer_rank(rows);
  };
  PhiPsi out;
  std::vector<State> history;
  const int limit = budget();
  for (int t = 0;; ++t) {
    out.ranks.push_back(rank_of(cur));
    if (std::find(history.begin(), history.end(), cur) != history.end()) {
      out.exact = true;
      break;
    }
    history.push_back(cur);
    if (t >= limit) break;
    State next;
    for (const auto& m : cur) {
      std::map<int, long long> nm;
      for (auto [cls, k] : m)
        for (int ch : omega_of(0, cls))
          if (!class_projective(0, ch)) nm[ch] += k;
      next.push_back(std::move(nm));
    }
    cur = std::move(next);
  }
  const int T = static_cast<int>(out.ranks.size());
  if (out.exact) {
    const int final_rank = out.ranks.back();
    out.phi = 0;
    while (out.ranks[out.phi] != final_rank) ++out.phi;
  } else {
    // No repetition within the bound: accept the first plateau that lasts
    // at least as long as the rank itself.
    out.phi = T - 1;
    for (int t = 0; t < T; ++t) {
      int w = std::max(out.ranks[t], 1);
      if (t + w >= T) break;
      bool flat = true;
      for (int s = t; s <= t + w; ++s) flat = flat && out.ranks[s] == out.ranks[t];
      if (flat) {
        out.phi = t;
        break;
      }
    }
  }
  // psi adds the largest finite projective dimension among summands of Omega^phi M.
  const State& at_phi = out.phi < static_cast<int>(history.size()) ? history[out.phi] : cur;
  int k = 0;
  int left = budget();
  for (const auto& m : at_phi)
    for (auto [cls, mult] : m) {
      Dimension d = class_pd(0, cls, left);
      if (d.is_finite()) k = std::max(k, d.value);
    }
  out.psi = out.phi + k;
  return out;
}

SelfinjectiveReport Homology::selfinjective() {
  SelfinjectiveReport r;
  const int n = A_.num_vertices();
  r.nakayama.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    Rep P = projective(A_, i);
    if (!is_injective(P)) return r;
    for (int j = 0; j < n && r.nakayama[i] < 0; ++j)
      if (is_isomorphic_indecomposable(P, injective(A_, j))) r.nakayama[i] = j;
    if (r.nakayama[i] < 0) return r;
  }
  r.selfinjective = true;
  r.order = 1;
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = r.nakayama[j]) {
      seen[j] = 1;
      ++len;
    }
    r.order = std::lcm(r.order, len);
  }
  return r;
}

bool Homology::verify_tau_periodicity(const Rep& M, int order) {
  Rep X = M;
  for (int k = 0; k < 2 * order; ++k) X = ar_translate(X);
  return is_isomorphic(X, M);
}

}  // namespace cmpgeo
