#include <algorithm>
#include <cmath>
#include <set>

#include "iso.hpp"
#include "surface.hpp"

namespace cmpgeo {

namespace {

// Drawing: boundary unrolled onto the x axis with point q at x = q, the
// puncture at height infinity. A radial arc is a vertical spoke; any other
// arc is a staple over its cut-off interval whose height grows with the
// interval length and whose legs move towards the endpoints as it grows.
struct Staple {
  bool spoke = false;
  double xl = 0, xr = 0, h = 0;
};

Staple spoke_at(int p) { return {true, double(p), double(p), 0}; }

Staple staple(int q, int len) {
  const double delta = 0.25 / (len + 1);
  return {false, q + delta, q + len - delta, len + 1e-3 * (q + 1)};
}

Staple drawing_of(const Surface& S, const Arc& g, bool as_loop) {
  if (as_loop) return staple(g.a, S.n);
  switch (g.kind) {
    case Arc::Radial: return spoke_at(g.a);
    case Arc::Peripheral: return staple(g.a, S.mod(g.b - g.a));
    case Arc::Chord: return staple(g.a, g.b - g.a);
  }
  return {};
}

// Representative of x inside (lo, hi), if any; the punctured drawing is n-periodic.
std::optional<double> inside(const Surface& S, double x, double lo, double hi) {
  if (!S.punctured()) return (x > lo && x < hi) ? std::optional<double>(x) : std::nullopt;
  x = std::fmod(x, double(S.n));
  if (x < 0) x += S.n;
  for (double y : {x, x + S.n})
    if (y > lo && y < hi) return y;
  return std::nullopt;
}

struct Sequence {
  std::vector<int> seq;
  int left = 0;   // crossings on the first leg
  int right = 0;  // crossings on the last leg
};

Sequence raw_sequence(const TriangulationData& D, const Staple& g) {
  const Surface& S = D.T.surface();
  std::vector<Staple> t;
  for (int i = 0; i < static_cast<int>(D.arcs.size()); ++i)
    t.push_back(drawing_of(S, D.arcs[i], i == D.folded_loop));
  Sequence out;
  auto leg = [&](double x, bool up) {
    std::vector<std::pair<double, int>> hits;
    for (int i = 0; i < static_cast<int>(t.size()); ++i)
      if (!t[i].spoke && (g.spoke || t[i].h < g.h) && inside(S, x, t[i].xl, t[i].xr)) hits.push_back({t[i].h, i});
    std::sort(hits.begin(), hits.end());
    if (!up) std::reverse(hits.begin(), hits.end());
    for (auto& [h, i] : hits) out.seq.push_back(i);
    return static_cast<int>(hits.size());
  };
  if (g.spoke) {
    leg(g.xl, true);
    return out;
  }
  out.left = leg(g.xl, true);
  std::vector<std::pair<double, int>> hits;
  for (int i = 0; i < static_cast<int>(t.size()); ++i) {
    if (t[i].spoke) {
      if (auto y = inside(S, t[i].xl, g.xl, g.xr)) hits.push_back({*y, i});
    } else if (t[i].h > g.h) {
      if (auto y = inside(S, t[i].xl, g.xl, g.xr)) hits.push_back({*y, i});
      if (auto y = inside(S, t[i].xr, g.xl, g.xr)) hits.push_back({*y, i});
    }
  }
  std::sort(hits.begin(), hits.end());
  for (auto& [x, i] : hits) out.seq.push_back(i);
  out.right = leg(g.xr, false);
  return out;
}

Arc normalised(const TriangulationData& D, const Arc& g) { return D.flipped ? flip_tag(g) : g; }

struct Walk {
  std::vector<int> vertex;                  // T index of each basis vector
  std::set<std::pair<int, int>> edges;      // pairs of basis vectors, smaller first
  // spoke-side edges leaving a self-folded pair; their sign may have to flip
  std::vector<std::pair<int, int>> twistable;
};

void link(Walk& w, int a, int b) {
  if (a != b) w.edges.insert({std::min(a, b), std::max(a, b)});
}

int add_node(Walk& w, int v) {
  w.vertex.push_back(v);
  return static_cast<int>(w.vertex.size()) - 1;
}

// Chain of crossings; the pattern loop, spoke, loop of a self-folded triangle
// contributes one vector each for loop and spoke, both joined to the neighbours.
Walk chain(const TriangulationData& D, const std::vector<int>& seq) {
  Walk w;
  std::vector<int> prev;
  for (std::size_t i = 0; i < seq.size();) {
    std::vector<int> cur;
    if (D.self_folded >= 0 && i + 2 < seq.size() && seq[i] == D.folded_loop &&
        seq[i + 1] == D.folded_radial && seq[i + 2] == D.folded_loop) {
      cur = {add_node(w, D.folded_loop), add_node(w, D.folded_radial)};
      i += 3;
    } else {
      cur = {add_node(w, seq[i])};
      i += 1;
    }
    for (int a : prev)
      for (int b : cur) link(w, a, b);
    if (prev.size() == 2) w.twistable.push_back({std::min(prev[1], cur[0]), std::max(prev[1], cur[0])});
    prev = cur;
  }
  return w;
}

// A loop crosses the same arcs on both legs; identify them.
Walk folded(const Sequence& s) {
  const int k = s.left;
  const int L = static_cast<int>(s.seq.size());
  require(s.right == k, ErrorKind::InvariantViolated, "loop legs cross different numbers of arcs");
  for (int i = 0; i < k; ++i)
    require(s.seq[i] == s.seq[L - 1 - i], ErrorKind::InvariantViolated, "loop legs cross different arcs");
  Walk w;
  for (int i = 0; i < L - k; ++i) add_node(w, s.seq[i]);
  for (int i = 0; i + 1 < L - k; ++i) link(w, i, i + 1);
  if (k > 0 && L - k > k) link(w, k - 1, L - k - 1);
  return w;
}

Walk walk_of(const TriangulationData& D, const Arc& g0) {
  const Surface& S = D.T.surface();
  const Arc g = normalised(D, g0);
  if (g.notched()) {
    if (D.self_folded >= 0) {
      // swap the roles of the loop and the spoke in the plain arc's module
      Sequence s = raw_sequence(D, drawing_of(S, flip_tag(g), false));
      for (int& v : s.seq) {
        if (v == D.folded_loop) v = D.folded_radial;
        else if (v == D.folded_radial) v = D.folded_loop;
      }
      return chain(D, s.seq);
    }
    return folded(raw_sequence(D, drawing_of(S, g, true)));
  }
  return chain(D, raw_sequence(D, drawing_of(S, g, false)).seq);
}

}  // namespace

std::vector<int> crossing_sequence(const TriangulationData& D, const Arc& g) {
  if (D.T.contains(g)) return {};
  Walk w = walk_of(D, g);
  return w.vertex;
}

std::vector<int> crossing_vector(const TriangulationData& D, const Arc& g) {
  std::vector<int> v;
  for (const auto& a : D.T.arcs()) v.push_back(crossing_number(D.T.surface(), g, a));
  return v;
}

namespace {

Rep assemble(const TriangulationData& D, const Algebra& A, const Walk& w, const Arc& g, unsigned twist) {
  const int N = A.num_vertices();
  const Field& F = A.field();
  std::vector<int> dims(N, 0), index(w.vertex.size());
  for (std::size_t i = 0; i < w.vertex.size(); ++i) index[i] = dims[w.vertex[i]]++;
  std::vector<Matrix> mats;
  for (int a = 0; a < A.num_arrows(); ++a) mats.emplace_back(dims[A.arrow(a).to], dims[A.arrow(a).from]);
  auto plain_radial = [&](int node) {
    const int v = w.vertex[node];
    return D.arcs[v].kind == Arc::Radial && v != D.folded_radial;
  };
  for (auto e : w.edges) {
    auto [u, v] = e;
    u32 c = 1;
    for (std::size_t t = 0; t < w.twistable.size(); ++t)
      if ((twist >> t & 1u) && w.twistable[t] == e) c = F.neg(1);
    const int x = w.vertex[u], y = w.vertex[v];
    if (int a = D.arrow_between[x][y]; a >= 0) mats[a](index[v], index[u]) = c;
    else if (int b = D.arrow_between[y][x]; b >= 0) mats[b](index[u], index[v]) = c;
    else require(plain_radial(u) && plain_radial(v), ErrorKind::InvariantViolated,
                 "no arrow between consecutive crossings of " + g.name());
  }
  // A run of crossings through every arc at the puncture goes round it the
  // long way; the potential identifies that path with the one through the
  // third side of the remaining puncture triangle, so the run's ends must
  // also be joined through that side. With two arcs at the puncture the
  // long way is a single cancelled arrow.
  int m = 0;
  for (const auto& arc : D.arcs) m += arc.kind == Arc::Radial;
  if (D.self_folded < 0 && D.T.surface().punctured()) {
    const int L = static_cast<int>(w.vertex.size());
    for (int i = 0; i + m <= L; ++i) {
      bool run = true;
      for (int j = i; j < i + m && run; ++j) run = plain_radial(j) && (j == i || w.edges.count({j - 1, j}));
      if (!run) continue;
      bool done = false;
      for (int dir = 0; dir < 2 && !done; ++dir) {
        const int u = dir ? i + m - 1 : i, v = dir ? i : i + m - 1;
        const int x = w.vertex[u], y = w.vertex[v];
        for (int k = 0; k < N && !done; ++k) {
          const int a = D.arrow_between[x][k], b = D.arrow_between[k][y];
          if (a < 0 || b < 0 || D.arcs[k].kind == Arc::Radial) continue;
          for (int r = 0; r < dims[k]; ++r)
            if (mats[a](r, index[u]) != 0) {
              if (mats[b](index[v], r) == 0) mats[b](index[v], r) = 1;
              done = true;
              break;
            }
        }
      }
      require(done || m > 2, ErrorKind::InvariantViolated,
              "no detour around the puncture for " + g.name());
    }
  }
  return Rep::unchecked(A, dims, std::move(mats));
}

bool relations_hold(const Rep& M) {
  try {
    M.check_relations();
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

Rep arc_module(const TriangulationData& D, const Algebra& A, const Arc& g) {
  validate_arc(D.T.surface(), g);
  if (D.T.contains(g)) return Rep::zero(A);
  const Walk w = walk_of(D, g);
  require(w.twistable.size() < 8, ErrorKind::InvariantViolated, "too many self-folded passages");
  const std::vector<int> want = crossing_vector(D, g);
  for (unsigned twist = 0; twist < (1u << w.twistable.size()); ++twist) {
    Rep M = assemble(D, A, w, g, twist);
    require(M.dims() == want, ErrorKind::InvariantViolated,
            "dimension vector of " + g.name() + " differs from its crossing numbers");
    if (relations_hold(M) && is_indecomposable(M)) return M;
  }
  fail(ErrorKind::InvariantViolated, "no indecomposable module along the crossings of " + g.name());
}

}  // namespace cmpgeo
