#include "surface.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace cmpgeo {

namespace {

bool strictly_inside(const Surface& S, const Arc& g, int p) {
  const int d = S.mod(p - g.a);
  const int len = S.mod(g.b - g.a);
  return d > 0 && d < len;
}

}  // namespace

std::string Arc::name() const {
  switch (kind) {
    case Radial: return "r" + std::to_string(a) + (tag == Tag::Notched ? "*" : "");
    case Peripheral: return "g" + std::to_string(a) + "," + std::to_string(b);
    case Chord: return "c" + std::to_string(a) + "," + std::to_string(b);
  }
  return "?";
}

bool Arc::operator<(const Arc& o) const {
  const int t1 = kind == Radial ? static_cast<int>(tag) : b;
  const int t2 = o.kind == Radial ? static_cast<int>(o.tag) : o.b;
  return std::tie(kind, a, t1) < std::tie(o.kind, o.a, t2);
}

void validate_arc(const Surface& S, const Arc& g) {
  auto bad = [&](const std::string& why) { fail(ErrorKind::InvalidArc, g.name() + ": " + why); };
  if (S.n < (S.punctured() ? 2 : 4)) bad("surface too small");
  if (g.a < 0 || g.a >= S.n) bad("endpoint out of range");
  switch (g.kind) {
    case Arc::Radial:
      if (!S.punctured()) bad("radial arc in a polygon");
      break;
    case Arc::Peripheral:
      if (!S.punctured()) bad("peripheral arc in a polygon");
      if (g.b < 0 || g.b >= S.n) bad("endpoint out of range");
      if (g.b == g.a || g.b == S.mod(g.a + 1)) bad("cuts off no marked point");
      break;
    case Arc::Chord:
      if (S.punctured()) bad("chord in a punctured disc");
      if (g.b < 0 || g.b >= S.n || g.a >= g.b) bad("endpoints must satisfy 0 <= a < b < n");
      if (g.b - g.a < 2 || (g.a == 0 && g.b == S.n - 1)) bad("boundary segment");
      break;
  }
}

std::vector<Arc> all_arcs(const Surface& S) {
  std::vector<Arc> out;
  if (S.punctured()) {
    for (int q = 0; q < S.n; ++q) {
      out.push_back(Arc::radial(q, Tag::Plain));
      out.push_back(Arc::radial(q, Tag::Notched));
    }
    for (int q = 0; q < S.n; ++q)
      for (int s = 0; s < S.n; ++s)
        if (s != q && s != S.mod(q + 1)) out.push_back(Arc::peripheral(q, s));
  } else {
    for (int a = 0; a < S.n; ++a)
      for (int b = a + 2; b < S.n; ++b)
        if (!(a == 0 && b == S.n - 1)) out.push_back(Arc::chord(a, b));
  }
  return out;
}

std::vector<int> cutoff_interval(const Surface& S, const Arc& g) {
  std::vector<int> out;
  if (g.kind != Arc::Peripheral) return out;
  for (int p = S.mod(g.a + 1); p != g.b; p = S.mod(p + 1)) out.push_back(p);
  return out;
}

int crossing_number(const Surface& S, const Arc& x, const Arc& y) {
  if (x == y) return 0;
  if (x.kind == Arc::Chord || y.kind == Arc::Chord) {
    require(x.kind == Arc::Chord && y.kind == Arc::Chord, ErrorKind::InvalidArc, "mixed surfaces");
    const bool inter = (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
    return inter ? 1 : 0;
  }
  if (x.kind == Arc::Radial && y.kind == Arc::Radial) return (x.a != y.a && x.tag != y.tag) ? 1 : 0;
  if (x.kind == Arc::Radial) return strictly_inside(S, y, x.a) ? 1 : 0;
  if (y.kind == Arc::Radial) return strictly_inside(S, x, y.a) ? 1 : 0;
  const int u = strictly_inside(S, x, y.a) + strictly_inside(S, x, y.b);
  const int v = strictly_inside(S, y, x.a) + strictly_inside(S, y, x.b);
  return std::min(u, v);
}

bool compatible(const Surface& S, const Arc& x, const Arc& y) { return crossing_number(S, x, y) == 0; }

Arc flip_tag(const Arc& g) {
  Arc h = g;
  if (h.kind == Arc::Radial) h.tag = h.tag == Tag::Plain ? Tag::Notched : Tag::Plain;
  return h;
}

Arc tau(const Surface& S, const Arc& g) {
  switch (g.kind) {
    case Arc::Radial: return flip_tag(Arc::radial(S.mod(g.a + 1), g.tag));
    case Arc::Peripheral: return Arc::peripheral(S.mod(g.a + 1), S.mod(g.b + 1));
    case Arc::Chord: return Arc::chord(S.mod(g.a + 1), S.mod(g.b + 1));
  }
  return g;
}

Arc tau_inv(const Surface& S, const Arc& g) {
  switch (g.kind) {
    case Arc::Radial: return flip_tag(Arc::radial(S.mod(g.a - 1), g.tag));
    case Arc::Peripheral: return Arc::peripheral(S.mod(g.a - 1), S.mod(g.b - 1));
    case Arc::Chord: return Arc::chord(S.mod(g.a - 1), S.mod(g.b - 1));
  }
  return g;
}

Triangulation::Triangulation(Surface S, std::vector<Arc> arcs) : S_(S), arcs_(std::move(arcs)) {
  for (const auto& g : arcs_) validate_arc(S_, g);
  const int want = S_.punctured() ? S_.n : S_.n - 3;
  require(size() == want, ErrorKind::NotATriangulation,
          "expected " + std::to_string(want) + " arcs, got " + std::to_string(size()));
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) {
      require(arcs_[i] != arcs_[j], ErrorKind::NotATriangulation, "repeated arc " + arcs_[i].name());
      require(compatible(S_, arcs_[i], arcs_[j]), ErrorKind::NotATriangulation,
              arcs_[i].name() + " crosses " + arcs_[j].name());
    }
}

int Triangulation::index_of(const Arc& g) const {
  for (int i = 0; i < size(); ++i)
    if (arcs_[i] == g) return i;
  return -1;
}

std::vector<Triangulation> enumerate_triangulations(const Surface& S) {
  const std::vector<Arc> arcs = all_arcs(S);
  for (const auto& g : arcs) validate_arc(S, g);
  const int N = static_cast<int>(arcs.size());
  const int want = S.punctured() ? S.n : S.n - 3;
  std::vector<std::vector<char>> ok(N, std::vector<char>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) ok[i][j] = compatible(S, arcs[i], arcs[j]);
  std::vector<Triangulation> out;
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(chosen.size()) == want) {
      std::vector<Arc> sel;
      for (int i : chosen) sel.push_back(arcs[i]);
      out.emplace_back(S, std::move(sel));
      return;
    }
    if (N - from < want - static_cast<int>(chosen.size())) return;
    for (int i = from; i < N; ++i) {
      bool fits = true;
      for (int j : chosen) fits = fits && ok[i][j];
      if (!fits) continue;
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace cmpgeo
