#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "rep.hpp"

namespace cmpgeo {

// Marked points 0..n-1 sit clockwise on the boundary. In the punctured disc
// the puncture is the only interior marked point.
enum class SurfaceKind { PuncturedDisc, Polygon };

struct Surface {
  SurfaceKind kind = SurfaceKind::PuncturedDisc;
  int n = 0;

  bool punctured() const { return kind == SurfaceKind::PuncturedDisc; }
  int mod(int x) const { return ((x % n) + n) % n; }
  bool operator==(const Surface& o) const { return kind == o.kind && n == o.n; }
};

enum class Tag { Plain, Notched };

struct Arc {
  // Radial: a = boundary point. Peripheral: from a clockwise to b, cutting off
  // the points strictly between them. Chord: polygon diagonal with a < b.
  enum Kind { Radial, Peripheral, Chord } kind = Radial;
  int a = 0, b = 0;
  Tag tag = Tag::Plain;

  static Arc radial(int q, Tag t = Tag::Plain) { return {Radial, q, 0, t}; }
  static Arc peripheral(int q, int s) { return {Peripheral, q, s, Tag::Plain}; }
  static Arc chord(int x, int y) { return {Chord, std::min(x, y), std::max(x, y), Tag::Plain}; }

  bool notched() const { return kind == Radial && tag == Tag::Notched; }
  std::string name() const;
  bool operator==(const Arc& o) const {
    return kind == o.kind && a == o.a && (kind == Radial ? tag == o.tag : b == o.b);
  }
  bool operator!=(const Arc& o) const { return !(*this == o); }
  bool operator<(const Arc& o) const;
};

// Throws InvalidArc.
void validate_arc(const Surface& S, const Arc& g);
std::vector<Arc> all_arcs(const Surface& S);
// Points strictly between the endpoints of a peripheral arc.
std::vector<int> cutoff_interval(const Surface& S, const Arc& g);
int crossing_number(const Surface& S, const Arc& x, const Arc& y);
bool compatible(const Surface& S, const Arc& x, const Arc& y);
Arc tau(const Surface& S, const Arc& g);
Arc tau_inv(const Surface& S, const Arc& g);
Arc flip_tag(const Arc& g);

class Triangulation {
 public:
  Triangulation() = default;
  // Throws InvalidArc or NotATriangulation.
  Triangulation(Surface S, std::vector<Arc> arcs);

  const Surface& surface() const { return S_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  int size() const { return static_cast<int>(arcs_.size()); }
  int index_of(const Arc& g) const;
  bool contains(const Arc& g) const { return index_of(g) >= 0; }

 private:
  Surface S_;
  std::vector<Arc> arcs_;
};

std::vector<Triangulation> enumerate_triangulations(const Surface& S);

// A triangle of the triangulation; sides are arc indices, -1 for a boundary
// segment, listed clockwise.
struct Triangle {
  std::array<int, 3> side{};
  bool at_puncture = false;
  std::array<int, 3> corner{-1, -1, -1};  // boundary points, -1 for the puncture
};

// Combinatorial data of a triangulation after tag normalisation.
struct TriangulationData {
  Triangulation T;
  bool flipped = false;       // every radial was notched and has been flipped
  int self_folded = -1;       // boundary point of a self-folded triangle
  int folded_radial = -1;     // plain radial at that point (index in T)
  int folded_loop = -1;       // notched radial at that point, drawn as a loop
  std::vector<Arc> arcs;      // T after normalisation
  std::vector<Triangle> triangles;
  std::vector<std::vector<int>> exchange;  // signed adjacency, after cancelling 2-cycles
  Presentation pres;          // quiver with potential relations
  std::vector<std::vector<int>> arrow_between;  // arrow index i -> j or -1
  std::vector<std::vector<int>> cycles;         // chordless cycles, as arrow lists
  std::vector<int> cycle_sign;
};

TriangulationData triangulation_data(const Triangulation& T, u32 p = 32003);
Algebra algebra_of(const TriangulationData& D, int max_len = 64);

// Arcs of T carrying the basis vectors of the module of g, in order along g,
// read off a fixed polyline drawing. Notched radials of g are drawn as loops
// around the puncture, folded onto themselves; the loop and the plain radial
// of a self-folded triangle in T are drawn as a loop and a spoke.
std::vector<int> crossing_sequence(const TriangulationData& D, const Arc& g);

// The indecomposable module of an arc not in T. Checks relations, dimensions
// against crossing numbers, and indecomposability.
Rep arc_module(const TriangulationData& D, const Algebra& A, const Arc& g);
std::vector<int> crossing_vector(const TriangulationData& D, const Arc& g);

}  // namespace cmpgeo
