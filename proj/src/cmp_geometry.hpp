#pragma once

#include <string>
#include <vector>

#include "homology.hpp"
#include "surface.hpp"

namespace cmpgeo {

enum class TriangulationType { I, II, III, Other, Polygon };
const char* type_name(TriangulationType t);

// How the triangulation meets the puncture, read off the normalised arcs.
struct PunctureStructure {
  TriangulationType type = TriangulationType::Other;
  int m = 0;                       // arcs at the puncture
  std::vector<int> radial;         // arc indices of the radials, clockwise by point
  std::vector<int> radial_point;
  std::vector<int> bar;            // third side of the sector from radial k to k+1, -1 for a boundary segment
  std::vector<std::vector<int>> runs;  // maximal runs of consecutive internal sectors, sector indices
  bool all_internal = false;
  int d = 0;
  int t = 0;                       // internal triangles away from the puncture
  int abar = -1;                   // type II
  int cbar = -1, dbar = -1;        // type III
};

PunctureStructure classify(const TriangulationData& D);

// Internal triangles none of whose sides reaches the puncture.
std::vector<int> off_puncture_internal_triangles(const TriangulationData& D);

// Red and blue labels. Indices are 1..N with N = m + d; red[i] and blue[i]
// hold the point carrying r_i and b_i (entry 0 unused).
struct ColoredLabeling {
  int N = 0;
  int labeling_case = 0;  // (1) no internal sector, (2) all internal, (3) mixed
  std::vector<int> red, blue;
  std::vector<char> colored, is_red, is_blue;  // per boundary point
  std::vector<int> red_at, blue_at;            // label index at a point, 0 if none

  int wrap(int i) const { return ((i - 1) % N + N) % N + 1; }
};

ColoredLabeling colored_labeling(const TriangulationData& D, const PunctureStructure& P);

struct LabelArc {
  enum Kind { Module, InT, Boundary } kind = Module;
  Arc arc;  // in the tags of the input triangulation
};

LabelArc gamma_of_labels(const TriangulationData& D, const ColoredLabeling& L, int i, int j);

// Label arithmetic on the pairs (i, j) with j - i in {2, ..., N-1} mod N.
bool in_odot(int N, int i, int j);
std::pair<int, int> syzygy_on_labels(int N, int i, int j);
std::pair<int, int> tau_tilde(int N, int i, int j);
std::pair<int, int> red_move(int N, int i, int j);
std::pair<int, int> blue_move(int N, int i, int j);
bool has_red_move(int N, int i, int j);
bool has_blue_move(int N, int i, int j);

// Configuration of M(r_i, b_j) in the proof of the syzygy formula. The grid
// cases pair the kind of the point carrying r_i (1: r_i b_i, 2: r_i b_{i-1},
// 3: red only) with the kind of the point carrying b_j (a: r_j b_j,
// b: r_{j+1} b_j, c: blue only). The special cases are decided by the module
// and take precedence: (d) a peripheral arc whose top is one simple at a
// non-radial vertex, (e) a radial arc with top at a radial vertex, (f) a
// radial arc with top at a non-radial vertex.
std::string omega_case(const PunctureStructure& P, const ColoredLabeling& L, int i, int j,
                       const Arc& arc, const Rep& M);
const std::vector<std::string>& omega_case_names();

// The three arcs through an internal triangle, each a counterclockwise
// elementary move of one side; corners are listed clockwise.
std::vector<Arc> delta_arcs(const TriangulationData& D, int triangle);

struct CatalogEntry {
  enum Family { Odot, Delta, Club } family = Odot;
  int i = 0, j = 0;    // labels, Odot only
  int triangle = -1;   // Delta only
  Arc arc;
  int omega = -1;      // entry index of the syzygy
};

struct CmpCatalog {
  PunctureStructure structure;
  ColoredLabeling labels;  // type I only
  std::vector<CatalogEntry> entries;
  int count(CatalogEntry::Family f) const;
  int expected_size() const;
};

// Throws TypeOther when the triangulation has no geometric description.
CmpCatalog cmp_catalog(const TriangulationData& D, const Algebra& A);

// Arcs not in T whose modules are non-projective, torsionless and have
// Ext^i(M, A) = 0 up to the Gorenstein dimension.
std::vector<Arc> algebraic_cmp_arcs(const TriangulationData& D, Homology& H);

std::string entry_label(const CatalogEntry& e);

struct StableARQuiver {
  struct Vertex {
    std::string id;
    CatalogEntry entry;
  };
  struct Arrow {
    int from, to;
    std::string color;  // "red" or "blue"
  };
  std::vector<Vertex> vertices;
  std::vector<Arrow> arrows;
  std::vector<int> tau;  // translation, vertex index to vertex index
};

StableARQuiver build_stable_ar_quiver(const CmpCatalog& C);
std::string to_dot(const StableARQuiver& Q);
std::string to_json(const StableARQuiver& Q);

// Stable Hom modulo maps factoring through projectives.
std::size_t stable_hom_dim(const Rep& X, const Rep& Y);

// dims[x][y] = dimension of the space of irreducible maps between objects x
// and y of the stable category whose indecomposables are the given pairwise
// non-isomorphic, non-projective modules; the diagonal is left at zero.
std::vector<std::vector<int>> irreducible_dims(const std::vector<Rep>& objects);

}  // namespace cmpgeo
