#pragma once

#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "rep.hpp"

namespace testing_util {

using namespace cmpgeo;

// Relations are written as lists of (coefficient, "a*b*c").
using RelSpec = std::vector<std::pair<long long, std::string>>;

inline Presentation quiver(const std::vector<std::string>& vertices,
                           const std::vector<std::tuple<std::string, std::string, std::string>>& arrows,
                           const std::vector<RelSpec>& rels, u32 p = 32003) {
  Presentation P;
  P.field.p = p;
  P.vertices = vertices;
  for (const auto& [id, from, to] : arrows) P.arrows.push_back({id, P.vertex_index(from), P.vertex_index(to)});
  for (const auto& spec : rels) {
    Relation r;
    for (const auto& [c, word] : spec) {
      Term t;
      t.coeff = P.field.from_int(c);
      std::stringstream ss(word);
      std::string tok;
      while (std::getline(ss, tok, '*')) t.path.arrows.push_back(P.arrow_index(tok));
      t.path.start = P.arrows[t.path.arrows[0]].from;
      r.push_back(t);
    }
    P.relations.push_back(r);
  }
  return P;
}

inline RelSpec mono(const std::string& w) { return {{1, w}}; }

// The loop example: loop e at 1, arrows 1->2->3, radical square zero.
inline Algebra loop_example() {
  return Algebra::create(quiver({"1", "2", "3"}, {{"e", "1", "1"}, {"a", "1", "2"}, {"b", "2", "3"}},
                                {mono("e*e"), mono("e*a"), mono("a*b")}));
}

// 1 -> 2 -> 3 -> 4 -> 5 -> 2 with radical square zero.
inline Algebra tail_cycle_example() {
  return Algebra::create(quiver({"1", "2", "3", "4", "5"},
                                {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "4"}, {"d", "4", "5"}, {"f", "5", "2"}},
                                {mono("a*b"), mono("b*c"), mono("c*d"), mono("d*f"), mono("f*b")}));
}

// Oriented 4-cycle with all paths of length 3 zero.
inline Algebra four_cycle_rad3() {
  return Algebra::create(quiver({"0", "1", "2", "3"},
                                {{"x0", "0", "1"}, {"x1", "1", "2"}, {"x2", "2", "3"}, {"x3", "3", "0"}},
                                {mono("x0*x1*x2"), mono("x1*x2*x3"), mono("x2*x3*x0"), mono("x3*x0*x1")}));
}

inline Algebra linear_a3() {
  return Algebra::create(quiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}, {}));
}

}  // namespace testing_util
