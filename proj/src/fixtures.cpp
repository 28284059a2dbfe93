#include "fixtures.hpp"

#include <map>

namespace cmpgeo {

namespace {

Presentation monomial_rad2(const std::vector<std::string>& vertices,
                           const std::vector<Arrow>& arrows, u32 p) {
  Presentation P;
  P.vertices = vertices;
  P.arrows = arrows;
  P.field.p = p;
  for (int a = 0; a < (int)arrows.size(); ++a)
    for (int b = 0; b < (int)arrows.size(); ++b)
      if (arrows[a].to == arrows[b].from) P.relations.push_back({Term{1, Path{arrows[a].from, {a, b}}}});
  P.validate();
  return P;
}

Triangulation disc(int n, const std::vector<Arc>& arcs) {
  return Triangulation({SurfaceKind::PuncturedDisc, n}, arcs);
}

struct Entry {
  std::string description;
  Input (*make)(u32);
};

const std::map<std::string, Entry>& table() {
  static const std::map<std::string, Entry> t = {
      {"loop",
       {"loop at 1, arrows 1->2->3, radical square zero",
        [](u32 p) {
          Input in{"loop", std::nullopt,
                   monomial_rad2({"1", "2", "3"}, {{"e", 0, 0}, {"a", 0, 1}, {"b", 1, 2}}, p), {}, false};
          in.modules.push_back(ModuleSpec{"I(1)+S(1)", {}, {}});
          return in;
        }}},
      {"tail-cycle",
       {"1->2->3->4->5->2, radical square zero; not 1-Gorenstein",
        [](u32 p) {
          Input in{"tail-cycle", std::nullopt,
                   monomial_rad2({"1", "2", "3", "4", "5"},
                                 {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 3}, {"d", 3, 4}, {"f", 4, 1}}, p), {}, false};
          // projectives, simples and I(2) exhaust the indecomposables
          for (const char* v : {"1", "2", "3", "4", "5"}) {
            in.modules.push_back(ModuleSpec{std::string("P(") + v + ")", {}, {}});
            in.modules.push_back(ModuleSpec{std::string("S(") + v + ")", {}, {}});
          }
          in.modules.push_back(ModuleSpec{"I(2)", {}, {}});
          in.complete = true;
          return in;
        }}},
      {"punctured-square",
       {"four radial arcs in the punctured square",
        [](u32) {
          return Input{"punctured-square",
                       disc(4, {Arc::radial(0), Arc::radial(1), Arc::radial(2), Arc::radial(3)}), std::nullopt, {}, false};
        }}},
      {"type-i-ten",
       {"type I, n = 10, six radials and four internal sectors (m = 6, d = 2)",
        [](u32) {
          return Input{"type-i-ten",
                       disc(10, {Arc::radial(9), Arc::radial(0), Arc::radial(2), Arc::radial(4), Arc::radial(6),
                                 Arc::radial(7), Arc::peripheral(0, 2), Arc::peripheral(2, 4),
                                 Arc::peripheral(4, 6), Arc::peripheral(7, 9)}),
                       std::nullopt, {}, false};
        }}},
      {"type-ii",
       {"type II, n = 3, self-folded triangle at 0",
        [](u32) {
          return Input{"type-ii",
                       disc(3, {Arc::radial(0), Arc::radial(0, Tag::Notched), Arc::peripheral(1, 0)}),
                       std::nullopt, {}, false};
        }}},
      {"type-iii",
       {"type III, n = 4, self-folded triangle at 0 inside an internal triangle",
        [](u32) {
          return Input{"type-iii",
                       disc(4, {Arc::radial(0), Arc::radial(0, Tag::Notched), Arc::peripheral(0, 2),
                                Arc::peripheral(2, 0)}),
                       std::nullopt, {}, false};
        }}},
      {"hexagon-triangle",
       {"hexagon with the internal triangle 0-2-4",
        [](u32) {
          return Input{"hexagon-triangle",
                       Triangulation({SurfaceKind::Polygon, 6},
                                     {Arc::chord(0, 2), Arc::chord(2, 4), Arc::chord(0, 4)}),
                       std::nullopt, {}, false};
        }}},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, e] : table()) v.push_back(k);
    return v;
  }();
  return names;
}

std::string fixture_description(const std::string& name) {
  auto it = table().find(name);
  require(it != table().end(), ErrorKind::ParseError, "unknown fixture '" + name + "'");
  return it->second.description;
}

Input fixture(const std::string& name, u32 p) {
  auto it = table().find(name);
  require(it != table().end(), ErrorKind::ParseError, "unknown fixture '" + name + "'");
  return it->second.make(p);
}

}  // namespace cmpgeo
