#include "io.hpp"

#include <regex>

namespace cmpgeo {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& msg) {
  fail(ErrorKind::ParseError, (where.empty() ? "" : where + ": ") + msg);
}

std::string field(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

std::string item(const std::string& where, std::size_t k) { return where + "[" + std::to_string(k) + "]"; }

const json& member(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(field(where, key), "missing");
  return *it;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  bad(where, "expected a string");
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  return j;
}

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < std::min(byte, text.size()); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

ModuleSpec module_spec_from_json(const json& j, const std::string& where) {
  ModuleSpec m;
  if (j.is_string()) {
    m.expr = j.get<std::string>();
    return m;
  }
  for (const auto& d : as_array(member(j, "dims", where), field(where, "dims")))
    m.dims.push_back(as_int(d, field(where, "dims")));
  if (j.contains("arrows")) {
    const json& arr = j["arrows"];
    if (!arr.is_object()) bad(field(where, "arrows"), "expected an object keyed by arrow id");
    for (const auto& [id, rows] : arr.items()) {
      std::vector<std::vector<long long>> mat;
      const std::string w = field(field(where, "arrows"), id);
      for (const auto& r : as_array(rows, w)) {
        std::vector<long long> row;
        for (const auto& x : as_array(r, w)) {
          if (!x.is_number_integer()) bad(w, "matrix entries must be integers");
          row.push_back(x.get<long long>());
        }
        mat.push_back(std::move(row));
      }
      m.matrices.emplace_back(id, std::move(mat));
    }
  }
  return m;
}

}  // namespace

Triangulation triangulation_from_json(const json& j, const std::string& where) {
  const std::string kind = as_string(member(j, "surface", where), field(where, "surface"));
  Surface S;
  if (kind == "punctured-disc") {
    S.kind = SurfaceKind::PuncturedDisc;
  } else if (kind == "polygon") {
    S.kind = SurfaceKind::Polygon;
  } else {
    bad(field(where, "surface"), "expected \"punctured-disc\" or \"polygon\"");
  }
  S.n = as_int(member(j, "n", where), field(where, "n"));
  if (S.n < 3) bad(field(where, "n"), "need at least 3 boundary points");
  std::vector<Arc> arcs;
  const json& list = as_array(member(j, "arcs", where), field(where, "arcs"));
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string w = item(field(where, "arcs"), k);
    if (list[k].is_string()) {
      // short names: r3, r3*, g0,2, c1,4
      try {
        arcs.push_back(parse_arc_name(S, list[k].get<std::string>()));
      } catch (const Error& e) {
        bad(w, e.what());
      }
      continue;
    }
    const std::string type = as_string(member(list[k], "type", w), field(w, "type"));
    Arc g;
    if (type == "radial") {
      Tag tag = Tag::Plain;
      if (list[k].contains("tag")) {
        const std::string t = as_string(list[k]["tag"], field(w, "tag"));
        if (t == "notched") tag = Tag::Notched;
        else if (t != "plain") bad(field(w, "tag"), "expected \"plain\" or \"notched\"");
      }
      g = Arc::radial(as_int(member(list[k], "at", w), field(w, "at")), tag);
    } else if (type == "peripheral") {
      g = Arc::peripheral(as_int(member(list[k], "from", w), field(w, "from")),
                          as_int(member(list[k], "to", w), field(w, "to")));
    } else if (type == "chord") {
      g = Arc::chord(as_int(member(list[k], "from", w), field(w, "from")),
                     as_int(member(list[k], "to", w), field(w, "to")));
    } else {
      bad(field(w, "type"), "expected radial, peripheral or chord");
    }
    try {
      validate_arc(S, g);
    } catch (const Error& e) {
      bad(w, e.what());
    }
    arcs.push_back(g);
  }
  return Triangulation(S, arcs);
}

Presentation presentation_from_json(const json& j, u32 default_p, const std::string& where) {
  Presentation P;
  P.field.p = default_p;
  if (j.contains("char")) {
    const int p = as_int(j["char"], field(where, "char"));
    if (p < 2) bad(field(where, "char"), "expected a prime");
    P.field.p = static_cast<u32>(p);
  }
  const json& vs = as_array(member(j, "vertices", where), field(where, "vertices"));
  for (std::size_t k = 0; k < vs.size(); ++k) P.vertices.push_back(as_string(vs[k], item(field(where, "vertices"), k)));
  const json& as = as_array(member(j, "arrows", where), field(where, "arrows"));
  for (std::size_t k = 0; k < as.size(); ++k) {
    const std::string w = item(field(where, "arrows"), k);
    Arrow a;
    a.id = as_string(member(as[k], "id", w), field(w, "id"));
    const std::string from = as_string(member(as[k], "from", w), field(w, "from"));
    const std::string to = as_string(member(as[k], "to", w), field(w, "to"));
    a.from = P.vertex_index(from);
    a.to = P.vertex_index(to);
    if (a.from < 0) bad(field(w, "from"), "unknown vertex '" + from + "'");
    if (a.to < 0) bad(field(w, "to"), "unknown vertex '" + to + "'");
    P.arrows.push_back(a);
  }
  if (j.contains("relations")) {
    const json& rs = as_array(j["relations"], field(where, "relations"));
    for (std::size_t k = 0; k < rs.size(); ++k) {
      const std::string w = item(field(where, "relations"), k);
      Relation rel;
      const json& terms = as_array(rs[k], w);
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string wt = item(w, t);
        Term term;
        term.coeff = P.field.from_int(terms[t].contains("coeff") ? as_int(terms[t]["coeff"], field(wt, "coeff")) : 1);
        const json& path = as_array(member(terms[t], "path", wt), field(wt, "path"));
        if (path.empty()) bad(field(wt, "path"), "empty path");
        for (const auto& id : path) {
          const int a = P.arrow_index(as_string(id, field(wt, "path")));
          if (a < 0) bad(field(wt, "path"), "unknown arrow '" + as_string(id, wt) + "'");
          term.path.arrows.push_back(a);
        }
        term.path.start = P.arrows[term.path.arrows[0]].from;
        rel.push_back(term);
      }
      P.relations.push_back(rel);
    }
  }
  P.validate();
  return P;
}

Input parse_input(const std::string& text, u32 default_p) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(line_col(text, e.byte), "malformed JSON");
  }
  Input in;
  in.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "input";
  if (j.contains("surface")) {
    in.triangulation = triangulation_from_json(j);
  } else if (j.contains("vertices")) {
    in.presentation = presentation_from_json(j, default_p);
  } else {
    bad("", "expected a triangulation (\"surface\") or a presentation (\"vertices\")");
  }
  if (j.contains("modules")) {
    const json& ms = as_array(j["modules"], "modules");
    for (std::size_t k = 0; k < ms.size(); ++k) in.modules.push_back(module_spec_from_json(ms[k], item("modules", k)));
  }
  if (j.contains("complete")) {
    if (!j["complete"].is_boolean()) bad("complete", "expected a boolean");
    in.complete = j["complete"].get<bool>();
  }
  return in;
}

json to_json(const Triangulation& T) {
  json j;
  j["surface"] = T.surface().punctured() ? "punctured-disc" : "polygon";
  j["n"] = T.surface().n;
  json arcs = json::array();
  for (const auto& g : T.arcs()) {
    json a;
    switch (g.kind) {
      case Arc::Radial:
        a["type"] = "radial";
        a["at"] = g.a;
        a["tag"] = g.notched() ? "notched" : "plain";
        break;
      case Arc::Peripheral:
        a["type"] = "peripheral";
        a["from"] = g.a;
        a["to"] = g.b;
        break;
      case Arc::Chord:
        a["type"] = "chord";
        a["from"] = g.a;
        a["to"] = g.b;
        break;
    }
    arcs.push_back(a);
  }
  j["arcs"] = arcs;
  return j;
}

json to_json(const Presentation& P) {
  json j;
  j["vertices"] = P.vertices;
  json arrows = json::array();
  for (const auto& a : P.arrows) arrows.push_back({{"id", a.id}, {"from", P.vertices[a.from]}, {"to", P.vertices[a.to]}});
  j["arrows"] = arrows;
  json rels = json::array();
  for (const auto& r : P.relations) {
    json terms = json::array();
    for (const auto& t : r) {
      json path = json::array();
      for (int a : t.path.arrows) path.push_back(P.arrows[a].id);
      terms.push_back({{"coeff", P.field.to_signed(t.coeff)}, {"path", path}});
    }
    rels.push_back(terms);
  }
  j["relations"] = rels;
  j["char"] = P.field.p;
  return j;
}

Arc parse_arc_name(const Surface& S, const std::string& name) {
  static const std::regex radial(R"(r(\d+)(\*?))"), two(R"(([gc])(\d+),(\d+))");
  std::smatch m;
  Arc g;
  if (std::regex_match(name, m, radial)) {
    g = Arc::radial(std::stoi(m[1]), m[2].length() ? Tag::Notched : Tag::Plain);
  } else if (std::regex_match(name, m, two)) {
    const int a = std::stoi(m[2]), b = std::stoi(m[3]);
    g = m[1] == "g" ? Arc::peripheral(a, b) : Arc::chord(a, b);
  } else {
    bad("arc", "cannot read arc name '" + name + "' (expected r3, r3*, g0,2 or c1,4)");
  }
  validate_arc(S, g);
  return g;
}

Rep build_module(const Algebra& A, const ModuleSpec& spec, const TriangulationData* D) {
  const Presentation& P = A.presentation();
  if (spec.expr.empty()) {
    if (static_cast<int>(spec.dims.size()) != A.num_vertices()) bad("module", "dims must list every vertex");
    std::vector<Matrix> mats;
    for (int a = 0; a < A.num_arrows(); ++a) mats.emplace_back(spec.dims[P.arrows[a].to], spec.dims[P.arrows[a].from]);
    for (const auto& [id, rows] : spec.matrices) {
      const int a = P.arrow_index(id);
      if (a < 0) bad("module.arrows", "unknown arrow '" + id + "'");
      Matrix& M = mats[a];
      if (rows.size() != M.rows()) bad("module.arrows." + id, "wrong number of rows");
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != M.cols()) bad("module.arrows." + id, "wrong number of columns");
        for (std::size_t c = 0; c < rows[r].size(); ++c) M(r, c) = A.field().from_int(rows[r][c]);
      }
    }
    return Rep(A, spec.dims, mats);
  }
  static const std::regex term(R"(\s*([PISM])\(([^()]+)\)\s*)");
  std::vector<Rep> parts;
  std::string rest = spec.expr;
  std::size_t start = 0;
  while (start <= rest.size()) {
    std::size_t plus = rest.find('+', start);
    // arc names contain commas but never '+'
    std::string t = rest.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    std::smatch m;
    if (!std::regex_match(t, m, term)) bad("module", "cannot read term '" + t + "' in '" + spec.expr + "'");
    const std::string kind = m[1], arg = m[2];
    if (kind == "M") {
      if (!D) bad("module", "M(arc) needs a triangulation input");
      parts.push_back(arc_module(*D, A, parse_arc_name(D->T.surface(), arg)));
    } else {
      const int v = P.vertex_index(arg);
      if (v < 0) bad("module", "unknown vertex '" + arg + "'");
      parts.push_back(kind == "P" ? projective(A, v) : kind == "I" ? injective(A, v) : simple(A, v));
    }
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return direct_sum(A, parts);
}

json rep_to_json(const Rep& M) {
  const Presentation& P = M.algebra().presentation();
  json j;
  j["dims"] = M.dims();
  json arrows = json::object();
  for (int a = 0; a < M.algebra().num_arrows(); ++a) {
    const Matrix& X = M.arrow(a);
    if (X.empty()) continue;
    json rows = json::array();
    for (std::size_t r = 0; r < X.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < X.cols(); ++c) row.push_back(M.field().to_signed(X(r, c)));
      rows.push_back(row);
    }
    arrows[P.arrows[a].id] = rows;
  }
  j["arrows"] = arrows;
  return j;
}

}  // namespace cmpgeo
