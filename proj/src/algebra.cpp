#include "algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>


namespace cmpgeo {

int Presentation::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return static_cast<int>(i);
  return -1;
}

int Presentation::arrow_index(const std::string& id) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].id == id) return static_cast<int>(i);
  return -1;
}

int Presentation::path_end(const Path& p) const {
  int v = p.start;
  for (int a : p.arrows) {
    if (a < 0 || a >= static_cast<int>(arrows.size()))
      fail(ErrorKind::InvalidPresentation, "arrow index out of range");
    if (arrows[a].from != v) fail(ErrorKind::InvalidPresentation, "path is not composable");
    v = arrows[a].to;
  }
  return v;
}

Presentation Presentation::opposite() const {
  Presentation op;
  op.vertices = vertices;
  op.field = field;
  op.arrows = arrows;
  for (auto& a : op.arrows) std::swap(a.from, a.to);
  for (const auto& rel : relations) {
    Relation r;
    for (const auto& t : rel) {
      Term u;
      u.coeff = t.coeff;
      u.path.start = path_end(t.path);
      u.path.arrows.assign(t.path.arrows.rbegin(), t.path.arrows.rend());
      r.push_back(std::move(u));
    }
    op.relations.push_back(std::move(r));
  }
  return op;
}

void Presentation::validate() const {
  require(is_prime(field.p) && field.p < (1u << 31), ErrorKind::InvalidCharacteristic,
          "characteristic " + std::to_string(field.p) + " is not a supported prime");
  require(!vertices.empty(), ErrorKind::InvalidPresentation, "quiver has no vertices");
  const int n = static_cast<int>(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      require(vertices[i] != vertices[j], ErrorKind::InvalidPresentation,
              "duplicate vertex " + vertices[i]);
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto& a = arrows[i];
    require(a.from >= 0 && a.from < n && a.to >= 0 && a.to < n, ErrorKind::InvalidPresentation,
            "arrow " + a.id + " has an unknown endpoint");
    for (std::size_t j = i + 1; j < arrows.size(); ++j)
      require(a.id != arrows[j].id, ErrorKind::InvalidPresentation, "duplicate arrow " + a.id);
  }
  for (std::size_t r = 0; r < relations.size(); ++r) {
    const auto& rel = relations[r];
    require(!rel.empty(), ErrorKind::InvalidRelation, "relation " + std::to_string(r) + " is empty");
    int s = rel[0].path.start, e = -1;
    for (const auto& t : rel) {
      require(t.path.length() >= 2, ErrorKind::InvalidRelation,
              "relation " + std::to_string(r) + " has a term of length < 2");
      int te;
      try {
        te = path_end(t.path);
      } catch (const Error&) {
        fail(ErrorKind::InvalidRelation, "relation " + std::to_string(r) + " has a broken path");
      }
      if (e < 0) e = te;
      require(t.path.start == s && te == e, ErrorKind::InvalidRelation,
              "terms of relation " + std::to_string(r) + " are not parallel");
    }
  }
}

namespace {

struct Truncation {
  // all paths of length <= N, grouped by (start, end) and sorted longest first
  std::vector<Path> paths;
  std::vector<int> end;
  std::map<Path, int> index;
  std::vector<std::vector<std::vector<int>>> block;
  std::vector<int> col;  // column of a path inside its block
};

bool longer_first(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() > b.length();
  return a.arrows < b.arrows;
}

Truncation enumerate_paths(const Presentation& pres, int N) {
  const int n = static_cast<int>(pres.vertices.size());
  Truncation t;
  std::vector<std::vector<int>> out(n);
  for (std::size_t a = 0; a < pres.arrows.size(); ++a) out[pres.arrows[a].from].push_back(int(a));
  std::vector<Path> frontier;
  std::vector<int> fend;
  for (int v = 0; v < n; ++v) {
    frontier.push_back(Path{v, {}});
    fend.push_back(v);
  }
  for (int len = 0; len <= N; ++len) {
    std::vector<Path> next;
    std::vector<int> nend;
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      t.paths.push_back(frontier[k]);
      t.end.push_back(fend[k]);
      if (len == N) continue;
      for (int a : out[fend[k]]) {
        Path q = frontier[k];
        q.arrows.push_back(a);
        next.push_back(std::move(q));
        nend.push_back(pres.arrows[a].to);
      }
    }
    frontier = std::move(next);
    fend = std::move(nend);
  }
  t.block.assign(n, std::vector<std::vector<int>>(n));
  for (std::size_t i = 0; i < t.paths.size(); ++i) {
    t.index[t.paths[i]] = static_cast<int>(i);
    t.block[t.paths[i].start][t.end[i]].push_back(static_cast<int>(i));
  }
  t.col.assign(t.paths.size(), 0);
  for (auto& row : t.block)
    for (auto& b : row) {
      std::sort(b.begin(), b.end(),
                [&](int x, int y) { return longer_first(t.paths[x], t.paths[y]); });
      for (std::size_t c = 0; c < b.size(); ++c) t.col[b[c]] = static_cast<int>(c);
    }
  return t;
}

// Incremental echelon basis of a subspace of F^width.
struct Echelon {
  std::size_t width = 0;
  std::vector<std::vector<u32>> rows;
  std::vector<std::size_t> pivot;

  void insert(const Field& F, std::vector<u32> v) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      u32 c = v[pivot[k]];
      if (!c) continue;
      u32 nc = F.neg(c);
      const auto& r = rows[k];
      for (std::size_t j = 0; j < width; ++j)
        if (r[j]) v[j] = F.add(v[j], F.mul(nc, r[j]));
    }
    std::size_t p = 0;
    while (p < width && v[p] == 0) ++p;
    if (p == width) return;
    u32 iv = F.inv(v[p]);
    for (auto& x : v) x = F.mul(x, iv);
    rows.push_back(std::move(v));
    pivot.push_back(p);
  }
};

}  // namespace

PathBasis compute_path_basis(const Presentation& pres, int max_len) {
  pres.validate();
  const Field& F = pres.field;
  const int n = static_cast<int>(pres.vertices.size());

  for (int N = 1; N <= max_len; ++N) {
    Truncation t = enumerate_paths(pres, N);
    std::vector<std::vector<Echelon>> ech(n, std::vector<Echelon>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ech[i][j].width = t.block[i][j].size();

    std::vector<std::vector<int>> ending(n), starting(n);
    for (std::size_t k = 0; k < t.paths.size(); ++k) {
      ending[t.end[k]].push_back(static_cast<int>(k));
      starting[t.paths[k].start].push_back(static_cast<int>(k));
    }

    for (const auto& rel : pres.relations) {
      const int a = rel[0].path.start, b = pres.path_end(rel[0].path);
      std::size_t minlen = rel[0].path.length();
      for (const auto& term : rel) minlen = std::min(minlen, term.path.length());
      for (int u : ending[a]) {
        const Path& pu = t.paths[u];
        if (pu.length() + minlen > std::size_t(N)) continue;
        for (int v : starting[b]) {
          const Path& pv = t.paths[v];
          if (pu.length() + minlen + pv.length() > std::size_t(N)) continue;
          const int s = pu.start, e = t.end[v];
          std::vector<u32> row(ech[s][e].width, 0);
          bool nonzero = false;
          for (const auto& term : rel) {
            if (pu.length() + term.path.length() + pv.length() > std::size_t(N)) continue;
            Path w{s, pu.arrows};
            w.arrows.insert(w.arrows.end(), term.path.arrows.begin(), term.path.arrows.end());
            w.arrows.insert(w.arrows.end(), pv.arrows.begin(), pv.arrows.end());
            int c = t.col[t.index.at(w)];
            row[c] = F.add(row[c], term.coeff);
            nonzero = true;
          }
          if (nonzero) ech[s][e].insert(F, std::move(row));
        }
      }
    }

    // Fully reduce each block and test whether the top layer vanishes.
    bool stable = true;
    std::vector<std::vector<Matrix>> red(n, std::vector<Matrix>(n));
    std::vector<std::vector<std::vector<std::size_t>>> piv(n, std::vector<std::vector<std::size_t>>(n));
    for (int i = 0; i < n && stable; ++i)
      for (int j = 0; j < n && stable; ++j) {
        const auto& E = ech[i][j];
        Matrix m(E.rows.size(), E.width);
        for (std::size_t r = 0; r < E.rows.size(); ++r)
          std::copy(E.rows[r].begin(), E.rows[r].end(), m.row(r));
        piv[i][j] = rref(F, m);
        red[i][j] = std::move(m);
        const auto& blk = t.block[i][j];
        std::vector<int> pivot_row(blk.size(), -1);
        for (std::size_t r = 0; r < piv[i][j].size(); ++r) pivot_row[piv[i][j][r]] = int(r);
        for (std::size_t c = 0; c < blk.size(); ++c) {
          if (t.paths[blk[c]].length() != std::size_t(N)) continue;
          int r = pivot_row[c];
          if (r < 0) {
            stable = false;
            break;
          }
          for (std::size_t j2 = 0; j2 < blk.size(); ++j2)
            if (j2 != c && red[i][j](r, j2)) {
              stable = false;
              break;
            }
          if (!stable) break;
        }
      }
    if (!stable) continue;

    PathBasis B;
    B.vanishing_length = N;
    B.block.assign(n, std::vector<std::vector<int>>(n));
    B.trivial.assign(n, -1);
    std::vector<int> word_of_path(t.paths.size(), -1);
    // normal form of each truncated path, in block-column coordinates
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto& blk = t.block[i][j];
        std::vector<char> is_piv(blk.size(), 0);
        for (auto c : piv[i][j]) is_piv[c] = 1;
        // words within a block: shortest first
        for (std::size_t c = blk.size(); c-- > 0;) {
          if (is_piv[c]) continue;
          int id = static_cast<int>(B.words.size());
          B.words.push_back(t.paths[blk[c]]);
          B.word_end.push_back(j);
          B.pos_in_block.push_back(static_cast<int>(B.block[i][j].size()));
          B.block[i][j].push_back(id);
          word_of_path[blk[c]] = id;
          if (t.paths[blk[c]].length() == 0) B.trivial[i] = id;
        }
      }
    auto normal_form = [&](int path) -> SparseVec {
      if (word_of_path[path] >= 0) return {{word_of_path[path], 1}};
      const int i = t.paths[path].start, j = t.end[path];
      const auto& blk = t.block[i][j];
      const auto& pv = piv[i][j];
      std::size_t c = t.col[path];
      std::size_t r = std::find(pv.begin(), pv.end(), c) - pv.begin();
      SparseVec out;
      for (std::size_t c2 = 0; c2 < blk.size(); ++c2) {
        if (c2 == c) continue;
        u32 x = red[i][j](r, c2);
        if (x) out.emplace_back(word_of_path[blk[c2]], F.neg(x));
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    B.right_mult.assign(B.words.size(), std::vector<SparseVec>(pres.arrows.size()));
    for (std::size_t w = 0; w < B.words.size(); ++w)
      for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
        if (pres.arrows[a].from != B.word_end[w]) continue;
        Path q = B.words[w];
        q.arrows.push_back(static_cast<int>(a));
        B.right_mult[w][a] = normal_form(t.index.at(q));
      }
    return B;
  }
  fail(ErrorKind::NotFiniteDimensional,
       "paths of length " + std::to_string(max_len) + " do not all lie in the ideal");
}

SparseVec right_multiply(const Field& F, const PathBasis& basis, const SparseVec& x, int arrow) {
  std::map<int, u32> acc;
  for (auto [w, c] : x)
    for (auto [w2, c2] : basis.right_mult[w][arrow]) {
      u32& slot = acc[w2];
      slot = F.add(slot, F.mul(c, c2));
    }
  SparseVec out;
  for (auto [w, c] : acc)
    if (c) out.emplace_back(w, c);
  return out;
}

SparseVec reduce_path(const Presentation& pres, const PathBasis& basis, const Path& path) {
  pres.path_end(path);
  SparseVec x{{basis.trivial[path.start], 1}};
  for (int a : path.arrows) {
    x = right_multiply(pres.field, basis, x, a);
    if (x.empty()) break;
  }
  return x;
}

Algebra Algebra::create(Presentation pres, int max_len) {
  auto d = std::make_shared<AlgebraData>();
  d->pres[0] = std::move(pres);
  d->pres[1] = d->pres[0].opposite();
  d->basis[0] = compute_path_basis(d->pres[0], max_len);
  d->basis[1] = compute_path_basis(d->pres[1], max_len);
  const int n = static_cast<int>(d->pres[0].vertices.size());
  for (int s = 0; s < 2; ++s) {
    const PathBasis& B = d->basis[s];
    const Presentation& P = d->pres[s];
    for (int i = 0; i < n; ++i) {
      ModuleData m;
      for (int v = 0; v < n; ++v) m.dims.push_back(static_cast<int>(B.block[i][v].size()));
      for (const auto& a : P.arrows) {
        Matrix x(m.dims[a.to], m.dims[a.from]);
        int arrow = static_cast<int>(&a - P.arrows.data());
        for (int w : B.block[i][a.from])
          for (auto [w2, c] : B.right_mult[w][arrow]) x(B.pos_in_block[w2], B.pos_in_block[w]) = c;
        m.mats.push_back(std::move(x));
      }
      d->projectives[s].push_back(std::move(m));
    }
  }
  // I(i) is the dual of the projective at i over the opposite algebra.
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < n; ++i) {
      ModuleData m = d->projectives[1 - s][i];
      for (auto& x : m.mats) x = x.transpose();
      d->injectives[s].push_back(std::move(m));
    }
  return Algebra(d, 0);
}

std::vector<std::vector<int>> cartan_matrix(const Algebra& A) {
  const int n = A.num_vertices();
  std::vector<std::vector<int>> c(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j] = static_cast<int>(A.basis().block[i][j].size());
  return c;
}

std::string path_to_string(const Presentation& pres, const Path& p) {
  if (p.arrows.empty()) return "e_" + pres.vertices[p.start];
  std::ostringstream os;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) os << (k ? "*" : "") << pres.arrows[p.arrows[k]].id;
  return os.str();
}

}  // namespace cmpgeo
