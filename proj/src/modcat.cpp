#include "quiverforge/modcat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace qf {

namespace {

Mat zeros(int rows, int cols, unsigned chr) {
  return Mat(rows, Vec(cols, Scalar(0, chr)));
}

Mat identity(int n, unsigned chr) {
  Mat m = zeros(n, n, chr);
  for (int i = 0; i < n; ++i) m[i][i] = Scalar(1, chr);
  return m;
}

// a * b where b has bcols columns (kept explicit so zero-row blocks do not
// lose their shape).
Mat matmul(Mat const &a, Mat const &b, int bcols, unsigned chr) {
  Mat out((int)a.size(), Vec(bcols, Scalar(0, chr)));
  for (int i = 0; i < (int)a.size(); ++i)
    for (int k = 0; k < (int)b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < bcols; ++j)
        out[i][j] = out[i][j] + a[i][k] * b[k][j];
    }
  return out;
}

Vec matvec(Mat const &a, Vec const &v, unsigned chr) {
  Vec out(a.size(), Scalar(0, chr));
  for (int i = 0; i < (int)a.size(); ++i)
    for (int k = 0; k < (int)v.size(); ++k)
      if (!a[i][k].is_zero() && !v[k].is_zero())
        out[i] = out[i] + a[i][k] * v[k];
  return out;
}

// Action of a basis word on M, as a matrix from the start block to the end
// block.
Mat word_action(FDModule const &M, Path const &w) {
  unsigned chr = M.chr;
  int cols = M.dim[w.base];
  Mat cur = identity(cols, chr);
  for (int a : w.arrows) cur = matmul(M.act[a], cur, cols, chr);
  return cur;
}

struct Cover {
  FDModule proj;
  // per vertex: list of (summand index, basis word) labelling the block
  std::vector<std::vector<std::pair<int, int>>> blocks;
  std::vector<Mat> phi; // per vertex: dim M_u rows, block-size columns
};

Cover projective_cover(FDAlgebra const &A, FDModule const &M) {
  auto const &sp = A.spec();
  unsigned chr = sp.chr;
  int nv = sp.n_vertices;

  // top of M: complement of the radical part in each block
  std::vector<int> svert;
  std::vector<Vec> svec;
  for (int w = 0; w < nv; ++w) {
    Mat rad;
    for (int a = 0; a < sp.n_arrows(); ++a) {
      if (sp.arrow_tgt[a] != w) continue;
      for (int j = 0; j < M.dim[sp.arrow_src[a]]; ++j) {
        Vec col(M.dim[w], Scalar(0, chr));
        for (int i = 0; i < M.dim[w]; ++i) col[i] = M.act[a][i][j];
        rad.push_back(std::move(col));
      }
    }
    std::vector<char> pivot(M.dim[w], 0);
    if (!rad.empty())
      for (int c : rref(rad)) pivot[c] = 1;
    for (int q = 0; q < M.dim[w]; ++q) {
      if (pivot[q]) continue;
      Vec v(M.dim[w], Scalar(0, chr));
      v[q] = Scalar(1, chr);
      svert.push_back(w);
      svec.push_back(std::move(v));
    }
  }

  Cover cov;
  cov.proj.chr = chr;
  cov.proj.dim.assign(nv, 0);
  cov.blocks.assign(nv, {});
  std::map<std::pair<int, int>, std::pair<int, int>> pos;
  for (int s = 0; s < (int)svert.size(); ++s)
    for (int k = 0; k < sp.dim(); ++k) {
      if (sp.src[k] != svert[s]) continue;
      int u = sp.tgt[k];
      pos[{s, k}] = {u, (int)cov.blocks[u].size()};
      cov.blocks[u].push_back({s, k});
    }
  for (int u = 0; u < nv; ++u) cov.proj.dim[u] = (int)cov.blocks[u].size();

  cov.proj.act.clear();
  for (int a = 0; a < sp.n_arrows(); ++a) {
    int as = sp.arrow_src[a], at = sp.arrow_tgt[a];
    Mat m = zeros(cov.proj.dim[at], cov.proj.dim[as], chr);
    for (int j = 0; j < cov.proj.dim[as]; ++j) {
      auto [s, k] = cov.blocks[as][j];
      for (auto const &[idx, c] : A.right_by_arrow(k, a))
        m[pos.at({s, idx}).second][j] = c;
    }
    cov.proj.act.push_back(std::move(m));
  }

  std::map<int, Mat> wact; // basis word -> action on M
  cov.phi.assign(nv, {});
  for (int u = 0; u < nv; ++u) {
    cov.phi[u] = zeros(M.dim[u], cov.proj.dim[u], chr);
    for (int j = 0; j < cov.proj.dim[u]; ++j) {
      auto [s, k] = cov.blocks[u][j];
      auto it = wact.find(k);
      if (it == wact.end())
        it = wact.emplace(k, word_action(M, sp.basis[k])).first;
      Vec img = matvec(it->second, svec[s], chr);
      for (int i = 0; i < M.dim[u]; ++i) cov.phi[u][i][j] = img[i];
    }
  }
  return cov;
}

// Invertibility search in a space spanned by block-diagonal candidates.
// eval(x) must report whether the combination with coefficients x is
// invertible; degree bounds the determinant degree in each variable.
bool find_invertible(int k, unsigned chr, int degree, std::uint64_t seed,
                     std::function<bool(Vec const &)> const &eval) {
  if (k == 0) return false;
  std::mt19937_64 rng(seed);
  long lo = chr == 0 ? -1000 : 0;
  long hi = chr == 0 ? 1000 : (long)chr - 1;
  std::uniform_int_distribution<long> dist(lo, hi);
  for (int t = 0; t < 120; ++t) {
    Vec x;
    bool all_zero = true;
    for (int i = 0; i < k; ++i) {
      long v = dist(rng);
      all_zero = all_zero && v == 0;
      x.push_back(Scalar(v, chr));
    }
    if (!all_zero && eval(x)) return true;
  }
  // deterministic grid: a nonzero determinant polynomial with per-variable
  // degree <= degree cannot vanish on a full grid of degree + 1 values (or on
  // all of a prime field)
  long grid = chr == 0 ? (long)degree + 1 : (long)chr;
  double points = 1;
  for (int i = 0; i < k; ++i) points *= (double)grid;
  if (points > 200000.0)
    throw Error(chr == 0 ? "Inconclusive" : "InconclusiveOverSmallField",
                "invertibility search space too large for an exact sweep");
  std::vector<long> odo(k, 0);
  while (true) {
    bool all_zero = true;
    Vec x;
    for (long v : odo) {
      all_zero = all_zero && v == 0;
      x.push_back(Scalar(v, chr));
    }
    if (!all_zero && eval(x)) return true;
    int i = 0;
    while (i < k && ++odo[i] == grid) odo[i++] = 0;
    if (i == k) break;
  }
  return false;
}

} // namespace

FDAlgebra::FDAlgebra(FDAlgebraSpec spec) : _spec(std::move(spec)) {
  int d = _spec.dim();
  _rmul.assign(d, {});
  for (int k = 0; k < d; ++k) {
    _rmul[k].assign(_spec.n_arrows(), {});
    for (int a = 0; a < _spec.n_arrows(); ++a) {
      if (_spec.tgt[k] != _spec.arrow_src[a]) continue;
      std::map<int, Scalar> acc;
      for (auto const &[b, cb] : _spec.arrow_terms[a]) {
        auto it = _spec.mult.find({k, b});
        if (it == _spec.mult.end()) continue;
        for (auto const &[idx, c] : it->second) {
          auto [pos, fresh] = acc.emplace(idx, cb * c);
          if (!fresh) pos->second = pos->second + cb * c;
        }
      }
      for (auto const &[idx, c] : acc)
        if (!c.is_zero()) _rmul[k][a].push_back({idx, c});
    }
  }
}

FDModule simple_module(FDAlgebra const &A, int v) {
  auto const &sp = A.spec();
  FDModule m;
  m.chr = sp.chr;
  m.dim.assign(sp.n_vertices, 0);
  m.dim[v] = 1;
  for (int a = 0; a < sp.n_arrows(); ++a)
    m.act.push_back(
        zeros(m.dim[sp.arrow_tgt[a]], m.dim[sp.arrow_src[a]], sp.chr));
  return m;
}

FDModule projective_module(FDAlgebra const &A, int v) {
  auto const &sp = A.spec();
  FDModule m;
  m.chr = sp.chr;
  m.dim.assign(sp.n_vertices, 0);
  std::vector<std::vector<int>> blocks(sp.n_vertices);
  std::vector<int> pos(sp.dim(), -1);
  for (int k = 0; k < sp.dim(); ++k) {
    if (sp.src[k] != v) continue;
    pos[k] = (int)blocks[sp.tgt[k]].size();
    blocks[sp.tgt[k]].push_back(k);
  }
  for (int u = 0; u < sp.n_vertices; ++u) m.dim[u] = (int)blocks[u].size();
  for (int a = 0; a < sp.n_arrows(); ++a) {
    int as = sp.arrow_src[a], at = sp.arrow_tgt[a];
    Mat mat = zeros(m.dim[at], m.dim[as], sp.chr);
    for (int j = 0; j < m.dim[as]; ++j)
      for (auto const &[idx, c] : A.right_by_arrow(blocks[as][j], a))
        mat[pos[idx]][j] = c;
    m.act.push_back(std::move(mat));
  }
  return m;
}

FDModule syzygy(FDAlgebra const &A, FDModule const &M) {
  auto const &sp = A.spec();
  unsigned chr = sp.chr;
  Cover cov = projective_cover(A, M);
  int nv = sp.n_vertices;

  std::vector<std::vector<Vec>> ker(nv);
  for (int u = 0; u < nv; ++u)
    ker[u] = nullspace(cov.phi[u], cov.proj.dim[u], chr);

  FDModule out;
  out.chr = chr;
  out.dim.assign(nv, 0);
  for (int u = 0; u < nv; ++u) out.dim[u] = (int)ker[u].size();
  for (int a = 0; a < sp.n_arrows(); ++a) {
    int as = sp.arrow_src[a], at = sp.arrow_tgt[a];
    Mat m = zeros(out.dim[at], out.dim[as], chr);
    // kernel basis as columns of the ambient block
    Mat basis = zeros(cov.proj.dim[at], out.dim[at], chr);
    for (int c = 0; c < out.dim[at]; ++c)
      for (int r = 0; r < cov.proj.dim[at]; ++r) basis[r][c] = ker[at][c][r];
    for (int j = 0; j < out.dim[as]; ++j) {
      Vec img = matvec(cov.proj.act[a], ker[as][j], chr);
      auto coords = solve(basis, img);
      if (!coords)
        throw Error("VerificationFailure", "kernel is not a submodule");
      for (int i = 0; i < out.dim[at]; ++i) m[i][j] = (*coords)[i];
    }
    out.act.push_back(std::move(m));
  }
  return out;
}

bool modules_isomorphic(FDAlgebra const &A, FDModule const &M,
                        FDModule const &N, std::uint64_t seed) {
  auto const &sp = A.spec();
  unsigned chr = sp.chr;
  if (M.dim != N.dim) return false;
  int nv = sp.n_vertices;
  int tot = M.total();
  if (tot == 0) return true;

  std::vector<int> off(nv, 0);
  int unknowns = 0;
  for (int w = 0; w < nv; ++w) {
    off[w] = unknowns;
    unknowns += M.dim[w] * M.dim[w];
  }

  Mat rows;
  for (int a = 0; a < sp.n_arrows(); ++a) {
    int as = sp.arrow_src[a], at = sp.arrow_tgt[a];
    for (int i = 0; i < M.dim[at]; ++i)
      for (int j = 0; j < M.dim[as]; ++j) {
        Vec row(unknowns, Scalar(0, chr));
        bool nz = false;
        for (int q = 0; q < M.dim[at]; ++q) {
          Scalar c = M.act[a][q][j];
          if (c.is_zero()) continue;
          int idx = off[at] + i * M.dim[at] + q;
          row[idx] = row[idx] + c;
          nz = true;
        }
        for (int p = 0; p < M.dim[as]; ++p) {
          Scalar c = N.act[a][i][p];
          if (c.is_zero()) continue;
          int idx = off[as] + p * M.dim[as] + j;
          row[idx] = row[idx] - c;
          nz = true;
        }
        if (nz) rows.push_back(std::move(row));
      }
  }
  auto hom = nullspace(rows, unknowns, chr);
  if (hom.empty()) return false;

  auto eval = [&](Vec const &x) {
    for (int w = 0; w < nv; ++w) {
      int d = M.dim[w];
      if (d == 0) continue;
      Mat h = zeros(d, d, chr);
      for (int t = 0; t < (int)hom.size(); ++t) {
        if (x[t].is_zero()) continue;
        for (int p = 0; p < d; ++p)
          for (int q = 0; q < d; ++q)
            h[p][q] = h[p][q] + x[t] * hom[t][off[w] + p * d + q];
      }
      if (rank(h) != d) return false;
    }
    return true;
  };
  return find_invertible((int)hom.size(), chr, tot, seed, eval);
}

OmegaOrbit omega_orbit(FDAlgebra const &A, FDModule const &M, int max_r,
                       std::uint64_t seed) {
  OmegaOrbit orbit;
  orbit.dims.push_back(M.dim);
  FDModule cur = M;
  for (int r = 1; r <= max_r; ++r) {
    cur = syzygy(A, cur);
    orbit.dims.push_back(cur.dim);
    if (modules_isomorphic(A, M, cur, seed)) {
      orbit.period = r;
      break;
    }
  }
  return orbit;
}

std::optional<Vec> symmetrizing_form(FDAlgebra const &A, std::uint64_t seed) {
  auto const &sp = A.spec();
  unsigned chr = sp.chr;
  int d = sp.dim();

  Mat rows;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec row(d, Scalar(0, chr));
      bool nz = false;
      if (auto it = sp.mult.find({i, j}); it != sp.mult.end())
        for (auto const &[idx, c] : it->second) {
          row[idx] = row[idx] + c;
          nz = true;
        }
      if (auto it = sp.mult.find({j, i}); it != sp.mult.end())
        for (auto const &[idx, c] : it->second) {
          row[idx] = row[idx] - c;
          nz = true;
        }
      if (nz) rows.push_back(std::move(row));
    }
  auto central = nullspace(rows, d, chr);
  if (central.empty()) return std::nullopt;

  Vec found;
  auto eval = [&](Vec const &x) {
    Vec lam(d, Scalar(0, chr));
    for (int t = 0; t < (int)central.size(); ++t) {
      if (x[t].is_zero()) continue;
      for (int i = 0; i < d; ++i) lam[i] = lam[i] + x[t] * central[t][i];
    }
    Mat gram = zeros(d, d, chr);
    for (auto const &[key, terms] : sp.mult)
      for (auto const &[idx, c] : terms)
        gram[key.first][key.second] =
            gram[key.first][key.second] + c * lam[idx];
    if (rank(gram) != d) return false;
    found = lam;
    return true;
  };
  if (!find_invertible((int)central.size(), chr, d, seed, eval))
    return std::nullopt;
  return found;
}

bool cartan_cross_check(FDAlgebra const &A) {
  auto cd = cartan_from_spec(A.spec());
  for (int v = 0; v < A.n_vertices(); ++v) {
    FDModule P = projective_module(A, v);
    for (int u = 0; u < A.n_vertices(); ++u)
      if ((long)P.dim[u] != cd.matrix[v][u]) return false;
  }
  return true;
}

} // namespace qf
