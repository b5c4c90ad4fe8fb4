#include "quiverforge/triquiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace qf {

void GInvariantData::validate(RibbonQuiver const &rq) const {
  int k = rq.n_arrows();
  if ((int)m.size() != k || (int)c.size() != k)
    throw Error("NotGInvariant", "data size mismatch");
  for (int a = 0; a < k; ++a) {
    if (m[a] < 1) throw Error("NotGInvariant", "multiplicity must be positive");
    if (c[a].is_zero()) throw Error("NotGInvariant", "scalar must be nonzero");
    int b = rq.g()(a);
    if (m[a] != m[b] || !(c[a] == c[b]))
      throw Error("NotGInvariant", "m, c must be constant on g-cycles");
  }
  for (auto const &[a, lam] : lambda) {
    (void)lam;
    if (a < 0 || a >= k || rq.f()(a) != a)
      throw Error("NotGInvariant", "lambda key is not an f-fixed arrow");
  }
}

bool is_triangulation(RibbonQuiver const &rq) {
  auto const &f = rq.f();
  return f.compose(f).compose(f).is_identity();
}

std::vector<RibbonQuiver> all_structures_for_quiver(Quiver const &q) {
  int k = q.n_arrows();
  std::vector<std::vector<int>> out(q.n_vertices);
  std::vector<int> indeg(q.n_vertices, 0);
  for (int a = 0; a < k; ++a) {
    out[q.src[a]].push_back(a);
    indeg[q.tgt[a]]++;
  }
  for (int v = 0; v < q.n_vertices; ++v)
    if (out[v].size() != 2 || indeg[v] != 2)
      throw Error("DegreeViolation", "quiver lacks in/out degree 2");

  std::vector<RibbonQuiver> found;
  std::vector<int> f(k, -1);
  std::vector<char> used(k, 0);
  auto rec = [&](auto &&self, int a) -> void {
    if (a == k) {
      Permutation p(f);
      if (p.compose(p).compose(p).is_identity())
        found.push_back(RibbonQuiver(q, p));
      return;
    }
    for (int b : out[q.tgt[a]]) {
      if (used[b]) continue;
      // partial f^3 pruning along assigned chains
      f[a] = b;
      used[b] = 1;
      bool ok = true;
      int x = a;
      // check any fully assigned triple through a
      for (int s = 0; s < 3 && ok; ++s) {
        int y = f[x];
        if (y < 0) break;
        int z = f[y];
        if (z < 0) break;
        int w = f[z];
        if (w >= 0 && w != x) ok = false;
        break;
      }
      if (ok) self(self, a + 1);
      f[a] = -1;
      used[b] = 0;
    }
  };
  rec(rec, 0);
  return found;
}

std::optional<RibbonQuiver> structure_for_quiver(Quiver const &q) {
  auto all = all_structures_for_quiver(q);
  if (all.empty()) return std::nullopt;
  return all.front();
}

int outlet_count(BlockKind k) { return k == BlockKind::C ? 3 : 1; }

RibbonQuiver compose_blocks(BlockDecomposition const &bd) {
  // slot -> (block index, local vertex); vertices per block
  std::vector<int> slot_block, slot_vertex;
  std::vector<int> block_vbase;
  int nv = 0;
  for (size_t i = 0; i < bd.blocks.size(); ++i) {
    block_vbase.push_back(nv);
    switch (bd.blocks[i]) {
    case BlockKind::A:
      slot_block.push_back((int)i);
      slot_vertex.push_back(nv);
      nv += 1;
      break;
    case BlockKind::B:
      // vertex nv = internal loop vertex, nv+1 = outlet
      slot_block.push_back((int)i);
      slot_vertex.push_back(nv + 1);
      nv += 2;
      break;
    case BlockKind::C:
      for (int j = 0; j < 3; ++j) {
        slot_block.push_back((int)i);
        slot_vertex.push_back(nv + j);
      }
      nv += 3;
      break;
    }
  }
  int ns = (int)slot_block.size();
  if ((int)bd.matching.size() != ns)
    throw Error("InvalidMatching", "matching size mismatch");
  for (int s = 0; s < ns; ++s) {
    int t = bd.matching[s];
    if (t < 0 || t >= ns || t == s || bd.matching[t] != s)
      throw Error("InvalidMatching", "not a fixed-point-free involution");
    if (slot_block[t] == slot_block[s])
      throw Error("InvalidMatching", "outlets matched within one block");
  }
  // union-find over vertices
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int s = 0; s < ns; ++s)
    parent[find(slot_vertex[s])] = find(slot_vertex[bd.matching[s]]);
  std::vector<int> dense(nv, -1);
  int n = 0;
  for (int v = 0; v < nv; ++v)
    if (find(v) == v) dense[v] = n++;
  auto vid = [&](int v) { return dense[find(v)]; };

  Quiver q;
  q.n_vertices = n;
  std::vector<int> fimg;
  auto add_arrow = [&](int s, int t) {
    q.src.push_back(vid(s));
    q.tgt.push_back(vid(t));
    return (int)q.src.size() - 1;
  };
  for (size_t i = 0; i < bd.blocks.size(); ++i) {
    int vb = block_vbase[i];
    switch (bd.blocks[i]) {
    case BlockKind::A: {
      int a = add_arrow(vb, vb);
      fimg.push_back(a);
      break;
    }
    case BlockKind::B: {
      int a = add_arrow(vb, vb);
      int b = add_arrow(vb, vb + 1);
      int c = add_arrow(vb + 1, vb);
      fimg.push_back(b);
      fimg.push_back(c);
      fimg.push_back(a);
      (void)a;
      break;
    }
    case BlockKind::C: {
      int a = add_arrow(vb, vb + 1);
      int b = add_arrow(vb + 1, vb + 2);
      int c = add_arrow(vb + 2, vb);
      fimg.push_back(b);
      fimg.push_back(c);
      fimg.push_back(a);
      (void)a;
      break;
    }
    }
  }
  return RibbonQuiver(std::move(q), Permutation(fimg));
}

BlockDecomposition block_decompose(RibbonQuiver const &tq) {
  if (!is_triangulation(tq))
    throw Error("NoTriangulationStructure", "f^3 is not the identity");
  BlockDecomposition bd;
  // per vertex: list of (slot) outlet occurrences
  std::vector<std::vector<int>> at_vertex(tq.n_vertices());
  int slot = 0;
  auto add_block = [&](BlockKind k, std::vector<int> const &outlet_vertices) {
    bd.blocks.push_back(k);
    for (int v : outlet_vertices) at_vertex[v].push_back(slot++);
  };
  for (auto const &cyc : tq.f_cycles()) {
    if (cyc.size() == 1) {
      add_block(BlockKind::A, {tq.src(cyc[0])});
    } else if (cyc.size() == 3) {
      int loop = -1;
      for (int a : cyc)
        if (tq.src(a) == tq.tgt(a)) loop = a;
      if (loop >= 0) {
        add_block(BlockKind::B, {tq.tgt(tq.f()(loop))});
      } else {
        int a = cyc[0];
        add_block(BlockKind::C, {tq.src(a), tq.src(tq.f()(a)), tq.src(tq.f()(tq.f()(a)))});
      }
    } else {
      throw Error("NoTriangulationStructure", "f-cycle of invalid length");
    }
  }
  bd.matching.assign(slot, -1);
  for (int v = 0; v < tq.n_vertices(); ++v) {
    auto const &occ = at_vertex[v];
    if (occ.empty()) continue; // internal B vertex
    if (occ.size() != 2)
      throw Error("InvalidMatching", "vertex is not a merge of two outlets");
    bd.matching[occ[0]] = occ[1];
    bd.matching[occ[1]] = occ[0];
  }
  return bd;
}

namespace {

void matchings_rec(std::vector<int> &match, std::vector<int> const &block_of,
                   std::vector<RibbonQuiver> &out,
                   std::map<std::vector<int>, bool> &seen,
                   std::vector<BlockKind> const &blocks) {
  int ns = (int)match.size();
  int s = 0;
  while (s < ns && match[s] >= 0) ++s;
  if (s == ns) {
    BlockDecomposition bd{blocks, match};
    RibbonQuiver rq = compose_blocks(bd);
    if (!rq.connected()) return;
    auto key = rq.canonical_form();
    if (!seen.emplace(std::move(key), true).second) return;
    out.push_back(std::move(rq));
    return;
  }
  for (int t = s + 1; t < ns; ++t) {
    if (match[t] >= 0 || block_of[t] == block_of[s]) continue;
    match[s] = t;
    match[t] = s;
    matchings_rec(match, block_of, out, seen, blocks);
    match[s] = match[t] = -1;
  }
}

} // namespace

std::vector<RibbonQuiver> enumerate_triangulation_quivers(int n) {
  std::vector<RibbonQuiver> out;
  if (n <= 0) return out;
  std::map<std::vector<int>, bool> seen;
  // n = (a + 3b + 3c)/2 over block multisets of types A,B,C
  for (int c = 0; 3 * c <= 2 * n; ++c) {
    for (int b = 0; 3 * (b + c) <= 2 * n; ++b) {
      int a = 2 * n - 3 * b - 3 * c;
      if (a < 0) continue;
      std::vector<BlockKind> blocks;
      for (int i = 0; i < a; ++i) blocks.push_back(BlockKind::A);
      for (int i = 0; i < b; ++i) blocks.push_back(BlockKind::B);
      for (int i = 0; i < c; ++i) blocks.push_back(BlockKind::C);
      std::vector<int> block_of;
      for (size_t i = 0; i < blocks.size(); ++i)
        for (int j = 0; j < outlet_count(blocks[i]); ++j)
          block_of.push_back((int)i);
      if (block_of.size() % 2) continue;
      std::vector<int> match(block_of.size(), -1);
      matchings_rec(match, block_of, out, seen, blocks);
    }
  }
  std::sort(out.begin(), out.end(), [](RibbonQuiver const &x, RibbonQuiver const &y) {
    return x.canonical_form() < y.canonical_form();
  });
  return out;
}

std::vector<RibbonQuiver> enumerate_oracle(int n) {
  std::vector<RibbonQuiver> out;
  if (n <= 0) return out;
  int k = 2 * n;
  Quiver q;
  q.n_vertices = n;
  q.src.resize(k);
  for (int a = 0; a < k; ++a) q.src[a] = a / 2;
  // f determines t; enumerate all f with f^3 = id
  std::map<std::vector<int>, bool> seen;
  std::vector<int> f(k, -1);
  std::vector<char> used(k, 0);
  auto emit = [&]() {
    Quiver qq = q;
    qq.tgt.resize(k);
    for (int a = 0; a < k; ++a) qq.tgt[a] = q.src[f[a]];
    RibbonQuiver rq(std::move(qq), Permutation(f));
    if (!rq.connected()) return;
    auto key = rq.canonical_form();
    if (seen.emplace(std::move(key), true).second) out.push_back(std::move(rq));
  };
  // place elements into fixed points and 3-cycles
  auto rec = [&](auto &&self, int x) -> void {
    while (x < k && used[x]) ++x;
    if (x == k) {
      emit();
      return;
    }
    used[x] = 1;
    f[x] = x;
    self(self, x + 1);
    for (int y = 0; y < k; ++y) {
      if (used[y]) continue;
      used[y] = 1;
      for (int z = 0; z < k; ++z) {
        if (used[z]) continue;
        used[z] = 1;
        f[x] = y;
        f[y] = z;
        f[z] = x;
        self(self, x + 1);
        used[z] = 0;
      }
      used[y] = 0;
    }
    used[x] = 0;
    f[x] = -1;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](RibbonQuiver const &a, RibbonQuiver const &b) {
    return a.canonical_form() < b.canonical_form();
  });
  return out;
}

bool min_cycle_at_least_3(RibbonQuiver const &tq) {
  for (int a = 0; a < tq.n_arrows(); ++a)
    if (tq.f()(a) == a) return false;
  for (auto const &cyc : tq.g_cycles())
    if (cyc.size() < 3) return false;
  return true;
}

int shortest_nontrivial_cycle(RibbonQuiver const &tq) {
  int best = INT32_MAX;
  for (int v = 0; v < tq.n_vertices(); ++v) {
    // BFS from v over the digraph back to v
    std::vector<int> dist(tq.n_vertices(), -1);
    std::queue<int> bfs;
    dist[v] = 0;
    bfs.push(v);
    while (!bfs.empty()) {
      int x = bfs.front();
      bfs.pop();
      for (int a = 0; a < tq.n_arrows(); ++a) {
        if (tq.src(a) != x) continue;
        int y = tq.tgt(a);
        if (y == v) best = std::min(best, dist[x] + 1);
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          bfs.push(y);
        }
      }
    }
  }
  return best;
}

namespace {

template <class T>
void transport(std::vector<T> &v, std::map<int, T> const &updates) {
  for (auto const &[i, val] : updates) v[i] = val;
}

} // namespace

MutationResult mutate(RibbonQuiver const &tq, int vertex,
                      std::optional<GInvariantData> const &data) {
  if (vertex < 0 || vertex >= tq.n_vertices())
    throw Error("BadVertex", "vertex out of range");
  if (data) data->validate(tq);
  int k = tq.n_arrows();
  std::vector<int> at;
  for (int a = 0; a < k; ++a)
    if (tq.src(a) == vertex) at.push_back(a);
  int loops = 0;
  for (int a : at)
    if (tq.tgt(a) == vertex) ++loops;

  Quiver q = tq.quiver();
  std::vector<int> f(k);
  for (int a = 0; a < k; ++a) f[a] = tq.f()(a);
  auto reverse_arrow = [&](int a) { std::swap(q.src[a], q.tgt[a]); };

  if (loops > 0) {
    // loop case
    int lp = (tq.tgt(at[0]) == vertex) ? at[0] : at[1];
    int alpha = (lp == at[0]) ? at[1] : at[0];
    bool alpha_loop = tq.tgt(alpha) == vertex;
    if (alpha_loop || tq.g()(lp) == lp)
      return MutationResult{tq, false, data};
    // lp is f-fixed here
    int beta = tq.f()(alpha), gamma = tq.f()(beta);
    reverse_arrow(alpha);
    reverse_arrow(beta);
    reverse_arrow(gamma);
    f[alpha] = gamma;
    f[gamma] = beta;
    f[beta] = alpha;
    f[lp] = lp;
    MutationResult res{RibbonQuiver(std::move(q), Permutation(f)), true, std::nullopt};
    if (data) {
      GInvariantData d = *data;
      transport(d.m, {{alpha, data->m[beta]},
                      {gamma, data->m[beta]},
                      {lp, data->m[beta]},
                      {beta, data->m[gamma]}});
      transport(d.c, {{alpha, data->c[beta]},
                      {gamma, data->c[beta]},
                      {lp, data->c[beta]},
                      {beta, data->c[gamma]}});
      // lambda keys: f-fixed arrows are unchanged (lp stays f-fixed)
      d.validate(res.quiver);
      res.data = std::move(d);
    }
    return res;
  }

  int a1 = at[0], a2 = at[1];
  int b1 = tq.f()(a1), c1 = tq.f()(b1);
  int b2 = tq.f()(a2), c2 = tq.f()(b2);
  // b1, b2 become the new connecting arrows d12, d21
  int d12 = b1, d21 = b2;
  int s_c1 = q.src[c1], s_c2 = q.src[c2];
  int t_a1 = q.tgt[a1], t_a2 = q.tgt[a2];
  reverse_arrow(a1);
  reverse_arrow(a2);
  reverse_arrow(c1);
  reverse_arrow(c2);
  q.src[d12] = s_c1;
  q.tgt[d12] = t_a2;
  q.src[d21] = s_c2;
  q.tgt[d21] = t_a1;
  f[a1] = c2;
  f[c2] = d21;
  f[d21] = a1;
  f[a2] = c1;
  f[c1] = d12;
  f[d12] = a2;
  MutationResult res{RibbonQuiver(std::move(q), Permutation(f)), true, std::nullopt};
  if (data) {
    GInvariantData d = *data;
    transport(d.m, {{a1, data->m[b1]},
                    {c1, data->m[b1]},
                    {a2, data->m[b2]},
                    {c2, data->m[b2]},
                    {d12, data->m[c1]},
                    {d21, data->m[c2]}});
    transport(d.c, {{a1, data->c[b1]},
                    {c1, data->c[b1]},
                    {a2, data->c[b2]},
                    {c2, data->c[b2]},
                    {d12, data->c[c1]},
                    {d21, data->c[c2]}});
    d.validate(res.quiver);
    res.data = std::move(d);
  }
  return res;
}

bool is_admissible(RibbonQuiver const &tq, std::vector<int> const &m) {
  if ((int)m.size() != tq.n_arrows()) return false;
  for (int a = 0; a < tq.n_arrows(); ++a)
    if ((long)m[a] * tq.g().orbit_length(a) < 3) return false;
  return true;
}

bool is_exceptional(RibbonQuiver const &tq, std::vector<int> const &m) {
  if (!tq.connected()) throw Error("Disconnected", "quiver must be connected");
  if (!is_admissible(tq, m))
    throw Error("NotAdmissible", "m_a n_a >= 3 required for all arrows");
  for (int a = 0; a < tq.n_arrows(); ++a)
    if ((long)m[a] * tq.g().orbit_length(a) != 3) return false;
  return true;
}

std::pair<int, bool> g_cycle_count_bound(RibbonQuiver const &tq) {
  if (!tq.connected()) throw Error("Disconnected", "quiver must be connected");
  int count = (int)tq.g_cycles().size();
  return {count, count == tq.n_vertices()};
}

} // namespace qf
