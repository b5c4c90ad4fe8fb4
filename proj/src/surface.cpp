#include "quiverforge/surface.hpp"

#include <algorithm>
#include <map>

#include "quiverforge/triquiver.hpp"

namespace qf {

void MarkedSurface::normalize() { std::sort(boundary.begin(), boundary.end()); }

void MarkedSurface::validate() const {
  if (genus < 0 || punctures < 0)
    throw Error("InvalidSurface", "negative parameter");
  for (int n : boundary)
    if (n < 1) throw Error("InvalidSurface", "empty boundary component");
  if (marked_points() < 1)
    throw Error("InvalidSurface", "at least one marked point required");
  if (genus == 0 && boundary.empty() && punctures <= 2)
    throw Error("InvalidSurface", "sphere with at most two punctures excluded");
  if (genus == 0 && boundary.size() == 1 && boundary[0] == 2 && punctures == 0)
    throw Error("InvalidSurface", "unpunctured digon excluded");
}

namespace {

struct SlotTable {
  std::map<int, int> edge_of_slot;
  int n_arcs = 0;
};

SlotTable index_slots(Triangulation const &t) {
  SlotTable st;
  std::map<int, int> seen; // slot -> occurrences in triangles
  for (auto const &tri : t.triangles)
    for (int s : tri)
      if (++seen[s] > 1)
        throw Error("InvalidGluing", "slot repeated among triangles");
  st.n_arcs = (int)t.glue.size();
  std::map<int, char> used;
  int e = 0;
  for (auto const &[a, b] : t.glue) {
    if (a == b || !seen.count(a) || !seen.count(b))
      throw Error("InvalidGluing", "glue pair references missing slot");
    if (used.count(a) || used.count(b))
      throw Error("InvalidGluing", "slot glued twice");
    used[a] = used[b] = 1;
    st.edge_of_slot[a] = st.edge_of_slot[b] = e++;
  }
  for (int s : t.boundary) {
    if (!t.triangles.empty() && !seen.count(s))
      throw Error("InvalidGluing", "boundary references missing slot");
    if (used.count(s) || st.edge_of_slot.count(s))
      throw Error("InvalidGluing", "slot both glued and boundary");
    st.edge_of_slot[s] = e++;
  }
  for (auto const &[s, cnt] : seen) {
    (void)cnt;
    if (!st.edge_of_slot.count(s))
      throw Error("InvalidGluing", "slot neither glued nor boundary");
  }
  return st;
}

} // namespace

SurfaceQuiver quiver_from_triangulation(Triangulation const &t) {
  // unpunctured monogon: empty triangulation, one boundary segment
  if (t.triangles.empty()) {
    if (t.boundary.size() == 1 && t.glue.empty()) {
      Quiver q;
      q.n_vertices = 1;
      q.src = {0, 0};
      q.tgt = {0, 0};
      return SurfaceQuiver{RibbonQuiver(q, Permutation({0, 1})), {}, {0}};
    }
    throw Error("InvalidGluing", "no triangles");
  }
  auto st = index_slots(t);
  int n_edges = st.n_arcs + (int)t.boundary.size();
  Quiver q;
  q.n_vertices = n_edges;
  std::vector<int> f;
  for (auto const &tri : t.triangles) {
    int base = (int)q.src.size();
    for (int j = 0; j < 3; ++j) {
      q.src.push_back(st.edge_of_slot.at(tri[j]));
      q.tgt.push_back(st.edge_of_slot.at(tri[(j + 1) % 3]));
      f.push_back(base + (j + 1) % 3);
    }
  }
  for (int bi = 0; bi < (int)t.boundary.size(); ++bi) {
    int v = st.edge_of_slot.at(t.boundary[bi]);
    q.src.push_back(v);
    q.tgt.push_back(v);
    f.push_back((int)f.size());
  }
  SurfaceQuiver out{RibbonQuiver(std::move(q), Permutation(f)), {}, {}};
  for (int e = 0; e < st.n_arcs; ++e) out.arc_vertex.push_back(e);
  for (int bi = 0; bi < (int)t.boundary.size(); ++bi)
    out.boundary_vertex.push_back(st.n_arcs + bi);
  return out;
}

MarkedSurface recover_surface(RibbonQuiver const &tq) {
  for (auto const &c : tq.f_cycles())
    if (c.size() != 1 && c.size() != 3)
      throw Error("NotSurfaceLike", "an f-cycle has length other than 1 or 3");
  // the one-vertex quiver with two f-fixed loops is the unpunctured monogon
  if (tq.n_vertices() == 1 && tq.n_arrows() == 2 && tq.f().is_identity())
    return MarkedSurface{0, {1}, 0};
  MarkedSurface s;
  int sum_n = 0;
  for (auto const &cyc : tq.g_cycles()) {
    int m = 0;
    for (int a : cyc)
      if (tq.f()(a) == a) ++m;
    if (m == 0) {
      s.punctures += 1;
    } else {
      s.boundary.push_back(m);
      sum_n += m;
    }
  }
  int b = (int)s.boundary.size();
  int rhs = tq.n_vertices() - 3 * (s.punctures + b) - 2 * sum_n + 6;
  if (rhs < 0 || rhs % 6 != 0)
    throw Error("GenusNotIntegral", "no nonnegative integral genus fits");
  s.genus = rhs / 6;
  s.normalize();
  s.validate();
  return s;
}

Triangulation flip(Triangulation const &t, int arc) {
  if (arc < 0 || arc >= (int)t.glue.size())
    throw Error("NotFlippable", "not an arc");
  auto [p, qslot] = t.glue[arc];
  // locate slots
  int t1 = -1, i1 = -1, t2 = -1, i2 = -1;
  for (int ti = 0; ti < (int)t.triangles.size(); ++ti)
    for (int j = 0; j < 3; ++j) {
      if (t.triangles[ti][j] == p) t1 = ti, i1 = j;
      if (t.triangles[ti][j] == qslot) t2 = ti, i2 = j;
    }
  if (t1 == t2)
    throw Error("NotFlippable", "inner side of a self-folded triangle");
  // quadrilateral sides clockwise: x, y (triangle t1), u, v (triangle t2)
  int sx = t.triangles[t1][(i1 + 1) % 3], sy = t.triangles[t1][(i1 + 2) % 3];
  int su = t.triangles[t2][(i2 + 1) % 3], sv = t.triangles[t2][(i2 + 2) % 3];
  // new triangles: (diag, y, u) on t1's slots, (diag, v, x) on t2's slots
  std::map<int, int> remap; // old slot -> new slot carrying the same side
  int d1 = t.triangles[t1][i1], d2 = t.triangles[t2][i2];
  remap[sy] = t.triangles[t1][(i1 + 1) % 3];
  remap[su] = t.triangles[t1][(i1 + 2) % 3];
  remap[sv] = t.triangles[t2][(i2 + 1) % 3];
  remap[sx] = t.triangles[t2][(i2 + 2) % 3];
  (void)d1;
  (void)d2;
  Triangulation out = t;
  auto ap = [&](int s) {
    auto it = remap.find(s);
    return it == remap.end() ? s : it->second;
  };
  for (auto &pr : out.glue) {
    pr.first = ap(pr.first);
    pr.second = ap(pr.second);
  }
  for (auto &s : out.boundary) s = ap(s);
  return out;
}

std::pair<RibbonQuiver, MarkedSurface> boundary_move(RibbonQuiver const &tq, int vertex) {
  bool has_fixed_loop = false;
  for (int a = 0; a < tq.n_arrows(); ++a)
    if (tq.src(a) == vertex && tq.tgt(a) == vertex && tq.f()(a) == a)
      has_fixed_loop = true;
  if (!has_fixed_loop)
    throw Error("NotApplicable", "vertex is not a boundary segment");
  auto mu = mutate(tq, vertex);
  if (!mu.changed)
    throw Error("NotApplicable", "move does not apply at this vertex");
  return {mu.quiver, recover_surface(mu.quiver)};
}

bool adjacency_quiver_coincides(Triangulation const &t) {
  if (!t.boundary.empty())
    throw Error("NotClosed", "surface has boundary");
  auto sq = quiver_from_triangulation(t);
  auto s = recover_surface(sq.quiver);
  if (s.genus == 0 && s.punctures < 4) return false;
  for (auto const &cyc : sq.quiver.g_cycles())
    if (cyc.size() < 3) return false;
  return true;
}

DimerModel to_dimer(RibbonQuiver const &tq) {
  for (auto const &c : tq.f_cycles())
    if (c.size() != 3)
      throw Error("DictionaryViolation",
                  "dimer requires a closed surface (trivalent white nodes)");
  for (int a = 0; a < tq.n_arrows(); ++a)
    if (tq.g()(a) == a)
      throw Error("DictionaryViolation", "self-folded triangle present");
  return DimerModel{tq.f(), tq.g()};
}

RibbonQuiver from_dimer(DimerModel const &d) {
  int k = d.f.size();
  if (d.g.size() != k) throw Error("DictionaryViolation", "edge set mismatch");
  Permutation bar = d.g.compose(d.f.inverse());
  for (int a = 0; a < k; ++a)
    if (bar(a) == a || bar(bar(a)) != a)
      throw Error("DictionaryViolation", "2-cells are not quadrilaterals");
  auto f3 = d.f.compose(d.f).compose(d.f);
  if (!f3.is_identity())
    throw Error("DictionaryViolation", "white nodes are not trivalent");
  // vertices = bar-orbits
  std::vector<int> vert(k, -1);
  int n = 0;
  for (int a = 0; a < k; ++a) {
    if (vert[a] >= 0) continue;
    vert[a] = vert[bar(a)] = n++;
  }
  Quiver q;
  q.n_vertices = n;
  q.src.resize(k);
  q.tgt.resize(k);
  for (int a = 0; a < k; ++a) {
    q.src[a] = vert[a];
    q.tgt[a] = vert[d.f(a)];
  }
  return RibbonQuiver(std::move(q), d.f);
}

} // namespace qf
