#ifndef QUIVERFORGE_RIBBON_HPP
#define QUIVERFORGE_RIBBON_HPP

#include <optional>
#include <vector>

#include "error.hpp"
#include "perm.hpp"

namespace qf {

// Finite quiver with dense vertex/arrow ids.
struct Quiver {
  int n_vertices = 0;
  std::vector<int> src; // per arrow
  std::vector<int> tgt; // per arrow

  int n_arrows() const { return (int)src.size(); }
};

// Arrow path; length-zero paths carry their base vertex.
struct Path {
  int base = -1; // source vertex, always set
  std::vector<int> arrows;

  int length() const { return (int)arrows.size(); }
  bool operator==(Path const &o) const = default;
  auto operator<=>(Path const &o) const = default;
};

struct GCyclePath {
  int n_alpha;      // g-cycle length
  Path omega;       // alpha g(alpha) ... g^{n-1}(alpha)
  Path omega_prime; // one arrow shorter (e_{s(alpha)} if n=1)
  int k_alpha;      // f-cycle length
  Path xi;
  Path xi_prime;
};

struct Isomorphism {
  std::vector<int> vertex_map; // image per vertex of A
  std::vector<int> arrow_map;  // image per arrow of A
};

// Ribbon quiver: quiver with in/out degree 2 everywhere plus a permutation f
// of the arrows with s(f(a)) = t(a). bar swaps the two arrows at each source;
// g = bar . f.
class RibbonQuiver {
public:
  RibbonQuiver(Quiver q, Permutation f);

  Quiver const &quiver() const { return _q; }
  Permutation const &f() const { return _f; }
  Permutation const &bar() const { return _bar; }
  Permutation const &g() const { return _g; }
  int n_vertices() const { return _q.n_vertices; }
  int n_arrows() const { return _q.n_arrows(); }
  int src(int a) const { return _q.src[a]; }
  int tgt(int a) const { return _q.tgt[a]; }

  RibbonQuiver dual() const { return RibbonQuiver(_q, _g); }

  GCyclePath cycle_data(int arrow) const;
  Path target_path(Path const &p) const; // validity helper

  // Rows indexed by g-cycles (sorted by least arrow id), columns by vertex.
  std::vector<std::vector<int>> incidence_matrix() const;
  std::vector<std::vector<int>> g_cycles() const { return _g.cycles(); }
  std::vector<std::vector<int>> f_cycles() const { return _f.cycles(); }

  bool connected() const;

  // Canonical invariant under isomorphism (commuting with s,t,f,bar).
  std::vector<int> canonical_form() const;
  bool self_dual() const;

  bool operator==(RibbonQuiver const &o) const {
    return _q.n_vertices == o._q.n_vertices && _q.src == o._q.src &&
           _q.tgt == o._q.tgt && _f == o._f;
  }

private:
  Quiver _q;
  Permutation _f, _bar, _g;
};

std::optional<Isomorphism> are_isomorphic(RibbonQuiver const &a, RibbonQuiver const &b);
// All isomorphisms a -> b (connected quivers only).
std::vector<Isomorphism> all_isomorphisms(RibbonQuiver const &a, RibbonQuiver const &b);

// Ribbon graph: half-edges, fixed-point-free involution iota (edges),
// permutation sigma (cyclic order at nodes).
struct RibbonGraph {
  Permutation iota;
  Permutation sigma;
};

RibbonGraph to_ribbon_graph(RibbonQuiver const &rq);
RibbonQuiver from_ribbon_graph(RibbonGraph const &rg);

} // namespace qf

#endif
