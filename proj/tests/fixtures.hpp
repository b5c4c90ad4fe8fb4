#ifndef QF_TEST_FIXTURES_HPP
#define QF_TEST_FIXTURES_HPP

#include "quiverforge/ribbon.hpp"
#include "quiverforge/triquiver.hpp"

namespace qfx {

using qf::Permutation;
using qf::Quiver;
using qf::RibbonQuiver;

inline RibbonQuiver one_vertex(bool f_swaps) {
  Quiver q;
  q.n_vertices = 1;
  q.src = {0, 0};
  q.tgt = {0, 0};
  std::vector<int> f = f_swaps ? std::vector<int>{1, 0} : std::vector<int>{0, 1};
  return RibbonQuiver(q, Permutation(f));
}

// arrows: alpha=0 (loop at 0), beta=1: 0->1, gamma=2: 1->0, eta=3 (loop at 1)
inline RibbonQuiver quiver2() {
  Quiver q;
  q.n_vertices = 2;
  q.src = {0, 0, 1, 1};
  q.tgt = {0, 1, 0, 1};
  return RibbonQuiver(q, Permutation({1, 2, 0, 3}));
}

// arrows: alpha=0 (loop 0), beta=1: 0->1, gamma=2: 1->0, delta=3: 1->2,
// eta=4: 2->1, xi=5 (loop 2); f=(alpha beta gamma)(xi eta delta)
inline RibbonQuiver quiver3a() {
  Quiver q;
  q.n_vertices = 3;
  q.src = {0, 0, 1, 1, 2, 2};
  q.tgt = {0, 1, 0, 2, 1, 2};
  return RibbonQuiver(q, Permutation({1, 2, 0, 5, 3, 4}));
}

// arrows: a1=0: 0->1, a2=1: 1->2, a3=2: 2->0, b1=3: 1->0, b2=4: 2->1, b3=5: 0->2
inline RibbonQuiver quiver3b() {
  Quiver q;
  q.n_vertices = 3;
  q.src = {0, 1, 2, 1, 2, 0};
  q.tgt = {1, 2, 0, 0, 1, 2};
  return RibbonQuiver(q, Permutation({1, 2, 0, 5, 3, 4}));
}

// loops a1=0,a2=1,a3=2 at 0,1,2; b1=3: 0->1, b2=4: 1->2, b3=5: 2->0
inline RibbonQuiver quiver3prime() {
  Quiver q;
  q.n_vertices = 3;
  q.src = {0, 1, 2, 0, 1, 2};
  q.tgt = {0, 1, 2, 1, 2, 0};
  return RibbonQuiver(q, Permutation({0, 1, 2, 4, 5, 3}));
}

// Markov: a0=0: 0->1, a1=1: 1->2, a2=2: 2->0, a3=3: 0->1, a4=4: 1->2, a5=5: 2->0
inline RibbonQuiver quiver3dprime() {
  Quiver q;
  q.n_vertices = 3;
  q.src = {0, 1, 2, 0, 1, 2};
  q.tgt = {1, 2, 0, 1, 2, 0};
  return RibbonQuiver(q, Permutation({4, 5, 0, 1, 2, 3}));
}

inline RibbonQuiver tetrahedron() {
  // unique 6-vertex connected triangulation quiver with four f-3-cycles and
  // four g-3-cycles that is self-dual
  for (auto const &tq : qf::enumerate_triangulation_quivers(6)) {
    if (tq.n_arrows() != 12) continue;
    bool all3 = true;
    for (auto const &c : tq.f_cycles())
      if (c.size() != 3) all3 = false;
    for (auto const &c : tq.g_cycles())
      if (c.size() != 3) all3 = false;
    if (all3 && tq.self_dual()) return tq;
  }
  throw std::runtime_error("tetrahedron not found");
}

} // namespace qfx

#endif
