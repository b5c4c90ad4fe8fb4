#ifndef QUIVERFORGE_TRIQUIVER_HPP
#define QUIVERFORGE_TRIQUIVER_HPP

#include <map>
#include <optional>
#include <vector>

#include "ribbon.hpp"
#include "scalar.hpp"

namespace qf {

// Multiplicities m and scalars c are g-invariant; lambda lives on f-fixed
// arrows only.
struct GInvariantData {
  std::vector<int> m;              // per arrow
  std::vector<Scalar> c;           // per arrow
  std::map<int, Scalar> lambda;    // per f-fixed arrow

  void validate(RibbonQuiver const &rq) const;
};

bool is_triangulation(RibbonQuiver const &rq);

// A triangulation structure on a bare quiver, if any (any two are isomorphic).
std::optional<RibbonQuiver> structure_for_quiver(Quiver const &q);
// All triangulation structures on q (not deduplicated).
std::vector<RibbonQuiver> all_structures_for_quiver(Quiver const &q);

enum class BlockKind { A, B, C };

struct BlockDecomposition {
  std::vector<BlockKind> blocks;
  // Outlet slots are numbered consecutively per block (A:1, B:1, C:3);
  // matching[slot] = matched slot, a fixed-point-free cross-block involution.
  std::vector<int> matching;
};

int outlet_count(BlockKind k);
BlockDecomposition block_decompose(RibbonQuiver const &tq);
RibbonQuiver compose_blocks(BlockDecomposition const &bd);

// Connected triangulation quivers with n vertices, up to isomorphism.
std::vector<RibbonQuiver> enumerate_triangulation_quivers(int n);
// Brute-force oracle over all f with f^3 = id on all degree-valid quivers.
std::vector<RibbonQuiver> enumerate_oracle(int n);

bool min_cycle_at_least_3(RibbonQuiver const &tq);
// Direct shortest-nontrivial-cycle scan on the underlying digraph.
int shortest_nontrivial_cycle(RibbonQuiver const &tq);

struct MutationResult {
  RibbonQuiver quiver;
  bool changed = true;
  std::optional<GInvariantData> data;
};

MutationResult mutate(RibbonQuiver const &tq, int vertex,
                      std::optional<GInvariantData> const &data = std::nullopt);

bool is_admissible(RibbonQuiver const &tq, std::vector<int> const &m);
bool is_exceptional(RibbonQuiver const &tq, std::vector<int> const &m);

std::pair<int, bool> g_cycle_count_bound(RibbonQuiver const &tq);

} // namespace qf

#endif
