#ifndef QUIVERFORGE_SURFACE_HPP
#define QUIVERFORGE_SURFACE_HPP

#include <array>
#include <utility>
#include <vector>

#include "ribbon.hpp"

namespace qf {

struct MarkedSurface {
  int genus = 0;
  std::vector<int> boundary; // marked points per component, kept sorted
  int punctures = 0;

  int marked_points() const {
    int s = punctures;
    for (int n : boundary) s += n;
    return s;
  }
  void normalize();
  void validate() const;
  bool operator==(MarkedSurface const &o) const = default;
};

// Combinatorial ideal triangulation: oriented triangles listed by clockwise
// side-slots; each slot is either a boundary segment or glued to one other
// slot (an arc). A triangle glued to itself along two slots is self-folded.
struct Triangulation {
  std::vector<std::array<int, 3>> triangles;
  std::vector<int> boundary;
  std::vector<std::pair<int, int>> glue;
};

struct SurfaceQuiver {
  RibbonQuiver quiver;
  std::vector<int> arc_vertex;      // per glue index
  std::vector<int> boundary_vertex; // per boundary index
};

SurfaceQuiver quiver_from_triangulation(Triangulation const &t);
MarkedSurface recover_surface(RibbonQuiver const &tq);

// Flip the arc with the given glue index.
Triangulation flip(Triangulation const &t, int arc);

// Mutation at an f-fixed-loop vertex, with the resulting surface.
std::pair<RibbonQuiver, MarkedSurface> boundary_move(RibbonQuiver const &tq, int vertex);

bool adjacency_quiver_coincides(Triangulation const &t);

// Dimer model with quadrilateral 2-cells: edge set with clockwise-around-white
// permutation f and counterclockwise-around-black permutation g.
struct DimerModel {
  Permutation f;
  Permutation g;
  int white_nodes() const { return (int)f.cycles().size(); }
  int black_nodes() const { return (int)g.cycles().size(); }
};

DimerModel to_dimer(RibbonQuiver const &tq);
RibbonQuiver from_dimer(DimerModel const &d);

} // namespace qf

#endif
