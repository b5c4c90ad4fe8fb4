#ifndef QUIVERFORGE_JSON_IO_HPP
#define QUIVERFORGE_JSON_IO_HPP

#include <string>

#include "algebras.hpp"
#include "modcat.hpp"
#include "surface.hpp"

namespace qf {

// All emitters produce key-ordered JSON so output is byte-stable; parsers
// throw Error("ParseError", ...) on malformed input.

std::string ribbon_to_json(RibbonQuiver const &rq, bool pretty = false);
RibbonQuiver ribbon_from_json(std::string const &text);

std::string data_to_json(GInvariantData const &data, bool pretty = false);
GInvariantData data_from_json(std::string const &text, unsigned chr = 0);

std::string triangulation_to_json(Triangulation const &t, bool pretty = false);
Triangulation triangulation_from_json(std::string const &text);

std::string surface_to_json(MarkedSurface const &s, bool pretty = false);
MarkedSurface surface_from_json(std::string const &text);

std::string cartan_to_json(CartanData const &cd, bool pretty = false);
std::string spec_to_json(FDAlgebraSpec const &spec, bool pretty = false);
FDAlgebraSpec spec_from_json(std::string const &text);

std::string module_to_json(FDModule const &m, bool pretty = false);
FDModule module_from_json(std::string const &text);

// GraphViz rendering; arrows carry their id and are colored by f-cycle.
std::string ribbon_to_dot(RibbonQuiver const &rq);

// Reads either a ribbon-quiver or a triangulation file; in the latter case
// the quiver is derived. Reports which one was found.
struct LoadedQuiver {
  RibbonQuiver quiver;
  bool from_triangulation = false;
  Triangulation tri; // set when from_triangulation
};
LoadedQuiver quiver_from_any_json(std::string const &text);

} // namespace qf

#endif
