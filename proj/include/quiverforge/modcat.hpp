#ifndef QUIVERFORGE_MODCAT_HPP
#define QUIVERFORGE_MODCAT_HPP

#include <cstdint>
#include <optional>

#include "algebras.hpp"
#include "linalg.hpp"

namespace qf {

// Finite-dimensional basic algebra rebuilt from its structure constants.
// Modules over it are stored as representations of the underlying quiver.
class FDAlgebra {
public:
  explicit FDAlgebra(FDAlgebraSpec spec);

  FDAlgebraSpec const &spec() const { return _spec; }
  unsigned chr() const { return _spec.chr; }
  int n_vertices() const { return _spec.n_vertices; }
  int n_arrows() const { return _spec.n_arrows(); }
  int dim() const { return _spec.dim(); }

  // Right multiplication of a basis element by an arrow, in the basis.
  std::vector<std::pair<int, Scalar>> const &right_by_arrow(int k,
                                                            int a) const {
    return _rmul[k][a];
  }

private:
  FDAlgebraSpec _spec;
  std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> _rmul;
};

// Right module: dimension vector plus one action matrix per arrow, with
// columns indexed by the source block and rows by the target block.
struct FDModule {
  unsigned chr = 0;
  std::vector<int> dim;
  std::vector<Mat> act;

  int total() const {
    int t = 0;
    for (int d : dim) t += d;
    return t;
  }
};

FDModule simple_module(FDAlgebra const &A, int v);
FDModule projective_module(FDAlgebra const &A, int v);

// Kernel of a minimal projective cover.
FDModule syzygy(FDAlgebra const &A, FDModule const &M);

// Existence of an invertible homomorphism. The random search is backed by a
// deterministic evaluation grid, so the answer is exact; when the grid is out
// of reach an error is raised instead of guessing.
bool modules_isomorphic(FDAlgebra const &A, FDModule const &M,
                        FDModule const &N, std::uint64_t seed = 1);

struct OmegaOrbit {
  std::vector<std::vector<int>> dims; // dimension vectors of M, syz M, ...
  int period = 0; // least r >= 1 with syz^r M isomorphic to M, or 0
};

OmegaOrbit omega_orbit(FDAlgebra const &A, FDModule const &M, int max_r,
                       std::uint64_t seed = 1);

// Values on the basis of a linear form that is central (vanishes on
// commutators) and has invertible Gram matrix, when one exists.
std::optional<Vec> symmetrizing_form(FDAlgebra const &A,
                                     std::uint64_t seed = 1);

// Dimension vectors of the projectives against the rows of the Cartan matrix.
bool cartan_cross_check(FDAlgebra const &A);

} // namespace qf

#endif
