#ifndef QUIVERFORGE_ALGEBRAS_HPP
#define QUIVERFORGE_ALGEBRAS_HPP

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>

#include "pathalg.hpp"
#include "triquiver.hpp"

namespace qf {

// Symmetric integer matrix of an algebra together with derived invariants.
struct CartanData {
  std::vector<std::vector<long>> matrix;
  long dimension = 0;
  int rank = 0;
  mpz_class det;
};

enum class PresentationKind {
  Brauer,
  Triangulation,
  ExtendedTriangulation,
  Degeneration,
  Printed,
};

// Quotient of a truncated path algebra by explicit relations.
struct PresentedAlgebra {
  std::shared_ptr<Quiver const> quiver;
  unsigned chr = 0;
  int trunc = 0;
  std::vector<TruncatedElement> relations;

  PathCtx ctx() const { return PathCtx{quiver.get(), chr, trunc}; }
};

// Relation presentation driven by a ribbon quiver with g-invariant data.
struct RibbonAlgebra {
  std::shared_ptr<RibbonQuiver const> rq;
  GInvariantData data;
  unsigned chr = 0;
  int trunc = 0;
  PresentationKind kind = PresentationKind::Brauer;
  std::vector<TruncatedElement> relations;
  bool admissible = false;
  bool exceptional = false;

  PathCtx ctx() const { return PathCtx{&rq->quiver(), chr, trunc}; }
  PresentedAlgebra presented() const {
    return PresentedAlgebra{
        std::shared_ptr<Quiver const>(rq, &rq->quiver()), chr, trunc,
        relations};
  }
};

// Cutoff large enough to expose the socle of any finite-dimensional quotient
// attached to the data.
int default_truncation(RibbonQuiver const &rq, GInvariantData const &data);

RibbonAlgebra brauer_presentation(RibbonQuiver const &rq, GInvariantData data,
                                  unsigned chr = 0, int trunc = -1);

// Closed-form basis, dimension and Cartan matrix attached to the data.
std::vector<Path> bga_basis(RibbonQuiver const &rq, GInvariantData const &data);
long bga_dimension(RibbonQuiver const &rq, GInvariantData const &data);
CartanData cartan_data(RibbonQuiver const &rq, GInvariantData const &data);

// Generators per arrow; the extended flag appends the zig-zag zero-relations
// and folds the loop cubic term into the long cycle.
RibbonAlgebra triangulation_presentation(RibbonQuiver const &rq,
                                         GInvariantData data,
                                         bool extended = false,
                                         unsigned chr = 0, int trunc = -1);

// Structure constants of a finite-dimensional quotient, the handoff format
// for module-category computations.
struct FDAlgebraSpec {
  unsigned chr = 0;
  int n_vertices = 0;
  std::vector<Path> basis; // the first n_vertices entries are the e_i
  std::vector<int> src, tgt;
  std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> mult;
  // quiver arrows with their expansions in the basis (an arrow may be
  // reducible in the quotient)
  std::vector<int> arrow_src, arrow_tgt;
  std::vector<std::vector<std::pair<int, Scalar>>> arrow_terms;
  std::vector<TruncatedElement> socle; // z_i per vertex (may be empty)
  int certificate_degree = 0;

  int dim() const { return (int)basis.size(); }
  int n_arrows() const { return (int)arrow_src.size(); }
};

FDAlgebraSpec finite_dimensional_spec(PresentedAlgebra const &p);

// Cartan matrix by counting basis elements in each e_i A e_j.
CartanData cartan_from_spec(FDAlgebraSpec const &spec);

// Certified version: checks zig-zag membership, the stated basis against the
// stabilized one, and the socle-element identities before handing over the
// structure constants. Throws VerificationFailure when a certificate fails.
FDAlgebraSpec verify_finite_dimensional(RibbonAlgebra const &alg);

struct DegenerationExponents {
  long big_n = 0;                  // lcm of the m_a n_a
  std::vector<long> e_num;         // per arrow, N * e_a
  std::vector<long> e_prime_num;   // per arrow, N * e'_a
};

DegenerationExponents degeneration_exponents(RibbonQuiver const &rq,
                                             GInvariantData const &data);

// Fiber of the one-parameter family joining the two presentations: t = 0
// realizes the Brauer relations, t = 1 the extended triangulation ones.
RibbonAlgebra degeneration_family(RibbonQuiver const &rq, GInvariantData data,
                                  Scalar t, int trunc = -1);

// Arrow rescaling a -> t^{N/(m_a n_a)} a carrying the t = 1 fiber onto the
// fiber at t.
std::map<int, TruncatedElement>
degeneration_rescale(PathCtx ctx, RibbonQuiver const &rq,
                     GInvariantData const &data, Scalar t);

// Named one- and two-parameter families.
struct FamilyInstance {
  std::string name;
  std::optional<RibbonAlgebra> tri;       // triangulation data, when known
  std::optional<PresentedAlgebra> printed; // literal relation list
  bool identified = true; // tri and printed describe the same algebra
};

FamilyInstance family_q2b(int k, int s, Scalar a, Scalar c, unsigned chr = 0,
                          int trunc = -1);
FamilyInstance family_q3k(int a, int b, int c, Scalar d, unsigned chr = 0,
                          int trunc = -1);
FamilyInstance family_aq(int q, Scalar lam, unsigned chr = 0, int trunc = -1);
FamilyInstance family_bpq(int p, int q, Scalar lam, unsigned chr = 0,
                          int trunc = -1);
FamilyInstance family_q3a3(int k, unsigned chr = 0, int trunc = -1);
FamilyInstance family_brauer_star(int n, int m, unsigned chr = 0,
                                  int trunc = -1);
// Representation-finite cases: 1 = one loop, 2 = two-cycle, 3 = loop plus
// two-cycle.
FamilyInstance family_bga2cy(int which, int m, unsigned chr = 0,
                             int trunc = -1);

// Potential W_R = -R(omega) + sum of f-triangles on a quiver with a single
// g-cycle and all f-cycles of length 3.
Potential nondegenerate_family_W(PathCtx ctx, RibbonQuiver const &rq,
                                 Poly const &R);

} // namespace qf

#endif
