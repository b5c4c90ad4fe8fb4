#ifndef QUIVERFORGE_PATHALG_HPP
#define QUIVERFORGE_PATHALG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ribbon.hpp"
#include "scalar.hpp"

namespace qf {

// Shared context for truncated path-algebra computations: base quiver,
// coefficient characteristic, and the nilpotency cutoff (paths longer than
// trunc are treated as zero).
struct PathCtx {
  Quiver const *q = nullptr;
  unsigned chr = 0;
  int trunc = 0;

  bool operator==(PathCtx const &o) const = default;
};

int path_start(Quiver const &q, Path const &p);
int path_end(Quiver const &q, Path const &p);
bool path_valid(Quiver const &q, Path const &p);

// Degree-first order; ties broken by arrow sequence, then base vertex.
struct PathOrder {
  bool operator()(Path const &a, Path const &b) const {
    if (a.arrows.size() != b.arrows.size())
      return a.arrows.size() < b.arrows.size();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return a.base < b.base;
  }
};

class TruncatedElement {
public:
  TruncatedElement() = default;
  explicit TruncatedElement(PathCtx ctx) : _ctx(ctx) {}
  static TruncatedElement idempotent(PathCtx ctx, int v);
  static TruncatedElement arrow(PathCtx ctx, int a);
  static TruncatedElement single(PathCtx ctx, Path p, Scalar c);

  PathCtx const &ctx() const { return _ctx; }
  std::map<Path, Scalar, PathOrder> const &terms() const { return _terms; }
  bool is_zero() const { return _terms.empty(); }
  int min_degree() const;

  TruncatedElement &add_term(Path p, Scalar c);

  TruncatedElement operator+(TruncatedElement const &o) const;
  TruncatedElement operator-(TruncatedElement const &o) const;
  TruncatedElement operator*(TruncatedElement const &o) const;
  TruncatedElement operator*(Scalar const &c) const;
  TruncatedElement operator-() const;
  bool operator==(TruncatedElement const &o) const {
    return _terms == o._terms;
  }

  std::string str() const;

private:
  PathCtx _ctx{};
  std::map<Path, Scalar, PathOrder> _terms;
};

// Two-sided ideal in the truncated path algebra, closed under a rewriting
// completion so that membership and normal forms are decidable.
class TruncatedIdeal {
public:
  struct Rule {
    Path lhs;
    TruncatedElement rhs;
    bool active = true;
  };

  TruncatedIdeal(PathCtx ctx, std::vector<TruncatedElement> gens);

  PathCtx const &ctx() const { return _ctx; }
  TruncatedElement normal_form(TruncatedElement const &e) const;
  bool contains(TruncatedElement const &e) const;
  std::vector<Rule> const &rules() const { return _rules; }

  // Words irreducible modulo the rewriting system, by increasing degree.
  // Throws StabilizationFailure when words survive up to the cutoff.
  std::vector<Path> const &quotient_basis() const;
  int quotient_dim() const { return (int)quotient_basis().size(); }
  // Smallest degree with no surviving words.
  int stabilization_degree() const;

private:
  void add_pairs(int idx);
  void add_element(TruncatedElement e);
  void run();

  PathCtx _ctx;
  std::vector<Rule> _rules;
  std::map<int, std::vector<int>> _by_first; // arrow -> rule indices
  std::vector<TruncatedElement> _queue;
  std::vector<std::pair<int, int>> _pairs;
  mutable std::optional<std::vector<Path>> _basis;
  mutable int _stab = -1;
};

// Formal linear combination of cyclic paths (stored by the lexicographically
// least rotation).
class Potential {
public:
  explicit Potential(PathCtx ctx) : _ctx(ctx) {}

  PathCtx const &ctx() const { return _ctx; }
  void add_cycle(std::vector<int> arrows, Scalar c);
  std::map<std::vector<int>, Scalar> const &terms() const { return _terms; }
  bool is_zero() const { return _terms.empty(); }

  // Cyclic derivative with respect to one arrow.
  TruncatedElement derivative(int arrow) const;

private:
  PathCtx _ctx;
  std::map<std::vector<int>, Scalar> _terms;
};

// Search for a potential whose cyclic derivatives equal the given family
// (indexed by arrow). Returns nothing when no such potential exists.
std::optional<Potential> find_potential(PathCtx ctx,
                                        std::vector<TruncatedElement> const &rho);

// Apply an arrow substitution (identity on vertices; arrows absent from the
// map are kept).
TruncatedElement substitute(std::map<int, TruncatedElement> const &img,
                            TruncatedElement const &e);

// Invert a substitution of the form a -> c_a * a + (degree >= 2); computed by
// fixed-point iteration up to the cutoff.
std::map<int, TruncatedElement>
invert_substitution(PathCtx ctx, std::map<int, TruncatedElement> const &phi);

// One-variable polynomial, coefficients by ascending degree.
using Poly = std::vector<Scalar>;

// Rebuild an element in another context over the same underlying quiver
// shape (e.g. a different copy or cutoff).
inline TruncatedElement recast(PathCtx ctx, TruncatedElement const &e) {
  TruncatedElement out(ctx);
  for (auto const &[p, c] : e.terms()) out.add_term(p, c);
  return out;
}

// Check the defining conditions of a hyperpotential: rho[a] must live in
// e_{t(a)} KQ e_{s(a)} (else ParallelClassViolation is thrown), and the two
// weighted sums sum_a a*rho[a] and sum_a rho[a]*a must agree (returned).
bool verify_hyperpotential(PathCtx ctx,
                           std::vector<TruncatedElement> const &rho);

// Hyperpotential attached to a ribbon quiver and per-arrow polynomials p, q
// with p constant on f-orbits and q constant on g-orbits (else
// InvarianceViolation): rho[a] = p_a(xi_{f(a)}) xi'_{f(a)}
//                              - q_a(omega_{g(a)}) omega'_{g(a)}.
std::vector<TruncatedElement>
hyperpotential_from_data(PathCtx ctx, RibbonQuiver const &rq,
                         std::vector<Poly> const &p,
                         std::vector<Poly> const &q);

} // namespace qf

#endif
