#include "quiverforge/algebras.hpp"

#include <algorithm>
#include <numeric>

#include "quiverforge/linalg.hpp"

namespace qf {

namespace {

Scalar to_field(Scalar const &s, unsigned chr) {
  if (s.characteristic() == chr) return s;
  if (s.characteristic() != 0)
    throw Error("FieldMismatch", "cannot move a residue between fields");
  return Scalar(s.value(), chr);
}

GInvariantData to_field(GInvariantData data, unsigned chr) {
  for (auto &x : data.c) x = to_field(x, chr);
  for (auto &[a, x] : data.lambda) x = to_field(x, chr);
  return data;
}

// r arrows along the g-orbit starting at a.
Path g_path(RibbonQuiver const &rq, int a, int r) {
  Path p{rq.src(a), {}};
  int cur = a;
  for (int i = 0; i < r; ++i) {
    p.arrows.push_back(cur);
    cur = rq.g()(cur);
  }
  return p;
}

// cycle repeated `reps` times with the last `drop` arrows removed.
Path repeat_path(Path const &cycle, int reps, int drop) {
  Path p{cycle.base, {}};
  for (int i = 0; i < reps; ++i)
    p.arrows.insert(p.arrows.end(), cycle.arrows.begin(), cycle.arrows.end());
  p.arrows.resize(p.arrows.size() - drop);
  return p;
}

TruncatedElement elt(PathCtx ctx, Path p, Scalar c) {
  return TruncatedElement::single(ctx, std::move(p), std::move(c));
}

TruncatedElement word(PathCtx ctx, int base, std::vector<int> arrows,
                      Scalar c) {
  return elt(ctx, Path{base, std::move(arrows)}, std::move(c));
}

// omega_a^{m_a - 1} omega_a' scaled by c_a.
TruncatedElement long_cycle_tail(PathCtx ctx, RibbonQuiver const &rq,
                                 GInvariantData const &data, int a) {
  Path omega = g_path(rq, a, rq.cycle_data(a).n_alpha);
  return elt(ctx, repeat_path(omega, data.m[a], 1), data.c[a]);
}

int exceptional_case(RibbonQuiver const &rq) {
  // the two exceptional quivers are told apart by size
  return rq.n_vertices() == 2 ? 1 : 2;
}

bool exceptional_scalars_ok(RibbonQuiver const &rq,
                            GInvariantData const &data) {
  if (exceptional_case(rq) == 1) {
    Scalar prod = Scalar::one(data.c[0].characteristic());
    for (auto const &x : data.c) prod = prod * x;
    return !prod.is_one();
  }
  for (int a = 0; a < rq.n_arrows(); ++a) {
    int b = rq.bar()(a);
    Scalar prod = data.c[a] * data.c[b] * data.c[rq.f()(a)] * data.c[rq.f()(b)];
    if (!prod.is_one()) return true;
  }
  return false;
}

std::vector<long> mn_per_arrow(RibbonQuiver const &rq,
                               GInvariantData const &data) {
  std::vector<long> mn(rq.n_arrows());
  for (int a = 0; a < rq.n_arrows(); ++a)
    mn[a] = (long)data.m[a] * rq.cycle_data(a).n_alpha;
  return mn;
}

} // namespace

int default_truncation(RibbonQuiver const &rq, GInvariantData const &data) {
  auto mn = mn_per_arrow(rq, data);
  return (int)(2 * *std::max_element(mn.begin(), mn.end()) + 3);
}

RibbonAlgebra brauer_presentation(RibbonQuiver const &rq, GInvariantData data,
                                  unsigned chr, int trunc) {
  data.validate(rq);
  data = to_field(std::move(data), chr);
  if (trunc < 0) trunc = default_truncation(rq, data);
  RibbonAlgebra alg{std::make_shared<RibbonQuiver>(rq), data, chr, trunc,
                    PresentationKind::Brauer, {}, false, false};
  alg.admissible = is_admissible(rq, data.m);
  alg.exceptional = alg.admissible && is_exceptional(rq, data.m);
  PathCtx ctx = alg.ctx();
  for (int a = 0; a < rq.n_arrows(); ++a)
    alg.relations.push_back(
        word(ctx, rq.src(a), {a, rq.f()(a)}, Scalar::one(chr)));
  for (int v = 0; v < rq.n_vertices(); ++v) {
    int a = -1;
    for (int x = 0; x < rq.n_arrows() && a < 0; ++x)
      if (rq.src(x) == v) a = x;
    int b = rq.bar()(a);
    Path wa = repeat_path(g_path(rq, a, rq.cycle_data(a).n_alpha), data.m[a], 0);
    Path wb = repeat_path(g_path(rq, b, rq.cycle_data(b).n_alpha), data.m[b], 0);
    alg.relations.push_back(elt(ctx, wa, data.c[a]) - elt(ctx, wb, data.c[b]));
  }
  return alg;
}

std::vector<Path> bga_basis(RibbonQuiver const &rq,
                            GInvariantData const &data) {
  std::vector<Path> basis;
  for (int v = 0; v < rq.n_vertices(); ++v) basis.push_back(Path{v, {}});
  for (int a = 0; a < rq.n_arrows(); ++a) {
    long mn = (long)data.m[a] * rq.cycle_data(a).n_alpha;
    for (long r = 0; r + 1 < mn; ++r) basis.push_back(g_path(rq, a, (int)r + 1));
  }
  for (int v = 0; v < rq.n_vertices(); ++v) {
    int a = -1;
    for (int x = 0; x < rq.n_arrows() && a < 0; ++x)
      if (rq.src(x) == v) a = x;
    basis.push_back(
        repeat_path(g_path(rq, a, rq.cycle_data(a).n_alpha), data.m[a], 0));
  }
  return basis;
}

long bga_dimension(RibbonQuiver const &rq, GInvariantData const &data) {
  long dim = 0;
  for (auto const &cyc : rq.g_cycles())
    dim += (long)data.m[cyc[0]] * (long)cyc.size() * (long)cyc.size();
  return dim;
}

namespace {

// fraction-free elimination for the rank and determinant
void fill_rank_det(CartanData &cd) {
  int n = (int)cd.matrix.size();
  std::vector<std::vector<mpz_class>> w(n, std::vector<mpz_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[i][j] = cd.matrix[i][j];
  mpz_class prev = 1;
  int r = 0, sign = 1;
  bool skipped = false;
  for (int c = 0; c < n && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n && p < 0; ++i)
      if (w[i][c] != 0) p = i;
    if (p < 0) {
      skipped = true;
      continue;
    }
    if (p != r) {
      std::swap(w[p], w[r]);
      sign = -sign;
    }
    for (int i = r + 1; i < n; ++i) {
      for (int j = c + 1; j < n; ++j)
        w[i][j] = (w[r][c] * w[i][j] - w[i][c] * w[r][j]) / prev;
      w[i][c] = 0;
    }
    prev = w[r][c];
    ++r;
  }
  cd.rank = r;
  cd.det = (r == n && !skipped) ? mpz_class(sign * prev) : mpz_class(0);
}

} // namespace

CartanData cartan_data(RibbonQuiver const &rq, GInvariantData const &data) {
  int n = rq.n_vertices();
  CartanData cd;
  cd.matrix.assign(n, std::vector<long>(n, 0));
  for (auto const &cyc : rq.g_cycles()) {
    std::vector<long> chi(n, 0);
    for (int a : cyc) chi[rq.src(a)] += 1;
    long m = data.m[cyc[0]];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cd.matrix[i][j] += m * chi[i] * chi[j];
    cd.dimension += m * (long)cyc.size() * (long)cyc.size();
  }
  fill_rank_det(cd);
  return cd;
}

CartanData cartan_from_spec(FDAlgebraSpec const &spec) {
  int n = spec.n_vertices;
  CartanData cd;
  cd.matrix.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < spec.dim(); ++i) cd.matrix[spec.src[i]][spec.tgt[i]] += 1;
  cd.dimension = spec.dim();
  fill_rank_det(cd);
  return cd;
}

RibbonAlgebra triangulation_presentation(RibbonQuiver const &rq,
                                         GInvariantData data, bool extended,
                                         unsigned chr, int trunc) {
  if (!is_triangulation(rq))
    throw Error("NotTriangulation", "f must have cycles of length 1 or 3");
  data.validate(rq);
  data = to_field(std::move(data), chr);
  auto mn = mn_per_arrow(rq, data);
  for (long x : mn)
    if (x < 2) throw Error("Undefined", "m_a n_a >= 2 is required");
  if (trunc < 0) trunc = default_truncation(rq, data);
  RibbonAlgebra alg{std::make_shared<RibbonQuiver>(rq),
                    data,
                    chr,
                    trunc,
                    extended ? PresentationKind::ExtendedTriangulation
                             : PresentationKind::Triangulation,
                    {},
                    is_admissible(rq, data.m),
                    false};
  alg.exceptional = alg.admissible && is_exceptional(rq, data.m);
  if (extended && alg.exceptional && !exceptional_scalars_ok(rq, data))
    throw Error("ExceptionalScalarViolation",
                "scalars fail the exceptional-case condition");
  PathCtx ctx = alg.ctx();
  for (int a = 0; a < rq.n_arrows(); ++a) {
    int b = rq.bar()(a);
    TruncatedElement tail = long_cycle_tail(ctx, rq, data, a);
    if (rq.f()(b) != b) {
      alg.relations.push_back(
          word(ctx, rq.src(b), {b, rq.f()(b)}, Scalar::one(chr)) - tail);
    } else {
      Scalar lam = Scalar::zero(chr);
      if (auto it = data.lambda.find(b); it != data.lambda.end())
        lam = it->second;
      auto sq = word(ctx, rq.src(b), {b, b}, Scalar::one(chr));
      Path omega = g_path(rq, a, rq.cycle_data(a).n_alpha);
      if (extended) {
        alg.relations.push_back(
            sq - tail -
            elt(ctx, repeat_path(omega, data.m[a], 0), data.c[a] * lam));
      } else {
        alg.relations.push_back(sq - word(ctx, rq.src(b), {b, b, b}, lam) -
                                tail);
      }
    }
  }
  if (extended)
    for (int a = 0; a < rq.n_arrows(); ++a) {
      int fa = rq.f()(a);
      alg.relations.push_back(
          word(ctx, rq.src(a), {a, fa, rq.g()(fa)}, Scalar::one(chr)));
    }
  return alg;
}

namespace {

FDAlgebraSpec spec_from_ideal(PresentedAlgebra const &p,
                              TruncatedIdeal const &ideal) {
  PathCtx ctx = p.ctx();
  FDAlgebraSpec spec;
  spec.chr = p.chr;
  spec.n_vertices = p.quiver->n_vertices;
  spec.basis = ideal.quotient_basis();
  spec.certificate_degree = ideal.stabilization_degree();
  std::map<Path, int, PathOrder> index;
  for (int i = 0; i < (int)spec.basis.size(); ++i) {
    index.emplace(spec.basis[i], i);
    spec.src.push_back(path_start(*p.quiver, spec.basis[i]));
    spec.tgt.push_back(path_end(*p.quiver, spec.basis[i]));
  }
  for (int i = 0; i < (int)spec.basis.size(); ++i)
    for (int j = 0; j < (int)spec.basis.size(); ++j) {
      if (spec.tgt[i] != spec.src[j]) continue;
      auto prod = ideal.normal_form(
          elt(ctx, spec.basis[i], Scalar::one(p.chr)) *
          elt(ctx, spec.basis[j], Scalar::one(p.chr)));
      if (prod.is_zero()) continue;
      std::vector<std::pair<int, Scalar>> row;
      for (auto const &[w, c] : prod.terms()) {
        auto it = index.find(w);
        if (it == index.end())
          throw Error("VerificationFailure",
                      "normal form leaves the stabilized basis");
        row.push_back({it->second, c});
      }
      spec.mult.emplace(std::make_pair(i, j), std::move(row));
    }
  for (int a = 0; a < (int)p.quiver->src.size(); ++a) {
    spec.arrow_src.push_back(p.quiver->src[a]);
    spec.arrow_tgt.push_back(p.quiver->tgt[a]);
    auto nf = ideal.normal_form(TruncatedElement::arrow(ctx, a));
    std::vector<std::pair<int, Scalar>> row;
    for (auto const &[w, c] : nf.terms()) {
      auto it = index.find(w);
      if (it == index.end())
        throw Error("VerificationFailure",
                    "normal form leaves the stabilized basis");
      row.push_back({it->second, c});
    }
    spec.arrow_terms.push_back(std::move(row));
  }
  return spec;
}

} // namespace

FDAlgebraSpec finite_dimensional_spec(PresentedAlgebra const &p) {
  TruncatedIdeal ideal(p.ctx(), p.relations);
  return spec_from_ideal(p, ideal);
}

FDAlgebraSpec verify_finite_dimensional(RibbonAlgebra const &alg) {
  if (alg.kind == PresentationKind::Printed)
    return finite_dimensional_spec(alg.presented());
  RibbonQuiver const &rq = *alg.rq;
  bool tri = alg.kind != PresentationKind::Brauer;
  // the full z_i chain holds for the triangulation presentations proper; on
  // other fibers of the degeneration family the zig-zag value picks up powers
  // of t
  bool chain = alg.kind == PresentationKind::Triangulation ||
               alg.kind == PresentationKind::ExtendedTriangulation;
  if (tri && !alg.admissible)
    throw Error("NotAdmissible",
                "certificates require admissible multiplicities");
  if (tri && alg.exceptional && !exceptional_scalars_ok(rq, alg.data))
    throw Error("ExceptionalScalarViolation",
                "scalars fail the exceptional-case condition");
  PathCtx ctx = alg.ctx();
  TruncatedIdeal ideal(ctx, alg.relations);
  FDAlgebraSpec spec = spec_from_ideal(alg.presented(), ideal);

  if (tri) {
    // zig-zag paths must already lie in the closed ideal
    for (int a = 0; a < rq.n_arrows(); ++a) {
      int fa = rq.f()(a);
      if (!ideal.contains(
              word(ctx, rq.src(a), {a, fa, rq.g()(fa)}, Scalar::one(alg.chr))))
        throw Error("VerificationFailure", "zig-zag path is not a relation");
    }
  }

  // socle elements z_i and their defining identities
  spec.socle.clear();
  for (int v = 0; v < rq.n_vertices(); ++v) {
    int a = -1;
    for (int x = 0; x < rq.n_arrows() && a < 0; ++x)
      if (rq.src(x) == v) a = x;
    int b = rq.bar()(a);
    auto za = ideal.normal_form(
        elt(ctx, repeat_path(g_path(rq, a, rq.cycle_data(a).n_alpha),
                             alg.data.m[a], 0),
            alg.data.c[a]));
    auto zb = ideal.normal_form(
        elt(ctx, repeat_path(g_path(rq, b, rq.cycle_data(b).n_alpha),
                             alg.data.m[b], 0),
            alg.data.c[b]));
    if (!(za == zb))
      throw Error("VerificationFailure", "socle identities fail");
    if (chain)
      for (int x : {a, b}) {
        int fx = rq.f()(x);
        auto zig = ideal.normal_form(
            word(ctx, v, {x, fx, rq.f()(fx)}, Scalar::one(alg.chr)));
        if (!(zig == za))
          throw Error("VerificationFailure", "socle identities fail");
      }
    spec.socle.push_back(za);
  }

  // the closed-form basis must coordinatize onto the stabilized one
  auto stated = bga_basis(rq, alg.data);
  if ((int)stated.size() != spec.dim())
    throw Error("VerificationFailure", "stated basis has the wrong size");
  std::map<Path, int, PathOrder> index;
  for (int i = 0; i < spec.dim(); ++i) index.emplace(spec.basis[i], i);
  Mat coords;
  int nz = rq.n_vertices();
  for (int i = 0; i < (int)stated.size(); ++i) {
    TruncatedElement nf =
        i + nz >= (int)stated.size()
            ? spec.socle[i + nz - (int)stated.size()]
            : ideal.normal_form(elt(ctx, stated[i], Scalar::one(alg.chr)));
    Vec row(spec.dim(), Scalar::zero(alg.chr));
    for (auto const &[w, c] : nf.terms()) row[index.at(w)] = c;
    coords.push_back(std::move(row));
  }
  if (rank(coords) != spec.dim())
    throw Error("VerificationFailure", "stated basis does not span");
  return spec;
}

DegenerationExponents degeneration_exponents(RibbonQuiver const &rq,
                                             GInvariantData const &data) {
  if (!is_admissible(rq, data.m))
    throw Error("NotAdmissible", "m_a n_a >= 3 is required");
  if (is_exceptional(rq, data.m))
    throw Error("Exceptional", "the family is undefined in this case");
  auto mn = mn_per_arrow(rq, data);
  DegenerationExponents ex;
  ex.big_n = 1;
  for (long x : mn) ex.big_n = std::lcm(ex.big_n, x);
  ex.e_num.resize(rq.n_arrows());
  ex.e_prime_num.assign(rq.n_arrows(), 0);
  for (int a = 0; a < rq.n_arrows(); ++a) {
    int fa = rq.f()(a), ffa = rq.f()(fa);
    ex.e_num[a] = ex.big_n - ex.big_n / mn[a] - ex.big_n / mn[fa] -
                  ex.big_n / mn[ffa];
    if (fa == a) ex.e_prime_num[a] = ex.big_n - 2 * ex.big_n / mn[a];
  }
  return ex;
}

RibbonAlgebra degeneration_family(RibbonQuiver const &rq, GInvariantData data,
                                  Scalar t, int trunc) {
  data.validate(rq);
  unsigned chr = t.characteristic();
  data = to_field(std::move(data), chr);
  auto ex = degeneration_exponents(rq, data);
  if (trunc < 0) trunc = default_truncation(rq, data);
  RibbonAlgebra alg{std::make_shared<RibbonQuiver>(rq),
                    data,
                    chr,
                    trunc,
                    PresentationKind::Degeneration,
                    {},
                    true,
                    false};
  PathCtx ctx = alg.ctx();
  for (int a = 0; a < rq.n_arrows(); ++a) {
    int b = rq.bar()(a);
    TruncatedElement tail =
        long_cycle_tail(ctx, rq, data, a) * t.pow(ex.e_num[b]);
    if (rq.f()(b) != b) {
      alg.relations.push_back(
          word(ctx, rq.src(b), {b, rq.f()(b)}, Scalar::one(chr)) - tail);
    } else {
      Scalar lam = Scalar::zero(chr);
      if (auto it = data.lambda.find(b); it != data.lambda.end())
        lam = it->second;
      Path omega = g_path(rq, a, rq.cycle_data(a).n_alpha);
      alg.relations.push_back(
          word(ctx, rq.src(b), {b, b}, Scalar::one(chr)) - tail -
          elt(ctx, repeat_path(omega, data.m[a], 0),
              data.c[a] * lam * t.pow(ex.e_prime_num[b])));
    }
  }
  for (int a = 0; a < rq.n_arrows(); ++a) {
    int fa = rq.f()(a);
    alg.relations.push_back(
        word(ctx, rq.src(a), {a, fa, rq.g()(fa)}, Scalar::one(chr)));
  }
  for (int v = 0; v < rq.n_vertices(); ++v) {
    int a = -1;
    for (int x = 0; x < rq.n_arrows() && a < 0; ++x)
      if (rq.src(x) == v) a = x;
    int b = rq.bar()(a);
    Path wa = repeat_path(g_path(rq, a, rq.cycle_data(a).n_alpha), data.m[a], 0);
    Path wb = repeat_path(g_path(rq, b, rq.cycle_data(b).n_alpha), data.m[b], 0);
    alg.relations.push_back(elt(ctx, wa, data.c[a]) - elt(ctx, wb, data.c[b]));
  }
  return alg;
}

std::map<int, TruncatedElement>
degeneration_rescale(PathCtx ctx, RibbonQuiver const &rq,
                     GInvariantData const &data, Scalar t) {
  auto ex = degeneration_exponents(rq, data);
  auto mn = mn_per_arrow(rq, data);
  std::map<int, TruncatedElement> img;
  for (int a = 0; a < rq.n_arrows(); ++a)
    img.emplace(a, TruncatedElement::arrow(ctx, a) * t.pow(ex.big_n / mn[a]));
  return img;
}

namespace {

std::optional<Scalar> cube_root(Scalar const &a) {
  if (a.characteristic() == 0) {
    mpz_class num, den;
    if (!mpz_root(num.get_mpz_t(), a.value().get_num().get_mpz_t(), 3))
      return std::nullopt;
    if (!mpz_root(den.get_mpz_t(), a.value().get_den().get_mpz_t(), 3))
      return std::nullopt;
    return Scalar(mpq_class(num, den), 0);
  }
  for (unsigned x = 0; x < a.characteristic(); ++x) {
    Scalar s((long)x, a.characteristic());
    if (s.pow(3) == a) return s;
  }
  return std::nullopt;
}

std::vector<int> rep(std::vector<int> block, int times,
                     std::vector<int> tail = {}) {
  std::vector<int> out;
  for (int i = 0; i < times; ++i)
    out.insert(out.end(), block.begin(), block.end());
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

} // namespace

FamilyInstance family_q2b(int k, int s, Scalar a, Scalar c, unsigned chr,
                          int trunc) {
  a = to_field(a, chr);
  c = to_field(c, chr);
  if (k < 1 || s < 2 || k + s < 4 || a.is_zero())
    throw Error("ParamViolation", "require k >= 1, s >= 2, k + s >= 4, a != 0");
  if (k == 1 && s == 3 && a.is_one())
    throw Error("ParamViolation", "a != 1 is required when (k, s) = (1, 3)");
  // loop alpha=0 at 0, beta=1: 0->1, gamma=2: 1->0, loop eta=3 at 1
  Quiver q;
  q.n_vertices = 2;
  q.src = {0, 0, 1, 1};
  q.tgt = {0, 1, 0, 1};
  auto rq = std::make_shared<RibbonQuiver>(q, Permutation({0, 3, 1, 2}));
  if (trunc < 0) trunc = 2 * std::max(3 * k, s) + 3;

  FamilyInstance fam;
  fam.name = "Q(2B)_1^{" + std::to_string(k) + "," + std::to_string(s) + "}";
  PresentedAlgebra printed{std::shared_ptr<Quiver const>(rq, &rq->quiver()),
                           chr, trunc, {}};
  PathCtx ctx = printed.ctx();
  Scalar one = Scalar::one(chr);
  printed.relations = {
      word(ctx, 0, {0, 0}, one) - word(ctx, 0, rep({1, 2, 0}, k - 1, {1, 2}), a) -
          word(ctx, 0, rep({1, 2, 0}, k), c),
      word(ctx, 0, {1, 3}, one) - word(ctx, 0, rep({0, 1, 2}, k - 1, {0, 1}), one),
      word(ctx, 1, {3, 2}, one) - word(ctx, 1, rep({2, 0, 1}, k - 1, {2, 0}), one),
      word(ctx, 1, {2, 1}, one) - word(ctx, 1, rep({3}, s - 1), one),
      word(ctx, 0, {0, 0, 1}, one),
      word(ctx, 1, {2, 0, 0}, one),
  };
  fam.printed = printed;

  auto r = cube_root(a);
  if (!r) {
    fam.identified = false;
    return fam;
  }
  Scalar ck = r->pow(k);
  GInvariantData data;
  data.m = {k, k, k, s};
  data.c = {ck, ck, ck, one};
  data.lambda = {{0, c * r->pow(-2)}};
  fam.tri = triangulation_presentation(*rq, data, false, chr, trunc);
  return fam;
}

FamilyInstance family_q3k(int a, int b, int c, Scalar d, unsigned chr,
                          int trunc) {
  d = to_field(d, chr);
  if (a < 1 || b < std::max(2, a) || c < b || d.is_zero())
    throw Error("ParamViolation",
                "require 1 <= a, max(2, a) <= b <= c, d != 0");
  bool special = (a == 1 && b == 2 && c == 2);
  if (special ? d.is_one() : !d.is_one())
    throw Error("ParamViolation",
                "d must be 1 except for (a, b, c) = (1, 2, 2)");
  // beta=0: 0->1, gamma=1: 1->0, delta=2: 1->2, eta=3: 2->1,
  // kappa=4: 0->2, lambda=5: 2->0
  Quiver q;
  q.n_vertices = 3;
  q.src = {0, 1, 1, 2, 0, 2};
  q.tgt = {1, 0, 2, 1, 2, 0};
  auto rq = std::make_shared<RibbonQuiver>(q, Permutation({2, 4, 5, 1, 3, 0}));
  if (trunc < 0) trunc = 4 * c + 3;

  FamilyInstance fam;
  fam.name = "Q(3K)^{" + std::to_string(a) + "," + std::to_string(b) + "," +
             std::to_string(c) + "}";
  PresentedAlgebra printed{std::shared_ptr<Quiver const>(rq, &rq->quiver()),
                           chr, trunc, {}};
  PathCtx ctx = printed.ctx();
  Scalar one = Scalar::one(chr);
  printed.relations = {
      word(ctx, 0, {0, 2}, one) - word(ctx, 0, rep({4, 5}, a - 1, {4}), one),
      word(ctx, 2, {3, 1}, one) - word(ctx, 2, rep({5, 4}, a - 1, {5}), one),
      word(ctx, 1, {2, 5}, one) - word(ctx, 1, rep({1, 0}, b - 1, {1}), one),
      word(ctx, 0, {4, 3}, one) - word(ctx, 0, rep({0, 1}, b - 1, {0}), one),
      word(ctx, 2, {5, 0}, one) - word(ctx, 2, rep({3, 2}, c - 1, {3}), d),
      word(ctx, 1, {1, 4}, one) - word(ctx, 1, rep({2, 3}, c - 1, {2}), d),
      word(ctx, 2, {5, 0, 1}, one),
      word(ctx, 0, {4, 3, 2}, one),
  };
  fam.printed = printed;

  GInvariantData data;
  data.m = {b, b, c, c, a, a};
  data.c = {one, one, d, d, one, one};
  fam.tri = triangulation_presentation(*rq, data, false, chr, trunc);
  return fam;
}

FamilyInstance family_aq(int q, Scalar lam, unsigned chr, int trunc) {
  lam = to_field(lam, chr);
  if (q < 2 || lam.is_zero())
    throw Error("ParamViolation", "require q >= 2 and lambda != 0");
  if (q == 2 && lam.is_one())
    throw Error("ParamViolation", "A_2 requires lambda != 1");
  Quiver qq;
  qq.n_vertices = 2;
  qq.src = {0, 0, 1, 1};
  qq.tgt = {0, 1, 0, 1};
  RibbonQuiver rq(qq, Permutation({0, 3, 1, 2}));
  Scalar one = Scalar::one(chr);
  GInvariantData data;
  data.m = {1, 1, 1, q + 1};
  data.c = {one, one, one, lam.inverse()};
  data.lambda = {{0, Scalar::zero(chr)}};
  FamilyInstance fam;
  fam.name = "A_" + std::to_string(q);
  fam.tri = triangulation_presentation(rq, data, false, chr, trunc);
  return fam;
}

FamilyInstance family_bpq(int p, int q, Scalar lam, unsigned chr, int trunc) {
  lam = to_field(lam, chr);
  if (p < 1 || q < 1 || lam.is_zero())
    throw Error("ParamViolation", "require p, q >= 1 and lambda != 0");
  if (p == 1 && q == 1 && lam.is_one())
    throw Error("ParamViolation", "B_{1,1} requires lambda != 1");
  Quiver qq;
  qq.n_vertices = 3;
  qq.src = {0, 0, 1, 1, 2, 2};
  qq.tgt = {0, 1, 0, 2, 1, 2};
  RibbonQuiver rq(qq, Permutation({1, 2, 0, 5, 3, 4}));
  Scalar one = Scalar::one(chr);
  GInvariantData data;
  data.m = {p + 1, 1, 1, 1, 1, q + 1};
  data.c = {one, one, one, one, one, lam};
  FamilyInstance fam;
  fam.name = "B_{" + std::to_string(p) + "," + std::to_string(q) + "}";
  fam.tri = triangulation_presentation(rq, data, false, chr, trunc);
  return fam;
}

FamilyInstance family_q3a3(int k, unsigned chr, int trunc) {
  if (k <= 2) throw Error("ParamViolation", "require k > 2");
  // beta=0: 1->0, gamma=1: 0->1, delta=2: 0->2, eta=3: 2->0
  Quiver q;
  q.n_vertices = 3;
  q.src = {1, 0, 0, 2};
  q.tgt = {0, 1, 2, 0};
  auto qp = std::make_shared<Quiver>(q);
  if (trunc < 0) trunc = 4 * k + 10;
  PresentedAlgebra printed{qp, chr, trunc, {}};
  PathCtx ctx = printed.ctx();
  Scalar one = Scalar::one(chr);
  printed.relations = {
      word(ctx, 1, {0, 2, 3}, one) - word(ctx, 1, {0, 1, 0}, one),
      word(ctx, 0, {2, 3, 1}, one) - word(ctx, 0, {1, 0, 1}, one),
      word(ctx, 2, {3, 1, 0}, one) - word(ctx, 2, {3, 2, 3}, one) +
          word(ctx, 2, rep({3, 2}, k - 1, {3}), one),
      word(ctx, 0, {1, 0, 2}, one) - word(ctx, 0, {2, 3, 2}, one) +
          word(ctx, 0, rep({2, 3}, k - 1, {2}), one),
      word(ctx, 0, rep({2, 3}, k, {2}), one),
      word(ctx, 2, rep({3, 2}, k, {3}), one),
  };
  FamilyInstance fam;
  fam.name = "Q(3A)_3^{" + std::to_string(k) + "}";
  fam.printed = printed;
  return fam;
}

FamilyInstance family_brauer_star(int n, int m, unsigned chr, int trunc) {
  if (n < 1 || m < 1) throw Error("ParamViolation", "require n, m >= 1");
  Quiver q;
  q.n_vertices = n;
  for (int i = 0; i < n; ++i) {
    q.src.push_back(i);
    q.tgt.push_back((i + 1) % n);
  }
  auto qp = std::make_shared<Quiver>(q);
  if (trunc < 0) trunc = n * m + 2;
  PresentedAlgebra printed{qp, chr, trunc, {}};
  PathCtx ctx = printed.ctx();
  for (int i = 0; i < n; ++i) {
    std::vector<int> w;
    for (int j = 0; j <= n * m; ++j) w.push_back((i + j) % n);
    printed.relations.push_back(word(ctx, i, w, Scalar::one(chr)));
  }
  FamilyInstance fam;
  fam.name = "BrauerStar(" + std::to_string(n) + "," + std::to_string(m) + ")";
  fam.printed = printed;
  return fam;
}

FamilyInstance family_bga2cy(int which, int m, unsigned chr, int trunc) {
  FamilyInstance fam;
  Scalar one = Scalar::one(chr);
  if (which == 1) {
    if (m < 1) throw Error("ParamViolation", "require m >= 1");
    Quiver q;
    q.n_vertices = 1;
    q.src = {0};
    q.tgt = {0};
    auto qp = std::make_shared<Quiver>(q);
    if (trunc < 0) trunc = m + 3;
    PresentedAlgebra printed{qp, chr, trunc, {}};
    printed.relations = {
        word(printed.ctx(), 0, std::vector<int>(m + 1, 0), one)};
    fam.printed = printed;
  } else if (which == 2) {
    if (m < 1) throw Error("ParamViolation", "require m >= 1");
    Quiver q;
    q.n_vertices = 2;
    q.src = {0, 1};
    q.tgt = {1, 0};
    auto qp = std::make_shared<Quiver>(q);
    if (trunc < 0) trunc = 2 * m + 3;
    PresentedAlgebra printed{qp, chr, trunc, {}};
    PathCtx ctx = printed.ctx();
    printed.relations = {word(ctx, 1, rep({1, 0}, m, {1}), one),
                         word(ctx, 0, rep({0, 1}, m, {0}), one)};
    fam.printed = printed;
  } else if (which == 3) {
    if (m < 2) throw Error("ParamViolation", "require m >= 2");
    Quiver q;
    q.n_vertices = 2;
    q.src = {0, 0, 1};
    q.tgt = {0, 1, 0};
    auto qp = std::make_shared<Quiver>(q);
    if (trunc < 0) trunc = 2 * m + 4;
    PresentedAlgebra printed{qp, chr, trunc, {}};
    PathCtx ctx = printed.ctx();
    printed.relations = {
        word(ctx, 0, {1, 2}, one) - word(ctx, 0, std::vector<int>(m, 0), one),
        word(ctx, 1, {2, 0}, one), word(ctx, 0, {0, 1}, one)};
    fam.printed = printed;
  } else {
    throw Error("ParamViolation", "family index must be 1, 2 or 3");
  }
  fam.name = "RF" + std::to_string(which) + "(" + std::to_string(m) + ")";
  return fam;
}

Potential nondegenerate_family_W(PathCtx ctx, RibbonQuiver const &rq,
                                 Poly const &R) {
  if (rq.g_cycles().size() != 1)
    throw Error("ConditionStarViolation", "a single g-cycle is required");
  for (auto const &c : rq.f_cycles())
    if (c.size() != 3)
      throw Error("ConditionStarViolation", "all f-cycles must have length 3");
  if (!R.empty() && !R[0].is_zero())
    throw Error("ParamViolation", "R must have zero constant term");
  Potential w(ctx);
  std::vector<int> omega = rq.g_cycles()[0];
  // start the g-cycle at its least arrow for a stable representative
  std::rotate(omega.begin(), std::min_element(omega.begin(), omega.end()),
              omega.end());
  for (size_t j = 1; j < R.size(); ++j) {
    if (R[j].is_zero()) continue;
    std::vector<int> cyc;
    for (size_t i = 0; i < j; ++i)
      cyc.insert(cyc.end(), omega.begin(), omega.end());
    w.add_cycle(std::move(cyc), -to_field(R[j], ctx.chr));
  }
  for (auto const &c : rq.f_cycles())
    w.add_cycle({c[0], rq.f()(c[0]), rq.f()(rq.f()(c[0]))},
                Scalar::one(ctx.chr));
  return w;
}

} // namespace qf
