// Acceptance gate: each criterion prints one [PASS]/[FAIL] line and the
// process exit status reports the outcome. Criterion number on argv.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "quiverforge/algebras.hpp"
#include "quiverforge/json_io.hpp"
#include "quiverforge/modcat.hpp"
#include "quiverforge/surface.hpp"
#include "quiverforge/triquiver.hpp"
#include "surfaces.hpp"

using namespace qf;

namespace {

int g_failures = 0;
std::string g_detail;

void check(bool ok, std::string const &what) {
  if (!ok) {
    ++g_failures;
    if (g_detail.empty()) g_detail = what;
  }
}

GInvariantData gdata(std::vector<int> m, std::vector<Scalar> c,
                     std::map<int, Scalar> lambda = {}) {
  return GInvariantData{std::move(m), std::move(c), std::move(lambda)};
}

std::vector<Scalar> ones(int n, unsigned chr = 0) {
  return std::vector<Scalar>(n, Scalar::one(chr));
}

TruncatedElement word(PathCtx ctx, int base, std::vector<int> arrows,
                      long c = 1) {
  return TruncatedElement::single(ctx, Path{base, std::move(arrows)},
                                  Scalar(c, ctx.chr));
}

std::vector<TruncatedElement> recast_all(PathCtx ctx,
                                         std::vector<TruncatedElement> v) {
  for (auto &e : v) e = recast(ctx, e);
  return v;
}

bool same_ideal(PathCtx ctx, std::vector<TruncatedElement> const &a,
                std::vector<TruncatedElement> const &b) {
  TruncatedIdeal ia(ctx, recast_all(ctx, a)), ib(ctx, recast_all(ctx, b));
  for (auto const &x : a)
    if (!ib.contains(recast(ctx, x))) return false;
  for (auto const &x : b)
    if (!ia.contains(recast(ctx, x))) return false;
  return true;
}

// data with one multiplicity per g-cycle, unit scalars
GInvariantData cycle_data(RibbonQuiver const &rq, std::vector<int> const &mc) {
  GInvariantData data;
  data.m.assign(rq.n_arrows(), 1);
  data.c = ones(rq.n_arrows());
  auto cycles = rq.g_cycles();
  for (size_t i = 0; i < cycles.size(); ++i)
    for (int a : cycles[i]) data.m[a] = mc[i];
  return data;
}

FDModule cyclic_module(int i, unsigned chr = 0) {
  FDModule m;
  m.chr = chr;
  m.dim = {i};
  Mat shift(i, Vec(i, Scalar(0, chr)));
  for (int j = 0; j + 1 < i; ++j) shift[j + 1][j] = Scalar(1, chr);
  m.act = {shift};
  return m;
}

Quiver three_cycle_quiver() {
  Quiver q;
  q.n_vertices = 3;
  q.src = {0, 1, 2};
  q.tgt = {1, 2, 0};
  return q;
}

bool cartan_equal_upto_relabel(std::vector<std::vector<long>> const &a,
                               std::vector<std::vector<long>> const &b) {
  int n = (int)a.size();
  if ((int)b.size() != n) return false;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    bool eq = true;
    for (int i = 0; i < n && eq; ++i)
      for (int j = 0; j < n && eq; ++j)
        if (a[i][j] != b[perm[i]][perm[j]]) eq = false;
    if (eq) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// ---------------------------------------------------------------------------

void criterion1() {
  check(enumerate_triangulation_quivers(1).size() == 1, "count at 1 vertex");
  check(enumerate_triangulation_quivers(2).size() == 1, "count at 2 vertices");
  auto e3 = enumerate_triangulation_quivers(3);
  check(e3.size() == 4, "count at 3 vertices");
  std::set<std::vector<int>> canon;
  for (auto const &x : e3) canon.insert(x.canonical_form());
  for (auto const &x : {qfx::quiver3a(), qfx::quiver3b(), qfx::quiver3prime(),
                        qfx::quiver3dprime()})
    check(canon.count(x.canonical_form()) == 1, "3-vertex list member");
  check(enumerate_triangulation_quivers(1)[0].canonical_form() ==
            qfx::one_vertex(false).canonical_form(),
        "1-vertex representative");
  check(enumerate_triangulation_quivers(2)[0].canonical_form() ==
            qfx::quiver2().canonical_form(),
        "2-vertex representative");
  for (int n = 1; n <= 3; ++n) {
    auto a = enumerate_triangulation_quivers(n);
    auto b = enumerate_oracle(n);
    check(a.size() == b.size(), "oracle count at " + std::to_string(n));
    std::multiset<std::vector<int>> ca, cb;
    for (auto const &x : a) ca.insert(x.canonical_form());
    for (auto const &x : b) cb.insert(x.canonical_form());
    check(ca == cb, "oracle classes at " + std::to_string(n));
  }
}

void criterion2() {
  int found = 0;
  for (int n = 1; n <= 6; ++n)
    for (auto const &tq : enumerate_triangulation_quivers(n))
      if (tq.self_dual()) {
        ++found;
        bool known = are_isomorphic(tq, qfx::quiver2()).has_value() ||
                     are_isomorphic(tq, qfx::tetrahedron()).has_value();
        check(known, "unexpected self-dual instance at n=" + std::to_string(n));
      }
  check(found == 2, "self-dual count");
}

void criterion3() {
  std::mt19937 rng(20260823);
  std::vector<RibbonQuiver> quivers{qfx::one_vertex(false), qfx::quiver2(),
                                    qfx::quiver3a(), qfx::quiver3b()};
  for (auto const &rq : quivers) {
    auto cycles = rq.g_cycles();
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<int> mc;
      for (auto const &c : cycles) {
        int len = (int)c.size();
        int lower = len == 1 ? 3 : len == 2 ? 2 : 1;
        mc.push_back(lower + (int)(rng() % 2));
      }
      auto data = cycle_data(rq, mc);
      long dim = 0;
      mpz_class prod = 1;
      for (size_t i = 0; i < cycles.size(); ++i) {
        dim += (long)mc[i] * (long)cycles[i].size() * (long)cycles[i].size();
        prod *= mc[i];
      }
      auto cd = cartan_data(rq, data);
      check(cd.det == 4 * prod, "determinant closed form");
      check(cd.dimension == dim, "dimension closed form");
      check((long)bga_basis(rq, data).size() == dim, "basis count");
      auto alg = triangulation_presentation(rq, data);
      auto spec = finite_dimensional_spec(alg.presented());
      check((long)spec.dim() == dim, "structure-constant count");
    }
  }
}

void criterion4() {
  auto rq = qfx::one_vertex(false);
  for (int m : {2, 3, 4}) {
    auto start = std::chrono::steady_clock::now();
    auto alg = triangulation_presentation(rq, gdata({m, m}, ones(2)), false, 0,
                                          4 * m + 3);
    PathCtx ctx = alg.ctx();
    TruncatedIdeal ideal(ctx, alg.relations);
    check(ideal.contains(word(ctx, 0, {0, 0, 1})),
          "loop-square-arrow membership at m=" + std::to_string(m));
    check(ideal.quotient_dim() == 4 * m,
          "stabilized dimension at m=" + std::to_string(m));
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    check(secs < 60.0, "runtime per instance");
  }
}

void criterion5() {
  auto rq = qfx::quiver3dprime();
  for (int m : {1, 2}) {
    auto alg = triangulation_presentation(
        rq, gdata(std::vector<int>(6, m), ones(6)), false, 0, 15);
    TruncatedIdeal ideal(alg.ctx(), alg.relations);
    check(ideal.quotient_dim() == 36 * m,
          "stabilized dimension at m=" + std::to_string(m));
    auto cd = cartan_data(rq, alg.data);
    check(cd.det == 0, "vanishing determinant");
  }
}

void criterion6() {
  Quiver q = three_cycle_quiver();
  PathCtx ctx{&q, 0, 13};
  Potential w(ctx);
  w.add_cycle({0, 1, 2}, Scalar(1));
  w.add_cycle({0, 1, 2, 0, 1, 2}, Scalar(-1));
  check(w.derivative(2) ==
            word(ctx, 0, {0, 1}) - word(ctx, 0, {0, 1, 2, 0, 1}, 2),
        "cyclic derivative");
  std::vector<TruncatedElement> rho{w.derivative(0), w.derivative(1),
                                    w.derivative(2)};
  TruncatedIdeal ideal(ctx, rho);
  check(ideal.contains(word(ctx, 0, {0, 1})), "membership of the first pair");
  check(ideal.contains(word(ctx, 1, {1, 2})), "membership of the second pair");
  check(ideal.contains(word(ctx, 2, {2, 0})), "membership of the third pair");
  check(ideal.quotient_dim() == 6, "stabilized dimension");

  std::map<int, TruncatedElement> phi;
  phi.emplace(0, TruncatedElement::arrow(ctx, 0) - word(ctx, 0, {0, 1, 2, 0}));
  auto psi = invert_substitution(ctx, phi);
  std::vector<long> catalan{1, 1, 2, 5, 14};
  for (int i = 0; i <= 4; ++i) {
    std::vector<int> path;
    for (int j = 0; j < i; ++j) path.insert(path.end(), {0, 1, 2});
    path.push_back(0);
    auto it = psi.at(0).terms().find(Path{0, path});
    check(it != psi.at(0).terms().end() && it->second == Scalar(catalan[i]),
          "inverse-substitution coefficient " + std::to_string(i));
  }
}

void run_degeneration(RibbonQuiver const &rq, GInvariantData const &data,
                      std::string const &tag) {
  int trunc = default_truncation(rq, data);
  auto gamma = brauer_presentation(rq, data, 0, trunc);
  auto lambda1 = triangulation_presentation(rq, data, true, 0, trunc);
  auto at0 = degeneration_family(rq, data, Scalar(0), trunc);
  auto at1 = degeneration_family(rq, data, Scalar(1), trunc);
  PathCtx ctx = gamma.ctx();
  check(same_ideal(ctx, at0.relations, gamma.relations), tag + " fiber at 0");
  check(same_ideal(ctx, at1.relations, lambda1.relations), tag + " fiber at 1");
  for (long tv : {2L, 3L}) {
    Scalar t(tv);
    auto att = degeneration_family(rq, data, t, trunc);
    TruncatedIdeal it(ctx, recast_all(ctx, att.relations));
    TruncatedIdeal i1(ctx, recast_all(ctx, at1.relations));
    auto fwd = degeneration_rescale(ctx, rq, data, t);
    auto bwd = degeneration_rescale(ctx, rq, data, t.inverse());
    for (auto const &g : at1.relations)
      check(it.contains(substitute(fwd, recast(ctx, g))),
            tag + " rescale into the fiber at " + std::to_string(tv));
    for (auto const &g : att.relations)
      check(i1.contains(substitute(bwd, recast(ctx, g))),
            tag + " rescale out of the fiber at " + std::to_string(tv));
  }
}

void criterion7() {
  run_degeneration(qfx::one_vertex(false),
                   gdata({2, 2}, ones(2), {{0, Scalar(1)}, {1, Scalar(1)}}),
                   "one-vertex");
  run_degeneration(qfx::quiver2(),
                   gdata({4, 1, 1, 1}, ones(4), {{3, Scalar(1)}}), "two-vertex");
}

std::vector<FDAlgebraSpec> triangulation_specs_for_periodicity() {
  std::vector<FDAlgebraSpec> specs;
  specs.push_back(verify_finite_dimensional(triangulation_presentation(
      qfx::one_vertex(false), gdata({2, 2}, ones(2)))));
  specs.push_back(verify_finite_dimensional(
      triangulation_presentation(qfx::quiver2(), gdata({4, 1, 1, 1}, ones(4)))));
  specs.push_back(verify_finite_dimensional(triangulation_presentation(
      qfx::quiver3b(), gdata(std::vector<int>(6, 2), ones(6)))));
  specs.push_back(verify_finite_dimensional(triangulation_presentation(
      qfx::quiver3dprime(), gdata(std::vector<int>(6, 1), ones(6)))));
  return specs;
}

void criterion8() {
  for (int n = 2; n <= 6; ++n) {
    FDAlgebra A(finite_dimensional_spec(*family_bga2cy(1, n - 1).printed));
    for (int i = 1; i < n; ++i) {
      auto m = cyclic_module(i);
      auto o2 = syzygy(A, syzygy(A, m));
      check(modules_isomorphic(A, m, o2),
            "second syzygy over the length-" + std::to_string(n) + " ring");
    }
  }
  for (auto [n, m] : std::vector<std::pair<int, int>>{
           {1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
    FDAlgebra A(finite_dimensional_spec(*family_brauer_star(n, m).printed));
    int expect = (n == 1 && m == 1) ? 1 : 2 * n;
    for (int v = 0; v < n; ++v) {
      auto orbit = omega_orbit(A, simple_module(A, v), 2 * n);
      check(orbit.period == expect,
            "star period at (" + std::to_string(n) + "," + std::to_string(m) +
                ")");
    }
  }
  for (auto const &spec : triangulation_specs_for_periodicity()) {
    FDAlgebra A(spec);
    for (int v = 0; v < A.n_vertices(); ++v) {
      auto s = simple_module(A, v);
      auto cur = s;
      for (int r = 0; r < 4; ++r) cur = syzygy(A, cur);
      check(modules_isomorphic(A, s, cur),
            "fourth syzygy on a simple, dim " + std::to_string(spec.dim()));
    }
  }
}

void criterion9() {
  std::vector<FDAlgebraSpec> specs;
  // the randomized instances from criterion 3, regenerated identically
  {
    std::mt19937 rng(20260823);
    for (auto const &rq : {qfx::one_vertex(false), qfx::quiver2(),
                           qfx::quiver3a(), qfx::quiver3b()}) {
      auto cycles = rq.g_cycles();
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<int> mc;
        for (auto const &c : cycles) {
          int len = (int)c.size();
          mc.push_back((len == 1 ? 3 : len == 2 ? 2 : 1) + (int)(rng() % 2));
        }
        specs.push_back(finite_dimensional_spec(
            triangulation_presentation(rq, cycle_data(rq, mc)).presented()));
      }
    }
  }
  // the one-vertex instances from criterion 4
  for (int m : {2, 3, 4})
    specs.push_back(finite_dimensional_spec(
        triangulation_presentation(qfx::one_vertex(false),
                                   gdata({m, m}, ones(2)), false, 0, 4 * m + 3)
            .presented()));
  // the two instances from criterion 5
  for (int m : {1, 2})
    specs.push_back(finite_dimensional_spec(
        triangulation_presentation(qfx::quiver3dprime(),
                                   gdata(std::vector<int>(6, m), ones(6)),
                                   false, 0, 15)
            .presented()));
  // the fibers from criterion 7
  {
    auto d1 = gdata({2, 2}, ones(2), {{0, Scalar(1)}, {1, Scalar(1)}});
    auto d2 = gdata({4, 1, 1, 1}, ones(4), {{3, Scalar(1)}});
    auto pairs = {std::pair{qfx::one_vertex(false), d1},
                  std::pair{qfx::quiver2(), d2}};
    for (auto const &[rq, data] : pairs) {
      specs.push_back(
          finite_dimensional_spec(brauer_presentation(rq, data).presented()));
      for (long t : {0L, 1L, 2L, 3L})
        specs.push_back(finite_dimensional_spec(
            degeneration_family(rq, data, Scalar(t)).presented()));
    }
  }
  // the instances from criterion 8
  for (int n = 2; n <= 6; ++n)
    specs.push_back(finite_dimensional_spec(*family_bga2cy(1, n - 1).printed));
  for (auto [n, m] : std::vector<std::pair<int, int>>{
           {1, 1}, {2, 1}, {2, 2}, {3, 1}})
    specs.push_back(finite_dimensional_spec(*family_brauer_star(n, m).printed));
  for (auto &spec : triangulation_specs_for_periodicity())
    specs.push_back(std::move(spec));

  for (size_t i = 0; i < specs.size(); ++i)
    check(symmetrizing_form(FDAlgebra(specs[i])).has_value(),
          "symmetrizing form on instance " + std::to_string(i) + " of dim " +
              std::to_string(specs[i].dim()));
}

void criterion10() {
  auto cycle_type = [](Permutation const &p) {
    std::vector<int> t;
    for (auto const &c : p.cycles()) t.push_back((int)c.size());
    std::sort(t.begin(), t.end());
    return t;
  };
  for (int n = 1; n <= 4; ++n)
    for (auto const &tq : enumerate_triangulation_quivers(n))
      for (int v = 0; v < tq.n_vertices(); ++v) {
        auto mu = mutate(tq, v);
        check(is_triangulation(mu.quiver), "mutation stays in the class");
        check(cycle_type(mu.quiver.f()) == cycle_type(tq.f()),
              "f cycle type preserved");
        check(mu.quiver.g().cycles().size() == tq.g().cycles().size(),
              "g-cycle count preserved");
        auto mu2 = mutate(mu.quiver, v);
        check(are_isomorphic(mu2.quiver, tq).has_value(),
              "mutation is an involution up to isomorphism");
      }
  for (int v = 0; v < 3; ++v)
    check(are_isomorphic(mutate(qfx::quiver3b(), v).quiver, qfx::quiver3a())
              .has_value(),
          "mutation sends the second 3-vertex shape to the first");
  // flips against mutations
  for (auto const &t : {qfx::polygon(4), qfx::torus()}) {
    auto sq = quiver_from_triangulation(t);
    for (int a = 0; a < (int)t.glue.size(); ++a) {
      auto fq = quiver_from_triangulation(flip(t, a));
      auto mu = mutate(sq.quiver, sq.arc_vertex[a]);
      check(are_isomorphic(fq.quiver, mu.quiver).has_value(),
            "flip equals mutation at the arc vertex");
    }
  }
  bool refused = false;
  try {
    flip(qfx::punctured_monogon(), 0);
  } catch (Error const &e) {
    refused = std::string(e.code()) == "NotFlippable";
  }
  check(refused, "the self-folded arc is refused");
}

void criterion11() {
  std::vector<std::pair<Triangulation, MarkedSurface>> corpus{
      {qfx::monogon(), {0, {1}, 0}},
      {qfx::punctured_monogon(), {0, {1}, 1}},
      {qfx::polygon(3), {0, {3}, 0}},
      {qfx::polygon(4), {0, {4}, 0}},
      {qfx::polygon(5), {0, {5}, 0}},
      {qfx::annulus(), {0, {1, 1}, 0}},
      {qfx::torus(), {1, {}, 1}},
      {qfx::sphere_3b(), {0, {}, 3}},
      {qfx::sphere_3a(), {0, {}, 3}},
      {qfx::puncture_triangle(qfx::polygon(4), 0), {0, {4}, 1}},
      {qfx::puncture_triangle(qfx::torus(), 0), {1, {}, 2}},
      {qfx::puncture_triangle(qfx::puncture_triangle(qfx::torus(), 0), 0),
       {1, {}, 3}},
      {qfx::puncture_triangle(qfx::sphere_3b(), 1), {0, {}, 4}},
      {qfx::attach_boundary_triangle(qfx::annulus(), 0), {0, {1, 2}, 0}},
  };
  check(corpus.size() >= 10, "corpus size");
  for (auto const &[t, surf] : corpus) {
    auto sq = quiver_from_triangulation(t);
    int sum_n = 0;
    for (int n : surf.boundary) sum_n += n;
    int expect = 6 * (surf.genus - 1) +
                 3 * (surf.punctures + (int)surf.boundary.size()) + 2 * sum_n;
    if (!t.triangles.empty())
      check(sq.quiver.n_vertices() == expect, "vertex-count formula");
    else
      check(expect == -1 && sq.quiver.n_vertices() == 1,
            "the arcless case uses the stated convention");
    check(recover_surface(sq.quiver) == surf, "surface recovery");
  }
}

void criterion12() {
  struct Q2B {
    int k, s;
    long a, c;
  };
  for (auto [k, s, a, c] :
       {Q2B{2, 3, 1, 1}, Q2B{1, 4, 8, 1}, Q2B{3, 3, 27, 2}}) {
    auto fam = family_q2b(k, s, Scalar(a), Scalar(c));
    check(fam.identified && fam.tri && fam.printed, "first family identified");
    if (!fam.tri || !fam.printed) continue;
    auto ts = verify_finite_dimensional(*fam.tri);
    auto ps = finite_dimensional_spec(*fam.printed);
    check(ts.dim() == 9 * k + s && ps.dim() == ts.dim(),
          "first family dimension");
    check(cartan_from_spec(ts).matrix == cartan_from_spec(ps).matrix,
          "first family Cartan agreement");
  }
  struct Q3K {
    int a, b, c;
  };
  for (auto [a, b, c] : {Q3K{2, 2, 2}, Q3K{2, 3, 4}, Q3K{3, 3, 3}}) {
    auto fam = family_q3k(a, b, c, Scalar(1));
    check(fam.identified && fam.tri && fam.printed, "second family identified");
    if (!fam.tri || !fam.printed) continue;
    auto ts = verify_finite_dimensional(*fam.tri);
    auto ps = finite_dimensional_spec(*fam.printed);
    check(ts.dim() == 4 * (a + b + c) && ps.dim() == ts.dim(),
          "second family dimension");
    check(cartan_from_spec(ts).matrix == cartan_from_spec(ps).matrix,
          "second family Cartan agreement");
  }
  // the k = 3 variant matches no second-family member of equal dimension;
  // members have dimension 4(a+b+c), so a non-multiple of 4 settles it by
  // itself and otherwise every candidate Cartan is compared up to relabeling
  auto variant = family_q3a3(3);
  auto vs = finite_dimensional_spec(*variant.printed);
  auto vc = cartan_from_spec(vs);
  if (vs.dim() % 4 == 0) {
    int total = vs.dim() / 4;
    for (int a = 1; a <= total; ++a)
      for (int b = std::max(2, a); b <= total; ++b) {
        int c = total - a - b;
        if (c < b) continue;
        auto fam =
            family_q3k(a, b, c, Scalar(a == 1 && b == 2 && c == 2 ? 2 : 1));
        auto cc = cartan_from_spec(finite_dimensional_spec(*fam.printed));
        check(!cartan_equal_upto_relabel(vc.matrix, cc.matrix),
              "variant Cartan coincides with (" + std::to_string(a) + "," +
                  std::to_string(b) + "," + std::to_string(c) + ")");
      }
  }
  // its derived-equivalent partner (1,2,3) in particular must differ
  auto partner = family_q3k(1, 2, 3, Scalar(1));
  auto pc = cartan_from_spec(finite_dimensional_spec(*partner.printed));
  check(!cartan_equal_upto_relabel(vc.matrix, pc.matrix),
        "variant Cartan coincides with the (1,2,3) partner");
}

struct Criterion {
  void (*fn)();
  double cap_seconds; // 0 = no stated cap
  char const *title;
};

Criterion const kCriteria[] = {
    {criterion1, 10, "enumeration counts and brute-force agreement"},
    {criterion2, 60, "self-dual classification through 6 vertices"},
    {criterion3, 10, "Cartan and dimension closed forms"},
    {criterion4, 180, "one-vertex stabilized dimensions"},
    {criterion5, 300, "dimensions over the 3-vertex double-arrow shape"},
    {criterion6, 10, "potential example: derivatives, quotient, inversion"},
    {criterion7, 0, "one-parameter degeneration between the presentations"},
    {criterion8, 300, "syzygy periodicity"},
    {criterion9, 0, "symmetrizing forms across all instances"},
    {criterion10, 60, "mutation and flip coherence"},
    {criterion11, 0, "surface roundtrip and vertex-count formula"},
    {criterion12, 0, "known families: dimensions and Cartan matrices"},
};

} // namespace

int main(int argc, char **argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <criterion 1..12>" << std::endl;
    return 2;
  }
  int n = std::atoi(argv[1]);
  if (n < 1 || n > 12) {
    std::cerr << "criterion number out of range" << std::endl;
    return 2;
  }
  auto const &cr = kCriteria[n - 1];
  auto start = std::chrono::steady_clock::now();
  try {
    cr.fn();
  } catch (std::exception const &e) {
    ++g_failures;
    if (g_detail.empty()) g_detail = std::string("exception: ") + e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (cr.cap_seconds > 0 && secs >= cr.cap_seconds) {
    ++g_failures;
    if (g_detail.empty()) g_detail = "runtime budget exceeded";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", secs);
  if (g_failures == 0) {
    std::cout << "[PASS] criterion " << n << ": " << cr.title << " (" << buf
              << ")" << std::endl;
    return 0;
  }
  std::cout << "[FAIL] criterion " << n << ": " << cr.title << " — "
            << g_detail << " (+" << (g_failures - 1)
            << " more failed checks, " << buf << ")" << std::endl;
  return 1;
}
