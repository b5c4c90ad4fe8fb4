#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "quiverforge/algebras.hpp"

using namespace qf;

namespace {

GInvariantData gdata(std::vector<int> m, std::vector<Scalar> c,
                     std::map<int, Scalar> lambda = {}) {
  return GInvariantData{std::move(m), std::move(c), std::move(lambda)};
}

std::vector<Scalar> ones(int n, unsigned chr = 0) {
  return std::vector<Scalar>(n, Scalar::one(chr));
}

std::vector<TruncatedElement> recast_all(PathCtx ctx,
                                         std::vector<TruncatedElement> v) {
  for (auto &e : v) e = recast(ctx, e);
  return v;
}

// equality of closed ideals by mutual membership of generators
bool same_ideal(PathCtx ctx, std::vector<TruncatedElement> const &a,
                std::vector<TruncatedElement> const &b) {
  TruncatedIdeal ia(ctx, recast_all(ctx, a)), ib(ctx, recast_all(ctx, b));
  for (auto const &x : a)
    if (!ib.contains(recast(ctx, x))) return false;
  for (auto const &x : b)
    if (!ia.contains(recast(ctx, x))) return false;
  return true;
}

long matrix_sum(CartanData const &cd) {
  long s = 0;
  for (auto const &row : cd.matrix)
    for (long x : row) s += x;
  return s;
}

} // namespace

TEST_CASE("brauer presentations: small closed forms") {
  // two loops, f = id: relations a^2, b^2, ab - ba
  auto rq = qfx::one_vertex(false);
  auto alg = brauer_presentation(rq, gdata({1, 1}, ones(2)));
  CHECK(alg.relations.size() == 3);
  CHECK(bga_dimension(rq, alg.data) == 4);
  auto spec = verify_finite_dimensional(alg);
  CHECK(spec.dim() == 4);
  auto cd = cartan_data(rq, alg.data);
  CHECK(cd.matrix == std::vector<std::vector<long>>{{4}});
  CHECK(cd.det == 4);
  CHECK(cd.rank == 1);
  // same picture in characteristic 2 (group algebra of the Klein four group)
  auto alg2 = brauer_presentation(rq, gdata({1, 1}, ones(2)), 2);
  CHECK(verify_finite_dimensional(alg2).dim() == 4);

  // two loops, f swapping them: ab, ba, c a^m - c' b^m'
  auto rs = qfx::one_vertex(true);
  auto algs = brauer_presentation(rs, gdata({2, 3}, {Scalar(1), Scalar(2)}));
  CHECK(bga_dimension(rs, algs.data) == 5);
  CHECK(verify_finite_dimensional(algs).dim() == 5);

  // punctured monogon quiver with multiplicities (2, 1)
  auto r2 = qfx::quiver2();
  auto a2 = brauer_presentation(r2, gdata({2, 1, 1, 1}, ones(4)));
  CHECK(bga_dimension(r2, a2.data) == 11);
  CHECK(verify_finite_dimensional(a2).dim() == 11);
  auto c2 = cartan_data(r2, a2.data);
  CHECK(c2.matrix == std::vector<std::vector<long>>{{3, 2}, {2, 4}});
  CHECK(c2.det == 8);
  CHECK(matrix_sum(c2) == 11);

  // quiver 3b with trivial data has the A4 group-algebra dimension
  auto r3 = qfx::quiver3b();
  auto a3 = brauer_presentation(r3, gdata(std::vector<int>(6, 1), ones(6)));
  CHECK(bga_dimension(r3, a3.data) == 12);
  CHECK(verify_finite_dimensional(a3).dim() == 12);
  CHECK(cartan_data(r3, a3.data).det == 4);

  // m must be g-invariant
  CHECK_THROWS_AS(brauer_presentation(r2, gdata({1, 1, 2, 1}, ones(4))),
                  Error);
}

TEST_CASE("triangulation presentation on one vertex") {
  auto rq = qfx::one_vertex(false);
  PathCtx ctx{&rq.quiver(), 0, 11};
  auto word = [&](int base, std::vector<int> w, long c) {
    return TruncatedElement::single(ctx, Path{base, std::move(w)}, Scalar(c));
  };
  auto alg = triangulation_presentation(
      rq, gdata({2, 2}, {Scalar(3), Scalar(3)},
                {{0, Scalar(1)}, {1, Scalar(0)}}));
  CHECK(alg.trunc == 11);
  REQUIRE(alg.relations.size() == 2);
  // generator attached to alpha: beta^2 - lambda_beta beta^3 - 3 (ab)a
  CHECK(recast(ctx, alg.relations[0]) ==
        word(0, {1, 1}, 1) - word(0, {0, 1, 0}, 3));
  CHECK(recast(ctx, alg.relations[1]) ==
        word(0, {0, 0}, 1) - word(0, {0, 0, 0}, 1) - word(0, {1, 0, 1}, 3));
  auto spec = verify_finite_dimensional(alg);
  CHECK(spec.dim() == 8);
  CHECK((int)spec.socle.size() == 1);
  CHECK(!spec.socle[0].is_zero());

  // extended presentation generates the same ideal
  auto ext = triangulation_presentation(
      rq, gdata({2, 2}, {Scalar(3), Scalar(3)},
                {{0, Scalar(1)}, {1, Scalar(0)}}),
      true);
  CHECK(ext.relations.size() == 4);
  CHECK(same_ideal(ctx, alg.relations, ext.relations));
  CHECK(verify_finite_dimensional(ext).dim() == 8);

  // m = 1 collapses the algebra to the base field
  auto k = triangulation_presentation(rq, gdata({1, 1}, ones(2)));
  TruncatedIdeal ideal(k.ctx(), k.relations);
  CHECK(ideal.quotient_dim() == 1);
  CHECK(ideal.contains(TruncatedElement::arrow(k.ctx(), 0)));
  CHECK(ideal.contains(TruncatedElement::arrow(k.ctx(), 1)));

  // m = 2, 3, 4: dimension 4m, stabilization within the 4m + 3 cutoff
  for (int m = 2; m <= 4; ++m) {
    auto t = triangulation_presentation(rq, gdata({m, m}, ones(2)));
    CHECK(t.trunc == 4 * m + 3);
    CHECK(verify_finite_dimensional(t).dim() == 4 * m);
  }
}

TEST_CASE("generators agree with the cycle-polynomial family") {
  auto check_match = [](RibbonQuiver const &rq, GInvariantData const &data) {
    auto alg = triangulation_presentation(rq, data);
    PathCtx ctx = alg.ctx();
    std::vector<Poly> p(rq.n_arrows()), q(rq.n_arrows());
    for (int a = 0; a < rq.n_arrows(); ++a) {
      if (rq.f()(a) == a) {
        Scalar lam = data.lambda.count(a) ? data.lambda.at(a) : Scalar(0);
        p[a] = {Scalar(0), Scalar(0), Scalar(1), -lam};
      } else {
        p[a] = {Scalar(1)};
      }
      q[a] = Poly(data.m[a], Scalar(0));
      q[a].back() = data.c[a];
    }
    auto rho = hyperpotential_from_data(ctx, rq, p, q);
    CHECK(verify_hyperpotential(ctx, rho));
    // the generator attached to arrow a is rho at the g-preimage of a
    for (int a = 0; a < rq.n_arrows(); ++a) {
      int x = -1;
      for (int y = 0; y < rq.n_arrows(); ++y)
        if (rq.g()(y) == a) x = y;
      CHECK(recast(ctx, alg.relations[a]) == rho[x]);
    }
  };
  check_match(qfx::one_vertex(false),
              gdata({3, 3}, {Scalar(2), Scalar(2)},
                    {{0, Scalar(5)}, {1, Scalar(-1)}}));
  check_match(qfx::quiver2(),
              gdata({4, 1, 1, 1}, ones(4), {{3, Scalar(7)}}));
  check_match(qfx::quiver3a(),
              gdata({2, 1, 1, 1, 1, 3}, {Scalar(1), Scalar(1), Scalar(1),
                                          Scalar(1), Scalar(1), Scalar(2)}));
  check_match(qfx::quiver3b(),
              gdata({2, 3, 4, 2, 3, 4}, ones(6)));
}

TEST_CASE("definedness and exceptional gates") {
  auto r2 = qfx::quiver2();
  // m_alpha n_alpha = 1 is undefined
  CHECK_THROWS_WITH_AS(
      triangulation_presentation(r2, gdata({1, 1, 1, 1}, ones(4))),
      "m_a n_a >= 2 is required", Error);

  // exceptional monogon data with product of scalars 1
  auto bad = gdata({3, 1, 1, 1}, ones(4));
  CHECK_THROWS_AS(triangulation_presentation(r2, bad, true), Error);
  auto tri = triangulation_presentation(r2, bad, false);
  CHECK(tri.exceptional);
  CHECK_THROWS_AS(verify_finite_dimensional(tri), Error);

  // scaling the loop cycle repairs the condition
  auto good = gdata({3, 1, 1, 1}, {Scalar(2), Scalar(1), Scalar(1), Scalar(1)});
  auto ok = triangulation_presentation(r2, good, true);
  CHECK(verify_finite_dimensional(ok).dim() == 12);
  auto ok0 = triangulation_presentation(r2, good, false);
  CHECK(verify_finite_dimensional(ok0).dim() == 12);

  // tetrahedron with m = 1: trivial scalars violate, one scaled cycle passes
  auto tet = qfx::tetrahedron();
  auto mt = std::vector<int>(12, 1);
  CHECK(is_exceptional(tet, mt));
  CHECK_THROWS_AS(
      triangulation_presentation(tet, gdata(mt, ones(12)), true), Error);
  auto cs = ones(12);
  auto cyc0 = tet.g_cycles()[0];
  for (int a : cyc0) cs[a] = Scalar(2);
  auto tok = triangulation_presentation(tet, gdata(mt, cs), true);
  CHECK(verify_finite_dimensional(tok).dim() == 36);
}

TEST_CASE("cartan data of triangulation algebras") {
  // quiver 1: det 4m
  auto r1 = qfx::one_vertex(false);
  for (int m : {2, 3, 7}) {
    auto cd = cartan_data(r1, gdata({m, m}, ones(2)));
    CHECK(cd.matrix == std::vector<std::vector<long>>{{4 * m}});
    CHECK(cd.det == 4 * m);
    CHECK(cd.dimension == 4 * m);
  }
  // quiver 2: det 4 m_alpha m_eta
  auto r2 = qfx::quiver2();
  auto c2 = cartan_data(r2, gdata({4, 1, 1, 1}, ones(4)));
  CHECK(c2.det == 16);
  CHECK(c2.dimension == 13);
  // quiver 3a: det 4 m1 m2 m3
  auto r3a = qfx::quiver3a();
  auto c3a = cartan_data(r3a, gdata({2, 3, 3, 3, 3, 5}, ones(6)));
  CHECK(c3a.det == 4 * 2 * 3 * 5);
  CHECK(c3a.rank == 3);
  // quiver 3b
  auto r3b = qfx::quiver3b();
  auto c3b = cartan_data(r3b, gdata({2, 3, 4, 2, 3, 4}, ones(6)));
  CHECK(c3b.det == 4 * 2 * 3 * 4);
  // Markov quiver: singular Cartan matrix
  auto rm = qfx::quiver3dprime();
  auto cm = cartan_data(rm, gdata(std::vector<int>(6, 1), ones(6)));
  CHECK(cm.det == 0);
  CHECK(cm.rank == 1);
  CHECK(cm.dimension == 36);
  // triangle quiver with three loops: also singular
  auto rp = qfx::quiver3prime();
  CHECK(cartan_data(rp, gdata(std::vector<int>(6, 2), ones(6))).det == 0);

  // the quadratic form is non-negative everywhere; with odd multiplicities
  // its values are even (with an even m_omega the diagonal can be odd, e.g.
  // quiver 2 with m = (2,1) has dim e_0 A e_0 = 3)
  auto codd2 = cartan_data(r2, gdata({3, 1, 1, 1}, ones(4)));
  auto codd3a = cartan_data(r3a, gdata({3, 1, 1, 1, 1, 5}, ones(6)));
  auto codd3b = cartan_data(r3b, gdata({1, 3, 5, 1, 3, 5}, ones(6)));
  std::mt19937 rng(20260823);
  std::uniform_int_distribution<int> d(-5, 5);
  auto sample = [&](CartanData const &cd, bool even) {
    int n = (int)cd.matrix.size();
    for (int t = 0; t < 100; ++t) {
      std::vector<long> x(n);
      for (auto &v : x) v = d(rng);
      long q = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q += x[i] * cd.matrix[i][j] * x[j];
      CHECK(q >= 0);
      if (even) CHECK(q % 2 == 0);
    }
  };
  for (auto const &cd : {c2, c3a, c3b}) sample(cd, false);
  for (auto const &cd : {codd2, codd3a, codd3b, cm}) sample(cd, true);
}

TEST_CASE("degeneration family") {
  auto rq = qfx::one_vertex(false);
  auto data = gdata({2, 2}, ones(2), {{0, Scalar(1)}, {1, Scalar(1)}});
  auto ex = degeneration_exponents(rq, data);
  CHECK(ex.big_n == 4);
  CHECK(ex.e_num == std::vector<long>{1, 1});
  CHECK(ex.e_prime_num == std::vector<long>{2, 2});

  int trunc = default_truncation(rq, data);
  auto gamma = brauer_presentation(rq, data, 0, trunc);
  auto lambda1 = triangulation_presentation(rq, data, true, 0, trunc);
  auto at0 = degeneration_family(rq, data, Scalar(0), trunc);
  auto at1 = degeneration_family(rq, data, Scalar(1), trunc);
  PathCtx ctx = gamma.ctx();
  CHECK(same_ideal(ctx, at0.relations, gamma.relations));
  CHECK(same_ideal(ctx, at1.relations, lambda1.relations));
  CHECK(verify_finite_dimensional(at0).dim() == 8);
  CHECK(verify_finite_dimensional(at1).dim() == 8);

  for (long tv : {2L, 3L}) {
    Scalar t(tv);
    auto att = degeneration_family(rq, data, t, trunc);
    TruncatedIdeal it(ctx, recast_all(ctx, att.relations));
    TruncatedIdeal i1(ctx, recast_all(ctx, at1.relations));
    auto fwd = degeneration_rescale(ctx, rq, data, t);
    auto bwd = degeneration_rescale(ctx, rq, data, t.inverse());
    for (auto const &g : at1.relations)
      CHECK(it.contains(substitute(fwd, recast(ctx, g))));
    for (auto const &g : att.relations)
      CHECK(i1.contains(substitute(bwd, recast(ctx, g))));
    CHECK(verify_finite_dimensional(att).dim() == 8);
  }

  // gates: admissibility and the exceptional exclusion
  auto r2 = qfx::quiver2();
  CHECK_THROWS_AS(degeneration_exponents(r2, gdata({2, 1, 1, 1}, ones(4))),
                  Error);
  CHECK_THROWS_AS(degeneration_exponents(r2, gdata({3, 1, 1, 1}, ones(4))),
                  Error);
}

TEST_CASE("family Q(2B)") {
  // parameter gates
  CHECK_THROWS_AS(family_q2b(1, 2, Scalar(1), Scalar(0)), Error);
  CHECK_THROWS_AS(family_q2b(1, 3, Scalar(1), Scalar(0)), Error);
  CHECK_NOTHROW(family_q2b(1, 3, Scalar(8), Scalar(0)));

  struct Case {
    int k, s;
    long a, c;
  };
  for (auto [k, s, a, c] : {Case{2, 3, 1, 1}, Case{1, 4, 8, 1},
                            Case{3, 3, 27, 2}}) {
    auto fam = family_q2b(k, s, Scalar(a), Scalar(c));
    REQUIRE(fam.printed.has_value());
    REQUIRE(fam.tri.has_value());
    CHECK(fam.identified);
    auto ps = finite_dimensional_spec(*fam.printed);
    auto ts = verify_finite_dimensional(*fam.tri);
    CHECK(ps.dim() == 9 * k + s);
    CHECK(ts.dim() == 9 * k + s);
    auto pc = cartan_from_spec(ps);
    auto tc = cartan_from_spec(ts);
    CHECK(pc.matrix == tc.matrix);
    CHECK(tc.matrix == cartan_data(*fam.tri->rq, fam.tri->data).matrix);
    CHECK(pc.det == 4 * k * s);
    // the rescale alpha -> a^{1/3} alpha carries the printed ideal onto the
    // triangulation one
    PathCtx ctx = fam.printed->ctx();
    Scalar r = Scalar(a == 1 ? 1 : (a == 8 ? 2 : 3));
    std::map<int, TruncatedElement> sub;
    sub.emplace(0, TruncatedElement::arrow(ctx, 0) * r);
    TruncatedIdeal tri_ideal(ctx, recast_all(ctx, fam.tri->relations));
    for (auto const &g : fam.printed->relations)
      CHECK(tri_ideal.contains(substitute(sub, recast(ctx, g))));
    std::map<int, TruncatedElement> inv;
    inv.emplace(0, TruncatedElement::arrow(ctx, 0) * r.inverse());
    TruncatedIdeal printed_ideal(ctx, recast_all(ctx, fam.printed->relations));
    for (auto const &g : fam.tri->relations)
      CHECK(printed_ideal.contains(substitute(inv, recast(ctx, g))));
  }

  // a = 2 is not a rational cube: only the printed relations are emitted
  auto nf = family_q2b(2, 3, Scalar(2), Scalar(1));
  CHECK(!nf.identified);
  CHECK(!nf.tri.has_value());
  CHECK(finite_dimensional_spec(*nf.printed).dim() == 21);
  // over GF(5), 2 = 3^3 is a cube
  auto f5 = family_q2b(2, 3, Scalar(2, 5), Scalar(1, 5), 5);
  CHECK(f5.identified);
  CHECK(verify_finite_dimensional(*f5.tri).dim() == 21);
}

TEST_CASE("family Q(3K)") {
  CHECK_THROWS_AS(family_q3k(1, 2, 2, Scalar(1)), Error);
  CHECK_THROWS_AS(family_q3k(2, 2, 2, Scalar(2)), Error);
  CHECK_THROWS_AS(family_q3k(2, 1, 2, Scalar(1)), Error);
  CHECK_NOTHROW(family_q3k(1, 2, 2, Scalar(2)));

  struct Case {
    int a, b, c;
  };
  for (auto [a, b, c] : {Case{2, 2, 2}, Case{2, 3, 4}, Case{3, 3, 3}}) {
    auto fam = family_q3k(a, b, c, Scalar(1));
    REQUIRE(fam.tri.has_value());
    auto ps = finite_dimensional_spec(*fam.printed);
    auto ts = verify_finite_dimensional(*fam.tri);
    CHECK(ps.dim() == 4 * (a + b + c));
    CHECK(ts.dim() == 4 * (a + b + c));
    CHECK(cartan_from_spec(ps).matrix == cartan_from_spec(ts).matrix);
    CHECK(cartan_from_spec(ts).det == 4 * a * b * c);
    // the six commutativity generators coincide with the printed ones
    PathCtx ctx = fam.printed->ctx();
    for (auto const &g : fam.tri->relations) {
      bool found = false;
      for (int i = 0; i < 6; ++i)
        if (recast(ctx, g) == recast(ctx, fam.printed->relations[i]))
          found = true;
      CHECK(found);
    }
    CHECK(same_ideal(ctx, fam.printed->relations, fam.tri->relations));
  }
}

TEST_CASE("families from elliptic singularities and the quaternion variant") {
  for (int q : {2, 3, 5}) {
    auto fam = family_aq(q, Scalar(q == 2 ? 2 : 1));
    CHECK(verify_finite_dimensional(*fam.tri).dim() == 10 + q);
  }
  CHECK_THROWS_AS(family_aq(2, Scalar(1)), Error);
  for (auto [p, q] : {std::pair{2, 2}, std::pair{2, 3}}) {
    auto fam = family_bpq(p, q, Scalar(1));
    CHECK(verify_finite_dimensional(*fam.tri).dim() == 18 + p + q);
  }
  // p = 1 is outside the certified range (m_alpha n_alpha = 2); the quotient
  // is still finite-dimensional
  auto b11 = family_bpq(1, 1, Scalar(3));
  CHECK(finite_dimensional_spec(b11.tri->presented()).dim() == 20);
  CHECK_THROWS_AS(family_bpq(1, 1, Scalar(1)), Error);

  CHECK_THROWS_AS(family_q3a3(2), Error);
  auto q3a = family_q3a3(3);
  CHECK(!q3a.tri.has_value());
  auto spec = finite_dimensional_spec(*q3a.printed);
  CHECK(spec.dim() > 0);
  auto cd = cartan_from_spec(spec);
  CHECK(cd.matrix[0][1] == cd.matrix[1][0]); // symmetric algebra
}

TEST_CASE("brauer star and representation-finite families") {
  for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2},
                      std::pair{3, 1}}) {
    auto fam = family_brauer_star(n, m);
    auto spec = finite_dimensional_spec(*fam.printed);
    CHECK(spec.dim() == n * (n * m + 1));
  }
  CHECK(finite_dimensional_spec(*family_bga2cy(1, 2).printed).dim() == 3);
  CHECK(finite_dimensional_spec(*family_bga2cy(2, 1).printed).dim() == 6);
  CHECK(finite_dimensional_spec(*family_bga2cy(2, 3).printed).dim() == 14);
  CHECK(finite_dimensional_spec(*family_bga2cy(3, 2).printed).dim() == 7);
  CHECK_THROWS_AS(family_bga2cy(3, 1), Error);
  CHECK_THROWS_AS(family_bga2cy(4, 2), Error);
}

TEST_CASE("potentials on the Markov quiver") {
  auto rq = qfx::quiver3dprime();
  PathCtx ctx{&rq.quiver(), 0, 15};
  // R = x: Jacobian dimension 36
  auto w1 = nondegenerate_family_W(ctx, rq, {Scalar(0), Scalar(1)});
  std::vector<TruncatedElement> rho1;
  for (int a = 0; a < 6; ++a) rho1.push_back(w1.derivative(a));
  CHECK(verify_hyperpotential(ctx, rho1));
  TruncatedIdeal i1(ctx, rho1);
  CHECK(i1.quotient_dim() == 36);
  // R = x^2: dimension 72
  auto w2 = nondegenerate_family_W(ctx, rq, {Scalar(0), Scalar(0), Scalar(1)});
  std::vector<TruncatedElement> rho2;
  for (int a = 0; a < 6; ++a) rho2.push_back(w2.derivative(a));
  TruncatedIdeal i2(ctx, rho2);
  CHECK(i2.quotient_dim() == 72);
  // R = 0: infinite-dimensional, reported via stabilization failure
  auto w0 = nondegenerate_family_W(ctx, rq, {});
  std::vector<TruncatedElement> rho0;
  for (int a = 0; a < 6; ++a) rho0.push_back(w0.derivative(a));
  TruncatedIdeal i0(ctx, rho0);
  CHECK_THROWS_AS(i0.quotient_basis(), Error);

  // condition (*) gates
  auto r3b = qfx::quiver3b();
  PathCtx cb{&r3b.quiver(), 0, 8};
  CHECK_THROWS_AS(nondegenerate_family_W(cb, r3b, {Scalar(0), Scalar(1)}),
                  Error);
  auto rp = qfx::quiver3prime();
  PathCtx cp{&rp.quiver(), 0, 8};
  CHECK_THROWS_AS(nondegenerate_family_W(cp, rp, {Scalar(0), Scalar(1)}),
                  Error);
}
