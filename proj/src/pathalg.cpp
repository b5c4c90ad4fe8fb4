#include "quiverforge/pathalg.hpp"

#include <algorithm>
#include <set>

#include "quiverforge/linalg.hpp"

namespace qf {

int path_start(Quiver const &q, Path const &p) {
  (void)q;
  return p.base;
}

int path_end(Quiver const &q, Path const &p) {
  return p.arrows.empty() ? p.base : q.tgt[p.arrows.back()];
}

bool path_valid(Quiver const &q, Path const &p) {
  if (p.base < 0 || p.base >= q.n_vertices) return false;
  int at = p.base;
  for (int a : p.arrows) {
    if (a < 0 || a >= q.n_arrows() || q.src[a] != at) return false;
    at = q.tgt[a];
  }
  return true;
}

TruncatedElement TruncatedElement::idempotent(PathCtx ctx, int v) {
  return single(ctx, Path{v, {}}, Scalar(1, ctx.chr));
}

TruncatedElement TruncatedElement::arrow(PathCtx ctx, int a) {
  return single(ctx, Path{ctx.q->src[a], {a}}, Scalar(1, ctx.chr));
}

TruncatedElement TruncatedElement::single(PathCtx ctx, Path p, Scalar c) {
  if (!path_valid(*ctx.q, p)) throw Error("BadPath", "path does not compose");
  if (c.characteristic() != ctx.chr)
    throw Error("FieldMismatch", "scalar characteristic mismatch");
  TruncatedElement e(ctx);
  e.add_term(std::move(p), std::move(c));
  return e;
}

int TruncatedElement::min_degree() const {
  return _terms.empty() ? -1 : _terms.begin()->first.length();
}

TruncatedElement &TruncatedElement::add_term(Path p, Scalar c) {
  if (c.is_zero() || p.length() > _ctx.trunc) return *this;
  auto [it, fresh] = _terms.try_emplace(std::move(p), c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) _terms.erase(it);
  }
  return *this;
}

TruncatedElement TruncatedElement::operator+(TruncatedElement const &o) const {
  TruncatedElement r = *this;
  for (auto const &[p, c] : o._terms) r.add_term(p, c);
  return r;
}

TruncatedElement TruncatedElement::operator-(TruncatedElement const &o) const {
  TruncatedElement r = *this;
  for (auto const &[p, c] : o._terms) r.add_term(p, -c);
  return r;
}

TruncatedElement TruncatedElement::operator-() const {
  TruncatedElement r(_ctx);
  for (auto const &[p, c] : _terms) r._terms.emplace(p, -c);
  return r;
}

TruncatedElement TruncatedElement::operator*(Scalar const &c) const {
  TruncatedElement r(_ctx);
  if (c.is_zero()) return r;
  for (auto const &[p, x] : _terms) r._terms.emplace(p, x * c);
  return r;
}

TruncatedElement TruncatedElement::operator*(TruncatedElement const &o) const {
  TruncatedElement r(_ctx);
  for (auto const &[p1, c1] : _terms) {
    int e1 = path_end(*_ctx.q, p1);
    for (auto const &[p2, c2] : o._terms) {
      if (p2.base != e1) continue;
      if (p1.length() + p2.length() > _ctx.trunc) continue;
      Path p = p1;
      p.arrows.insert(p.arrows.end(), p2.arrows.begin(), p2.arrows.end());
      r.add_term(std::move(p), c1 * c2);
    }
  }
  return r;
}

std::string TruncatedElement::str() const {
  if (_terms.empty()) return "0";
  std::string s;
  for (auto const &[p, c] : _terms) {
    if (!s.empty()) s += " + ";
    s += c.str();
    s += " * ";
    if (p.arrows.empty()) {
      s += "e_" + std::to_string(p.base);
    } else {
      for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += ".";
        s += std::to_string(p.arrows[i]);
      }
    }
  }
  return s;
}

TruncatedIdeal::TruncatedIdeal(PathCtx ctx, std::vector<TruncatedElement> gens)
    : _ctx(ctx) {
  for (auto &g : gens) {
    if (!(g.ctx() == _ctx))
      throw Error("FieldMismatch", "generator context mismatch");
    _queue.push_back(std::move(g));
  }
  run();
}

TruncatedElement TruncatedIdeal::normal_form(TruncatedElement const &e) const {
  std::map<Path, Scalar, PathOrder> pending(e.terms().begin(), e.terms().end());
  TruncatedElement out(_ctx);
  while (!pending.empty()) {
    auto it = pending.begin();
    Path w = it->first;
    Scalar c = it->second;
    pending.erase(it);
    if (c.is_zero()) continue;
    int pos = -1, ridx = -1;
    for (size_t i = 0; i < w.arrows.size() && ridx < 0; ++i) {
      auto bf = _by_first.find(w.arrows[i]);
      if (bf == _by_first.end()) continue;
      for (int r : bf->second) {
        if (!_rules[r].active) continue;
        auto const &lm = _rules[r].lhs.arrows;
        if (i + lm.size() > w.arrows.size()) continue;
        if (std::equal(lm.begin(), lm.end(), w.arrows.begin() + (long)i)) {
          pos = (int)i;
          ridx = r;
          break;
        }
      }
    }
    if (ridx < 0) {
      out.add_term(std::move(w), c);
      continue;
    }
    auto const &lm = _rules[ridx].lhs.arrows;
    Path prefix{w.base, {w.arrows.begin(), w.arrows.begin() + pos}};
    int sufstart = pos + (int)lm.size();
    int sufbase = sufstart < (int)w.arrows.size() ? _ctx.q->src[w.arrows[sufstart]]
                                                  : path_end(*_ctx.q, w);
    Path suffix{sufbase, {w.arrows.begin() + sufstart, w.arrows.end()}};
    TruncatedElement repl = TruncatedElement::single(_ctx, prefix, c) *
                            _rules[ridx].rhs *
                            TruncatedElement::single(_ctx, suffix, Scalar(1, _ctx.chr));
    for (auto const &[p2, c2] : repl.terms()) {
      auto [jt, fresh] = pending.try_emplace(p2, c2);
      if (!fresh) {
        jt->second = jt->second + c2;
        if (jt->second.is_zero()) pending.erase(jt);
      }
    }
  }
  return out;
}

bool TruncatedIdeal::contains(TruncatedElement const &e) const {
  return normal_form(e).is_zero();
}

void TruncatedIdeal::add_pairs(int idx) {
  for (int j = 0; j < (int)_rules.size(); ++j) {
    if (!_rules[j].active) continue;
    _pairs.push_back({idx, j});
    if (j != idx) _pairs.push_back({j, idx});
  }
}

void TruncatedIdeal::add_element(TruncatedElement e) {
  e = normal_form(e);
  if (e.is_zero()) return;
  Path lm = e.terms().begin()->first;
  Scalar c = e.terms().begin()->second;
  if (lm.length() == 0)
    throw Error("DegenerateIdeal", "ideal contains an idempotent");
  TruncatedElement rhs =
      TruncatedElement::single(_ctx, lm, Scalar(1, _ctx.chr)) - e * c.inverse();
  // retire rules whose left side contains the new one
  for (int j = 0; j < (int)_rules.size(); ++j) {
    if (!_rules[j].active) continue;
    auto const &w = _rules[j].lhs.arrows;
    if (w.size() < lm.arrows.size()) continue;
    bool sub = false;
    for (size_t i = 0; i + lm.arrows.size() <= w.size() && !sub; ++i)
      if (std::equal(lm.arrows.begin(), lm.arrows.end(), w.begin() + (long)i))
        sub = true;
    if (!sub) continue;
    _rules[j].active = false;
    _queue.push_back(
        TruncatedElement::single(_ctx, _rules[j].lhs, Scalar(1, _ctx.chr)) -
        _rules[j].rhs);
  }
  int idx = (int)_rules.size();
  _rules.push_back(Rule{lm, std::move(rhs), true});
  _by_first[lm.arrows[0]].push_back(idx);
  add_pairs(idx);
}

void TruncatedIdeal::run() {
  while (!_queue.empty() || !_pairs.empty()) {
    if (!_queue.empty()) {
      TruncatedElement e = std::move(_queue.back());
      _queue.pop_back();
      add_element(std::move(e));
      continue;
    }
    auto [i, j] = _pairs.back();
    _pairs.pop_back();
    if (!_rules[i].active || !_rules[j].active) continue;
    auto const &w1 = _rules[i].lhs.arrows;
    auto const &w2 = _rules[j].lhs.arrows;
    int l1 = (int)w1.size(), l2 = (int)w2.size();
    for (int ov = 1; ov < std::min(l1, l2); ++ov) {
      if (l1 + l2 - ov > _ctx.trunc) continue;
      if (!std::equal(w2.begin(), w2.begin() + ov, w1.end() - ov)) continue;
      Path suffix{_ctx.q->src[w2[ov]], {w2.begin() + ov, w2.end()}};
      Path prefix{_rules[i].lhs.base, {w1.begin(), w1.end() - ov}};
      Scalar one(1, _ctx.chr);
      TruncatedElement s =
          _rules[i].rhs * TruncatedElement::single(_ctx, suffix, one) -
          TruncatedElement::single(_ctx, prefix, one) * _rules[j].rhs;
      _queue.push_back(std::move(s));
    }
  }
}

std::vector<Path> const &TruncatedIdeal::quotient_basis() const {
  if (_basis) return *_basis;
  std::vector<Path> basis, level;
  for (int v = 0; v < _ctx.q->n_vertices; ++v) level.push_back(Path{v, {}});
  basis = level;
  _stab = -1;
  for (int d = 1; d <= _ctx.trunc && !level.empty(); ++d) {
    std::vector<Path> next;
    for (auto const &w : level) {
      int end = path_end(*_ctx.q, w);
      for (int a = 0; a < _ctx.q->n_arrows(); ++a) {
        if (_ctx.q->src[a] != end) continue;
        Path w2 = w;
        w2.arrows.push_back(a);
        bool red = false;
        for (auto const &r : _rules) {
          if (!r.active) continue;
          auto const &lm = r.lhs.arrows;
          if (lm.size() > w2.arrows.size()) continue;
          if (std::equal(lm.rbegin(), lm.rend(), w2.arrows.rbegin())) {
            red = true;
            break;
          }
        }
        if (!red) next.push_back(std::move(w2));
      }
    }
    if (next.empty()) {
      _stab = d;
      break;
    }
    basis.insert(basis.end(), next.begin(), next.end());
    level = std::move(next);
  }
  if (_stab < 0)
    throw Error("StabilizationFailure",
                "quotient basis does not stabilize below the cutoff");
  _basis = std::move(basis);
  return *_basis;
}

int TruncatedIdeal::stabilization_degree() const {
  quotient_basis();
  return _stab;
}

void Potential::add_cycle(std::vector<int> arrows, Scalar c) {
  if (arrows.empty()) throw Error("BadPath", "empty cycle");
  if (c.characteristic() != _ctx.chr)
    throw Error("FieldMismatch", "scalar characteristic mismatch");
  int n = (int)arrows.size();
  for (int i = 0; i < n; ++i)
    if (_ctx.q->tgt[arrows[i]] != _ctx.q->src[arrows[(i + 1) % n]])
      throw Error("BadPath", "arrows do not close up");
  std::vector<int> best = arrows;
  for (int r = 1; r < n; ++r) {
    std::vector<int> rot(arrows.begin() + r, arrows.end());
    rot.insert(rot.end(), arrows.begin(), arrows.begin() + r);
    if (rot < best) best = rot;
  }
  auto [it, fresh] = _terms.try_emplace(std::move(best), c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) _terms.erase(it);
  }
}

TruncatedElement Potential::derivative(int arrow) const {
  TruncatedElement out(_ctx);
  for (auto const &[w, c] : _terms) {
    int n = (int)w.size();
    for (int i = 0; i < n; ++i) {
      if (w[i] != arrow) continue;
      Path p{_ctx.q->tgt[arrow], {}};
      for (int j = 1; j < n; ++j) p.arrows.push_back(w[(i + j) % n]);
      out.add_term(std::move(p), c);
    }
  }
  return out;
}

std::optional<Potential> find_potential(PathCtx ctx,
                                        std::vector<TruncatedElement> const &rho) {
  if ((int)rho.size() != ctx.q->n_arrows())
    throw Error("BadPath", "one element per arrow required");
  std::set<std::vector<int>> classes;
  for (int a = 0; a < ctx.q->n_arrows(); ++a) {
    for (auto const &[p, c] : rho[a].terms()) {
      (void)c;
      if (p.base != ctx.q->tgt[a] || path_end(*ctx.q, p) != ctx.q->src[a])
        return std::nullopt;
      std::vector<int> cyc{a};
      cyc.insert(cyc.end(), p.arrows.begin(), p.arrows.end());
      Potential tmp(ctx);
      tmp.add_cycle(cyc, Scalar(1, ctx.chr));
      if (!tmp.terms().empty()) classes.insert(tmp.terms().begin()->first);
    }
  }
  std::vector<std::vector<int>> cols(classes.begin(), classes.end());
  // rows: coefficient of each path in each derivative
  std::map<std::pair<int, Path>, int> rowof;
  std::vector<std::pair<int, Path>> rows;
  auto row_id = [&](int a, Path const &p) {
    auto [it, fresh] = rowof.try_emplace({a, p}, (int)rows.size());
    if (fresh) rows.push_back({a, p});
    return it->second;
  };
  std::vector<std::map<int, Scalar>> colvals(cols.size());
  for (size_t k = 0; k < cols.size(); ++k) {
    Potential w(ctx);
    w.add_cycle(cols[k], Scalar(1, ctx.chr));
    for (int a = 0; a < ctx.q->n_arrows(); ++a) {
      TruncatedElement d = w.derivative(a);
      for (auto const &[p, c] : d.terms()) colvals[k][row_id(a, p)] = c;
    }
  }
  Vec b;
  for (auto const &[a, p] : rows) {
    auto it = rho[a].terms().find(p);
    b.push_back(it == rho[a].terms().end() ? Scalar(0, ctx.chr) : it->second);
  }
  for (int a = 0; a < ctx.q->n_arrows(); ++a)
    for (auto const &[p, c] : rho[a].terms())
      if (!rowof.count({a, p})) return std::nullopt;
  Mat m(rows.size(), Vec(cols.size(), Scalar(0, ctx.chr)));
  for (size_t k = 0; k < cols.size(); ++k)
    for (auto const &[r, c] : colvals[k]) m[r][k] = c;
  auto x = solve(std::move(m), b);
  if (!x) return std::nullopt;
  Potential w(ctx);
  for (size_t k = 0; k < cols.size(); ++k)
    if (!(*x)[k].is_zero()) w.add_cycle(cols[k], (*x)[k]);
  return w;
}

TruncatedElement substitute(std::map<int, TruncatedElement> const &img,
                            TruncatedElement const &e) {
  PathCtx ctx = e.ctx();
  TruncatedElement out(ctx);
  for (auto const &[p, c] : e.terms()) {
    TruncatedElement acc = TruncatedElement::idempotent(ctx, p.base);
    for (int a : p.arrows) {
      auto it = img.find(a);
      acc = it == img.end() ? acc * TruncatedElement::arrow(ctx, a)
                            : acc * it->second;
      if (acc.is_zero()) break;
    }
    out = out + acc * c;
  }
  return out;
}

std::map<int, TruncatedElement>
invert_substitution(PathCtx ctx, std::map<int, TruncatedElement> const &phi) {
  std::map<int, Scalar> lead;
  std::map<int, TruncatedElement> tail;
  for (auto const &[a, e] : phi) {
    if (!(e.ctx() == ctx)) throw Error("FieldMismatch", "context mismatch");
    Path unit{ctx.q->src[a], {a}};
    Scalar c(0, ctx.chr);
    TruncatedElement h(ctx);
    for (auto const &[p, x] : e.terms()) {
      if (p.base != ctx.q->src[a] || path_end(*ctx.q, p) != ctx.q->tgt[a])
        throw Error("BadSubstitution", "image endpoints differ from the arrow");
      if (p == unit) {
        c = x;
      } else if (p.length() < 2) {
        throw Error("BadSubstitution", "image is not unitriangular");
      } else {
        h.add_term(p, x);
      }
    }
    if (c.is_zero())
      throw Error("BadSubstitution", "leading coefficient vanishes");
    lead.emplace(a, c);
    tail.emplace(a, std::move(h));
  }
  std::map<int, TruncatedElement> psi;
  for (auto const &[a, c] : lead)
    psi.emplace(a, TruncatedElement::arrow(ctx, a) * c.inverse());
  for (int it = 0; it < ctx.trunc; ++it) {
    std::map<int, TruncatedElement> next;
    for (auto const &[a, c] : lead)
      next.emplace(a, (TruncatedElement::arrow(ctx, a) -
                       substitute(psi, tail.at(a))) *
                          c.inverse());
    if (next == psi) break;
    psi = std::move(next);
  }
  return psi;
}

bool verify_hyperpotential(PathCtx ctx,
                           std::vector<TruncatedElement> const &rho) {
  if ((int)rho.size() != ctx.q->n_arrows())
    throw Error("ParallelClassViolation", "one element per arrow expected");
  TruncatedElement left(ctx), right(ctx);
  for (int a = 0; a < ctx.q->n_arrows(); ++a) {
    for (auto const &[p, c] : rho[a].terms()) {
      (void)c;
      if (p.base != ctx.q->tgt[a] || path_end(*ctx.q, p) != ctx.q->src[a])
        throw Error("ParallelClassViolation",
                    "rho[" + std::to_string(a) +
                        "] leaves e_{t(a)} KQ e_{s(a)}");
    }
    auto u = TruncatedElement::arrow(ctx, a);
    left = left + u * rho[a];
    right = right + rho[a] * u;
  }
  return left == right;
}

namespace {

// p(c)*c' for a closed cycle c with open truncation c'.
TruncatedElement poly_on_cycle(PathCtx ctx, Poly const &p, Path const &cycle,
                               Path const &open) {
  TruncatedElement out(ctx);
  TruncatedElement pw = TruncatedElement::idempotent(ctx, cycle.base);
  TruncatedElement c = TruncatedElement::single(ctx, cycle, Scalar(1, ctx.chr));
  TruncatedElement tail = TruncatedElement::single(ctx, open, Scalar(1, ctx.chr));
  for (size_t j = 0; j < p.size(); ++j) {
    if (!p[j].is_zero()) out = out + pw * tail * p[j];
    pw = pw * c;
    if (pw.is_zero() && j + 1 < p.size()) {
      // remaining terms exceed the cutoff unless their coefficients vanish
      break;
    }
  }
  return out;
}

} // namespace

std::vector<TruncatedElement>
hyperpotential_from_data(PathCtx ctx, RibbonQuiver const &rq,
                         std::vector<Poly> const &p,
                         std::vector<Poly> const &q) {
  int n = rq.n_arrows();
  if ((int)p.size() != n || (int)q.size() != n)
    throw Error("InvarianceViolation", "one polynomial per arrow expected");
  auto norm = [](Poly v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
  };
  for (int a = 0; a < n; ++a) {
    if (norm(p[a]) != norm(p[rq.f()(a)]))
      throw Error("InvarianceViolation", "p is not constant on f-orbits");
    if (norm(q[a]) != norm(q[rq.g()(a)]))
      throw Error("InvarianceViolation", "q is not constant on g-orbits");
  }
  std::vector<TruncatedElement> rho;
  rho.reserve(n);
  for (int a = 0; a < n; ++a) {
    auto fa = rq.cycle_data(rq.f()(a));
    auto ga = rq.cycle_data(rq.g()(a));
    rho.push_back(poly_on_cycle(ctx, p[a], fa.xi, fa.xi_prime) -
                  poly_on_cycle(ctx, q[a], ga.omega, ga.omega_prime));
  }
  return rho;
}

} // namespace qf
