#include "quiverforge/ribbon.hpp"

#include <algorithm>
#include <map>

namespace qf {

RibbonQuiver::RibbonQuiver(Quiver q, Permutation f)
    : _q(std::move(q)), _f(std::move(f)), _bar(Permutation::identity(0)),
      _g(Permutation::identity(0)) {
  int k = _q.n_arrows();
  if (_f.size() != k)
    throw Error("FlowViolation", "f must permute the arrow set");
  for (int a = 0; a < k; ++a) {
    if (_q.src[a] < 0 || _q.src[a] >= _q.n_vertices || _q.tgt[a] < 0 ||
        _q.tgt[a] >= _q.n_vertices)
      throw Error("FlowViolation", "arrow endpoint out of range");
  }
  std::vector<std::vector<int>> out(_q.n_vertices), in(_q.n_vertices);
  for (int a = 0; a < k; ++a) {
    out[_q.src[a]].push_back(a);
    in[_q.tgt[a]].push_back(a);
  }
  for (int v = 0; v < _q.n_vertices; ++v)
    if (out[v].size() != 2 || in[v].size() != 2)
      throw Error("DegreeViolation",
                  "vertex " + std::to_string(v) + " lacks in/out degree 2");
  for (int a = 0; a < k; ++a)
    if (_q.src[_f(a)] != _q.tgt[a])
      throw Error("FlowViolation",
                  "f(" + std::to_string(a) + ") does not start where " +
                      std::to_string(a) + " ends");
  std::vector<int> bar(k);
  for (int v = 0; v < _q.n_vertices; ++v) {
    bar[out[v][0]] = out[v][1];
    bar[out[v][1]] = out[v][0];
  }
  _bar = Permutation(std::move(bar));
  _g = _bar.compose(_f);
}

Path RibbonQuiver::target_path(Path const &p) const { return p; }

GCyclePath RibbonQuiver::cycle_data(int arrow) const {
  GCyclePath d;
  d.n_alpha = _g.orbit_length(arrow);
  d.k_alpha = _f.orbit_length(arrow);
  d.omega.base = src(arrow);
  d.omega_prime.base = src(arrow);
  int a = arrow;
  for (int i = 0; i < d.n_alpha; ++i) {
    d.omega.arrows.push_back(a);
    if (i + 1 < d.n_alpha) d.omega_prime.arrows.push_back(a);
    a = _g(a);
  }
  d.xi.base = src(arrow);
  d.xi_prime.base = src(arrow);
  a = arrow;
  for (int i = 0; i < d.k_alpha; ++i) {
    d.xi.arrows.push_back(a);
    if (i + 1 < d.k_alpha) d.xi_prime.arrows.push_back(a);
    a = _f(a);
  }
  return d;
}

std::vector<std::vector<int>> RibbonQuiver::incidence_matrix() const {
  std::vector<std::vector<int>> rows;
  for (auto const &cyc : _g.cycles()) {
    std::vector<int> row(_q.n_vertices, 0);
    for (int a : cyc) row[src(a)] += 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// Arrow components under <f, bar> (equals quiver connectivity).
std::vector<std::vector<int>> arrow_components(RibbonQuiver const &rq) {
  int k = rq.n_arrows();
  Permutation finv = rq.f().inverse();
  std::vector<int> comp(k, -1);
  std::vector<std::vector<int>> comps;
  for (int a = 0; a < k; ++a) {
    if (comp[a] >= 0) continue;
    std::vector<int> stack{a}, members;
    comp[a] = (int)comps.size();
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (int y : {rq.f()(x), rq.bar()(x), finv(x)}) {
        if (comp[y] < 0) {
          comp[y] = comp[a];
          stack.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    comps.push_back(std::move(members));
  }
  return comps;
}

// Deterministic BFS labeling of one component from a seed arrow; returns the
// encoding (label images of f and bar) and the label map (arrow -> label).
void bfs_encode(RibbonQuiver const &rq, std::vector<int> const &members,
                int seed, std::vector<int> &enc, std::vector<int> &label) {
  Permutation finv = rq.f().inverse();
  label.assign(rq.n_arrows(), -1);
  std::vector<int> order;
  order.reserve(members.size());
  label[seed] = 0;
  order.push_back(seed);
  for (size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    for (int y : {rq.f()(x), rq.bar()(x), finv(x)}) {
      if (label[y] < 0) {
        label[y] = (int)order.size();
        order.push_back(y);
      }
    }
  }
  enc.clear();
  enc.reserve(2 * order.size());
  for (int x : order) enc.push_back(label[rq.f()(x)]);
  for (int x : order) enc.push_back(label[rq.bar()(x)]);
}

struct CompCanon {
  std::vector<int> enc;
  std::vector<int> label; // labeling achieving enc
};

CompCanon canon_component(RibbonQuiver const &rq, std::vector<int> const &members) {
  CompCanon best;
  std::vector<int> enc, label;
  for (int seed : members) {
    bfs_encode(rq, members, seed, enc, label);
    if (best.enc.empty() || enc < best.enc) {
      best.enc = enc;
      best.label = label;
    }
  }
  return best;
}

} // namespace

bool RibbonQuiver::connected() const {
  return n_arrows() > 0 && arrow_components(*this).size() == 1;
}

std::vector<int> RibbonQuiver::canonical_form() const {
  std::vector<std::vector<int>> encs;
  for (auto const &members : arrow_components(*this))
    encs.push_back(canon_component(*this, members).enc);
  std::sort(encs.begin(), encs.end());
  std::vector<int> out;
  for (auto const &e : encs) {
    out.push_back((int)e.size());
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

bool RibbonQuiver::self_dual() const {
  return canonical_form() == dual().canonical_form();
}

std::optional<Isomorphism> are_isomorphic(RibbonQuiver const &a, RibbonQuiver const &b) {
  if (a.n_arrows() != b.n_arrows() || a.n_vertices() != b.n_vertices())
    return std::nullopt;
  auto ca = arrow_components(a);
  auto cb = arrow_components(b);
  if (ca.size() != cb.size()) return std::nullopt;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> la, lb;
  for (auto const &m : ca) {
    auto c = canon_component(a, m);
    la.push_back({std::move(c.enc), std::move(c.label)});
  }
  for (auto const &m : cb) {
    auto c = canon_component(b, m);
    lb.push_back({std::move(c.enc), std::move(c.label)});
  }
  auto by_enc = [](auto const &x, auto const &y) { return x.first < y.first; };
  std::sort(la.begin(), la.end(), by_enc);
  std::sort(lb.begin(), lb.end(), by_enc);
  for (size_t i = 0; i < la.size(); ++i)
    if (la[i].first != lb[i].first) return std::nullopt;

  Isomorphism iso;
  iso.arrow_map.assign(a.n_arrows(), -1);
  iso.vertex_map.assign(a.n_vertices(), -1);
  for (size_t i = 0; i < la.size(); ++i) {
    // invert b's labeling per component
    std::map<int, int> inv;
    for (int x = 0; x < b.n_arrows(); ++x)
      if (lb[i].second[x] >= 0) inv[lb[i].second[x]] = x;
    for (int x = 0; x < a.n_arrows(); ++x)
      if (la[i].second[x] >= 0) iso.arrow_map[x] = inv[la[i].second[x]];
  }
  for (int x = 0; x < a.n_arrows(); ++x)
    iso.vertex_map[a.src(x)] = b.src(iso.arrow_map[x]);
  return iso;
}

std::vector<Isomorphism> all_isomorphisms(RibbonQuiver const &a, RibbonQuiver const &b) {
  std::vector<Isomorphism> out;
  if (a.n_arrows() != b.n_arrows() || a.n_vertices() != b.n_vertices())
    return out;
  if (!a.connected() || !b.connected())
    throw Error("Disconnected", "all_isomorphisms requires connected quivers");
  int k = a.n_arrows();
  Permutation fainv = a.f().inverse(), fbinv = b.f().inverse();
  for (int y0 = 0; y0 < k; ++y0) {
    // an isomorphism is determined by the image of arrow 0
    std::vector<int> img(k, -1);
    img[0] = y0;
    std::vector<int> stack{0};
    bool ok = true;
    while (ok && !stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      int pairs[3][2] = {{a.f()(x), b.f()(img[x])},
                         {a.bar()(x), b.bar()(img[x])},
                         {fainv(x), fbinv(img[x])}};
      for (auto &pr : pairs) {
        if (img[pr[0]] < 0) {
          img[pr[0]] = pr[1];
          stack.push_back(pr[0]);
        } else if (img[pr[0]] != pr[1]) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    // full consistency check
    std::vector<char> hit(k, 0);
    for (int x = 0; x < k && ok; ++x) {
      if (img[x] < 0 || hit[img[x]]) ok = false;
      else hit[img[x]] = 1;
    }
    for (int x = 0; x < k && ok; ++x)
      if (img[a.f()(x)] != b.f()(img[x]) || img[a.bar()(x)] != b.bar()(img[x]))
        ok = false;
    if (!ok) continue;
    Isomorphism iso;
    iso.arrow_map = img;
    iso.vertex_map.assign(a.n_vertices(), -1);
    for (int x = 0; x < k; ++x) iso.vertex_map[a.src(x)] = b.src(img[x]);
    out.push_back(std::move(iso));
  }
  return out;
}

RibbonGraph to_ribbon_graph(RibbonQuiver const &rq) {
  return RibbonGraph{rq.bar(), rq.g()};
}

RibbonQuiver from_ribbon_graph(RibbonGraph const &rg) {
  int k = rg.iota.size();
  if (rg.sigma.size() != k)
    throw Error("FlowViolation", "iota and sigma sizes differ");
  for (int h = 0; h < k; ++h)
    if (rg.iota(h) == h || rg.iota(rg.iota(h)) != h)
      throw Error("FlowViolation", "iota is not a fixed-point-free involution");
  // vertices = iota-orbits (edges of the graph)
  std::vector<int> vert(k, -1);
  int n = 0;
  for (int h = 0; h < k; ++h) {
    if (vert[h] >= 0) continue;
    vert[h] = vert[rg.iota(h)] = n++;
  }
  Quiver q;
  q.n_vertices = n;
  q.src.resize(k);
  q.tgt.resize(k);
  for (int h = 0; h < k; ++h) {
    q.src[h] = vert[h];
    q.tgt[h] = vert[rg.sigma(h)];
  }
  return RibbonQuiver(std::move(q), rg.iota.compose(rg.sigma));
}

} // namespace qf
