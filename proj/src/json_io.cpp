#include "quiverforge/json_io.hpp"

#include <json.hpp>

namespace qf {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(Json const &j, bool pretty) {
  return pretty ? j.dump(2) + "\n" : j.dump() + "\n";
}

Json parse(std::string const &text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("ParseError", "malformed JSON");
  return j;
}

int geti(Json const &j, char const *key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw Error("ParseError", std::string("expected integer field: ") + key);
  return j[key].get<int>();
}

std::vector<int> getiv(Json const &j, char const *key) {
  if (!j.contains(key) || !j[key].is_array())
    throw Error("ParseError", std::string("expected array field: ") + key);
  std::vector<int> out;
  for (auto const &x : j[key]) {
    if (!x.is_number_integer())
      throw Error("ParseError", std::string("non-integer entry in: ") + key);
    out.push_back(x.get<int>());
  }
  return out;
}

Scalar scalar_from(Json const &j, unsigned chr) {
  if (j.is_number_integer()) return Scalar(j.get<long>(), chr);
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), chr);
  throw Error("ParseError", "scalar must be an integer or a string");
}

Json path_to_json(Path const &p) {
  Json j;
  j["base"] = p.base;
  j["arrows"] = p.arrows;
  return j;
}

Path path_from_json(Json const &j) {
  return Path{geti(j, "base"), getiv(j, "arrows")};
}

} // namespace

std::string ribbon_to_json(RibbonQuiver const &rq, bool pretty) {
  Json j;
  std::vector<int> verts(rq.n_vertices());
  for (int v = 0; v < rq.n_vertices(); ++v) verts[v] = v;
  j["vertices"] = verts;
  j["arrows"] = Json::array();
  for (int a = 0; a < rq.n_arrows(); ++a)
    j["arrows"].push_back({{"id", a}, {"s", rq.src(a)}, {"t", rq.tgt(a)}});
  std::vector<int> f(rq.n_arrows());
  for (int a = 0; a < rq.n_arrows(); ++a) f[a] = rq.f()(a);
  j["f"] = f;
  return dump(j, pretty);
}

RibbonQuiver ribbon_from_json(std::string const &text) {
  Json j = parse(text);
  auto verts = getiv(j, "vertices");
  Quiver q;
  q.n_vertices = (int)verts.size();
  for (int i = 0; i < q.n_vertices; ++i)
    if (verts[i] != i)
      throw Error("ParseError", "vertices must be 0..n-1 in order");
  if (!j.contains("arrows") || !j["arrows"].is_array())
    throw Error("ParseError", "expected array field: arrows");
  int id = 0;
  for (auto const &arr : j["arrows"]) {
    if (geti(arr, "id") != id++)
      throw Error("ParseError", "arrow ids must be 0..n-1 in order");
    int s = geti(arr, "s"), t = geti(arr, "t");
    if (s < 0 || s >= q.n_vertices || t < 0 || t >= q.n_vertices)
      throw Error("ParseError", "arrow endpoint out of range");
    q.src.push_back(s);
    q.tgt.push_back(t);
  }
  auto f = getiv(j, "f");
  if ((int)f.size() != q.n_arrows())
    throw Error("ParseError", "f must list an image per arrow");
  return RibbonQuiver(q, Permutation(f));
}

std::string data_to_json(GInvariantData const &data, bool pretty) {
  Json j;
  Json m = Json::object(), c = Json::object(), lam = Json::object();
  for (int a = 0; a < (int)data.m.size(); ++a) m[std::to_string(a)] = data.m[a];
  for (int a = 0; a < (int)data.c.size(); ++a)
    c[std::to_string(a)] = data.c[a].str();
  for (auto const &[a, v] : data.lambda) lam[std::to_string(a)] = v.str();
  j["m"] = m;
  j["c"] = c;
  j["lambda"] = lam;
  return dump(j, pretty);
}

GInvariantData data_from_json(std::string const &text, unsigned chr) {
  Json j = parse(text);
  if (!j.contains("m") || !j["m"].is_object())
    throw Error("ParseError", "expected object field: m");
  GInvariantData data;
  int n = (int)j["m"].size();
  data.m.assign(n, 1);
  data.c.assign(n, Scalar::one(chr));
  for (auto const &[key, v] : j["m"].items()) {
    int a = std::stoi(key);
    if (a < 0 || a >= n) throw Error("ParseError", "m keyed off-range arrow");
    if (!v.is_number_integer())
      throw Error("ParseError", "multiplicities must be integers");
    data.m[a] = v.get<int>();
  }
  if (j.contains("c"))
    for (auto const &[key, v] : j["c"].items()) {
      int a = std::stoi(key);
      if (a < 0 || a >= n) throw Error("ParseError", "c keyed off-range arrow");
      data.c[a] = scalar_from(v, chr);
    }
  if (j.contains("lambda"))
    for (auto const &[key, v] : j["lambda"].items())
      data.lambda[std::stoi(key)] = scalar_from(v, chr);
  return data;
}

std::string triangulation_to_json(Triangulation const &t, bool pretty) {
  Json j;
  j["triangles"] = Json::array();
  for (auto const &tri : t.triangles)
    j["triangles"].push_back({tri[0], tri[1], tri[2]});
  j["boundary"] = t.boundary;
  j["glue"] = Json::array();
  for (auto const &[a, b] : t.glue) j["glue"].push_back({a, b});
  return dump(j, pretty);
}

Triangulation triangulation_from_json(std::string const &text) {
  Json j = parse(text);
  Triangulation t;
  if (!j.contains("triangles") || !j["triangles"].is_array())
    throw Error("ParseError", "expected array field: triangles");
  for (auto const &tri : j["triangles"]) {
    if (!tri.is_array() || tri.size() != 3)
      throw Error("ParseError", "each triangle lists three slots");
    t.triangles.push_back(
        {tri[0].get<int>(), tri[1].get<int>(), tri[2].get<int>()});
  }
  t.boundary = getiv(j, "boundary");
  if (j.contains("glue"))
    for (auto const &g : j["glue"]) {
      if (!g.is_array() || g.size() != 2)
        throw Error("ParseError", "each glue entry pairs two slots");
      t.glue.push_back({g[0].get<int>(), g[1].get<int>()});
    }
  return t;
}

std::string surface_to_json(MarkedSurface const &s, bool pretty) {
  Json j;
  j["genus"] = s.genus;
  j["boundary"] = s.boundary;
  j["punctures"] = s.punctures;
  return dump(j, pretty);
}

MarkedSurface surface_from_json(std::string const &text) {
  Json j = parse(text);
  MarkedSurface s;
  s.genus = geti(j, "genus");
  s.boundary = getiv(j, "boundary");
  s.punctures = geti(j, "punctures");
  s.normalize();
  s.validate();
  return s;
}

std::string cartan_to_json(CartanData const &cd, bool pretty) {
  Json j;
  j["matrix"] = cd.matrix;
  j["dim"] = cd.dimension;
  j["rank"] = cd.rank;
  j["det"] = cd.det.get_str();
  return dump(j, pretty);
}

std::string spec_to_json(FDAlgebraSpec const &spec, bool pretty) {
  Json j;
  j["characteristic"] = spec.chr;
  j["vertices"] = spec.n_vertices;
  std::vector<int> idem(spec.n_vertices);
  for (int v = 0; v < spec.n_vertices; ++v) idem[v] = v;
  j["idempotents"] = idem;
  j["basis"] = Json::array();
  for (auto const &p : spec.basis) j["basis"].push_back(path_to_json(p));
  j["mult"] = Json::array();
  for (auto const &[key, terms] : spec.mult) {
    Json row = Json::array();
    for (auto const &[k, c] : terms) row.push_back({k, c.str()});
    j["mult"].push_back({key.first, key.second, row});
  }
  j["arrows"] = Json::array();
  for (int a = 0; a < spec.n_arrows(); ++a) {
    Json terms = Json::array();
    for (auto const &[k, c] : spec.arrow_terms[a])
      terms.push_back({k, c.str()});
    j["arrows"].push_back({{"s", spec.arrow_src[a]},
                           {"t", spec.arrow_tgt[a]},
                           {"terms", terms}});
  }
  j["certificate_degree"] = spec.certificate_degree;
  return dump(j, pretty);
}

FDAlgebraSpec spec_from_json(std::string const &text) {
  Json j = parse(text);
  FDAlgebraSpec spec;
  spec.chr = (unsigned)geti(j, "characteristic");
  spec.n_vertices = geti(j, "vertices");
  if (!j.contains("basis") || !j["basis"].is_array())
    throw Error("ParseError", "expected array field: basis");
  for (auto const &p : j["basis"]) spec.basis.push_back(path_from_json(p));
  // endpoints are not stored; recover from the arrow table
  if (!j.contains("arrows") || !j["arrows"].is_array())
    throw Error("ParseError", "expected array field: arrows");
  for (auto const &arr : j["arrows"]) {
    spec.arrow_src.push_back(geti(arr, "s"));
    spec.arrow_tgt.push_back(geti(arr, "t"));
    std::vector<std::pair<int, Scalar>> terms;
    for (auto const &t : arr["terms"])
      terms.push_back({t[0].get<int>(), scalar_from(t[1], spec.chr)});
    spec.arrow_terms.push_back(std::move(terms));
  }
  for (auto const &p : spec.basis) {
    int s = p.base, t = p.base;
    for (int a : p.arrows) {
      if (a < 0 || a >= spec.n_arrows())
        throw Error("ParseError", "basis word uses an unknown arrow");
      t = spec.arrow_tgt[a];
    }
    if (!p.arrows.empty()) s = spec.arrow_src[p.arrows.front()];
    spec.src.push_back(s);
    spec.tgt.push_back(t);
  }
  if (j.contains("mult"))
    for (auto const &row : j["mult"]) {
      std::vector<std::pair<int, Scalar>> terms;
      for (auto const &t : row[2])
        terms.push_back({t[0].get<int>(), scalar_from(t[1], spec.chr)});
      spec.mult.emplace(
          std::make_pair(row[0].get<int>(), row[1].get<int>()),
          std::move(terms));
    }
  if (j.contains("certificate_degree"))
    spec.certificate_degree = geti(j, "certificate_degree");
  return spec;
}

std::string module_to_json(FDModule const &m, bool pretty) {
  Json j;
  j["characteristic"] = m.chr;
  j["dim"] = m.dim;
  j["act"] = Json::array();
  for (auto const &mat : m.act) {
    Json rows = Json::array();
    for (auto const &row : mat) {
      Json r = Json::array();
      for (auto const &x : row) r.push_back(x.str());
      rows.push_back(r);
    }
    j["act"].push_back(rows);
  }
  return dump(j, pretty);
}

FDModule module_from_json(std::string const &text) {
  Json j = parse(text);
  FDModule m;
  m.chr = (unsigned)geti(j, "characteristic");
  m.dim = getiv(j, "dim");
  if (!j.contains("act") || !j["act"].is_array())
    throw Error("ParseError", "expected array field: act");
  for (auto const &mat : j["act"]) {
    Mat rows;
    for (auto const &row : mat) {
      Vec r;
      for (auto const &x : row) r.push_back(scalar_from(x, m.chr));
      rows.push_back(std::move(r));
    }
    m.act.push_back(std::move(rows));
  }
  return m;
}

std::string ribbon_to_dot(RibbonQuiver const &rq) {
  static char const *palette[] = {"red",    "blue",   "darkgreen", "orange",
                                  "purple", "brown",  "cadetblue", "magenta",
                                  "gray40", "gold3",  "cyan4",     "salmon3"};
  int np = (int)(sizeof(palette) / sizeof(palette[0]));
  std::vector<int> cycle_of(rq.n_arrows(), 0);
  auto fcycles = rq.f_cycles();
  for (int i = 0; i < (int)fcycles.size(); ++i)
    for (int a : fcycles[i]) cycle_of[a] = i;
  std::string out = "digraph quiver {\n";
  for (int v = 0; v < rq.n_vertices(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + std::to_string(v) +
           "\"];\n";
  for (int a = 0; a < rq.n_arrows(); ++a)
    out += "  v" + std::to_string(rq.src(a)) + " -> v" +
           std::to_string(rq.tgt(a)) + " [label=\"" + std::to_string(a) +
           "\", color=\"" + palette[cycle_of[a] % np] + "\"];\n";
  out += "}\n";
  return out;
}

LoadedQuiver quiver_from_any_json(std::string const &text) {
  Json j = parse(text);
  if (j.contains("triangles")) {
    Triangulation t = triangulation_from_json(text);
    return LoadedQuiver{quiver_from_triangulation(t).quiver, true, t};
  }
  return LoadedQuiver{ribbon_from_json(text), false, {}};
}

} // namespace qf
