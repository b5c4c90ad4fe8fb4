#include "quiverforge.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "quiverforge/json_io.hpp"
#include "quiverforge/modcat.hpp"
#include "quiverforge/surface.hpp"
#include "quiverforge/triquiver.hpp"

using Json = nlohmann::ordered_json;

struct qf_quiver {
  qf::RibbonQuiver rq;
  bool from_triangulation;
  qf::Triangulation tri;
};

namespace {

thread_local std::string g_last_error = "{}";

int set_error(std::string const &code, std::string const &msg) {
  Json j;
  j["code"] = code;
  j["message"] = msg;
  g_last_error = j.dump();
  if (code == "ParseError") return QF_ERR_PARSE;
  if (code == "VerificationFailure" || code == "StabilizationFailure" ||
      code == "Inconclusive" || code == "InconclusiveOverSmallField")
    return QF_ERR_VERIFY;
  if (code == "Internal") return QF_ERR_INTERNAL;
  return QF_ERR_DOMAIN;
}

template <class F> int guard(F &&f) {
  try {
    f();
    return QF_OK;
  } catch (qf::Error const &e) {
    return set_error(e.code(), e.what());
  } catch (std::exception const &e) {
    return set_error("Internal", e.what());
  }
}

char *dup_string(std::string const &s) {
  char *out = (char *)std::malloc(s.size() + 1);
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char **out, Json const &j, int pretty) {
  *out = dup_string(pretty ? j.dump(2) + "\n" : j.dump() + "\n");
}

std::string require(const char *s, const char *what) {
  if (!s) throw qf::Error("ParseError", std::string(what) + " is required");
  return s;
}

Json quiver_json(qf::RibbonQuiver const &rq) {
  return Json::parse(qf::ribbon_to_json(rq));
}

Json plain_quiver_json(qf::Quiver const &q) {
  Json j;
  std::vector<int> verts(q.n_vertices);
  for (int v = 0; v < q.n_vertices; ++v) verts[v] = v;
  j["vertices"] = verts;
  j["arrows"] = Json::array();
  for (int a = 0; a < q.n_arrows(); ++a)
    j["arrows"].push_back({{"id", a}, {"s", q.src[a]}, {"t", q.tgt[a]}});
  return j;
}

qf::GInvariantData parse_data(const char *data_json, unsigned chr) {
  return qf::data_from_json(require(data_json, "data"), chr);
}

// verify/period both attach the triangulation algebra when it is defined and
// the Brauer graph algebra otherwise
qf::RibbonAlgebra attached_algebra(qf::RibbonQuiver const &rq,
                                   qf::GInvariantData data, unsigned chr,
                                   int trunc, std::string &kind) {
  if (qf::is_triangulation(rq) && qf::is_admissible(rq, data.m)) {
    kind = "triangulation";
    return qf::triangulation_presentation(rq, std::move(data), false, chr,
                                          trunc);
  }
  kind = "brauer";
  return qf::brauer_presentation(rq, std::move(data), chr, trunc);
}

Json scalar_json(qf::Scalar const &s) { return Json(s.str()); }

qf::Scalar param_scalar(Json const &params, std::string const &key,
                        unsigned chr) {
  if (!params.contains(key))
    throw qf::Error("ParseError", "missing family parameter: " + key);
  auto const &v = params[key];
  if (v.is_number_integer()) return qf::Scalar(v.get<long>(), chr);
  if (v.is_string()) return qf::Scalar::parse(v.get<std::string>(), chr);
  throw qf::Error("ParseError", "parameter must be an integer or string: " + key);
}

int param_int(Json const &params, std::string const &key) {
  if (!params.contains(key) || !params[key].is_number_integer())
    throw qf::Error("ParseError", "missing integer family parameter: " + key);
  return params[key].get<int>();
}

Json data_json_obj(qf::GInvariantData const &data) {
  return Json::parse(qf::data_to_json(data));
}

Json relations_json(std::vector<qf::TruncatedElement> const &rels) {
  Json out = Json::array();
  for (auto const &r : rels) out.push_back(r.str());
  return out;
}

} // namespace

extern "C" {

void qf_string_free(char *s) { std::free(s); }

const char *qf_last_error(void) { return g_last_error.c_str(); }

int qf_quiver_parse(const char *json, int *from_tri, qf_quiver **out) {
  return guard([&] {
    auto loaded = qf::quiver_from_any_json(require(json, "quiver document"));
    if (from_tri) *from_tri = loaded.from_triangulation ? 1 : 0;
    *out = new qf_quiver{std::move(loaded.quiver), loaded.from_triangulation,
                         std::move(loaded.tri)};
  });
}

void qf_quiver_free(qf_quiver *q) { delete q; }

int qf_quiver_to_json(const qf_quiver *q, int pretty, char **out) {
  return guard([&] { emit(out, quiver_json(q->rq), pretty); });
}

int qf_quiver_to_dot(const qf_quiver *q, char **out) {
  return guard([&] { *out = dup_string(qf::ribbon_to_dot(q->rq)); });
}

int qf_enumerate(int n_vertices, int pretty, char **out) {
  return guard([&] {
    auto quivers = qf::enumerate_triangulation_quivers(n_vertices);
    Json j;
    j["vertices"] = n_vertices;
    j["count"] = quivers.size();
    j["quivers"] = Json::array();
    for (auto const &tq : quivers) j["quivers"].push_back(quiver_json(tq));
    emit(out, j, pretty);
  });
}

int qf_analyze(const qf_quiver *q, int pretty, char **out) {
  return guard([&] {
    auto const &rq = q->rq;
    Json j;
    j["vertices"] = rq.n_vertices();
    j["arrows"] = rq.n_arrows();
    j["connected"] = rq.connected();
    auto cycles_of = [](std::vector<std::vector<int>> const &cs) {
      Json arr = Json::array(), type = Json::array();
      std::vector<int> lens;
      for (auto const &c : cs) {
        arr.push_back(c);
        lens.push_back((int)c.size());
      }
      std::sort(lens.begin(), lens.end());
      for (int l : lens) type.push_back(l);
      return std::make_pair(arr, type);
    };
    auto [fc, ft] = cycles_of(rq.f_cycles());
    auto [gc, gt] = cycles_of(rq.g_cycles());
    j["f_cycles"] = fc;
    j["f_cycle_type"] = ft;
    j["g_cycles"] = gc;
    j["g_cycle_type"] = gt;
    Json loops = Json::array(), twos = Json::array();
    for (int a = 0; a < rq.n_arrows(); ++a) {
      if (rq.src(a) == rq.tgt(a)) loops.push_back(a);
      for (int b = a + 1; b < rq.n_arrows(); ++b)
        if (rq.src(a) != rq.tgt(a) && rq.src(b) == rq.tgt(a) &&
            rq.tgt(b) == rq.src(a))
          twos.push_back({a, b});
    }
    j["loops"] = loops;
    j["two_cycles"] = twos;
    bool tri = qf::is_triangulation(rq);
    j["triangulation"] = tri;
    j["self_dual"] = rq.self_dual();
    if (tri && rq.connected()) {
      try {
        auto bd = qf::block_decompose(rq);
        Json blocks = Json::array();
        for (auto k : bd.blocks)
          blocks.push_back(k == qf::BlockKind::A   ? "A"
                           : k == qf::BlockKind::B ? "B"
                                                   : "C");
        j["blocks"] = blocks;
        j["block_matching"] = bd.matching;
      } catch (qf::Error const &) {
      }
      try {
        j["surface"] = Json::parse(qf::surface_to_json(qf::recover_surface(rq)));
      } catch (qf::Error const &) {
      }
    }
    emit(out, j, pretty);
  });
}

int qf_mutate(const qf_quiver *q, int vertex, const char *data_json,
              unsigned characteristic, int pretty, char **out) {
  return guard([&] {
    std::optional<qf::GInvariantData> data;
    if (data_json) data = parse_data(data_json, characteristic);
    auto res = qf::mutate(q->rq, vertex, data);
    Json j;
    j["vertex"] = vertex;
    j["changed"] = res.changed;
    j["quiver"] = quiver_json(res.quiver);
    if (res.data) j["data"] = data_json_obj(*res.data);
    emit(out, j, pretty);
  });
}

int qf_flip(const char *triangulation_json, int arc, int pretty, char **out) {
  return guard([&] {
    auto t = qf::triangulation_from_json(
        require(triangulation_json, "triangulation"));
    auto flipped = qf::flip(t, arc);
    emit(out, Json::parse(qf::triangulation_to_json(flipped)), pretty);
  });
}

int qf_present(const qf_quiver *q, const char *data_json, const char *kind,
               int extended, unsigned characteristic, int truncation,
               int pretty, char **out) {
  return guard([&] {
    auto data = parse_data(data_json, characteristic);
    std::string k = require(kind, "kind");
    qf::RibbonAlgebra alg =
        k == "brauer"
            ? qf::brauer_presentation(q->rq, std::move(data), characteristic,
                                      truncation)
        : k == "triangulation"
            ? qf::triangulation_presentation(q->rq, std::move(data),
                                             extended != 0, characteristic,
                                             truncation)
            : throw qf::Error("ParseError",
                              "kind must be brauer or triangulation");
    Json j;
    j["kind"] = k;
    j["extended"] = extended != 0;
    j["characteristic"] = characteristic;
    j["truncation"] = alg.trunc;
    j["admissible"] = alg.admissible;
    j["exceptional"] = alg.exceptional;
    j["relations"] = relations_json(alg.relations);
    emit(out, j, pretty);
  });
}

int qf_cartan(const qf_quiver *q, const char *data_json, int pretty,
              char **out) {
  return guard([&] {
    auto data = parse_data(data_json, 0);
    auto cd = qf::cartan_data(q->rq, data);
    emit(out, Json::parse(qf::cartan_to_json(cd)), pretty);
  });
}

int qf_verify(const qf_quiver *q, const char *data_json,
              unsigned characteristic, int truncation,
              unsigned long long seed, int pretty, char **out) {
  int rc = guard([&] {
    auto data = parse_data(data_json, characteristic);
    std::string kind;
    auto alg =
        attached_algebra(q->rq, std::move(data), characteristic, truncation, kind);
    Json j;
    j["kind"] = kind;
    j["characteristic"] = characteristic;
    j["truncation"] = alg.trunc;
    Json checks = Json::array();
    bool all_ok = true;
    auto record = [&](std::string const &name, auto &&body) {
      Json c;
      c["name"] = name;
      try {
        body(c);
        c["ok"] = true;
      } catch (qf::Error const &e) {
        c["ok"] = false;
        c["error"] = Json{{"code", e.code()}, {"message", e.what()}};
        all_ok = false;
      }
      checks.push_back(c);
      return c["ok"].get<bool>();
    };
    std::optional<qf::FDAlgebraSpec> spec;
    record("finite_dimensional", [&](Json &c) {
      spec = qf::verify_finite_dimensional(alg);
      c["dim"] = spec->dim();
      c["certificate_degree"] = spec->certificate_degree;
    });
    if (spec) {
      qf::FDAlgebra A(*spec);
      j["dim"] = spec->dim();
      record("cartan_cross_check", [&](Json &) {
        if (!qf::cartan_cross_check(A))
          throw qf::Error("VerificationFailure",
                          "projective dimensions disagree with the Cartan matrix");
      });
      record("symmetrizing_form", [&](Json &) {
        if (!qf::symmetrizing_form(A, seed))
          throw qf::Error("VerificationFailure", "no symmetrizing form found");
      });
      record("fourth_syzygy_simples", [&](Json &c) {
        Json periods = Json::array();
        for (int v = 0; v < A.n_vertices(); ++v) {
          auto S = qf::simple_module(A, v);
          auto cur = S;
          for (int r = 0; r < 4; ++r) cur = qf::syzygy(A, cur);
          if (!qf::modules_isomorphic(A, S, cur, seed))
            throw qf::Error("VerificationFailure",
                            "fourth syzygy moves the simple at vertex " +
                                std::to_string(v));
          periods.push_back(v);
        }
        c["verified_vertices"] = periods;
      });
    }
    j["checks"] = checks;
    j["ok"] = all_ok;
    emit(out, j, pretty);
    if (!all_ok)
      throw qf::Error("VerificationFailure", "one or more checks failed");
  });
  return rc;
}

int qf_period(const qf_quiver *q, const char *data_json,
              unsigned characteristic, int truncation, int max_r,
              unsigned long long seed, int pretty, char **out) {
  return guard([&] {
    auto data = parse_data(data_json, characteristic);
    std::string kind;
    auto alg =
        attached_algebra(q->rq, std::move(data), characteristic, truncation, kind);
    qf::FDAlgebra A(qf::verify_finite_dimensional(alg));
    Json j;
    j["kind"] = kind;
    j["dim"] = A.dim();
    j["max_r"] = max_r;
    j["simples"] = Json::array();
    for (int v = 0; v < A.n_vertices(); ++v) {
      auto orbit = qf::omega_orbit(A, qf::simple_module(A, v), max_r, seed);
      Json s;
      s["vertex"] = v;
      s["dims"] = orbit.dims;
      if (orbit.period > 0) s["period"] = orbit.period;
      j["simples"].push_back(s);
    }
    emit(out, j, pretty);
  });
}

int qf_family(const char *name, const char *params_json,
              unsigned characteristic, int truncation, int pretty,
              char **out) {
  return guard([&] {
    std::string n = require(name, "family name");
    Json params = Json::parse(require(params_json, "params"), nullptr, false);
    if (params.is_discarded())
      throw qf::Error("ParseError", "malformed params JSON");
    qf::FamilyInstance inst =
        n == "q2b" ? qf::family_q2b(param_int(params, "k"),
                                    param_int(params, "s"),
                                    param_scalar(params, "a", characteristic),
                                    param_scalar(params, "c", characteristic),
                                    characteristic, truncation)
        : n == "q3k" ? qf::family_q3k(param_int(params, "a"),
                                      param_int(params, "b"),
                                      param_int(params, "c"),
                                      param_scalar(params, "d", characteristic),
                                      characteristic, truncation)
        : n == "aq" ? qf::family_aq(param_int(params, "q"),
                                    param_scalar(params, "lambda",
                                                 characteristic),
                                    characteristic, truncation)
        : n == "bpq" ? qf::family_bpq(param_int(params, "p"),
                                      param_int(params, "q"),
                                      param_scalar(params, "lambda",
                                                   characteristic),
                                      characteristic, truncation)
        : n == "q3a3" ? qf::family_q3a3(param_int(params, "k"),
                                        characteristic, truncation)
        : n == "brauer_star" ? qf::family_brauer_star(param_int(params, "n"),
                                                      param_int(params, "m"),
                                                      characteristic,
                                                      truncation)
        : n == "bga2cy" ? qf::family_bga2cy(param_int(params, "which"),
                                            param_int(params, "m"),
                                            characteristic, truncation)
        : throw qf::Error("ParseError", "unknown family: " + n);
    Json j;
    j["name"] = inst.name;
    j["identified"] = inst.identified;
    if (inst.tri) {
      Json t;
      t["quiver"] = quiver_json(*inst.tri->rq);
      t["data"] = data_json_obj(inst.tri->data);
      t["truncation"] = inst.tri->trunc;
      t["admissible"] = inst.tri->admissible;
      t["exceptional"] = inst.tri->exceptional;
      t["relations"] = relations_json(inst.tri->relations);
      j["triangulation"] = t;
    }
    if (inst.printed) {
      Json p;
      p["quiver"] = plain_quiver_json(*inst.printed->quiver);
      p["truncation"] = inst.printed->trunc;
      p["relations"] = relations_json(inst.printed->relations);
      j["printed"] = p;
    }
    emit(out, j, pretty);
  });
}

} // extern "C"
