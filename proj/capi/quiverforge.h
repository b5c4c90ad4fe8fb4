#ifndef QUIVERFORGE_H
#define QUIVERFORGE_H

#ifdef __cplusplus
extern "C" {
#endif

/* Stable C interface. All functions return an error code; on failure a
 * one-line JSON description of the error is available from qf_last_error().
 * Every char** output parameter receives a heap string owned by the caller;
 * release it with qf_string_free(). Characteristic 0 means the rationals.
 * truncation < 0 selects the built-in default cutoff. */

enum {
  QF_OK = 0,
  QF_ERR_PARSE = 1,    /* malformed input */
  QF_ERR_DOMAIN = 2,   /* precondition or domain violation */
  QF_ERR_VERIFY = 3,   /* a certificate or invariant check failed */
  QF_ERR_INTERNAL = 4  /* unexpected failure */
};

typedef struct qf_quiver qf_quiver;

void qf_string_free(char *s);

/* JSON {"code": ..., "message": ...} for the last error on this thread. */
const char *qf_last_error(void);

/* Accepts a ribbon-quiver document, or any triangulation document (the
 * quiver is then derived); from_tri (optional) reports which was found. */
int qf_quiver_parse(const char *json, int *from_tri, qf_quiver **out);
void qf_quiver_free(qf_quiver *q);
int qf_quiver_to_json(const qf_quiver *q, int pretty, char **out);
int qf_quiver_to_dot(const qf_quiver *q, char **out);

/* Connected triangulation quivers with n vertices, up to isomorphism. */
int qf_enumerate(int n_vertices, int pretty, char **out);

/* Cycle structure, loops, 2-cycles, self-duality, block decomposition and
 * surface recovery where applicable. */
int qf_analyze(const qf_quiver *q, int pretty, char **out);

/* Mutation at a vertex; data_json (optional) is transported along. */
int qf_mutate(const qf_quiver *q, int vertex, const char *data_json,
              unsigned characteristic, int pretty, char **out);

/* Flip of the arc with the given glue index in a triangulation document. */
int qf_flip(const char *triangulation_json, int arc, int pretty, char **out);

/* Relation list for kind "brauer" or "triangulation" in the textual element
 * format. */
int qf_present(const qf_quiver *q, const char *data_json, const char *kind,
               int extended, unsigned characteristic, int truncation,
               int pretty, char **out);

/* Cartan matrix, dimension, rank and determinant from the closed forms. */
int qf_cartan(const qf_quiver *q, const char *data_json, int pretty,
              char **out);

/* Certificate suite: finite-dimensionality with basis and socle identities,
 * Cartan cross-check, symmetrizing form, fourth-syzygy fixity of the
 * simples. Returns QF_OK only when every check passes; the report lists the
 * outcome of each. */
int qf_verify(const qf_quiver *q, const char *data_json,
              unsigned characteristic, int truncation,
              unsigned long long seed, int pretty, char **out);

/* Syzygy-orbit dimension vectors and period of each simple. */
int qf_period(const qf_quiver *q, const char *data_json,
              unsigned characteristic, int truncation, int max_r,
              unsigned long long seed, int pretty, char **out);

/* Known-family constructors; params_json carries the named parameters, e.g.
 * {"k": 2, "s": 3, "a": "1", "c": "1"}. Names: q2b, q3k, aq, bpq, q3a3,
 * brauer_star, bga2cy. */
int qf_family(const char *name, const char *params_json,
              unsigned characteristic, int truncation, int pretty,
              char **out);

#ifdef __cplusplus
}
#endif

#endif
