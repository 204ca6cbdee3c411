/* primhom - exact primitive-homology computations for finite covers of
 * graphs: Nielsen orbit search over finite groups, exact character tables,
 * cover homology as a deck-group representation, and the worked-example
 * verifiers.  C API over an opaque-handle C++ core.
 *
 * All ph_run_* functions return a malloc'd JSON report (free with
 * ph_string_free) or NULL on failure; inspect ph_last_status /
 * ph_last_error after a NULL return.  Reports carry an "ok" field for
 * mathematical verdicts; a report with "ok": false is still a successful
 * run (status PH_OK).
 */
#ifndef PRIMHOM_H
#define PRIMHOM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ph_group ph_group;
typedef struct ph_hom ph_hom;
typedef struct ph_table ph_table;
typedef struct ph_preset ph_preset;

enum ph_status {
  PH_OK = 0,
  PH_FAILED_CHECK = 1, /* a mathematical invariant was violated */
  PH_BAD_INPUT = 2,    /* malformed spec / parameters */
  PH_BUDGET = 3,       /* state budget exceeded */
  PH_INTERNAL = 4
};

int ph_last_status(void);
const char* ph_last_error(void);
void ph_string_free(char* s);
const char* ph_version(void);

/* ---- objects -------------------------------------------------------- */

/* group spec: {"kind": "metacyclic"|"metacyclic_ext"|"abelian"|"nilpotent2"|
 *              "permutation"|"table", ...} */
ph_group* ph_group_from_json(const char* json_text);
void ph_group_free(ph_group* g);
int ph_group_order(const ph_group* g);
char* ph_group_to_json(const ph_group* g); /* explicit table form */
char* ph_group_hash(const ph_group* g);    /* canonical hex hash for caching */

/* hom spec: {"group": <spec>, "images": [index-or-label...], "rank": n?} */
ph_hom* ph_hom_from_json(const char* json_text);
void ph_hom_free(ph_hom* h);

ph_table* ph_table_compute(const ph_group* g);
ph_table* ph_table_from_json(const char* json_text); /* validates orthogonality */
void ph_table_free(ph_table* t);
char* ph_table_to_json(const ph_table* t);

ph_preset* ph_preset_from_json(const char* json_text);
ph_preset* ph_preset_torus_two_punctures(void);
void ph_preset_free(ph_preset* p);
char* ph_preset_to_json(const ph_preset* p);

/* ---- operations ------------------------------------------------------ */
/* opts_json (nullable): {"state_budget": N, "word_budget": N,
 *   "track_words": bool, "compute_redundant": bool, "check_induced": bool} */

char* ph_run_prim_images(const ph_hom* h, const char* opts_json);
char* ph_run_kernel_primitive(const ph_hom* h, const char* opts_json);
char* ph_run_irrpr(const ph_hom* h, const ph_table* t_or_null, const char* opts_json);
char* ph_run_chevalley_weil(const ph_hom* h);
char* ph_run_prim_homology(const ph_hom* h, const ph_table* t_or_null, const char* opts_json);
char* ph_run_quotient_check(const ph_hom* h);
char* ph_run_scc_images(const ph_hom* h, const ph_preset* p_or_null, const char* opts_json);
char* ph_run_irrscc(const ph_hom* h, const ph_table* t_or_null, const ph_preset* p_or_null,
                    const char* opts_json);
char* ph_run_torus_example(int p);
char* ph_run_gamma_example(void);
char* ph_run_sphere_search(int max_order, int rank, const char* opts_json);
char* ph_run_frattini_check(const ph_hom* h);

#ifdef __cplusplus
}
#endif

#endif /* PRIMHOM_H */
