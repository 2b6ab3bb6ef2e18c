/* C interface to the pforge exact Lie algebra toolkit.
 *
 * Objects are opaque handles released with their *_free function. Every
 * function returns a pf_status; on failure pf_last_error() and
 * pf_last_error_witness() describe the problem for the calling thread.
 * Reports are UTF-8 JSON strings owned by the caller (release with
 * pf_string_free). Report functions also set *positive to 1 when the
 * report's verdict is positive and 0 otherwise.
 */
#ifndef PFORGE_PFORGE_H
#define PFORGE_PFORGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(PFORGE_BUILDING)
#define PF_API __attribute__((visibility("default")))
#else
#define PF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pf_status {
  PF_OK = 0,
  PF_ERR_INVALID_ARGUMENT = 1,
  PF_ERR_PARSE = 2,
  PF_ERR_DIMENSION_MISMATCH = 3,
  PF_ERR_NOT_A_SUBALGEBRA = 4,
  PF_ERR_TORSION_NONZERO = 5,
  PF_ERR_IRRATIONAL_SPECTRUM = 6,
  PF_ERR_SINGULAR = 7,
  PF_ERR_NOT_DIAGONALIZABLE = 8,
  PF_ERR_NOT_A_REPRESENTATION = 9,
  PF_ERR_NOT_DIRECT_SUM = 10,
  PF_ERR_INVALID_STRUCTURE_CONSTANTS = 11,
  PF_ERR_JACOBI_FAILURE = 12,
  PF_ERR_DUPLICATE_EIGENVALUE = 13,
  PF_ERR_PAIRWISE_SUM_NOT_SUBALGEBRA = 14,
  PF_ERR_NOT_A_CASIMIR = 15,
  PF_ERR_ZERO_PARAMETER = 16,
  PF_ERR_UNKNOWN_NAME = 17,
  PF_ERR_STABILIZER_NOT_CLOSED = 18,
  PF_ERR_INTERNAL = 19
} pf_status;

typedef struct pf_algebra pf_algebra;
typedef struct pf_operator pf_operator;
typedef struct pf_pencil pf_pencil;
typedef struct pf_family pf_family;

typedef struct pf_config {
  uint64_t seed;
  uint32_t samples;
  uint64_t coord_bound;
  uint32_t search_budget;
} pf_config;

/* seed 42, samples 64, coord_bound 1000, search_budget 64 */
PF_API pf_config pf_config_default(void);

PF_API const char* pf_status_name(pf_status status);
PF_API const char* pf_last_error(void);
/* JSON witness of the last error ("null" when there is none). */
PF_API const char* pf_last_error_witness(void);
PF_API void pf_string_free(char* s);

/* Algebras: JSON {"dim", "labels", "brackets"}. Parsing does not require Jacobi. */
PF_API pf_status pf_algebra_from_json(const char* json, pf_algebra** out);
PF_API pf_status pf_algebra_to_json(const pf_algebra* a, char** out);
PF_API pf_status pf_algebra_dim(const pf_algebra* a, size_t* out);
PF_API void pf_algebra_free(pf_algebra* a);

/* Operators: JSON {"dim", "matrix"}; the dimension must match `a`. */
PF_API pf_status pf_operator_from_json(const char* json, const pf_algebra* a, pf_operator** out);
PF_API pf_status pf_operator_to_json(const pf_operator* op, char** out);
PF_API void pf_operator_free(pf_operator* op);

/* Pencils: JSON {"c1", "c2", "exceptional", "origin"} or built from a Nijenhuis operator. */
PF_API pf_status pf_pencil_from_json(const char* json, pf_pencil** out);
PF_API pf_status pf_pencil_from_operator(const pf_algebra* a, const pf_operator* op, pf_pencil** out);
PF_API pf_status pf_pencil_to_json(const pf_pencil* p, char** out);
PF_API void pf_pencil_free(pf_pencil* p);

/* Families: JSON {"provenance", "nvars", "members"}. */
PF_API pf_status pf_family_from_json(const char* json, pf_family** out);
PF_API pf_status pf_family_to_json(const pf_family* f, char** out);
PF_API void pf_family_free(pf_family* f);

/* kind: manakov | resolvent | borel | casimir. params JSON keys: n, A, max_l,
 * beyond_degree. casimir uses `a`, `op` and the members of `casimirs`. */
PF_API pf_status pf_family_build(const char* kind, const char* params_json, const pf_algebra* a,
                                 const pf_operator* op, const pf_family* casimirs, pf_family** out);

/* Catalog. Any of the out pointers may be NULL; absent parts are set to NULL. */
PF_API pf_status pf_catalog_list(char** out_json);
PF_API pf_status pf_catalog_build(const char* name, const char* params_json, pf_algebra** alg, pf_operator** op,
                                  pf_pencil** pencil, char** entry_json);

/* Reports. `op` may be NULL for pf_validate. */
PF_API pf_status pf_validate(const pf_algebra* a, const pf_operator* op, char** report, int* positive);
PF_API pf_status pf_pencil_report(const pf_pencil* p, char** report, int* positive);
PF_API pf_status pf_index(const pf_algebra* a, const pf_config* cfg, char** report, int* positive);
PF_API pf_status pf_kronecker(const pf_pencil* p, const pf_config* cfg, char** report, int* positive);
PF_API pf_status pf_corollary(const pf_algebra* a, const pf_operator* op, const pf_config* cfg, char** report,
                              int* positive);
PF_API pf_status pf_criterion(const pf_algebra* a, const pf_operator* op, const pf_config* cfg, char** report,
                              int* positive);
PF_API pf_status pf_involution(const pf_family* f, const pf_pencil* p, char** report, int* positive);
/* params JSON: {"n", "A"}; builds the gl_n pencil of left multiplication by A. */
PF_API pf_status pf_lenard(const char* params_json, char** report, int* positive);
PF_API pf_status pf_completeness(const pf_family* f, const pf_pencil* p, const pf_config* cfg, char** report,
                                 int* positive);
PF_API pf_status pf_equivalence(const pf_family* f1, const pf_family* f2, const pf_config* cfg, char** report,
                                int* positive);
/* representation JSON: {"dim", "matrices"} acting on V. */
PF_API pf_status pf_rais(const pf_algebra* h, const char* representation_json, const pf_config* cfg, char** report,
                         int* positive);

#ifdef __cplusplus
}
#endif

#endif
