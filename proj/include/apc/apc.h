/*
 * apc - exact finite-difference polynomial calculus on finitely generated
 * abelian groups and semigroups.
 *
 * C interface to the shared library. Objects are opaque handles created from
 * JSON documents and released with the matching *_free call; structured
 * results come back as JSON strings that the caller releases with
 * apc_free_string. All arithmetic is exact (arbitrary-precision Gaussian
 * rationals); rationals travel as canonical strings like "-3/7" or
 * "1/2+5/3 i".
 *
 * Every fallible call returns an apc_status. On failure the thread-local
 * error slot holds a stable code string and a human-readable message
 * (apc_last_error_code / apc_last_error_message); output parameters are
 * untouched.
 */

#ifndef APC_H
#define APC_H

#include <stdint.h>

#if defined(_WIN32) || defined(_WIN64)
#define APC_API __declspec(dllexport)
#else
#define APC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum apc_status {
  APC_OK = 0,
  APC_ERR_MALFORMED_INPUT = 1,
  APC_ERR_INVALID_DESCRIPTOR = 2,
  APC_ERR_DESCRIPTOR_MISMATCH = 3,
  APC_ERR_SEARCH_BOUND_EXCEEDED = 4,
  APC_ERR_MEMBERSHIP_VIOLATION = 5,
  APC_ERR_NO_DECOMPOSITION_AVAILABLE = 6,
  APC_ERR_DECOMPOSITION_MISMATCH = 7,
  APC_ERR_NOT_A_POLYNOMIAL = 8,
  APC_ERR_NOT_HOMOGENEOUS_DEGREE_2 = 9,
  APC_ERR_DEGENERATE_INPUT = 10,
  APC_ERR_DEGREE_VIOLATION = 11,
  APC_ERR_OVERFLOW = 12,
  APC_ERR_INVALID_ARGUMENT = 13,
  APC_ERR_INTERNAL = 14
} apc_status;

typedef struct apc_group apc_group;         /* group descriptor            */
typedef struct apc_semigroup apc_semigroup; /* subsemigroup descriptor     */
typedef struct apc_poly apc_poly;           /* polynomial form             */
typedef struct apc_symmat apc_symmat;       /* rational symmetric matrix   */

APC_API const char* apc_version(void);

/* Thread-local error info for the most recent failing call. */
APC_API const char* apc_last_error_code(void);
APC_API const char* apc_last_error_message(void);

APC_API void apc_free_string(char* s);

/* ---- groups and semigroups ------------------------------------------- */

/* {"free_rank": k, "torsion_orders": [d...], "formal_real_rank": m} */
APC_API apc_status apc_group_parse(const char* json, apc_group** out);
APC_API apc_status apc_group_to_json(const apc_group* g, char** out);
APC_API void apc_group_free(apc_group* g);

/* Elements: {"free": [...], "torsion": [...]} or a bare array of free
 * coordinates. */
APC_API apc_status apc_group_add(const apc_group* g, const char* a, const char* b,
                                 char** out);
APC_API apc_status apc_group_scalar_mul(const apc_group* g, int64_t m, const char* a,
                                        char** out);
APC_API apc_status apc_group_project_mod_h0(const apc_group* g, const char* elem,
                                            char** out);
/* Description of H_0 (the torsion part) as a group document. */
APC_API apc_status apc_group_h0_subgroup(const apc_group* g, char** out);

/* {"kind": "standard_orthant"|"full_group"|"generator_list",
 *  "generators": [element...]} */
APC_API apc_status apc_semigroup_parse(const apc_group* g, const char* json,
                                       apc_semigroup** out);
APC_API apc_status apc_semigroup_to_json(const apc_semigroup* j, char** out);
APC_API void apc_semigroup_free(apc_semigroup* j);

/* *out = 1 or 0. Generator-list membership undecided within the search
 * bound reports APC_ERR_SEARCH_BOUND_EXCEEDED, never a silent 0. */
APC_API apc_status apc_semigroup_contains(const apc_semigroup* j, const char* elem,
                                          int* out);
/* Canonical orthant decomposition t = u - v. */
APC_API apc_status apc_orthant_decompose(const apc_semigroup* j, const char* elem,
                                         char** u_out, char** v_out);

/* ---- polynomials ------------------------------------------------------ */

/* {"basis": "newton"|"monomial", "free_rank": k,
 *  "coeffs": [{"index": [a...], "value": "a/b"}...]} */
APC_API apc_status apc_poly_parse(const char* json, apc_poly** out);
/* Fit a Newton form of degree <= degree to a value table
 * ({"group":..., "values": [...]}); fails with APC_ERR_NOT_A_POLYNOMIAL when
 * the table flunks the difference test. */
APC_API apc_status apc_poly_from_table(const char* table_json, int degree,
                                       apc_poly** out);
APC_API apc_status apc_poly_to_json(const apc_poly* p, const char* basis, char** out);
APC_API void apc_poly_free(apc_poly* p);

APC_API apc_status apc_poly_eval(const apc_poly* p, const char* point, char** value_out);
/* Degree of the form; -1 for the zero polynomial. */
APC_API apc_status apc_poly_degree(const apc_poly* p, int* out);
/* Exact degree-bound test on the form. */
APC_API apc_status apc_poly_degree_test(const apc_poly* p, int n, int* out);
/* Probe-based difference test on a value table; radius <= 0 picks the
 * default n + 2. */
APC_API apc_status apc_table_degree_test(const char* table_json, int n, int radius,
                                         int* out);

/* {"parts": [polynomial...]}, one homogeneous part per degree 0..bound. */
APC_API apc_status apc_poly_homogeneous_parts(const apc_poly* p, char** out);
/* Leading coefficient of p along direction s. */
APC_API apc_status apc_poly_leading_coefficient(const apc_poly* p, const char* direction,
                                                char** value_out);

/* Value at `point` of the unique degree-<= n extension of q (a polynomial
 * known on J) to the whole group. u/v may be NULL when the semigroup
 * supplies a canonical decomposition. */
APC_API apc_status apc_extend_eval_poly(const apc_semigroup* j, const apc_poly* q, int n,
                                        const char* point, const char* u, const char* v,
                                        char** value_out);
APC_API apc_status apc_extend_eval_table(const apc_semigroup* j, const char* table_json,
                                         int n, const char* point, const char* u,
                                         const char* v, char** value_out);

/* {"terms": [{"m":..., "left": polynomial, "right": polynomial}...]} with
 * p(s,t) = sum left(s)*right(t), deg(left) <= m, deg(right) <= n - m. */
APC_API apc_status apc_tensor_split(const apc_poly* p, int k1, int k2, int n, char** out);

/* ---- symmetric forms --------------------------------------------------- */

/* {"dim": n, "entries": ["a/b"... row-major]} */
APC_API apc_status apc_symmat_parse(const char* json, apc_symmat** out);
APC_API apc_status apc_symmat_to_json(const apc_symmat* c, char** out);
APC_API void apc_symmat_free(apc_symmat* c);

/* Exact congruence diagonalization: {"dim", "transform", "diagonal",
 * "signature": {"plus", "minus", "zero"}}. */
APC_API apc_status apc_inertia(const apc_symmat* c, char** out);
/* {"terms": [{"coefficient": "d", "functional": ["a/b"...]}...]} with
 * p(x) = sum d (functional . x)^2. */
APC_API apc_status apc_squares(const apc_symmat* c, char** out);
/* Symmetric matrix of a homogeneous degree-2 form. */
APC_API apc_status apc_riss_form_of(const apc_poly* p, apc_symmat** out);

/* ---- dimension and basis ------------------------------------------------ */

APC_API apc_status apc_dim_pn(const apc_group* g, int n, uint64_t* out);
/* {"basis": [polynomial...]}: monomials of degree <= n in k variables. */
APC_API apc_status apc_monomial_basis(int k, int n, char** out);
/* Rank-N witness that dim P^1 is unbounded on finitely supported integer
 * sequences. */
APC_API apc_status apc_certify_infdim(int n, char** out);
/* Exhaustive binomial/difference identity check up to max_m:
 * {"status": "ok"|"failed", "checked": ..., "failure": ...}. */
APC_API apc_status apc_verify_identities(int max_m, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* APC_H */
