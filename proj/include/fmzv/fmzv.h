#ifndef FMZV_H
#define FMZV_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define FMZV_API __attribute__((visibility("default")))
#else
#define FMZV_API
#endif

typedef enum {
    FMZV_OK = 0,
    FMZV_ERR_PARSE = 1,
    FMZV_ERR_INVALID_ARGUMENT = 2,
    FMZV_ERR_DIMENSION = 3,
    FMZV_ERR_NULL = 4,
    FMZV_ERR_INTERNAL = 5
} fmzv_status;

typedef enum { FMZV_ALPHABET_X = 0, FMZV_ALPHABET_Y = 1, FMZV_ALPHABET_S = 2 } fmzv_alphabet;

typedef enum { FMZV_PRODUCT_SHUFFLE = 0, FMZV_PRODUCT_STUFFLE = 1, FMZV_PRODUCT_CONCAT = 2 } fmzv_product_op;

typedef enum { FMZV_COPRODUCT_GON = 0, FMZV_COPRODUCT_DEC = 1, FMZV_COPRODUCT_DUAL_STUFFLE = 2 } fmzv_coproduct_op;

typedef enum { FMZV_DERIVATION_D = 0, FMZV_DERIVATION_PARTIAL = 1 } fmzv_derivation_mode;

typedef struct fmzv_poly fmzv_poly;
typedef struct fmzv_tensor fmzv_tensor;
typedef struct fmzv_matrix fmzv_matrix;
typedef struct fmzv_polylist fmzv_polylist;

/* Message of the last failed call on this thread; empty after success. */
FMZV_API const char* fmzv_last_error(void);
FMZV_API const char* fmzv_version(void);
/* Frees every char* returned through an out parameter. */
FMZV_API void fmzv_string_free(char* s);

/* Polynomials */
FMZV_API fmzv_status fmzv_poly_parse(fmzv_alphabet a, const char* text, fmzv_poly** out);
FMZV_API fmzv_status fmzv_poly_from_json(const char* json, fmzv_poly** out);
FMZV_API fmzv_status fmzv_poly_clone(const fmzv_poly* p, fmzv_poly** out);
FMZV_API void fmzv_poly_free(fmzv_poly* p);
FMZV_API fmzv_status fmzv_poly_format(const fmzv_poly* p, char** out);
FMZV_API fmzv_status fmzv_poly_to_json(const fmzv_poly* p, char** out);
FMZV_API fmzv_status fmzv_poly_is_zero(const fmzv_poly* p, int* out);
FMZV_API fmzv_status fmzv_poly_equal(const fmzv_poly* a, const fmzv_poly* b, int* out);

/* Tensors */
FMZV_API void fmzv_tensor_free(fmzv_tensor* t);
FMZV_API fmzv_status fmzv_tensor_format(const fmzv_tensor* t, char** out);
FMZV_API fmzv_status fmzv_tensor_to_json(const fmzv_tensor* t, char** out);
FMZV_API fmzv_status fmzv_tensor_is_zero(const fmzv_tensor* t, int* out);

/* Lists */
FMZV_API void fmzv_polylist_free(fmzv_polylist* l);
FMZV_API fmzv_status fmzv_polylist_size(const fmzv_polylist* l, size_t* out);
FMZV_API fmzv_status fmzv_polylist_get(const fmzv_polylist* l, size_t i, fmzv_poly** out);

/* Word algebra */
FMZV_API fmzv_status fmzv_product(fmzv_product_op op, const fmzv_poly* a, const fmzv_poly* b, fmzv_poly** out);
/* GON needs X; DUAL_STUFFLE needs Y; DEC works on any alphabet. */
FMZV_API fmzv_status fmzv_coproduct(fmzv_coproduct_op op, const fmzv_poly* p, fmzv_tensor** out);
FMZV_API fmzv_status fmzv_pi_indec(const fmzv_poly* p, int n, fmzv_poly** out);

/* Ihara post-Lie structure, alphabet X */
FMZV_API fmzv_status fmzv_ihara_bracket(const fmzv_poly* f, const fmzv_poly* g, fmzv_poly** out);
FMZV_API fmzv_status fmzv_grossman_larson(const fmzv_poly* a, const fmzv_poly* b, fmzv_poly** out);
FMZV_API fmzv_status fmzv_gl_antipode(const fmzv_poly* a, int max_weight, fmzv_poly** out);

/* Goncharov derivations, alphabet X */
FMZV_API fmzv_status fmzv_derivation(fmzv_derivation_mode mode, const fmzv_poly* p, int r, fmzv_tensor** out);

/* Level matrices */
FMZV_API fmzv_status fmzv_level_matrix(int n, int level, fmzv_matrix** out);
FMZV_API void fmzv_matrix_free(fmzv_matrix* m);
FMZV_API fmzv_status fmzv_matrix_shape(const fmzv_matrix* m, size_t* rows, size_t* cols);
FMZV_API fmzv_status fmzv_matrix_entry(const fmzv_matrix* m, size_t i, size_t j, char** out);
FMZV_API fmzv_status fmzv_matrix_to_csv(const fmzv_matrix* m, char** out);
FMZV_API fmzv_status fmzv_matrix_to_json(const fmzv_matrix* m, char** out);
FMZV_API fmzv_status fmzv_matrix_det(const fmzv_matrix* m, char** out);
FMZV_API fmzv_status fmzv_matrix_two_adic(const fmzv_matrix* m, int* out);
/* Row and column labels such as "(3,2,2,2)", newline separated. */
FMZV_API fmzv_status fmzv_level_labels(int n, int level, char** basis, char** codomain);
FMZV_API fmzv_status fmzv_c_coeff(int a, int b, int r, char** out);

/* Double shuffle */
FMZV_API fmzv_status fmzv_dm_basis(int weight, fmzv_polylist** out);
FMZV_API fmzv_status fmzv_check_dm(const fmzv_poly* psi, int* out);
FMZV_API fmzv_status fmzv_zf_dim(int n, int* out);
FMZV_API fmzv_status fmzv_zf_reduce(const fmzv_poly* p, int n, fmzv_poly** out);

/* Odd model, alphabet S with s2 letters trailing */
FMZV_API fmzv_status fmzv_uf_basis(int n, fmzv_polylist** out);
FMZV_API fmzv_status fmzv_uf_dim(int n, long long* out);
FMZV_API fmzv_status fmzv_uf_kernel(int n, fmzv_polylist** out);
FMZV_API fmzv_status fmzv_uf_dec(const fmzv_poly* e, fmzv_tensor** out);
FMZV_API fmzv_status fmzv_uf_derivation(const fmzv_poly* e, int r, fmzv_tensor** out);

/* Verification suites: zagier, euler, level-one, c-lemma, binomial.
   report gets one "PASS name" or "FAIL name" line per check. */
FMZV_API fmzv_status fmzv_verify(const char* suite, int eds_max_weight, int matrix_max_n, int* passed, char** report);

#ifdef __cplusplus
}
#endif

#endif
