/* pgrank: point-hyperplane incidence matrices of finite quadratic spaces,
 * their isotropy block partitions, and GF(2) ranks.
 *
 * All functions return a pgr_status; out-parameters are written only on
 * PGR_OK. On failure pgr_last_error() gives a thread-local message. Handles
 * are freed with the matching *_destroy; strings returned through char**
 * with pgr_string_free.
 */
#ifndef PGRANK_H
#define PGRANK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pgr_status {
    PGR_OK = 0,
    PGR_ERR_ARG = 1,      /* invalid parameter or domain error */
    PGR_ERR_LIMIT = 2,    /* configured size bound exceeded */
    PGR_ERR_IO = 3,       /* file could not be read or written */
    PGR_ERR_FORMAT = 4,   /* malformed serialized input */
    PGR_ERR_INTERNAL = 5, /* unexpected condition */
} pgr_status;

typedef enum pgr_square_class {
    PGR_CLASS_SQUARE = 0,
    PGR_CLASS_NONSQUARE = 1,
} pgr_square_class;

typedef enum pgr_form {
    PGR_FORM_DIAGONAL = 0,
    PGR_FORM_CONIC = 1,
} pgr_form;

typedef enum pgr_point_class {
    PGR_POINT_ISOTROPIC = 0,
    PGR_POINT_SQUARE = 1,
    PGR_POINT_NONSQUARE = 2,
} pgr_point_class;

typedef enum pgr_block {
    PGR_BLOCK_FULL = 0,
    PGR_BLOCK_A11, PGR_BLOCK_A12, PGR_BLOCK_A21, PGR_BLOCK_A22,
    PGR_BLOCK_B11, PGR_BLOCK_B12, PGR_BLOCK_B13,
    PGR_BLOCK_B21, PGR_BLOCK_B22, PGR_BLOCK_B23,
    PGR_BLOCK_B31, PGR_BLOCK_B32, PGR_BLOCK_B33,
} pgr_block;

typedef struct pgr_field pgr_field;
typedef struct pgr_space pgr_space;
typedef struct pgr_matrix pgr_matrix;
typedef struct pgr_report pgr_report;

const char* pgr_version(void);
/* Message from the last failing call on this thread; empty if none. */
const char* pgr_last_error(void);
void pgr_string_free(char* s);

/* ---- finite fields -------------------------------------------------- */

/* GF(p^k), p an odd prime. Elements are indices in [0, q): the index digits
 * in base p are the polynomial-basis coefficients, constant term least
 * significant. The modulus is the first monic irreducible of degree k in
 * coefficient-tuple order (constant term compared first). */
pgr_status pgr_field_create(uint32_t p, uint32_t k, pgr_field** out);
/* Same, with q = p^k factored automatically. */
pgr_status pgr_field_create_q(uint64_t q, pgr_field** out);
void pgr_field_destroy(pgr_field* f);

pgr_status pgr_field_order(const pgr_field* f, uint32_t* q);
pgr_status pgr_field_characteristic(const pgr_field* f, uint32_t* p);
pgr_status pgr_field_degree(const pgr_field* f, uint32_t* k);
/* Human-readable modulus, e.g. "x^2 + 1". */
pgr_status pgr_field_modulus(const pgr_field* f, char** out);

pgr_status pgr_field_add(const pgr_field* f, uint32_t a, uint32_t b, uint32_t* out);
pgr_status pgr_field_sub(const pgr_field* f, uint32_t a, uint32_t b, uint32_t* out);
pgr_status pgr_field_mul(const pgr_field* f, uint32_t a, uint32_t b, uint32_t* out);
pgr_status pgr_field_neg(const pgr_field* f, uint32_t a, uint32_t* out);
pgr_status pgr_field_inv(const pgr_field* f, uint32_t a, uint32_t* out);
pgr_status pgr_field_pow(const pgr_field* f, uint32_t a, uint64_t e, uint32_t* out);
/* Fails on a = 0: zero is neither square nor nonsquare. */
pgr_status pgr_field_is_square(const pgr_field* f, uint32_t a, int* out);
/* Canonical scalar of the class: 1, or the first nonsquare in index order. */
pgr_status pgr_field_alpha(const pgr_field* f, pgr_square_class cls, uint32_t* out);
pgr_status pgr_field_primitive(const pgr_field* f, uint32_t* out);
/* Index of the element with the given coefficients (len <= k, each < p). */
pgr_status pgr_field_element_from_coeffs(const pgr_field* f, const uint32_t* coeffs,
                                         size_t len, uint32_t* out);

/* ---- quadratic spaces over PG(n,q) ---------------------------------- */

/* Builds the space and enumerates all normalized points (first nonzero
 * coordinate 1) in lexicographic order, classifying each as isotropic,
 * square or nonsquare by the value of the form. max_points bounds the
 * point-table size (0 means the default of 2000000). */
pgr_status pgr_space_create(const pgr_field* f, uint32_t n, uint32_t alpha, pgr_form form,
                            uint64_t max_points, pgr_space** out);
void pgr_space_destroy(pgr_space* s);

pgr_status pgr_space_point_count(const pgr_space* s, uint64_t* out);
/* counts[0] isotropic, counts[1] square, counts[2] nonsquare. */
pgr_status pgr_space_class_counts(const pgr_space* s, uint64_t counts[3]);
/* Writes the n+1 coordinates of point i into coords and its class. */
pgr_status pgr_space_point(const pgr_space* s, uint64_t i, uint32_t* coords, size_t coords_len,
                           pgr_point_class* cls);
pgr_status pgr_space_form_value(const pgr_space* s, const uint32_t* coords, size_t len,
                                uint32_t* out);
pgr_status pgr_space_bilinear(const pgr_space* s, const uint32_t* x, const uint32_t* y,
                              size_t len, uint32_t* out);

/* Incidence matrix entry(i,j) = 1 iff <P_i,P_j> = 0, or one of its class
 * blocks: A-blocks split anisotropic/isotropic, B-blocks split
 * square/nonsquare/isotropic, classes keep global point order. max_points
 * bounds the full matrix dimension (0 means the default of 100000). */
pgr_status pgr_space_matrix(const pgr_space* s, pgr_block block, uint64_t max_points,
                            pgr_matrix** out);

/* ---- GF(2) matrices -------------------------------------------------- */

pgr_status pgr_matrix_identity(uint64_t n, pgr_matrix** out);
pgr_status pgr_matrix_ones(uint64_t rows, uint64_t cols, pgr_matrix** out);
pgr_status pgr_matrix_zero(uint64_t rows, uint64_t cols, pgr_matrix** out);
pgr_status pgr_matrix_random(uint64_t rows, uint64_t cols, uint64_t seed, pgr_matrix** out);
void pgr_matrix_destroy(pgr_matrix* m);

pgr_status pgr_matrix_rows(const pgr_matrix* m, uint64_t* out);
pgr_status pgr_matrix_cols(const pgr_matrix* m, uint64_t* out);
pgr_status pgr_matrix_get(const pgr_matrix* m, uint64_t r, uint64_t c, int* out);
pgr_status pgr_matrix_rank(const pgr_matrix* m, uint64_t* out);
pgr_status pgr_matrix_multiply(const pgr_matrix* a, const pgr_matrix* b, pgr_matrix** out);
/* Entrywise XOR. */
pgr_status pgr_matrix_add(const pgr_matrix* a, const pgr_matrix* b, pgr_matrix** out);
pgr_status pgr_matrix_power(const pgr_matrix* m, uint64_t e, pgr_matrix** out);
pgr_status pgr_matrix_transpose(const pgr_matrix* m, pgr_matrix** out);
pgr_status pgr_matrix_equal(const pgr_matrix* a, const pgr_matrix* b, int* out);

/* gf2txt: "gf2 <rows> <cols>\n" then one '0'/'1' line per row. */
pgr_status pgr_matrix_to_gf2txt(const pgr_matrix* m, char** out);
pgr_status pgr_matrix_from_gf2txt(const char* text, pgr_matrix** out);
/* File variants; save writes a temp file and renames it into place. */
pgr_status pgr_matrix_save(const pgr_matrix* m, const char* path);
pgr_status pgr_matrix_load(const char* path, pgr_matrix** out);

/* ---- verification ---------------------------------------------------- */

/* Runs a suite ("all", "proven" or "conjecture") over dimensions 1..nmax and
 * the given field orders. strict promotes recorded conjecture mismatches to
 * failures. max_points 0 keeps the default bound. */
pgr_status pgr_verify(const char* suite, const uint32_t* qs, size_t qs_len, uint32_t nmax,
                      int strict, uint64_t max_points, pgr_report** out);
void pgr_report_destroy(pgr_report* r);

pgr_status pgr_report_counts(const pgr_report* r, uint64_t* pass, uint64_t* fail,
                             uint64_t* recorded);
pgr_status pgr_report_to_json(const pgr_report* r, int include_meta, char** out);
pgr_status pgr_report_to_text(const pgr_report* r, char** out);

/* ---- benchmark -------------------------------------------------------- */

/* Best-of-reps wall time of rank() on a random size x size matrix; also
 * reports the rank it found. */
pgr_status pgr_bench_rank(uint64_t size, uint64_t seed, uint32_t reps, double* seconds,
                          uint64_t* rank);

#ifdef __cplusplus
}
#endif

#endif /* PGRANK_H */
