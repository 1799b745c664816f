#ifndef TROP_TROP_H
#define TROP_TROP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TROP_API __declspec(dllexport)
#else
#define TROP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum trop_status {
    TROP_OK = 0,
    TROP_E_ARGUMENT = 1,  /* invalid argument, index or letter */
    TROP_E_PARSE = 2,     /* malformed word, matrix or JSON text */
    TROP_E_RANGE = 3,     /* integer overflow in tropical arithmetic */
    TROP_E_DIMENSION = 4, /* operands of different sizes */
    TROP_E_BUFFER = 5,    /* output buffer too small; *needed holds the size */
    TROP_E_INTERNAL = 6
} trop_status;

/* Name of a status code, e.g. "TROP_E_PARSE". */
TROP_API const char* trop_status_name(trop_status s);
/* Message of the last failed call on this thread ("" if none). */
TROP_API const char* trop_last_error(void);

/*
 * Text outputs use caller buffers: on success the NUL-terminated text is in
 * buf and *needed is its size including the NUL; if cap is too small the call
 * returns TROP_E_BUFFER and only sets *needed. buf may be NULL when cap is 0.
 */

typedef struct trop_word trop_word;
typedef struct trop_matrix trop_matrix;
typedef struct trop_tableau trop_tableau;

/* ---- words over the letters 1..n ---- */

/* Letters a..z, or dot-separated integers ("3.1.2"); "" is the empty word. */
TROP_API trop_status trop_word_parse(size_t n, const char* text, trop_word** out);
TROP_API trop_status trop_word_from_letters(size_t n, const uint16_t* letters, size_t len, trop_word** out);
TROP_API void trop_word_free(trop_word* w);
TROP_API size_t trop_word_length(const trop_word* w);
TROP_API size_t trop_word_alphabet(const trop_word* w);
TROP_API trop_status trop_word_format(const trop_word* w, char* buf, size_t cap, size_t* needed);
TROP_API trop_status trop_word_reverse(const trop_word* w, trop_word** out);
TROP_API trop_status trop_word_co_mirror(const trop_word* w, trop_word** out);

/* ---- matrices ---- */

typedef enum trop_rep_kind {
    TROP_REP_MHO = 0,      /* product of the generators along the word */
    TROP_REP_MHO_FAST = 1, /* same value, divide and conquer */
    TROP_REP_OMEGA = 2,    /* product of the co-generators */
    TROP_REP_SUBWORDS = 3, /* longest nondecreasing subwords by dynamic programming */
    TROP_REP_WP_FWD = 4,   /* forward matrix of the configuration tableau (kappa = 1) */
    TROP_REP_WP_CO = 5     /* co-matrix of the configuration tableau (kappa = 1) */
} trop_rep_kind;

TROP_API trop_status trop_represent(const trop_word* w, int64_t kappa, trop_rep_kind kind, trop_matrix** out);
/* Whitespace text ("-inf" for bottom) or {"n": n, "rows": [[...]]} with null for bottom. */
TROP_API trop_status trop_matrix_parse(const char* text, trop_matrix** out);
TROP_API void trop_matrix_free(trop_matrix* m);
TROP_API size_t trop_matrix_dim(const trop_matrix* m);
/* 1-based indices; *is_bottom is set to 1 for the tropical zero. */
TROP_API trop_status trop_matrix_entry(const trop_matrix* m, size_t i, size_t j, int* is_bottom, int64_t* value);
TROP_API int trop_matrix_equal(const trop_matrix* a, const trop_matrix* b);
TROP_API trop_status trop_matrix_multiply(const trop_matrix* a, const trop_matrix* b, trop_matrix** out);
TROP_API trop_status trop_matrix_format(const trop_matrix* m, int json, char* buf, size_t cap, size_t* needed);

/* ---- tableaux ---- */

/* Young tableau of the word together with its configuration tableau. */
TROP_API trop_status trop_tableau_of_word(const trop_word* w, trop_tableau** out);
TROP_API void trop_tableau_free(trop_tableau* t);
TROP_API trop_status trop_tableau_format(const trop_tableau* t, int json, char* buf, size_t cap, size_t* needed);
TROP_API trop_status trop_ctab_format(const trop_tableau* t, int json, char* buf, size_t cap, size_t* needed);
/* Row lengths, bottom row first; *count receives the number of rows. */
TROP_API trop_status trop_tableau_shape(const trop_tableau* t, size_t* parts, size_t cap, size_t* count);
/* Reading word (top row first). */
TROP_API trop_status trop_tableau_reading_word(const trop_tableau* t, trop_word** out);

/* ---- equivalences ---- */

typedef enum trop_equiv_kind {
    TROP_EQUIV_PLACTIC = 0,  /* equal tableaux */
    TROP_EQUIV_CLOAKTIC = 1, /* equal forward products */
    TROP_EQUIV_COCLOAKTIC = 2 /* equal co-products */
} trop_equiv_kind;

TROP_API trop_status trop_equiv(trop_equiv_kind kind, const trop_word* u, const trop_word* v, int* result);

/* ---- identities ---- */

typedef enum trop_monoid {
    TROP_MONOID_TMAT3 = 0,   /* 3x3 upper triangular tropical matrices */
    TROP_MONOID_PLACTIC3 = 1 /* plactic monoid on 3 letters */
} trop_monoid;

typedef struct trop_report {
    uint64_t cases;
    uint64_t violations;
} trop_report;

/* The catalogued identity for (p, n) printed as "lhs = rhs" over x, y. */
TROP_API trop_status trop_identity_format(size_t p, size_t n, char* buf, size_t cap, size_t* needed);
/* Random evaluation at x = uv, y = vu. detail may be NULL (only *needed is set). */
TROP_API trop_status trop_identity_check(size_t p, size_t n, trop_monoid monoid, uint64_t samples, uint64_t seed,
                                         trop_report* report, char* detail, size_t cap, size_t* needed);

/* ---- exhaustive property sweeps ---- */

TROP_API size_t trop_check_count(void);
TROP_API const char* trop_check_key(size_t index);
TROP_API const char* trop_check_description(size_t index);
/* detail receives the first counterexample (or ""); it may be NULL (only *needed is set). */
TROP_API trop_status trop_check_run(const char* key, size_t n, size_t maxlen, trop_report* report, char* detail,
                                    size_t cap, size_t* needed);

/* ---- benchmark ---- */

typedef struct trop_bench_row {
    size_t length;
    double fast_seconds;
    double fold_seconds;
    int equal;
} trop_bench_row;

/* rows must hold count entries. */
TROP_API trop_status trop_bench(size_t n, const size_t* lengths, size_t count, uint64_t seed, trop_bench_row* rows);

#ifdef __cplusplus
}
#endif

#endif
