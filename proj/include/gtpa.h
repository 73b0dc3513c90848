/* C interface to the group-type planar algebra engine.
 *
 * Every function returns a gtpa_status; on failure gtpa_last_error() holds a
 * message until the next call on the same thread. Strings handed out through
 * char** are owned by the caller and released with gtpa_string_free();
 * elements with gtpa_element_free(); contexts with gtpa_context_close().
 */
#ifndef GTPA_H
#define GTPA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gtpa_status {
  GTPA_OK = 0,
  GTPA_ERR_ARGUMENT = 1, /* structurally invalid call (level, handle, name) */
  GTPA_ERR_PARSE = 2,    /* malformed config, tangle or word text */
  GTPA_ERR_DOMAIN = 3,   /* well-formed but outside the model */
  GTPA_ERR_CHECK = 4,    /* a verification suite found a counterexample */
  GTPA_ERR_INTERNAL = 5  /* engine invariant violated; please report */
} gtpa_status;

typedef struct gtpa_context gtpa_context;
typedef struct gtpa_element gtpa_element;

const char* gtpa_last_error(void);
void gtpa_string_free(char* s);

/* Context: one pair of finite groups with their ambient group, as described
 * by the JSON config schema (see README.md). */
gtpa_status gtpa_context_open(const char* config_json, gtpa_context** out);
gtpa_status gtpa_context_open_file(const char* path, gtpa_context** out);
void gtpa_context_close(gtpa_context* ctx);
gtpa_status gtpa_context_orders(const gtpa_context* ctx, int* h_order, int* k_order);

/* Basis of the level-n space: count and word list. */
gtpa_status gtpa_dim(const gtpa_context* ctx, int n, long long* out);
/* {"level":n,"words":[["e","e"],...]} */
gtpa_status gtpa_basis_json(const gtpa_context* ctx, int n, char** out);

/* Elements. Words are comma-separated element names from the config. */
gtpa_status gtpa_word_element(const gtpa_context* ctx, int n, const char* word,
                              gtpa_element** out);
gtpa_status gtpa_identity_element(const gtpa_context* ctx, int n, gtpa_element** out);
/* Value of the n-th Jones tangle (delta times the Jones projection), at
 * level n+1. */
gtpa_status gtpa_jones_element(const gtpa_context* ctx, int n, gtpa_element** out);

gtpa_status gtpa_mul(const gtpa_context* ctx, const gtpa_element* x,
                     const gtpa_element* y, gtpa_element** out);
gtpa_status gtpa_star(const gtpa_context* ctx, const gtpa_element* x, gtpa_element** out);
gtpa_status gtpa_include(const gtpa_context* ctx, const gtpa_element* x,
                         gtpa_element** out);
gtpa_status gtpa_expect_right(const gtpa_context* ctx, const gtpa_element* x,
                              gtpa_element** out);
gtpa_status gtpa_expect_left(const gtpa_context* ctx, const gtpa_element* x,
                             gtpa_element** out);

gtpa_status gtpa_element_level(const gtpa_element* x, int* out);
/* Exact scalar rendered as "a + b r + c r^2 + d r^3" with rational parts. */
gtpa_status gtpa_trace(const gtpa_context* ctx, const gtpa_element* x, char** out);
gtpa_status gtpa_element_text(const gtpa_context* ctx, const gtpa_element* x, char** out);
/* {"level":n,"terms":[{"coeff":{"c0":"p/q","c1":...,"c2":...,"c3":...},
 *                      "word":["e","g",...]},...]} */
gtpa_status gtpa_element_json(const gtpa_context* ctx, const gtpa_element* x, char** out);
void gtpa_element_free(gtpa_element* x);

/* Matrix of trace inner products over the level-n basis. */
gtpa_status gtpa_gram_json(const gtpa_context* ctx, int n, char** out);

/* Dimensions of the two relative-commutant models for levels 0..max_n. */
gtpa_status gtpa_commutant_dims_json(const gtpa_context* ctx, int max_n, char** out);
/* Named agreement checks between the commutant model and the word model at
 * level n; *pass set to 1 iff all hold. */
gtpa_status gtpa_iso_check_json(const gtpa_context* ctx, int n, char** out, int* pass);

/* Evaluate a tangle given in the text format on named disc inputs. */
gtpa_status gtpa_eval_tangle(const gtpa_context* ctx, const char* tangle_text,
                             const char* const* disc_names, const char* const* disc_words,
                             size_t inputs, gtpa_element** out);

/* Run one verify suite, or "all". JSON report out; *pass as for iso_check. */
gtpa_status gtpa_verify_json(const gtpa_context* ctx, const char* suite, int max_n,
                             unsigned seed, char** out, int* pass);

#ifdef __cplusplus
}
#endif

#endif /* GTPA_H */
