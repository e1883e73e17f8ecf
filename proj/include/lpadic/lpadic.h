#ifndef LPADIC_H
#define LPADIC_H

/*
 * C interface to the truncated-expansion engine for the p-adic
 * Mal'cev-Neumann field with F_{p^2} digits.
 *
 * All state lives behind the opaque lp_ctx handle; every query returns a
 * malloc'd JSON string (UTF-8, no trailing newline) to be released with
 * lp_string_free.  On failure the returned string is a JSON object
 * {"error": ..., "message": ...} and *err carries one of the LP_E codes;
 * on success *err is LP_OK.  Rationals are serialized exactly, as "7" for
 * integers and "num/den" otherwise.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lp_ctx lp_ctx;

enum {
    LP_OK = 0,
    LP_EINVAL = 1,     /* malformed request: bad prime, name, id, range */
    LP_EDOMAIN = 2,    /* mathematically undefined for this input */
    LP_EPRECISION = 3, /* truncation too low to decide the question */
    LP_ENOROOT = 4,    /* residue polynomial has no root in F_{p^2} */
    LP_EINTERNAL = 5
};

/* Create an engine context for an odd prime p; nonzero alt_modulus selects
 * the alternative residue-field presentation (for Galois-robustness checks).
 * Returns NULL with *err set if p is not an odd prime. */
lp_ctx* lp_ctx_new(long p, int alt_modulus, int* err);
void lp_ctx_free(lp_ctx* ctx);

/* Verify one registered identity (or, with id == NULL, the whole registry in
 * sorted order).  Always returns a JSON array of report objects
 * {id, p, params?, status, witness[]}; an unknown id sets LP_EINVAL. */
char* lp_verify(lp_ctx* ctx, const char* id, int* err);

/* The registry catalog: JSON array of {id, method, params}. */
char* lp_registry(lp_ctx* ctx, int* err);

/* Named closed-form expansion as JSON.  Arguments with value -1 take their
 * defaults: n = 2 (the level / approximation index), beta = 0,
 * sigma_terms = 3 (tail terms for the concrete "sigma" expansion). */
char* lp_expand(lp_ctx* ctx, const char* name, long n, long beta, long sigma_terms, int* err);

/* Digit-by-digit Newton run on the p^n-th cyclotomic polynomial.  Produces
 * at most `steps` digits; target_trunc is an exact rational string such as
 * "1/2" bounding the slopes, or NULL for no bound.  Returns the full trace
 * {p, modulus, steps[], root, reached, exact}. */
char* lp_newton(lp_ctx* ctx, long n, long steps, const char* target_trunc, int* err);

/* The level-m uniformizer certificate {m, valuation, element}; m >= 2. */
char* lp_uniformizer(lp_ctx* ctx, long m, int* err);

/* Substitute a sigma_terms-term concrete tail into the level-n series and
 * compare against a fresh Newton run at the exact surviving precision.
 * Returns a report object; n >= 2, sigma_terms >= 1. */
char* lp_residual(lp_ctx* ctx, long n, long sigma_terms, int* err);

/* Deterministic internal property sweep; returns LP_OK iff every suite
 * passed.  *log receives a malloc'd per-suite summary (free with
 * lp_string_free); pass NULL to discard. */
int lp_selftest(char** log);

void lp_string_free(char* s);

/* Static description of an LP_E code. */
const char* lp_errstr(int err);

#ifdef __cplusplus
}
#endif

#endif /* LPADIC_H */
