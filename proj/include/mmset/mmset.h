/*
 * mmset - exact finite-geometry engine for the second-row Freudenthal-Tits
 * varieties and their Mazzocca-Melone axiom verification.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed by the library; every fallible call returns an mmset_status
 * and leaves a human-readable message in mmset_last_error() on failure.
 * Strings returned as char* are heap-allocated and must be released with
 * mmset_string_free().
 */
#ifndef MMSET_H
#define MMSET_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mmset_variety mmset_variety;
typedef struct mmset_report mmset_report;

typedef enum mmset_status {
    MMSET_OK = 0,
    MMSET_ERR_CHECK = 1,       /* a verification check failed */
    MMSET_ERR_USAGE = 2,       /* bad arguments or unparseable input */
    MMSET_ERR_UNSUPPORTED = 3, /* valid request outside the supported ranges */
    MMSET_ERR_IO = 4,          /* file system failure */
    MMSET_ERR_INTERNAL = 5
} mmset_status;

const char* mmset_version(void);
const char* mmset_last_error(void);
void mmset_string_free(char* s);

/*
 * Families and parameters:
 *   "veronese"  params {n}     1 <= n <= 3
 *   "segre"     params {k, l}  1 <= k <= l, k + l <= 4
 *   "grassmann" params {m}     2 <= m <= 5
 *   "halfspin"  params {}      q in {2, 3}
 *   "e6"        params {}      q = 2
 * The field is GF(p^k) with p in {2,3,5,7} and p^k <= 9.
 */
mmset_status mmset_build(const char* family, const int* params, int nparams, int p, int k,
                         mmset_variety** out);
mmset_status mmset_load(const char* path, mmset_variety** out);
mmset_status mmset_save(const mmset_variety* v, const char* path);
void mmset_variety_free(mmset_variety* v);

int mmset_variety_q(const mmset_variety* v);
int mmset_variety_d(const mmset_variety* v);
int mmset_variety_ambient_dim(const mmset_variety* v); /* N = projdim of the span */
long long mmset_variety_points(const mmset_variety* v);
long long mmset_variety_lines(const mmset_variety* v); /* -1 when not enumerated */
long long mmset_variety_symps(const mmset_variety* v);
const char* mmset_variety_family(const mmset_variety* v);

typedef struct mmset_verify_options {
    uint64_t seed;
    int seed_given; /* sampling on large sets demands an explicit seed */
    int workers;    /* 0 = available parallelism */
    uint64_t pair_samples;
    uint64_t point_samples;
    uint64_t sympair_samples;
    uint64_t quadrangle_samples;
    uint64_t wrinkle_samples;
    uint64_t exhaustive_point_limit;
    int exhaustive_mm2;
    /* comma-separated subset of
       structure,mm1,mm2,mm3,quadrangle,subspace,lemma1,wrinkles; NULL = default */
    const char* checks;
} mmset_verify_options;

void mmset_verify_options_init(mmset_verify_options* opt);

/* Returns nonzero when the selected checks would sample rather than run
 * exhaustively on this variety (used to enforce explicit seeds). */
int mmset_verify_will_sample(const mmset_variety* v, const mmset_verify_options* opt);

mmset_status mmset_verify(const mmset_variety* v, const mmset_verify_options* opt,
                          mmset_report** out);
int mmset_report_all_pass(const mmset_report* r);
char* mmset_report_json(const mmset_report* r);
char* mmset_report_text(const mmset_report* r);
void mmset_report_free(mmset_report* r);

/* Residue at a point (split type descends by two). On success *out holds the
 * re-coordinatised residue and *summary_json a comparison against the
 * expected family of the classification, when one is known. A degenerate
 * residue (non-proper input) returns MMSET_OK with *out = NULL and the
 * reason in the summary. */
mmset_status mmset_residue(const mmset_variety* v, long long point_index, mmset_variety** out,
                           char** summary_json);

/* Projective-space recognition for split type 4. */
mmset_status mmset_recognize(const mmset_variety* v, char** record_json);

#ifdef __cplusplus
}
#endif

#endif /* MMSET_H */
