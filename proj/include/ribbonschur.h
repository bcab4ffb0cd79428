/*
 * C interface to the ribbon Schur library.
 *
 * All computations go through opaque ribbon handles or plain strings;
 * results come back as heap-allocated JSON documents released with
 * rs_string_free. Every call returns a status code; on failure a
 * thread-local message is available from rs_last_error.
 *
 * Encodings: partitions, compositions and overlapping partitions are
 * comma-separated integers ("3,3,2,2,2"); the empty partition is "" or "0".
 */
#ifndef RIBBONSCHUR_H
#define RIBBONSCHUR_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rs_status {
    RS_OK = 0,
    RS_ERR_INVALID = 1,  /* unparsable input or domain violation */
    RS_ERR_VERIFY = 2,   /* a verification scan found a counterexample */
    RS_ERR_INTERNAL = 3  /* an internal invariant failed */
} rs_status;

typedef struct rs_ribbon rs_ribbon;

const char* rs_version(void);
const char* rs_last_error(void);

/* Monotone ribbon from its row partition and overlapping partition. */
rs_status rs_ribbon_from_pair(const char* alpha, const char* overlap, rs_ribbon** out);

/* Ribbon from explicit top-to-bottom row lengths (each at least two).
 * Pass connected != 0 for a connected ribbon, otherwise overlaps must give
 * one 0/1 flag per adjacent row pair ("1,0,1"). */
rs_status rs_ribbon_from_rows(const char* rows, const char* overlaps, int connected,
                              rs_ribbon** out);
void rs_ribbon_free(rs_ribbon* ribbon);

/* Schur expansion of the ribbon: coefficients, interval, full-support flag. */
rs_status rs_expand(const rs_ribbon* ribbon, char** json_out);

/* Positivity of the coefficient at nu; with_companion also builds a
 * companion tableau and its ribbon filling (monotone ribbons only). */
rs_status rs_positive(const rs_ribbon* ribbon, const char* nu, int with_companion,
                      char** json_out);

/* Support and exclusions over the Schur interval (monotone ribbons only). */
rs_status rs_support(const rs_ribbon* ribbon, char** json_out);

/* Witness vectors, slacks and the non-full-support certificate
 * (monotone ribbons only). */
rs_status rs_witness(const rs_ribbon* ribbon, char** json_out);

/* Full-equivalence-class report for a partition with parts >= 2; a positive
 * brute_cap additionally runs the exhaustive rearrangement check for
 * |alpha| <= brute_cap. */
rs_status rs_equivalence(const char* alpha, int brute_cap, char** json_out);

/* Oracle-equivalence scans up to the given caps; threads <= 0 means all
 * cores. Returns RS_ERR_VERIFY when a counterexample is found (the JSON
 * report is still written). */
rs_status rs_verify(int max_size, int max_length, int threads, char** json_out);

void rs_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* RIBBONSCHUR_H */
