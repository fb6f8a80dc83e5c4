/* Perfect codes for asymmetric limited-magnitude errors: C API.
 *
 * Handles are opaque; every function returns a status code and writes
 * results through out parameters. Returned strings are heap copies owned by
 * the caller; release them with limag_string_free. On any non-OK status,
 * limag_last_error() describes the failure (thread local, valid until the
 * next failing call on the same thread).
 */
#ifndef LIMAG_H
#define LIMAG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define LIMAG_VERSION "1.0.0"

typedef enum limag_status {
  LIMAG_OK = 0,
  LIMAG_ERR_INVALID_ARGUMENT = 1,
  LIMAG_ERR_OVERFLOW = 2,
  LIMAG_ERR_PARSE = 3,
  LIMAG_ERR_CAP_EXCEEDED = 4,
  LIMAG_ERR_INTERNAL = 5
} limag_status;

typedef struct limag_sequence limag_sequence;
typedef struct limag_lattice limag_lattice;

const char* limag_version(void);
/* Active magnitude bound: values must stay below 2^bits in absolute value.
 * Lowered (never raised) by the LIMAG_MAX_BITS environment variable. */
int limag_max_magnitude_bits(void);
const char* limag_last_error(void);
void limag_string_free(char* s);

/* --- sequences ----------------------------------------------------- */

/* Perfect sequence correcting t = n-1 magnitude-ell errors over Z_m,
 * m = (ell+1)^n - ell^n. */
limag_status limag_sequence_construct(int n, int64_t ell, limag_sequence** out);
/* Trivial perfect sequence with t = n over (Z_{ell+1})^n. */
limag_status limag_sequence_cube(int n, int64_t ell, limag_sequence** out);
limag_status limag_sequence_from_json(const char* text, limag_sequence** out);
limag_status limag_sequence_to_json(const limag_sequence* seq, char** out_json);
void limag_sequence_free(limag_sequence* seq);

int limag_sequence_length(const limag_sequence* seq);
int limag_sequence_t(const limag_sequence* seq);
int64_t limag_sequence_ell(const limag_sequence* seq);
/* Replace the claimed correction capability (validated). */
limag_status limag_sequence_set_params(limag_sequence* seq, int t, int64_t ell);

/* verdict_json: {"verdict":"perfect"|"bh"|"not-bh", "witness"?: [[...],[...]]}.
 * verified = 1 when the sequence has distinct sphere sums. */
limag_status limag_sequence_verdict(const limag_sequence* seq, int* verified,
                                    char** verdict_json);

/* Construction diagnostics for given (n, ell):
 * {"n","ell","m","x","x_order","p1","p2","p3"}. */
limag_status limag_construction_properties(int n, int64_t ell, char** out_json);

/* Exhaustive search for a B_t[ell] sequence of length n over the group with
 * the given invariant factors. found = 0 with LIMAG_OK means exhausted
 * without an answer. */
limag_status limag_search_bh(const int64_t* factors, size_t rank, int n, int t,
                             int64_t ell, uint64_t node_cap, int* found,
                             limag_sequence** out);

/* Decimal string of |S(n,t,ell)|. */
limag_status limag_sphere_size(int n, int t, int64_t ell, char** out_decimal);

/* --- lattices ------------------------------------------------------ */

limag_status limag_lattice_from_sequence(const limag_sequence* seq,
                                         limag_lattice** out);
limag_status limag_sequence_from_lattice(const limag_lattice* lat,
                                         limag_sequence** out);
limag_status limag_lattice_from_json(const char* text, limag_lattice** out);
limag_status limag_lattice_to_json(const limag_lattice* lat, char** out_json);
void limag_lattice_free(limag_lattice* lat);

int limag_lattice_n(const limag_lattice* lat);
int limag_lattice_t(const limag_lattice* lat);
int64_t limag_lattice_ell(const limag_lattice* lat);
limag_status limag_lattice_set_params(limag_lattice* lat, int t, int64_t ell);

/* verdict_json: {"verdict":"perfect"|"packing"|"not-packing", "witness"?:...}.
 * verified = 1 when sphere translates along the lattice are disjoint. */
limag_status limag_lattice_verdict(const limag_lattice* lat, int* verified,
                                   char** verdict_json);

/* --- codec ---------------------------------------------------------- */

/* Syndrome-decode one received word against the coset of `offset` in the
 * alphabet {0..sigma-1}. codeword/error must hold n entries. ok = 0 means
 * uncorrectable (not an error status). */
limag_status limag_decode(const limag_sequence* seq, int64_t sigma,
                          const int64_t* offset, const int64_t* received,
                          int* ok, int64_t* codeword, int64_t* error,
                          char** out_json);

/* Channel simulation over the codebook (offset + kernel lattice) in
 * {0..sigma-1}^n: uniform codeword, uniform admissible error, decode.
 * out_json: {"trials","decode_successes","failures","seed","rng"};
 * all_ok = 1 when every trial decoded correctly. */
limag_status limag_simulate(const limag_sequence* seq, int64_t sigma,
                            const int64_t* offset, uint64_t trials,
                            uint64_t seed, int* all_ok, char** out_json);

/* --- existence analysis --------------------------------------------- */

/* CSV table (header n,t,ell,status,witness) over 1 <= n' <= n_max,
 * 1 <= t <= n', 1 <= ell <= ell_max. */
limag_status limag_survey(int n_max, int64_t ell_max, int64_t group_cap,
                          uint64_t node_cap, int debug_search_on_fails,
                          char** out_csv);

/* CSV of the divisibility-condition sweep at ell = 1 for 4 <= n <= n_max;
 * every row must carry necessary-condition-fails. */
limag_status limag_nonexistence_sweep(int n_max, char** out_csv);

/* --- artifact manifests ---------------------------------------------- */

/* is_lattice = 1 when the parsed JSON document is a lattice file (has a
 * "generator" key), 0 when it is a sequence file. */
limag_status limag_document_kind(const char* text, int* is_lattice);

/* Lowercase hex SHA-256 of a byte buffer. */
limag_status limag_sha256(const char* data, size_t len, char** out_hex);

/* Attach {"manifest": {command, parameters, versions, seed?, timestamp,
 * payload_sha256}} to a JSON payload object. parameters_kv holds pairs
 * alternating key, value. seed may be NULL. */
limag_status limag_wrap_with_manifest(const char* payload_json,
                                      const char* command,
                                      const char* const* parameters_kv,
                                      size_t parameter_pairs,
                                      const uint64_t* seed, char** out_json);

/* Manifest alone for a raw (non-JSON) artifact such as a CSV table. */
limag_status limag_manifest_for_bytes(const char* payload, size_t payload_len,
                                      const char* command,
                                      const char* const* parameters_kv,
                                      size_t parameter_pairs,
                                      const uint64_t* seed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* LIMAG_H */
