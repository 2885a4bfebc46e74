#ifndef CIANI_H
#define CIANI_H

/* C interface to the Ciani quartic library: invariants, reconstruction,
 * reduction classification, conductor exponents and prime scans.
 *
 * Every call fills *out with an opaque result handle (on success and on
 * failure alike) and returns a status code. On success the handle carries
 * a JSON document; on failure it carries an error message. Handles must
 * be released with ciani_result_free. All functions are thread safe; the
 * library keeps no global state.
 *
 * Rationals are passed and returned as base-10 strings "num" or "num/den";
 * models are 6 comma-separated rationals A,B,C,a,b,c of the diagonal form
 * A x^4 + B y^4 + C z^4 + a y^2z^2 + b x^2z^2 + c x^2y^2; invariant tuples
 * are 4 comma-separated rationals I3,I3',I3'',I6.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ciani_status {
  CIANI_OK = 0,
  CIANI_ERR_INTERNAL = 1,
  CIANI_ERR_PARSE = 2,
  CIANI_ERR_SINGULAR = 3,
  CIANI_ERR_PRIME = 4,
  CIANI_ERR_SPECIAL = 5
} ciani_status;

typedef struct ciani_result ciani_result;

const char* ciani_version(void);

/* Invariants, derived quantities and the speciality test of a model. */
ciani_status ciani_invariants(const char* model_csv, ciani_result** out);

/* Reconstruction from an invariant tuple: case, resolvent, standard model,
 * model over the field of the invariants, verification summary. */
ciani_status ciani_reconstruct(const char* invariants_csv, ciani_result** out);

/* Reduction type at a prime p > 3. */
ciani_status ciani_classify(const char* invariants_csv, const char* prime, ciani_result** out);

/* Conductor report at a prime p > 3 (non-special tuples only). */
ciani_status ciani_conductor(const char* invariants_csv, const char* prime, ciani_result** out);

/* Scan an explicit comma-separated prime list. */
ciani_status ciani_scan_primes(const char* invariants_csv, const char* primes_csv,
                               ciani_result** out);

/* Scan all candidate primes up to a bound (base-10 integer string). */
ciani_status ciani_scan_bound(const char* invariants_csv, const char* bound, ciani_result** out);

/* JSON document, or NULL when the call failed. Owned by the handle. */
const char* ciani_result_json(const ciani_result* r);

/* Error message, or NULL when the call succeeded. Owned by the handle. */
const char* ciani_result_error(const ciani_result* r);

void ciani_result_free(ciani_result* r);

#ifdef __cplusplus
}
#endif

#endif /* CIANI_H */
