#ifndef FLATCAUSAL_H
#define FLATCAUSAL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FcEquivalence {
  FC_EQUIVALENCE_YES = 0,
  FC_EQUIVALENCE_NO = 1,
  FC_EQUIVALENCE_UNKNOWN = 2,
} FcEquivalence;

typedef enum FcStatus {
  FC_STATUS_OK = 0,
  FC_STATUS_NULL_POINTER = 1,
  FC_STATUS_PANIC = 2,
  FC_STATUS_INVALID_INPUT = 3,
  FC_STATUS_DIMENSION_MISMATCH = 4,
  FC_STATUS_NOT_SYMMETRIC = 5,
  FC_STATUS_NOT_POSITIVE_DEFINITE = 6,
  FC_STATUS_NOT_PSD = 7,
  FC_STATUS_CONVERGENCE_FAILURE = 8,
  FC_STATUS_FREENESS_VIOLATED = 9,
  FC_STATUS_SIGNATURE_INCONSISTENT = 10,
  FC_STATUS_RANK_DEFICIENT_R = 11,
  FC_STATUS_SINGULAR_LATTICE = 12,
  FC_STATUS_ZERO_PARAMETER = 13,
  FC_STATUS_NOT_DEGENERATE = 14,
  FC_STATUS_INVALID_CHARACTERISTIC = 15,
  FC_STATUS_NOT_CHARACTERISTIC = 16,
  FC_STATUS_DEGENERATE_K = 17,
  FC_STATUS_BAD_CERTIFICATE = 18,
  FC_STATUS_UNSUPPORTED_DIMENSION = 19,
  FC_STATUS_C_SINGULAR = 20,
  FC_STATUS_SINGULAR_A = 21,
  FC_STATUS_NOT_SIMPLE_SPECTRUM = 22,
  FC_STATUS_OTHER = 99,
} FcStatus;

/**
 * Opaque validated manifold data.
 */
typedef struct FcManifold FcManifold;

/**
 * Opaque characteristic parabola `A + 2sB + s²C`.
 */
typedef struct FcParabola FcParabola;

typedef struct FcSignature {
  uintptr_t n;
  uintptr_t m;
  uintptr_t r;
  uintptr_t k;
} FcSignature;

typedef struct FcCharacteristic {
  bool characteristic;
  bool poabc;
  bool schur_psd;
  struct FcSignature signature;
} FcCharacteristic;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the most recent failure on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *fc_last_error_message(void);

/**
 * Creates a parabola from three row-major `m×m` symmetric matrices.
 *
 * # Safety
 * `a`, `b`, `c` must point to `m*m` doubles; `out` must be writable.
 */
enum FcStatus fc_parabola_new(uintptr_t m,
                              const double *a,
                              const double *b,
                              const double *c,
                              double tol,
                              struct FcParabola **out);

/**
 * # Safety
 * `p` must come from this library and not be used afterwards.
 */
void fc_parabola_free(struct FcParabola *p);

/**
 * # Safety
 * `p` must be a live handle or null.
 */
uintptr_t fc_parabola_dim(const struct FcParabola *p);

/**
 * Copies the coefficients into caller buffers of `m*m` doubles. Null
 * buffers are skipped.
 *
 * # Safety
 * `p` must be a live handle; non-null buffers must hold `m*m` doubles.
 */
enum FcStatus fc_parabola_coefficients(const struct FcParabola *p,
                                       double *a_out,
                                       double *b_out,
                                       double *c_out);

/**
 * Validated manifold data: `a_prime` is `m×m`, `a_dblprime` is `r×m`,
 * `lattice` is `m×m`, all row-major.
 *
 * # Safety
 * Buffers must hold the stated number of doubles; `out` must be writable.
 */
enum FcStatus fc_manifold_build(uintptr_t n,
                                uintptr_t m,
                                uintptr_t r,
                                const double *a_prime,
                                const double *a_dblprime,
                                const double *lattice,
                                struct FcManifold **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum FcStatus fc_manifold_example_4d(struct FcManifold **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum FcStatus fc_manifold_example_5d(double t, double r, struct FcManifold **out);

/**
 * # Safety
 * `mf` must come from this library and not be used afterwards.
 */
void fc_manifold_free(struct FcManifold *mf);

/**
 * # Safety
 * `mf` must be a live handle; `out` must be writable.
 */
enum FcStatus fc_manifold_signature(const struct FcManifold *mf, struct FcSignature *out);

/**
 * # Safety
 * `mf` must be a live handle; `out` must be writable.
 */
enum FcStatus fc_char_polynomial(const struct FcManifold *mf, struct FcParabola **out);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum FcStatus fc_is_characteristic(const struct FcParabola *p,
                                   uintptr_t n,
                                   double tol,
                                   struct FcCharacteristic *out);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum FcStatus fc_realize(const struct FcParabola *p,
                         uintptr_t n,
                         double tol,
                         struct FcManifold **out);

/**
 * Writes the `m` canonical spectral values to `values_out`.
 *
 * # Safety
 * `p` must be a live handle; `values_out` must hold `m` doubles and
 * `degenerate_out` must be writable.
 */
enum FcStatus fc_affine_spectrum(const struct FcParabola *p,
                                 double tol,
                                 double *values_out,
                                 bool *degenerate_out);

/**
 * Real equivalence of `p1` and `p2` at dimension `n`. On `Yes` the witness
 * is written to `x_out` (`m*m` doubles), `alpha_out` and `beta_out` when
 * those are non-null.
 *
 * # Safety
 * Handles must be live; `verdict_out` must be writable.
 */
enum FcStatus fc_almost_equivalent(const struct FcParabola *p1,
                                   const struct FcParabola *p2,
                                   uintptr_t n,
                                   double tol,
                                   enum FcEquivalence *verdict_out,
                                   double *x_out,
                                   double *alpha_out,
                                   double *beta_out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* FLATCAUSAL_H */
