#ifndef STARLIKE_RADIUS_H
#define STARLIKE_RADIUS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SrStatus {
  SR_STATUS_OK = 0,
  SR_STATUS_NULL_POINTER = 1,
  SR_STATUS_PARAMETER = 2,
  SR_STATUS_DOMAIN = 3,
  SR_STATUS_UNSUPPORTED = 4,
  SR_STATUS_PRECONDITION = 5,
  SR_STATUS_NO_ROOT = 6,
  SR_STATUS_INDETERMINATE = 7,
  SR_STATUS_EVALUATION = 8,
  SR_STATUS_NOT_APPLICABLE = 9,
  SR_STATUS_INTERNAL = 10,
} SrStatus;

typedef enum SrClassId {
  SR_CLASS_ID_G1 = 1,
  SR_CLASS_ID_G2 = 2,
} SrClassId;

/**
 * Target families in declaration order.
 */
typedef enum SrFamily {
  SR_FAMILY_STARLIKE_ORDER = 0,
  SR_FAMILY_LEMNISCATE = 1,
  SR_FAMILY_PARABOLIC = 2,
  SR_FAMILY_EXPONENTIAL = 3,
  SR_FAMILY_CARDIOID = 4,
  SR_FAMILY_SINE = 5,
  SR_FAMILY_LUNE = 6,
  SR_FAMILY_RATIONAL_R = 7,
  SR_FAMILY_RATIONAL_RL = 8,
  SR_FAMILY_STRONGLY_STARLIKE = 9,
  SR_FAMILY_NEPHROID = 10,
  SR_FAMILY_SIGMOID_SG = 11,
} SrFamily;

typedef enum SrVariant {
  SR_VARIANT_CENTER_CORRECTED = 0,
  SR_VARIANT_PRINTED = 1,
} SrVariant;

/**
 * Opaque class handle.
 */
typedef struct SrClass SrClass;

/**
 * Opaque target handle.
 */
typedef struct SrTarget SrTarget;

typedef struct SrRadiusResult {
  double rho;
  double residual;
  double bracket_lo;
  double bracket_hi;
  uint32_t iterations;
} SrRadiusResult;

typedef struct SrDisk {
  double center;
  double radius;
} SrDisk;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a class for parameter `b`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum SrStatus sr_class_new(uint32_t id, double b, struct SrClass **out);

/**
 * Creates a class from its coefficient magnitude (`b1` or `b'`).
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum SrStatus sr_class_from_coeff_mag(uint32_t id, double coeff_mag, struct SrClass **out);

/**
 * # Safety
 * `class` must come from `sr_class_new` or be null.
 */
void sr_class_free(struct SrClass *class_);

/**
 * Coefficient magnitude of the class; NaN for a null handle.
 *
 * # Safety
 * `class` must be a live handle or null.
 */
double sr_class_coeff_mag(const struct SrClass *class_);

/**
 * Creates a target. `alpha` is read only for the starlike family and
 * `gamma` only for the strongly starlike family.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum SrStatus sr_target_new(uint32_t family, double alpha, double gamma, struct SrTarget **out);

/**
 * # Safety
 * `target` must come from `sr_target_new` or be null.
 */
void sr_target_free(struct SrTarget *target);

/**
 * Radius of the class for the target.
 *
 * # Safety
 * Handles must be live; `out` must be valid for writes.
 */
enum SrStatus sr_compute_radius(const struct SrClass *class_,
                                const struct SrTarget *target,
                                uint32_t variant,
                                bool extended,
                                double tol,
                                struct SrRadiusResult *out);

/**
 * Disk containing `z f'(z)/f(z)` on `|z| = r`.
 *
 * # Safety
 * `class` must be live; `out` must be valid for writes.
 */
enum SrStatus sr_class_disk(const struct SrClass *class_, double r, struct SrDisk *out);

/**
 * Whether `re + i im` is interior to the target domain.
 *
 * # Safety
 * `target` must be live; `out` must be valid for writes.
 */
enum SrStatus sr_region_contains(const struct SrTarget *target, double re, double im, bool *out);

/**
 * Verification report for one cell as a JSON string, to be released with
 * `sr_string_free`. `passed` receives whether all gated checks passed.
 *
 * # Safety
 * Handles must be live; `json` and `passed` must be valid for writes.
 */
enum SrStatus sr_verify_json(const struct SrClass *class_,
                             const struct SrTarget *target,
                             uint32_t variant,
                             bool extended,
                             double tol,
                             uint32_t samples,
                             char **json,
                             bool *passed);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void sr_string_free(char *s);

/**
 * Message of the last failed call on this thread; valid until the next
 * call. Empty if none failed.
 */
const char *sr_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STARLIKE_RADIUS_H */
