#ifndef MCKAY_H
#define MCKAY_H

/* Generated by cbindgen from the mckay-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every entry point.
 */
typedef enum MckayStatus {
  /**
   * Success.
   */
  MCKAY_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  MCKAY_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  MCKAY_STATUS_INVALID_UTF8 = 2,
  /**
   * An argument was understood but rejected (unknown group, bad node,
   * out-of-range parameter).
   */
  MCKAY_STATUS_INVALID_ARGUMENT = 3,
  /**
   * The input data was malformed or inconsistent (graph JSON, character
   * table, non-self-dual module where a series was requested).
   */
  MCKAY_STATUS_BAD_INPUT = 4,
  /**
   * An internal computation failed; indicates a library bug.
   */
  MCKAY_STATUS_COMPUTE_ERROR = 5,
  /**
   * A verification suite ran to completion and found failures.
   */
  MCKAY_STATUS_VERIFY_FAILED = 6,
} MckayStatus;

/**
 * Opaque handle to a loaded representation graph.
 */
typedef struct MckayGraph MckayGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Last error message on this thread, as a fresh string the caller must
 * release with `mckay_string_free`. Empty if no error has occurred.
 */
char *mckay_last_error_message(void);

/**
 * Releases a string allocated by this library. Null is a no-op.
 *
 * # Safety
 * `s` must have been returned by this library and not freed before.
 */
void mckay_string_free(char *s);

/**
 * Loads a catalog group (`"C5"`, `"D6"`, `"T"`, `"O"`, `"I"`, `"S4"`).
 *
 * # Safety
 * `spec` must be a valid NUL-terminated string; `out` a valid pointer.
 */
enum MckayStatus mckay_graph_from_group(const char *spec, struct MckayGraph **out);

/**
 * Loads a graph from its JSON description.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string; `out` a valid pointer.
 */
enum MckayStatus mckay_graph_from_json(const char *json, struct MckayGraph **out);

/**
 * Builds a graph from character-table CSV text. `v_label` selects the
 * module; pass null to use the table's `#V=` directive.
 *
 * # Safety
 * `csv` must be a valid NUL-terminated string; `v_label` null or valid;
 * `out` a valid pointer.
 */
enum MckayStatus mckay_graph_from_chartable(const char *csv,
                                            const char *v_label,
                                            struct MckayGraph **out);

/**
 * Releases a graph handle. Null is a no-op.
 *
 * # Safety
 * `g` must have been returned by this library and not freed before.
 */
void mckay_graph_free(struct MckayGraph *g);

/**
 * Number of nodes, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a valid graph handle.
 */
uint32_t mckay_graph_node_count(const struct MckayGraph *g);

/**
 * Label of node `index`, or null when out of range. The caller frees the
 * string with `mckay_string_free`.
 *
 * # Safety
 * `g` must be null or a valid graph handle.
 */
char *mckay_graph_node_label(const struct MckayGraph *g, uint32_t index);

/**
 * Serializes the graph to its JSON interchange form.
 *
 * # Safety
 * `g` must be a valid graph handle; `out` a valid pointer.
 */
enum MckayStatus mckay_graph_to_json(const struct MckayGraph *g, char **out);

/**
 * Poincaré series of the named node as a JSON document (reduced fraction,
 * determinant pair, and `terms` coefficients).
 *
 * # Safety
 * `g` must be a valid graph handle; `node` a valid string; `out` valid.
 */
enum MckayStatus mckay_series_json(const struct MckayGraph *g,
                                   const char *node,
                                   uint32_t terms,
                                   char **out);

/**
 * Bratteli levels `0..=levels` as a JSON document.
 *
 * # Safety
 * `g` must be a valid graph handle; `out` a valid pointer.
 */
enum MckayStatus mckay_bratteli_json(const struct MckayGraph *g, uint32_t levels, char **out);

/**
 * Runs a verification suite (`"all"`, `"chebyshev"`, `"steinberg"`,
 * `"closedform"`, `"molien"`, `"oracle"`) and writes its JSON report.
 * Returns `VerifyFailed` when the report contains failures.
 *
 * # Safety
 * `suite` must be a valid NUL-terminated string; `out` a valid pointer.
 */
enum MckayStatus mckay_verify_json(const char *suite, double tolerance, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MCKAY_H */
