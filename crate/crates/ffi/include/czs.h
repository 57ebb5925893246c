#ifndef CZS_H
#define CZS_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every call.
 */
typedef enum CzsStatus {
  CZS_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  CZS_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  CZS_STATUS_INVALID_UTF8 = 2,
  /**
   * Circuit text or a pair list could not be parsed.
   */
  CZS_STATUS_PARSE = 3,
  /**
   * The arguments are outside the supported domain.
   */
  CZS_STATUS_DOMAIN = 4,
  /**
   * An optimized circuit failed re-verification.
   */
  CZS_STATUS_VERIFICATION = 5,
  /**
   * A bug inside the library (a caught panic).
   */
  CZS_STATUS_INTERNAL = 6,
} CzsStatus;

typedef enum CzsTopology {
  CZS_TOPOLOGY_COMPLETE = 0,
  CZS_TOPOLOGY_LINE = 1,
} CzsTopology;

/**
 * Opaque circuit handle.
 */
typedef struct CzsCircuit CzsCircuit;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null after a
 * success. The pointer stays valid until the next call on this thread.
 */
const char *czs_last_error_message(void);

/**
 * Parses circuit text (`qubits k` header, then `cz i j` / `swap i j` /
 * `h q` / `x q` lines).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CzsStatus czs_circuit_parse(const char *text, struct CzsCircuit **out);

/**
 * Releases a circuit handle; null is ignored.
 *
 * # Safety
 * `c` must be null or a handle from this library not freed before.
 */
void czs_circuit_free(struct CzsCircuit *c);

/**
 * Number of qubits and gates of a circuit.
 *
 * # Safety
 * `c` must be a live handle; `qubits` and `gates` valid pointers.
 */
enum CzsStatus czs_circuit_shape(const struct CzsCircuit *c, size_t *qubits, size_t *gates);

/**
 * Serializes a circuit; free the string with [`czs_string_free`].
 *
 * # Safety
 * `c` must be a live handle and `out` a valid pointer.
 */
enum CzsStatus czs_circuit_to_string(const struct CzsCircuit *c, char **out);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not freed before.
 */
void czs_string_free(char *s);

/**
 * Optimizes a c-Z/SWAP circuit and checks the result against the input.
 * `exact` selects breadth-first search (at most 5 qubits); `budget` bounds
 * the line-topology search.
 *
 * # Safety
 * `c` must be a live handle and `out` a valid pointer.
 */
enum CzsStatus czs_optimize(const struct CzsCircuit *c,
                            enum CzsTopology topology,
                            size_t budget,
                            bool exact,
                            struct CzsCircuit **out);

/**
 * Whether two circuits implement exactly the same unitary.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` a valid pointer.
 */
enum CzsStatus czs_equivalent(const struct CzsCircuit *a, const struct CzsCircuit *b, bool *out);

/**
 * A circuit preparing GHZ_k from |0…0⟩.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CzsStatus czs_ghz_circuit(size_t qubits, struct CzsCircuit **out);

/**
 * Order and Cayley-graph diameter of the c-Z/SWAP group on `qubits`
 * qubits (at most 5).
 *
 * # Safety
 * `order` and `diameter` must be valid pointers.
 */
enum CzsStatus czs_group_stats(size_t qubits,
                               enum CzsTopology topology,
                               uint64_t *order,
                               uint32_t *diameter);

/**
 * Classification report for `Z_E ⊗ (a|0⟩ + b|1⟩)` with parameters drawn
 * from `seed`. `pairs` is a list such as `"01,12"`. Free the report with
 * [`czs_string_free`].
 *
 * # Safety
 * `pairs` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CzsStatus czs_classify(size_t qubits, const char *pairs, uint64_t seed, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CZS_H */
