#ifndef ZENOMATA_H
#define ZENOMATA_H

/* Generated by cbindgen from zenomata-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of a fallible call.
 */
typedef enum ZmStatus {
  /**
   * The call succeeded.
   */
  ZM_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  ZM_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  ZM_STATUS_INVALID_UTF8 = 2,
  /**
   * Input text did not parse (file formats, encodings, map notation).
   */
  ZM_STATUS_PARSE = 3,
  /**
   * The inputs were well-formed but violated a library contract.
   */
  ZM_STATUS_DOMAIN = 4,
} ZmStatus;

/**
 * Opaque reversible automaton handle.
 */
typedef struct ZmAutomaton ZmAutomaton;

/**
 * Opaque partition-logic handle.
 */
typedef struct ZmLogic ZmLogic;

/**
 * Opaque permutation handle.
 */
typedef struct ZmPermutation ZmPermutation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread, or NULL.
 * The pointer stays valid until the next failing call on the thread.
 */
const char *zm_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be a pointer previously returned by a `zm_*` call and not yet
 * freed.
 */
void zm_string_free(char *s);

/**
 * Parses the automaton file format (JSON with states/inputs/delta/lambda)
 * and validates reversibility.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be valid for a write.
 */
enum ZmStatus zm_automaton_from_json(const char *json, struct ZmAutomaton **out);

/**
 * # Safety
 * `automaton` must be a live handle from this library or NULL.
 */
void zm_automaton_free(struct ZmAutomaton *automaton);

/**
 * Number of states, or 0 for NULL.
 *
 * # Safety
 * `automaton` must be a live handle or NULL.
 */
size_t zm_automaton_state_count(const struct ZmAutomaton *automaton);

/**
 * Number of input/output symbols, or 0 for NULL.
 *
 * # Safety
 * `automaton` must be a live handle or NULL.
 */
size_t zm_automaton_input_count(const struct ZmAutomaton *automaton);

/**
 * Serializes back to the automaton file format. NULL input gives NULL.
 *
 * # Safety
 * `automaton` must be a live handle or NULL.
 */
char *zm_automaton_to_json(const struct ZmAutomaton *automaton);

/**
 * Graphviz rendering of the transition graph. NULL input gives NULL.
 *
 * # Safety
 * `automaton` must be a live handle or NULL.
 */
char *zm_automaton_to_dot(const struct ZmAutomaton *automaton);

/**
 * One combined step `(state, input) -> (next state, output)`.
 *
 * # Safety
 * Pointer arguments must satisfy the module conventions; both out
 * parameters must be valid for writes.
 */
enum ZmStatus zm_automaton_step(const struct ZmAutomaton *automaton,
                                const char *state,
                                const char *input,
                                char **out_state,
                                char **out_output);

/**
 * Runs an input word from a start state. Outputs are returned as a
 * comma-joined list.
 *
 * # Safety
 * Pointer arguments must satisfy the module conventions.
 */
enum ZmStatus zm_automaton_run_word(const struct ZmAutomaton *automaton,
                                    const char *start,
                                    const char *word,
                                    char **out_outputs,
                                    char **out_final_state);

/**
 * Builds the automaton that undoes every step of the argument.
 *
 * # Safety
 * `automaton` must be a live handle; `out` valid for a write.
 */
enum ZmStatus zm_automaton_reverse(const struct ZmAutomaton *automaton, struct ZmAutomaton **out);

/**
 * Extracts the permutation of `(state, symbol)` pair indices.
 *
 * # Safety
 * `automaton` must be a live handle; `out` valid for a write.
 */
enum ZmStatus zm_automaton_permutation(const struct ZmAutomaton *automaton,
                                       struct ZmPermutation **out);

/**
 * Rebuilds an automaton from a pair permutation with canonical names
 * (`s1..`, `1..`); the permutation degree must equal `states * inputs`.
 *
 * # Safety
 * `permutation` must be a live handle; `out` valid for a write.
 */
enum ZmStatus zm_automaton_from_permutation(const struct ZmPermutation *permutation,
                                            size_t states,
                                            size_t inputs,
                                            struct ZmAutomaton **out);

/**
 * Groups states by the outputs the word produces; returns the canonical
 * partition rendering such as `{{s1},{s2,s3}}`.
 *
 * # Safety
 * Pointer arguments must satisfy the module conventions.
 */
enum ZmStatus zm_automaton_experiment(const struct ZmAutomaton *automaton,
                                      const char *word,
                                      char **out_partition);

/**
 * Parses 1-based one-line notation such as `3,2,4,1`.
 *
 * # Safety
 * `one_line` must be a NUL-terminated string; `out` valid for a write.
 */
enum ZmStatus zm_permutation_parse(const char *one_line, struct ZmPermutation **out);

/**
 * # Safety
 * `permutation` must be a live handle from this library or NULL.
 */
void zm_permutation_free(struct ZmPermutation *permutation);

/**
 * Degree, or 0 for NULL.
 *
 * # Safety
 * `permutation` must be a live handle or NULL.
 */
size_t zm_permutation_degree(const struct ZmPermutation *permutation);

/**
 * Least power reaching the identity, or 0 for NULL.
 *
 * # Safety
 * `permutation` must be a live handle or NULL.
 */
uint64_t zm_permutation_order(const struct ZmPermutation *permutation);

/**
 * One-line rendering such as `3,2,4,1`. NULL input gives NULL.
 *
 * # Safety
 * `permutation` must be a live handle or NULL.
 */
char *zm_permutation_one_line(const struct ZmPermutation *permutation);

/**
 * Composition applying `first`, then `second`.
 *
 * # Safety
 * Both handles must be live; `out` valid for a write.
 */
enum ZmStatus zm_permutation_compose(const struct ZmPermutation *first,
                                     const struct ZmPermutation *second,
                                     struct ZmPermutation **out);

/**
 * The inverse permutation.
 *
 * # Safety
 * `permutation` must be a live handle; `out` valid for a write.
 */
enum ZmStatus zm_permutation_inverse(const struct ZmPermutation *permutation,
                                     struct ZmPermutation **out);

/**
 * Pastes the experiment partitions of all words up to `max_len` into a
 * partition logic.
 *
 * # Safety
 * `automaton` must be a live handle; `out` valid for a write.
 */
enum ZmStatus zm_logic_build(const struct ZmAutomaton *automaton,
                             size_t max_len,
                             struct ZmLogic **out);

/**
 * # Safety
 * `logic` must be a live handle from this library or NULL.
 */
void zm_logic_free(struct ZmLogic *logic);

/**
 * Number of elements, or 0 for NULL.
 *
 * # Safety
 * `logic` must be a live handle or NULL.
 */
size_t zm_logic_element_count(const struct ZmLogic *logic);

/**
 * True iff the logic is bottom, top and two incomparable complementary
 * pairs. False for NULL.
 *
 * # Safety
 * `logic` must be a live handle or NULL.
 */
bool zm_logic_is_mo2(const struct ZmLogic *logic);

/**
 * A rendered distributivity violation such as `x={s1}, y={s2}, z={s1,s3}`,
 * or NULL when the logic is distributive (or the handle is NULL).
 *
 * # Safety
 * `logic` must be a live handle or NULL.
 */
char *zm_logic_nondistributive_triple(const struct ZmLogic *logic);

/**
 * Structured text export: element list plus order pairs. NULL input gives
 * NULL.
 *
 * # Safety
 * `logic` must be a live handle or NULL.
 */
char *zm_logic_render(const struct ZmLogic *logic);

/**
 * Proper time after `t` cycles under squeeze factor `k`.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum ZmStatus zm_zeno_proper_time(double k, uint64_t t, double *out);

/**
 * The finite limit span `k/(1-k)`.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum ZmStatus zm_zeno_limit_time(double k, double *out);

/**
 * Runs a serialized program under a schedule and returns the outcome as a
 * JSON object (`{"result":"halted",...}`).
 *
 * # Safety
 * Pointer arguments must satisfy the module conventions.
 */
enum ZmStatus zm_zeno_run(const char *program_json,
                          const char *input,
                          double k,
                          double budget,
                          char **out_outcome);

/**
 * Confronts a decider (`constant-halts`, `constant-loops`,
 * `step-bounded:N`, `exact-meta`) with its diagonal adversary and returns
 * the certified report as JSON.
 *
 * # Safety
 * Pointer arguments must satisfy the module conventions.
 */
enum ZmStatus zm_diagonal_report(const char *decider, char **out_report);

/**
 * Amplitudes of the bit-flip fixed point `(|0>+|1>)/sqrt(2)`.
 *
 * # Safety
 * All out parameters must be valid for writes.
 */
enum ZmStatus zm_qubit_fixed_point(double *out_a_re,
                                   double *out_a_im,
                                   double *out_b_re,
                                   double *out_b_im);

/**
 * Measurement probabilities of the fixed point (fifty-fifty within float
 * accuracy).
 *
 * # Safety
 * Both out parameters must be valid for writes.
 */
enum ZmStatus zm_qubit_fixed_point_probabilities(double *out_p0, double *out_p1);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZENOMATA_H */
