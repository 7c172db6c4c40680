/* C interface to libshiftlab.
 *
 * Every object is an opaque handle released with its matching *_free
 * function. Functions report failure through sl_status; the message of the
 * most recent failure on the calling thread is available from
 * sl_last_error(). Strings returned through char** out-parameters are owned
 * by the caller and released with sl_string_free().
 *
 * Words are passed in the text syntax of the file formats: "@" or "" for
 * the empty word, "abc" for one-character atoms, "q0,B,qf" for longer ones,
 * and "a|c" for pair symbols.
 */
#ifndef SHIFTLAB_C_API_H
#define SHIFTLAB_C_API_H

#include <stddef.h>

#if defined(_WIN32)
#define SL_API __declspec(dllexport)
#else
#define SL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sl_status {
  SL_OK = 0,
  SL_ERR_PARSE = 1,
  SL_ERR_ALPHABET = 2,
  SL_ERR_INVALID = 3,
  SL_ERR_LIMIT = 4,
  SL_ERR_INTERNAL = 5
} sl_status;

typedef enum sl_verdict { SL_YES = 0, SL_NO = 1, SL_UNKNOWN = 2 } sl_verdict;

typedef enum sl_bool_op { SL_INTERSECT = 0, SL_UNION = 1, SL_DIFFERENCE = 2 } sl_bool_op;

typedef struct sl_automaton sl_automaton;
typedef struct sl_rewriting sl_rewriting;
typedef struct sl_tm sl_tm;
typedef struct sl_result sl_result;

SL_API const char* sl_last_error(void);
SL_API const char* sl_status_name(sl_status status);
SL_API void sl_string_free(char* s);

/* ---- automata ------------------------------------------------------- */

SL_API sl_status sl_automaton_parse(const char* text, sl_automaton** out);
/* header: newline-separated comment lines written above the automaton, or NULL. */
SL_API sl_status sl_automaton_print(const sl_automaton* a, const char* header, char** out);
SL_API void sl_automaton_free(sl_automaton* a);
SL_API size_t sl_automaton_num_states(const sl_automaton* a);
/* Space-separated alphabet in declaration order. */
SL_API sl_status sl_automaton_alphabet(const sl_automaton* a, char** out);

SL_API sl_status sl_automaton_determinize(const sl_automaton* a, sl_automaton** out);
SL_API sl_status sl_automaton_minimize(const sl_automaton* a, sl_automaton** out);
SL_API sl_status sl_automaton_complement(const sl_automaton* a, sl_automaton** out);
SL_API sl_status sl_automaton_product(const sl_automaton* a, const sl_automaton* b, sl_bool_op op,
                                      sl_automaton** out);
SL_API sl_status sl_automaton_lexleast(const sl_automaton* a, sl_automaton** out);
SL_API sl_status sl_automaton_cyc(const sl_automaton* a, sl_automaton** out);
/* verdict yes when L(a) is a subset of L(b); otherwise a shortest counterexample. */
SL_API sl_status sl_automaton_subset(const sl_automaton* a, const sl_automaton* b, sl_result** out);
SL_API sl_status sl_automaton_accepts(const sl_automaton* a, const char* word, int* out);
/* The L_t family over {a, b}. */
SL_API sl_status sl_gen_lt(size_t t, sl_automaton** out);

/* ---- rewriting systems and Turing machines ------------------------------- */

SL_API sl_status sl_rewriting_parse(const char* text, sl_rewriting** out);
SL_API sl_status sl_rewriting_print(const sl_rewriting* s, const char* header, char** out);
SL_API void sl_rewriting_free(sl_rewriting* s);
SL_API size_t sl_rewriting_num_rules(const sl_rewriting* s);

SL_API sl_status sl_tm_parse(const char* text, sl_tm** out);
SL_API void sl_tm_free(sl_tm* m);
SL_API sl_status sl_tm_to_rewriting(const sl_tm* m, sl_rewriting** out);
/* verdict yes = halted, no = stuck, unknown = still running after max_steps. */
SL_API sl_status sl_tm_run(const sl_tm* m, size_t max_steps, sl_result** out);

/* ---- reductions ------------------------------------------------------ */

/* The shift instance for a^(n-1) =>* b^(n-1). c and d receive the chosen
 * letters; either may be NULL. */
SL_API sl_status sl_reduce_rewrite_to_shift(const sl_rewriting* s, const char* a, const char* b,
                                            sl_automaton** out, char** c, char** d);
/* Letters of the instance (every pair component other than c) become the
 * digits 1..k-1 and c becomes 0. digit_cap 0 means no cap. renaming
 * receives "x->1 y->2 c->0"; may be NULL. */
SL_API sl_status sl_reduce_shift_to_power(const sl_automaton* instance, const char* c,
                                          size_t digit_cap, sl_automaton** out, unsigned* k,
                                          char** renaming);
/* The recoded instance over pairs of {1, 0}. phi receives "a->1001 ..."; may be NULL. */
SL_API sl_status sl_reduce_recode_binary(const sl_rewriting* s, const char* a, const char* b,
                                         sl_automaton** out, char** phi);
/* result verdict yes when some x x x is accepted. */
SL_API sl_status sl_reduce_restrict_general_shift(const sl_automaton* instance, const char* c,
                                                  sl_result** diagonal, sl_automaton** restricted);

/* ---- decision procedures and searches -------------------------------- */

SL_API sl_status sl_check_long_shift(const sl_automaton* instance, const char* c, sl_result** out);
/* max_candidates 0 keeps the default cap; uncapped != 0 lifts it. */
SL_API sl_status sl_check_distinct_conjugates(const sl_automaton* a, size_t max_candidates,
                                              int uncapped, sl_result** out);
SL_API sl_status sl_check_non_conjugates(const sl_automaton* a, sl_result** out);

SL_API sl_status sl_search_shift(const sl_automaton* instance, const char* c, size_t max_len,
                                 unsigned jobs, sl_result** out);
/* k 0 infers the base from the largest digit in the alphabet. */
SL_API sl_status sl_search_power(const sl_automaton* a, unsigned k, size_t max_len,
                                 sl_result** out);
/* budget 0 means unlimited. */
SL_API sl_status sl_search_rewrite_power(const sl_rewriting* s, const char* a, const char* b,
                                         size_t max_n, size_t budget, unsigned jobs,
                                         sl_result** out);

SL_API sl_status sl_oracle_reachable(const sl_rewriting* s, const char* from, const char* to,
                                     size_t budget, sl_result** out);
SL_API sl_status sl_oracle_membership(const sl_automaton* a, const char* word, sl_result** out);

/* ---- results ----------------------------------------------------------- */

SL_API sl_verdict sl_result_verdict(const sl_result* r);
/* Borrowed pointer valid until sl_result_free, or NULL if the key is absent. */
SL_API const char* sl_result_get(const sl_result* r, const char* key);
SL_API size_t sl_result_num_fields(const sl_result* r);
SL_API const char* sl_result_key(const sl_result* r, size_t i);
SL_API const char* sl_result_value(const sl_result* r, size_t i);
/* Adds a field; used by callers that annotate records (e.g. timing). */
SL_API sl_status sl_result_add(sl_result* r, const char* key, const char* value);
/* "key: value" lines. */
SL_API sl_status sl_result_render(const sl_result* r, char** out);
SL_API void sl_result_free(sl_result* r);

#ifdef __cplusplus
}
#endif

#endif
