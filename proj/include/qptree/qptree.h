/* C interface to the qptree library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returns a qpt_status; on failure the message is available from
 * qpt_last_error() until the next call on the same thread. Strings returned
 * through char** are owned by the caller and released with qpt_string_free.
 */
#ifndef QPTREE_H
#define QPTREE_H

#include <stddef.h>

#if defined(_WIN32)
#define QPT_API __declspec(dllexport)
#else
#define QPT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qpt_status {
  QPT_OK = 0,
  QPT_ERR_SYNTAX = 1,
  QPT_ERR_LANGUAGE = 2,
  QPT_ERR_MODEL_PARSE = 3,
  QPT_ERR_NO_LEAST_ELEMENT = 4,
  QPT_ERR_NOT_PARTIAL_ORDER = 5,
  QPT_ERR_VALUATION_NOT_PROPOSITION = 6,
  QPT_ERR_TREE_NOT_PREFIX_CLOSED = 7,
  QPT_ERR_UNKNOWN_WORLD = 8,
  QPT_ERR_UNBOUND_VARIABLE = 9,
  QPT_ERR_OPEN_FORMULA = 10,
  QPT_ERR_MODE_MISMATCH = 11,
  QPT_ERR_BOUND_EXCEEDED = 12,
  QPT_ERR_INVALID_ARGUMENT = 13,
  QPT_ERR_IO = 14,
  QPT_ERR_INTERNAL = 99
} qpt_status;

typedef enum qpt_language { QPT_LANG_INTUITIONISTIC = 0, QPT_LANG_MODAL = 1 } qpt_language;

typedef enum qpt_mode { QPT_MODE_INT = 0, QPT_MODE_S4 = 1 } qpt_mode;

typedef struct qpt_formula qpt_formula;
typedef struct qpt_model qpt_model;

QPT_API const char* qpt_last_error(void);
QPT_API const char* qpt_status_name(qpt_status status);
/* Byte offset of the last syntax error, or -1. */
QPT_API long qpt_last_error_offset(void);
QPT_API void qpt_string_free(char* s);

/* Formulas */
QPT_API qpt_status qpt_formula_parse(const char* text, qpt_language lang, qpt_formula** out);
QPT_API void qpt_formula_free(qpt_formula* f);
QPT_API qpt_status qpt_formula_print(const qpt_formula* f, char** out);
QPT_API qpt_status qpt_formula_language(const qpt_formula* f, qpt_language* out);
/* Free variables as a comma-separated list in name order. */
QPT_API qpt_status qpt_formula_free_vars(const qpt_formula* f, char** out);
/* T-embedding into S4. */
QPT_API qpt_status qpt_formula_embed(const qpt_formula* f, qpt_formula** out);

/* Models (JSON model-file format) */
QPT_API qpt_status qpt_model_load(const char* json, qpt_model** out);
QPT_API qpt_status qpt_model_load_file(const char* path, qpt_model** out);
QPT_API void qpt_model_free(qpt_model* m);
QPT_API qpt_status qpt_model_dump(const qpt_model* m, char** out);
QPT_API qpt_status qpt_model_mode(const qpt_model* m, qpt_mode* out);
QPT_API qpt_status qpt_model_world_count(const qpt_model* m, size_t* out);
/* Root world rendered as in the model file. */
QPT_API qpt_status qpt_model_root(const qpt_model* m, char** out);
/* Replaces the model with the same structure read in another mode. */
QPT_API qpt_status qpt_model_set_mode(qpt_model* m, qpt_mode mode);
/* Replaces each valuation image by the extension of box p (s4 models). */
QPT_API qpt_status qpt_model_box_closure(qpt_model* m);

/* Semantics, under the model's mode. Worlds are passed and returned in
 * model-file JSON notation: "[0,1]" for tree words, "\"a\"" for labels. */
QPT_API qpt_status qpt_extension(const qpt_model* m, const qpt_formula* f, char** worlds_json);
QPT_API qpt_status qpt_forces(const qpt_model* m, const char* world_json, const qpt_formula* f,
                              int* out);
QPT_API qpt_status qpt_validates(const qpt_model* m, const qpt_formula* f, int* out);
/* Both sides of the T-embedding equivalence on one intuitionistic model. */
QPT_API qpt_status qpt_embedding_pair(const qpt_model* m, const qpt_formula* f, int* intuitionistic,
                                      int* modal);

/* Bounded countermodel search. structure_class is "finite-trees",
 * "finite-posets" or "chains". *countermodel is NULL when none exists. */
QPT_API qpt_status qpt_decide(const qpt_formula* f, const char* structure_class, size_t max_worlds,
                              qpt_model** countermodel, size_t* structures_checked);

/* MSO sentence for a closed formula and a logic class name (qpHt,
 * qpHt-<n>, qpHt-fin, qpHt-omega, s4t, s4t-<n>, s4t-fin). */
QPT_API qpt_status qpt_translate(const qpt_formula* f, const char* logic_class, char** out);
/* A^x for a formula with free individual variable x, in the formula's language. */
QPT_API qpt_status qpt_translate_step(const qpt_formula* f, char** out);
/* Evaluates the sentence for a closed formula and class over every subtree
 * of a finite tree domain. Fails for emit-only classes. */
QPT_API qpt_status qpt_translate_eval(const qpt_formula* f, const char* logic_class,
                                      const qpt_model* domain, int* out);

/* Goedel-Dummett logic over a finite truth-value set such as "0,1/2,1".
 * With a valuation ("p=1/2,q=1") the value is returned; with valuation NULL
 * every valuation of the free variables is tried and the least value,
 * a valuation reaching it, and the tautology verdict are returned. */
QPT_API qpt_status qpt_godel_eval(const qpt_formula* f, const char* values, const char* valuation,
                                  char** value);
QPT_API qpt_status qpt_godel_tautology(const qpt_formula* f, const char* values, int* tautology,
                                       char** least_value, char** witness);
QPT_API qpt_status qpt_chain_correspondence(const qpt_formula* f, unsigned k, int* kripke,
                                            int* godel);

/* Packaged separation examples. Returns one line per check,
 * "PASS|FAIL <name>: <detail>", and whether all passed. */
QPT_API qpt_status qpt_run_examples(char** report, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* QPTREE_H */
