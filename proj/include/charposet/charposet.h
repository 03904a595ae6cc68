/* charposet: character-pair posets of finite p-groups, C interface.
 *
 * Every function returning cp_status sets a thread-local message readable
 * through cp_last_error() when it fails. Strings returned through char**
 * out-parameters are owned by the caller and released with cp_string_free().
 */
#ifndef CHARPOSET_CHARPOSET_H
#define CHARPOSET_CHARPOSET_H

#include <stddef.h>

#if defined(CHARPOSET_BUILDING)
#define CP_API __attribute__((visibility("default")))
#else
#define CP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cp_status {
  CP_OK = 0,
  CP_ERR_INPUT = 2,    /* parse, validation and size-cap errors */
  CP_ERR_DOMAIN = 3,   /* mathematical preconditions (not a p-group, bad e, ...) */
  CP_ERR_WITNESS = 4,  /* witness endpoints not connected */
  CP_ERR_INTERNAL = 5  /* bound or criterion violations and internal faults */
} cp_status;

typedef enum cp_strategy { CP_STRATEGY_MAXIMAL = 0, CP_STRATEGY_FULL = 1 } cp_strategy;

typedef enum cp_format { CP_FORMAT_JSON = 0, CP_FORMAT_CSV = 1, CP_FORMAT_DOT = 2 } cp_format;

typedef struct cp_group cp_group;
typedef struct cp_poset cp_poset;

CP_API const char* cp_last_error(void);
CP_API void cp_string_free(char* s);

/* Built-in family catalog as a JSON array. */
CP_API cp_status cp_catalog_json(char** out);
/* Family specs swept when cp_sweep is given no sources, as a JSON array. */
CP_API cp_status cp_default_population_json(char** out);

/* source is a built-in family spec or "@path" to a group file.
 * order_cap bounds subgroup-lattice enumeration; 0 selects the default. */
CP_API cp_status cp_group_load(const char* source, int order_cap, cp_group** out);
CP_API cp_status cp_group_from_json(const char* text, int order_cap, cp_group** out);
CP_API void cp_group_free(cp_group* g);
CP_API int cp_group_order(const cp_group* g);
CP_API const char* cp_group_name(const cp_group* g);
/* The prime p for a nontrivial p-group, 0 otherwise. */
CP_API int cp_group_prime(const cp_group* g);

/* Character table of G, or of every subgroup when all_subgroups is nonzero. */
CP_API cp_status cp_irr_json(cp_group* g, int all_subgroups, char** out);

/* p = 0 uses the prime of g. The poset keeps its own reference to the group data. */
CP_API cp_status cp_poset_create(cp_group* g, int p, int e, cp_strategy strategy, cp_poset** out);
CP_API void cp_poset_free(cp_poset* poset);
CP_API int cp_poset_component_count(const cp_poset* poset);
CP_API int cp_poset_node_count(const cp_poset* poset);
/* CP_FORMAT_JSON or CP_FORMAT_DOT. */
CP_API cp_status cp_poset_export(const cp_poset* poset, cp_format format, char** out);

/* Chain between (H, chi) and (K, psi); H and K index the poset's subgroup list. */
CP_API cp_status cp_witness_json(const cp_poset* poset, int h, int chi, int k, int psi,
                                 char** out);

/* Reports for one group: e < 0 covers every e with p^{e+1} <= |G|.
 * The output is written even when reports fail; *violations receives the
 * number of failed reports and the status reflects the first failure. */
CP_API cp_status cp_verify(cp_group* g, int e, cp_format format, int timings, char** out,
                           int* violations);

typedef struct cp_sweep_options {
  const char* const* sources; /* NULL or empty selects the default population */
  size_t source_count;
  int max_order;              /* 0 = unbounded */
  const int* primes;          /* NULL = any prime */
  size_t prime_count;
  int e;                      /* < 0 = every valid e */
  int order_cap;              /* 0 = default */
  cp_format format;           /* JSON or CSV */
  int timings;
} cp_sweep_options;

CP_API cp_status cp_sweep(const cp_sweep_options* options, char** out, int* violations);

#ifdef __cplusplus
}
#endif

#endif /* CHARPOSET_CHARPOSET_H */
