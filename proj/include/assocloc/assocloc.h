#ifndef ASSOCLOC_ASSOCLOC_H
#define ASSOCLOC_ASSOCLOC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ASSOCLOC_BUILDING_LIBRARY)
#    define ASSOCLOC_API __declspec(dllexport)
#  else
#    define ASSOCLOC_API __declspec(dllimport)
#  endif
#else
#  define ASSOCLOC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Values after ASSOCLOC_E_SHAPE mirror the library's error kinds. */
typedef enum assocloc_status {
  ASSOCLOC_OK = 0,
  ASSOCLOC_E_SHAPE,
  ASSOCLOC_E_NOT_PRIME,
  ASSOCLOC_E_PARSE,
  ASSOCLOC_E_NON_ASSOCIATIVE,
  ASSOCLOC_E_BAD_UNIT,
  ASSOCLOC_E_NOT_AN_IDEAL,
  ASSOCLOC_E_UNIT_IN_IDEAL,
  ASSOCLOC_E_RELATION_VIOLATED,
  ASSOCLOC_E_UNIT_NOT_IDENTITY,
  ASSOCLOC_E_ZERO_MODULE,
  ASSOCLOC_E_NOT_A_UNIT,
  ASSOCLOC_E_MEATAXE_INCONCLUSIVE,
  ASSOCLOC_E_NON_SIMPLE_SUMMAND,
  ASSOCLOC_E_ZERO_DIVISOR_FOUND,
  ASSOCLOC_E_KERNEL_NOT_CONTAINED,
  ASSOCLOC_E_DENOMINATOR_NOT_UNIT,
  ASSOCLOC_E_NOT_WELL_DEFINED,
  ASSOCLOC_E_LAYOUT_MISMATCH,
  ASSOCLOC_E_NOT_COMMUTATIVE,
  ASSOCLOC_E_NOT_MAXIMAL,
  ASSOCLOC_E_PULLBACK_MISMATCH,
  ASSOCLOC_E_INVALID_ARGUMENT,
  ASSOCLOC_E_NULL_ARGUMENT,
  ASSOCLOC_E_UNKNOWN_COMMAND,
  ASSOCLOC_E_INTERNAL
} assocloc_status;

typedef struct assocloc_algebra assocloc_algebra;
typedef struct assocloc_module assocloc_module;
typedef struct assocloc_lfr assocloc_lfr;
typedef struct assocloc_report assocloc_report;

typedef struct assocloc_options {
  uint64_t seed; /* Meataxe PRNG seed */
  uint64_t cap;  /* enumeration cap */
} assocloc_options;

ASSOCLOC_API const char* assocloc_version(void);
ASSOCLOC_API void assocloc_options_init(assocloc_options* opts);
ASSOCLOC_API const char* assocloc_status_name(assocloc_status status);
/* Message of the last failed call on this thread; empty after success. */
ASSOCLOC_API const char* assocloc_last_error(void);

ASSOCLOC_API assocloc_status assocloc_algebra_load(const char* path, assocloc_algebra** out);
ASSOCLOC_API assocloc_status assocloc_algebra_parse(const char* text, assocloc_algebra** out);
ASSOCLOC_API void assocloc_algebra_free(assocloc_algebra* a);
ASSOCLOC_API size_t assocloc_algebra_dim(const assocloc_algebra* a);
ASSOCLOC_API uint32_t assocloc_algebra_prime(const assocloc_algebra* a);
ASSOCLOC_API int assocloc_algebra_is_commutative(const assocloc_algebra* a);
/* Serialized form; valid until the handle is freed. */
ASSOCLOC_API const char* assocloc_algebra_text(const assocloc_algebra* a);

ASSOCLOC_API assocloc_status assocloc_module_load(const char* path, const assocloc_algebra* a,
                                                  assocloc_module** out);
ASSOCLOC_API assocloc_status assocloc_module_parse(const char* text, const assocloc_algebra* a,
                                                   assocloc_module** out);
ASSOCLOC_API void assocloc_module_free(assocloc_module* m);
ASSOCLOC_API size_t assocloc_module_dim(const assocloc_module* m);
/* Writes 1 or 0 to *simple. */
ASSOCLOC_API assocloc_status assocloc_module_is_simple(const assocloc_module* m,
                                                       const assocloc_options* opts, int* simple);

/* Simple modules of the algebra; free the array with assocloc_module_array_free. */
ASSOCLOC_API assocloc_status assocloc_simples(const assocloc_algebra* a,
                                              const assocloc_options* opts,
                                              assocloc_module*** out, size_t* count);
ASSOCLOC_API void assocloc_module_array_free(assocloc_module** ms, size_t count);

/* A_M for M the direct sum of the given simple summands. */
ASSOCLOC_API assocloc_status assocloc_localize(const assocloc_algebra* a,
                                               const assocloc_module* const* summands,
                                               size_t count, const assocloc_options* opts,
                                               assocloc_lfr** out);
ASSOCLOC_API void assocloc_lfr_free(assocloc_lfr* l);
ASSOCLOC_API size_t assocloc_lfr_dim(const assocloc_lfr* l);
ASSOCLOC_API size_t assocloc_lfr_rank_eta(const assocloc_lfr* l);
ASSOCLOC_API size_t assocloc_lfr_kernel_dim(const assocloc_lfr* l);
ASSOCLOC_API size_t assocloc_lfr_division_dim(const assocloc_lfr* l);

/* Runs a CLI subcommand. paths[0] is the algebra file, the rest are modules.
   Input errors are reported inside the report (exit code 2), so the call
   itself fails only for null arguments or an unknown command. */
ASSOCLOC_API assocloc_status assocloc_run(const char* command, const char* const* paths,
                                          size_t count, const assocloc_options* opts,
                                          assocloc_report** out);
ASSOCLOC_API void assocloc_report_free(assocloc_report* r);
ASSOCLOC_API const char* assocloc_report_text(const assocloc_report* r);
/* 0 all checks pass, 1 a check failed, 2 input error. */
ASSOCLOC_API int assocloc_report_exit_code(const assocloc_report* r);

/* Names of the subcommands, for usage text. */
ASSOCLOC_API size_t assocloc_command_count(void);
ASSOCLOC_API const char* assocloc_command_name(size_t i);

#ifdef __cplusplus
}
#endif

#endif
