/*
 * kcharge C API.
 *
 * Opaque handles own their data and are released with the matching *_free
 * function. Strings returned through `char** out` are heap allocated and
 * must be released with kc_string_free. Every call returns a kc_status; on
 * failure kc_last_error() describes the problem for the calling thread.
 */
#ifndef KCHARGE_H
#define KCHARGE_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(KCHARGE_BUILDING)
#    define KC_API __declspec(dllexport)
#  else
#    define KC_API __declspec(dllimport)
#  endif
#else
#  define KC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kc_status {
    KC_OK = 0,
    KC_ERR_ARGUMENT = 1, /* null pointer or bad option */
    KC_ERR_DOMAIN = 2,   /* value outside an operation's domain (e.g. weight part > k) */
    KC_ERR_PARSE = 3,    /* malformed text or JSON */
    KC_ERR_INVALID = 4,  /* well-formed input that is not a k-tableau */
    KC_ERR_INTERNAL = 5
} kc_status;

typedef enum kc_format { KC_FORMAT_TEXT = 0, KC_FORMAT_JSON = 1 } kc_format;

typedef enum kc_formulation { KC_FORMULATION_MORSE = 0, KC_FORMULATION_LP = 1 } kc_formulation;

typedef enum kc_strategy { KC_STRATEGY_FAST = 0, KC_STRATEGY_ORACLE = 1 } kc_strategy;

typedef struct kc_tableau kc_tableau;
typedef struct kc_tableau_list kc_tableau_list;

typedef struct kc_verify_options {
    int min_k;
    int max_k;
    int max_weight;
    int threads;
    int check_oracle;
} kc_verify_options;

KC_API const char* kc_version(void);
KC_API const char* kc_last_error(void);
KC_API const char* kc_status_name(kc_status status);
KC_API void kc_string_free(char* s);

/* Tableaux ---------------------------------------------------------------- */

/* Parses the text form ("k=<k>" header, top row first) or JSON. */
KC_API kc_status kc_tableau_parse(const char* input, kc_tableau** out);
/* k-tableau from rows given bottom row first: row i has row_lengths[i] letters. */
KC_API kc_status kc_tableau_from_rows(int k, const int* letters, const size_t* row_lengths, size_t rows,
                                      kc_tableau** out);
KC_API void kc_tableau_free(kc_tableau* t);
KC_API kc_tableau* kc_tableau_clone(const kc_tableau* t);

KC_API int kc_tableau_k(const kc_tableau* t);
/* Copies up to `capacity` parts; returns the number of parts. */
KC_API size_t kc_tableau_shape(const kc_tableau* t, int* parts, size_t capacity);
KC_API size_t kc_tableau_weight(const kc_tableau* t, int* parts, size_t capacity);
KC_API int kc_tableau_letter(const kc_tableau* t, int row, int col);

/* *valid is 1 or 0; *diagnostics (optional) names the first violation. */
KC_API kc_status kc_tableau_validate(const kc_tableau* t, int* valid, char** diagnostics);
KC_API kc_status kc_tableau_serialize(const kc_tableau* t, kc_format format, char** out);

KC_API kc_status kc_tableau_k_charge(const kc_tableau* t, kc_formulation f, long long* out);
KC_API kc_status kc_tableau_k_cocharge(const kc_tableau* t, kc_formulation f, long long* out);
/* Report with both formulations, index vectors, residue orders and diag corrections. */
KC_API kc_status kc_tableau_report(const kc_tableau* t, kc_format format, char** out);

/* Classical charge/cocharge of the filling, ignoring k. */
KC_API kc_status kc_tableau_classical_charge(const kc_tableau* t, long long* charge, long long* cocharge);
/* Same, for text input whose k header is optional. */
KC_API kc_status kc_classical_report(const char* input, kc_format format, char** out);

/* Enumeration -------------------------------------------------------------- */

/* shape may be NULL. */
KC_API kc_status kc_enumerate(int k, const int* weight, size_t weight_len, const int* shape, size_t shape_len,
                              kc_strategy strategy, kc_tableau_list** out);
KC_API size_t kc_tableau_list_size(const kc_tableau_list* list);
/* Borrowed; valid until the list is freed. */
KC_API const kc_tableau* kc_tableau_list_get(const kc_tableau_list* list, size_t index);
KC_API kc_status kc_tableau_list_serialize(const kc_tableau_list* list, kc_format format, char** out);
KC_API void kc_tableau_list_free(kc_tableau_list* list);

/* Tables and verification ---------------------------------------------------- */

/* Shape -> sum t^{k-charge}. shape may be NULL. threads <= 0 means 1. */
KC_API kc_status kc_charge_table(int k, const int* weight, size_t weight_len, const int* shape, size_t shape_len,
                                 kc_formulation f, int threads, kc_format format, char** out);
/* Kostka-Foulkes polynomials from classical charge. shape may be NULL. */
KC_API kc_status kc_kostka_foulkes_table(const int* weight, size_t weight_len, const int* shape, size_t shape_len,
                                         kc_format format, char** out);

/* *passed is 1 when every check holds. */
KC_API kc_status kc_verify(const kc_verify_options* options, kc_format format, int* passed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* KCHARGE_H */
