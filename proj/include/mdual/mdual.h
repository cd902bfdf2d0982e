#ifndef MDUAL_MDUAL_H
#define MDUAL_MDUAL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MDUAL_API __declspec(dllexport)
#else
#define MDUAL_API __attribute__((visibility("default")))
#endif

typedef struct mdual_datum mdual_datum;

typedef enum mdual_status {
  MDUAL_OK = 0,
  MDUAL_ERR_SYNTAX = 1,    /* malformed spec or JSON text */
  MDUAL_ERR_SEMANTIC = 2,  /* well-formed but invalid spec */
  MDUAL_ERR_MATH = 3,      /* root datum / form / lattice failure */
  MDUAL_ERR_ARGUMENT = 4,  /* null pointer, index out of range */
  MDUAL_ERR_INTERNAL = 5
} mdual_status;

typedef enum mdual_verify { MDUAL_VERIFY_NONE = 0, MDUAL_VERIFY_FAST = 1, MDUAL_VERIFY_FULL = 2 } mdual_verify;
typedef enum mdual_format { MDUAL_FORMAT_JSON = 0, MDUAL_FORMAT_HUMAN = 1 } mdual_format;

/* Message and error-class name of the last failure on this thread. */
MDUAL_API const char* mdual_last_error(void);
MDUAL_API const char* mdual_last_error_kind(void);
MDUAL_API const char* mdual_version(void);

MDUAL_API mdual_status mdual_datum_from_spec(const char* text, mdual_datum** out);
MDUAL_API void mdual_datum_free(mdual_datum* d);

MDUAL_API size_t mdual_rank(const mdual_datum* d);
MDUAL_API size_t mdual_semisimple_rank(const mdual_datum* d);
/* Decimal strings; release with mdual_string_free. */
MDUAL_API mdual_status mdual_delta(const mdual_datum* d, size_t i, char** out);
MDUAL_API mdual_status mdual_dual_type(const mdual_datum* d, char** out);

/* *checks_failed (optional) receives the number of failed checks. */
MDUAL_API mdual_status mdual_report(const mdual_datum* d, mdual_verify verify, mdual_format format,
                                    char** out, int* checks_failed);

/* Parses a report and re-emits it in canonical form. */
MDUAL_API mdual_status mdual_json_normalize(const char* json, char** out);
MDUAL_API mdual_status mdual_catalog(char** out);
MDUAL_API void mdual_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
