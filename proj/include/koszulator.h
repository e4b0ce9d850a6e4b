#ifndef KOSZULATOR_H
#define KOSZULATOR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define KZ_API __declspec(dllexport)
#else
#define KZ_API __attribute__((visibility("default")))
#endif

typedef enum kz_status {
  KZ_OK = 0,
  KZ_ERR_PARSE = 1,         /* session syntax */
  KZ_ERR_VALIDATION = 2,    /* ill-formed object in a session */
  KZ_ERR_ARGUMENT = 3,      /* bad command, argument or null pointer */
  KZ_ERR_BUDGET = 4,        /* degree or step budget exhausted */
  KZ_ERR_SEARCH_FAILED = 5, /* regular-sequence search ran out of retries */
  KZ_ERR_PRECONDITION = 6,  /* mathematical precondition violated */
  KZ_ERR_INVARIANT = 7,     /* internal verification failed */
  KZ_ERR_IO = 8,
  KZ_ERR_INTERNAL = 9
} kz_status;

typedef struct kz_session kz_session;
typedef struct kz_certificate kz_certificate;

/* Sessions. Parse errors set kz_last_error and its line/column. */
KZ_API kz_status kz_session_parse(const char* text, kz_session** out);
KZ_API kz_status kz_session_parse_file(const char* path, kz_session** out);
KZ_API void kz_session_free(kz_session* session);
KZ_API kz_status kz_session_set_seed(kz_session* session, uint64_t seed);
/* which: "degree", "steps" or "retries"; value > 0. */
KZ_API kz_status kz_session_set_budget(kz_session* session, const char* which, long value);

/* Runs a command. On failure the status is nonzero and *out still receives a certificate
   describing the failure (ok = 0); it stays NULL only for null pointer arguments. */
KZ_API kz_status kz_run_command(kz_session* session, const char* command, const char* const* args, size_t nargs,
                                kz_certificate** out);

/* 1 when every verdict in the certificate holds. */
KZ_API int kz_certificate_ok(const kz_certificate* cert);
/* Canonical JSON; owned by the certificate. */
KZ_API const char* kz_certificate_json(const kz_certificate* cert);
KZ_API const char* kz_certificate_summary(const kz_certificate* cert);
KZ_API kz_status kz_certificate_write(const kz_certificate* cert, const char* path);
KZ_API void kz_certificate_free(kz_certificate* cert);

/* Last error on the calling thread; line/column are 0 when not applicable. */
KZ_API const char* kz_last_error(void);
KZ_API int kz_last_error_line(void);
KZ_API int kz_last_error_column(void);
KZ_API const char* kz_status_name(kz_status status);
KZ_API const char* kz_version(void);

#ifdef __cplusplus
}
#endif

#endif
