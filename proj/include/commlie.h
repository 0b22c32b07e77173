#ifndef COMMLIE_H
#define COMMLIE_H

/* C interface to the commlie engine. Every function that can fail returns a commlie_status;
 * the message of the most recent failure on the calling thread is available from
 * commlie_last_error(). Strings returned through char** are released with commlie_string_free. */

#include <stddef.h>

#if defined(_WIN32)
#define COMMLIE_API __declspec(dllexport)
#elif defined(__GNUC__)
#define COMMLIE_API __attribute__((visibility("default")))
#else
#define COMMLIE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum commlie_status {
    COMMLIE_OK = 0,
    COMMLIE_ERR_PARSE = 1,
    COMMLIE_ERR_PRECONDITION = 2,
    COMMLIE_ERR_DIMENSION = 3,
    COMMLIE_ERR_INVARIANT = 4,
    COMMLIE_ERR_INTERNAL = 5,
    COMMLIE_ERR_ARGUMENT = 6
} commlie_status;

typedef enum commlie_flavor { COMMLIE_SYM = 0, COMMLIE_EXT = 1, COMMLIE_TENSOR = 2 } commlie_flavor;

typedef struct commlie_report commlie_report;
typedef struct commlie_algebra commlie_algebra;

COMMLIE_API const char* commlie_version(void);
COMMLIE_API const char* commlie_status_string(commlie_status status);
/* Empty string when the last call on this thread succeeded. */
COMMLIE_API const char* commlie_last_error(void);
COMMLIE_API void commlie_string_free(char* s);

/* Process exit code for a finished run: 0 when every internal check passed, 1 for input
 * errors (parse, precondition, dimension, argument), 2 for invariant violations. */
COMMLIE_API int commlie_exit_code(commlie_status status, int checks_passed);

/* options_json: {"command": ..., "algebra": ..., "module": ..., "ideal": ..., "subalgebra": ...,
 * "flavors": [...], "max_degree": n, "jobs": n, "survey_dim": n, "up_to_iso": bool}. */
COMMLIE_API commlie_status commlie_run(const char* options_json, commlie_report** out);
COMMLIE_API int commlie_report_checks_passed(const commlie_report* report);
/* format is "json" or "csv". */
COMMLIE_API commlie_status commlie_report_render(const commlie_report* report, const char* format, char** out);
COMMLIE_API void commlie_report_free(commlie_report* report);

/* source is "catalog:NAME" or a file path. */
COMMLIE_API commlie_status commlie_algebra_load(const char* source, commlie_algebra** out);
COMMLIE_API commlie_status commlie_algebra_parse(const char* text, commlie_algebra** out);
COMMLIE_API size_t commlie_algebra_dim(const commlie_algebra* algebra);
COMMLIE_API commlie_status commlie_algebra_serialize(const commlie_algebra* algebra, char** out);
/* Writes dim H^n for n = 0..count-1 into betti. */
COMMLIE_API commlie_status commlie_algebra_betti(const commlie_algebra* algebra, const char* module, commlie_flavor flavor,
                                                 size_t* betti, size_t count);
COMMLIE_API void commlie_algebra_free(commlie_algebra* algebra);

#ifdef __cplusplus
}
#endif

#endif
