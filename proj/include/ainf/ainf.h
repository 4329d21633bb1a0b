#ifndef AINF_AINF_H
#define AINF_AINF_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define AINF_API __attribute__((visibility("default")))
#else
#define AINF_API
#endif

typedef struct ainf_algebra ainf_algebra;
typedef struct ainf_complex ainf_complex;

typedef enum {
  AINF_OK = 0,
  AINF_ERR_PARSE = 1,    /* malformed JSON */
  AINF_ERR_INVALID = 2,  /* well-formed input that is not a valid structure */
  AINF_ERR_VERIFY = 3,   /* an operation needed identities that fail */
  AINF_ERR_ARG = 4,      /* bad argument: unknown name, null pointer, missing subalgebra */
  AINF_ERR_INTERNAL = 5
} ainf_status;

/* Message for the last failing call on this thread; never NULL. */
AINF_API const char* ainf_last_error(void);
/* Strings returned through char** out-parameters are owned by the caller. */
AINF_API void ainf_string_free(char* s);

/* Field descriptors are "q" or "fp:<p>"; NULL means "q". */
AINF_API ainf_status ainf_algebra_parse(const char* json, ainf_algebra** out);
AINF_API ainf_status ainf_algebra_fixture(const char* name, const char* field, ainf_algebra** out);
AINF_API void ainf_algebra_free(ainf_algebra* a);
AINF_API ainf_status ainf_algebra_to_json(const ainf_algebra* a, char** out);
AINF_API int ainf_algebra_size(const ainf_algebra* a);
/* The field descriptor of the algebra. */
AINF_API ainf_status ainf_algebra_field(const ainf_algebra* a, char** out);
/* Newline-separated fixture name patterns. */
AINF_API ainf_status ainf_fixture_names(char** out);

/* Each command writes a JSON report and sets *passed to 1 or 0. */
AINF_API ainf_status ainf_validate(const ainf_algebra* a, char** report, int* passed);
AINF_API ainf_status ainf_cohomology(const ainf_algebra* a, char** report, int* passed);
/* out may be NULL when only the report is wanted; times = 0 copies the input. */
AINF_API ainf_status ainf_suspend(const ainf_algebra* a, int times, ainf_algebra** out, char** report, int* passed);
/* lemma: trivial-extension, phi-sigma, split, double-suspension, lemma-alg, suspension, tensor, contractible. */
AINF_API ainf_status ainf_verify(const ainf_algebra* a, const char* lemma, char** report, int* passed);

AINF_API ainf_status ainf_complex_parse(const char* json, ainf_complex** out);
/* "Ball:<n>", "Simplex:<n>" or "Point". */
AINF_API ainf_status ainf_complex_fixture(const char* name, ainf_complex** out);
AINF_API void ainf_complex_free(ainf_complex* c);
AINF_API ainf_status ainf_complex_to_json(const ainf_complex* c, char** out);
/* C*(U) as an algebra document. */
AINF_API ainf_status ainf_complex_cochains(const ainf_complex* c, const char* field, ainf_algebra** out);
/* C*(U) inside C*(U) + C*(U, W)[1]. */
AINF_API ainf_status ainf_complex_pair(const ainf_complex* c, const char* field, ainf_algebra** out);
/* U+ glued to U- along W, with no subcomplex. */
AINF_API ainf_status ainf_complex_double(const ainf_complex* c, ainf_complex** out);
AINF_API ainf_status ainf_verify_sandwich(const ainf_complex* c, const char* field, char** report, int* passed);

#ifdef __cplusplus
}
#endif

#endif
