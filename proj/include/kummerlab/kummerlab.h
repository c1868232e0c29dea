#ifndef KUMMERLAB_H
#define KUMMERLAB_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(KUMMERLAB_BUILDING)
#define KL_API __attribute__((visibility("default")))
#else
#define KL_API
#endif

/* Every report call writes a NUL-terminated string into *out: the rendered
   report on KL_OK / KL_NEGATIVE, an error message otherwise. Release it with
   kl_string_free. Formats are "json" or "text". */

typedef enum {
  KL_OK = 0,
  KL_NEGATIVE = 1,      /* computed fine, the verdict is negative */
  KL_INPUT_ERROR = 2,   /* bad file, schema violation, singular curve, bad option */
  KL_INTERNAL_ERROR = 3
} kl_status;

typedef struct kl_curve kl_curve;

KL_API const char* kl_status_name(kl_status s);
KL_API void kl_string_free(char* s);

KL_API kl_status kl_curve_load(const char* path, kl_curve** curve, char** error);
KL_API kl_status kl_curve_parse(const char* json_text, kl_curve** curve, char** error);
KL_API void kl_curve_free(kl_curve* curve);
KL_API const char* kl_curve_id(const kl_curve* curve);

/* prime_index < 0 selects every relevant prime */
KL_API kl_status kl_invariants(const kl_curve* c, const char* format, char** out);
KL_API kl_status kl_tate(const kl_curve* c, int prime_index, const char* format, char** out);
KL_API kl_status kl_effmodel(const kl_curve* c, int prime_index, const char* format, char** out);
KL_API kl_status kl_admissible(const kl_curve* c, const char* format, char** out);
KL_API kl_status kl_pair(const kl_curve* a, const kl_curve* b, const char* format, char** out);
KL_API kl_status kl_checklist(const kl_curve* a, const kl_curve* b, const char* format, char** out);

/* fiber: "Z/2", "mu2" or "alpha2"; n < 0 and fix1 < 0 mean "not given" */
KL_API kl_status kl_predict(long p, const char* fiber, int n, int fix1, int fix2, const char* format, char** out);

/* graph and trace may be NULL; trace is "two-d8" or "four-d4" */
KL_API kl_status kl_lattice(const char* graph, int fundamental_cycle, const char* trace, const char* format,
                            char** out);

/* corpus_dir NULL or "" uses the shipped corpus */
KL_API kl_status kl_verify_paper(const char* corpus_dir, const char* filter, int threads, const char* format,
                                 char** out);
KL_API const char* kl_default_corpus_dir(void);

#ifdef __cplusplus
}
#endif

#endif
