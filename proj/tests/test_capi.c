/* Exercises the C interface from plain C. */
#include <stdio.h>
#include <string.h>

#include "kummerlab/kummerlab.h"

static int failures = 0;

#define EXPECT(cond)                                                \
  do {                                                              \
    if (!(cond)) {                                                  \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                   \
    }                                                               \
  } while (0)

static kl_curve* load(const char* name) {
  char path[1024];
  char* err = NULL;
  kl_curve* c = NULL;
  snprintf(path, sizeof path, "%s/%s.json", KUMMERLAB_TEST_CORPUS, name);
  EXPECT(kl_curve_load(path, &c, &err) == KL_OK);
  EXPECT(err == NULL);
  kl_string_free(err);
  return c;
}

int main(void) {
  char* out = NULL;
  char* err = NULL;
  kl_curve* plus = load("pinch_plus");
  kl_curve* minus = load("pinch_minus");
  kl_curve* reject = load("reject_gaussian");
  kl_curve* bad = NULL;
  kl_status s;

  EXPECT(strcmp(kl_curve_id(plus), "pinch_plus") == 0);
  EXPECT(strcmp(kl_status_name(KL_NEGATIVE), "") != 0);

  s = kl_admissible(plus, "json", &out);
  EXPECT(s == KL_OK);
  EXPECT(out && strstr(out, "\"pass\": true"));
  kl_string_free(out);

  s = kl_admissible(reject, "text", &out);
  EXPECT(s == KL_NEGATIVE);
  EXPECT(out && strstr(out, "val 6"));
  kl_string_free(out);

  s = kl_tate(plus, 0, "json", &out);
  EXPECT(s == KL_OK);
  EXPECT(out && strstr(out, "\"II\""));
  kl_string_free(out);

  s = kl_tate(plus, 7, "json", &out);
  EXPECT(s == KL_INPUT_ERROR);
  kl_string_free(out);

  s = kl_pair(plus, minus, "json", &out);
  EXPECT(s == KL_OK);
  kl_string_free(out);

  s = kl_checklist(plus, minus, "json", &out);
  EXPECT(s == KL_OK || s == KL_NEGATIVE);
  EXPECT(out && strstr(out, "tame cubic"));
  kl_string_free(out);

  s = kl_predict(2, "mu2", -1, -1, -1, "json", &out);
  EXPECT(s == KL_OK);
  EXPECT(out && strstr(out, "D4crit"));
  kl_string_free(out);

  s = kl_predict(2, "alpha2", -1, 1, 1, "json", &out);
  EXPECT(s == KL_INPUT_ERROR);
  kl_string_free(out);

  s = kl_lattice("E8", 1, NULL, "json", &out);
  EXPECT(s == KL_OK);
  kl_string_free(out);

  s = kl_lattice(NULL, 0, "two-d8", "text", &out);
  EXPECT(s == KL_OK);
  kl_string_free(out);

  s = kl_verify_paper(NULL, "pinch", 2, "text", &out);
  EXPECT(s == KL_OK);
  kl_string_free(out);

  s = kl_curve_parse("{\"field\": {\"kind\": \"rational\"}, \"curve\": {}}", &bad, &err);
  EXPECT(s == KL_INPUT_ERROR);
  EXPECT(bad == NULL);
  EXPECT(err && strstr(err, "singular"));
  kl_string_free(err);

  s = kl_curve_load("/nonexistent.json", &bad, &err);
  EXPECT(s == KL_INPUT_ERROR);
  kl_string_free(err);

  s = kl_curve_parse("{\"field\": {\"kind\": \"rational\"}, \"curve\": {\"a1\": 1, \"a6\": 1}}", &bad, &err);
  EXPECT(s == KL_OK);
  s = kl_invariants(bad, "json", &out);
  EXPECT(s == KL_OK);
  EXPECT(out && strstr(out, "-433"));
  kl_string_free(out);
  kl_curve_free(bad);

  kl_curve_free(plus);
  kl_curve_free(minus);
  kl_curve_free(reject);
  kl_curve_free(NULL);

  if (failures) fprintf(stderr, "%d C API checks failed\n", failures);
  else printf("C API: all checks pass\n");
  return failures ? 1 : 0;
}
