/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "cobham/cobham.h"

static int failures = 0;

#define EXPECT(cond)                                                          \
  do {                                                                        \
    if (!(cond)) {                                                            \
      fprintf(stderr, "%s:%d: expectation failed: %s (last error: %s)\n",     \
              __FILE__, __LINE__, #cond, cobham_last_error());                \
      ++failures;                                                             \
    }                                                                         \
  } while (0)

static void test_numeration(void) {
  uint32_t* digits = NULL;
  size_t length = 0;
  EXPECT(cobham_encode("6", 2, &digits, &length) == COBHAM_OK);
  EXPECT(length == 3 && digits[0] == 1 && digits[1] == 1 && digits[2] == 0);
  cobham_digits_free(digits);

  EXPECT(cobham_encode("0", 5, &digits, &length) == COBHAM_OK);
  EXPECT(length == 0);
  cobham_digits_free(digits);

  EXPECT(cobham_encode("6", 1, &digits, &length) == COBHAM_INVALID_ARGUMENT);
  EXPECT(strlen(cobham_last_error()) > 0);
  EXPECT(cobham_encode("-6", 2, &digits, &length) == COBHAM_INVALID_ARGUMENT);

  const uint32_t word[] = {0, 0, 7};
  char* value = NULL;
  EXPECT(cobham_decode(word, 3, 10, &value) == COBHAM_OK);
  EXPECT(strcmp(value, "7") == 0);
  cobham_string_free(value);
  EXPECT(cobham_decode(word, 3, 5, &value) == COBHAM_INVALID_ARGUMENT);

  int independent = -1;
  uint64_t k = 0, l = 0;
  EXPECT(cobham_mult_independent(4, 8, &independent, &k, &l) == COBHAM_OK);
  EXPECT(independent == 0 && k == 3 && l == 2);
  EXPECT(cobham_mult_independent(2, 3, &independent, &k, &l) == COBHAM_OK);
  EXPECT(independent == 1);

  cobham_kronecker_query q = {"2", "1", 1, 1, 1, 1, 2, 3};
  EXPECT(cobham_kronecker_witness(&q, 0, &k, &l) == COBHAM_OK);
  EXPECT(k == 3 && l == 2);
  int ok = 0;
  EXPECT(cobham_kronecker_verify(&q, k, l, &ok) == COBHAM_OK && ok == 1);
  EXPECT(cobham_kronecker_verify(&q, k + 1, l, &ok) == COBHAM_OK && ok == 0);
  q.q = 8;
  EXPECT(cobham_kronecker_witness(&q, 0, &k, &l) == COBHAM_PRECONDITION);
  cobham_kronecker_query thin = {"20", "19", 5, 5, 5, 5, 2, 3};
  EXPECT(cobham_kronecker_witness(&thin, 1, &k, &l) == COBHAM_CAP_EXCEEDED);
  EXPECT(strcmp(cobham_status_name(COBHAM_CAP_EXCEEDED), "cap-exceeded") == 0);
}

static void test_sets(void) {
  cobham_set* ex = NULL;
  EXPECT(cobham_set_example1(&ex) == COBHAM_OK);
  EXPECT(cobham_set_base(ex) == 2);
  EXPECT(cobham_set_state_count(ex) == 3);

  int in = -1;
  EXPECT(cobham_set_member(ex, "5", &in) == COBHAM_OK && in == 1);
  EXPECT(cobham_set_member(ex, "8", &in) == COBHAM_OK && in == 0);

  char** values = NULL;
  size_t count = 0;
  EXPECT(cobham_set_enumerate(ex, 7, &values, &count) == COBHAM_OK);
  EXPECT(count == 7 && strcmp(values[0], "1") == 0 && strcmp(values[6], "17") == 0);
  cobham_strings_free(values, count);

  int dense = 0;
  EXPECT(cobham_set_right_dense(ex, &dense) == COBHAM_OK && dense == 1);

  char* text = NULL;
  EXPECT(cobham_set_serialize(ex, &text) == COBHAM_OK);
  cobham_set* back = NULL;
  EXPECT(cobham_set_parse(text, 1, &back) == COBHAM_OK);
  int same = 0;
  EXPECT(cobham_set_equivalent(ex, back, &same) == COBHAM_OK && same == 1);
  cobham_string_free(text);
  cobham_set_free(back);

  cobham_set* minimal = NULL;
  EXPECT(cobham_set_minimize(ex, &minimal) == COBHAM_OK);
  EXPECT(cobham_set_state_count(minimal) == 3);
  cobham_set_free(minimal);

  cobham_profile profile;
  EXPECT(cobham_set_profile(ex, 0, &profile) == COBHAM_OK);
  EXPECT(profile.preperiod == 0 && profile.period == 2);
  EXPECT(profile.cycle_bits[0] == 0 && profile.cycle_bits[1] == 1);
  EXPECT(profile.cofinite == 0);
  cobham_profile_release(&profile);
  EXPECT(cobham_set_profile(ex, 9, &profile) == COBHAM_INVALID_ARGUMENT);

  cobham_set* bad = NULL;
  EXPECT(cobham_set_parse("{", 1, &bad) == COBHAM_PARSE_ERROR);
  EXPECT(cobham_set_parse("{\"format_version\":1,\"base\":2,\"state_count\":1,\"initial\":0,"
                          "\"finals\":[],\"transitions\":[[0,0,0],[0,0,0]],"
                          "\"contains_zero\":false}",
                          1, &bad) == COBHAM_VALIDATION_ERROR);
  EXPECT(cobham_set_parse("{\"format_version\":1,\"base\":2,\"state_count\":1,\"initial\":0,"
                          "\"finals\":[0],\"transitions\":[[0,0,0],[0,1,0]],"
                          "\"contains_zero\":true}",
                          1, &bad) == COBHAM_LEADING_ZERO);
  EXPECT(cobham_set_read("/nonexistent/x.aut", 1, &bad) == COBHAM_IO_ERROR);
  EXPECT(cobham_set_member(NULL, "1", &in) == COBHAM_INVALID_ARGUMENT);

  cobham_set_free(ex);
}

static void test_witnesses(void) {
  cobham_set* ex = NULL;
  EXPECT(cobham_set_example1(&ex) == COBHAM_OK);
  cobham_options options = cobham_options_default();
  EXPECT(options.k_check == 8 && options.cap == 10000);

  cobham_interval_witness w;
  int found = 0, ok = 0;
  EXPECT(cobham_witness_empty(ex, &options, &found, &w) == COBHAM_OK && found == 1);
  EXPECT(strcmp(w.m, "1") == 0 && w.a == 1 && w.b == 2 && w.kind == COBHAM_INTERVAL_EMPTY);
  EXPECT(cobham_witness_verify(ex, &w, 10, &ok) == COBHAM_OK && ok == 1);
  cobham_interval_witness_release(&w);

  EXPECT(cobham_witness_nonempty(ex, "1", &options, &w) == COBHAM_OK);
  EXPECT(strcmp(w.m, "1") == 0 && w.a == 2 && w.b == 2 && w.kind == COBHAM_INTERVAL_NONEMPTY);
  EXPECT(cobham_witness_verify(ex, &w, 10, &ok) == COBHAM_OK && ok == 1);
  cobham_interval_witness_release(&w);

  cobham_syndetic_result r;
  EXPECT(cobham_syndetic_decide(ex, &options, &r) == COBHAM_OK);
  EXPECT(r.verdict == COBHAM_NOT_SYNDETIC && strcmp(r.witness.m, "1") == 0);
  cobham_syndetic_result_release(&r);

  cobham_gap_report g;
  EXPECT(cobham_gap_scan(ex, "128", &g) == COBHAM_OK);
  EXPECT(strcmp(g.max_gap, "33") == 0 && g.position_count == 1);
  EXPECT(strcmp(g.gap_starts[0], "31") == 0 && strcmp(g.gap_ends[0], "64") == 0);
  cobham_gap_report_release(&g);

  /* N in base 3 against Example 1. */
  cobham_set* n3 = NULL;
  EXPECT(cobham_set_parse("{\"format_version\":1,\"base\":3,\"state_count\":2,\"initial\":0,"
                          "\"finals\":[1],\"transitions\":[[0,1,1],[0,2,1],[1,0,1],[1,1,1],"
                          "[1,2,1]],\"contains_zero\":true}",
                          1, &n3) == COBHAM_OK);
  EXPECT(cobham_syndetic_decide(n3, &options, &r) == COBHAM_OK);
  EXPECT(r.verdict == COBHAM_SYNDETIC && r.C == 0 && strcmp(r.bound, "2") == 0);
  cobham_syndetic_result_release(&r);

  cobham_certificate c;
  EXPECT(cobham_cross_base_refute(n3, ex, &options, &found, &c) == COBHAM_OK && found == 1);
  EXPECT(cobham_certificate_verify(n3, ex, &c, &ok) == COBHAM_OK && ok == 1);
  EXPECT(cobham_set_member(ex, c.element, &ok) == COBHAM_OK && ok == 0);
  cobham_certificate_release(&c);

  EXPECT(cobham_cross_base_refute(ex, ex, &options, &found, &c) == COBHAM_PRECONDITION);

  cobham_set_free(n3);
  cobham_set_free(ex);
}

int main(void) {
  test_numeration();
  test_sets();
  test_witnesses();
  if (failures != 0) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return EXIT_FAILURE;
  }
  printf("C API: all checks passed\n");
  return EXIT_SUCCESS;
}
