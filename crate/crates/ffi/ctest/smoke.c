/* Smoke test for the C ABI: load a catalog group, compute a series, run a
 * verification suite, and exercise the error path. Exits nonzero on any
 * unexpected status. */

#include <stdio.h>
#include <string.h>

#include "mckay.h"

static int check(int ok, const char *what) {
  if (!ok) {
    char *msg = mckay_last_error_message();
    fprintf(stderr, "FAIL %s: %s\n", what, msg);
    mckay_string_free(msg);
    return 1;
  }
  return 0;
}

int main(void) {
  int failures = 0;

  MckayGraph *graph = NULL;
  failures += check(mckay_graph_from_group("I", &graph) == MCKAY_STATUS_OK,
                    "load binary icosahedral group");
  failures += check(mckay_graph_node_count(graph) == 9, "node count");

  char *series = NULL;
  failures += check(mckay_series_json(graph, "0", 13, &series) == MCKAY_STATUS_OK,
                    "invariant series");
  failures += check(strstr(series, "133") != NULL, "coefficient of t^12");
  mckay_string_free(series);

  char *json = NULL;
  failures += check(mckay_graph_to_json(graph, &json) == MCKAY_STATUS_OK, "export");
  MckayGraph *reloaded = NULL;
  failures += check(mckay_graph_from_json(json, &reloaded) == MCKAY_STATUS_OK, "reload");
  failures += check(mckay_graph_node_count(reloaded) == 9, "reloaded node count");
  mckay_string_free(json);
  mckay_graph_free(reloaded);
  mckay_graph_free(graph);

  MckayGraph *bogus = NULL;
  failures += check(mckay_graph_from_group("X7", &bogus) == MCKAY_STATUS_INVALID_ARGUMENT,
                    "bad group is rejected");

  char *report = NULL;
  failures += check(mckay_verify_json("chebyshev", 1e-9, &report) == MCKAY_STATUS_OK,
                    "chebyshev suite");
  mckay_string_free(report);

  if (failures == 0) {
    printf("c abi smoke test passed\n");
  }
  return failures;
}
