#include <stdio.h>
#include <string.h>

#include "psigroup.h"

#define CHECK(cond)                                             \
  do {                                                          \
    if (!(cond)) {                                              \
      fprintf(stderr, "line %d: %s\n", __LINE__, #cond);        \
      return 1;                                                 \
    }                                                           \
  } while (0)

int main(void) {
  PsgGroup *g = NULL;
  CHECK(psg_group_from_spec("sym:3", 0, &g) == PSG_STATUS_OK);

  uint64_t v = 0;
  CHECK(psg_psi(g, &v) == PSG_STATUS_OK && v == 13);
  size_t gen = 1;
  CHECK(psg_psi_rel(g, &gen, 1, &v) == PSG_STATUS_OK && v == 12);

  PsgVerifySummary s;
  CHECK(psg_verify(g, PSG_SUITE_THEOREM, &s) == PSG_STATUS_NOT_NILPOTENT);
  CHECK(psg_last_error() != NULL && strstr(psg_last_error(), "nilpotent") != NULL);
  CHECK(psg_verify(g, PSG_SUITE_CONJECTURE, &s) == PSG_STATUS_OK);
  CHECK(s.pairs_checked == 6 && s.violations == 0 && s.equalities == 2);
  psg_group_free(g);

  const uint32_t c3[9] = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  CHECK(psg_group_from_table(c3, 3, &g) == PSG_STATUS_OK);
  CHECK(psg_psi(g, &v) == PSG_STATUS_OK && v == 7);
  psg_group_free(g);

  CHECK(psg_group_from_spec("dihedral:0", 0, &g) == PSG_STATUS_INVALID_ARGUMENT);
  CHECK(psg_psi_cyclic(12, &v) == PSG_STATUS_OK && v == 77);
  printf("ok %s\n", psg_version());
  return 0;
}
