#include <stdio.h>
#include <string.h>

#include "diatomic.h"

static int expect(const char *got, const char *want) {
  if (strcmp(got, want) != 0) {
    fprintf(stderr, "got %s, want %s\n", got, want);
    return 1;
  }
  return 0;
}

int main(void) {
  int bad = 0;
  char *s = NULL;
  DiaDesign *d = NULL;

  if (dia_sdi(6, "51", &s) != DIA_STATUS_OK) return 2;
  bad |= expect(s, "12");
  dia_string_free(s);

  if (dia_assembly_inverse("7/3", &d) != DIA_STATUS_OK) return 2;
  if (dia_design_theta(d, &s) != DIA_STATUS_OK) return 2;
  bad |= expect(s, "25/32");
  dia_string_free(s);
  dia_design_free(d);

  if (dia_design_parse("12x", &d) != DIA_STATUS_PARSE) return 3;
  s = dia_last_error_message();
  if (s == NULL) return 3;
  dia_string_free(s);

  printf("%s\n", bad ? "FAIL" : "ok");
  return bad;
}
