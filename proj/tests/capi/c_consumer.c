/* Plain C client: the header must compile as C and link against libpadyn. */
#include <stdio.h>

#include "padyn/padyn.h"

int main(void) {
  padyn_map* map = NULL;
  char* text = NULL;
  if (padyn_map_create(5, 1, 5, 32, &map) != PADYN_OK) return 1;
  if (padyn_report_fixed_points(map, PADYN_FORMAT_CSV, &text) != PADYN_OK) return 1;
  fputs(text, stdout);
  padyn_string_free(text);
  padyn_map_free(map);
  return 0;
}
