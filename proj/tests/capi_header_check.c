#include "ainf/ainf.h"

int ainf_header_compiles_as_c(void) {
  ainf_algebra* a = 0;
  ainf_status s = AINF_ERR_INTERNAL;
  (void)a;
  return (int)s;
}
