/* Compiles the public header as C. */
#include "adia/adia.h"

int main(void) {
  adia_check_params p;
  adia_check_params_init(&p);
  return adia_status_is_validation(ADIA_OK);
}
