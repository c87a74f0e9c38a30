/*
 * Copyright 2026 The atanbounds Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Compiled as C to keep the public header free of C++ constructs. */

#include <math.h>
#include <stdio.h>

#include "atanbounds/atanbounds.h"

int main(void) {
  atb_certified a;
  atb_report* report = NULL;
  atb_report_summary summary;
  int failures = 0;

  if (!(atb_lower_bound(1.0) < atan(1.0) && atan(1.0) < atb_upper_bound(1.0))) ++failures;
  if (atb_atan2_approx(0.0, 0.0, &a) != ATB_ERR_DOMAIN) ++failures;
  if (atb_certify_range(-1.0, 1.0, 64, NULL, &report) != ATB_OK) return 1;
  if (atb_report_summary_get(report, &summary) != ATB_OK || !summary.passed) ++failures;
  atb_report_free(report);

  printf("%s\n", failures == 0 ? "ok" : "failed");
  return failures == 0 ? 0 : 1;
}
