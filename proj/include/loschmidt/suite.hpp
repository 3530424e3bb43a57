// Copyright 2026 The Loschmidt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef LOSCHMIDT_SUITE_HPP
#define LOSCHMIDT_SUITE_HPP

#include <functional>
#include <string>
#include <vector>

namespace loschmidt {

/// Outcome of one end-to-end check. A check passes only when its numerical
/// condition holds and it finishes inside its time budget.
struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

// Each check is self-contained and deterministic.
CheckResult check_product_formula_cusps();  // 1
CheckResult check_oracle_equivalence();     // 2
CheckResult check_deep_quench_limit();      // 3
CheckResult check_thermodynamic_cusps();    // 4
CheckResult check_bose_site_revivals();     // 5
CheckResult check_scar_tower();             // 6
CheckResult check_property_suites();        // 7

struct NamedCheck {
  int id;
  const char* name;
  std::function<CheckResult()> run;
};

/// All checks in order.
std::vector<NamedCheck> suite_checks();
std::vector<CheckResult> run_suite();

/// One "[PASS]/[FAIL] id name (seconds) detail" line.
std::string format_check(const CheckResult& result);

}  // namespace loschmidt

#endif  // LOSCHMIDT_SUITE_HPP
