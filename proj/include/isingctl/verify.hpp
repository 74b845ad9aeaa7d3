// Copyright 2026 The isingctl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ISINGCTL_VERIFY_HPP
#define ISINGCTL_VERIFY_HPP

// Oracle-equivalence self checks: every closed form against an independent
// numerical route.

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace isingctl {

enum class VerifyLevel { fast, full };

VerifyLevel verify_level_from_string(const std::string& name);

struct SuiteReport {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  long checks = 0;
  bool passed = false;
};

/// Replacement closed forms, for negative controls.
struct VerifyOverrides {
  std::function<double(double theta, double b_plus, double j, double t)> f_n;
};

struct VerifyReport {
  std::vector<SuiteReport> suites;
  bool passed() const;
};

VerifyReport run_verify(VerifyLevel level, const VerifyOverrides& overrides = {});

/// One line per suite: "PASS name max_dev=... tol=... checks=...".
void print(const VerifyReport& report, std::ostream& out);

}  // namespace isingctl

#endif  // ISINGCTL_VERIFY_HPP
