// Copyright 2026 The pps-sim Authors
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

#ifndef PPS_VERIFY_H
#define PPS_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

namespace pps {

struct CheckResult {
    std::string name;
    bool passed;
    /// Worst observed deviation (or violation) for the check.
    double delta;
    double tolerance;
    std::string detail;
};

struct VerifyOptions {
    /// Negates the binary entropy for the duration of the run.
    bool inject_entropy_fault = false;
    uint64_t seed = 20260101;
};

/// Cross-checks between independent routes: dense simulation against closed
/// forms, closed-form information against re-derivations from joint tables,
/// purity conservation, PPT audits and SIMD/scalar kernel agreement.
std::vector<CheckResult> run_cross_checks(const VerifyOptions &options = {});

}  // namespace pps

#endif
