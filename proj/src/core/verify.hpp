// Copyright 2026 The bellport authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BELLPORT_CORE_VERIFY_HPP
#define BELLPORT_CORE_VERIFY_HPP

#include <string>
#include <vector>

#include "complex_matrix.hpp"

namespace bellport {

struct VerifyCheck {
    std::string name;
    bool passed;
    std::string detail;  // worst deviation or failure description
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_passed() const;
    /// One "PASS name (detail)" / "FAIL name (detail)" line per check.
    std::string to_text() const;
};

/// Cross-checks the permanent kernel and the scattering pipeline against
/// brute-force references for all port counts up to max_n (at most 7: the
/// full Fock expansion walks (2n)^n terms). Deterministic: seeded random
/// inputs, so repeated runs produce identical reports. When `external` is
/// given (a transition matrix supplied by the caller), its unitarity is
/// checked as well.
VerifyReport run_verification(int max_n, const ComplexMatrix *external = nullptr);

}  // namespace bellport

#endif
