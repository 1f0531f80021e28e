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

#ifndef BELLPORT_CORE_PERMANENT_HPP
#define BELLPORT_CORE_PERMANENT_HPP

#include "complex_matrix.hpp"

namespace bellport {

/// Largest matrix accepted by the Ryser evaluation (2^n work).
inline constexpr int kPermanentMaxDim = 30;
/// Largest matrix accepted by the permutation-sum reference (n! work).
inline constexpr int kPermanentNaiveMaxDim = 10;

/// Permanent via Ryser's inclusion-exclusion formula with Gray-code
/// incremental row sums, O(2^n * n). Column subsets are visited in the
/// fixed binary-reflected Gray sequence and accumulated serially, so the
/// result is bit-identical run to run.
Amp permanent(const ComplexMatrix &m);

/// Permanent as the literal sum over all n! permutations of products of
/// entries. Reference oracle for `permanent`; factorial cost.
Amp permanent_naive(const ComplexMatrix &m);

}  // namespace bellport

#endif
