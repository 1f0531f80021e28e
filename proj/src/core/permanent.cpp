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

#include "permanent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

namespace bellport {

Amp permanent(const ComplexMatrix &m) {
    const int n = m.dim();
    if (n > kPermanentMaxDim) {
        throw SizeLimitError("permanent limited to dimension " + std::to_string(kPermanentMaxDim) + ", got " +
                             std::to_string(n));
    }

    // perm(A) = (-1)^n * sum over nonempty column subsets S of
    //           (-1)^|S| * prod_i sum_{j in S} A(i, j).
    // Subsets walk the binary-reflected Gray sequence; each step toggles a
    // single column in the running row sums.
    std::vector<Amp> row_sums(static_cast<size_t>(n), Amp{0.0, 0.0});
    Amp total{0.0, 0.0};
    uint64_t gray_prev = 0;
    const uint64_t end = uint64_t{1} << n;
    for (uint64_t k = 1; k < end; k++) {
        const uint64_t gray = k ^ (k >> 1);
        const uint64_t toggled = gray ^ gray_prev;
        const int col = std::countr_zero(toggled);
        if (gray & toggled) {
            for (int i = 0; i < n; i++) {
                row_sums[static_cast<size_t>(i)] += m(i, col);
            }
        } else {
            for (int i = 0; i < n; i++) {
                row_sums[static_cast<size_t>(i)] -= m(i, col);
            }
        }
        gray_prev = gray;

        Amp prod{1.0, 0.0};
        for (int i = 0; i < n; i++) {
            prod *= row_sums[static_cast<size_t>(i)];
        }
        // popcount parity of gray(k) equals the parity of k itself.
        if (k & 1) {
            total -= prod;
        } else {
            total += prod;
        }
    }
    return (n % 2 == 0) ? total : -total;
}

Amp permanent_naive(const ComplexMatrix &m) {
    const int n = m.dim();
    if (n > kPermanentNaiveMaxDim) {
        throw SizeLimitError("naive permanent limited to dimension " + std::to_string(kPermanentNaiveMaxDim) +
                             ", got " + std::to_string(n));
    }
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Amp total{0.0, 0.0};
    do {
        Amp prod{1.0, 0.0};
        for (int i = 0; i < n; i++) {
            prod *= m(perm[static_cast<size_t>(i)], i);
        }
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace bellport
