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

#ifndef BELLPORT_CORE_SWEEP_HPP
#define BELLPORT_CORE_SWEEP_HPP

#include <vector>

namespace bellport {

/// One W-state preparation probability per port count.
struct SweepRecord {
    int n;
    double p_suc;
};

inline constexpr int kSweepMinPorts = 2;
inline constexpr int kSweepMaxPorts = 20;

/// Success probability of W-state preparation (plus in port 0, minus
/// elsewhere) through the n-port Bell multiport, for every n in
/// [n_min, n_max]. Probabilities below 1e-12 are genuine destructive
/// interference zeros, not roundoff.
std::vector<SweepRecord> sweep_w_success(int n_min, int n_max);

/// Least-squares fit of ln(p) = a - b*n over the records with p > 1e-12.
struct FitResult {
    double a;
    double b;
    double residual;  // sum of squared log-residuals
    std::vector<int> points_used;
};

/// Ordinary least squares on the log of the nonzero probabilities; zeros
/// carry no log and are excluded. Needs at least 3 usable points.
FitResult fit_exponential(const std::vector<SweepRecord> &records);

}  // namespace bellport

#endif
