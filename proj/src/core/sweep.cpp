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

#include "sweep.hpp"

#include <cmath>
#include <string>

#include "scattering.hpp"

namespace bellport {

std::vector<SweepRecord> sweep_w_success(int n_min, int n_max) {
    if (n_min < kSweepMinPorts || n_max > kSweepMaxPorts || n_min > n_max) {
        throw ConfigurationError("sweep range must satisfy " + std::to_string(kSweepMinPorts) +
                                 " <= min <= max <= " + std::to_string(kSweepMaxPorts));
    }
    std::vector<SweepRecord> records;
    records.reserve(static_cast<size_t>(n_max - n_min + 1));
    for (int n = n_min; n <= n_max; n++) {
        const auto state = postselect(TransitionMatrix::bell(n), InputConfiguration::w_input(n));
        records.push_back({n, success_probability(state)});
    }
    return records;
}

FitResult fit_exponential(const std::vector<SweepRecord> &records) {
    FitResult fit{0.0, 0.0, 0.0, {}};
    double sx = 0.0, sy = 0.0;
    for (const auto &rec : records) {
        if (rec.p_suc > 1e-12) {
            fit.points_used.push_back(rec.n);
            sx += rec.n;
            sy += std::log(rec.p_suc);
        }
    }
    const auto count = static_cast<double>(fit.points_used.size());
    if (fit.points_used.size() < 3) {
        throw InsufficientDataError("exponential fit needs at least 3 nonzero probabilities, got " +
                                    std::to_string(fit.points_used.size()));
    }
    const double mean_x = sx / count;
    const double mean_y = sy / count;
    double sxx = 0.0, sxy = 0.0;
    for (const auto &rec : records) {
        if (rec.p_suc > 1e-12) {
            const double dx = rec.n - mean_x;
            sxx += dx * dx;
            sxy += dx * (std::log(rec.p_suc) - mean_y);
        }
    }
    if (sxx <= 0.0) {
        throw InsufficientDataError("exponential fit needs at least 2 distinct n values");
    }
    const double slope = sxy / sxx;
    fit.b = -slope;
    fit.a = mean_y - slope * mean_x;
    for (const auto &rec : records) {
        if (rec.p_suc > 1e-12) {
            const double err = std::log(rec.p_suc) - (fit.a - fit.b * rec.n);
            fit.residual += err * err;
        }
    }
    return fit;
}

}  // namespace bellport
