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

#include "complex_matrix.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace bellport {

namespace {

void require_finite(const std::vector<Amp> &entries) {
    for (const Amp &a : entries) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw ConfigurationError("matrix entries must be finite");
        }
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    if (dim < 1) {
        throw InvalidDimensionError("matrix dimension must be positive, got " + std::to_string(dim));
    }
    entries_.assign(static_cast<size_t>(dim) * dim, Amp{0.0, 0.0});
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Amp> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim < 1) {
        throw InvalidDimensionError("matrix dimension must be positive, got " + std::to_string(dim));
    }
    if (entries_.size() != static_cast<size_t>(dim) * dim) {
        throw InvalidDimensionError("matrix entry count does not match dimension " + std::to_string(dim));
    }
    require_finite(entries_);
}

double unitarity_defect(const ComplexMatrix &m) {
    const int n = m.dim();
    double worst = 0.0;
    for (int r = 0; r < n; r++) {
        for (int c = 0; c < n; c++) {
            Amp sum{0.0, 0.0};
            for (int k = 0; k < n; k++) {
                sum += std::conj(m(k, r)) * m(k, c);
            }
            if (r == c) {
                sum -= 1.0;
            }
            worst = std::max(worst, std::abs(sum));
        }
    }
    return worst;
}

bool check_unitary(const ComplexMatrix &m, double tol) {
    if (!(tol > 0.0)) {
        throw ConfigurationError("unitarity tolerance must be positive");
    }
    return unitarity_defect(m) <= tol;
}

ComplexMatrix reduced_matrix(const ComplexMatrix &m, int drop_row, int drop_col) {
    const int n = m.dim();
    if (n < 2) {
        throw InvalidDimensionError("cannot delete a row and column from a 1x1 matrix");
    }
    if (drop_row < 0 || drop_row >= n || drop_col < 0 || drop_col >= n) {
        throw InvalidIndexError("row/column to delete is out of range");
    }
    ComplexMatrix out(n - 1);
    for (int r = 0, rr = 0; r < n; r++) {
        if (r == drop_row) {
            continue;
        }
        for (int c = 0, cc = 0; c < n; c++) {
            if (c == drop_col) {
                continue;
            }
            out(rr, cc) = m(r, c);
            cc++;
        }
        rr++;
    }
    return out;
}

TransitionMatrix::TransitionMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (!check_unitary(m_, kUnitarityTol)) {
        throw ConfigurationError("transition matrix is not unitary within " + std::to_string(kUnitarityTol));
    }
}

TransitionMatrix TransitionMatrix::bell(int n) {
    if (n < 1) {
        throw InvalidDimensionError("port count must be positive, got " + std::to_string(n));
    }
    // One table entry per distinct power of the n-th root of unity.
    std::vector<Amp> roots(static_cast<size_t>(n));
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 0; k < n; k++) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        roots[static_cast<size_t>(k)] = Amp{std::cos(angle) * scale, std::sin(angle) * scale};
    }
    ComplexMatrix m(n);
    for (int j = 0; j < n; j++) {
        for (int i = 0; i < n; i++) {
            m(j, i) = roots[static_cast<size_t>((j * i) % n)];
        }
    }
    return TransitionMatrix(std::move(m));
}

}  // namespace bellport
