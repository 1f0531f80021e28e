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

#ifndef BELLPORT_CORE_COMPLEX_MATRIX_HPP
#define BELLPORT_CORE_COMPLEX_MATRIX_HPP

#include <complex>
#include <vector>

#include "errors.hpp"

namespace bellport {

using Amp = std::complex<double>;

/// Square complex matrix with finite entries. Rows index output ports,
/// columns index input ports. All indices are zero-based.
class ComplexMatrix {
  public:
    explicit ComplexMatrix(int dim);
    ComplexMatrix(int dim, std::vector<Amp> entries);

    int dim() const { return dim_; }

    Amp operator()(int row, int col) const { return entries_[static_cast<size_t>(row) * dim_ + col]; }
    Amp &operator()(int row, int col) { return entries_[static_cast<size_t>(row) * dim_ + col]; }

    const std::vector<Amp> &entries() const { return entries_; }

  private:
    int dim_;
    std::vector<Amp> entries_;  // row-major, dim_*dim_
};

/// Max deviation of m^dagger * m from the identity, entrywise.
double unitarity_defect(const ComplexMatrix &m);

/// True iff the max-norm deviation of m^dagger * m from identity is <= tol.
bool check_unitary(const ComplexMatrix &m, double tol);

/// Submatrix with one row and one column deleted, order preserved.
ComplexMatrix reduced_matrix(const ComplexMatrix &m, int drop_row, int drop_col);

/// Unitary transition matrix of an n-port linear optics network. Entry
/// (j, i) is the amplitude for redirecting a photon from input port i to
/// output port j. Unitarity is validated on construction.
class TransitionMatrix {
  public:
    static constexpr double kUnitarityTol = 1e-10;

    explicit TransitionMatrix(ComplexMatrix m);

    /// The n-port discrete Fourier transform ("Bell multiport") matrix:
    /// entry (j, i) = exp(2*pi*I * j*i / n) / sqrt(n). Symmetric and unitary.
    ///
    /// The angle exponent j*i is reduced mod n before evaluation so equal
    /// powers of the root of unity are bit-identical; the destructive
    /// interference zeros this library reports depend on exact cancellation.
    static TransitionMatrix bell(int n);

    int dim() const { return m_.dim(); }
    Amp operator()(int row, int col) const { return m_(row, col); }
    const ComplexMatrix &matrix() const { return m_; }

  private:
    ComplexMatrix m_;
};

}  // namespace bellport

#endif
