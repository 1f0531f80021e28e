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

#ifndef BELLPORT_CORE_ANALYSIS_HPP
#define BELLPORT_CORE_ANALYSIS_HPP

#include <array>

#include "scattering.hpp"

namespace bellport {

/// The named entangled states the Bell multiport prepares.
enum class CanonicalKind {
    /// Single plus among minuses, amplitudes 1/sqrt(n) with sign (-1)^j on
    /// port j for even n and all-equal sign for odd n.
    w,
    /// Label-swapped W: single minus among pluses, same sign pattern.
    w_prime,
    /// (|+-+-> - |-+-+>)/sqrt(2). Four ports only.
    ghz4,
    /// Product of two two-photon singlets across four ports:
    /// (|++--> + |--++> - |+--+> - |-++->)/2.
    double_singlet4,
};

/// The normalized reference state of the given kind on n ports.
PostselectedState canonical_state(CanonicalKind kind, int ports);

enum class PauliAxis { x, y, z };

/// Applies a single-port Pauli operation to the photon label at `port`:
/// x swaps the labels, y swaps with phases +/-i, z negates minus-label
/// amplitudes. Unitary, so the norm is untouched.
PostselectedState apply_local_pauli(const PostselectedState &state, int port, PauliAxis axis);

/// |<a|b>|^2 of the normalized states; global phases drop out.
double fidelity(const PostselectedState &a, const PostselectedState &b);

/// The four-photon output of the Bell multiport split over the canonical
/// basis {double singlet, GHZ, W, W'}. The gammas are the 14 balanced
/// products of input amplitudes the coefficients are built from; the
/// coefficient-weighted sum of canonical states reconstructs the
/// postselected output exactly.
struct DecompositionResult {
    Amp c_double_singlet;
    Amp c_ghz;
    Amp c_w;
    Amp c_w_prime;
    std::array<Amp, 14> gammas;
};

/// Closed-form decomposition of postselect(bell(4), input) over the four
/// canonical states, computed directly from the input amplitudes.
DecompositionResult decompose_general4(const InputConfiguration &input);

}  // namespace bellport

#endif
