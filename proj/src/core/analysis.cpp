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

#include "analysis.hpp"

#include <cmath>

namespace bellport {

PostselectedState canonical_state(CanonicalKind kind, int ports) {
    std::map<LabelMask, Amp> terms;
    switch (kind) {
        case CanonicalKind::w:
        case CanonicalKind::w_prime: {
            if (ports < 2) {
                throw ConfigurationError("W states need at least 2 ports");
            }
            if (ports > 30) {
                throw InvalidDimensionError("W states limited to 30 ports");
            }
            const LabelMask full = (LabelMask{1} << ports) - 1;
            const double mag = 1.0 / std::sqrt(static_cast<double>(ports));
            for (int j = 0; j < ports; j++) {
                const double sign = (ports % 2 == 0 && j % 2 == 1) ? -1.0 : 1.0;
                const LabelMask one = LabelMask{1} << j;
                const LabelMask mask = kind == CanonicalKind::w ? one : full ^ one;
                terms.emplace(mask, Amp{sign * mag, 0.0});
            }
            break;
        }
        case CanonicalKind::ghz4: {
            if (ports != 4) {
                throw ConfigurationError("the GHZ reference state is four-port only");
            }
            const double mag = 1.0 / std::sqrt(2.0);
            terms.emplace(parse_label_string("+-+-"), Amp{mag, 0.0});
            terms.emplace(parse_label_string("-+-+"), Amp{-mag, 0.0});
            break;
        }
        case CanonicalKind::double_singlet4: {
            if (ports != 4) {
                throw ConfigurationError("the double singlet reference state is four-port only");
            }
            terms.emplace(parse_label_string("++--"), Amp{0.5, 0.0});
            terms.emplace(parse_label_string("--++"), Amp{0.5, 0.0});
            terms.emplace(parse_label_string("+--+"), Amp{-0.5, 0.0});
            terms.emplace(parse_label_string("-++-"), Amp{-0.5, 0.0});
            break;
        }
    }
    return PostselectedState(ports, std::move(terms));
}

PostselectedState apply_local_pauli(const PostselectedState &state, int port, PauliAxis axis) {
    if (port < 0 || port >= state.ports()) {
        throw ConfigurationError("Pauli port out of range");
    }
    const LabelMask bit = LabelMask{1} << port;
    std::map<LabelMask, Amp> terms;
    for (const auto &[mask, amp] : state.terms()) {
        switch (axis) {
            case PauliAxis::z:
                terms.emplace(mask, (mask & bit) ? amp : -amp);
                break;
            case PauliAxis::x:
                terms.emplace(mask ^ bit, amp);
                break;
            case PauliAxis::y:
                terms.emplace(mask ^ bit, (mask & bit) ? amp * Amp{0.0, 1.0} : amp * Amp{0.0, -1.0});
                break;
        }
    }
    return PostselectedState(state.ports(), std::move(terms));
}

double fidelity(const PostselectedState &a, const PostselectedState &b) {
    if (a.ports() != b.ports()) {
        throw ConfigurationError("fidelity needs states on the same port count");
    }
    const double na = a.norm_squared();
    const double nb = b.norm_squared();
    if (na <= 1e-20 || nb <= 1e-20) {
        throw EmptyStateError("fidelity of a zero-norm state is undefined");
    }
    Amp overlap{0.0, 0.0};
    for (const auto &[mask, amp] : a.terms()) {
        overlap += std::conj(amp) * b.amplitude(mask);
    }
    return std::min(std::norm(overlap) / (na * nb), 1.0);
}

DecompositionResult decompose_general4(const InputConfiguration &input) {
    if (input.ports() != 4) {
        throw ConfigurationError("decomposition is defined for exactly 4 photons");
    }
    std::array<Amp, 4> p;
    std::array<Amp, 4> m;
    for (int i = 0; i < 4; i++) {
        p[static_cast<size_t>(i)] = input.photon(i).amplitude(Label::plus);
        m[static_cast<size_t>(i)] = input.photon(i).amplitude(Label::minus);
    }

    DecompositionResult r;
    r.gammas = {
        p[0] * p[1] * m[2] * m[3],  // gamma 1
        m[0] * m[1] * p[2] * p[3],  // gamma 2
        m[0] * p[1] * p[2] * m[3],  // gamma 3
        p[0] * m[1] * m[2] * p[3],  // gamma 4
        p[0] * m[1] * p[2] * m[3],  // gamma 5
        m[0] * p[1] * m[2] * p[3],  // gamma 6
        p[0] * m[1] * m[2] * m[3],  // gamma 7
        m[0] * p[1] * m[2] * m[3],  // gamma 8
        m[0] * m[1] * p[2] * m[3],  // gamma 9
        m[0] * m[1] * m[2] * p[3],  // gamma 10
        m[0] * p[1] * p[2] * p[3],  // gamma 11
        p[0] * m[1] * p[2] * p[3],  // gamma 12
        p[0] * p[1] * m[2] * p[3],  // gamma 13
        p[0] * p[1] * p[2] * m[3],  // gamma 14
    };
    const auto &g = r.gammas;

    r.c_double_singlet = Amp{0.0, 0.25} * (g[0] + g[1] - g[2] - g[3]);
    // The GHZ reference state's sign convention puts a leading minus here;
    // fixed by the reconstruction identity against the direct permanent
    // evaluation of the output.
    r.c_ghz = (-1.0 / (2.0 * std::sqrt(2.0))) * (g[4] - g[5]);
    r.c_w = 0.25 * (g[7] + g[9] - g[6] - g[8]);
    r.c_w_prime = 0.25 * (g[11] + g[13] - g[10] - g[12]);
    return r;
}

}  // namespace bellport
