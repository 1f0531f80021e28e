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

#include "scattering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "permanent.hpp"

namespace bellport {

std::string label_string(LabelMask mask, int ports) {
    std::string out(static_cast<size_t>(ports), '-');
    for (int j = 0; j < ports; j++) {
        if (mask & (LabelMask{1} << j)) {
            out[static_cast<size_t>(j)] = '+';
        }
    }
    return out;
}

LabelMask parse_label_string(std::string_view labels) {
    if (labels.empty() || labels.size() > 30) {
        throw ParseError("label string must have between 1 and 30 characters");
    }
    LabelMask mask = 0;
    for (size_t j = 0; j < labels.size(); j++) {
        if (labels[j] == '+') {
            mask |= LabelMask{1} << j;
        } else if (labels[j] != '-') {
            throw ParseError("label string may only contain '+' and '-'");
        }
    }
    return mask;
}

PhotonState::PhotonState(Amp plus, Amp minus) : plus_(plus), minus_(minus) {
    if (!std::isfinite(plus.real()) || !std::isfinite(plus.imag()) || !std::isfinite(minus.real()) ||
        !std::isfinite(minus.imag())) {
        throw ConfigurationError("photon amplitudes must be finite");
    }
    const double norm2 = std::norm(plus_) + std::norm(minus_);
    if (std::abs(norm2 - 1.0) > kNormTol) {
        throw ConfigurationError("photon state is not normalized: |a+|^2 + |a-|^2 = " + std::to_string(norm2));
    }
}

PhotonState PhotonState::basis(Label label) {
    return label == Label::plus ? PhotonState(Amp{1.0, 0.0}, Amp{0.0, 0.0}) : PhotonState(Amp{0.0, 0.0}, Amp{1.0, 0.0});
}

bool PhotonState::is_basis() const {
    return (plus_ == Amp{0.0, 0.0}) != (minus_ == Amp{0.0, 0.0});
}

InputConfiguration::InputConfiguration(std::vector<PhotonState> photons) : photons_(std::move(photons)) {
    if (photons_.empty()) {
        throw ConfigurationError("input configuration needs at least one photon");
    }
    if (photons_.size() > 30) {
        throw SizeLimitError("input configuration limited to 30 ports");
    }
}

InputConfiguration InputConfiguration::from_label_string(std::string_view labels) {
    const LabelMask mask = parse_label_string(labels);
    std::vector<PhotonState> photons;
    photons.reserve(labels.size());
    for (size_t j = 0; j < labels.size(); j++) {
        photons.push_back(PhotonState::basis((mask >> j) & 1 ? Label::plus : Label::minus));
    }
    return InputConfiguration(std::move(photons));
}

InputConfiguration InputConfiguration::w_input(int ports) {
    if (ports < 1) {
        throw InvalidDimensionError("port count must be positive");
    }
    std::vector<PhotonState> photons;
    photons.reserve(static_cast<size_t>(ports));
    photons.push_back(PhotonState::basis(Label::plus));
    for (int j = 1; j < ports; j++) {
        photons.push_back(PhotonState::basis(Label::minus));
    }
    return InputConfiguration(std::move(photons));
}

bool InputConfiguration::all_basis() const {
    return std::all_of(photons_.begin(), photons_.end(), [](const PhotonState &p) { return p.is_basis(); });
}

PostselectedState::PostselectedState(int ports, std::map<LabelMask, Amp> terms)
    : ports_(ports), terms_(std::move(terms)) {
    if (ports < 1 || ports > 30) {
        throw InvalidDimensionError("postselected state needs between 1 and 30 ports");
    }
    const LabelMask limit = (LabelMask{1} << ports) - 1;
    double norm2 = 0.0;
    for (auto it = terms_.begin(); it != terms_.end();) {
        const auto &[mask, amp] = *it;
        if (mask > limit) {
            throw InvalidIndexError("label assignment uses ports beyond the state size");
        }
        if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag())) {
            throw ConfigurationError("state amplitudes must be finite");
        }
        if (std::abs(amp) <= kSparsityFloor) {
            it = terms_.erase(it);
        } else {
            norm2 += std::norm(amp);
            ++it;
        }
    }
    if (norm2 > 1.0 + 1e-9) {
        throw ConfigurationError("state squared norm " + std::to_string(norm2) + " exceeds 1");
    }
}

double PostselectedState::norm_squared() const {
    double norm2 = 0.0;
    for (const auto &[mask, amp] : terms_) {
        norm2 += std::norm(amp);
    }
    return norm2;
}

Amp PostselectedState::amplitude(LabelMask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Amp{0.0, 0.0} : it->second;
}

namespace {

Amp assignment_amplitude(const TransitionMatrix &u, const InputConfiguration &input, LabelMask mask) {
    const int n = u.dim();
    ComplexMatrix m(n);
    for (int j = 0; j < n; j++) {
        const Label label = (mask >> j) & 1 ? Label::plus : Label::minus;
        for (int i = 0; i < n; i++) {
            m(j, i) = u(j, i) * input.photon(i).amplitude(label);
        }
    }
    return permanent(m);
}

// Next bit pattern with the same popcount (Gosper's hack).
LabelMask next_same_popcount(LabelMask v) {
    const LabelMask t = v | (v - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

}  // namespace

PostselectedState postselect(const TransitionMatrix &u, const InputConfiguration &input) {
    const int n = u.dim();
    if (n != input.ports()) {
        throw ConfigurationError("matrix has " + std::to_string(n) + " ports but input has " +
                                 std::to_string(input.ports()));
    }

    std::map<LabelMask, Amp> terms;
    auto consider = [&](LabelMask mask) {
        const Amp amp = assignment_amplitude(u, input, mask);
        if (std::abs(amp) > kInterferenceZeroThreshold) {
            terms.emplace(mask, amp);
        }
    };

    if (input.all_basis()) {
        // Labels are conserved: only assignments with the input's plus count
        // can be occupied.
        int plus_count = 0;
        for (int i = 0; i < n; i++) {
            if (input.photon(i).amplitude(Label::plus) != Amp{0.0, 0.0}) {
                plus_count++;
            }
        }
        if (plus_count == 0) {
            consider(0);
        } else {
            const LabelMask end = (LabelMask{1} << n) - 1;
            for (LabelMask mask = (LabelMask{1} << plus_count) - 1; mask <= end; mask = next_same_popcount(mask)) {
                consider(mask);
                if (mask == end) {
                    break;  // the all-ones pattern has no in-range successor
                }
            }
        }
    } else {
        for (LabelMask mask = 0; mask < (LabelMask{1} << n); mask++) {
            consider(mask);
        }
    }
    return PostselectedState(n, std::move(terms));
}

double success_probability(const PostselectedState &state) {
    return std::min(state.norm_squared(), 1.0);
}

PostselectedState normalize(const PostselectedState &state) {
    const double norm2 = state.norm_squared();
    if (norm2 <= 1e-20) {
        throw EmptyStateError("cannot normalize a state with zero norm");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    std::map<LabelMask, Amp> terms;
    for (const auto &[mask, amp] : state.terms()) {
        terms.emplace(mask, amp * inv);
    }
    return PostselectedState(state.ports(), std::move(terms));
}

int FockOccupation::total() const {
    int sum = 0;
    for (uint8_t c : counts) {
        sum += c;
    }
    return sum;
}

std::optional<LabelMask> FockOccupation::one_per_port_mask() const {
    LabelMask mask = 0;
    const int n = ports();
    for (int j = 0; j < n; j++) {
        const int plus = count(j, Label::plus);
        const int minus = count(j, Label::minus);
        if (plus + minus != 1) {
            return std::nullopt;
        }
        if (plus == 1) {
            mask |= LabelMask{1} << j;
        }
    }
    return mask;
}

namespace {

// Occupations are packed 3 bits per (port, label) slot while the (2N)^N
// walk runs; counts never exceed N <= 7.
void expand_photon(const TransitionMatrix &u, const InputConfiguration &input, int photon, Amp running,
                   uint64_t packed, std::unordered_map<uint64_t, Amp> &coeffs) {
    const int n = u.dim();
    if (photon == n) {
        coeffs[packed] += running;
        return;
    }
    for (int j = 0; j < n; j++) {
        for (Label label : {Label::plus, Label::minus}) {
            const Amp alpha = input.photon(photon).amplitude(label);
            if (alpha == Amp{0.0, 0.0}) {
                continue;
            }
            const int slot = 2 * j + (label == Label::minus ? 1 : 0);
            expand_photon(u, input, photon + 1, running * u(j, photon) * alpha, packed + (uint64_t{1} << (3 * slot)),
                          coeffs);
        }
    }
}

}  // namespace

std::map<FockOccupation, Amp> full_fock_expansion(const TransitionMatrix &u, const InputConfiguration &input) {
    const int n = u.dim();
    if (n != input.ports()) {
        throw ConfigurationError("matrix has " + std::to_string(n) + " ports but input has " +
                                 std::to_string(input.ports()));
    }
    if (n > kOracleMaxPorts) {
        throw SizeLimitError("full Fock expansion limited to " + std::to_string(kOracleMaxPorts) + " ports");
    }

    std::unordered_map<uint64_t, Amp> coeffs;
    expand_photon(u, input, 0, Amp{1.0, 0.0}, 0, coeffs);

    // Creation-operator monomials are not unit vectors; converting a term
    // with occupations {n_k} to the orthonormal Fock basis scales it by
    // sqrt(prod n_k!).
    std::map<FockOccupation, Amp> amplitudes;
    for (const auto &[packed, coeff] : coeffs) {
        FockOccupation occ(n);
        double factor = 1.0;
        for (int slot = 0; slot < 2 * n; slot++) {
            const auto c = static_cast<uint8_t>((packed >> (3 * slot)) & 0x7);
            occ.counts[static_cast<size_t>(slot)] = c;
            for (int k = 2; k <= c; k++) {
                factor *= static_cast<double>(k);
            }
        }
        amplitudes.emplace(std::move(occ), coeff * std::sqrt(factor));
    }
    return amplitudes;
}

}  // namespace bellport
