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

#include "verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "analysis.hpp"
#include "permanent.hpp"
#include "scattering.hpp"

namespace bellport {

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck &c) { return c.passed; });
}

std::string VerifyReport::to_text() const {
    std::string out;
    for (const VerifyCheck &c : checks) {
        out += c.passed ? "PASS " : "FAIL ";
        out += c.name;
        if (!c.detail.empty()) {
            out += " (" + c.detail + ")";
        }
        out += "\n";
    }
    return out;
}

namespace {

std::string deviation_text(double value) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "worst deviation %.2e", value);
    return buf;
}

PhotonState random_photon(std::mt19937 &rng) {
    std::normal_distribution<double> gauss;
    double v[4];
    double norm2 = 0.0;
    for (double &x : v) {
        x = gauss(rng);
        norm2 += x * x;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    return PhotonState(Amp{v[0] * inv, v[1] * inv}, Amp{v[2] * inv, v[3] * inv});
}

InputConfiguration random_input(int ports, std::mt19937 &rng) {
    std::vector<PhotonState> photons;
    photons.reserve(static_cast<size_t>(ports));
    for (int i = 0; i < ports; i++) {
        photons.push_back(random_photon(rng));
    }
    return InputConfiguration(std::move(photons));
}

// Direct evaluation of the postselected amplitude as the explicit sum over
// all n! photon routings, with no permanent in sight.
Amp permutation_sum_amplitude(const TransitionMatrix &u, const InputConfiguration &input, LabelMask mask) {
    const int n = u.dim();
    std::vector<int> target(static_cast<size_t>(n));
    std::iota(target.begin(), target.end(), 0);
    Amp total{0.0, 0.0};
    do {
        Amp prod{1.0, 0.0};
        for (int i = 0; i < n; i++) {
            const int out_port = target[static_cast<size_t>(i)];
            const Label label = (mask >> out_port) & 1 ? Label::plus : Label::minus;
            prod *= u(out_port, i) * input.photon(i).amplitude(label);
        }
        total += prod;
    } while (std::next_permutation(target.begin(), target.end()));
    return total;
}

}  // namespace

VerifyReport run_verification(int max_n, const ComplexMatrix *external) {
    if (max_n > kOracleMaxPorts) {
        throw SizeLimitError("verification walks (2n)^n Fock terms and is limited to max_n = " +
                             std::to_string(kOracleMaxPorts));
    }
    if (max_n < 2) {
        throw ConfigurationError("verification needs max_n >= 2");
    }

    VerifyReport report;
    std::mt19937 rng(0x5eed);

    if (external != nullptr) {
        const double defect = unitarity_defect(*external);
        report.checks.push_back(
            {"configured unitary is unitary within 1e-10", defect <= 1e-10, deviation_text(defect)});
    }

    {
        double worst = 0.0;
        for (int n = 2; n <= max_n; n++) {
            worst = std::max(worst, unitarity_defect(TransitionMatrix::bell(n).matrix()));
        }
        report.checks.push_back({"multiport matrices unitary within 1e-10", worst <= 1e-10, deviation_text(worst)});
    }

    {
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        double worst = 0.0;
        for (int n = 1; n <= max_n; n++) {
            for (int rep = 0; rep < 20; rep++) {
                ComplexMatrix m(n);
                for (int r = 0; r < n; r++) {
                    for (int c = 0; c < n; c++) {
                        m(r, c) = Amp{unit(rng), unit(rng)};
                    }
                }
                const Amp naive = permanent_naive(m);
                worst = std::max(worst, std::abs(permanent(m) - naive) / (1.0 + std::abs(naive)));
            }
        }
        report.checks.push_back(
            {"permanent matches permutation-sum reference", worst <= 1e-10, deviation_text(worst)});
    }

    {
        double worst = 0.0;
        for (int n = 2; n <= std::min(max_n, 5); n++) {
            const auto u = TransitionMatrix::bell(n);
            for (int rep = 0; rep < 5; rep++) {
                const auto input = random_input(n, rng);
                const auto state = postselect(u, input);
                for (LabelMask mask = 0; mask < (LabelMask{1} << n); mask++) {
                    worst = std::max(worst,
                                     std::abs(state.amplitude(mask) - permutation_sum_amplitude(u, input, mask)));
                }
            }
        }
        report.checks.push_back(
            {"postselected amplitudes equal the direct routing sum", worst <= 1e-10, deviation_text(worst)});
    }

    {
        double worst_norm = 0.0;
        double worst_slice = 0.0;
        for (int n = 2; n <= max_n; n++) {
            const auto u = TransitionMatrix::bell(n);
            std::vector<InputConfiguration> inputs{InputConfiguration::w_input(n), random_input(n, rng)};
            for (const auto &input : inputs) {
                const auto full = full_fock_expansion(u, input);
                const auto state = postselect(u, input);
                double norm2 = 0.0;
                double slice_norm2 = 0.0;
                for (const auto &[occ, amp] : full) {
                    norm2 += std::norm(amp);
                    if (const auto mask = occ.one_per_port_mask()) {
                        slice_norm2 += std::norm(amp);
                        worst_slice = std::max(worst_slice, std::abs(amp - state.amplitude(*mask)));
                    }
                }
                worst_norm = std::max(worst_norm, std::abs(norm2 - 1.0));
                worst_slice = std::max(worst_slice, std::abs(slice_norm2 - state.norm_squared()));
            }
        }
        report.checks.push_back(
            {"full Fock expansion conserves the norm", worst_norm <= 1e-10, deviation_text(worst_norm)});
        report.checks.push_back({"one-photon-per-port slice matches postselect", worst_slice <= 1e-10,
                                 deviation_text(worst_slice)});
    }

    {
        bool ok = true;
        std::string detail = "all nonzero assignments keep the input label counts";
        for (int n = 2; n <= max_n && ok; n++) {
            const auto u = TransitionMatrix::bell(n);
            std::uniform_int_distribution<LabelMask> pick(0, (LabelMask{1} << n) - 1);
            for (int rep = 0; rep < 3 && ok; rep++) {
                const LabelMask in_mask = pick(rng);
                const auto state = postselect(u, InputConfiguration::from_label_string(label_string(in_mask, n)));
                for (const auto &[mask, amp] : state.terms()) {
                    if (std::popcount(mask) != std::popcount(in_mask)) {
                        ok = false;
                        detail = "label count changed for input " + label_string(in_mask, n);
                        break;
                    }
                }
            }
        }
        report.checks.push_back({"label counts conserved for basis inputs", ok, detail});
    }

    {
        double worst = 0.0;
        for (int n = 2; n <= max_n; n++) {
            const auto u = TransitionMatrix::bell(n);
            const auto state = postselect(u, InputConfiguration::w_input(n));
            if (n == 6) {
                worst = std::max(worst, state.norm_squared());  // forbidden size: must vanish
                continue;
            }
            const Amp beta1 = state.amplitude(1);
            for (int j = 0; j < n; j++) {
                const Amp expected = (n % 2 == 0 && j % 2 == 1) ? -beta1 : beta1;
                worst = std::max(worst, std::abs(state.amplitude(LabelMask{1} << j) - expected));
            }
        }
        report.checks.push_back(
            {"W amplitudes alternate as (-1)^j (constant for odd n)", worst <= 1e-10, deviation_text(worst)});
    }

    {
        double worst = 0.0;
        for (int n = 2; n <= std::min(max_n, 5); n++) {
            const auto u = TransitionMatrix::bell(n);
            const auto input = random_input(n, rng);
            const auto base = postselect(u, input);

            const Amp phase = std::polar(1.0, 0.83);
            std::vector<PhotonState> shifted;
            shifted.push_back(PhotonState(input.photon(0).amplitude(Label::plus) * phase,
                                          input.photon(0).amplitude(Label::minus) * phase));
            for (int i = 1; i < n; i++) {
                shifted.push_back(input.photon(i));
            }
            const auto moved = postselect(u, InputConfiguration(std::move(shifted)));

            worst = std::max(worst, std::abs(success_probability(moved) - success_probability(base)));
            for (const auto &[mask, amp] : base.terms()) {
                worst = std::max(worst, std::abs(moved.amplitude(mask) - amp * phase));
            }
        }
        report.checks.push_back(
            {"input phases contribute only a global phase", worst <= 1e-10, deviation_text(worst)});
    }

    return report;
}

}  // namespace bellport
