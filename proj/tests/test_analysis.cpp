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

#include <doctest.h>

#include <random>

#include "core/analysis.hpp"
#include "test_util.hpp"

using namespace bellport;
using bellport::testing::approx_amp;
using bellport::testing::random_input;

TEST_CASE("canonical W state on four ports") {
    const auto w = canonical_state(CanonicalKind::w, 4);
    REQUIRE(w.terms().size() == 4);
    for (int j = 0; j < 4; j++) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        CHECK(approx_amp(w.amplitude(LabelMask{1} << j), Amp{sign * 0.5, 0.0}));
    }
    CHECK(w.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("canonical W state on odd port counts has constant sign") {
    const auto w = canonical_state(CanonicalKind::w, 5);
    for (int j = 0; j < 5; j++) {
        CHECK(approx_amp(w.amplitude(LabelMask{1} << j), Amp{1.0 / std::sqrt(5.0), 0.0}));
    }
}

TEST_CASE("canonical W-prime state mirrors W with labels swapped") {
    const auto wp = canonical_state(CanonicalKind::w_prime, 4);
    REQUIRE(wp.terms().size() == 4);
    const LabelMask full = 0b1111;
    for (int j = 0; j < 4; j++) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        CHECK(approx_amp(wp.amplitude(full ^ (LabelMask{1} << j)), Amp{sign * 0.5, 0.0}));
    }
}

TEST_CASE("canonical GHZ and double singlet states") {
    const auto ghz = canonical_state(CanonicalKind::ghz4, 4);
    REQUIRE(ghz.terms().size() == 2);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(approx_amp(ghz.amplitude(parse_label_string("+-+-")), Amp{r, 0.0}));
    CHECK(approx_amp(ghz.amplitude(parse_label_string("-+-+")), Amp{-r, 0.0}));

    const auto ds = canonical_state(CanonicalKind::double_singlet4, 4);
    REQUIRE(ds.terms().size() == 4);
    CHECK(approx_amp(ds.amplitude(parse_label_string("++--")), Amp{0.5, 0.0}));
    CHECK(approx_amp(ds.amplitude(parse_label_string("--++")), Amp{0.5, 0.0}));
    CHECK(approx_amp(ds.amplitude(parse_label_string("+--+")), Amp{-0.5, 0.0}));
    CHECK(approx_amp(ds.amplitude(parse_label_string("-++-")), Amp{-0.5, 0.0}));
}

TEST_CASE("canonical states reject invalid dimensions") {
    CHECK_THROWS_AS(canonical_state(CanonicalKind::w, 1), ConfigurationError);
    CHECK_THROWS_AS(canonical_state(CanonicalKind::ghz4, 5), ConfigurationError);
    CHECK_THROWS_AS(canonical_state(CanonicalKind::double_singlet4, 2), ConfigurationError);
}

TEST_CASE("sigma_z on the even-index ports turns W into the all-plus form") {
    auto state = canonical_state(CanonicalKind::w, 4);
    state = apply_local_pauli(state, 1, PauliAxis::z);
    state = apply_local_pauli(state, 3, PauliAxis::z);
    for (int j = 0; j < 4; j++) {
        CHECK(approx_amp(state.amplitude(LabelMask{1} << j), Amp{0.5, 0.0}));
    }
}

TEST_CASE("sigma_x twice is the identity") {
    const auto state = postselect(TransitionMatrix::bell(4), InputConfiguration::from_label_string("+-+-"));
    const auto twice = apply_local_pauli(apply_local_pauli(state, 2, PauliAxis::x), 2, PauliAxis::x);
    for (const auto &[mask, amp] : state.terms()) {
        CHECK(approx_amp(twice.amplitude(mask), amp));
    }
}

TEST_CASE("sigma_x and sigma_y turn the GHZ output into the equal-label form") {
    auto state = canonical_state(CanonicalKind::ghz4, 4);
    state = apply_local_pauli(state, 0, PauliAxis::x);
    state = apply_local_pauli(state, 2, PauliAxis::y);
    REQUIRE(state.terms().size() == 2);
    const Amp all_minus = state.amplitude(parse_label_string("----"));
    const Amp all_plus = state.amplitude(parse_label_string("++++"));
    CHECK(std::abs(all_minus) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(approx_amp(all_minus, all_plus));  // equal amplitudes on the two equal-label terms
    CHECK(state.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("local Pauli operations preserve norm and success probability") {
    std::mt19937 rng(41);
    const auto state = postselect(TransitionMatrix::bell(4), random_input(4, rng));
    const double p = success_probability(state);
    for (const PauliAxis axis : {PauliAxis::x, PauliAxis::y, PauliAxis::z}) {
        for (int port = 0; port < 4; port++) {
            CHECK(success_probability(apply_local_pauli(state, port, axis)) == doctest::Approx(p).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(apply_local_pauli(state, 4, PauliAxis::x), ConfigurationError);
    CHECK_THROWS_AS(apply_local_pauli(state, -1, PauliAxis::z), ConfigurationError);
}

TEST_CASE("fidelity basics") {
    const auto w = canonical_state(CanonicalKind::w, 4);
    const auto ghz = canonical_state(CanonicalKind::ghz4, 4);
    CHECK(fidelity(w, w) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fidelity(w, ghz) == 0.0);

    const auto raw = postselect(TransitionMatrix::bell(4), InputConfiguration::w_input(4));
    CHECK(fidelity(normalize(raw), w) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(fidelity(raw, w) == doctest::Approx(1.0).epsilon(1e-10));  // normalization is internal

    const auto empty = postselect(TransitionMatrix::bell(4), InputConfiguration::from_label_string("++++"));
    CHECK_THROWS_AS(fidelity(empty, w), EmptyStateError);
    CHECK_THROWS_AS(fidelity(w, canonical_state(CanonicalKind::w, 3)), ConfigurationError);
}

TEST_CASE("the four canonical four-port states are mutually orthogonal") {
    const CanonicalKind kinds[4] = {CanonicalKind::w, CanonicalKind::w_prime, CanonicalKind::ghz4,
                                    CanonicalKind::double_singlet4};
    for (int a = 0; a < 4; a++) {
        for (int b = a + 1; b < 4; b++) {
            CHECK(fidelity(canonical_state(kinds[a], 4), canonical_state(kinds[b], 4)) == 0.0);
        }
    }
}

TEST_CASE("the multiport prepares the canonical W state for 2..10 ports") {
    for (int n = 2; n <= 10; n++) {
        const auto raw = postselect(TransitionMatrix::bell(n), InputConfiguration::w_input(n));
        if (n == 6) {
            CHECK(raw.empty());
            continue;
        }
        CHECK(fidelity(normalize(raw), canonical_state(CanonicalKind::w, n)) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("decomposition of the pure W input") {
    const auto r = decompose_general4(InputConfiguration::from_label_string("+---"));
    CHECK(approx_amp(r.gammas[6], Amp{1.0, 0.0}));  // gamma 7 is the only nonzero product
    for (size_t k = 0; k < r.gammas.size(); k++) {
        if (k != 6) {
            CHECK(approx_amp(r.gammas[k], Amp{0.0, 0.0}));
        }
    }
    CHECK(approx_amp(r.c_w, Amp{-0.25, 0.0}));
    CHECK(std::abs(r.c_w) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(approx_amp(r.c_double_singlet, Amp{0.0, 0.0}));
    CHECK(approx_amp(r.c_ghz, Amp{0.0, 0.0}));
    CHECK(approx_amp(r.c_w_prime, Amp{0.0, 0.0}));
}

TEST_CASE("decomposition of the pure GHZ input") {
    const auto r = decompose_general4(InputConfiguration::from_label_string("+-+-"));
    CHECK(approx_amp(r.gammas[4], Amp{1.0, 0.0}));  // gamma 5
    CHECK(std::abs(r.c_ghz) == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-12));
    CHECK(std::norm(r.c_ghz) == doctest::Approx(1.0 / 8).epsilon(1e-12));  // the 1/8 success probability
    CHECK(approx_amp(r.c_w, Amp{0.0, 0.0}));
    CHECK(approx_amp(r.c_w_prime, Amp{0.0, 0.0}));
    CHECK(approx_amp(r.c_double_singlet, Amp{0.0, 0.0}));
}

TEST_CASE("decomposition reconstructs the postselected output exactly") {
    std::mt19937 rng(42);
    const auto u = TransitionMatrix::bell(4);
    for (int rep = 0; rep < 100; rep++) {
        const auto input = random_input(4, rng);
        const auto state = postselect(u, input);
        const auto r = decompose_general4(input);

        std::map<LabelMask, Amp> recon;
        const auto add = [&recon](const PostselectedState &basis, Amp coeff) {
            for (const auto &[mask, amp] : basis.terms()) {
                recon[mask] += coeff * amp;
            }
        };
        add(canonical_state(CanonicalKind::double_singlet4, 4), r.c_double_singlet);
        add(canonical_state(CanonicalKind::ghz4, 4), r.c_ghz);
        add(canonical_state(CanonicalKind::w, 4), r.c_w);
        add(canonical_state(CanonicalKind::w_prime, 4), r.c_w_prime);

        for (LabelMask mask = 0; mask < 16; mask++) {
            const auto it = recon.find(mask);
            const Amp expected = it == recon.end() ? Amp{0.0, 0.0} : it->second;
            CHECK(approx_amp(state.amplitude(mask), expected, 1e-10));
        }
    }
}

TEST_CASE("decomposition needs exactly four photons") {
    CHECK_THROWS_AS(decompose_general4(InputConfiguration::from_label_string("+--")), ConfigurationError);
}
