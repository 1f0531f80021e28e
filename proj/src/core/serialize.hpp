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

#ifndef BELLPORT_CORE_SERIALIZE_HPP
#define BELLPORT_CORE_SERIALIZE_HPP

#include <optional>
#include <string>

#include "analysis.hpp"
#include "complex_matrix.hpp"
#include "scattering.hpp"
#include "sweep.hpp"

namespace bellport {

// Wire formats. Complex values are [re, im] pairs throughout; matrices are
// {"n": int, "entries": [[[re,im], ...], ...]} row-major and states are
// {"n": int, "terms": [{"labels": "+-...", "amp": [re, im]}, ...]}.
// Emission uses round-trip float formatting, so parse(emit(x)) == x.

std::string matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const std::string &json);

std::string state_to_json(const PostselectedState &state);
PostselectedState state_from_json(const std::string &json);

std::string decomposition_to_json(const DecompositionResult &d);

std::string fit_to_json(const FitResult &fit);

/// CSV with header "n,p_suc"; probabilities carry 15 significant digits.
std::string sweep_to_csv(const std::vector<SweepRecord> &records);
std::vector<SweepRecord> sweep_from_csv(const std::string &csv);

/// "p/q" when value is within 1e-12 of a rational with 1 <= q <= max_den,
/// e.g. 0.0625 -> "1/16". Probabilities of postselection events on small
/// multiports are exact small rationals, so this makes reports readable.
std::optional<std::string> as_small_rational(double value, int max_den = 64);

}  // namespace bellport

#endif
