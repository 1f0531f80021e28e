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

#ifndef BELLPORT_CORE_SCATTERING_HPP
#define BELLPORT_CORE_SCATTERING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "complex_matrix.hpp"

namespace bellport {

/// Internal degree of freedom carried unchanged through the multiport
/// (polarisation, time bin or frequency; two orthogonal values).
enum class Label : uint8_t {
    plus,
    minus,
};

/// Assignments of one label per output port are packed into a bit mask:
/// bit j set means the photon in output port j carries `plus`.
using LabelMask = uint32_t;

/// "+--+" style rendering of an assignment, port 0 first.
std::string label_string(LabelMask mask, int ports);

/// Inverse of label_string. Accepts only '+' and '-'.
LabelMask parse_label_string(std::string_view labels);

/// Amplitudes with which a single photon occupies its plus/minus label.
/// Must be normalized; construction rejects anything off the unit sphere
/// instead of silently rescaling.
class PhotonState {
  public:
    static constexpr double kNormTol = 1e-9;

    PhotonState(Amp plus, Amp minus);

    static PhotonState basis(Label label);

    Amp amplitude(Label label) const { return label == Label::plus ? plus_ : minus_; }
    /// True when exactly one of the two amplitudes is exactly zero.
    bool is_basis() const;

  private:
    Amp plus_;
    Amp minus_;
};

/// One normalized photon per input port.
class InputConfiguration {
  public:
    explicit InputConfiguration(std::vector<PhotonState> photons);

    /// Basis-state input from a "+--..." string, port 0 first.
    static InputConfiguration from_label_string(std::string_view labels);
    /// The W-state input: plus in port 0, minus in all other ports.
    static InputConfiguration w_input(int ports);

    int ports() const { return static_cast<int>(photons_.size()); }
    const PhotonState &photon(int port) const { return photons_[static_cast<size_t>(port)]; }
    bool all_basis() const;

  private:
    std::vector<PhotonState> photons_;
};

/// The unnormalized projection of the multiport output onto the
/// one-photon-per-output-port subspace, stored sparsely as assignment ->
/// amplitude. Terms below kSparsityFloor are never stored and the squared
/// norm can not exceed 1 (it is a projection of a normalized state).
class PostselectedState {
  public:
    static constexpr double kSparsityFloor = 1e-14;

    PostselectedState(int ports, std::map<LabelMask, Amp> terms);

    int ports() const { return ports_; }
    const std::map<LabelMask, Amp> &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    double norm_squared() const;
    Amp amplitude(LabelMask mask) const;

  private:
    int ports_;
    std::map<LabelMask, Amp> terms_;
};

/// Amplitudes below this are treated as exact destructive-interference
/// zeros and dropped from postselected states.
inline constexpr double kInterferenceZeroThreshold = 1e-12;

/// Scatters one photon per input port through `u` and projects onto the
/// one-photon-per-output-port subspace.
///
/// The amplitude of the assignment with label l_j in output port j is the
/// permanent of the matrix M with M(j, i) = U(j, i) * alpha_i(l_j): the sum
/// over all ways of routing the N photons to the N distinct output ports.
/// For basis-state inputs the multiport conserves the label counts, so only
/// assignments with the input's label multiset are enumerated.
PostselectedState postselect(const TransitionMatrix &u, const InputConfiguration &input);

/// Squared norm of the unnormalized postselected state: the probability of
/// collecting one photon in every output port.
double success_probability(const PostselectedState &state);

/// Rescales to unit norm. Empty (or numerically zero) states have no
/// direction to keep and raise EmptyStateError.
PostselectedState normalize(const PostselectedState &state);

/// Photon counts per (output port, label) mode. Keys of the full output
/// distribution; total() always equals the photon number.
struct FockOccupation {
    std::vector<uint8_t> counts;  // index 2*port + (label == minus)

    explicit FockOccupation(int ports) : counts(static_cast<size_t>(2 * ports), 0) {}

    int ports() const { return static_cast<int>(counts.size() / 2); }
    int count(int port, Label label) const {
        return counts[static_cast<size_t>(2 * port + (label == Label::minus ? 1 : 0))];
    }
    int total() const;
    /// The label assignment, iff every port holds exactly one photon.
    std::optional<LabelMask> one_per_port_mask() const;

    auto operator<=>(const FockOccupation &) const = default;
};

inline constexpr int kOracleMaxPorts = 7;

/// Brute-force expansion of the full multiport output over the orthonormal
/// Fock basis, with no postselection: every way of independently redirecting
/// each photon is walked term by term ((2N)^N of them), and a term with
/// occupation numbers {n_k} picks up sqrt(prod n_k!) on conversion to the
/// orthonormal basis.
///
/// Serves as the independent oracle for postselect(): restricted to
/// one-photon-per-port occupations it must reproduce the postselected
/// amplitudes, and its total squared norm must be 1 (the multiport is
/// lossless).
std::map<FockOccupation, Amp> full_fock_expansion(const TransitionMatrix &u, const InputConfiguration &input);

}  // namespace bellport

#endif
