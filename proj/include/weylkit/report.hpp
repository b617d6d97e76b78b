// Copyright 2026 The weylkit authors
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

#pragma once

#include <optional>
#include <string>

#include "weylkit/nonlocal.hpp"
#include "weylkit/schmidt.hpp"
#include "weylkit/unitary.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

/// Aggregate characterization of one gate: coordinates, invariants,
/// spectrum, the entanglement measures by every route, classification.
struct GateReport {
  std::string source;
  WeylPoint point;
  LocalInvariants invariants;
  SchmidtSpectrum spectrum;
  int schmidt_number = 0;
  double k_sch = 0.0;

  // the four linear-entropy routes and their max pairwise deviation
  double l_coeffs = 0.0;
  double l_permutation = 0.0;
  double l_point = 0.0;
  double l_invariants = 0.0;
  double l_max_deviation = 0.0;
  double l_swapped = 0.0;

  std::optional<double> concurrence;  // Schmidt number <= 2 only

  double ep_invariant = 0.0;
  double ep_linear = 0.0;
  std::optional<MonteCarloEstimate> ep_monte_carlo;

  GateClass gate_class;
};

/// Full analysis of a gate. `mc_samples` > 0 adds the Monte-Carlo
/// entangling-power estimate with the given seed.
GateReport analyze_gate(const Unitary4& u, const std::string& source,
                        std::uint64_t mc_samples = 0, std::uint64_t mc_seed = 0x5eed);

/// Parse the matrix JSON file format: {"matrix": [[ [re, im] x4 ] x4]}.
/// Throws ParseError on malformed input, NonUnitaryError when the matrix is
/// not unitary within 1e-8.
Unitary4 read_matrix_json(const std::string& path);

/// Serialized report: JSON with 12 significant digits, CSV with 9.
std::string report_to_json(const GateReport& r);
std::string report_to_csv(const GateReport& r);

/// printf-style %.*g formatting used by all emitters.
std::string format_sig(double v, int digits);

}  // namespace weylkit
