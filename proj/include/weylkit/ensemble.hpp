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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "weylkit/point.hpp"
#include "weylkit/schmidt.hpp"
#include "weylkit/unitary.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

/// A named straight segment between two chamber vertices: the 6 tetrahedron
/// edges plus the 9 perfect-entangler polyhedron edges. Reversed spellings
/// ("QP" vs "PQ") resolve to the same segment with opposite direction.
struct EdgeSpec {
  std::string name;
  WeylPoint from;
  WeylPoint to;
};

/// Vertex lookup: O, A1, A2, A3 (tetrahedron) and L, M, N, P, Q (edge
/// midpoints of the tetrahedron, vertices of the polyhedron).
WeylPoint chamber_vertex(const std::string& name);

/// The canonical edge table: OA1, OA2, OA3, A1A2, A1A3, A2A3 and
/// LM, LQ, LN, LP, MN, PQ, MA2, QA2, NP.
const std::vector<EdgeSpec>& canonical_edges();

/// The nine polyhedron edges only.
std::vector<EdgeSpec> polyhedron_edges();

/// Resolve an edge by name (either endpoint order). Throws UnknownEdgeError.
EdgeSpec edge_by_name(const std::string& name);

/// Linear interpolation along an edge, t in [0, 1].
WeylPoint edge_point(const EdgeSpec& e, double t);

/// One row of a sweep or scatter study.
struct ScatterRecord {
  WeylPoint point;
  SchmidtSpectrum spectrum;
  int schmidt_number = 0;
  double k_sch = 0.0;
  double l = 0.0;
  double ep = 0.0;
  bool is_pe = false;
};

/// Evaluate all measures for the canonical gate at a chamber point.
ScatterRecord record_at_point(const WeylPoint& c);

/// Haar-distributed SU(4) gates: complex Gaussian matrices orthonormalized
/// by Householder QR with the diagonal phase correction that restores
/// distribution invariance, then det-normalized. Deterministic per seed and
/// per index.
std::vector<Unitary4> sample_haar_su4(std::uint64_t n, std::uint64_t seed);

/// Points uniform w.r.t. Euclidean volume in the reduced tetrahedron
/// (barycentric sampling from sorted uniforms). Deterministic per seed.
std::vector<WeylPoint> sample_chamber_uniform(std::uint64_t n, std::uint64_t seed);

/// Local (single-qubit (x) single-qubit) gates kron(a, b) with a, b
/// independent Haar SU(2) factors. Deterministic per seed.
std::vector<Mat4> sample_local_su2su2(std::uint64_t n, std::uint64_t seed);

/// Grid sweep along an edge; steps >= 2 points at t = i/(steps-1),
/// records ordered by t.
std::vector<ScatterRecord> edge_sweep(const EdgeSpec& e, int steps);

enum class SampleMode { ChamberUniform, Haar };

/// (K_Sch, L) scatter over n random gates with two correlation statistics:
/// the covariance <K L> - <K><L> (the physicists' correlation function,
/// small because the L range is narrow) and the normalized Pearson
/// coefficient (close to 1: the measures trend together even though they
/// are not in one-to-one relation). Zero variance yields quiet NaNs.
struct ScatterResult {
  std::vector<ScatterRecord> records;
  double pearson = 0.0;
  double covariance = 0.0;
};
ScatterResult scatter_study(std::uint64_t n, std::uint64_t seed, SampleMode mode);

/// Pearson correlation with (n-1) normalization; quiet NaN when either
/// variance vanishes.
double pearson_correlation(std::span<const double> x, std::span<const double> y);

/// Sample covariance with (n-1) normalization.
double covariance(std::span<const double> x, std::span<const double> y);

}  // namespace weylkit
