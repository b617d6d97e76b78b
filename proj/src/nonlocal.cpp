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

#include "weylkit/nonlocal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "weylkit/errors.hpp"
#include "weylkit/kernels.hpp"
#include "weylkit/rng.hpp"

namespace weylkit {

TwoQubitPureState TwoQubitPureState::from(const Vector<4>& amplitudes) {
  double n2 = 0.0;
  for (const cxd& z : amplitudes) n2 += std::norm(z);
  if (std::abs(n2 - 1.0) > 1e-12)
    throw OutOfRangeError("pure state: amplitudes not normalized");
  return TwoQubitPureState{amplitudes};
}

double linear_entropy_point(const WeylPoint& c) {
  const double cc1 = std::cos(c.c1) * std::cos(c.c1);
  const double cc2 = std::cos(c.c2) * std::cos(c.c2);
  const double cc3 = std::cos(c.c3) * std::cos(c.c3);
  return 1.0 - 0.25 * (1.0 + cc1 * cc2 + cc2 * cc3 + cc3 * cc1);
}

double linear_entropy_invariants(const LocalInvariants& inv) {
  return 1.0 - 0.125 * (3.0 + 2.0 * std::abs(inv.g1) + inv.g2);
}

double linear_entropy_swapped(const LocalInvariants& inv) {
  return 1.0 - 0.125 * (3.0 + 2.0 * std::abs(inv.g1) - inv.g2);
}

double entangling_power_invariant(const LocalInvariants& inv) {
  return (2.0 / 9.0) * (1.0 - std::abs(inv.g1));
}

double entangling_power_linear(double l_u, double l_us) {
  return (4.0 / 9.0) * (l_u + l_us - 0.75);
}

double state_linear_entropy(const TwoQubitPureState& psi) {
  // 1 - tr(rho_A^2) = 2 det(rho_A) = 2 |det M|^2 for the amplitude matrix
  // M = [[psi0, psi1], [psi2, psi3]]; the det form avoids the cancellation
  // 1 - purity and is exactly zero on product data.
  const cxd det = psi.amp[0] * psi.amp[3] - psi.amp[1] * psi.amp[2];
  return 2.0 * std::norm(det);
}

namespace {

// Haar-random single-qubit state into (a0, a1)
inline void haar_qubit(Rng& rng, cxd& a0, cxd& a1) {
  const double g0 = rng.next_gaussian();
  const double g1 = rng.next_gaussian();
  const double g2 = rng.next_gaussian();
  const double g3 = rng.next_gaussian();
  const double inv = 1.0 / std::sqrt(g0 * g0 + g1 * g1 + g2 * g2 + g3 * g3);
  a0 = cxd(g0 * inv, g1 * inv);
  a1 = cxd(g2 * inv, g3 * inv);
}

}  // namespace

MonteCarloEstimate entangling_power_montecarlo(const Unitary4& u, std::uint64_t n,
                                               std::uint64_t seed) {
  if (n < 1) throw OutOfRangeError("monte carlo: need at least one sample");

  constexpr std::uint64_t kChunk = 4096;
  kernels::StateBatch in, out;
  std::vector<double> e(kChunk);

  double sum = 0.0, sum_sq = 0.0;
  for (std::uint64_t base = 0; base < n; base += kChunk) {
    const std::uint64_t count = std::min(kChunk, n - base);
    in.resize(count);
    for (std::uint64_t i = 0; i < count; ++i) {
      Rng rng = Rng::stream(seed, base + i);
      cxd a0, a1, b0, b1;
      haar_qubit(rng, a0, a1);
      haar_qubit(rng, b0, b1);
      const Vector<4> psi{a0 * b0, a0 * b1, a1 * b0, a1 * b1};
      for (int j = 0; j < 4; ++j) {
        in.re[j][i] = psi[j].real();
        in.im[j][i] = psi[j].imag();
      }
    }
    kernels::apply_unitary(u.matrix(), in, out);
    kernels::state_entropy(out, e.data());
    for (std::uint64_t i = 0; i < count; ++i) {
      sum += e[i];
      sum_sq += e[i] * e[i];
    }
  }

  MonteCarloEstimate est;
  est.samples = n;
  est.seed = seed;
  est.mean = sum / static_cast<double>(n);
  if (n > 1) {
    const double var =
        std::max(0.0, (sum_sq - static_cast<double>(n) * est.mean * est.mean) /
                          static_cast<double>(n - 1));
    est.std_error = std::sqrt(var / static_cast<double>(n));
  } else {
    est.std_error = std::numeric_limits<double>::quiet_NaN();
  }
  return est;
}

std::pair<double, double> perfect_entangler_entropy_bounds(
    std::span<const WeylPoint> points) {
  if (points.empty()) throw OutOfRangeError("entropy bounds: empty sample");
  double lo = 1.0, hi = 0.0;
  for (const WeylPoint& c : points) {
    const GateClass cls = classify(c, invariants_from_point(c));
    if (!cls.is_perfect_entangler)
      throw NotPerfectEntanglerError("entropy bounds: sample point is not a PE");
    const double l = linear_entropy_point(c);
    lo = std::min(lo, l);
    hi = std::max(hi, l);
  }
  return {lo, hi};
}

}  // namespace weylkit
