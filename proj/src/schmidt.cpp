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

#include "weylkit/schmidt.hpp"

#include <cmath>

#include "weylkit/decomp.hpp"
#include "weylkit/errors.hpp"

namespace weylkit {

namespace {

// |abcd> index 8a+4b+2c+d with a,c swapped
int t13_map(int idx) {
  const int a = (idx >> 3) & 1, b = (idx >> 2) & 1, c = (idx >> 1) & 1, d = idx & 1;
  return 8 * c + 4 * b + 2 * a + d;
}

double entropy_term(double p) {
  if (p <= 1e-12) return 0.0;
  return -p * std::log2(p);
}

}  // namespace

SchmidtSpectrum SchmidtSpectrum::from(const std::array<double, 4>& coeffs) {
  double sum2 = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (coeffs[i] < 0.0) throw OutOfRangeError("schmidt spectrum: negative coefficient");
    if (i > 0 && coeffs[i] > coeffs[i - 1] + 1e-12)
      throw OutOfRangeError("schmidt spectrum: not sorted descending");
    sum2 += coeffs[i] * coeffs[i];
  }
  if (std::abs(sum2 - 1.0) > 1e-10)
    throw OutOfRangeError("schmidt spectrum: squares do not sum to 1");
  return SchmidtSpectrum{coeffs};
}

SchmidtFactors schmidt_decompose(const Unitary4& u) {
  // realignment: R[2a+c][2b+d] = U[2a+b][2c+d]
  Mat4 r;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) r(2 * a + c, 2 * b + d) = u(2 * a + b, 2 * c + d);

  const Svd4 f = svd4(r);

  SchmidtFactors out;
  // normalize by the computed norm (= sqrt(tr U^dag U) = 2 for a unitary, up
  // to float drift); dividing by the literal 2 would leave sum s^2 a few ulps
  // off 1 and wreck the rank-deficient cases where exact zeros matter
  double norm2 = 0.0;
  for (int l = 0; l < 4; ++l) norm2 += f.sigma[l] * f.sigma[l];
  const double inv_norm = 1.0 / std::sqrt(norm2);
  std::array<double, 4> s;
  for (int l = 0; l < 4; ++l) s[l] = f.sigma[l] * inv_norm;
  out.spectrum = SchmidtSpectrum::from(s);

  const double rt2 = std::sqrt(2.0);
  for (int l = 0; l < 4; ++l) {
    Mat2 a, b;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        a(i, j) = rt2 * f.u(2 * i + j, l);
        b(i, j) = rt2 * std::conj(f.v(2 * i + j, l));
      }
    out.a_ops[l] = a;
    out.b_ops[l] = b;
  }
  return out;
}

int schmidt_number(const SchmidtSpectrum& sp, double eps) {
  int n = 0;
  for (double s : sp.s)
    if (s > eps) ++n;
  if (n == 3)
    throw DegenerateSpectrumError(
        "schmidt number: 3 coefficients above threshold (unitaries admit 1, 2 or 4)");
  return n;
}

double schmidt_strength(const SchmidtSpectrum& sp) {
  double k = 0.0;
  for (double s : sp.s) k += entropy_term(s * s);
  return k;
}

double linear_entropy_coeffs(const SchmidtSpectrum& sp) {
  double q = 0.0;
  for (double s : sp.s) q += s * s * s * s;
  return 1.0 - q;
}

const Mat16& permutation_t13() {
  static const Mat16 t = [] {
    Mat16 m;
    for (int j = 0; j < 16; ++j) m(t13_map(j), j) = 1.0;
    return m;
  }();
  return t;
}

double linear_entropy_permutation(const Unitary4& u) {
  const Mat16 w = kron(u.matrix(), u.matrix());
  // tr(W^dag T W T) contracted elementwise through the permutation indices
  cxd tr = 0.0;
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) tr += std::conj(w(i, j)) * w(t13_map(i), t13_map(j));
  if (std::abs(tr.imag()) > 1e-10)
    throw Error("linear entropy: permutation trace has imaginary residue");
  return 1.0 - tr.real() / 16.0;
}

double operator_concurrence(const SchmidtSpectrum& sp) {
  if (schmidt_number(sp) == 4)
    throw SchmidtRankError("concurrence: defined only for Schmidt number <= 2");
  return 2.0 * sp.s[0] * sp.s[1];
}

double strength_from_entropy_rank2(double l) {
  if (l < -1e-12 || l > 0.5 + 1e-12)
    throw OutOfRangeError("rank-2 strength: linear entropy outside [0, 1/2]");
  const double rad = std::max(0.0, 1.0 - 2.0 * l);
  const double root = std::sqrt(rad);
  const double p = 0.5 * (1.0 + root);
  const double q = 0.5 * (1.0 - root);
  return entropy_term(p) + entropy_term(q);
}

}  // namespace weylkit
