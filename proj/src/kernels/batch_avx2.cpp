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

#include "weylkit/kernels.hpp"

#if defined(WEYLKIT_HAVE_AVX2)

#include <immintrin.h>

namespace weylkit::kernels {

// Four states per iteration, one per lane. Only plain mul/add intrinsics so
// every lane performs exactly the scalar reference arithmetic; the tail is
// delegated to the scalar kernel on a remainder view.

namespace {

StateBatch tail_view(const StateBatch& in, std::size_t from) {
  StateBatch t;
  t.resize(in.n - from);
  for (int j = 0; j < 4; ++j)
    for (std::size_t i = from; i < in.n; ++i) {
      t.re[j][i - from] = in.re[j][i];
      t.im[j][i - from] = in.im[j][i];
    }
  return t;
}

}  // namespace

void apply_unitary_avx2(const Mat4& u, const StateBatch& in, StateBatch& out) {
  out.resize(in.n);
  double ur[4][4], ui[4][4];
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 4; ++k) {
      ur[r][k] = u(r, k).real();
      ui[r][k] = u(r, k).imag();
    }

  const std::size_t main = in.n / 4 * 4;
  for (std::size_t i = 0; i < main; i += 4) {
    __m256d xr[4], xi[4];
    for (int k = 0; k < 4; ++k) {
      xr[k] = _mm256_loadu_pd(&in.re[k][i]);
      xi[k] = _mm256_loadu_pd(&in.im[k][i]);
    }
    for (int r = 0; r < 4; ++r) {
      __m256d acc_re = _mm256_setzero_pd();
      __m256d acc_im = _mm256_setzero_pd();
      for (int k = 0; k < 4; ++k) {
        const __m256d wr = _mm256_set1_pd(ur[r][k]);
        const __m256d wi = _mm256_set1_pd(ui[r][k]);
        acc_re = _mm256_add_pd(
            acc_re, _mm256_sub_pd(_mm256_mul_pd(wr, xr[k]), _mm256_mul_pd(wi, xi[k])));
        acc_im = _mm256_add_pd(
            acc_im, _mm256_add_pd(_mm256_mul_pd(wr, xi[k]), _mm256_mul_pd(wi, xr[k])));
      }
      _mm256_storeu_pd(&out.re[r][i], acc_re);
      _mm256_storeu_pd(&out.im[r][i], acc_im);
    }
  }

  if (main < in.n) {
    StateBatch tin = tail_view(in, main);
    StateBatch tout;
    apply_unitary_scalar(u, tin, tout);
    for (int j = 0; j < 4; ++j)
      for (std::size_t i = main; i < in.n; ++i) {
        out.re[j][i] = tout.re[j][i - main];
        out.im[j][i] = tout.im[j][i - main];
      }
  }
}

void state_entropy_avx2(const StateBatch& in, double* out) {
  const std::size_t main = in.n / 4 * 4;
  const __m256d two = _mm256_set1_pd(2.0);
  for (std::size_t i = 0; i < main; i += 4) {
    const __m256d r0 = _mm256_loadu_pd(&in.re[0][i]), i0 = _mm256_loadu_pd(&in.im[0][i]);
    const __m256d r1 = _mm256_loadu_pd(&in.re[1][i]), i1 = _mm256_loadu_pd(&in.im[1][i]);
    const __m256d r2 = _mm256_loadu_pd(&in.re[2][i]), i2 = _mm256_loadu_pd(&in.im[2][i]);
    const __m256d r3 = _mm256_loadu_pd(&in.re[3][i]), i3 = _mm256_loadu_pd(&in.im[3][i]);

    const __m256d det_re = _mm256_sub_pd(
        _mm256_sub_pd(_mm256_mul_pd(r0, r3), _mm256_mul_pd(i0, i3)),
        _mm256_sub_pd(_mm256_mul_pd(r1, r2), _mm256_mul_pd(i1, i2)));
    const __m256d det_im = _mm256_sub_pd(
        _mm256_add_pd(_mm256_mul_pd(r0, i3), _mm256_mul_pd(i0, r3)),
        _mm256_add_pd(_mm256_mul_pd(r1, i2), _mm256_mul_pd(i1, r2)));

    const __m256d e = _mm256_mul_pd(
        two, _mm256_add_pd(_mm256_mul_pd(det_re, det_re), _mm256_mul_pd(det_im, det_im)));
    _mm256_storeu_pd(&out[i], e);
  }

  if (main < in.n) {
    StateBatch tin = tail_view(in, main);
    state_entropy_scalar(tin, out + main);
  }
}

}  // namespace weylkit::kernels

#endif  // WEYLKIT_HAVE_AVX2
