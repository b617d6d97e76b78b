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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "test_util.hpp"
#include "weylkit/ensemble.hpp"
#include "weylkit/kernels.hpp"

using namespace weylkit;
using namespace weylkit::kernels;

namespace {

StateBatch random_batch(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  StateBatch b;
  b.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double n2 = 0.0;
    cxd amp[4];
    for (auto& a : amp) {
      a = cxd(rng.next_gaussian(), rng.next_gaussian());
      n2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (int j = 0; j < 4; ++j) {
      b.re[j][i] = amp[j].real() * inv;
      b.im[j][i] = amp[j].imag() * inv;
    }
  }
  return b;
}

}  // namespace

TEST_CASE("batch apply matches the single-state reference") {
  const Unitary4 u = sample_haar_su4(1, 999)[0];
  const StateBatch in = random_batch(97, 1);
  StateBatch out;
  apply_unitary(u.matrix(), in, out);
  for (std::size_t i = 0; i < in.n; ++i) {
    Vector<4> psi;
    for (int j = 0; j < 4; ++j) psi[j] = cxd(in.re[j][i], in.im[j][i]);
    const Vector<4> want = u.matrix() * psi;
    for (int j = 0; j < 4; ++j) {
      CHECK(std::abs(out.re[j][i] - want[j].real()) <= 1e-15);
      CHECK(std::abs(out.im[j][i] - want[j].imag()) <= 1e-15);
    }
  }
}

TEST_CASE("batch entropy on known states") {
  StateBatch b;
  b.resize(2);
  // |00> and the Bell pair
  b.re[0][0] = 1.0;
  const double s = 1.0 / std::sqrt(2.0);
  b.re[0][1] = s;
  b.re[3][1] = s;
  std::vector<double> e(2);
  state_entropy(b, e.data());
  CHECK(e[0] == 0.0);
  CHECK(e[1] == doctest::Approx(0.5).epsilon(1e-14));
}

#if defined(WEYLKIT_HAVE_AVX2)
TEST_CASE("avx2 and scalar kernels agree bit for bit") {
  if (!backend_available(Backend::Avx2)) return;  // cpu without avx2

  const Unitary4 u = sample_haar_su4(1, 77)[0];
  // sizes straddle the simd width to cover the remainder tail
  for (std::size_t n : {1, 2, 3, 4, 5, 7, 8, 9, 16, 17, 64, 1000}) {
    const StateBatch in = random_batch(n, n);
    StateBatch out_scalar, out_avx2;
    apply_unitary_scalar(u.matrix(), in, out_scalar);
    apply_unitary_avx2(u.matrix(), in, out_avx2);
    for (int j = 0; j < 4; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(out_scalar.re[j][i] == out_avx2.re[j][i]);
        CHECK(out_scalar.im[j][i] == out_avx2.im[j][i]);
      }

    std::vector<double> e_scalar(n), e_avx2(n);
    state_entropy_scalar(out_scalar, e_scalar.data());
    state_entropy_avx2(out_scalar, e_avx2.data());
    for (std::size_t i = 0; i < n; ++i) CHECK(e_scalar[i] == e_avx2[i]);
  }
}

TEST_CASE("backend forcing and dispatch") {
  if (!backend_available(Backend::Avx2)) return;

  const Unitary4 u = sample_haar_su4(1, 78)[0];
  const StateBatch in = random_batch(33, 5);

  force_backend(Backend::Scalar);
  StateBatch out_a;
  apply_unitary(u.matrix(), in, out_a);

  force_backend(Backend::Avx2);
  StateBatch out_b;
  apply_unitary(u.matrix(), in, out_b);

  for (int j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < in.n; ++i) {
      CHECK(out_a.re[j][i] == out_b.re[j][i]);
      CHECK(out_a.im[j][i] == out_b.im[j][i]);
    }

  // restore the cpu-picked default
  force_backend(backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar);
}
#endif

TEST_CASE("backend name reporting") {
  CHECK(backend_name(Backend::Scalar) == "scalar");
  CHECK(backend_name(Backend::Avx2) == "avx2");
  CHECK(backend_available(Backend::Scalar));
}
