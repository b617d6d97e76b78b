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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "test_util.hpp"
#include "weylkit/decomp.hpp"
#include "weylkit/ensemble.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/unitary.hpp"

#if defined(WEYLKIT_TEST_HAVE_EIGEN)
#include <Eigen/Dense>
#endif

using namespace weylkit;

namespace {

Mat4 reconstruct(const Svd4& f) {
  Mat4 s;
  for (int i = 0; i < 4; ++i) s(i, i) = f.sigma[i];
  return f.u * s * f.v.adjoint();
}

#if defined(WEYLKIT_TEST_HAVE_EIGEN)
Eigen::Matrix4cd to_eigen(const Mat4& m) {
  Eigen::Matrix4cd e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e(i, j) = m(i, j);
  return e;
}
#endif

}  // namespace

TEST_CASE("svd4 diagonal cases") {
  const Svd4 id = svd4(Mat4::identity());
  for (int i = 0; i < 4; ++i) CHECK(id.sigma[i] == doctest::Approx(1.0).epsilon(1e-14));

  Mat4 d;
  d(0, 0) = 2.0;
  d(1, 1) = 1.0;
  const Svd4 f = svd4(d);
  CHECK(f.sigma[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(f.sigma[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(f.sigma[2] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(f.sigma[3] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(reconstruct(f).max_abs_diff(d) <= 1e-13);
  CHECK(unitarity_error(f.u) <= 1e-13);  // completed basis despite rank 2
  CHECK(unitarity_error(f.v) <= 1e-13);
}

TEST_CASE("svd4 random matrices: contract and Hermitian-eigenvalue oracle") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Mat4 m = test::random_mat4(rng);
    const Svd4 f = svd4(m);

    CHECK(f.sigma[0] >= f.sigma[1]);
    CHECK(f.sigma[1] >= f.sigma[2]);
    CHECK(f.sigma[2] >= f.sigma[3]);
    CHECK(f.sigma[3] >= 0.0);
    CHECK(unitarity_error(f.u) <= 1e-12);
    CHECK(unitarity_error(f.v) <= 1e-12);
    CHECK(reconstruct(f).max_abs_diff(m) <= 1e-12 * m.frobenius_norm());

#if defined(WEYLKIT_TEST_HAVE_EIGEN)
    // independent oracle: sigma^2 are the eigenvalues of m^dag m
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(to_eigen(m.adjoint() * m));
    std::array<double, 4> expected;
    for (int i = 0; i < 4; ++i)
      expected[i] = std::sqrt(std::max(0.0, es.eigenvalues()(3 - i)));
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(f.sigma[i] - expected[i]) <= 1e-10 * (1.0 + expected[0]));
#endif
  }
}

TEST_CASE("svd4 singular values invariant under unitary factors") {
  Rng rng(13);
  const auto units = sample_haar_su4(20, 99);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat4 m = test::random_mat4(rng);
    const Svd4 base = svd4(m);
    const Svd4 rot = svd4(units[2 * trial].matrix() * m * units[2 * trial + 1].matrix());
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(base.sigma[i] - rot.sigma[i]) <= 1e-10 * (1.0 + base.sigma[0]));
  }
}

TEST_CASE("eigenphases of symmetric unitaries") {
  const auto zero = eigenphases_symmetric_unitary(Mat4::identity());
  for (double t : zero) CHECK(std::abs(t) <= 1e-12);

  Mat4 d;
  d(0, 0) = cxd(0, 1);
  d(1, 1) = cxd(0, 1);
  d(2, 2) = cxd(0, -1);
  d(3, 3) = cxd(0, -1);
  auto ph = eigenphases_symmetric_unitary(d);
  std::sort(ph.begin(), ph.end());
  const double h = std::numbers::pi / 2;
  CHECK(ph[0] == doctest::Approx(-h).epsilon(1e-12));
  CHECK(ph[1] == doctest::Approx(-h).epsilon(1e-12));
  CHECK(ph[2] == doctest::Approx(h).epsilon(1e-12));
  CHECK(ph[3] == doctest::Approx(h).epsilon(1e-12));
}

TEST_CASE("eigenphases input validation") {
  // unitary but not symmetric
  Mat4 rot;
  rot(0, 1) = 1.0;
  rot(1, 0) = -1.0;
  rot(2, 2) = 1.0;
  rot(3, 3) = 1.0;
  CHECK_THROWS_AS(eigenphases_symmetric_unitary(rot), NotSymmetricError);

  // symmetric but not unitary
  Mat4 big;
  big(0, 0) = 2.0;
  big(1, 1) = 1.0;
  big(2, 2) = 1.0;
  big(3, 3) = 1.0;
  CHECK_THROWS_AS(eigenphases_symmetric_unitary(big), NonUnitaryError);
}

TEST_CASE("eigenphases of synthetic symmetric unitaries") {
  // m = O diag(e^{i theta}) O^T for random real orthogonal O; includes
  // exactly-degenerate and nearly-degenerate phase sets, which force the
  // joint-diagonalization retry logic
  Rng rng(1717);
  const std::array<std::array<double, 4>, 4> phase_sets{{
      {0.3, 0.3, -1.2, 2.8},                   // exact pair
      {1.1, 1.1 + 1e-13, -0.4, 0.9},           // near pair
      {0.5, 0.5, 0.5, -2.6},                   // exact triple
      {-3.0, 3.0, 1.5707963267948966, -0.25},  // near wrap boundary
  }};
  for (const auto& phases : phase_sets) {
    for (int trial = 0; trial < 5; ++trial) {
      // random orthogonal from the QR of a real gaussian matrix
      std::array<std::array<double, 4>, 4> sym{};
      for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) sym[i][j] = sym[j][i] = rng.next_gaussian();
      const SymEig4 eig = jacobi_eigen_sym4(sym);

      Mat4 m;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          cxd sum = 0.0;
          for (int k = 0; k < 4; ++k)
            sum += eig.vectors[k][i] * std::polar(1.0, phases[k]) * eig.vectors[k][j];
          m(i, j) = sum;
        }

      auto got = eigenphases_symmetric_unitary(m);
      std::array<double, 4> want = phases;
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      for (int i = 0; i < 4; ++i)
        CHECK(std::abs(std::remainder(got[i] - want[i], 2 * std::numbers::pi)) <= 1e-9);

      // product of eigenvalues equals det(m)
      cxd prod = 1.0;
      for (double t : got) prod *= std::polar(1.0, t);
      CHECK(std::abs(prod - determinant(m)) <= 1e-9);
    }
  }
}

TEST_CASE("eigenphases of U_B^T U_B: det constraint and eigenvalue oracle") {
  const Mat4& q = magic_basis();
  for (const Unitary4& u : sample_haar_su4(25, 4242)) {
    const Mat4 ub = q.adjoint() * u.matrix() * q;
    const Mat4 m = ub.transpose() * ub;
    const auto ph = eigenphases_symmetric_unitary(m);

    // det 1 input: phases sum to 0 mod 2pi
    double sum = 0.0;
    for (double t : ph) sum += t;
    const double wrapped = std::remainder(sum, 2 * std::numbers::pi);
    CHECK(std::abs(wrapped) <= 1e-9);

#if defined(WEYLKIT_TEST_HAVE_EIGEN)
    // oracle: general complex eigensolver on the same matrix
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(to_eigen(m));
    std::array<double, 4> want, got = ph;
    for (int i = 0; i < 4; ++i) want[i] = std::arg(es.eigenvalues()(i));
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    for (int i = 0; i < 4; ++i) {
      const double d = std::remainder(got[i] - want[i], 2 * std::numbers::pi);
      CHECK(std::abs(d) <= 1e-9);
    }
#endif
  }
}
