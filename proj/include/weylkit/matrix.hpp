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

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>

namespace weylkit {

using cxd = std::complex<double>;

/// Fixed-size dense complex matrix, row-major. The library only ever needs
/// 2x2 (single-qubit operators), 4x4 (two-qubit gates) and 16x16 (doubled
/// space for the permutation-trace entropy route).
template <int Rows, int Cols = Rows>
struct Matrix {
  static_assert(Rows > 0 && Cols > 0);
  std::array<cxd, static_cast<std::size_t>(Rows) * Cols> a{};

  static constexpr int rows = Rows;
  static constexpr int cols = Cols;

  constexpr cxd& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * Cols + c]; }
  constexpr const cxd& operator()(int r, int c) const {
    return a[static_cast<std::size_t>(r) * Cols + c];
  }

  static Matrix zero() { return Matrix{}; }

  static Matrix identity()
    requires(Rows == Cols)
  {
    Matrix m;
    for (int i = 0; i < Rows; ++i) m(i, i) = 1.0;
    return m;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix r;
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    Matrix r;
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
  }
  friend Matrix operator*(const cxd& s, const Matrix& x) {
    Matrix r;
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = s * x.a[i];
    return r;
  }
  friend Matrix operator*(const Matrix& x, const cxd& s) { return s * x; }

  Matrix<Cols, Rows> transpose() const {
    Matrix<Cols, Rows> r;
    for (int i = 0; i < Rows; ++i)
      for (int j = 0; j < Cols; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix conj() const {
    Matrix r;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = std::conj(a[i]);
    return r;
  }

  Matrix<Cols, Rows> adjoint() const { return conj().transpose(); }

  cxd trace() const
    requires(Rows == Cols)
  {
    cxd t = 0.0;
    for (int i = 0; i < Rows; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const cxd& z : a) s += std::norm(z);
    return std::sqrt(s);
  }

  /// max |entry| of (this - other)
  double max_abs_diff(const Matrix& other) const {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - other.a[i]));
    return m;
  }

  bool is_finite() const {
    for (const cxd& z : a)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }
};

template <int R, int K, int C>
Matrix<R, C> operator*(const Matrix<R, K>& x, const Matrix<K, C>& y) {
  Matrix<R, C> r;
  for (int i = 0; i < R; ++i)
    for (int k = 0; k < K; ++k) {
      const cxd xik = x(i, k);
      for (int j = 0; j < C; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;
using Mat16 = Matrix<16>;

template <int N>
using Vector = std::array<cxd, static_cast<std::size_t>(N)>;

template <int R, int C>
Vector<R> operator*(const Matrix<R, C>& m, const Vector<C>& v) {
  Vector<R> r{};
  for (int i = 0; i < R; ++i) {
    cxd acc = 0.0;
    for (int j = 0; j < C; ++j) acc += m(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

/// Kronecker product; output dimensions multiply.
template <int R1, int C1, int R2, int C2>
Matrix<R1 * R2, C1 * C2> kron(const Matrix<R1, C1>& x, const Matrix<R2, C2>& y) {
  Matrix<R1 * R2, C1 * C2> r;
  for (int i1 = 0; i1 < R1; ++i1)
    for (int j1 = 0; j1 < C1; ++j1) {
      const cxd s = x(i1, j1);
      for (int i2 = 0; i2 < R2; ++i2)
        for (int j2 = 0; j2 < C2; ++j2) r(i1 * R2 + i2, j1 * C2 + j2) = s * y(i2, j2);
    }
  return r;
}

/// Determinant by in-place LU with partial pivoting.
template <int N>
cxd determinant(const Matrix<N>& m) {
  Matrix<N> lu = m;
  cxd det = 1.0;
  for (int k = 0; k < N; ++k) {
    int piv = k;
    double best = std::abs(lu(k, k));
    for (int i = k + 1; i < N; ++i)
      if (std::abs(lu(i, k)) > best) {
        best = std::abs(lu(i, k));
        piv = i;
      }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < N; ++j) std::swap(lu(k, j), lu(piv, j));
      det = -det;
    }
    det *= lu(k, k);
    for (int i = k + 1; i < N; ++i) {
      const cxd f = lu(i, k) / lu(k, k);
      for (int j = k + 1; j < N; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return det;
}

/// max per-entry deviation of m^dagger m from the identity
template <int N>
double unitarity_error(const Matrix<N>& m) {
  const Matrix<N> g = m.adjoint() * m;
  return g.max_abs_diff(Matrix<N>::identity());
}

template <int N>
double symmetry_error(const Matrix<N>& m) {
  double e = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) e = std::max(e, std::abs(m(i, j) - m(j, i)));
  return e;
}

inline Mat2 pauli_x() { return Mat2{{cxd(0), cxd(1), cxd(1), cxd(0)}}; }
inline Mat2 pauli_y() { return Mat2{{cxd(0), cxd(0, -1), cxd(0, 1), cxd(0)}}; }
inline Mat2 pauli_z() { return Mat2{{cxd(1), cxd(0), cxd(0), cxd(-1)}}; }

}  // namespace weylkit
