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

#include "weylkit/decomp.hpp"

#include <algorithm>
#include <cmath>

#include "weylkit/errors.hpp"

namespace weylkit {

namespace {

// column p of m, as a length-4 vector view helper
cxd col_dot(const Mat4& m, int p, int q) {
  cxd s = 0.0;
  for (int k = 0; k < 4; ++k) s += std::conj(m(k, p)) * m(k, q);
  return s;
}

double col_norm2(const Mat4& m, int p) {
  double s = 0.0;
  for (int k = 0; k < 4; ++k) s += std::norm(m(k, p));
  return s;
}

}  // namespace

Svd4 svd4(const Mat4& m) {
  Mat4 g = m;                    // columns become sigma_j * u_j
  Mat4 v = Mat4::identity();     // accumulated right rotations
  const double scale = m.frobenius_norm();
  const double off_tol = 1e-15;

  for (int sweep = 0; sweep < 40; ++sweep) {
    bool converged = true;
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const double app = col_norm2(g, p);
        const double aqq = col_norm2(g, q);
        const cxd apq = col_dot(g, p, q);
        const double gamma = std::abs(apq);
        if (gamma <= off_tol * scale * scale) continue;
        if (gamma <= 1e-30) continue;
        converged = false;

        // complex Jacobi rotation zeroing the (p,q) Gram coupling
        const cxd phase = apq / gamma;
        const double tau = (app - aqq) / (2.0 * gamma);
        double t;
        if (tau == 0.0) {
          t = 1.0;
        } else {
          t = -std::copysign(1.0, tau) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (int k = 0; k < 4; ++k) {
          const cxd gp = g(k, p), gq = g(k, q);
          g(k, p) = c * gp - s * std::conj(phase) * gq;
          g(k, q) = s * phase * gp + c * gq;
          const cxd vp = v(k, p), vq = v(k, q);
          v(k, p) = c * vp - s * std::conj(phase) * vq;
          v(k, q) = s * phase * vp + c * vq;
        }
      }
    }
    if (converged) break;
  }

  Svd4 out;
  std::array<int, 4> order{0, 1, 2, 3};
  std::array<double, 4> norms;
  for (int j = 0; j < 4; ++j) norms[j] = std::sqrt(col_norm2(g, j));
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return norms[x] > norms[y]; });

  const double rank_tol = 1e-13 * std::max(scale, 1e-300);
  int filled = 0;
  for (int j = 0; j < 4; ++j) {
    const int src = order[j];
    out.sigma[j] = norms[src];
    for (int k = 0; k < 4; ++k) out.v(k, j) = v(k, src);
    if (norms[src] > rank_tol) {
      for (int k = 0; k < 4; ++k) out.u(k, j) = g(k, src) / norms[src];
      filled = j + 1;
    }
  }

  // complete u to a unitary basis for (near-)zero singular values
  for (int j = filled; j < 4; ++j) {
    for (int cand = 0; cand < 4; ++cand) {
      Vector<4> w{};
      w[cand] = 1.0;
      for (int prev = 0; prev < j; ++prev) {
        cxd proj = 0.0;
        for (int k = 0; k < 4; ++k) proj += std::conj(out.u(k, prev)) * w[k];
        for (int k = 0; k < 4; ++k) w[k] -= proj * out.u(k, prev);
      }
      double n2 = 0.0;
      for (int k = 0; k < 4; ++k) n2 += std::norm(w[k]);
      if (n2 > 0.25) {
        const double inv = 1.0 / std::sqrt(n2);
        for (int k = 0; k < 4; ++k) out.u(k, j) = w[k] * inv;
        break;
      }
    }
  }
  return out;
}

SymEig4 jacobi_eigen_sym4(const std::array<std::array<double, 4>, 4>& m) {
  std::array<std::array<double, 4>, 4> a = m;
  std::array<std::array<double, 4>, 4> o{};
  for (int i = 0; i < 4; ++i) o[i][i] = 1.0;

  double scale = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) scale = std::max(scale, std::abs(a[i][j]));
  if (scale == 0.0) scale = 1.0;

  for (int sweep = 0; sweep < 50; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off = std::max(off, std::abs(a[p][q]));
    if (off <= 1e-15 * scale) break;

    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        if (std::abs(a[p][q]) <= 1e-300) continue;
        const double tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (int k = 0; k < 4; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 4; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < 4; ++k) {
          const double okp = o[k][p], okq = o[k][q];
          o[k][p] = c * okp - s * okq;
          o[k][q] = s * okp + c * okq;
        }
      }
    }
  }

  SymEig4 out;
  for (int i = 0; i < 4; ++i) out.values[i] = a[i][i];
  for (int c = 0; c < 4; ++c)
    for (int k = 0; k < 4; ++k) out.vectors[c][k] = o[k][c];
  return out;
}

std::array<double, 4> eigenphases_symmetric_unitary(const Mat4& m) {
  if (symmetry_error(m) > 1e-9)
    throw NotSymmetricError("eigenphases: matrix is not complex-symmetric");
  if (unitarity_error(m) > 1e-9)
    throw NonUnitaryError("eigenphases: matrix is not unitary");

  std::array<std::array<double, 4>, 4> x{}, y{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      // symmetrize to kill the (tiny) antisymmetric float residue
      x[i][j] = 0.5 * (m(i, j).real() + m(j, i).real());
      y[i][j] = 0.5 * (m(i, j).imag() + m(j, i).imag());
    }

  // x and y commute; a generic combination cos(g)x + sin(g)y has simple
  // spectrum and its eigenbasis diagonalizes both. Retry with a different
  // mixing angle if an accidental collision leaves residue behind.
  static constexpr std::array<double, 6> mix{0.7853981633974483, 0.3, 1.1,
                                             0.5235987755982988, 1.35, 0.05};
  for (const double g : mix) {
    const double cg = std::cos(g), sg = std::sin(g);
    std::array<std::array<double, 4>, 4> comb{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) comb[i][j] = cg * x[i][j] + sg * y[i][j];

    const SymEig4 eig = jacobi_eigen_sym4(comb);

    // d_re + i d_im must both come out diagonal in this basis
    std::array<double, 4> dre{}, dim{};
    double resid = 0.0;
    for (int p = 0; p < 4; ++p) {
      for (int q = 0; q < 4; ++q) {
        double ex = 0.0, ey = 0.0;
        for (int i = 0; i < 4; ++i) {
          double xi = 0.0, yi = 0.0;
          for (int j = 0; j < 4; ++j) {
            xi += x[i][j] * eig.vectors[q][j];
            yi += y[i][j] * eig.vectors[q][j];
          }
          ex += eig.vectors[p][i] * xi;
          ey += eig.vectors[p][i] * yi;
        }
        if (p == q) {
          dre[p] = ex;
          dim[p] = ey;
        } else {
          resid = std::max(resid, std::max(std::abs(ex), std::abs(ey)));
        }
      }
    }
    if (resid <= 1e-10) {
      std::array<double, 4> phases;
      for (int j = 0; j < 4; ++j) phases[j] = std::atan2(dim[j], dre[j]);
      return phases;
    }
  }
  throw Error("eigenphases: joint diagonalization did not converge");
}

}  // namespace weylkit
