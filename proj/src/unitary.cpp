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

#include "weylkit/unitary.hpp"

#include <cmath>
#include <numbers>

#include "weylkit/decomp.hpp"
#include "weylkit/errors.hpp"

namespace weylkit {

namespace {

constexpr double kPi = std::numbers::pi;

Mat4 det_normalize(const Mat4& m) {
  const cxd det = determinant(m);
  // principal fourth root: argument in (-pi/4, pi/4]
  const double r = std::pow(std::abs(det), 0.25);
  const double ang = std::arg(det) / 4.0;
  const cxd root = std::polar(r, ang);
  Mat4 out = m;
  for (cxd& z : out.a) z /= root;
  return out;
}

}  // namespace

Unitary4 Unitary4::normalized(const Mat4& m, double tol) {
  if (!m.is_finite()) throw NonUnitaryError("unitary: non-finite entries");
  double err = unitarity_error(m);
  if (err > tol) throw NonUnitaryError("unitary: U^dagger U deviates from I by " +
                                       std::to_string(err));
  Mat4 clean = m;
  if (err > 1e-12) {
    // polar projection onto the unitary group: U_closest = u v^dagger
    const Svd4 f = svd4(m);
    clean = f.u * f.v.adjoint();
  }
  return Unitary4(det_normalize(clean));
}

Unitary4 Unitary4::trusted(const Mat4& m) {
  const double err = unitarity_error(m);
  if (err > 1e-10) throw NonUnitaryError("unitary: trusted input fails check");
  return Unitary4(det_normalize(m));
}

const Mat4& magic_basis() {
  static const Mat4 q = [] {
    const double s = 1.0 / std::sqrt(2.0);
    const cxd i(0.0, 1.0);
    Mat4 m;
    // rows |00>,|01>,|10>,|11>; columns are the four magic states
    m(0, 0) = s;
    m(3, 0) = s;
    m(0, 1) = -i * s;
    m(3, 1) = i * s;
    m(1, 2) = s;
    m(2, 2) = -s;
    m(1, 3) = -i * s;
    m(2, 3) = -i * s;
    return m;
  }();
  return q;
}

Unitary4 canonical_gate(const WeylPoint& c) {
  if (!std::isfinite(c.c1) || !std::isfinite(c.c2) || !std::isfinite(c.c3))
    throw OutOfRangeError("canonical_gate: non-finite coordinates");

  // joint magic-basis eigenphases of (1/2)(c1 XX + c2 YY + c3 ZZ)
  const std::array<double, 4> lambda{
      0.5 * (c.c1 - c.c2 + c.c3),
      0.5 * (-c.c1 + c.c2 + c.c3),
      -0.5 * (c.c1 + c.c2 + c.c3),
      0.5 * (c.c1 + c.c2 - c.c3),
  };
  const Mat4& q = magic_basis();
  Mat4 d;
  for (int j = 0; j < 4; ++j) d(j, j) = std::polar(1.0, lambda[j]);
  return Unitary4::trusted(q * d * q.adjoint());
}

Mat4 named_gate_matrix(NamedGate g) {
  Mat4 m;
  switch (g) {
    case NamedGate::Identity:
      return Mat4::identity();
    case NamedGate::Cnot:
      m(0, 0) = 1;
      m(1, 1) = 1;
      m(2, 3) = 1;
      m(3, 2) = 1;
      return m;
    case NamedGate::Dcnot:
      // |a,b> -> |b, a xor b>
      m(0, 0) = 1;
      m(3, 1) = 1;
      m(1, 2) = 1;
      m(2, 3) = 1;
      return m;
    case NamedGate::Swap:
      m(0, 0) = 1;
      m(2, 1) = 1;
      m(1, 2) = 1;
      m(3, 3) = 1;
      return m;
    case NamedGate::SqrtSwap: {
      // the square root of SWAP whose singlet eigenvalue is -i; this is the
      // representative whose invariants carry g1 = +i/4 (chamber point
      // [pi/4, pi/4, pi/4]; the +i root is the conjugate class)
      const cxd p(0.5, -0.5), n(0.5, 0.5);
      m(0, 0) = 1;
      m(1, 1) = p;
      m(1, 2) = n;
      m(2, 1) = n;
      m(2, 2) = p;
      m(3, 3) = 1;
      return m;
    }
  }
  throw OutOfRangeError("named_gate_matrix: bad enum");
}

Unitary4 named_gate(NamedGate g) { return Unitary4::normalized(named_gate_matrix(g)); }

std::string to_string(NamedGate g) {
  switch (g) {
    case NamedGate::Identity: return "IDENTITY";
    case NamedGate::Cnot: return "CNOT";
    case NamedGate::Dcnot: return "DCNOT";
    case NamedGate::Swap: return "SWAP";
    case NamedGate::SqrtSwap: return "SQRT_SWAP";
  }
  return "?";
}

NamedGate named_gate_from_string(const std::string& name) {
  if (name == "IDENTITY") return NamedGate::Identity;
  if (name == "CNOT") return NamedGate::Cnot;
  if (name == "DCNOT") return NamedGate::Dcnot;
  if (name == "SWAP") return NamedGate::Swap;
  if (name == "SQRT_SWAP") return NamedGate::SqrtSwap;
  throw ParseError("unknown gate name: " + name);
}

WeylPoint named_gate_point(NamedGate g) {
  switch (g) {
    case NamedGate::Identity: return {0.0, 0.0, 0.0};
    case NamedGate::Cnot: return {kPi / 2, 0.0, 0.0};
    case NamedGate::Dcnot: return {kPi / 2, kPi / 2, 0.0};
    case NamedGate::Swap: return {kPi / 2, kPi / 2, kPi / 2};
    case NamedGate::SqrtSwap: return {kPi / 4, kPi / 4, kPi / 4};
  }
  throw OutOfRangeError("named_gate_point: bad enum");
}

}  // namespace weylkit
