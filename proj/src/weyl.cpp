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

#include "weylkit/weyl.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "weylkit/decomp.hpp"
#include "weylkit/errors.hpp"

namespace weylkit {

namespace {

constexpr double kPi = std::numbers::pi;

double mod_pi(double x) {
  double r = std::fmod(x, kPi);
  if (r < 0.0) r += kPi;
  // snap the wrap boundary so pi-eps noise does not split representatives
  if (kPi - r < 1e-12) r = 0.0;
  return r == 0.0 ? 0.0 : r;  // flush -0.0
}

bool lex_less(const WeylPoint& a, const WeylPoint& b) {
  if (a.c1 != b.c1) return a.c1 < b.c1;
  if (a.c2 != b.c2) return a.c2 < b.c2;
  return a.c3 < b.c3;
}

double invariant_distance(const LocalInvariants& x, const LocalInvariants& y) {
  return std::abs(x.g1 - y.g1) + std::abs(x.g2 - y.g2);
}

}  // namespace

Mat4 magic_transform(const Unitary4& u) {
  const Mat4& q = magic_basis();
  return q.adjoint() * u.matrix() * q;
}

LocalInvariants invariants_from_unitary(const Unitary4& u) {
  const Mat4 ub = magic_transform(u);
  const Mat4 m = ub.transpose() * ub;
  const cxd tr = m.trace();
  const cxd tr2 = (m * m).trace();
  const cxd g1 = tr * tr / 16.0;
  const cxd g2 = (tr * tr - tr2) / 4.0;
  if (std::abs(g2.imag()) > 1e-9)
    throw Error("invariants: g2 imaginary residue above tolerance");
  return {g1, g2.real()};
}

LocalInvariants invariants_from_point(const WeylPoint& c) {
  const double cc1 = std::cos(c.c1) * std::cos(c.c1);
  const double cc2 = std::cos(c.c2) * std::cos(c.c2);
  const double cc3 = std::cos(c.c3) * std::cos(c.c3);
  const double ss1 = std::sin(c.c1) * std::sin(c.c1);
  const double ss2 = std::sin(c.c2) * std::sin(c.c2);
  const double ss3 = std::sin(c.c3) * std::sin(c.c3);
  const double re = cc1 * cc2 * cc3 - ss1 * ss2 * ss3;
  const double im = 0.25 * std::sin(2 * c.c1) * std::sin(2 * c.c2) * std::sin(2 * c.c3);
  const double g2 = 4.0 * cc1 * cc2 * cc3 - 4.0 * ss1 * ss2 * ss3 -
                    std::cos(2 * c.c1) * std::cos(2 * c.c2) * std::cos(2 * c.c3);
  return {cxd(re, im), g2};
}

WeylPoint weyl_reduce(double r1, double r2, double r3) {
  const std::array<double, 3> base{mod_pi(r1), mod_pi(r2), mod_pi(r3)};

  // sign flips act on coordinate pairs; combined with mod pi a flip is
  // x -> pi - x. Four flip patterns x permutation-by-sorting cover the orbit.
  static constexpr std::array<std::array<int, 3>, 4> flips{
      {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};

  bool found = false;
  WeylPoint best{};
  for (const auto& f : flips) {
    std::array<double, 3> v;
    for (int k = 0; k < 3; ++k) v[k] = f[k] ? mod_pi(-base[k]) : base[k];
    std::sort(v.begin(), v.end(), std::greater<>());
    const WeylPoint cand{v[0], v[1], v[2]};
    if (!cand.in_reduced_chamber(1e-12)) continue;
    if (!found || lex_less(cand, best)) {
      best = cand;
      found = true;
    }
  }
  if (!found)
    // cannot happen: flipping the two largest of a sorted mod-pi triple
    // always lands in the chamber
    throw Error("weyl_reduce: no chamber representative");
  return best;
}

WeylPoint coordinates_from_unitary(const Unitary4& u) {
  const Mat4 ub = magic_transform(u);
  const Mat4 m = ub.transpose() * ub;
  const std::array<double, 4> theta = eigenphases_symmetric_unitary(m);

  // theta_j = 2*lambda_j mod 2pi where, for some ordering,
  //   lambda = ((c1-c2+c3)/2, (-c1+c2+c3)/2, -(c1+c2+c3)/2, (c1+c2-c3)/2)
  // so c1 = l1+l4, c2 = l2+l4, c3 = l1+l2. Halving ambiguity only shifts
  // coordinates by pi, which the chamber reduction absorbs; the slot
  // assignment is found by matching the gate's own invariants.
  std::array<double, 4> half;
  for (int j = 0; j < 4; ++j) half[j] = 0.5 * theta[j];

  const LocalInvariants target = invariants_from_unitary(u);

  bool found = false;
  WeylPoint best{};
  double best_err = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      for (int k = 0; k < 4; ++k) {
        if (k == i || k == j) continue;
        const double l1 = half[i], l2 = half[j], l4 = half[k];
        const WeylPoint cand = weyl_reduce(l1 + l4, l2 + l4, l1 + l2);
        const double err = invariant_distance(invariants_from_point(cand), target);
        if (err > 1e-8) continue;
        if (!found || err < best_err - 1e-14 ||
            (std::abs(err - best_err) <= 1e-14 && lex_less(cand, best))) {
          best = cand;
          best_err = err;
          found = true;
        }
      }
    }
  }
  if (!found)
    throw CoordinateRecoveryError(
        "coordinates: no eigenphase assignment reproduces the invariants");
  return best;
}

GateClass classify(const WeylPoint& c, const LocalInvariants& inv) {
  constexpr double tol = 1e-9;
  GateClass out;

  out.is_local = std::abs(c.c1) <= tol && std::abs(c.c2) <= tol && std::abs(c.c3) <= tol;

  out.is_perfect_entangler = (c.c1 + c.c2 >= kPi / 2 - tol) &&
                             (c.c1 - c.c2 <= kPi / 2 + tol) &&
                             (c.c2 + c.c3 <= kPi / 2 + tol);

  out.is_special_perfect_entangler =
      std::abs(c.c1 - kPi / 2) <= tol && std::abs(c.c3) <= tol;

  if (out.is_perfect_entangler) {
    // every polyhedron member must sit inside the invariant bounds
    if (std::abs(inv.g1) > 0.25 + 1e-9 || inv.g2 > 1.0 + 1e-9 || inv.g2 < -1.0 - 1e-9)
      throw std::logic_error("classify: perfect entangler violates invariant bounds");
  }

  for (const NamedGate g : {NamedGate::Identity, NamedGate::Cnot, NamedGate::Dcnot,
                            NamedGate::Swap, NamedGate::SqrtSwap}) {
    if (c.max_abs_diff(named_gate_point(g)) <= tol) {
      out.named_equivalent = g;
      break;
    }
  }
  return out;
}

}  // namespace weylkit
