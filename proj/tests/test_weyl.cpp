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
#include <numbers>

#include "test_util.hpp"
#include "weylkit/ensemble.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/weyl.hpp"

using namespace weylkit;

namespace {
constexpr double kPi = std::numbers::pi;

Unitary4 dress(const Unitary4& u, const Mat4& k1, const Mat4& k2) {
  return Unitary4::trusted(k1 * u.matrix() * k2);
}
}  // namespace

TEST_CASE("magic transform basics") {
  CHECK(unitarity_error(magic_basis()) <= 1e-15);

  const Unitary4 id = Unitary4::normalized(Mat4::identity());
  CHECK(magic_transform(id).max_abs_diff(Mat4::identity()) <= 1e-15);

  // canonical gates are diagonal in the magic basis
  for (const WeylPoint& c : sample_chamber_uniform(50, 3)) {
    const Mat4 ub = magic_transform(canonical_gate(c));
    double off = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) off = std::max(off, std::abs(ub(i, j)));
    CHECK(off <= 1e-12);
  }

  // local gates become real orthogonal
  for (const Mat4& k : sample_local_su2su2(50, 4)) {
    const Mat4 ub = magic_transform(Unitary4::trusted(k));
    double imag = 0.0;
    for (const cxd& z : ub.a) imag = std::max(imag, std::abs(z.imag()));
    CHECK(imag <= 1e-10);
    CHECK((ub.transpose() * ub).max_abs_diff(Mat4::identity()) <= 1e-10);
  }
}

TEST_CASE("invariants of the named classes") {
  const LocalInvariants id = invariants_from_unitary(Unitary4::normalized(Mat4::identity()));
  CHECK(std::abs(id.g1 - cxd(1.0)) <= 1e-12);
  CHECK(id.g2 == doctest::Approx(3.0).epsilon(1e-12));

  const LocalInvariants cnot = invariants_from_unitary(named_gate(NamedGate::Cnot));
  CHECK(std::abs(cnot.g1) <= 1e-12);
  CHECK(cnot.g2 == doctest::Approx(1.0).epsilon(1e-12));

  const LocalInvariants swap = invariants_from_unitary(named_gate(NamedGate::Swap));
  CHECK(std::abs(swap.g1 - cxd(-1.0)) <= 1e-12);
  CHECK(swap.g2 == doctest::Approx(-3.0).epsilon(1e-12));
}

TEST_CASE("invariants from coordinates: closed-form spot values") {
  const LocalInvariants origin = invariants_from_point({0, 0, 0});
  CHECK(std::abs(origin.g1 - cxd(1.0)) == 0.0);
  CHECK(origin.g2 == 3.0);

  // DCNOT point
  const LocalInvariants dcnot = invariants_from_point({kPi / 2, kPi / 2, 0});
  CHECK(std::abs(dcnot.g1) <= 1e-16);
  CHECK(dcnot.g2 == doctest::Approx(-1.0).epsilon(1e-15));

  // sqrt-SWAP point: g1 = i/4
  const LocalInvariants p = invariants_from_point({kPi / 4, kPi / 4, kPi / 4});
  CHECK(std::abs(p.g1 - cxd(0.0, 0.25)) <= 1e-15);
  CHECK(std::abs(p.g2) <= 1e-15);
  CHECK(std::abs(p.g1) == doctest::Approx(0.25).epsilon(1e-15));

  // CNOT point
  const LocalInvariants l = invariants_from_point({kPi / 2, 0, 0});
  CHECK(std::abs(l.g1) <= 1e-15);
  CHECK(l.g2 == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("matrix and coordinate invariant routes agree") {
  for (const WeylPoint& c : sample_chamber_uniform(200, 8)) {
    const LocalInvariants a = invariants_from_unitary(canonical_gate(c));
    const LocalInvariants b = invariants_from_point(c);
    CHECK(std::abs(a.g1 - b.g1) <= 1e-12);
    CHECK(std::abs(a.g2 - b.g2) <= 1e-12);
  }
}

TEST_CASE("invariant ranges on random points") {
  for (const WeylPoint& c : sample_chamber_uniform(500, 12)) {
    const LocalInvariants inv = invariants_from_point(c);
    CHECK(std::abs(inv.g1) <= 1.0 + 1e-12);
    CHECK(inv.g2 <= 3.0 + 1e-12);
    CHECK(inv.g2 >= -3.0 - 1e-12);
  }
}

TEST_CASE("weyl_reduce") {
  CHECK(weyl_reduce(0, 0, 0).max_abs_diff({0, 0, 0}) == 0.0);
  CHECK(weyl_reduce(kPi / 2, 0, kPi).max_abs_diff({kPi / 2, 0, 0}) <= 1e-15);
  CHECK(weyl_reduce(0, kPi / 2, 0).max_abs_diff({kPi / 2, 0, 0}) <= 1e-15);

  // reduction preserves the invariants (up to g1 conjugation) and is
  // idempotent on its own output
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const double r1 = 8.0 * (rng.next_double() - 0.5);
    const double r2 = 8.0 * (rng.next_double() - 0.5);
    const double r3 = 8.0 * (rng.next_double() - 0.5);
    const WeylPoint c = weyl_reduce(r1, r2, r3);
    CHECK(c.in_reduced_chamber(1e-12));
    const LocalInvariants want = invariants_from_point({r1, r2, r3});
    const LocalInvariants got = invariants_from_point(c);
    const double match =
        std::min(std::abs(got.g1 - want.g1), std::abs(got.g1 - std::conj(want.g1)));
    CHECK(match <= 1e-10);
    CHECK(std::abs(got.g2 - want.g2) <= 1e-10);

    const WeylPoint again = weyl_reduce(c.c1, c.c2, c.c3);
    CHECK(c.max_abs_diff(again) == 0.0);
  }
}

TEST_CASE("coordinates of the named classes") {
  CHECK(coordinates_from_unitary(named_gate(NamedGate::Cnot))
            .max_abs_diff({kPi / 2, 0, 0}) <= 1e-12);
  CHECK(coordinates_from_unitary(named_gate(NamedGate::Swap))
            .max_abs_diff({kPi / 2, kPi / 2, kPi / 2}) <= 1e-12);
  CHECK(coordinates_from_unitary(named_gate(NamedGate::SqrtSwap))
            .max_abs_diff({kPi / 4, kPi / 4, kPi / 4}) <= 1e-12);

  // locally dressed DCNOT still lands on A2
  const auto pre = sample_local_su2su2(5, 21);
  const auto post = sample_local_su2su2(5, 22);
  for (int i = 0; i < 5; ++i) {
    const Unitary4 v = dress(named_gate(NamedGate::Dcnot), pre[i], post[i]);
    CHECK(coordinates_from_unitary(v).max_abs_diff({kPi / 2, kPi / 2, 0}) <= 1e-10);
  }
}

TEST_CASE("coordinate round trip on random chamber points") {
  for (const WeylPoint& c : sample_chamber_uniform(300, 14)) {
    const WeylPoint r = coordinates_from_unitary(canonical_gate(c));
    CHECK(c.max_abs_diff(r) <= 1e-8);
  }
}

TEST_CASE("local invariance of invariants and coordinates") {
  const auto gates = sample_haar_su4(100, 15);
  const auto pre = sample_local_su2su2(100, 16);
  const auto post = sample_local_su2su2(100, 17);
  for (int i = 0; i < 100; ++i) {
    const Unitary4 v = dress(gates[i], pre[i], post[i]);
    const LocalInvariants iu = invariants_from_unitary(gates[i]);
    const LocalInvariants iv = invariants_from_unitary(v);
    CHECK(std::abs(iu.g1 - iv.g1) <= 1e-9);
    CHECK(std::abs(iu.g2 - iv.g2) <= 1e-9);
    CHECK(coordinates_from_unitary(gates[i]).max_abs_diff(coordinates_from_unitary(v)) <=
          1e-9);
  }
}

TEST_CASE("classification of the named points") {
  auto classify_point = [](const WeylPoint& c) {
    return classify(c, invariants_from_point(c));
  };

  const GateClass cnot = classify_point({kPi / 2, 0, 0});
  CHECK(cnot.is_perfect_entangler);
  CHECK(cnot.is_special_perfect_entangler);
  CHECK(!cnot.is_local);
  CHECK(cnot.named_equivalent == NamedGate::Cnot);

  const GateClass swap = classify_point({kPi / 2, kPi / 2, kPi / 2});
  CHECK(!swap.is_perfect_entangler);
  CHECK(swap.named_equivalent == NamedGate::Swap);

  const GateClass sqsw = classify_point({kPi / 4, kPi / 4, kPi / 4});
  CHECK(sqsw.is_perfect_entangler);  // vertex P of the polyhedron
  CHECK(!sqsw.is_special_perfect_entangler);
  CHECK(sqsw.named_equivalent == NamedGate::SqrtSwap);

  const GateClass id = classify_point({0, 0, 0});
  CHECK(id.is_local);
  CHECK(!id.is_perfect_entangler);
  CHECK(id.named_equivalent == NamedGate::Identity);

  // all six polyhedron vertices are (boundary) members
  for (const char* v : {"L", "M", "N", "P", "Q", "A2"})
    CHECK(classify_point(chamber_vertex(v)).is_perfect_entangler);
  // the tetrahedron vertices O, A1, A3 are excluded
  for (const char* v : {"O", "A1", "A3"})
    CHECK(!classify_point(chamber_vertex(v)).is_perfect_entangler);
}

TEST_CASE("classification flag implications on random points") {
  for (const WeylPoint& c : sample_chamber_uniform(2000, 19)) {
    const LocalInvariants inv = invariants_from_point(c);
    const GateClass g = classify(c, inv);
    if (g.is_local) CHECK(!g.is_perfect_entangler);
    if (g.is_special_perfect_entangler) CHECK(g.is_perfect_entangler);
    if (g.is_perfect_entangler) {
      CHECK(std::abs(inv.g1) <= 0.25 + 1e-9);
      CHECK(inv.g2 <= 1.0 + 1e-9);
      CHECK(inv.g2 >= -1.0 - 1e-9);
    }
  }
}

TEST_CASE("perfect entanglers fill half the chamber") {
  const auto pts = sample_chamber_uniform(20000, 23);
  int pe = 0;
  for (const WeylPoint& c : pts)
    if (classify(c, invariants_from_point(c)).is_perfect_entangler) ++pe;
  const double frac = static_cast<double>(pe) / pts.size();
  CHECK(std::abs(frac - 0.5) <= 0.011);  // 3 sigma of a fair coin at n = 2e4
}

TEST_CASE("recovery works on every Haar gate") {
  for (const Unitary4& u : sample_haar_su4(50, 29))
    CHECK_NOTHROW(coordinates_from_unitary(u));
}

TEST_CASE("recovered point reproduces the matrix invariants") {
  for (const Unitary4& u : sample_haar_su4(100, 30)) {
    const LocalInvariants direct = invariants_from_unitary(u);
    const LocalInvariants via_point = invariants_from_point(coordinates_from_unitary(u));
    CHECK(std::abs(std::abs(direct.g1) - std::abs(via_point.g1)) <= 1e-8);
    CHECK(std::abs(direct.g1 - via_point.g1) <= 1e-8);  // chamber rep carries g1 itself
    CHECK(std::abs(direct.g2 - via_point.g2) <= 1e-8);
  }
}
