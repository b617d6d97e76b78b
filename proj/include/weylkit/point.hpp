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

#include <cmath>

namespace weylkit {

/// Canonical (Weyl chamber) coordinates of a two-qubit gate, in radians.
/// The symmetry-reduced chamber is the tetrahedron
///   0 <= c3 <= c2 <= c1,  c1 + c2 <= pi
/// with vertices O=[0,0,0], A1=[pi,0,0], A2=[pi/2,pi/2,0], A3=[pi/2,pi/2,pi/2].
struct WeylPoint {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  bool in_reduced_chamber(double tol = 1e-12) const {
    return c3 >= -tol && c2 >= c3 - tol && c1 >= c2 - tol &&
           c1 + c2 <= 3.14159265358979323846 + tol;
  }

  double max_abs_diff(const WeylPoint& o) const {
    return std::max({std::abs(c1 - o.c1), std::abs(c2 - o.c2), std::abs(c3 - o.c3)});
  }
};

}  // namespace weylkit
