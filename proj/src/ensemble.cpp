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

#include "weylkit/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "weylkit/errors.hpp"
#include "weylkit/nonlocal.hpp"
#include "weylkit/rng.hpp"

namespace weylkit {

namespace {

constexpr double kPi = std::numbers::pi;

struct Vertex {
  const char* name;
  WeylPoint p;
};

const std::array<Vertex, 9>& vertex_table() {
  static const std::array<Vertex, 9> v{{
      {"O", {0.0, 0.0, 0.0}},
      {"A1", {kPi, 0.0, 0.0}},
      {"A2", {kPi / 2, kPi / 2, 0.0}},
      {"A3", {kPi / 2, kPi / 2, kPi / 2}},
      {"L", {kPi / 2, 0.0, 0.0}},
      {"M", {3 * kPi / 4, kPi / 4, 0.0}},
      {"N", {3 * kPi / 4, kPi / 4, kPi / 4}},
      {"P", {kPi / 4, kPi / 4, kPi / 4}},
      {"Q", {kPi / 4, kPi / 4, 0.0}},
  }};
  return v;
}

// split an edge name like "A2M" or "LQ" into its two vertex tokens
bool split_edge_name(const std::string& name, std::string& a, std::string& b) {
  const auto& table = vertex_table();
  for (const Vertex& first : table) {
    const std::string fn = first.name;
    if (name.size() <= fn.size() || name.compare(0, fn.size(), fn) != 0) continue;
    const std::string rest = name.substr(fn.size());
    for (const Vertex& second : table) {
      if (rest == second.name) {
        a = fn;
        b = rest;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

WeylPoint chamber_vertex(const std::string& name) {
  for (const Vertex& v : vertex_table())
    if (name == v.name) return v.p;
  throw UnknownEdgeError("unknown chamber vertex: " + name);
}

const std::vector<EdgeSpec>& canonical_edges() {
  static const std::vector<EdgeSpec> edges = [] {
    const char* names[] = {// tetrahedron
                           "OA1", "OA2", "OA3", "A1A2", "A1A3", "A2A3",
                           // polyhedron
                           "LM", "LQ", "LN", "LP", "MN", "PQ", "MA2", "QA2", "NP"};
    std::vector<EdgeSpec> out;
    for (const char* n : names) {
      std::string a, b;
      split_edge_name(n, a, b);
      out.push_back({n, chamber_vertex(a), chamber_vertex(b)});
    }
    return out;
  }();
  return edges;
}

std::vector<EdgeSpec> polyhedron_edges() {
  const auto& all = canonical_edges();
  return {all.begin() + 6, all.end()};
}

EdgeSpec edge_by_name(const std::string& name) {
  std::string a, b;
  if (!split_edge_name(name, a, b) || a == b)
    throw UnknownEdgeError("unknown edge: " + name);
  // accept either orientation of a canonical edge
  for (const EdgeSpec& e : canonical_edges()) {
    std::string ea, eb;
    split_edge_name(e.name, ea, eb);
    if ((a == ea && b == eb) || (a == eb && b == ea))
      return {name, chamber_vertex(a), chamber_vertex(b)};
  }
  throw UnknownEdgeError("edge " + name + " is not a tetrahedron or polyhedron edge");
}

WeylPoint edge_point(const EdgeSpec& e, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw OutOfRangeError("edge_point: t outside [0, 1]");
  return {e.from.c1 + t * (e.to.c1 - e.from.c1), e.from.c2 + t * (e.to.c2 - e.from.c2),
          e.from.c3 + t * (e.to.c3 - e.from.c3)};
}

ScatterRecord record_at_point(const WeylPoint& c) {
  ScatterRecord r;
  r.point = c;
  const Unitary4 u = canonical_gate(c);
  r.spectrum = schmidt_decompose(u).spectrum;
  r.schmidt_number = schmidt_number(r.spectrum);
  r.k_sch = schmidt_strength(r.spectrum);
  r.l = linear_entropy_coeffs(r.spectrum);
  const LocalInvariants inv = invariants_from_point(c);
  r.ep = entangling_power_invariant(inv);
  r.is_pe = classify(c, inv).is_perfect_entangler;
  return r;
}

std::vector<Unitary4> sample_haar_su4(std::uint64_t n, std::uint64_t seed) {
  if (n < 1) throw OutOfRangeError("haar sampler: n >= 1 required");
  std::vector<Unitary4> out;
  out.reserve(n);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    Rng rng = Rng::stream(seed ^ 0x9A3FB34CULL, idx);
    Mat4 a;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = cxd(rng.next_gaussian(), rng.next_gaussian());

    // Householder QR, accumulating Q
    Mat4 q = Mat4::identity();
    for (int k = 0; k < 3; ++k) {
      double norm2 = 0.0;
      for (int i = k; i < 4; ++i) norm2 += std::norm(a(i, k));
      const double norm = std::sqrt(norm2);
      if (norm == 0.0) continue;
      const cxd x0 = a(k, k);
      const cxd phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : cxd(1.0);
      Vector<4> v{};
      for (int i = k; i < 4; ++i) v[i] = a(i, k);
      v[k] += phase * norm;
      double vnorm2 = 0.0;
      for (int i = k; i < 4; ++i) vnorm2 += std::norm(v[i]);
      const double beta = 2.0 / vnorm2;
      // a <- H a,  q <- q H  with H = I - beta v v^dag
      for (int j = 0; j < 4; ++j) {
        cxd dot = 0.0;
        for (int i = k; i < 4; ++i) dot += std::conj(v[i]) * a(i, j);
        dot *= beta;
        for (int i = k; i < 4; ++i) a(i, j) -= dot * v[i];
      }
      for (int i = 0; i < 4; ++i) {
        cxd dot = 0.0;
        for (int j = k; j < 4; ++j) dot += q(i, j) * v[j];
        dot *= beta;
        for (int j = k; j < 4; ++j) q(i, j) -= dot * std::conj(v[j]);
      }
    }

    // phase correction: multiply column j by r_jj/|r_jj| for Haar invariance
    for (int j = 0; j < 4; ++j) {
      const cxd r = a(j, j);
      const cxd phase = (std::abs(r) > 0.0) ? r / std::abs(r) : cxd(1.0);
      for (int i = 0; i < 4; ++i) q(i, j) *= phase;
    }
    out.push_back(Unitary4::trusted(q));
  }
  return out;
}

std::vector<WeylPoint> sample_chamber_uniform(std::uint64_t n, std::uint64_t seed) {
  if (n < 1) throw OutOfRangeError("chamber sampler: n >= 1 required");
  std::vector<WeylPoint> out;
  out.reserve(n);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    Rng rng = Rng::stream(seed ^ 0x51D3C0DEULL, idx);
    std::array<double, 3> u{rng.next_double(), rng.next_double(), rng.next_double()};
    std::sort(u.begin(), u.end());
    // barycentric weights on (O, A1, A2, A3)
    const double w2 = u[1] - u[0];
    const double w3 = u[2] - u[1];
    const double w4 = 1.0 - u[2];
    out.push_back({w2 * kPi + (w3 + w4) * kPi / 2, (w3 + w4) * kPi / 2, w4 * kPi / 2});
  }
  return out;
}

std::vector<Mat4> sample_local_su2su2(std::uint64_t n, std::uint64_t seed) {
  if (n < 1) throw OutOfRangeError("local sampler: n >= 1 required");
  std::vector<Mat4> out;
  out.reserve(n);
  const auto su2 = [](Rng& rng) {
    // unit quaternion -> SU(2)
    const double g0 = rng.next_gaussian(), g1 = rng.next_gaussian();
    const double g2 = rng.next_gaussian(), g3 = rng.next_gaussian();
    const double inv = 1.0 / std::sqrt(g0 * g0 + g1 * g1 + g2 * g2 + g3 * g3);
    Mat2 m;
    m(0, 0) = cxd(g0 * inv, g1 * inv);
    m(0, 1) = cxd(g2 * inv, g3 * inv);
    m(1, 0) = cxd(-g2 * inv, g3 * inv);
    m(1, 1) = cxd(g0 * inv, -g1 * inv);
    return m;
  };
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    Rng rng = Rng::stream(seed ^ 0x10CA1ULL, idx);
    const Mat2 a = su2(rng);
    const Mat2 b = su2(rng);
    out.push_back(kron(a, b));
  }
  return out;
}

std::vector<ScatterRecord> edge_sweep(const EdgeSpec& e, int steps) {
  if (steps < 2) throw OutOfRangeError("edge_sweep: steps >= 2 required");
  std::vector<ScatterRecord> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) / (steps - 1);
    out.push_back(record_at_point(edge_point(e, t)));
  }
  return out;
}

ScatterResult scatter_study(std::uint64_t n, std::uint64_t seed, SampleMode mode) {
  if (n < 2) throw OutOfRangeError("scatter: n >= 2 required");
  ScatterResult res;
  res.records.reserve(n);

  if (mode == SampleMode::ChamberUniform) {
    for (const WeylPoint& c : sample_chamber_uniform(n, seed))
      res.records.push_back(record_at_point(c));
  } else {
    for (const Unitary4& u : sample_haar_su4(n, seed)) {
      ScatterRecord r;
      r.point = coordinates_from_unitary(u);
      r.spectrum = schmidt_decompose(u).spectrum;
      r.schmidt_number = schmidt_number(r.spectrum);
      r.k_sch = schmidt_strength(r.spectrum);
      r.l = linear_entropy_coeffs(r.spectrum);
      const LocalInvariants inv = invariants_from_unitary(u);
      r.ep = entangling_power_invariant(inv);
      r.is_pe = classify(r.point, inv).is_perfect_entangler;
      res.records.push_back(r);
    }
  }

  std::vector<double> ks, ls;
  ks.reserve(n);
  ls.reserve(n);
  for (const ScatterRecord& r : res.records) {
    ks.push_back(r.k_sch);
    ls.push_back(r.l);
  }
  res.pearson = pearson_correlation(ks, ls);
  res.covariance = covariance(ks, ls);
  return res;
}

double pearson_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    return std::numeric_limits<double>::quiet_NaN();
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  // (n-1) normalization cancels in the ratio; guard zero variance
  if (sxx <= 0.0 || syy <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  return sxy / std::sqrt(sxx * syy);
}

double covariance(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    return std::numeric_limits<double>::quiet_NaN();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sxy += (x[i] - mx) * (y[i] - my);
  return sxy / static_cast<double>(x.size() - 1);
}

}  // namespace weylkit
