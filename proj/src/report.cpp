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

#include "weylkit/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "weylkit/errors.hpp"

namespace weylkit {

GateReport analyze_gate(const Unitary4& u, const std::string& source,
                        std::uint64_t mc_samples, std::uint64_t mc_seed) {
  GateReport r;
  r.source = source;

  r.point = coordinates_from_unitary(u);
  r.invariants = invariants_from_unitary(u);

  const SchmidtFactors f = schmidt_decompose(u);
  r.spectrum = f.spectrum;
  r.schmidt_number = schmidt_number(r.spectrum);
  r.k_sch = schmidt_strength(r.spectrum);

  r.l_coeffs = linear_entropy_coeffs(r.spectrum);
  r.l_permutation = linear_entropy_permutation(u);
  r.l_point = linear_entropy_point(r.point);
  r.l_invariants = linear_entropy_invariants(r.invariants);
  const std::array<double, 4> routes{r.l_coeffs, r.l_permutation, r.l_point,
                                     r.l_invariants};
  double dev = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) dev = std::max(dev, std::abs(routes[i] - routes[j]));
  r.l_max_deviation = dev;
  r.l_swapped = linear_entropy_swapped(r.invariants);

  if (r.schmidt_number <= 2) r.concurrence = operator_concurrence(r.spectrum);

  r.ep_invariant = entangling_power_invariant(r.invariants);
  r.ep_linear = entangling_power_linear(r.l_invariants, r.l_swapped);
  if (mc_samples > 0)
    r.ep_monte_carlo = entangling_power_montecarlo(u, mc_samples, mc_seed);

  r.gate_class = classify(r.point, r.invariants);
  return r;
}

Unitary4 read_matrix_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file: " + path);

  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix file is not valid JSON: ") + e.what());
  }

  if (!j.is_object() || !j.contains("matrix"))
    throw ParseError("matrix file: expected an object with a \"matrix\" key");
  const auto& rows = j["matrix"];
  if (!rows.is_array() || rows.size() != 4)
    throw ParseError("matrix file: \"matrix\" must hold 4 rows");

  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != 4)
      throw ParseError("matrix file: each row must hold 4 entries");
    for (int k = 0; k < 4; ++k) {
      const auto& entry = row[k];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number())
        throw ParseError("matrix file: entries must be [re, im] number pairs");
      m(i, k) = cxd(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  if (!m.is_finite()) throw ParseError("matrix file: non-finite entries");
  return Unitary4::normalized(m, 1e-8);
}

std::string format_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

namespace {

constexpr int kJsonDigits = 12;
constexpr int kCsvDigits = 9;

std::string jnum(double v) {
  if (std::isnan(v)) return "null";
  return format_sig(v, kJsonDigits);
}

std::string class_name(const GateClass& g) {
  return g.named_equivalent ? to_string(*g.named_equivalent) : std::string();
}

}  // namespace

std::string report_to_json(const GateReport& r) {
  std::ostringstream o;
  o << "{\n";
  o << "  \"source\": \"" << r.source << "\",\n";
  o << "  \"weyl_point\": {\"c1\": " << jnum(r.point.c1) << ", \"c2\": " << jnum(r.point.c2)
    << ", \"c3\": " << jnum(r.point.c3) << "},\n";
  o << "  \"local_invariants\": {\"g1_re\": " << jnum(r.invariants.g1.real())
    << ", \"g1_im\": " << jnum(r.invariants.g1.imag())
    << ", \"g1_abs\": " << jnum(std::abs(r.invariants.g1))
    << ", \"g2\": " << jnum(r.invariants.g2) << "},\n";
  o << "  \"schmidt\": {\"coefficients\": [" << jnum(r.spectrum.s[0]) << ", "
    << jnum(r.spectrum.s[1]) << ", " << jnum(r.spectrum.s[2]) << ", "
    << jnum(r.spectrum.s[3]) << "], \"number\": " << r.schmidt_number
    << ", \"strength\": " << jnum(r.k_sch) << "},\n";
  o << "  \"linear_entropy\": {\"from_coefficients\": " << jnum(r.l_coeffs)
    << ", \"from_permutation\": " << jnum(r.l_permutation)
    << ", \"from_point\": " << jnum(r.l_point)
    << ", \"from_invariants\": " << jnum(r.l_invariants)
    << ", \"max_deviation\": " << jnum(r.l_max_deviation)
    << ", \"swapped_gate\": " << jnum(r.l_swapped) << "},\n";
  o << "  \"concurrence\": " << (r.concurrence ? jnum(*r.concurrence) : "null") << ",\n";
  o << "  \"entangling_power\": {\"from_invariants\": " << jnum(r.ep_invariant)
    << ", \"from_entropies\": " << jnum(r.ep_linear);
  if (r.ep_monte_carlo) {
    o << ", \"monte_carlo\": {\"mean\": " << jnum(r.ep_monte_carlo->mean)
      << ", \"std_error\": " << jnum(r.ep_monte_carlo->std_error)
      << ", \"samples\": " << r.ep_monte_carlo->samples
      << ", \"seed\": " << r.ep_monte_carlo->seed << "}";
  } else {
    o << ", \"monte_carlo\": null";
  }
  o << "},\n";
  o << "  \"classification\": {\"is_local\": "
    << (r.gate_class.is_local ? "true" : "false")
    << ", \"is_perfect_entangler\": "
    << (r.gate_class.is_perfect_entangler ? "true" : "false")
    << ", \"is_special_perfect_entangler\": "
    << (r.gate_class.is_special_perfect_entangler ? "true" : "false")
    << ", \"named_equivalent\": ";
  if (r.gate_class.named_equivalent)
    o << "\"" << to_string(*r.gate_class.named_equivalent) << "\"";
  else
    o << "null";
  o << "}\n}\n";
  return o.str();
}

std::string report_to_csv(const GateReport& r) {
  std::ostringstream o;
  o << "source,c1,c2,c3,g1_re,g1_im,g1_abs,g2,s1,s2,s3,s4,schmidt_number,k_sch,"
       "l_coeffs,l_permutation,l_point,l_invariants,l_max_deviation,l_swapped,"
       "concurrence,ep_invariant,ep_linear,ep_mc_mean,ep_mc_std_error,"
       "is_local,is_perfect_entangler,is_special_perfect_entangler,named_equivalent\n";
  auto c = [&](double v) { return format_sig(v, kCsvDigits); };
  o << r.source << ',' << c(r.point.c1) << ',' << c(r.point.c2) << ',' << c(r.point.c3)
    << ',' << c(r.invariants.g1.real()) << ',' << c(r.invariants.g1.imag()) << ','
    << c(std::abs(r.invariants.g1)) << ',' << c(r.invariants.g2) << ','
    << c(r.spectrum.s[0]) << ',' << c(r.spectrum.s[1]) << ',' << c(r.spectrum.s[2]) << ','
    << c(r.spectrum.s[3]) << ',' << r.schmidt_number << ',' << c(r.k_sch) << ','
    << c(r.l_coeffs) << ',' << c(r.l_permutation) << ',' << c(r.l_point) << ','
    << c(r.l_invariants) << ',' << c(r.l_max_deviation) << ',' << c(r.l_swapped) << ','
    << (r.concurrence ? c(*r.concurrence) : std::string()) << ',' << c(r.ep_invariant)
    << ',' << c(r.ep_linear) << ','
    << (r.ep_monte_carlo ? c(r.ep_monte_carlo->mean) : std::string()) << ','
    << (r.ep_monte_carlo ? c(r.ep_monte_carlo->std_error) : std::string()) << ','
    << (r.gate_class.is_local ? 1 : 0) << ',' << (r.gate_class.is_perfect_entangler ? 1 : 0)
    << ',' << (r.gate_class.is_special_perfect_entangler ? 1 : 0) << ','
    << class_name(r.gate_class) << '\n';
  return o.str();
}

}  // namespace weylkit
