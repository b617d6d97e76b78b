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

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weylkit/ensemble.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/kernels.hpp"
#include "weylkit/nonlocal.hpp"
#include "weylkit/report.hpp"
#include "weylkit/rng.hpp"
#include "weylkit/schmidt.hpp"
#include "weylkit/unitary.hpp"
#include "weylkit/weyl.hpp"

namespace {

using namespace weylkit;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;

std::string csv(double v) { return format_sig(v, 9); }

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open output file: " + path);
  out << content;
}

int run_analyze(const std::string& gate_name, const std::string& file_path,
                std::uint64_t mc_samples, bool as_csv) {
  Unitary4 u = gate_name.empty() ? read_matrix_json(file_path)
                                 : named_gate(named_gate_from_string(gate_name));
  const std::string source =
      gate_name.empty() ? "file:" + file_path : "named:" + gate_name;
  const GateReport r = analyze_gate(u, source, mc_samples);
  std::cout << (as_csv ? report_to_csv(r) : report_to_json(r));
  return kExitOk;
}

int run_edge(const std::string& name, int steps, const std::string& out_path) {
  const EdgeSpec e = edge_by_name(name);
  const std::vector<ScatterRecord> records = edge_sweep(e, steps);
  std::ostringstream o;
  o << "t,c1,c2,c3,s1,s2,s3,s4,schmidt_number,k_sch,l,ep,is_pe\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const ScatterRecord& r = records[i];
    const double t = static_cast<double>(i) / (records.size() - 1);
    o << csv(t) << ',' << csv(r.point.c1) << ',' << csv(r.point.c2) << ','
      << csv(r.point.c3) << ',' << csv(r.spectrum.s[0]) << ',' << csv(r.spectrum.s[1])
      << ',' << csv(r.spectrum.s[2]) << ',' << csv(r.spectrum.s[3]) << ','
      << r.schmidt_number << ',' << csv(r.k_sch) << ',' << csv(r.l) << ',' << csv(r.ep)
      << ',' << (r.is_pe ? 1 : 0) << '\n';
  }
  write_output(out_path, o.str());
  return kExitOk;
}

int run_scatter(std::uint64_t n, std::uint64_t seed, const std::string& mode,
                const std::string& out_path) {
  SampleMode m;
  if (mode == "chamber")
    m = SampleMode::ChamberUniform;
  else if (mode == "haar")
    m = SampleMode::Haar;
  else
    throw ParseError("scatter: mode must be 'chamber' or 'haar'");

  const ScatterResult res = scatter_study(n, seed, m);
  if (std::isnan(res.pearson))
    std::cerr << "warning: correlation undefined (zero variance in a measure)\n";

  std::ostringstream o;
  o << "c1,c2,c3,k_sch,l,ep,schmidt_number,is_pe\n";
  for (const ScatterRecord& r : res.records) {
    o << csv(r.point.c1) << ',' << csv(r.point.c2) << ',' << csv(r.point.c3) << ','
      << csv(r.k_sch) << ',' << csv(r.l) << ',' << csv(r.ep) << ',' << r.schmidt_number
      << ',' << (r.is_pe ? 1 : 0) << '\n';
  }
  o << "covariance," << csv(res.covariance) << '\n';
  o << "pearson," << csv(res.pearson) << '\n';
  write_output(out_path, o.str());
  return kExitOk;
}

// ---- verify: the cross-formula identity suite ------------------------------

struct Check {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass() const { return max_error <= tolerance; }
};

Unitary4 dress(const Unitary4& u, const Mat4& k1, const Mat4& k2) {
  return Unitary4::trusted(k1 * u.matrix() * k2);
}

std::vector<Check> run_checks(std::uint64_t n, std::uint64_t seed) {
  std::vector<Check> checks;

  {  // all four linear-entropy routes on Haar gates
    Check c{"four_route_linear_entropy", 0.0, 1e-8};
    for (const Unitary4& u : sample_haar_su4(n, seed)) {
      const double l1 = linear_entropy_coeffs(schmidt_decompose(u).spectrum);
      const double l2 = linear_entropy_permutation(u);
      const double l3 = linear_entropy_point(coordinates_from_unitary(u));
      const double l4 = linear_entropy_invariants(invariants_from_unitary(u));
      for (double a : {l2, l3, l4}) c.max_error = std::max(c.max_error, std::abs(a - l1));
      c.max_error = std::max({c.max_error, std::abs(l2 - l3), std::abs(l2 - l4),
                              std::abs(l3 - l4)});
    }
    checks.push_back(c);
  }

  {  // chamber point -> gate -> chamber point
    Check c{"coordinate_round_trip", 0.0, 1e-8};
    for (const WeylPoint& p : sample_chamber_uniform(n, seed + 1)) {
      const WeylPoint q = coordinates_from_unitary(canonical_gate(p));
      c.max_error = std::max(c.max_error, p.max_abs_diff(q));
    }
    checks.push_back(c);
  }

  {  // invariance of every reported quantity under local dressing
    Check c{"local_invariance", 0.0, 1e-8};
    const auto gates = sample_haar_su4(n, seed + 2);
    const auto pre = sample_local_su2su2(n, seed + 3);
    const auto post = sample_local_su2su2(n, seed + 4);
    for (std::uint64_t i = 0; i < n; ++i) {
      const Unitary4& u = gates[i];
      const Unitary4 v = dress(u, pre[i], post[i]);
      const LocalInvariants iu = invariants_from_unitary(u);
      const LocalInvariants iv = invariants_from_unitary(v);
      c.max_error = std::max(c.max_error,
                             std::abs(std::abs(iu.g1) - std::abs(iv.g1)));
      c.max_error = std::max(c.max_error, std::abs(iu.g2 - iv.g2));
      c.max_error = std::max(
          c.max_error, coordinates_from_unitary(u).max_abs_diff(coordinates_from_unitary(v)));
      const SchmidtSpectrum su = schmidt_decompose(u).spectrum;
      const SchmidtSpectrum sv = schmidt_decompose(v).spectrum;
      for (int k = 0; k < 4; ++k)
        c.max_error = std::max(c.max_error, std::abs(su.s[k] - sv.s[k]));
    }
    checks.push_back(c);
  }

  {  // the two entangling-power forms agree
    Check c{"entangling_power_identity", 0.0, 1e-10};
    for (const WeylPoint& p : sample_chamber_uniform(n, seed + 5)) {
      const LocalInvariants inv = invariants_from_point(p);
      const double a = entangling_power_invariant(inv);
      const double b = entangling_power_linear(linear_entropy_invariants(inv),
                                               linear_entropy_swapped(inv));
      c.max_error = std::max(c.max_error, std::abs(a - b));
    }
    checks.push_back(c);
  }

  {  // concurrence and strength identities on the controlled-unitary edge
    Check c1{"rank2_concurrence_identity", 0.0, 1e-10};
    Check c2{"rank2_strength_entropy_relation", 0.0, 1e-9};
    const EdgeSpec oa1 = edge_by_name("OA1");
    for (const ScatterRecord& r : edge_sweep(oa1, 200)) {
      const double conc = operator_concurrence(r.spectrum);
      c1.max_error = std::max(c1.max_error, std::abs(conc - std::sqrt(2.0 * r.l)));
      c2.max_error =
          std::max(c2.max_error, std::abs(r.k_sch - strength_from_entropy_rank2(r.l)));
    }
    checks.push_back(c1);
    checks.push_back(c2);
  }

  {  // edge pairs with identical measure curves
    Check c{"edge_pair_coincidence", 0.0, 1e-9};
    const char* pairs[][2] = {{"QP", "MN"}, {"LQ", "LM"}, {"A2M", "A2Q"}};
    for (const auto& pr : pairs) {
      const auto a = edge_sweep(edge_by_name(pr[0]), 100);
      const auto b = edge_sweep(edge_by_name(pr[1]), 100);
      for (std::size_t i = 0; i < a.size(); ++i) {
        c.max_error = std::max(c.max_error, std::abs(a[i].k_sch - b[i].k_sch));
        c.max_error = std::max(c.max_error, std::abs(a[i].l - b[i].l));
      }
    }
    checks.push_back(c);
  }

  {  // named-gate closed-form table
    Check c{"named_gate_table", 0.0, 1e-9};
    auto dev = [&](double got, double want) {
      c.max_error = std::max(c.max_error, std::abs(got - want));
    };
    const GateReport cnot = analyze_gate(named_gate(NamedGate::Cnot), "CNOT");
    dev(cnot.point.c1, std::numbers::pi / 2);
    dev(cnot.point.c2, 0.0);
    dev(cnot.point.c3, 0.0);
    dev(std::abs(cnot.invariants.g1), 0.0);
    dev(cnot.invariants.g2, 1.0);
    dev(cnot.k_sch, 1.0);
    dev(cnot.l_coeffs, 0.5);
    dev(cnot.concurrence.value_or(-1.0), 1.0);
    dev(cnot.ep_invariant, 2.0 / 9.0);
    if (!cnot.gate_class.is_perfect_entangler) c.max_error = 1.0;

    const GateReport swap = analyze_gate(named_gate(NamedGate::Swap), "SWAP");
    dev(swap.k_sch, 2.0);
    dev(swap.l_coeffs, 0.75);
    dev(swap.ep_invariant, 0.0);
    if (swap.gate_class.is_perfect_entangler) c.max_error = 1.0;

    const GateReport dcnot = analyze_gate(named_gate(NamedGate::Dcnot), "DCNOT");
    dev(dcnot.l_coeffs, 0.75);
    dev(dcnot.ep_invariant, 2.0 / 9.0);
    if (!dcnot.gate_class.is_perfect_entangler) c.max_error = 1.0;

    const GateReport id = analyze_gate(named_gate(NamedGate::Identity), "IDENTITY");
    dev(id.k_sch, 0.0);
    dev(id.l_coeffs, 0.0);
    dev(id.ep_invariant, 0.0);
    if (!id.gate_class.is_local || id.gate_class.is_perfect_entangler) c.max_error = 1.0;
    checks.push_back(c);
  }

  return checks;
}

int run_verify(std::uint64_t n, std::uint64_t seed) {
  const std::vector<Check> checks = run_checks(n, seed);
  bool all = true;
  std::ostringstream o;
  o << "{\n  \"n\": " << n << ",\n  \"seed\": " << seed << ",\n  \"backend\": \""
    << kernels::backend_name(kernels::active_backend()) << "\",\n  \"checks\": [\n";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const Check& c = checks[i];
    all = all && c.pass();
    o << "    {\"name\": \"" << c.name << "\", \"pass\": " << (c.pass() ? "true" : "false")
      << ", \"max_error\": " << format_sig(c.max_error, 12)
      << ", \"tolerance\": " << format_sig(c.tolerance, 12) << "}"
      << (i + 1 < checks.size() ? "," : "") << "\n";
  }
  o << "  ],\n  \"pass\": " << (all ? "true" : "false") << "\n}\n";
  std::cout << o.str();
  return all ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weylkit: two-qubit gate nonlocality analysis"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "characterize one gate");
  std::string gate_name, file_path;
  std::uint64_t mc_samples = 0;
  bool as_json = false, as_csv = false;
  auto* gate_opt = analyze->add_option("--gate", gate_name,
                                       "built-in gate: IDENTITY, CNOT, DCNOT, SWAP, SQRT_SWAP");
  auto* file_opt = analyze->add_option("--file", file_path, "matrix JSON file");
  gate_opt->excludes(file_opt);
  analyze->add_option("--mc-samples", mc_samples,
                      "Monte-Carlo entangling-power sample count (0 = skip)");
  analyze->add_flag("--json", as_json, "JSON output (default)");
  analyze->add_flag("--csv", as_csv, "CSV output");

  // edge
  auto* edge = app.add_subcommand("edge", "sweep a chamber/polyhedron edge");
  std::string edge_name, edge_out;
  int steps = 0;
  edge->add_option("--name", edge_name, "edge name, e.g. OA1, A2A3, LQ, MN")->required();
  edge->add_option("--steps", steps, "grid points (>= 2)")->required();
  edge->add_option("--out", edge_out, "output CSV path (default stdout)");

  // scatter
  auto* scatter = app.add_subcommand("scatter", "random-gate measure scatter study");
  std::uint64_t sc_n = 0, sc_seed = 0;
  std::string sc_mode = "chamber", sc_out;
  scatter->add_option("--n", sc_n, "sample count (>= 2)")->required();
  scatter->add_option("--seed", sc_seed, "random seed")->required();
  scatter->add_option("--mode", sc_mode, "chamber | haar");
  scatter->add_option("--out", sc_out, "output CSV path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "run the cross-formula identity suite");
  std::uint64_t v_n = 300, v_seed = 1;
  verify->add_option("--n", v_n, "ensemble size per check");
  verify->add_option("--seed", v_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*analyze) {
      if (gate_name.empty() == file_path.empty())
        throw ParseError("analyze: exactly one of --gate / --file is required");
      if (as_json && as_csv) throw ParseError("analyze: pick one of --json / --csv");
      return run_analyze(gate_name, file_path, mc_samples, as_csv);
    }
    if (*edge) return run_edge(edge_name, steps, edge_out);
    if (*scatter) return run_scatter(sc_n, sc_seed, sc_mode, sc_out);
    if (*verify) return run_verify(v_n, v_seed);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const UnknownEdgeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const NonUnitaryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const OutOfRangeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFail;
  }
  return kExitOk;
}
