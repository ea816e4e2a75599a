// Copyright 2026 The spheredpp authors
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

#include <CLI11.hpp>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "spheredpp/dpp_sampler.hpp"
#include "spheredpp/ensemble_kernel.hpp"
#include "spheredpp/errors.hpp"
#include "spheredpp/riesz_energy.hpp"
#include "spheredpp/sphere_geometry.hpp"
#include "spheredpp/verify.hpp"
#include "spheredpp/version.hpp"

namespace {

using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

/// Writes content to path atomically (temp file in the same directory, then
/// rename).
void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::FILE* f = std::fopen(tmp.c_str(), "wb");
    if (!f) throw std::runtime_error("cannot open " + tmp + " for writing");
    const std::size_t written = std::fwrite(content.data(), 1, content.size(), f);
    std::fclose(f);
    if (written != content.size()) {
      throw std::runtime_error("short write to " + tmp);
    }
  }
  std::filesystem::rename(tmp, path);
}

void write_manifest(const std::string& out_path, const std::string& command,
                    const json& params) {
  json manifest;
  manifest["command"] = command;
  manifest["params"] = params;
  manifest["version"] = spheredpp::version_string;
  manifest["timestamp"] = iso_timestamp();
  write_atomic(out_path + ".manifest.json", manifest.dump(2) + "\n");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int cmd_sample(int d, long L, std::uint64_t seed, const std::string& out) {
  const spheredpp::SamplerConfig config{spheredpp::make_params(d, L), seed};
  const spheredpp::Configuration draw = spheredpp::sample(config);

  std::string csv;
  csv += "# d=" + std::to_string(d) + "\n";
  csv += "# L=" + std::to_string(L) + "\n";
  csv += "# N=" + std::to_string(config.params.N) + "\n";
  csv += "# seed=" + std::to_string(seed) + "\n";
  csv += std::string("# version=") + spheredpp::version_string + "\n";
  for (const auto& p : draw.points) {
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
      if (i) csv += ",";
      csv += format_double(p.coords[i]);
    }
    csv += "\n";
  }
  write_atomic(out, csv);
  write_manifest(out, "sample",
                 json{{"d", d}, {"L", L}, {"seed", seed}});
  std::cout << "wrote " << draw.points.size() << " points to " << out
            << " (rejections: " << draw.rejection_count << ")\n";
  return 0;
}

int cmd_energy(int d, long L, double s, int replicates, std::uint64_t seed,
               const std::string& out) {
  const spheredpp::EnsembleParams params = spheredpp::make_params(d, L);
  if (replicates < 2) {
    throw spheredpp::domain_error("--replicates must be at least 2");
  }
  if (!(s > 0.0 && s < 2.0 * d)) {
    throw spheredpp::domain_error("--s must satisfy 0 < s < 2d");
  }
  const spheredpp::SamplerConfig config{params, seed};
  const spheredpp::McEnergy mc =
      spheredpp::expected_energy_mc(config, s, replicates);
  const double n = static_cast<double>(params.N);
  const double v_s = spheredpp::continuous_energy(s, 2 * d);

  json report;
  report["d"] = d;
  report["L"] = L;
  report["N"] = params.N;
  report["s"] = s;
  report["seed"] = seed;
  report["replicates"] = replicates;
  report["mean"] = mc.mean;
  report["stderr"] = mc.std_error;
  report["v_s"] = v_s;
  report["n2_v_s"] = n * n * v_s;
  if (d >= 2) {
    const spheredpp::BoundReport bounds = spheredpp::make_bound_report(params, s);
    report["tau_star"] = bounds.tau;
    report["expected_energy_bound"] = bounds.expected_energy_bound;
    report["ensemble_coefficient"] = bounds.ensemble_coefficient;
    report["harmonic_coefficient"] = bounds.harmonic_coefficient;
    report["rate_constant"] = bounds.rate_constant;
  }
  report["per_replicate"] = mc.replicates;
  write_atomic(out, report.dump(2) + "\n");
  write_manifest(out, "energy",
                 json{{"d", d},
                      {"L", L},
                      {"s", s},
                      {"seed", seed},
                      {"replicates", replicates}});
  std::cout << "mean=" << mc.mean << " stderr=" << mc.std_error
            << " n2_v_s=" << n * n * v_s << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& out) {
  const auto results = spheredpp::verify_suite(suite);
  std::string summary;
  for (const auto& r : results) {
    summary += r.name + " " + (r.pass ? "PASS" : "FAIL") + " " +
               format_double(r.value) + " " + format_double(r.tolerance) + "\n";
  }
  std::cout << summary;
  if (!out.empty()) {
    write_atomic(out, summary);
    write_manifest(out, "verify", json{{"suite", suite}});
  }
  return spheredpp::all_passed(results) ? 0 : kExitFailure;
}

int cmd_plot_g(std::vector<int> d_list, const std::string& grid,
               const std::string& out) {
  if (d_list.empty()) d_list = {2, 3, 4, 5, 6, 7, 8};
  double lo = 0.0, hi = 5.0;
  int n = 501;
  if (!grid.empty()) {
    if (std::sscanf(grid.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3 || n < 2 ||
        !(hi > lo) || lo < 0.0) {
      throw spheredpp::domain_error("--grid must be tmin:tmax:count with 0 <= tmin < tmax");
    }
  }
  std::vector<spheredpp::RadialMap> maps;
  maps.reserve(d_list.size());
  for (int d : d_list) maps.emplace_back(d);

  std::string csv = "# columns=t";
  for (int d : d_list) csv += ",g_d" + std::to_string(d);
  csv += "\n";
  for (int i = 0; i < n; ++i) {
    const double t = lo + (hi - lo) * i / (n - 1);
    csv += format_double(t);
    for (const auto& map : maps) {
      const double g = t > 0.0 ? map.forward(t) : 0.0;  // g(0+) = 0
      csv += "," + format_double(g);
    }
    csv += "\n";
  }
  write_atomic(out, csv);
  write_manifest(out, "plot-g",
                 json{{"d_list", d_list}, {"grid", grid.empty() ? "0:5:501" : grid}});

  // Report the observed ordering at mid-grid; nothing is asserted about it.
  const double t_mid = 0.5 * (lo + hi);
  if (t_mid > 0.0 && d_list.size() > 1) {
    std::cout << "ordering at t=" << t_mid << ":";
    std::vector<std::pair<double, int>> vals;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      vals.emplace_back(maps[i].forward(t_mid), d_list[i]);
    }
    std::sort(vals.rbegin(), vals.rend());
    for (const auto& [g, d] : vals) std::cout << " d=" << d;
    std::cout << " (top to bottom)\n";
  }
  return 0;
}

int cmd_compare_bounds(int dim, double s, const std::string& grid,
                       const std::string& out) {
  if (dim < 2 || dim % 2 != 0) {
    throw spheredpp::domain_error("--d must be a positive even sphere dimension");
  }
  const int d = dim / 2;
  long l_lo = 1, l_hi = 12;
  if (!grid.empty()) {
    if (std::sscanf(grid.c_str(), "%ld:%ld", &l_lo, &l_hi) != 2 || l_lo < 1 ||
        l_hi < l_lo) {
      throw spheredpp::domain_error("--grid must be Lmin:Lmax with 1 <= Lmin <= Lmax");
    }
  }
  const double v_s = spheredpp::continuous_energy(s, dim);
  const double c_harm = spheredpp::harmonic_energy_coefficient(dim, s);
  const double c_ens = spheredpp::ensemble_energy_coefficient(d, s);

  std::string csv = "# columns=N,harmonic_bound,spherical_bound\n";
  for (long L = l_lo; L <= l_hi; ++L) {
    const auto params = spheredpp::make_params(d, L);
    const double n = static_cast<double>(params.N);
    const double harmonic = n * n * v_s - c_harm * std::pow(n, 1.0 + s / dim);
    const double spherical = n * n * v_s - c_ens * std::pow(n, 1.0 + s / dim);
    csv += std::to_string(params.N) + "," + format_double(harmonic) + "," +
           format_double(spherical) + "\n";
  }
  write_atomic(out, csv);
  write_manifest(out, "compare-bounds",
                 json{{"dim", dim}, {"s", s}, {"grid", grid.empty() ? "1:12" : grid}});
  std::cout << "harmonic_coefficient=" << c_harm
            << " spherical_coefficient=" << c_ens << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homogeneous determinantal point processes on even-dimensional "
               "spheres: sampling, Riesz energy experiments, verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", spheredpp::version_string);

  int d = 2;
  long L = 3;
  double s = 1.0;
  double tau = -1.0;
  std::uint64_t seed = 0;
  int replicates = 100;
  std::string out;
  std::string suite = "all";
  std::string grid;
  std::vector<int> d_list;

  auto* sample_cmd = app.add_subcommand("sample", "Draw one configuration and write it as CSV");
  sample_cmd->add_option("--d", d, "dimension parameter (sphere S^{2d})")->required();
  sample_cmd->add_option("--L", L, "degree parameter; N = C(d+L, d)")->required();
  sample_cmd->add_option("--seed", seed, "RNG seed");
  sample_cmd->add_option("--out", out, "output CSV path")->required();

  auto* energy_cmd = app.add_subcommand("energy", "Monte-Carlo energy experiment with bound report");
  energy_cmd->add_option("--d", d)->required();
  energy_cmd->add_option("--L", L)->required();
  energy_cmd->add_option("--s", s, "Riesz exponent")->required();
  energy_cmd->add_option("--replicates", replicates, "number of replicates (>= 2)");
  energy_cmd->add_option("--seed", seed);
  energy_cmd->add_option("--tau", tau, "also evaluate the energy bound at this tau");
  energy_cmd->add_option("--out", out, "output JSON path")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant verification suites");
  verify_cmd->add_option("--suite", suite,
                         "one of beta, geometry, kernel, sampler, energy, all");
  verify_cmd->add_option("--out", out, "optional summary path");

  auto* plot_cmd = app.add_subcommand("plot-g", "Tabulate the radial profiles g_d on a grid");
  plot_cmd->add_option("--d", d_list, "dimension values (repeatable)");
  plot_cmd->add_option("--grid", grid, "tmin:tmax:count (default 0:5:501)");
  plot_cmd->add_option("--out", out)->required();

  int dim = 8;
  double cb_s = 6.0;
  auto* compare_cmd = app.add_subcommand(
      "compare-bounds", "Tabulate harmonic vs spherical energy bounds over N");
  compare_cmd->add_option("--d", dim, "sphere dimension (even)");
  compare_cmd->add_option("--s", cb_s, "Riesz exponent");
  compare_cmd->add_option("--grid", grid, "Lmin:Lmax for the N grid (default 1:12)");
  compare_cmd->add_option("--out", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sample_cmd->parsed()) return cmd_sample(d, L, seed, out);
    if (energy_cmd->parsed()) {
      if (tau > 0.0) {
        const double bound =
            spheredpp::expected_energy_bound(spheredpp::make_params(d, L), s, tau);
        std::cout << "expected_energy_bound(tau=" << tau << ")=" << bound << "\n";
      }
      return cmd_energy(d, L, s, replicates, seed, out);
    }
    if (verify_cmd->parsed()) return cmd_verify(suite, out);
    if (plot_cmd->parsed()) return cmd_plot_g(d_list, grid, out);
    if (compare_cmd->parsed()) return cmd_compare_bounds(dim, cb_s, grid, out);
  } catch (const spheredpp::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
