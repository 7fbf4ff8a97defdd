//
// Copyright 2026 The inid-dp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Command-line front end: single calibrations as JSON, sweeps and application
// comparisons as CSV, Monte-Carlo audits as JSON.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "inid/experiments.h"
#include "inid/gaussian.h"
#include "inid/laplace.h"
#include "inid/mechanism.h"
#include "inid/profile.h"

namespace {

using nlohmann::json;

struct ProfileArgs {
  std::string file;
  std::string family;
  int k = 0;
  std::string normalize = "l2";
};

void AddProfileOptions(CLI::App* cmd, ProfileArgs* args) {
  auto* file = cmd->add_option("--profile", args->file,
                               "profile file (JSON {\"lambda\": [...]} or "
                               "single-column CSV)");
  auto* family = cmd->add_option(
      "--family", args->family,
      "profile family: uniform|one_hot|linear|quadratic|exponential");
  cmd->add_option("--K", args->k, "profile dimension for --family");
  cmd->add_option("--normalize", args->normalize,
                  "normalization for --family: l1|l2|none");
  file->excludes(family);
}

inid::SensitivityProfile ResolveProfile(const ProfileArgs& args) {
  if (!args.file.empty()) return inid::LoadProfile(args.file);
  if (args.family.empty()) {
    throw std::invalid_argument("exactly one of --profile or --family is required");
  }
  if (args.k < 1) {
    throw std::invalid_argument("--family requires --K >= 1");
  }
  return inid::Generate({inid::ProfileKindFromString(args.family), args.k,
                         inid::NormalizationFromString(args.normalize)});
}

int RunCalibrate(const std::string& mechanism_name, const std::string& mode_name,
                 double epsilon, double delta, double p,
                 const ProfileArgs& profile_args, bool approx_dp) {
  const inid::SensitivityProfile profile = ResolveProfile(profile_args);
  const inid::Mechanism mechanism = inid::MechanismFromString(mechanism_name);
  const inid::Mode mode = inid::ModeFromString(mode_name);

  json out;
  out["schema_version"] = inid::kResultSchemaVersion;
  out["mechanism"] = mechanism_name;
  out["mode"] = mode_name;
  out["p"] = p;
  out["epsilon"] = epsilon;
  out["delta"] = delta;

  inid::NoiseScales scales;
  if (mechanism == inid::Mechanism::kGaussian) {
    const inid::PrivacyBudget budget{epsilon, delta};
    scales = inid::CalibrateGaussian(profile, budget, mode, p);
    out["mu0"] = inid::CachedMu0(budget);
  } else if (approx_dp) {
    scales = inid::CalibrateLaplaceApproxDp(profile, {epsilon, delta}, p);
    out["mode"] = "inid";
    out["realized_budget"] = inid::PureDpCheck(profile, scales);
  } else {
    scales = inid::CalibrateLaplace(profile, epsilon, mode, p);
    out["realized_budget"] = inid::PureDpCheck(profile, scales);
  }
  out["scales"] = scales.scales;
  out["theoretical_error"] = scales.theoretical_error;
  out["theoretical_error_db"] = 10.0 * std::log10(scales.theoretical_error);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int RunExperiment(const std::string& name, const std::string& out_path,
                  std::optional<std::uint64_t> seed, int k_max, double epsilon,
                  double delta, int n_seeds) {
  std::vector<inid::ExperimentRecord> records;
  if (name == "fig_eps_sweep") {
    auto gaussian = inid::RunEpsSweep(inid::Mechanism::kGaussian, 20, delta);
    auto laplace = inid::RunEpsSweep(inid::Mechanism::kLaplace, 20, delta);
    records = std::move(gaussian);
    records.insert(records.end(), laplace.begin(), laplace.end());
  } else if (name == "fig_k_sweep") {
    auto gaussian =
        inid::RunKSweep(inid::Mechanism::kGaussian, k_max, epsilon, delta);
    auto laplace =
        inid::RunKSweep(inid::Mechanism::kLaplace, k_max, epsilon, delta);
    records = std::move(gaussian);
    records.insert(records.end(), laplace.begin(), laplace.end());
  } else if (name == "fig_gini") {
    records = inid::RunGiniSweep(k_max);
  } else if (name == "fig_lap_vs_gau") {
    records = inid::RunLaplaceVsGaussian(k_max, epsilon, delta);
  } else if (name == "table_staircase") {
    records = inid::RunStaircaseTable();
  } else if (name == "dpcd" || name == "dppca") {
    if (!seed.has_value()) {
      throw std::invalid_argument("experiment " + name +
                                  " is randomized and requires --seed");
    }
    records = name == "dpcd" ? inid::RunDpCdExperiment(*seed, n_seeds)
                             : inid::RunDpPcaExperiment(*seed, n_seeds);
  } else {
    throw std::invalid_argument("unknown experiment name: " + name);
  }
  inid::WriteCsv(out_path, records);
  std::cout << "wrote " << records.size() << " records to " << out_path << "\n";
  return 0;
}

int RunAudit(const std::string& mechanism_name, const std::string& mode_name,
             double epsilon, double delta, double p,
             const ProfileArgs& profile_args, long n, std::uint64_t seed) {
  const inid::SensitivityProfile profile = ResolveProfile(profile_args);
  const inid::Mechanism mechanism = inid::MechanismFromString(mechanism_name);
  const inid::Mode mode = inid::ModeFromString(mode_name);
  inid::NoiseScales scales =
      mechanism == inid::Mechanism::kGaussian
          ? inid::CalibrateGaussian(profile, {epsilon, delta}, mode, p)
          : inid::CalibrateLaplace(profile, epsilon, mode, p);
  inid::SeededRng rng(seed);
  const inid::AuditReport report =
      inid::Audit(scales, profile, epsilon, n, rng);

  json out;
  out["schema_version"] = inid::kResultSchemaVersion;
  out["mechanism"] = mechanism_name;
  out["mode"] = mode_name;
  out["epsilon"] = epsilon;
  out["delta_target"] = delta;
  out["empirical_profile"] = report.empirical_profile;
  out["std_error"] = report.std_error;
  out["n_samples"] = report.n_samples;
  out["max_loss"] = report.max_loss;
  out["worst_case_d"] = report.worst_case_d;
  if (mechanism == inid::Mechanism::kGaussian) {
    out["analytic_profile"] =
        inid::GaussianPrivacyLossTail(scales, profile, epsilon).analytic;
  } else {
    out["realized_budget"] = inid::PureDpCheck(profile, scales);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noise calibration for i.n.i.d. Gaussian and Laplace mechanisms"};
  app.require_subcommand(1);

  // calibrate
  std::string mechanism = "gaussian";
  std::string mode = "inid";
  double epsilon = 1.0;
  double delta = 0.0;
  double p = 2.0;
  bool approx_dp = false;
  ProfileArgs profile_args;
  auto* calibrate = app.add_subcommand(
      "calibrate", "compute noise scales for a profile and budget");
  calibrate->add_option("--mechanism", mechanism, "gaussian|laplace")
      ->required();
  calibrate->add_option("--mode", mode, "iid|spr|inid")->required();
  calibrate->add_option("--epsilon", epsilon, "privacy budget")->required();
  calibrate->add_option("--delta", delta, "privacy leakage (default 0)");
  calibrate->add_option("--p", p, "error order (default 2, the MSE)");
  calibrate->add_flag("--approx-dp", approx_dp,
                      "Laplace only: calibrate for (epsilon, delta)-DP via "
                      "the effective budget epsilon - log(1 - delta)");
  AddProfileOptions(calibrate, &profile_args);

  // experiment
  std::string experiment_name;
  std::string out_path = "results.csv";
  std::optional<std::uint64_t> seed;
  int k_max = 50;
  double exp_epsilon = 0.5;
  double exp_delta = 1e-6;
  int n_seeds = 30;
  auto* experiment =
      app.add_subcommand("experiment", "emit a sweep or comparison as CSV");
  experiment
      ->add_option("name", experiment_name,
                   "fig_eps_sweep|fig_k_sweep|fig_gini|fig_lap_vs_gau|"
                   "table_staircase|dpcd|dppca")
      ->required();
  experiment->add_option("--out", out_path, "output CSV path");
  experiment->add_option("--seed", seed,
                         "RNG seed (required for dpcd/dppca)");
  experiment->add_option("--k-max", k_max, "largest profile dimension");
  experiment->add_option("--epsilon", exp_epsilon, "privacy budget for sweeps");
  experiment->add_option("--delta", exp_delta, "privacy leakage for sweeps");
  experiment->add_option("--seeds", n_seeds,
                         "number of paired seeds for dpcd/dppca");

  // audit
  std::string audit_mechanism = "gaussian";
  std::string audit_mode = "inid";
  double audit_epsilon = 1.0;
  double audit_delta = 1e-3;
  double audit_p = 2.0;
  long audit_n = 1000000;
  std::uint64_t audit_seed = 0;
  ProfileArgs audit_profile;
  auto* audit = app.add_subcommand(
      "audit", "Monte-Carlo check of the calibrated privacy guarantee");
  audit->add_option("--mechanism", audit_mechanism, "gaussian|laplace")
      ->required();
  audit->add_option("--mode", audit_mode, "iid|spr|inid")->required();
  audit->add_option("--epsilon", audit_epsilon, "privacy budget")->required();
  audit->add_option("--delta", audit_delta, "privacy leakage target");
  audit->add_option("--p", audit_p, "error order of the calibration");
  audit->add_option("--n", audit_n, "number of samples (>= 10^4)");
  audit->add_option("--seed", audit_seed, "RNG seed")->required();
  AddProfileOptions(audit, &audit_profile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (calibrate->parsed()) {
      return RunCalibrate(mechanism, mode, epsilon, delta, p, profile_args,
                          approx_dp);
    }
    if (experiment->parsed()) {
      return RunExperiment(experiment_name, out_path, seed, k_max, exp_epsilon,
                           exp_delta, n_seeds);
    }
    if (audit->parsed()) {
      return RunAudit(audit_mechanism, audit_mode, audit_epsilon, audit_delta,
                      audit_p, audit_profile, audit_n, audit_seed);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
