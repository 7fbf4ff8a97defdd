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

#ifndef INID_EXPERIMENTS_H_
#define INID_EXPERIMENTS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "inid/types.h"

namespace inid {

inline constexpr int kResultSchemaVersion = 1;

// One row of a sweep. Fields that do not apply to a row are NaN (numeric) or
// empty (string) and serialize to empty CSV cells.
struct ExperimentRecord {
  std::string mechanism;       // gaussian | laplace | staircase
  std::string mode;            // iid | spr | inid | reference
  std::string profile_family;  // uniform | one_hot | ... | dpcd | dppca
  int k = 0;
  double epsilon = 0.0;
  double delta = 0.0;
  double p = 2.0;
  double gini = 0.0;
  double theoretical_error = 0.0;
  double theoretical_error_db = 0.0;
  double empirical_error = 0.0;
  std::int64_t seed = -1;  // -1 = not a randomized row
};

// Serializes records with a header row; doubles are written with %.17g so a
// rerun with the same seed produces a byte-identical file. Throws if a
// record's dB field disagrees with 10*log10(theoretical_error).
std::string ToCsv(const std::vector<ExperimentRecord>& records);
void WriteCsv(const std::string& path,
              const std::vector<ExperimentRecord>& records);

// Theoretical-error sweeps behind the figures. Both inid mechanisms use
// p = 2 (MSE); profiles are l2-normalized for Gaussian, l1 for Laplace.
std::vector<ExperimentRecord> RunEpsSweep(Mechanism mechanism, int k = 20,
                                          double delta = 1e-6);
std::vector<ExperimentRecord> RunKSweep(Mechanism mechanism, int k_max = 50,
                                        double epsilon = 0.5,
                                        double delta = 1e-6);
std::vector<ExperimentRecord> RunGiniSweep(int k_max = 50);
// Gaussian vs Laplace with profiles normalized to unit l2 sensitivity.
std::vector<ExperimentRecord> RunLaplaceVsGaussian(int k_max = 50,
                                                   double epsilon = 0.5,
                                                   double delta = 1e-6);
// l1-errors for lambda = [0.85, 0.15]: closed forms for the iid and inid
// Laplace mechanisms plus the reference staircase constants.
std::vector<ExperimentRecord> RunStaircaseTable();

// Paired-seed application comparisons; one row per (seed, mode).
std::vector<ExperimentRecord> RunDpCdExperiment(std::uint64_t seed,
                                                int n_seeds = 30);
std::vector<ExperimentRecord> RunDpPcaExperiment(std::uint64_t seed,
                                                 int n_seeds = 30);

// One-sided sign test: probability of at least `wins` successes in `n` fair
// coin flips. Used to compare paired application runs.
double BinomialTailPValue(int wins, int n);

}  // namespace inid

#endif  // INID_EXPERIMENTS_H_
