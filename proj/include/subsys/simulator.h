// Copyright 2026 The subsys Authors
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

#ifndef SUBSYS_SIMULATOR_H
#define SUBSYS_SIMULATOR_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "subsys/code_builder.h"
#include "subsys/linear_code.h"
#include "subsys/pauli_grid.h"

namespace subsys {

/// Independent single-qubit Pauli channel.
struct NoiseModel {
    enum class Kind { kDepolarizing, kIndependentXZ, kXOnly, kZOnly };

    Kind kind = Kind::kDepolarizing;
    double p = 0.0;    // depolarizing, x_only and z_only
    double p_x = 0.0;  // independent_xz
    double p_z = 0.0;  // independent_xz

    /// X, Y, Z each with probability p / 3.
    static NoiseModel depolarizing(double p);
    /// X with p_x and Z with p_z, independently.
    static NoiseModel independent_xz(double p_x, double p_z);
    static NoiseModel x_only(double p);
    static NoiseModel z_only(double p);

    /// "depolarizing", "independent_xz", "x_only" or "z_only".
    std::string name() const;
};

/// Parses a model name as accepted by NoiseModel::name(). For
/// independent_xz, p is used for both axes.
NoiseModel parse_noise_model(const std::string &name, double p);

struct TrialReport {
    std::uint64_t trials = 0;
    std::uint64_t logical_failures = 0;
    double rate = 0.0;
    double std_error = 0.0;
    std::uint64_t seed = 0;
    CodeCounts code_params;

    friend bool operator==(const TrialReport &, const TrialReport &) = default;
};

/// Counter-based generator: the stream for trial t depends only on
/// (seed, t), so trials can be split across workers freely.
class TrialRng {
   public:
    TrialRng(std::uint64_t seed, std::uint64_t trial);
    std::uint64_t next();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();

   private:
    std::uint64_t state_;
};

/// Samples one error on the code's grid. Y sites carry both bits and
/// phase 0; recovery ignores phases.
PauliGrid sample_error(const NoiseModel &noise, std::size_t n1, std::size_t n2, TrialRng &rng);

/// Monte Carlo logical failure rate of recover() under `noise`. Throws
/// std::invalid_argument when trials == 0 or probabilities fall outside
/// [0, 1]. The report is identical for every worker count.
TrialReport run_trials(const SubsystemCode &code, const NoiseModel &noise, std::uint64_t trials,
                       std::uint64_t seed, std::size_t workers = 1);

/// Largest code length exact_rate_enumeration accepts.
inline constexpr std::size_t kMaxEnumerationQubits = 20;

/// Exact failure probability for x_only or z_only noise by summing over
/// all 2^n error patterns. Throws std::invalid_argument for other channels
/// and SearchLimitExceeded for n > kMaxEnumerationQubits.
double exact_rate_enumeration(const SubsystemCode &code, const NoiseModel &noise);

/// Stabilizer counts reported for layered schemes on a [[49,16,3]] code.
struct ComposedSchemes {
    std::size_t base_stabilizers = 0;
    std::size_t redundancy_layer = 0;       // [[16,1,4]] on all 16 encoded qubits
    std::size_t redundancy_layer_9 = 0;     // [[9,1,3]] on 9 of the 16
    std::size_t with_redundancy_layer = 0;  // base + redundancy_layer
    std::size_t with_redundancy_layer_9 = 0;
    std::size_t steane_inner = 0;  // 7 blocks of 6
    std::size_t steane_outer = 0;
    std::size_t concatenated_steane = 0;
};

struct CodeParameters {
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> d;
};

struct CompareReport {
    CodeParameters c1;
    CodeParameters c2;
    CodeParameters quantum;  // shared by both constructions
    std::size_t gauge_qubits = 0;
    CodeCounts subsystem;
    CodeCounts shor;
    std::size_t savings = 0;  // shor minus subsystem stabilizers
    std::optional<ComposedSchemes> composed;
};

/// Stabilizer measurement counts for both constructions from (c1, c2).
/// The composed-scheme block is filled when both codes are [7,4,3].
CompareReport compare_report(const LinearCode &c1, const LinearCode &c2);

}  // namespace subsys

#endif
