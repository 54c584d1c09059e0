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

#include "subsys/simulator.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "subsys/errors.h"
#include "subsys/recovery.h"

namespace subsys {

namespace {

std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void check_probability(double p, const char *what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " probability " + std::to_string(p) + " outside [0, 1]");
    }
}

void check_noise(const NoiseModel &noise) {
    if (noise.kind == NoiseModel::Kind::kIndependentXZ) {
        check_probability(noise.p_x, "p_x");
        check_probability(noise.p_z, "p_z");
    } else {
        check_probability(noise.p, "noise");
    }
}

std::uint64_t failures_in_range(const SubsystemCode &code, const NoiseModel &noise, std::uint64_t seed,
                                std::uint64_t begin, std::uint64_t end) {
    std::uint64_t failures = 0;
    for (std::uint64_t t = begin; t < end; ++t) {
        TrialRng rng(seed, t);
        auto error = sample_error(noise, code.n1(), code.n2(), rng);
        if (!recover(code, error).logical_ok) {
            ++failures;
        }
    }
    return failures;
}

}  // namespace

NoiseModel NoiseModel::depolarizing(double p) { return {Kind::kDepolarizing, p, 0.0, 0.0}; }
NoiseModel NoiseModel::independent_xz(double p_x, double p_z) { return {Kind::kIndependentXZ, 0.0, p_x, p_z}; }
NoiseModel NoiseModel::x_only(double p) { return {Kind::kXOnly, p, 0.0, 0.0}; }
NoiseModel NoiseModel::z_only(double p) { return {Kind::kZOnly, p, 0.0, 0.0}; }

std::string NoiseModel::name() const {
    switch (kind) {
        case Kind::kDepolarizing:
            return "depolarizing";
        case Kind::kIndependentXZ:
            return "independent_xz";
        case Kind::kXOnly:
            return "x_only";
        case Kind::kZOnly:
            return "z_only";
    }
    return "unknown";
}

NoiseModel parse_noise_model(const std::string &name, double p) {
    if (name == "depolarizing") {
        return NoiseModel::depolarizing(p);
    }
    if (name == "independent_xz") {
        return NoiseModel::independent_xz(p, p);
    }
    if (name == "x_only") {
        return NoiseModel::x_only(p);
    }
    if (name == "z_only") {
        return NoiseModel::z_only(p);
    }
    throw std::invalid_argument("unknown noise model '" + name + "'");
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t s = seed;
    auto a = splitmix64(s);
    std::uint64_t t = trial ^ 0xd1b54a32d192ed03ULL;
    state_ = a ^ splitmix64(t);
}

std::uint64_t TrialRng::next() { return splitmix64(state_); }

double TrialRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

PauliGrid sample_error(const NoiseModel &noise, std::size_t n1, std::size_t n2, TrialRng &rng) {
    BitMatrix z(n1, n2);
    BitMatrix x(n1, n2);
    for (std::size_t r = 0; r < n1; ++r) {
        for (std::size_t c = 0; c < n2; ++c) {
            switch (noise.kind) {
                case NoiseModel::Kind::kDepolarizing: {
                    auto u = rng.uniform();
                    if (u < noise.p / 3) {
                        x.set(r, c, true);
                    } else if (u < 2 * noise.p / 3) {
                        x.set(r, c, true);
                        z.set(r, c, true);
                    } else if (u < noise.p) {
                        z.set(r, c, true);
                    }
                    break;
                }
                case NoiseModel::Kind::kIndependentXZ: {
                    auto ux = rng.uniform();
                    auto uz = rng.uniform();
                    x.set(r, c, ux < noise.p_x);
                    z.set(r, c, uz < noise.p_z);
                    break;
                }
                case NoiseModel::Kind::kXOnly:
                    x.set(r, c, rng.uniform() < noise.p);
                    break;
                case NoiseModel::Kind::kZOnly:
                    z.set(r, c, rng.uniform() < noise.p);
                    break;
            }
        }
    }
    return {std::move(z), std::move(x)};
}

TrialReport run_trials(const SubsystemCode &code, const NoiseModel &noise, std::uint64_t trials,
                       std::uint64_t seed, std::size_t workers) {
    if (trials == 0) {
        throw std::invalid_argument("run_trials: trials must be >= 1");
    }
    check_noise(noise);
    workers = std::clamp<std::size_t>(workers, 1, static_cast<std::size_t>(std::min<std::uint64_t>(trials, 256)));

    std::uint64_t failures = 0;
    if (workers == 1) {
        failures = failures_in_range(code, noise, seed, 0, trials);
    } else {
        std::vector<std::uint64_t> partial(workers, 0);
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < workers; ++w) {
            auto begin = trials * w / workers;
            auto end = trials * (w + 1) / workers;
            threads.emplace_back([&, w, begin, end] { partial[w] = failures_in_range(code, noise, seed, begin, end); });
        }
        for (auto &t : threads) {
            t.join();
        }
        for (auto f : partial) {
            failures += f;
        }
    }

    TrialReport report;
    report.trials = trials;
    report.logical_failures = failures;
    report.rate = static_cast<double>(failures) / static_cast<double>(trials);
    report.std_error = std::sqrt(report.rate * (1.0 - report.rate) / static_cast<double>(trials));
    report.seed = seed;
    report.code_params = code.counts();
    return report;
}

double exact_rate_enumeration(const SubsystemCode &code, const NoiseModel &noise) {
    const bool x_axis = noise.kind == NoiseModel::Kind::kXOnly;
    if (!x_axis && noise.kind != NoiseModel::Kind::kZOnly) {
        throw std::invalid_argument("exact_rate_enumeration: only x_only and z_only channels are enumerable, got " +
                                    noise.name());
    }
    check_noise(noise);
    const auto n = code.n();
    if (n > kMaxEnumerationQubits) {
        throw SearchLimitExceeded("exact_rate_enumeration: " + std::to_string(n) + " qubits exceeds limit " +
                                  std::to_string(kMaxEnumerationQubits));
    }
    // Probability of each weight class, computed once.
    std::vector<double> weight_prob(n + 1);
    for (std::size_t w = 0; w <= n; ++w) {
        weight_prob[w] = std::pow(noise.p, static_cast<double>(w)) * std::pow(1.0 - noise.p, static_cast<double>(n - w));
    }
    double total = 0.0;
    const std::uint64_t patterns = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
        BitMatrix bits(code.n1(), code.n2());
        for (std::size_t site = 0; site < n; ++site) {
            if ((mask >> site) & 1U) {
                bits.set(site / code.n2(), site % code.n2(), true);
            }
        }
        auto error = x_axis ? PauliGrid::x_type(std::move(bits)) : PauliGrid::z_type(std::move(bits));
        if (!recover(code, error).logical_ok) {
            total += weight_prob[static_cast<std::size_t>(std::popcount(mask))];
        }
    }
    return total;
}

CompareReport compare_report(const LinearCode &c1, const LinearCode &c2) {
    CompareReport report;
    report.c1 = {c1.n(), c1.k(), c1.distance()};
    report.c2 = {c2.n(), c2.k(), c2.distance()};
    std::optional<std::size_t> d;
    if (c1.distance() && c2.distance()) {
        d = std::min(*c1.distance(), *c2.distance());
    }
    report.quantum = {c1.n() * c2.n(), c1.k() * c2.k(), d};
    report.subsystem = subsystem_counts(c1.n(), c1.k(), c2.n(), c2.k());
    report.shor = shor_counts(c1.n(), c1.k(), c2.n(), c2.k());
    report.gauge_qubits = report.subsystem.gauge_qubits;
    report.savings = report.shor.stabilizers() - report.subsystem.stabilizers();

    auto is_hamming = [](const LinearCode &c) { return c.n() == 7 && c.k() == 4 && c.distance() == 3; };
    if (is_hamming(c1) && is_hamming(c2)) {
        ComposedSchemes s;
        s.base_stabilizers = report.subsystem.stabilizers();
        // Repetition subsystem layers on the 16 encoded qubits: 4x4, or 3x3 on 9 of them.
        s.redundancy_layer = subsystem_counts(4, 1, 4, 1).stabilizers();
        s.redundancy_layer_9 = subsystem_counts(3, 1, 3, 1).stabilizers();
        s.with_redundancy_layer = s.base_stabilizers + s.redundancy_layer;
        s.with_redundancy_layer_9 = s.base_stabilizers + s.redundancy_layer_9;
        // Steane code from the same Hamming code: n-k checks of each type.
        const auto steane = 2 * c1.redundancy();
        s.steane_inner = c1.n() * steane;
        s.steane_outer = steane;
        s.concatenated_steane = s.steane_inner + s.steane_outer;
        report.composed = s;
    }
    return report;
}

}  // namespace subsys
