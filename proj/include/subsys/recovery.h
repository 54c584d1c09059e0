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

#ifndef SUBSYS_RECOVERY_H
#define SUBSYS_RECOVERY_H

#include <cstddef>
#include <cstdint>
#include <optional>

#include "subsys/bit_matrix.h"
#include "subsys/code_builder.h"
#include "subsys/pauli_grid.h"

namespace subsys {

/// Measured flips of the stabilizer generators. Entry (a, b) of s_z is
/// Z-stabilizer (a, b); entry (a, b) of s_x is X-stabilizer (a, b).
struct Syndrome {
    BitMatrix s_z;  // (n1-k1) x k2
    BitMatrix s_x;  // k1 x (n2-k2)

    bool is_zero() const { return s_z.is_zero() && s_x.is_zero(); }
    friend bool operator==(const Syndrome &, const Syndrome &) = default;
};

struct RecoveryOutcome {
    PauliGrid correction;
    BitMatrix residual_u;  // k1 x k2, logical Z content of error * correction
    BitMatrix residual_v;  // k1 x k2, logical X content
    bool logical_ok = false;
};

/// s_z = P1 B G2^T and s_x = G1 A P2^T for error i^p Z^A X^B.
Syndrome extract_syndrome(const SubsystemCode &code, const PauliGrid &error);
/// Same syndrome, read off generator by generator from commutation with
/// the error. Slower; kept as an independent route for cross-checks.
Syndrome syndrome_by_commutation(const SubsystemCode &code, const PauliGrid &error);

/// Decodes each column of s_z with c1 into a column of C and returns
/// X^{C P2^c}.
PauliGrid decode_bitflip(const SubsystemCode &code, const BitMatrix &s_z);
/// Decodes each row of s_x with c2 into a row of F and returns
/// Z^{P1^c^T F}.
PauliGrid decode_phaseflip(const SubsystemCode &code, const BitMatrix &s_x);

/// Measures the syndrome, applies both decoding stages, and classifies the
/// residual error * correction by its logical coefficients.
RecoveryOutcome recover(const SubsystemCode &code, const PauliGrid &error);

/// Recovery for the generalized Shor code from the same pair: each column
/// is decoded with c1 from its own Z-check syndrome P1 B_j, then the
/// X-type stage runs exactly as in decode_phaseflip. The residual is
/// classified by the same logical blocks (U, V).
RecoveryOutcome recover_shor(const ShorCode &code, const PauliGrid &error);

/// Largest candidate count distance_bruteforce accepts.
inline constexpr std::uint64_t kMaxDistanceCandidates = 100'000'000;

/// Sum over w <= w_max of C(n, w) 3^w, saturating.
std::uint64_t distance_candidate_count(std::size_t n, std::size_t w_max);

/// Minimum weight of a Pauli operator with zero syndrome and nonzero
/// logical content (U, V), searched up to w_max. Returns nullopt when no
/// such operator has weight <= w_max. Throws SearchLimitExceeded when the
/// candidate count exceeds kMaxDistanceCandidates. `workers` splits the
/// search; the result does not depend on it.
std::optional<std::size_t> distance_bruteforce(const SubsystemCode &code, std::size_t w_max,
                                               std::size_t workers = 1);

}  // namespace subsys

#endif
