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

#ifndef SUBSYS_CODE_BUILDER_H
#define SUBSYS_CODE_BUILDER_H

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "subsys/bit_matrix.h"
#include "subsys/linear_code.h"
#include "subsys/pauli_grid.h"

namespace subsys {

/// Sizes of the operator groups built from a pair of classical codes.
struct CodeCounts {
    std::size_t n = 0;  // physical qubits n1 n2
    std::size_t k = 0;  // logical qubits k1 k2
    std::size_t gauge_qubits = 0;
    std::size_t z_stabilizers = 0;
    std::size_t x_stabilizers = 0;

    std::size_t stabilizers() const { return z_stabilizers + x_stabilizers; }
    friend bool operator==(const CodeCounts &, const CodeCounts &) = default;
};

/// Subsystem code stabilizer counts: (n1-k1) k2 Z-type, k1 (n2-k2) X-type.
CodeCounts subsystem_counts(std::size_t n1, std::size_t k1, std::size_t n2, std::size_t k2);
/// Generalized Shor counts: (n1-k1) n2 Z-type, k1 (n2-k2) X-type.
CodeCounts shor_counts(std::size_t n1, std::size_t k1, std::size_t n2, std::size_t k2);

/// Subsystem code on an n1 x n2 grid built from two classical codes.
///
/// Generators, in fixed order:
///   stabilizers   Z^{P1^T E_ab G2}      a < n1-k1, b < k2   (row-major)
///                 X^{G1^T E_ab P2}      a < k1,    b < n2-k2
///   gauge         Z^{P1^T E_ab G2^c}    a < n1-k1, b < n2-k2
///                 X^{G1^c^T E_ab P2}    same range; Z-gauge i pairs with X-gauge i
///   logicals      X_ij = X^{G1^T E_ij P2^c}, Z_ij = Z^{P1^c^T E_ij G2}
///
/// The constructor checks all commutation relations and the counting
/// identity, throwing InconsistentCode on any failure.
class SubsystemCode {
   public:
    SubsystemCode(LinearCode c1, LinearCode c2);

    const LinearCode &c1() const { return c1_; }
    const LinearCode &c2() const { return c2_; }
    std::size_t n1() const { return c1_.n(); }
    std::size_t n2() const { return c2_.n(); }
    const CodeCounts &counts() const { return counts_; }
    std::size_t n() const { return counts_.n; }
    std::size_t k() const { return counts_.k; }
    std::size_t gauge_qubits() const { return counts_.gauge_qubits; }
    /// min(d1, d2) when both classical distances are known.
    std::optional<std::size_t> distance() const;

    /// Z-type generators first, then X-type.
    std::span<const PauliGrid> stabilizers() const { return stabilizers_; }
    std::span<const PauliGrid> z_stabilizers() const { return {stabilizers_.data(), counts_.z_stabilizers}; }
    std::span<const PauliGrid> x_stabilizers() const {
        return {stabilizers_.data() + counts_.z_stabilizers, counts_.x_stabilizers};
    }
    /// All Z-gauge generators, then all X-gauge generators.
    std::span<const PauliGrid> gauge_generators() const { return gauge_; }
    std::span<const PauliGrid> z_gauge() const { return {gauge_.data(), counts_.gauge_qubits}; }
    std::span<const PauliGrid> x_gauge() const { return {gauge_.data() + counts_.gauge_qubits, counts_.gauge_qubits}; }

    const PauliGrid &logical_x(std::size_t i, std::size_t j) const { return logical_x_[i * c2_.k() + j]; }
    const PauliGrid &logical_z(std::size_t i, std::size_t j) const { return logical_z_[i * c2_.k() + j]; }
    std::span<const PauliGrid> logical_xs() const { return logical_x_; }
    std::span<const PauliGrid> logical_zs() const { return logical_z_; }

    // Transposes of c2's matrices, used as right factors in every
    // coefficient extraction.
    const BitMatrix &p2_transposed() const { return p2_t_; }
    const BitMatrix &p2c_transposed() const { return p2c_t_; }
    const BitMatrix &g2_transposed() const { return g2_t_; }
    const BitMatrix &g2c_transposed() const { return g2c_t_; }

   private:
    LinearCode c1_;
    LinearCode c2_;
    CodeCounts counts_;
    std::vector<PauliGrid> stabilizers_;
    std::vector<PauliGrid> gauge_;
    std::vector<PauliGrid> logical_x_;
    std::vector<PauliGrid> logical_z_;

    BitMatrix p2_t_;
    BitMatrix p2c_t_;
    BitMatrix g2_t_;
    BitMatrix g2c_t_;
};

/// Generalized Shor subspace code: c1 bit-flip checks inside each column,
/// then c2 phase-flip checks across the encoded qubits of the columns.
///
/// Stabilizers: Z^{P1^T E_aj} for a < n1-k1 and column j < n2, then
/// X^{G1^T E_ib P2} for i < k1, b < n2-k2. Logicals match SubsystemCode.
class ShorCode {
   public:
    ShorCode(LinearCode c1, LinearCode c2);

    const LinearCode &c1() const { return c1_; }
    const LinearCode &c2() const { return c2_; }
    const CodeCounts &counts() const { return counts_; }
    std::size_t n() const { return counts_.n; }
    std::size_t k() const { return counts_.k; }
    std::optional<std::size_t> distance() const;

    std::span<const PauliGrid> stabilizers() const { return stabilizers_; }
    const PauliGrid &logical_x(std::size_t i, std::size_t j) const { return logical_x_[i * c2_.k() + j]; }
    const PauliGrid &logical_z(std::size_t i, std::size_t j) const { return logical_z_[i * c2_.k() + j]; }
    std::span<const PauliGrid> logical_xs() const { return logical_x_; }
    std::span<const PauliGrid> logical_zs() const { return logical_z_; }

   private:
    LinearCode c1_;
    LinearCode c2_;
    CodeCounts counts_;
    std::vector<PauliGrid> stabilizers_;
    std::vector<PauliGrid> logical_x_;
    std::vector<PauliGrid> logical_z_;
};

SubsystemCode build_subsystem(const LinearCode &c1, const LinearCode &c2);
ShorCode build_shor(const LinearCode &c1, const LinearCode &c2);

/// Coefficients of an operator in the expansion
///
///   A = P1^T Q G2 + P1^T Q_c G2^c + P1^c^T U G2 + P1^c^T U_c G2^c
///   B = G1^T R P2 + G1^c^T R_c P2 + G1^T V P2^c + G1^c^T V_c P2^c
///
/// Q, U pick out stabilizer and logical Z content; Q_c, R_c gauge
/// content; U_c, V_c are the syndrome blocks.
struct PauliDecomposition {
    BitMatrix q;    // (n1-k1) x k2
    BitMatrix q_c;  // (n1-k1) x (n2-k2)
    BitMatrix r;    // k1 x (n2-k2)
    BitMatrix r_c;  // (n1-k1) x (n2-k2)
    BitMatrix u;    // k1 x k2
    BitMatrix u_c;  // k1 x (n2-k2)
    BitMatrix v;    // k1 x k2
    BitMatrix v_c;  // (n1-k1) x k2
    unsigned phase = 0;

    bool logical_trivial() const { return u.is_zero() && v.is_zero(); }
    friend bool operator==(const PauliDecomposition &, const PauliDecomposition &) = default;
};

/// Extracts the coefficients through the dual pairings, e.g.
/// Q = G1^c A P2^c^T and V = P1^c B G2^T.
PauliDecomposition decompose(const SubsystemCode &code, const PauliGrid &op);
/// Inverse of decompose. Throws DimensionMismatch on wrongly shaped blocks.
PauliGrid recompose(const SubsystemCode &code, const PauliDecomposition &coeffs);

/// Membership in the gauge group T (stabilizers times gauge operators),
/// ignoring phase: U, U_c, V and V_c all vanish.
bool is_in_gauge_group(const SubsystemCode &code, const PauliGrid &op);

}  // namespace subsys

#endif
