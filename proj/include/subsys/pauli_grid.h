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

#ifndef SUBSYS_PAULI_GRID_H
#define SUBSYS_PAULI_GRID_H

#include <cstddef>
#include <cstdint>
#include <string>

#include "subsys/bit_matrix.h"

namespace subsys {

/// A Pauli operator i^phase Z^A X^B on an n1 x n2 grid of qubits.
///
/// Site (r, c) carries Z^{A[r,c]} X^{B[r,c]}, so a site with both bits set
/// is the product ZX = iY. The phase exponent is kept in [0, 4).
class PauliGrid {
   public:
    PauliGrid() = default;
    /// Identity on an n1 x n2 grid.
    PauliGrid(std::size_t n1, std::size_t n2);
    /// Throws DimensionMismatch if the two parts differ in shape.
    PauliGrid(BitMatrix z_part, BitMatrix x_part, unsigned phase = 0);

    static PauliGrid z_type(BitMatrix a);
    static PauliGrid x_type(BitMatrix b);
    /// Single-site operator; `pauli` is one of 'I', 'X', 'Y', 'Z'. 'Y' is the
    /// exact Y = i^3 Z X.
    static PauliGrid single(std::size_t n1, std::size_t n2, std::size_t r, std::size_t c, char pauli);

    std::size_t n1() const { return z_.rows(); }
    std::size_t n2() const { return z_.cols(); }
    const BitMatrix &z_part() const { return z_; }
    const BitMatrix &x_part() const { return x_; }
    unsigned phase() const { return phase_; }

    /// 'I', 'X', 'Y' or 'Z' at a site, ignoring phase.
    char symbol(std::size_t r, std::size_t c) const;
    std::size_t weight() const;
    bool is_identity_up_to_phase() const { return z_.is_zero() && x_.is_zero(); }

    PauliGrid with_phase(unsigned phase) const;

    /// Renders as a sign prefix ("+", "+i", "-", "-i") followed by the grid
    /// rows joined by '/', e.g. "+XII/III/III". The prefix is the overall
    /// scalar when each ZX site is read as Y.
    std::string str() const;

    friend bool operator==(const PauliGrid &a, const PauliGrid &b) = default;
    /// Equality of the Z and X parts.
    bool same_up_to_phase(const PauliGrid &other) const { return z_ == other.z_ && x_ == other.x_; }

   private:
    BitMatrix z_;
    BitMatrix x_;
    unsigned phase_ = 0;
};

/// Symplectic criterion: <A_x, B_y> + <B_x, A_y> = 0 mod 2. Throws
/// DimensionMismatch on differing grids.
bool commutes(const PauliGrid &x, const PauliGrid &y);

/// x * y with exact phase: p_x + p_y + 2 <B_x, A_y> mod 4. Throws
/// DimensionMismatch on differing grids.
PauliGrid multiply(const PauliGrid &x, const PauliGrid &y);

/// Symplectic vector [A | B], each flattened row-major; length 2 n1 n2.
BitVector to_symplectic(const PauliGrid &op);

inline PauliGrid operator*(const PauliGrid &x, const PauliGrid &y) { return multiply(x, y); }

}  // namespace subsys

#endif
