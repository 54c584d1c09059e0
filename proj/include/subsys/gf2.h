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

#ifndef SUBSYS_GF2_H
#define SUBSYS_GF2_H

#include <cstddef>
#include <optional>
#include <vector>

#include "subsys/bit_matrix.h"

namespace subsys {

/// Matrix product over GF(2). Throws DimensionMismatch unless a.cols() == b.rows().
BitMatrix mat_mul(const BitMatrix &a, const BitMatrix &b);
/// m * v^T as a vector of length m.rows().
BitVector mat_vec(const BitMatrix &m, const BitVector &v);

BitMatrix vstack(const BitMatrix &top, const BitMatrix &bottom);
BitMatrix hstack(const BitMatrix &left, const BitMatrix &right);

struct RrefResult {
    BitMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form. Zero rows of `reduced` sit at the bottom.
RrefResult rref(const BitMatrix &m);
std::size_t rank(const BitMatrix &m);

/// Rows form a basis of {v : m * v^T = 0}; shape (cols - rank) x cols.
BitMatrix kernel_basis(const BitMatrix &m);

/// Some x with m * x^T = y, or nullopt when y is not in the column span.
std::optional<BitVector> solve(const BitMatrix &m, const BitVector &y);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<BitMatrix> inverse(const BitMatrix &m);

/// True when the rows of `a` and `b` span the same space.
bool same_row_space(const BitMatrix &a, const BitMatrix &b);

struct DualComplement {
    BitMatrix p_c;  // k x n
    BitMatrix g_c;  // (n-k) x n
};

/// Completes a parity check / generator pair to dual bases.
///
/// Given full-rank P ((n-k) x n) and G (k x n) with P G^T = 0, returns
/// P^c and G^c with
///
///     P^c G^T = I_k,  P G^c^T = I_{n-k},  P^c G^c^T = 0.
///
/// P is extended to an invertible matrix with standard basis rows; the
/// dual of that basis gives G^c directly, and the appended rows are then
/// rescaled so they pair with the given G.
///
/// Throws RankDeficient if either input lacks full row rank, the row
/// counts do not sum to n, or P G^T != 0.
DualComplement dual_complete(const BitMatrix &p, const BitMatrix &g);

}  // namespace subsys

#endif
