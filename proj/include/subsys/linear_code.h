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

#ifndef SUBSYS_LINEAR_CODE_H
#define SUBSYS_LINEAR_CODE_H

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subsys/bit_matrix.h"

namespace subsys {

/// Largest message length min_distance will enumerate.
inline constexpr std::size_t kMaxDistanceDimension = 24;
/// Codes up to this length decode from a full coset-leader table.
inline constexpr std::size_t kMaxTableLength = 16;
/// Default weight cap for the bounded coset-leader search on longer codes.
inline constexpr std::size_t kDefaultDecodeWeightCap = 4;

/// A binary linear [n, k, d] code with its generator G, parity check P,
/// and the dual-basis complements P^c (encoded Z) and G^c (pure errors).
///
/// Immutable after construction. Copies share the decoding table.
class LinearCode {
   public:
    /// P is taken as a kernel basis of G. Throws RankDeficient if G lacks
    /// full row rank.
    static LinearCode from_generator(BitMatrix g);
    /// G is taken as a kernel basis of P. Throws RankDeficient if P lacks
    /// full row rank.
    static LinearCode from_parity(BitMatrix p);
    /// Uses both matrices as given. Throws RankDeficient unless they are
    /// full rank and P G^T = 0.
    static LinearCode from_pair(BitMatrix g, BitMatrix p);

    std::size_t n() const { return generator_.cols(); }
    std::size_t k() const { return generator_.rows(); }
    std::size_t redundancy() const { return parity_.rows(); }

    const BitMatrix &generator() const { return generator_; }
    const BitMatrix &parity() const { return parity_; }
    const BitMatrix &parity_complement() const { return parity_c_; }
    const BitMatrix &generator_complement() const { return generator_c_; }

    std::optional<std::size_t> distance() const { return distance_; }
    /// Copy with the distance recorded; the value is checked against
    /// min_distance.
    LinearCode with_verified_distance(std::size_t d) const;

    /// P e^T.
    BitVector syndrome(const BitVector &error) const;

    /// Minimum-weight e with P e^T = s, ties going to the lexicographically
    /// smallest e. For n > kMaxTableLength the search stops at the code's
    /// weight cap and throws SearchLimitExceeded beyond it.
    BitVector decode(const BitVector &syndrome) const;

    /// Same as decode for n <= kMaxTableLength and redundancy <= 64; the
    /// syndrome and result are masks with bit i holding entry i.
    std::uint64_t decode_mask(std::uint64_t syndrome) const;
    bool has_table() const { return static_cast<bool>(table_); }

    /// Changes the bounded-search cap for codes too long for a table.
    LinearCode with_decode_weight_cap(std::size_t cap) const;

    /// m G for a k-bit message.
    BitVector encode(const BitVector &message) const;

   private:
    LinearCode(BitMatrix g, BitMatrix p);

    BitMatrix generator_;
    BitMatrix parity_;
    BitMatrix parity_c_;
    BitMatrix generator_c_;
    std::optional<std::size_t> distance_;
    std::size_t weight_cap_ = kDefaultDecodeWeightCap;
    // leader mask indexed by syndrome mask.
    std::shared_ptr<const std::vector<std::uint64_t>> table_;
};

/// Minimum weight over the 2^k - 1 nonzero codewords. Throws
/// SearchLimitExceeded for k > kMaxDistanceDimension and
/// std::invalid_argument for k = 0 (no nonzero codewords).
std::size_t min_distance(const LinearCode &code);

/// [n, 1, n] repetition code with the bidiagonal parity check.
LinearCode repetition_code(std::size_t n);
/// [7, 4, 3] Hamming code; parity check column j holds j + 1 in binary,
/// most significant bit in row 0.
LinearCode hamming_code_7_4();

/// Builtin family lookup. Accepts "rep:<n>", "repetition(<n>)",
/// "hamming:7-4" and "hamming(7,4)". Throws std::invalid_argument for
/// anything else.
LinearCode builtin_code(std::string_view name);

}  // namespace subsys

#endif
