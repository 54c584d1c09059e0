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

#ifndef SUBSYS_BIT_MATRIX_H
#define SUBSYS_BIT_MATRIX_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subsys {

inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for_bits(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

/// A fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bits past `size()` in the last word are always zero, so word-wise
/// comparison and popcount are exact.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t size);

    /// Parses a string of '0'/'1' characters; index 0 is the first character.
    static BitVector from_string(std::string_view bits);
    /// Low `size` bits of `mask`, bit i of the mask becoming entry i.
    static BitVector from_mask(std::uint64_t mask, std::size_t size);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value);
    void flip(std::size_t i) { words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits); }

    std::size_t weight() const;
    bool is_zero() const;
    /// Entries as a mask; requires size() <= 64.
    std::uint64_t to_mask() const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    BitVector &operator^=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }
    friend bool operator==(const BitVector &a, const BitVector &b) = default;

    std::string str() const;

   private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Lexicographic order on equal-length vectors, entry 0 most significant
/// and 0 < 1.
bool lex_less(const BitVector &a, const BitVector &b);

/// Dense row-major matrix over GF(2). Each row occupies a whole number of
/// 64-bit words. Matrices with zero rows or zero columns are valid values.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    /// The matrix with a single 1 at (r, c).
    static BitMatrix unit(std::size_t rows, std::size_t cols, std::size_t r, std::size_t c);
    /// Rows given as '0'/'1' strings, all of equal length. An empty list
    /// gives a 0x0 matrix; use from_rows(rows, cols) for other empty shapes.
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
    static BitMatrix from_strings(std::span<const std::string> rows, std::size_t cols);
    static BitMatrix from_rows(std::span<const BitVector> rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool value);
    void flip(std::size_t r, std::size_t c) {
        data_[r * stride_ + c / kWordBits] ^= std::uint64_t{1} << (c % kWordBits);
    }

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {data_.data() + r * stride_, stride_};
    }
    std::span<std::uint64_t> row_words(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::size_t stride() const { return stride_; }

    BitVector row(std::size_t r) const;
    BitVector col(std::size_t c) const;
    void set_row(std::size_t r, const BitVector &v);
    void set_col(std::size_t c, const BitVector &v);
    /// row(dst) ^= row(src)
    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    BitMatrix transposed() const;
    bool is_zero() const;
    bool is_identity() const;
    std::size_t popcount() const;

    BitMatrix &operator^=(const BitMatrix &other);
    friend BitMatrix operator^(BitMatrix a, const BitMatrix &b) { return a ^= b; }
    friend bool operator==(const BitMatrix &a, const BitMatrix &b) = default;

    /// Rows rendered as '0'/'1' strings.
    std::vector<std::string> row_strings() const;
    /// Rows joined by '\n'.
    std::string str() const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Number of positions where both matrices hold a 1, mod 2. Equal to
/// trace(a * b^T) over GF(2).
bool and_parity(const BitMatrix &a, const BitMatrix &b);

}  // namespace subsys

#endif
