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

#include "subsys/bit_matrix.h"

#include <algorithm>
#include <utility>

#include "subsys/errors.h"

namespace subsys {

std::string shape_str(std::size_t rows, std::size_t cols) {
    return std::to_string(rows) + "x" + std::to_string(cols);
}

namespace {

bool parse_bit(char c) {
    if (c == '0') {
        return false;
    }
    if (c == '1') {
        return true;
    }
    throw std::invalid_argument(std::string("not a bit character: '") + c + "'");
}

}  // namespace

BitVector::BitVector(std::size_t size) : size_(size), words_(words_for_bits(size), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        v.set(i, parse_bit(bits[i]));
    }
    return v;
}

BitVector BitVector::from_mask(std::uint64_t mask, std::size_t size) {
    if (size > kWordBits) {
        throw DimensionMismatch("from_mask supports at most 64 bits, got " + std::to_string(size));
    }
    BitVector v(size);
    if (size > 0) {
        v.words_[0] = size == kWordBits ? mask : mask & ((std::uint64_t{1} << size) - 1);
    }
    return v;
}

void BitVector::set(std::size_t i, bool value) {
    auto &w = words_[i / kWordBits];
    auto bit = std::uint64_t{1} << (i % kWordBits);
    w = value ? (w | bit) : (w & ~bit);
}

std::size_t BitVector::weight() const {
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::uint64_t BitVector::to_mask() const {
    if (size_ > kWordBits) {
        throw DimensionMismatch("to_mask supports at most 64 bits, got " + std::to_string(size_));
    }
    return words_.empty() ? 0 : words_[0];
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.size_ != size_) {
        throw DimensionMismatch("xor of vectors of length " + std::to_string(size_) + " and " +
                                std::to_string(other.size_));
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

std::string BitVector::str() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

bool lex_less(const BitVector &a, const BitVector &b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("lex_less on vectors of length " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
    }
    auto wa = a.words();
    auto wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) {
        auto diff = wa[i] ^ wb[i];
        if (diff != 0) {
            // Lowest differing index decides; whoever has the 0 there is smaller.
            auto pos = std::countr_zero(diff);
            return ((wa[i] >> pos) & 1U) == 0;
        }
    }
    return false;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for_bits(cols)), data_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::unit(std::size_t rows, std::size_t cols, std::size_t r, std::size_t c) {
    if (r >= rows || c >= cols) {
        throw DimensionMismatch("unit index (" + std::to_string(r) + "," + std::to_string(c) +
                                ") outside " + shape_str(rows, cols));
    }
    BitMatrix m(rows, cols);
    m.set(r, c, true);
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    BitMatrix m(rows.size(), cols);
    std::size_t r = 0;
    for (auto row : rows) {
        if (row.size() != cols) {
            throw DimensionMismatch("ragged matrix rows");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m.set(r, c, parse_bit(row[c]));
        }
        ++r;
    }
    return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows, std::size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw DimensionMismatch("row " + std::to_string(r) + " has length " +
                                    std::to_string(rows[r].size()) + ", expected " + std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m.set(r, c, parse_bit(rows[r][c]));
        }
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::span<const BitVector> rows, std::size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        m.set_row(r, rows[r]);
    }
    return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    auto &w = data_[r * stride_ + c / kWordBits];
    auto bit = std::uint64_t{1} << (c % kWordBits);
    w = value ? (w | bit) : (w & ~bit);
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, v.words().begin());
    return v;
}

BitVector BitMatrix::col(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (get(r, c)) {
            v.set(r, true);
        }
    }
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector &v) {
    if (v.size() != cols_) {
        throw DimensionMismatch("row of length " + std::to_string(v.size()) + " into matrix " +
                                shape_str(rows_, cols_));
    }
    std::copy(v.words().begin(), v.words().end(), data_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

void BitMatrix::set_col(std::size_t c, const BitVector &v) {
    if (v.size() != rows_) {
        throw DimensionMismatch("column of length " + std::to_string(v.size()) + " into matrix " +
                                shape_str(rows_, cols_));
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        set(r, c, v.get(r));
    }
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    auto *d = data_.data() + dst * stride_;
    const auto *s = data_.data() + src * stride_;
    for (std::size_t i = 0; i < stride_; ++i) {
        d[i] ^= s[i];
    }
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t w = 0; w < stride_; ++w) {
            auto word = data_[r * stride_ + w];
            while (word != 0) {
                auto bit = static_cast<std::size_t>(std::countr_zero(word));
                t.set(w * kWordBits + bit, r, true);
                word &= word - 1;
            }
        }
    }
    return t;
}

bool BitMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BitMatrix::is_identity() const {
    return rows_ == cols_ && *this == identity(rows_);
}

std::size_t BitMatrix::popcount() const {
    std::size_t total = 0;
    for (auto w : data_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

BitMatrix &BitMatrix::operator^=(const BitMatrix &other) {
    if (other.rows_ != rows_ || other.cols_ != cols_) {
        throw DimensionMismatch("xor of " + shape_str(rows_, cols_) + " and " +
                                shape_str(other.rows_, other.cols_));
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] ^= other.data_[i];
    }
    return *this;
}

std::vector<std::string> BitMatrix::row_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out.push_back(row(r).str());
    }
    return out;
}

std::string BitMatrix::str() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r > 0) {
            out += '\n';
        }
        out += row(r).str();
    }
    return out;
}

bool and_parity(const BitMatrix &a, const BitMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("and_parity of " + shape_str(a.rows(), a.cols()) + " and " +
                                shape_str(b.rows(), b.cols()));
    }
    std::uint64_t acc = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto ra = a.row_words(r);
        auto rb = b.row_words(r);
        for (std::size_t w = 0; w < ra.size(); ++w) {
            acc ^= ra[w] & rb[w];
        }
    }
    return (std::popcount(acc) & 1) != 0;
}

}  // namespace subsys
