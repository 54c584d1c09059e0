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

#include "subsys/linear_code.h"

#include <charconv>
#include <limits>
#include <stdexcept>
#include <utility>

#include "subsys/errors.h"
#include "subsys/gf2.h"

namespace subsys {

namespace {

std::uint64_t reverse_low_bits(std::uint64_t mask, std::size_t bits) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < bits; ++i) {
        out = (out << 1) | ((mask >> i) & 1U);
    }
    return out;
}

// Coset leader per syndrome, by (weight, lexicographic) over all 2^n vectors.
std::vector<std::uint64_t> build_leader_table(const BitMatrix &parity) {
    const auto n = parity.cols();
    const auto r = parity.rows();
    std::vector<std::uint64_t> column_syndrome(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < r; ++i) {
            if (parity.get(i, c)) {
                column_syndrome[c] |= std::uint64_t{1} << i;
            }
        }
    }
    constexpr auto kUnset = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> table(std::size_t{1} << r, kUnset);
    std::vector<std::uint64_t> key(table.size(), kUnset);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t e = 0; e < total; ++e) {
        std::uint64_t s = 0;
        for (auto bits = e; bits != 0; bits &= bits - 1) {
            s ^= column_syndrome[static_cast<std::size_t>(std::countr_zero(bits))];
        }
        // Weight in the high bits, reversed mask below: lexicographic order
        // on entries 0..n-1 becomes numeric order.
        auto k = (static_cast<std::uint64_t>(std::popcount(e)) << 32) | reverse_low_bits(e, n);
        if (k < key[s]) {
            key[s] = k;
            table[s] = e;
        }
    }
    for (auto leader : table) {
        if (leader == kUnset) {
            throw InconsistentCode("coset table: unreachable syndrome; parity check is rank deficient");
        }
    }
    return table;
}

// Visits every w-subset of [0, n) in increasing lexicographic order of the
// index tuple. Stops early when fn returns false.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t w, Fn &&fn) {
    if (w > n) {
        return;
    }
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i) {
        idx[i] = i;
    }
    while (true) {
        if (!fn(idx)) {
            return;
        }
        std::size_t i = w;
        while (i > 0 && idx[i - 1] == n - w + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < w; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

std::size_t parse_size(std::string_view text, std::string_view context) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("bad number '" + std::string(text) + "' in " + std::string(context));
    }
    return value;
}

}  // namespace

LinearCode::LinearCode(BitMatrix g, BitMatrix p) : generator_(std::move(g)), parity_(std::move(p)) {
    auto [p_c, g_c] = dual_complete(parity_, generator_);
    parity_c_ = std::move(p_c);
    generator_c_ = std::move(g_c);
    if (n() <= kMaxTableLength) {
        table_ = std::make_shared<const std::vector<std::uint64_t>>(build_leader_table(parity_));
    }
}

LinearCode LinearCode::from_generator(BitMatrix g) {
    if (rank(g) != g.rows()) {
        throw RankDeficient("generator matrix " + shape_str(g.rows(), g.cols()) +
                            " does not have full row rank");
    }
    auto p = kernel_basis(g);
    return LinearCode(std::move(g), std::move(p));
}

LinearCode LinearCode::from_parity(BitMatrix p) {
    if (rank(p) != p.rows()) {
        throw RankDeficient("parity check matrix " + shape_str(p.rows(), p.cols()) +
                            " does not have full row rank");
    }
    auto g = kernel_basis(p);
    return LinearCode(std::move(g), std::move(p));
}

LinearCode LinearCode::from_pair(BitMatrix g, BitMatrix p) {
    return LinearCode(std::move(g), std::move(p));
}

LinearCode LinearCode::with_verified_distance(std::size_t d) const {
    auto actual = min_distance(*this);
    if (actual != d) {
        throw InconsistentCode("claimed distance " + std::to_string(d) + " but minimum codeword weight is " +
                               std::to_string(actual));
    }
    LinearCode out = *this;
    out.distance_ = d;
    return out;
}

LinearCode LinearCode::with_decode_weight_cap(std::size_t cap) const {
    LinearCode out = *this;
    out.weight_cap_ = cap;
    return out;
}

BitVector LinearCode::syndrome(const BitVector &error) const {
    if (error.size() != n()) {
        throw DimensionMismatch("syndrome: error of length " + std::to_string(error.size()) +
                                " for code of length " + std::to_string(n()));
    }
    return mat_vec(parity_, error);
}

std::uint64_t LinearCode::decode_mask(std::uint64_t syndrome) const {
    if (!table_) {
        throw std::logic_error("decode_mask: code of length " + std::to_string(n()) + " has no table");
    }
    if (syndrome >= table_->size()) {
        throw DimensionMismatch("decode_mask: syndrome has bits beyond redundancy " +
                                std::to_string(redundancy()));
    }
    return (*table_)[syndrome];
}

BitVector LinearCode::decode(const BitVector &syndrome) const {
    if (syndrome.size() != redundancy()) {
        throw DimensionMismatch("decode: syndrome of length " + std::to_string(syndrome.size()) +
                                ", expected " + std::to_string(redundancy()));
    }
    if (table_) {
        return BitVector::from_mask(decode_mask(syndrome.to_mask()), n());
    }
    const auto columns = parity_.transposed();
    for (std::size_t w = 0; w <= weight_cap_ && w <= n(); ++w) {
        std::optional<BitVector> best;
        for_each_subset(n(), w, [&](const std::vector<std::size_t> &idx) {
            BitVector s(redundancy());
            for (auto i : idx) {
                s ^= columns.row(i);
            }
            if (s == syndrome) {
                BitVector e(n());
                for (auto i : idx) {
                    e.set(i, true);
                }
                if (!best || lex_less(e, *best)) {
                    best = std::move(e);
                }
            }
            return true;
        });
        if (best) {
            return *best;
        }
    }
    throw SearchLimitExceeded("decode: no coset leader of weight <= " + std::to_string(weight_cap_) +
                              " for syndrome " + syndrome.str());
}

BitVector LinearCode::encode(const BitVector &message) const {
    if (message.size() != k()) {
        throw DimensionMismatch("encode: message of length " + std::to_string(message.size()) +
                                ", expected " + std::to_string(k()));
    }
    return mat_vec(generator_.transposed(), message);
}

std::size_t min_distance(const LinearCode &code) {
    const auto k = code.k();
    if (k == 0) {
        throw std::invalid_argument("min_distance: code has no nonzero codewords");
    }
    if (k > kMaxDistanceDimension) {
        throw SearchLimitExceeded("min_distance: k = " + std::to_string(k) + " exceeds enumeration limit " +
                                  std::to_string(kMaxDistanceDimension));
    }
    const auto &g = code.generator();
    BitVector word(code.n());
    std::size_t best = code.n() + 1;
    const std::uint64_t total = std::uint64_t{1} << k;
    // Gray code walk: step i toggles generator row ctz(i).
    for (std::uint64_t i = 1; i < total; ++i) {
        auto row = static_cast<std::size_t>(std::countr_zero(i));
        auto src = g.row_words(row);
        auto dst = word.words();
        for (std::size_t w = 0; w < dst.size(); ++w) {
            dst[w] ^= src[w];
        }
        best = std::min(best, word.weight());
    }
    return best;
}

LinearCode repetition_code(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("repetition code needs n >= 1");
    }
    BitMatrix g(1, n);
    for (std::size_t c = 0; c < n; ++c) {
        g.set(0, c, true);
    }
    BitMatrix p(n - 1, n);
    for (std::size_t r = 0; r + 1 < n; ++r) {
        p.set(r, r, true);
        p.set(r, r + 1, true);
    }
    return LinearCode::from_pair(std::move(g), std::move(p)).with_verified_distance(n);
}

LinearCode hamming_code_7_4() {
    BitMatrix p(3, 7);
    for (std::size_t c = 0; c < 7; ++c) {
        auto value = c + 1;
        for (std::size_t r = 0; r < 3; ++r) {
            p.set(r, c, ((value >> (2 - r)) & 1U) != 0);
        }
    }
    return LinearCode::from_parity(std::move(p)).with_verified_distance(3);
}

LinearCode builtin_code(std::string_view name) {
    if (name == "hamming:7-4" || name == "hamming(7,4)") {
        return hamming_code_7_4();
    }
    if (name.starts_with("rep:")) {
        return repetition_code(parse_size(name.substr(4), name));
    }
    if (name.starts_with("repetition(") && name.ends_with(")")) {
        return repetition_code(parse_size(name.substr(11, name.size() - 12), name));
    }
    throw std::invalid_argument("unknown code family '" + std::string(name) + "'");
}

}  // namespace subsys
