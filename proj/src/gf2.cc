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

#include "subsys/gf2.h"

#include <string>

#include "subsys/errors.h"

namespace subsys {

BitMatrix mat_mul(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("mat_mul: " + shape_str(a.rows(), a.cols()) + " * " +
                                shape_str(b.rows(), b.cols()));
    }
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto dst = out.row_words(r);
        auto src = a.row_words(r);
        for (std::size_t w = 0; w < src.size(); ++w) {
            auto word = src[w];
            while (word != 0) {
                auto k = w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
                auto brow = b.row_words(k);
                for (std::size_t i = 0; i < dst.size(); ++i) {
                    dst[i] ^= brow[i];
                }
                word &= word - 1;
            }
        }
    }
    return out;
}

BitVector mat_vec(const BitMatrix &m, const BitVector &v) {
    if (m.cols() != v.size()) {
        throw DimensionMismatch("mat_vec: " + shape_str(m.rows(), m.cols()) + " * vector of length " +
                                std::to_string(v.size()));
    }
    BitVector out(m.rows());
    auto vw = v.words();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto rw = m.row_words(r);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < rw.size(); ++w) {
            acc ^= rw[w] & vw[w];
        }
        out.set(r, (std::popcount(acc) & 1) != 0);
    }
    return out;
}

BitMatrix vstack(const BitMatrix &top, const BitMatrix &bottom) {
    if (top.cols() != bottom.cols()) {
        throw DimensionMismatch("vstack: " + shape_str(top.rows(), top.cols()) + " over " +
                                shape_str(bottom.rows(), bottom.cols()));
    }
    BitMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r) {
        auto src = top.row_words(r);
        std::copy(src.begin(), src.end(), out.row_words(r).begin());
    }
    for (std::size_t r = 0; r < bottom.rows(); ++r) {
        auto src = bottom.row_words(r);
        std::copy(src.begin(), src.end(), out.row_words(top.rows() + r).begin());
    }
    return out;
}

BitMatrix hstack(const BitMatrix &left, const BitMatrix &right) {
    if (left.rows() != right.rows()) {
        throw DimensionMismatch("hstack: " + shape_str(left.rows(), left.cols()) + " beside " +
                                shape_str(right.rows(), right.cols()));
    }
    BitMatrix out(left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) {
        for (std::size_t c = 0; c < left.cols(); ++c) {
            if (left.get(r, c)) {
                out.set(r, c, true);
            }
        }
        for (std::size_t c = 0; c < right.cols(); ++c) {
            if (right.get(r, c)) {
                out.set(r, left.cols() + c, true);
            }
        }
    }
    return out;
}

RrefResult rref(const BitMatrix &m) {
    RrefResult result{m, 0, {}};
    auto &a = result.reduced;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
        std::size_t found = pivot_row;
        while (found < a.rows() && !a.get(found, c)) {
            ++found;
        }
        if (found == a.rows()) {
            continue;
        }
        a.swap_rows(pivot_row, found);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r != pivot_row && a.get(r, c)) {
                a.xor_row(r, pivot_row);
            }
        }
        result.pivot_cols.push_back(c);
        ++pivot_row;
    }
    result.rank = pivot_row;
    return result;
}

std::size_t rank(const BitMatrix &m) { return rref(m).rank; }

BitMatrix kernel_basis(const BitMatrix &m) {
    auto [reduced, rk, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    BitMatrix basis(m.cols() - rk, m.cols());
    std::size_t out = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        basis.set(out, f, true);
        for (std::size_t r = 0; r < rk; ++r) {
            if (reduced.get(r, f)) {
                basis.set(out, pivots[r], true);
            }
        }
        ++out;
    }
    return basis;
}

std::optional<BitVector> solve(const BitMatrix &m, const BitVector &y) {
    if (m.rows() != y.size()) {
        throw DimensionMismatch("solve: " + shape_str(m.rows(), m.cols()) + " against vector of length " +
                                std::to_string(y.size()));
    }
    BitMatrix rhs(y.size(), 1);
    rhs.set_col(0, y);
    auto [reduced, rk, pivots] = rref(hstack(m, rhs));
    if (rk > 0 && pivots.back() == m.cols()) {
        return std::nullopt;
    }
    BitVector x(m.cols());
    for (std::size_t r = 0; r < rk; ++r) {
        x.set(pivots[r], reduced.get(r, m.cols()));
    }
    return x;
}

std::optional<BitMatrix> inverse(const BitMatrix &m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("inverse of non-square " + shape_str(m.rows(), m.cols()));
    }
    const auto n = m.rows();
    auto [reduced, rk, pivots] = rref(hstack(m, BitMatrix::identity(n)));
    if (rk < n || (n > 0 && pivots[n - 1] != n - 1)) {
        return std::nullopt;
    }
    BitMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (reduced.get(r, n + c)) {
                inv.set(r, c, true);
            }
        }
    }
    return inv;
}

bool same_row_space(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.cols()) {
        return false;
    }
    auto ra = rank(a);
    return ra == rank(b) && ra == rank(vstack(a, b));
}

DualComplement dual_complete(const BitMatrix &p, const BitMatrix &g) {
    const auto n = p.cols();
    if (g.cols() != n) {
        throw DimensionMismatch("dual_complete: P is " + shape_str(p.rows(), p.cols()) + ", G is " +
                                shape_str(g.rows(), g.cols()));
    }
    if (p.rows() + g.rows() != n) {
        throw RankDeficient("dual_complete: P and G row counts " + std::to_string(p.rows()) + " + " +
                            std::to_string(g.rows()) + " do not sum to n = " + std::to_string(n));
    }
    if (rank(p) != p.rows()) {
        throw RankDeficient("dual_complete: P does not have full row rank");
    }
    if (rank(g) != g.rows()) {
        throw RankDeficient("dual_complete: G does not have full row rank");
    }
    if (!mat_mul(p, g.transposed()).is_zero()) {
        throw RankDeficient("dual_complete: P G^T is nonzero");
    }
    const auto k = g.rows();

    // Standard basis rows outside the running span of P.
    BitMatrix extra(k, n);
    BitMatrix basis = p;
    std::size_t added = 0;
    for (std::size_t c = 0; c < n && added < k; ++c) {
        auto candidate = vstack(basis, BitMatrix::unit(1, n, 0, c));
        if (rank(candidate) == basis.rows() + 1) {
            basis = std::move(candidate);
            extra.set(added++, c, true);
        }
    }

    // Rows of the inverse-transpose are the dual basis: the first n-k pair
    // with P, the last k span ker(P) = rowspace(G).
    auto inv = inverse(basis);
    if (!inv) {
        throw InconsistentCode("dual_complete: extended basis is singular");
    }
    auto dual = inv->transposed();
    BitMatrix g_c(n - k, n);
    for (std::size_t r = 0; r < n - k; ++r) {
        g_c.set_row(r, dual.row(r));
    }

    // P^c = (X G^T)^{-1} X pairs with G exactly and remains orthogonal to G^c.
    auto pairing = inverse(mat_mul(extra, g.transposed()));
    if (!pairing) {
        throw InconsistentCode("dual_complete: complement does not pair with G");
    }
    return {mat_mul(*pairing, extra), std::move(g_c)};
}

}  // namespace subsys
