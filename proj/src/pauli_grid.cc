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

#include "subsys/pauli_grid.h"

#include <stdexcept>
#include <utility>

#include "subsys/errors.h"

namespace subsys {

namespace {

void check_same_grid(const PauliGrid &x, const PauliGrid &y, const char *op) {
    if (x.n1() != y.n1() || x.n2() != y.n2()) {
        throw DimensionMismatch(std::string(op) + ": grids " + shape_str(x.n1(), x.n2()) + " and " +
                                shape_str(y.n1(), y.n2()));
    }
}

}  // namespace

PauliGrid::PauliGrid(std::size_t n1, std::size_t n2) : z_(n1, n2), x_(n1, n2) {}

PauliGrid::PauliGrid(BitMatrix z_part, BitMatrix x_part, unsigned phase)
    : z_(std::move(z_part)), x_(std::move(x_part)), phase_(phase & 3U) {
    if (z_.rows() != x_.rows() || z_.cols() != x_.cols()) {
        throw DimensionMismatch("PauliGrid: Z part " + shape_str(z_.rows(), z_.cols()) + " vs X part " +
                                shape_str(x_.rows(), x_.cols()));
    }
}

PauliGrid PauliGrid::z_type(BitMatrix a) {
    BitMatrix b(a.rows(), a.cols());
    return {std::move(a), std::move(b)};
}

PauliGrid PauliGrid::x_type(BitMatrix b) {
    BitMatrix a(b.rows(), b.cols());
    return {std::move(a), std::move(b)};
}

PauliGrid PauliGrid::single(std::size_t n1, std::size_t n2, std::size_t r, std::size_t c, char pauli) {
    if (r >= n1 || c >= n2) {
        throw DimensionMismatch("site (" + std::to_string(r) + "," + std::to_string(c) + ") outside grid " +
                                shape_str(n1, n2));
    }
    PauliGrid out(n1, n2);
    switch (pauli) {
        case 'I':
            break;
        case 'X':
            out.x_.set(r, c, true);
            break;
        case 'Z':
            out.z_.set(r, c, true);
            break;
        case 'Y':
            out.z_.set(r, c, true);
            out.x_.set(r, c, true);
            out.phase_ = 3;
            break;
        default:
            throw std::invalid_argument(std::string("unknown Pauli '") + pauli + "'");
    }
    return out;
}

char PauliGrid::symbol(std::size_t r, std::size_t c) const {
    static constexpr char kSymbols[] = {'I', 'X', 'Z', 'Y'};
    return kSymbols[(z_.get(r, c) ? 2 : 0) | (x_.get(r, c) ? 1 : 0)];
}

std::size_t PauliGrid::weight() const {
    std::size_t total = 0;
    for (std::size_t r = 0; r < n1(); ++r) {
        auto zr = z_.row_words(r);
        auto xr = x_.row_words(r);
        for (std::size_t w = 0; w < zr.size(); ++w) {
            total += static_cast<std::size_t>(std::popcount(zr[w] | xr[w]));
        }
    }
    return total;
}

PauliGrid PauliGrid::with_phase(unsigned phase) const {
    PauliGrid out = *this;
    out.phase_ = phase & 3U;
    return out;
}

std::string PauliGrid::str() const {
    std::string body;
    std::size_t y_count = 0;
    for (std::size_t r = 0; r < n1(); ++r) {
        if (r > 0) {
            body += '/';
        }
        for (std::size_t c = 0; c < n2(); ++c) {
            auto s = symbol(r, c);
            if (s == 'Y') {
                ++y_count;
            }
            body += s;
        }
    }
    static constexpr const char *kPrefix[] = {"+", "+i", "-", "-i"};
    return kPrefix[(phase_ + y_count) & 3U] + body;
}

bool commutes(const PauliGrid &x, const PauliGrid &y) {
    check_same_grid(x, y, "commutes");
    return and_parity(x.z_part(), y.x_part()) == and_parity(x.x_part(), y.z_part());
}

PauliGrid multiply(const PauliGrid &x, const PauliGrid &y) {
    check_same_grid(x, y, "multiply");
    unsigned phase = x.phase() + y.phase() + (and_parity(x.x_part(), y.z_part()) ? 2U : 0U);
    return {x.z_part() ^ y.z_part(), x.x_part() ^ y.x_part(), phase};
}

BitVector to_symplectic(const PauliGrid &op) {
    const auto sites = op.n1() * op.n2();
    BitVector out(2 * sites);
    for (std::size_t r = 0; r < op.n1(); ++r) {
        for (std::size_t c = 0; c < op.n2(); ++c) {
            if (op.z_part().get(r, c)) {
                out.set(r * op.n2() + c, true);
            }
            if (op.x_part().get(r, c)) {
                out.set(sites + r * op.n2() + c, true);
            }
        }
    }
    return out;
}

}  // namespace subsys
