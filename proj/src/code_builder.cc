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

#include "subsys/code_builder.h"

#include <algorithm>
#include <string>
#include <utility>

#include "subsys/errors.h"
#include "subsys/gf2.h"

namespace subsys {

namespace {

// left^T E_ab right, i.e. the outer product of row a of `left` and row b
// of `right`.
BitMatrix outer_rows(const BitMatrix &left, std::size_t a, const BitMatrix &right, std::size_t b) {
    BitMatrix out(left.cols(), right.cols());
    for (std::size_t i = 0; i < left.cols(); ++i) {
        if (left.get(a, i)) {
            auto src = right.row_words(b);
            std::copy(src.begin(), src.end(), out.row_words(i).begin());
        }
    }
    return out;
}

// left^T M right.
BitMatrix sandwich(const BitMatrix &left, const BitMatrix &m, const BitMatrix &right) {
    return mat_mul(mat_mul(left.transposed(), m), right);
}

void require(bool ok, const std::string &what) {
    if (!ok) {
        throw InconsistentCode(what);
    }
}

std::string idx(std::size_t i) { return std::to_string(i); }

void require_all_commute(std::span<const PauliGrid> a, std::span<const PauliGrid> b, const std::string &what) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            require(commutes(a[i], b[j]), what + ": generators " + idx(i) + " and " + idx(j) + " anticommute");
        }
    }
}

// a[i] anticommutes with b[j] exactly when i == j.
void require_canonical_pairs(std::span<const PauliGrid> a, std::span<const PauliGrid> b, const std::string &what) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            require(commutes(a[i], b[j]) == (i != j),
                    what + ": pair " + idx(i) + "," + idx(j) + " breaks canonical pairing");
        }
    }
}

void require_independent(std::span<const PauliGrid> ops, const std::string &what) {
    if (ops.empty()) {
        return;
    }
    BitMatrix rows(ops.size(), 2 * ops.front().n1() * ops.front().n2());
    for (std::size_t i = 0; i < ops.size(); ++i) {
        rows.set_row(i, to_symplectic(ops[i]));
    }
    require(rank(rows) == ops.size(), what + " are not independent");
}

std::optional<std::size_t> min_of(const LinearCode &c1, const LinearCode &c2) {
    if (c1.distance() && c2.distance()) {
        return std::min(*c1.distance(), *c2.distance());
    }
    return std::nullopt;
}

void build_logicals(const LinearCode &c1, const LinearCode &c2, std::vector<PauliGrid> &xs,
                    std::vector<PauliGrid> &zs) {
    for (std::size_t i = 0; i < c1.k(); ++i) {
        for (std::size_t j = 0; j < c2.k(); ++j) {
            xs.push_back(PauliGrid::x_type(outer_rows(c1.generator(), i, c2.parity_complement(), j)));
            zs.push_back(PauliGrid::z_type(outer_rows(c1.parity_complement(), i, c2.generator(), j)));
        }
    }
}

void check_block_shape(const BitMatrix &m, std::size_t rows, std::size_t cols, const char *name) {
    if (m.rows() != rows || m.cols() != cols) {
        throw DimensionMismatch(std::string("recompose: block ") + name + " is " + shape_str(m.rows(), m.cols()) +
                                ", expected " + shape_str(rows, cols));
    }
}

}  // namespace

CodeCounts subsystem_counts(std::size_t n1, std::size_t k1, std::size_t n2, std::size_t k2) {
    return {n1 * n2, k1 * k2, (n1 - k1) * (n2 - k2), (n1 - k1) * k2, k1 * (n2 - k2)};
}

CodeCounts shor_counts(std::size_t n1, std::size_t k1, std::size_t n2, std::size_t k2) {
    return {n1 * n2, k1 * k2, 0, (n1 - k1) * n2, k1 * (n2 - k2)};
}

SubsystemCode::SubsystemCode(LinearCode c1, LinearCode c2)
    : c1_(std::move(c1)),
      c2_(std::move(c2)),
      counts_(subsystem_counts(c1_.n(), c1_.k(), c2_.n(), c2_.k())),
      p2_t_(c2_.parity().transposed()),
      p2c_t_(c2_.parity_complement().transposed()),
      g2_t_(c2_.generator().transposed()),
      g2c_t_(c2_.generator_complement().transposed()) {
    const auto r1 = c1_.redundancy();
    const auto r2 = c2_.redundancy();
    for (std::size_t a = 0; a < r1; ++a) {
        for (std::size_t b = 0; b < c2_.k(); ++b) {
            stabilizers_.push_back(PauliGrid::z_type(outer_rows(c1_.parity(), a, c2_.generator(), b)));
        }
    }
    for (std::size_t a = 0; a < c1_.k(); ++a) {
        for (std::size_t b = 0; b < r2; ++b) {
            stabilizers_.push_back(PauliGrid::x_type(outer_rows(c1_.generator(), a, c2_.parity(), b)));
        }
    }
    for (std::size_t a = 0; a < r1; ++a) {
        for (std::size_t b = 0; b < r2; ++b) {
            gauge_.push_back(PauliGrid::z_type(outer_rows(c1_.parity(), a, c2_.generator_complement(), b)));
        }
    }
    for (std::size_t a = 0; a < r1; ++a) {
        for (std::size_t b = 0; b < r2; ++b) {
            gauge_.push_back(PauliGrid::x_type(outer_rows(c1_.generator_complement(), a, c2_.parity(), b)));
        }
    }
    build_logicals(c1_, c2_, logical_x_, logical_z_);

    const auto &c = counts_;
    require(c.gauge_qubits + c.z_stabilizers + c.x_stabilizers + c.k == c.n, "counting identity fails");
    require(stabilizers_.size() == c.stabilizers(), "stabilizer count mismatch");
    require(gauge_.size() == 2 * c.gauge_qubits, "gauge generator count mismatch");
    require(logical_x_.size() == c.k && logical_z_.size() == c.k, "logical operator count mismatch");

    require_all_commute(stabilizers_, stabilizers_, "stabilizers");
    require_all_commute(stabilizers_, gauge_, "stabilizer vs gauge");
    require_all_commute(stabilizers_, logical_x_, "stabilizer vs logical X");
    require_all_commute(stabilizers_, logical_z_, "stabilizer vs logical Z");
    require_all_commute(gauge_, logical_x_, "gauge vs logical X");
    require_all_commute(gauge_, logical_z_, "gauge vs logical Z");
    require_all_commute(logical_x_, logical_x_, "logical X");
    require_all_commute(logical_z_, logical_z_, "logical Z");
    require_all_commute(z_gauge(), z_gauge(), "Z gauge");
    require_all_commute(x_gauge(), x_gauge(), "X gauge");
    require_canonical_pairs(logical_x_, logical_z_, "logical X vs Z");
    require_canonical_pairs(z_gauge(), x_gauge(), "Z gauge vs X gauge");
    require_independent(stabilizers_, "stabilizer generators");
}

std::optional<std::size_t> SubsystemCode::distance() const { return min_of(c1_, c2_); }

ShorCode::ShorCode(LinearCode c1, LinearCode c2)
    : c1_(std::move(c1)), c2_(std::move(c2)), counts_(shor_counts(c1_.n(), c1_.k(), c2_.n(), c2_.k())) {
    const auto n2 = c2_.n();
    for (std::size_t a = 0; a < c1_.redundancy(); ++a) {
        for (std::size_t j = 0; j < n2; ++j) {
            BitMatrix a_part(c1_.n(), n2);
            for (std::size_t i = 0; i < c1_.n(); ++i) {
                a_part.set(i, j, c1_.parity().get(a, i));
            }
            stabilizers_.push_back(PauliGrid::z_type(std::move(a_part)));
        }
    }
    for (std::size_t i = 0; i < c1_.k(); ++i) {
        for (std::size_t b = 0; b < c2_.redundancy(); ++b) {
            stabilizers_.push_back(PauliGrid::x_type(outer_rows(c1_.generator(), i, c2_.parity(), b)));
        }
    }
    build_logicals(c1_, c2_, logical_x_, logical_z_);

    require(stabilizers_.size() == counts_.stabilizers(), "Shor stabilizer count mismatch");
    require(counts_.stabilizers() + counts_.k == counts_.n, "Shor stabilizers plus logical qubits != n");
    require_all_commute(stabilizers_, stabilizers_, "Shor stabilizers");
    require_all_commute(stabilizers_, logical_x_, "Shor stabilizer vs logical X");
    require_all_commute(stabilizers_, logical_z_, "Shor stabilizer vs logical Z");
    require_canonical_pairs(logical_x_, logical_z_, "Shor logical X vs Z");
    require_independent(stabilizers_, "Shor stabilizer generators");
}

std::optional<std::size_t> ShorCode::distance() const { return min_of(c1_, c2_); }

SubsystemCode build_subsystem(const LinearCode &c1, const LinearCode &c2) { return {c1, c2}; }

ShorCode build_shor(const LinearCode &c1, const LinearCode &c2) { return {c1, c2}; }

PauliDecomposition decompose(const SubsystemCode &code, const PauliGrid &op) {
    if (op.n1() != code.n1() || op.n2() != code.n2()) {
        throw DimensionMismatch("decompose: operator grid " + shape_str(op.n1(), op.n2()) + " on code grid " +
                                shape_str(code.n1(), code.n2()));
    }
    const auto &c1 = code.c1();
    // Left factors pick the c1 component, right factors the c2 component.
    auto g1c_a = mat_mul(c1.generator_complement(), op.z_part());
    auto g1_a = mat_mul(c1.generator(), op.z_part());
    auto p1c_b = mat_mul(c1.parity_complement(), op.x_part());
    auto p1_b = mat_mul(c1.parity(), op.x_part());
    PauliDecomposition d;
    d.q = mat_mul(g1c_a, code.p2c_transposed());
    d.q_c = mat_mul(g1c_a, code.p2_transposed());
    d.u = mat_mul(g1_a, code.p2c_transposed());
    d.u_c = mat_mul(g1_a, code.p2_transposed());
    d.r = mat_mul(p1c_b, code.g2c_transposed());
    d.r_c = mat_mul(p1_b, code.g2c_transposed());
    d.v = mat_mul(p1c_b, code.g2_transposed());
    d.v_c = mat_mul(p1_b, code.g2_transposed());
    d.phase = op.phase();
    return d;
}

PauliGrid recompose(const SubsystemCode &code, const PauliDecomposition &d) {
    const auto &c1 = code.c1();
    const auto &c2 = code.c2();
    const auto r1 = c1.redundancy();
    const auto r2 = c2.redundancy();
    check_block_shape(d.q, r1, c2.k(), "Q");
    check_block_shape(d.q_c, r1, r2, "Q_c");
    check_block_shape(d.r, c1.k(), r2, "R");
    check_block_shape(d.r_c, r1, r2, "R_c");
    check_block_shape(d.u, c1.k(), c2.k(), "U");
    check_block_shape(d.u_c, c1.k(), r2, "U_c");
    check_block_shape(d.v, c1.k(), c2.k(), "V");
    check_block_shape(d.v_c, r1, c2.k(), "V_c");

    auto a = sandwich(c1.parity(), d.q, c2.generator());
    a ^= sandwich(c1.parity(), d.q_c, c2.generator_complement());
    a ^= sandwich(c1.parity_complement(), d.u, c2.generator());
    a ^= sandwich(c1.parity_complement(), d.u_c, c2.generator_complement());

    auto b = sandwich(c1.generator(), d.r, c2.parity());
    b ^= sandwich(c1.generator_complement(), d.r_c, c2.parity());
    b ^= sandwich(c1.generator(), d.v, c2.parity_complement());
    b ^= sandwich(c1.generator_complement(), d.v_c, c2.parity_complement());
    return {std::move(a), std::move(b), d.phase};
}

bool is_in_gauge_group(const SubsystemCode &code, const PauliGrid &op) {
    auto d = decompose(code, op);
    return d.u.is_zero() && d.u_c.is_zero() && d.v.is_zero() && d.v_c.is_zero();
}

}  // namespace subsys
