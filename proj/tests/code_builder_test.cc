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

#include <gtest/gtest.h>

#include <random>

#include "subsys/errors.h"
#include "subsys/gf2.h"
#include "test_util.h"

namespace subsys {
namespace {

// Rows are symplectic vectors of `ops`.
BitMatrix symplectic_rows(std::span<const PauliGrid> ops, std::size_t sites) {
    BitMatrix m(ops.size(), 2 * sites);
    for (std::size_t i = 0; i < ops.size(); ++i) {
        m.set_row(i, to_symplectic(ops[i]));
    }
    return m;
}

void expect_counting_identity(const CodeCounts &c) {
    EXPECT_EQ(c.n, c.k + c.gauge_qubits + c.stabilizers());
}

TEST(Counts, HandValues) {
    auto rep2 = subsystem_counts(2, 1, 2, 1);
    EXPECT_EQ(rep2.n, 4U);
    EXPECT_EQ(rep2.k, 1U);
    EXPECT_EQ(rep2.gauge_qubits, 1U);
    EXPECT_EQ(rep2.stabilizers(), 2U);

    auto rep3 = subsystem_counts(3, 1, 3, 1);
    EXPECT_EQ(rep3.gauge_qubits, 4U);
    EXPECT_EQ(rep3.z_stabilizers, 2U);
    EXPECT_EQ(rep3.x_stabilizers, 2U);

    auto ham = subsystem_counts(7, 4, 7, 4);
    EXPECT_EQ(ham.n, 49U);
    EXPECT_EQ(ham.k, 16U);
    EXPECT_EQ(ham.gauge_qubits, 9U);
    EXPECT_EQ(ham.stabilizers(), 24U);

    EXPECT_EQ(shor_counts(2, 1, 2, 1).stabilizers(), 3U);
    EXPECT_EQ(shor_counts(3, 1, 3, 1).stabilizers(), 8U);
    EXPECT_EQ(shor_counts(7, 4, 7, 4).z_stabilizers, 21U);
    EXPECT_EQ(shor_counts(7, 4, 7, 4).x_stabilizers, 12U);
    EXPECT_EQ(shor_counts(7, 4, 7, 4).stabilizers(), 33U);
    // Shor is a subspace code: every non-logical qubit is fixed by a check.
    for (auto c : {shor_counts(3, 1, 3, 1), shor_counts(7, 4, 7, 4), shor_counts(5, 2, 4, 3)}) {
        EXPECT_EQ(c.gauge_qubits, 0U);
        expect_counting_identity(c);
    }
    for (auto c : {rep2, rep3, ham, subsystem_counts(5, 2, 4, 3)}) {
        expect_counting_identity(c);
    }
}

TEST(SubsystemCode, BaconShorNineGenerators) {
    auto code = build_subsystem(repetition_code(3), repetition_code(3));
    EXPECT_EQ(code.n(), 9U);
    EXPECT_EQ(code.k(), 1U);
    EXPECT_EQ(code.distance(), 3U);
    ASSERT_EQ(code.z_stabilizers().size(), 2U);
    ASSERT_EQ(code.x_stabilizers().size(), 2U);
    EXPECT_EQ(code.z_stabilizers()[0].str(), "+ZZZ/ZZZ/III");
    EXPECT_EQ(code.z_stabilizers()[1].str(), "+III/ZZZ/ZZZ");
    EXPECT_EQ(code.x_stabilizers()[0].str(), "+XXI/XXI/XXI");
    EXPECT_EQ(code.x_stabilizers()[1].str(), "+IXX/IXX/IXX");
    EXPECT_EQ(code.logical_x(0, 0).str(), "+XII/XII/XII");
    EXPECT_EQ(code.logical_z(0, 0).str(), "+ZZZ/III/III");
    ASSERT_EQ(code.z_gauge().size(), 4U);
    ASSERT_EQ(code.x_gauge().size(), 4U);
    // Two-qubit gauge operators, as in the Bacon-Shor code.
    for (const auto &g : code.gauge_generators()) {
        EXPECT_GE(g.weight(), 2U);
        EXPECT_LE(g.weight(), 4U);
    }
}

TEST(SubsystemCode, FourQubitCode) {
    auto code = build_subsystem(repetition_code(2), repetition_code(2));
    EXPECT_EQ(code.stabilizers().size(), 2U);
    EXPECT_EQ(code.z_stabilizers()[0].str(), "+ZZ/ZZ");
    EXPECT_EQ(code.x_stabilizers()[0].str(), "+XX/XX");
    EXPECT_EQ(code.gauge_qubits(), 1U);
    EXPECT_EQ(code.distance(), 2U);
}

TEST(ShorCode, NineQubitGenerators) {
    auto code = build_shor(repetition_code(3), repetition_code(3));
    EXPECT_EQ(code.stabilizers().size(), 8U);
    EXPECT_EQ(code.counts().z_stabilizers, 6U);
    EXPECT_EQ(code.counts().x_stabilizers, 2U);
    // First Z check: rows 0 and 1 of column 0.
    EXPECT_EQ(code.stabilizers()[0].str(), "+ZII/ZII/III");
    for (const auto &s : code.stabilizers()) {
        for (const auto &t : code.stabilizers()) {
            EXPECT_TRUE(commutes(s, t));
        }
        EXPECT_TRUE(commutes(s, code.logical_x(0, 0)));
        EXPECT_TRUE(commutes(s, code.logical_z(0, 0)));
    }
    EXPECT_FALSE(commutes(code.logical_x(0, 0), code.logical_z(0, 0)));
}

TEST(ShorCode, HammingCounts) {
    auto code = build_shor(hamming_code_7_4(), hamming_code_7_4());
    EXPECT_EQ(code.stabilizers().size(), 33U);
    EXPECT_EQ(code.k(), 16U);
    auto sub = build_subsystem(hamming_code_7_4(), hamming_code_7_4());
    EXPECT_EQ(sub.stabilizers().size(), 24U);
    EXPECT_EQ(sub.gauge_qubits(), 9U);
}

TEST(Decompose, SingleSiteBaconShor) {
    auto code = build_subsystem(repetition_code(3), repetition_code(3));
    auto d = decompose(code, PauliGrid::single(3, 3, 0, 0, 'X'));
    // X at (0,0) flips Z-stabilizer 0 only. V = P1^c e_0 G2^T = 1 since
    // P1^c = 100 and G2 = 111.
    EXPECT_EQ(d.v_c, BitMatrix::from_strings({"1", "0"}));
    EXPECT_TRUE(d.u_c.is_zero());
    EXPECT_EQ(d.v, BitMatrix::from_strings({"1"}));
    EXPECT_TRUE(d.u.is_zero());
    auto lx = decompose(code, code.logical_x(0, 0));
    EXPECT_EQ(lx.v, BitMatrix::from_strings({"1"}));
    EXPECT_TRUE(lx.v_c.is_zero());
    EXPECT_TRUE(lx.r.is_zero());
    EXPECT_TRUE(lx.r_c.is_zero());
}

TEST(Decompose, GeneratorsHaveUnitCoefficients) {
    auto code = build_subsystem(hamming_code_7_4(), repetition_code(3));
    const auto k2 = code.c2().k();
    const auto r2 = code.c2().redundancy();
    auto zs = code.z_stabilizers();
    for (std::size_t i = 0; i < zs.size(); ++i) {
        auto d = decompose(code, zs[i]);
        EXPECT_EQ(d.q, BitMatrix::unit(code.c1().redundancy(), k2, i / k2, i % k2));
        EXPECT_TRUE(d.q_c.is_zero() && d.u.is_zero() && d.u_c.is_zero());
    }
    auto xs = code.x_stabilizers();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        auto d = decompose(code, xs[i]);
        EXPECT_EQ(d.r, BitMatrix::unit(code.c1().k(), r2, i / r2, i % r2));
        EXPECT_TRUE(d.r_c.is_zero() && d.v.is_zero() && d.v_c.is_zero());
    }
    auto zg = code.z_gauge();
    for (std::size_t i = 0; i < zg.size(); ++i) {
        EXPECT_EQ(decompose(code, zg[i]).q_c, BitMatrix::unit(code.c1().redundancy(), r2, i / r2, i % r2));
    }
}

TEST(Decompose, RecomposeChecksShapes) {
    auto code = build_subsystem(repetition_code(3), repetition_code(3));
    auto d = decompose(code, PauliGrid(3, 3));
    d.q = BitMatrix(3, 3);
    EXPECT_THROW(recompose(code, d), DimensionMismatch);
    EXPECT_THROW(decompose(code, PauliGrid(2, 3)), DimensionMismatch);
}

TEST(GaugeGroup, Membership) {
    auto code = build_subsystem(repetition_code(3), repetition_code(3));
    for (const auto &s : code.stabilizers()) {
        EXPECT_TRUE(is_in_gauge_group(code, s));
    }
    for (const auto &g : code.gauge_generators()) {
        EXPECT_TRUE(is_in_gauge_group(code, g));
    }
    EXPECT_TRUE(is_in_gauge_group(code, code.z_gauge()[0] * code.x_gauge()[3] * code.stabilizers()[1]));
    EXPECT_FALSE(is_in_gauge_group(code, code.logical_x(0, 0)));
    EXPECT_FALSE(is_in_gauge_group(code, code.logical_z(0, 0)));
    EXPECT_FALSE(is_in_gauge_group(code, PauliGrid::single(3, 3, 1, 1, 'Y')));
    // XX on one row is a gauge operator of the nine-qubit code.
    EXPECT_TRUE(is_in_gauge_group(code, PauliGrid::x_type(BitMatrix::from_strings({"000", "110", "000"}))));
}

// ---- properties ------------------------------------------------------------

class BuilderProperty : public ::testing::Test {
   protected:
    std::mt19937_64 rng{0x5eed0020};
};

TEST_F(BuilderProperty, DecomposeRoundTrips) {
    for (int trial = 0; trial < 30; ++trial) {
        auto code = build_subsystem(testing::random_code(2, 8, rng), testing::random_code(2, 8, rng));
        for (int rep = 0; rep < 10; ++rep) {
            auto op = testing::random_pauli(code.n1(), code.n2(), rng);
            auto d = decompose(code, op);
            EXPECT_EQ(recompose(code, d), op);
            EXPECT_EQ(decompose(code, recompose(code, d)), d);
        }
    }
}

TEST_F(BuilderProperty, TwentyRandomPairsSatisfyStructure) {
    for (int trial = 0; trial < 20; ++trial) {
        auto c1 = testing::random_code(1, 8, rng);
        auto c2 = testing::random_code(1, 8, rng);
        auto code = build_subsystem(c1, c2);
        SCOPED_TRACE("[" + std::to_string(c1.n()) + "," + std::to_string(c1.k()) + "] x [" +
                     std::to_string(c2.n()) + "," + std::to_string(c2.k()) + "]");
        expect_counting_identity(code.counts());
        EXPECT_EQ(code.n(), c1.n() * c2.n());
        EXPECT_EQ(code.k(), c1.k() * c2.k());
        EXPECT_EQ(code.stabilizers().size(), code.counts().stabilizers());
        EXPECT_EQ(code.distance(), std::min(*c1.distance(), *c2.distance()));

        auto stabs = code.stabilizers();
        for (const auto &s : stabs) {
            for (const auto &t : stabs) {
                EXPECT_TRUE(commutes(s, t));
            }
            for (const auto &g : code.gauge_generators()) {
                EXPECT_TRUE(commutes(s, g));
            }
            for (const auto &l : code.logical_xs()) {
                EXPECT_TRUE(commutes(s, l));
            }
            for (const auto &l : code.logical_zs()) {
                EXPECT_TRUE(commutes(s, l));
            }
        }
        // Gauge pairs: Z-gauge i anticommutes with X-gauge j iff i == j.
        auto zg = code.z_gauge();
        auto xg = code.x_gauge();
        for (std::size_t i = 0; i < zg.size(); ++i) {
            for (std::size_t j = 0; j < xg.size(); ++j) {
                EXPECT_EQ(commutes(zg[i], xg[j]), i != j);
            }
            for (const auto &l : code.logical_xs()) {
                EXPECT_TRUE(commutes(zg[i], l));
                EXPECT_TRUE(commutes(xg[i], l));
            }
        }
        // Logical pairs likewise.
        auto lx = code.logical_xs();
        auto lz = code.logical_zs();
        for (std::size_t i = 0; i < lx.size(); ++i) {
            for (std::size_t j = 0; j < lz.size(); ++j) {
                EXPECT_EQ(commutes(lx[i], lz[j]), i != j);
            }
        }
        // Independence of all generators together.
        std::vector<PauliGrid> all(stabs.begin(), stabs.end());
        all.insert(all.end(), code.gauge_generators().begin(), code.gauge_generators().end());
        all.insert(all.end(), lx.begin(), lx.end());
        all.insert(all.end(), lz.begin(), lz.end());
        EXPECT_EQ(rank(symplectic_rows(all, code.n())), all.size());
        EXPECT_EQ(all.size(), 2 * code.n() - code.stabilizers().size());
    }
}

TEST_F(BuilderProperty, SubsystemStabilizersLieInShorGroup) {
    std::vector<std::pair<LinearCode, LinearCode>> pairs = {
        {repetition_code(3), repetition_code(3)},
        {hamming_code_7_4(), hamming_code_7_4()},
        {repetition_code(2), hamming_code_7_4()},
    };
    for (int trial = 0; trial < 10; ++trial) {
        pairs.emplace_back(testing::random_code(1, 7, rng), testing::random_code(1, 7, rng));
    }
    for (const auto &[c1, c2] : pairs) {
        auto sub = build_subsystem(c1, c2);
        auto shor = build_shor(c1, c2);
        ASSERT_EQ(shor.counts().stabilizers(), shor.stabilizers().size());
        ASSERT_EQ(shor_counts(c1.n(), c1.k(), c2.n(), c2.k()).stabilizers(), shor.stabilizers().size());
        auto columns = symplectic_rows(shor.stabilizers(), sub.n()).transposed();
        for (const auto &s : sub.stabilizers()) {
            EXPECT_TRUE(solve(columns, to_symplectic(s)).has_value()) << s.str();
        }
        EXPECT_EQ(rank(symplectic_rows(shor.stabilizers(), sub.n())), shor.stabilizers().size());
        EXPECT_GE(shor.stabilizers().size(), sub.stabilizers().size());
    }
}

TEST_F(BuilderProperty, GaugeGroupClosedUnderProducts) {
    for (int trial = 0; trial < 20; ++trial) {
        auto code = build_subsystem(testing::random_code(2, 7, rng), testing::random_code(2, 7, rng));
        std::vector<PauliGrid> gens(code.stabilizers().begin(), code.stabilizers().end());
        gens.insert(gens.end(), code.gauge_generators().begin(), code.gauge_generators().end());
        if (gens.empty()) {
            continue;
        }
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
        PauliGrid op(code.n1(), code.n2());
        for (int i = 0; i < 6; ++i) {
            op = op * gens[pick(rng)];
            EXPECT_TRUE(is_in_gauge_group(code, op));
        }
        if (!code.logical_xs().empty()) {
            EXPECT_FALSE(is_in_gauge_group(code, op * code.logical_xs()[0]));
        }
    }
}

}  // namespace
}  // namespace subsys
