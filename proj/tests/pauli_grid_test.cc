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

#include <gtest/gtest.h>

#include <array>
#include <complex>
#include <random>

#include "subsys/errors.h"
#include "test_util.h"

namespace subsys {
namespace {

using Mat2 = std::array<std::complex<double>, 4>;  // row-major 2x2

Mat2 mul(const Mat2 &a, const Mat2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

const Mat2 kI{1, 0, 0, 1};
const Mat2 kX{0, 1, 1, 0};
const Mat2 kZ{1, 0, 0, -1};

Mat2 site_matrix(bool z, bool x) { return mul(z ? kZ : kI, x ? kX : kI); }

// Phase exponent e (i^e) of the product x * y, computed from explicit
// single-qubit matrices site by site.
unsigned product_phase_oracle(const PauliGrid &x, const PauliGrid &y) {
    std::complex<double> scale = std::pow(std::complex<double>(0, 1), static_cast<int>(x.phase() + y.phase()));
    for (std::size_t r = 0; r < x.n1(); ++r) {
        for (std::size_t c = 0; c < x.n2(); ++c) {
            auto m = mul(site_matrix(x.z_part().get(r, c), x.x_part().get(r, c)),
                         site_matrix(y.z_part().get(r, c), y.x_part().get(r, c)));
            auto ref = site_matrix(x.z_part().get(r, c) != y.z_part().get(r, c),
                                   x.x_part().get(r, c) != y.x_part().get(r, c));
            // m = sign * ref with sign = +-1; compare on a nonzero entry.
            auto idx = std::abs(ref[0]) > 0.5 ? 0 : 1;
            scale *= m[idx] / ref[idx];
        }
    }
    for (unsigned e = 0; e < 4; ++e) {
        if (std::abs(scale - std::pow(std::complex<double>(0, 1), static_cast<int>(e))) < 1e-9) {
            return e;
        }
    }
    ADD_FAILURE() << "product phase is not a power of i";
    return 0;
}

// Anticommuting sites: both non-identity and different.
bool commutes_oracle(const PauliGrid &x, const PauliGrid &y) {
    int anti = 0;
    for (std::size_t r = 0; r < x.n1(); ++r) {
        for (std::size_t c = 0; c < x.n2(); ++c) {
            auto a = x.symbol(r, c);
            auto b = y.symbol(r, c);
            anti += (a != 'I' && b != 'I' && a != b) ? 1 : 0;
        }
    }
    return anti % 2 == 0;
}

TEST(PauliGrid, WeightCountsNonIdentitySites) {
    auto op = PauliGrid::single(2, 2, 0, 0, 'Z') * PauliGrid::single(2, 2, 1, 1, 'X');
    EXPECT_EQ(op.weight(), 2U);
    EXPECT_EQ(PauliGrid::single(3, 3, 1, 1, 'Y').weight(), 1U);
    EXPECT_EQ(PauliGrid(3, 3).weight(), 0U);
}

TEST(PauliGrid, SingleSiteCommutation) {
    auto x = PauliGrid::single(1, 1, 0, 0, 'X');
    auto y = PauliGrid::single(1, 1, 0, 0, 'Y');
    auto z = PauliGrid::single(1, 1, 0, 0, 'Z');
    EXPECT_FALSE(commutes(x, z));
    EXPECT_FALSE(commutes(x, y));
    EXPECT_FALSE(commutes(y, z));
    EXPECT_TRUE(commutes(x, x));
    EXPECT_TRUE(commutes(y, y));
}

TEST(PauliGrid, TwoAnticommutingSitesCommute) {
    // XX and ZZ on two sites commute.
    auto xx = PauliGrid::x_type(BitMatrix::from_strings({"11"}));
    auto zz = PauliGrid::z_type(BitMatrix::from_strings({"11"}));
    EXPECT_TRUE(commutes(xx, zz));
}

TEST(PauliGrid, ProductsOfSingleQubitPaulis) {
    auto x = PauliGrid::single(1, 1, 0, 0, 'X');
    auto y = PauliGrid::single(1, 1, 0, 0, 'Y');
    auto z = PauliGrid::single(1, 1, 0, 0, 'Z');
    // XZ = -iY, ZX = iY, XX = I.
    EXPECT_EQ((x * z).str(), "-iY");
    EXPECT_EQ((z * x).str(), "+iY");
    EXPECT_EQ((x * x).str(), "+I");
    EXPECT_EQ((y * y).str(), "+I");
    // XY = iZ.
    EXPECT_EQ((x * y).str(), "+iZ");
    EXPECT_TRUE((x * y).same_up_to_phase(z));
}

TEST(PauliGrid, StringForm) {
    auto op = PauliGrid::single(2, 3, 0, 0, 'X') * PauliGrid::single(2, 3, 1, 2, 'Y');
    EXPECT_EQ(op.str(), "+XII/IIY");
    EXPECT_EQ(op.with_phase(op.phase() + 2).str(), "-XII/IIY");
    EXPECT_EQ(op.symbol(1, 2), 'Y');
    EXPECT_EQ(op.symbol(0, 1), 'I');
}

TEST(PauliGrid, GridMismatchThrows) {
    EXPECT_THROW(commutes(PauliGrid(2, 2), PauliGrid(2, 3)), DimensionMismatch);
    EXPECT_THROW(multiply(PauliGrid(2, 2), PauliGrid(3, 2)), DimensionMismatch);
    EXPECT_THROW(PauliGrid::single(2, 2, 2, 0, 'X'), DimensionMismatch);
    EXPECT_THROW(PauliGrid(BitMatrix(2, 2), BitMatrix(2, 3)), DimensionMismatch);
}

TEST(PauliGrid, SymplecticForm) {
    auto op = PauliGrid::single(1, 2, 0, 1, 'Z') * PauliGrid::single(1, 2, 0, 0, 'X');
    // [A | B] with A = 01, B = 10.
    EXPECT_EQ(to_symplectic(op), BitVector::from_string("0110"));
}

// ---- properties ------------------------------------------------------------

class PauliProperty : public ::testing::Test {
   protected:
    std::mt19937_64 rng{0x5eed0010};
    PauliGrid random_op(std::size_t n1, std::size_t n2) { return testing::random_pauli(n1, n2, rng); }
};

TEST_F(PauliProperty, MultiplyMatchesMatrixOracle) {
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_op(2, 3);
        auto b = random_op(2, 3);
        auto ab = a * b;
        EXPECT_EQ(ab.z_part(), a.z_part() ^ b.z_part());
        EXPECT_EQ(ab.x_part(), a.x_part() ^ b.x_part());
        EXPECT_EQ(ab.phase(), product_phase_oracle(a, b));
    }
}

TEST_F(PauliProperty, CommutesMatchesSiteCount) {
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_op(3, 4);
        auto b = random_op(3, 4);
        EXPECT_EQ(commutes(a, b), commutes_oracle(a, b));
    }
}

TEST_F(PauliProperty, MultiplicationIsAssociative) {
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_op(3, 70);
        auto b = random_op(3, 70);
        auto c = random_op(3, 70);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST_F(PauliProperty, CommutationDecidesOrderPhase) {
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_op(4, 5);
        auto b = random_op(4, 5);
        auto ab = a * b;
        auto ba = b * a;
        EXPECT_TRUE(ab.same_up_to_phase(ba));
        EXPECT_EQ(ab.phase() == ba.phase(), commutes(a, b));
        if (!commutes(a, b)) {
            EXPECT_EQ((ab.phase() + 2) % 4, ba.phase());
        }
    }
}

TEST_F(PauliProperty, WeightIsSubadditive) {
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_op(3, 3);
        auto b = random_op(3, 3);
        EXPECT_LE((a * b).weight(), a.weight() + b.weight());
    }
}

TEST_F(PauliProperty, SelfInverseUpToPhase) {
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_op(3, 3);
        EXPECT_TRUE((a * a).is_identity_up_to_phase());
    }
}

}  // namespace
}  // namespace subsys
