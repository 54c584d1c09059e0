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

#include "subsys/io.h"

#include <gtest/gtest.h>

#include <random>

#include "subsys/errors.h"
#include "test_util.h"

namespace subsys {
namespace {

const std::string kData = SUBSYS_TEST_DATA_DIR;

void expect_parse_error(std::string_view text, std::size_t line, std::size_t column) {
    try {
        parse_matrix(text, "<test>");
        ADD_FAILURE() << "no error for:\n" << text;
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), line) << e.what();
        EXPECT_EQ(e.column(), column) << e.what();
    }
}

TEST(ParseMatrix, HeaderCommentsAndRows) {
    auto m = parse_matrix("# a comment\n\n2 3\n110\n  011\n", "<test>");
    EXPECT_EQ(m, BitMatrix::from_strings({"110", "011"}));
    EXPECT_EQ(parse_matrix("0 4\n", "<test>").cols(), 4U);
}

TEST(ParseMatrix, ErrorLocations) {
    expect_parse_error("2 3\n110\n01x\n", 3, 3);
    expect_parse_error("2 3\n110\n0110\n", 3, 4);
    expect_parse_error("2 3\n110\n01\n", 3, 3);
    expect_parse_error("two 3\n", 1, 1);
    expect_parse_error("2 three\n", 1, 3);
    expect_parse_error("23\n", 1, 1);
    expect_parse_error("2 3\n110\n", 3, 0);
    expect_parse_error("1 3\n110\n011\n", 3, 1);
    expect_parse_error("# nothing\n", 2, 0);
}

TEST(ParseMatrix, FileErrorsNameTheFile) {
    try {
        read_matrix_file(kData + "/bad_char.txt");
        ADD_FAILURE();
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("bad_char.txt:3:3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(read_matrix_file(kData + "/missing.txt"), ParseError);
}

TEST(ParseMatrix, SerializeRoundTrip) {
    std::mt19937_64 rng(0x5eed0040);
    std::uniform_int_distribution<std::size_t> dim(0, 70);
    for (int trial = 0; trial < 100; ++trial) {
        auto m = testing::random_matrix(dim(rng), dim(rng) + 1, rng);
        EXPECT_EQ(parse_matrix(serialize_matrix(m), "<roundtrip>"), m);
    }
    EXPECT_EQ(serialize_matrix(BitMatrix::from_strings({"10", "01"})), "2 2\n10\n01\n");
}

TEST(CodeSpec, FilesAndBuiltins) {
    auto from_parity = resolve_code_spec("parity:" + kData + "/rep3_parity.txt");
    auto from_generator = resolve_code_spec("generator:" + kData + "/rep3_generator.txt");
    EXPECT_EQ(from_parity.generator(), BitMatrix::from_strings({"111"}));
    EXPECT_EQ(from_parity.distance(), 3U);
    EXPECT_EQ(from_generator.k(), 1U);
    EXPECT_EQ(from_generator.distance(), 3U);
    EXPECT_EQ(resolve_code_spec("rep:4").distance(), 4U);
    EXPECT_THROW(resolve_code_spec("parity:" + kData + "/bad_width.txt"), ParseError);
    EXPECT_THROW(resolve_code_spec("golay:24"), std::invalid_argument);
}

TEST(PauliString, Terms) {
    EXPECT_EQ(parse_pauli_string("X@(0,0)", 3, 3).str(), "+XII/III/III");
    EXPECT_EQ(parse_pauli_string("X@(0,0),Z@(1,2),Y@(2,1)", 3, 3).str(), "+XII/IIZ/IYI");
    EXPECT_TRUE(parse_pauli_string("", 2, 2).is_identity_up_to_phase());
    EXPECT_TRUE(parse_pauli_string("I", 2, 2).is_identity_up_to_phase());
    // Repeated sites multiply: X then Z gives XZ = -iY.
    EXPECT_EQ(parse_pauli_string("X@(1,1),Z@(1,1)", 2, 2).str(), "-iII/IY");
}

TEST(PauliString, Errors) {
    EXPECT_THROW(parse_pauli_string("Q@(0,0)", 3, 3), ParseError);
    EXPECT_THROW(parse_pauli_string("X@(3,0)", 3, 3), ParseError);
    EXPECT_THROW(parse_pauli_string("X(0,0)", 3, 3), ParseError);
    EXPECT_THROW(parse_pauli_string("X@(0,0),", 3, 3), ParseError);
    try {
        parse_pauli_string("X@(0,0),Z@(1;2)", 3, 3);
        ADD_FAILURE();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.column(), 13U) << e.what();
    }
}

}  // namespace
}  // namespace subsys
