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

#ifndef SUBSYS_IO_H
#define SUBSYS_IO_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "subsys/bit_matrix.h"
#include "subsys/linear_code.h"
#include "subsys/pauli_grid.h"

namespace subsys {

/// Malformed text input. line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &source, std::size_t line, std::size_t column, const std::string &message);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

/// Matrix text format:
///
///     # optional comment lines
///     <rows> <cols>
///     0110
///     ...
///
/// '#' starts a comment line; blank lines are ignored. Each data row is
/// exactly <cols> characters of '0'/'1'.
BitMatrix parse_matrix(std::string_view text, const std::string &source = "<input>");
std::string serialize_matrix(const BitMatrix &m);
BitMatrix read_matrix_file(const std::string &path);

/// Comma-separated terms "<P>@(<row>,<col>)" with P in {I, X, Y, Z},
/// zero-indexed. Repeated sites multiply in order. "" and "I" give the
/// identity.
PauliGrid parse_pauli_string(std::string_view text, std::size_t n1, std::size_t n2);

/// Resolves a code spec. Builtins: "rep:<n>", "hamming:7-4". Files:
/// "generator:<path>" or "parity:<path>". Builtin codes carry their
/// distance; file codes get theirs computed when k <= 24.
LinearCode resolve_code_spec(const std::string &spec);

}  // namespace subsys

#endif
