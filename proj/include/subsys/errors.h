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

#ifndef SUBSYS_ERRORS_H
#define SUBSYS_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subsys {

/// Operand shapes do not fit the operation.
class DimensionMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A matrix expected to have full row rank does not, or a pairing
/// precondition between matrices fails.
class RankDeficient : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A constructed object failed its own invariant checks.
class InconsistentCode : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// An exhaustive search or enumeration would exceed its guard.
class SearchLimitExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string shape_str(std::size_t rows, std::size_t cols);

}  // namespace subsys

#endif
