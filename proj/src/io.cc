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

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "subsys/errors.h"

namespace subsys {

namespace {

std::string format_location(const std::string &source, std::size_t line, std::size_t column) {
    std::string out = source;
    if (line > 0) {
        out += ":" + std::to_string(line);
        if (column > 0) {
            out += ":" + std::to_string(column);
        }
    }
    return out;
}

bool parse_count(std::string_view text, std::size_t &value) {
    if (text.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    return ec == std::errc() && ptr == text.data() + text.size();
}

std::string_view trim_right(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

std::size_t leading_space(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
        ++i;
    }
    return i;
}

}  // namespace

ParseError::ParseError(const std::string &source, std::size_t line, std::size_t column, const std::string &message)
    : std::runtime_error(format_location(source, line, column) + ": " + message), line_(line), column_(column) {}

BitMatrix parse_matrix(std::string_view text, const std::string &source) {
    bool have_header = false;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t header_line = 0;
    std::vector<std::string> data;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        auto line = trim_right(raw);
        auto indent = leading_space(line);
        line.remove_prefix(indent);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!have_header) {
            auto space = line.find_first_of(" \t");
            if (space == std::string_view::npos) {
                throw ParseError(source, line_no, indent + 1, "expected header '<rows> <cols>'");
            }
            auto first = line.substr(0, space);
            auto rest = line.substr(space);
            auto gap = leading_space(rest);
            auto second = rest.substr(gap);
            if (!parse_count(first, rows)) {
                throw ParseError(source, line_no, indent + 1, "bad row count '" + std::string(first) + "'");
            }
            if (!parse_count(second, cols)) {
                throw ParseError(source, line_no, indent + space + gap + 1,
                                 "bad column count '" + std::string(second) + "'");
            }
            have_header = true;
            header_line = line_no;
            continue;
        }
        if (data.size() == rows) {
            throw ParseError(source, line_no, indent + 1,
                             "more than the " + std::to_string(rows) + " rows declared on line " +
                                 std::to_string(header_line));
        }
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (line[c] != '0' && line[c] != '1') {
                throw ParseError(source, line_no, indent + c + 1,
                                 std::string("expected '0' or '1', found '") + line[c] + "'");
            }
        }
        if (line.size() != cols) {
            throw ParseError(source, line_no, indent + std::min(line.size(), cols) + 1,
                             "row has " + std::to_string(line.size()) + " entries, expected " + std::to_string(cols));
        }
        data.emplace_back(line);
    }
    if (!have_header) {
        throw ParseError(source, line_no, 0, "missing header '<rows> <cols>'");
    }
    if (data.size() != rows) {
        throw ParseError(source, line_no, 0,
                         "expected " + std::to_string(rows) + " rows, found " + std::to_string(data.size()));
    }
    return BitMatrix::from_strings(data, cols);
}

std::string serialize_matrix(const BitMatrix &m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += m.row(r).str();
        out += '\n';
    }
    return out;
}

BitMatrix read_matrix_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path, 0, 0, "cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str(), path);
}

PauliGrid parse_pauli_string(std::string_view text, std::size_t n1, std::size_t n2) {
    const std::string source = "<pauli>";
    PauliGrid out(n1, n2);
    if (text.empty() || text == "I") {
        return out;
    }
    std::size_t pos = 0;
    auto fail = [&](std::size_t at, const std::string &msg) -> ParseError {
        return ParseError(source, 1, at + 1, msg);
    };
    auto read_index = [&](std::size_t &at) {
        std::size_t start = at;
        while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at]))) {
            ++at;
        }
        std::size_t value = 0;
        if (!parse_count(text.substr(start, at - start), value)) {
            throw fail(start, "expected a site index");
        }
        return value;
    };
    auto expect = [&](std::size_t &at, char c) {
        if (at >= text.size() || text[at] != c) {
            throw fail(at, std::string("expected '") + c + "'");
        }
        ++at;
    };
    while (true) {
        const auto term_start = pos;
        if (pos >= text.size()) {
            throw fail(pos, "expected a Pauli term");
        }
        char pauli = text[pos];
        if (pauli != 'I' && pauli != 'X' && pauli != 'Y' && pauli != 'Z') {
            throw fail(pos, std::string("unknown Pauli '") + pauli + "'");
        }
        ++pos;
        expect(pos, '@');
        expect(pos, '(');
        auto r = read_index(pos);
        expect(pos, ',');
        auto c = read_index(pos);
        expect(pos, ')');
        if (r >= n1 || c >= n2) {
            throw fail(term_start, "site (" + std::to_string(r) + "," + std::to_string(c) + ") outside grid " +
                                       shape_str(n1, n2));
        }
        out = multiply(out, PauliGrid::single(n1, n2, r, c, pauli));
        if (pos == text.size()) {
            break;
        }
        expect(pos, ',');
    }
    return out;
}

LinearCode resolve_code_spec(const std::string &spec) {
    auto with_distance = [](LinearCode code) {
        if (code.k() > 0 && code.k() <= kMaxDistanceDimension) {
            return code.with_verified_distance(min_distance(code));
        }
        return code;
    };
    if (spec.starts_with("generator:")) {
        return with_distance(LinearCode::from_generator(read_matrix_file(spec.substr(10))));
    }
    if (spec.starts_with("parity:")) {
        return with_distance(LinearCode::from_parity(read_matrix_file(spec.substr(7))));
    }
    return builtin_code(spec);
}

}  // namespace subsys
