// Copyright 2026 The abtour Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "abtour/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace abtour::io {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Parses a whole token as a signed integer.
bool parse_integer(std::string_view token, Score& value) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end && !token.empty();
}

}  // namespace

std::vector<Score> parse_scores(std::string_view text) {
  std::vector<Score> scores;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (is_space(text[pos]) || text[pos] == ',')) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end]) && text[end] != ',') ++end;
    if (end == pos) break;
    Score value = 0;
    const std::string_view token = text.substr(pos, end - pos);
    if (!parse_integer(token, value)) {
      throw InputError("malformed score '" + std::string(token) + "'");
    }
    scores.push_back(value);
    pos = end;
  }
  return scores;
}

PointMatrix parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<Score>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    const std::string_view line =
        trim(text.substr(0, nl == std::string_view::npos ? text.size() : nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (line.empty()) continue;

    std::vector<Score> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string_view cell = trim(line.substr(
          start, comma == std::string_view::npos ? line.size() - start
                                                 : comma - start));
      Score value = 0;
      if (!parse_integer(cell, value)) {
        throw Error(ErrorCode::kMalformedMatrix,
                    "line " + std::to_string(line_no) + ": '" +
                        std::string(cell) + "' is not an integer");
      }
      row.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorCode::kMalformedMatrix,
                  "matrix is not square: row " + std::to_string(i + 1) +
                      " has " + std::to_string(rows[i].size()) +
                      " entries for " + std::to_string(rows.size()) + " rows");
    }
  }
  return PointMatrix(rows);
}

std::string format_matrix_csv(const PointMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      out << (j ? "," : "") << m(i, j);
    }
    out << '\n';
  }
  return out.str();
}

std::string format_matrix_table(const PointMatrix& m) {
  const std::size_t n = m.size();
  const std::vector<Score> sums = m.row_sums();
  std::size_t width = 5;
  for (Score s : sums) width = std::max(width, std::to_string(s).size() + 1);
  width = std::max(width, std::to_string(n).size() + 2);

  std::ostringstream out;
  out << std::setw(static_cast<int>(width)) << "";
  for (std::size_t j = 0; j < n; ++j) {
    out << std::setw(static_cast<int>(width)) << ("P" + std::to_string(j + 1));
  }
  out << std::setw(static_cast<int>(width) + 2) << "Score" << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out << std::setw(static_cast<int>(width)) << ("P" + std::to_string(i + 1));
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        out << std::setw(static_cast<int>(width)) << "-";
      } else {
        out << std::setw(static_cast<int>(width)) << m(i, j);
      }
    }
    out << std::setw(static_cast<int>(width) + 2) << sums[i] << '\n';
  }
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw InputError("error while reading '" + path.string() + "'");
  return buffer.str();
}

}  // namespace abtour::io
