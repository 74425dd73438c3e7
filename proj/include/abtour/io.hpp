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

#ifndef ABTOUR_IO_HPP_
#define ABTOUR_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "abtour/core.hpp"

namespace abtour::io {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integers separated by commas and/or whitespace (so a one-column file works
// too). Throws InputError on anything else.
std::vector<Score> parse_scores(std::string_view text);

// Plain CSV: n lines of n comma-separated nonnegative integers, zero
// diagonal, no header. Blank lines are ignored. Throws Error(kMalformedMatrix)
// for ragged, non-square or non-numeric input and for values PointMatrix
// rejects.
PointMatrix parse_matrix_csv(std::string_view text);

std::string format_matrix_csv(const PointMatrix& m);

// Fixed-width table with a trailing Score column.
std::string format_matrix_table(const PointMatrix& m);

// Throws InputError if the file cannot be read.
std::string read_file(const std::filesystem::path& path);

}  // namespace abtour::io

#endif  // ABTOUR_IO_HPP_
