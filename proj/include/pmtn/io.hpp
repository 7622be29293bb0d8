// Copyright 2026 The pmtnsched Authors.
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

// Text formats.
//
// Instance:   line 1 "n p", then n lines "r_j w_j" (job id = line order).
// Schedule:   one line of whitespace-separated job ids, "-" for idle.
//
// Tokens are ASCII decimal integers. Blank trailing lines are accepted; any
// other extra content is rejected.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "pmtn/instance.hpp"

namespace pmtn {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

Instance parse_instance(std::string_view text);
std::string format_instance(const Instance& inst);

Schedule parse_schedule(std::string_view text);
std::string format_schedule(const Schedule& s);

// Whole-file helpers; throw std::runtime_error on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace pmtn
