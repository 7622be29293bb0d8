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

#include "pmtn/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pmtn {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++number;
    Line line{number, {}};
    std::size_t i = pos;
    while (i < end) {
      while (i < end && is_space(text[i])) ++i;
      const std::size_t start = i;
      while (i < end && !is_space(text[i])) ++i;
      if (i > start) line.tokens.push_back(text.substr(start, i - start));
    }
    lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

std::int64_t to_int(std::string_view token, int line) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError(line, "expected an integer, found '" + std::string(token) + "'");
  }
  return value;
}

void expect_blank_rest(const std::vector<Line>& lines, std::size_t from) {
  for (std::size_t i = from; i < lines.size(); ++i) {
    if (!lines[i].tokens.empty()) {
      throw ParseError(lines[i].number, "unexpected trailing content '" +
                                            std::string(lines[i].tokens.front()) + "'");
    }
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens.size() != 2) {
    throw ParseError(1, "header must be 'n p'");
  }
  const std::int64_t n = to_int(lines[0].tokens[0], 1);
  const std::int64_t p = to_int(lines[0].tokens[1], 1);
  if (n < 1) throw ParseError(1, "n must be at least 1");
  if (p < 1) throw ParseError(1, "p must be at least 1");
  if (n > 1'000'000 || p > 1'000'000) throw ParseError(1, "n or p out of range");
  Instance inst;
  inst.p = static_cast<int>(p);
  for (std::int64_t j = 1; j <= n; ++j) {
    const auto idx = static_cast<std::size_t>(j);
    if (idx >= lines.size()) {
      throw ParseError(static_cast<int>(lines.size()),
                       "expected " + std::to_string(n) + " job lines, found " +
                           std::to_string(j - 1));
    }
    const Line& line = lines[idx];
    if (line.tokens.size() != 2) throw ParseError(line.number, "job line must be 'r w'");
    inst.jobs.push_back(Job{static_cast<int>(j), to_int(line.tokens[0], line.number),
                            to_int(line.tokens[1], line.number)});
  }
  expect_blank_rest(lines, static_cast<std::size_t>(n) + 1);
  return inst;
}

std::string format_instance(const Instance& inst) {
  std::ostringstream out;
  out << inst.n() << ' ' << inst.p << '\n';
  for (const Job& job : inst.jobs) out << job.release << ' ' << job.weight << '\n';
  return out.str();
}

Schedule parse_schedule(std::string_view text) {
  const auto lines = tokenize(text);
  std::size_t first = 0;
  while (first < lines.size() && lines[first].tokens.empty()) ++first;
  if (first == lines.size()) throw ParseError(1, "empty schedule");
  Schedule s;
  for (std::string_view token : lines[first].tokens) {
    if (token == "-") {
      s.slots.push_back(kIdle);
      continue;
    }
    const std::int64_t id = to_int(token, lines[first].number);
    if (id < 1 || id > 1'000'000) {
      throw ParseError(lines[first].number, "job id out of range: " + std::string(token));
    }
    s.slots.push_back(static_cast<int>(id));
  }
  expect_blank_rest(lines, first + 1);
  return s;
}

std::string format_schedule(const Schedule& s) {
  std::string out;
  for (std::size_t i = 0; i < s.slots.size(); ++i) {
    if (i > 0) out += ' ';
    out += s.slots[i] == kIdle ? std::string("-") : std::to_string(s.slots[i]);
  }
  out += '\n';
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace pmtn
