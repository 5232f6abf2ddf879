// Copyright 2026 The opmgr Authors
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

#include "opmgr/bench/instance_io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "opmgr/error.hpp"

namespace opmgr::bench {

namespace {

using pfsp::Time;

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
  bool label;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    Line line{number, {}, false};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t begin = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > begin) line.tokens.push_back({raw.substr(begin, i - begin), begin + 1});
    }
    if (!line.tokens.empty()) {
      line.label = std::isalpha(static_cast<unsigned char>(line.tokens.front().text.front())) != 0;
      lines.push_back(std::move(line));
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

Time to_int(const Token& token, std::size_t line) {
  Time value = 0;
  const auto* first = token.text.data();
  const auto* last = first + token.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(ParseErrorKind::NonInteger, line, token.column,
                     "'" + std::string(token.text) + "' is not an integer");
  }
  return value;
}

Time to_time(const Token& token, std::size_t line) {
  const Time value = to_int(token, line);
  if (value < 0) {
    throw ParseError(ParseErrorKind::NonInteger, line, token.column,
                     "processing time must be non-negative");
  }
  return value;
}

std::pair<int, int> read_dimensions(const Line& line) {
  if (line.tokens.size() < 2) {
    throw ParseError(ParseErrorKind::DimensionMismatch, line.number,
                     line.tokens.front().column, "expected job and machine counts");
  }
  const Time n = to_int(line.tokens[0], line.number);
  const Time m = to_int(line.tokens[1], line.number);
  if (n < 1 || m < 1) {
    throw ParseError(ParseErrorKind::DimensionMismatch, line.number, line.tokens[0].column,
                     "job and machine counts must be positive");
  }
  return {static_cast<int>(n), static_cast<int>(m)};
}

std::size_t end_line(std::string_view text) {
  std::size_t lines = 1;
  for (char c : text) lines += c == '\n';
  return lines;
}

pfsp::Instance parse_taillard(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t k = 0;
  while (k < lines.size() && lines[k].label) ++k;
  if (k == lines.size()) {
    throw ParseError(ParseErrorKind::Truncated, end_line(text), 1, "missing dimension line");
  }
  const auto [n, m] = read_dimensions(lines[k]);
  for (std::size_t t = 2; t < lines[k].tokens.size(); ++t) to_int(lines[k].tokens[t], lines[k].number);
  ++k;

  std::vector<std::vector<Time>> rows;
  rows.reserve(m);
  for (; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.label) continue;
    if (static_cast<int>(rows.size()) == m) {
      throw ParseError(ParseErrorKind::DimensionMismatch, line.number, line.tokens.front().column,
                       "data beyond the " + std::to_string(m) + " machine rows");
    }
    if (static_cast<int>(line.tokens.size()) != n) {
      const auto& at = static_cast<int>(line.tokens.size()) > n ? line.tokens[n] : line.tokens.back();
      throw ParseError(ParseErrorKind::DimensionMismatch, line.number, at.column,
                       "machine row has " + std::to_string(line.tokens.size()) +
                           " entries, expected " + std::to_string(n));
    }
    std::vector<Time> row;
    row.reserve(n);
    for (const auto& token : line.tokens) row.push_back(to_time(token, line.number));
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != m) {
    throw ParseError(ParseErrorKind::Truncated, end_line(text), 1,
                     "found " + std::to_string(rows.size()) + " machine rows, expected " +
                         std::to_string(m));
  }
  return pfsp::Instance(rows);
}

pfsp::Instance parse_vrf(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(ParseErrorKind::Truncated, 1, 1, "empty file");
  if (lines.front().label) {
    throw ParseError(ParseErrorKind::NonInteger, lines.front().number,
                     lines.front().tokens.front().column, "expected 'n m'");
  }
  const auto [n, m] = read_dimensions(lines.front());
  if (lines.front().tokens.size() != 2) {
    throw ParseError(ParseErrorKind::DimensionMismatch, lines.front().number,
                     lines.front().tokens[2].column, "dimension line must hold exactly 'n m'");
  }
  std::vector<std::vector<Time>> rows(m, std::vector<Time>(n, 0));
  int job = 0;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (job == n) {
      throw ParseError(ParseErrorKind::DimensionMismatch, line.number, line.tokens.front().column,
                       "data beyond the " + std::to_string(n) + " job lines");
    }
    if (static_cast<int>(line.tokens.size()) != 2 * m) {
      throw ParseError(ParseErrorKind::DimensionMismatch, line.number, line.tokens.back().column,
                       "job line has " + std::to_string(line.tokens.size()) +
                           " tokens, expected " + std::to_string(2 * m));
    }
    std::vector<bool> seen(m, false);
    for (int pair = 0; pair < m; ++pair) {
      const auto& index_token = line.tokens[2 * pair];
      const Time machine = to_int(index_token, line.number);
      if (machine < 0 || machine >= m || seen[machine]) {
        throw ParseError(ParseErrorKind::DimensionMismatch, line.number, index_token.column,
                         "machine index " + std::string(index_token.text) +
                             " invalid or repeated");
      }
      seen[machine] = true;
      rows[machine][job] = to_time(line.tokens[2 * pair + 1], line.number);
    }
    ++job;
  }
  if (job != n) {
    throw ParseError(ParseErrorKind::Truncated, end_line(text), 1,
                     "found " + std::to_string(job) + " job lines, expected " + std::to_string(n));
  }
  return pfsp::Instance(rows);
}

constexpr std::array<std::int64_t, 120> kTaillardSeeds{
    873654221,  379008056,  1866992158, 216771124,  495070989,  402959317,  1369363414,
    2021925980, 573109518,  88325120,   587595453,  1401007982, 873136276,  268827376,
    1634173168, 691823909,  73807235,   1273398721, 2065119309, 1672900551, 479340445,
    268827376,  1958948863, 918272953,  555010963,  2010851491, 1519833303, 1748670931,
    1923497586, 1829909967, 1328042058, 200382020,  496319842,  1203030903, 1730708564,
    450926852,  1303135678, 1273398721, 587288402,  248421594,  1958948863, 575633267,
    655816003,  1977864101, 93805469,   1803345551, 49612559,   1899802599, 2013025619,
    578962478,  1539989115, 691823909,  655816003,  1315102446, 1949668355, 1923497586,
    1805594913, 1861070898, 715643788,  464843328,  896678084,  1179439976, 1122278347,
    416756875,  267829958,  1835213917, 1328833962, 1418570761, 161033112,  304212574,
    1539989115, 655816003,  960914243,  1915696806, 2013025619, 1168140026, 1923497586,
    167698528,  1528387973, 993794175,  450926852,  1462772409, 1021685265, 83696007,
    508154254,  1861070898, 26482542,   444956424,  2115448041, 118254244,  471503978,
    1215892992, 135346136,  1602504050, 160037322,  551454346,  519485142,  383947510,
    1968171878, 540872513,  2013025619, 475051709,  914834335,  810642687,  1019331795,
    2056065863, 1342855162, 1325809384, 1988803007, 765656702,  1368624604, 450181436,
    1927888393, 1759567256, 606425239,  19268348,   1298201670, 2041736264, 379756761,
    28837162};

}  // namespace

std::string_view to_string(InstanceFormat format) noexcept {
  return format == InstanceFormat::Taillard ? "taillard" : "vrf";
}

std::optional<InstanceFormat> parse_format(std::string_view text) {
  if (text == "taillard") return InstanceFormat::Taillard;
  if (text == "vrf") return InstanceFormat::VRF;
  return std::nullopt;
}

pfsp::Instance parse_instance(std::string_view text, InstanceFormat format) {
  return format == InstanceFormat::Taillard ? parse_taillard(text) : parse_vrf(text);
}

pfsp::Instance load_instance(const std::filesystem::path& path, InstanceFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  auto instance = parse_instance(buffer.str(), format);
  instance.set_name(path.stem().string());
  return instance;
}

void write_instance(std::ostream& out, const pfsp::Instance& instance, InstanceFormat format,
                    std::optional<std::int64_t> seed) {
  const int n = instance.jobs();
  const int m = instance.machines();
  if (format == InstanceFormat::VRF) {
    out << n << ' ' << m << '\n';
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < m; ++i) out << (i ? " " : "") << i << ' ' << instance.time(i, j);
      out << '\n';
    }
    return;
  }
  out << (seed ? "number of jobs, number of machines, initial seed :\n"
               : "number of jobs, number of machines :\n");
  out << std::setw(12) << n << std::setw(12) << m;
  if (seed) out << std::setw(12) << *seed;
  out << "\nprocessing times :\n";
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) out << ' ' << std::setw(2) << instance.time(i, j);
    out << '\n';
  }
}

pfsp::Instance generate_taillard(std::int64_t seed, int jobs, int machines) {
  constexpr std::int64_t kModulus = 2147483647, kA = 16807, kB = 127773, kC = 2836;
  std::vector<std::vector<Time>> rows(machines, std::vector<Time>(jobs));
  for (auto& row : rows) {
    for (auto& p : row) {
      const std::int64_t k = seed / kB;
      seed = kA * (seed % kB) - k * kC;
      if (seed < 0) seed += kModulus;
      const double unit = static_cast<double>(seed) / static_cast<double>(kModulus);
      p = 1 + static_cast<Time>(unit * 99.0);
    }
  }
  return pfsp::Instance(rows);
}

std::int64_t taillard_seed(int number) {
  if (number < 1 || number > 120) throw InvalidArgument("Taillard instances are ta001..ta120");
  return kTaillardSeeds[number - 1];
}

std::pair<int, int> taillard_size(int number) {
  if (number < 1 || number > 120) throw InvalidArgument("Taillard instances are ta001..ta120");
  static constexpr std::array<std::pair<int, int>, 12> kSizes{
      {{20, 5}, {20, 10}, {20, 20}, {50, 5}, {50, 10}, {50, 20}, {100, 5}, {100, 10},
       {100, 20}, {200, 10}, {200, 20}, {500, 20}}};
  return kSizes[(number - 1) / 10];
}

}  // namespace opmgr::bench
