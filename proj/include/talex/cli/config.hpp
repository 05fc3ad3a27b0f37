// Copyright 2026 The talex Authors.
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

#pragma once

#include "talex/algebra/scalar.hpp"

#include <cstdlib>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

namespace talex::cli {

enum class OutputFormat { json, csv, text };
enum class MethodChoice { fox, theorem, prop32, all };

/// Exit codes; a stable contract for scripts.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int no_nondegenerate_root = 2;
inline constexpr int non_convergence = 3;
inline constexpr int degenerate_context = 4;
inline constexpr int inexact_division = 5;
inline constexpr int usage = 64;
} // namespace exit_code

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A complex parameter kept as the two decimal strings the user typed, so it
/// can be materialized at any precision.
struct ComplexText {
  std::string re = "0";
  std::string im = "0";

  Scalar value() const { return Scalar::from_strings(re, im); }
};

inline ComplexText parse_complex(const std::string &text) {
  static const std::regex number(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw UsageError("expected RE,IM but got '" + text + "'");
  ComplexText c{text.substr(0, comma), text.substr(comma + 1)};
  if (!std::regex_match(c.re, number) || !std::regex_match(c.im, number))
    throw UsageError("not a decimal pair: '" + text + "'");
  return c;
}

inline std::pair<int, int> parse_range(const std::string &text) {
  static const std::regex range(R"((\d+)\.\.(\d+))");
  std::smatch mt;
  if (!std::regex_match(text, mt, range))
    throw UsageError("expected A..B but got '" + text + "'");
  return {std::stoi(mt[1]), std::stoi(mt[2])};
}

inline std::string_view to_string(MethodChoice m) {
  switch (m) {
  case MethodChoice::fox:
    return "fox";
  case MethodChoice::theorem:
    return "theorem";
  case MethodChoice::prop32:
    return "prop32";
  case MethodChoice::all:
    return "all";
  }
  return "?";
}

struct RunConfig {
  int n = 1;
  ComplexText m{"1.2", "0.4"};
  unsigned precision_bits = kDefaultPrecisionBits;
  std::optional<std::size_t> root_index; // default: nondegenerate root with largest |Im s|
  MethodChoice method = MethodChoice::all;
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> division_tolerance;
  // fox method only
  bool three_gen = false;
  std::optional<std::string> remove_generator;
  // verify only
  int n_lo = 1, n_hi = 5;
  std::vector<ComplexText> m_values;
  std::optional<std::string> perturb_s;

  void validate() const {
    if (n < 1 || n_lo < 1 || n_hi < n_lo)
      throw UsageError("n must be >= 1 (and A <= B for --n-range)");
    if (precision_bits < 64 || precision_bits > 4096)
      throw UsageError("--precision-bits must lie in [64, 4096]");
    PrecisionScope scope(precision_bits);
    if (m.value().is_zero())
      throw UsageError("m must be nonzero");
    for (const auto &mv : m_values)
      if (mv.value().is_zero())
        throw UsageError("m must be nonzero");
  }
};

/// TALEX_PRECISION_BITS, when set and valid, replaces the built-in default.
inline unsigned default_precision_from_env() {
  if (const char *env = std::getenv("TALEX_PRECISION_BITS")) {
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 64 && v <= 4096)
      return static_cast<unsigned>(v);
  }
  return kDefaultPrecisionBits;
}

} // namespace talex::cli
