// Copyright 2026 The levyfft Authors.
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

#pragma once

// Run configuration for the command-line front end: model specs, list/range
// parsing, and the flat key = value config file (schema 1).

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "levyfft/models.hpp"
#include "levyfft/nufft.hpp"
#include "levyfft/special.hpp"

namespace levyfft::cli {

/// Bad user input: reported before any computation, exit status 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kConfigSchema = 1;
inline constexpr int kMinExponent = 7;
inline constexpr int kMaxExponent = 14;

struct RunConfig {
  std::string model = "vg";
  std::vector<double> t_values{1.0};
  std::vector<int> exponents{11};
  double x_l = 2.0;
  double x_u = 5.0;
  std::optional<double> d;  // unset: the model's strip half-width
  double b = 20.0;
  double epsilon = 1e-10;
  std::string output_dir = ".";
  int reps = 5;
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline double to_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw ConfigError(what + ": '" + s + "' is not a number");
  }
  return v;
}

inline int to_int(const std::string& s, const std::string& what) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw ConfigError(what + ": '" + s + "' is not an integer");
  }
  return v;
}

}  // namespace detail

/// "1,2,3" -> {1, 2, 3}. An empty string gives an empty list.
inline std::vector<double> parse_t_list(const std::string& text) {
  std::vector<double> out;
  if (detail::trim(text).empty()) return out;
  for (const auto& item : detail::split(text, ',')) out.push_back(detail::to_double(item, "t"));
  return out;
}

/// "7..12", "7-12", "11" or "7,9,11".
inline std::vector<int> parse_i_range(const std::string& text) {
  const std::string s = detail::trim(text);
  std::vector<int> out;
  if (s.empty()) return out;
  auto range = [&](std::size_t pos, std::size_t width) {
    const int lo = detail::to_int(detail::trim(s.substr(0, pos)), "i-range");
    const int hi = detail::to_int(detail::trim(s.substr(pos + width)), "i-range");
    if (hi < lo) throw ConfigError("i-range: '" + s + "' is empty");
    for (int i = lo; i <= hi; ++i) out.push_back(i);
  };
  if (const auto dots = s.find(".."); dots != std::string::npos) {
    range(dots, 2);
  } else if (const auto dash = s.find('-'); dash != std::string::npos && dash > 0) {
    range(dash, 1);
  } else {
    for (const auto& item : detail::split(s, ',')) out.push_back(detail::to_int(item, "i-range"));
  }
  return out;
}

/// "vg", "nig", or "custom:gamma=G,kind=exp|gauss|yk1,scale=S,weight=W" for
/// mu(y) = W f(y / S) with f(u) = e^{-u}, e^{-u^2} or u K_1(u) / pi.
/// Custom models carry no closed forms.
inline LevyModel parse_model(const std::string& spec) {
  if (spec == "vg") return vg_model();
  if (spec == "nig") return nig_model();
  constexpr std::string_view prefix = "custom:";
  if (spec.rfind(prefix, 0) != 0) {
    throw ConfigError("model: unknown model '" + spec + "' (expected vg, nig or custom:...)");
  }
  int gamma = 1;
  std::string kind = "exp";
  double scale = 1.0;
  double weight = 1.0;
  for (const auto& kv : detail::split(spec.substr(prefix.size()), ',')) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("model: expected key=value, got '" + kv + "'");
    const std::string key = detail::trim(kv.substr(0, eq));
    const std::string val = detail::trim(kv.substr(eq + 1));
    if (key == "gamma") {
      gamma = detail::to_int(val, "model gamma");
    } else if (key == "kind") {
      kind = val;
    } else if (key == "scale") {
      scale = detail::to_double(val, "model scale");
    } else if (key == "weight") {
      weight = detail::to_double(val, "model weight");
    } else {
      throw ConfigError("model: unknown custom key '" + key + "'");
    }
  }
  if (gamma != 1 && gamma != 2) throw ConfigError("model: gamma must be 1 or 2");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw ConfigError("model: scale must be positive");
  if (!(weight > 0.0) || !std::isfinite(weight)) throw ConfigError("model: weight must be positive");

  LevyModel m;
  m.name = "custom";
  m.gamma = gamma;
  m.i_offset = gamma + 1;
  m.strip_d = 1.0 / scale;
  if (kind == "exp") {
    m.mu = [=](double y) { return weight * vg_mu(y / scale); };
  } else if (kind == "gauss") {
    m.mu = [=](double y) {
      const double u = y / scale;
      return u > 40.0 ? 0.0 : weight * std::exp(-u * u);
    };
    m.strip_d = 1.0;
  } else if (kind == "yk1") {
    m.mu = [=](double y) { return weight * nig_mu(y / scale); };
  } else {
    throw ConfigError("model: unknown custom kind '" + kind + "' (exp, gauss, yk1)");
  }
  return m;
}

enum class Command { kSolve, kConverge, kBench, kSelftest };

/// Checks the configuration for `cmd`; throws ConfigError naming the bad field.
inline void validate(const RunConfig& c, Command cmd) {
  if (cmd == Command::kSelftest) return;
  (void)parse_model(c.model);
  if (c.t_values.empty()) throw ConfigError("t: at least one time is required");
  for (double t : c.t_values) {
    if (!(t > 0.0) || !std::isfinite(t)) throw ConfigError("t: times must be positive");
  }
  if (c.exponents.empty()) throw ConfigError("i-range: at least one exponent is required");
  for (int i : c.exponents) {
    if (i < kMinExponent || i > kMaxExponent) {
      throw ConfigError("i-range: exponent " + std::to_string(i) + " outside " +
                        std::to_string(kMinExponent) + ".." + std::to_string(kMaxExponent));
    }
  }
  if (cmd == Command::kConverge && c.exponents.size() < 3) {
    throw ConfigError("converge: needs at least 3 exponents to fit a rate");
  }
  if (!(c.x_l > 0.0) || !(c.x_u > c.x_l)) throw ConfigError("xl/xu: need 0 < xl < xu");
  if (c.x_l / c.x_u > 0.5) throw ConfigError("xl/xu: xl / xu must not exceed 1/2");
  if (c.d && !(*c.d > 0.0)) throw ConfigError("d: must be positive");
  if (!(c.epsilon > 0.0) || !(c.epsilon < 1.0)) throw ConfigError("eps: must lie in (0, 1)");
  if (!(c.b >= NufftParams::min_b(c.epsilon))) {
    throw ConfigError("b: must be at least -2 log(eps) / pi = " +
                      std::to_string(NufftParams::min_b(c.epsilon)));
  }
  if (c.reps < 1) throw ConfigError("reps: must be at least 1");
  if (c.output_dir.empty()) throw ConfigError("out: output directory must be non-empty");
}

/// Applies `key = value` lines to `c`. '#' starts a comment. The file must
/// declare `schema = 1`.
inline void apply_config_text(const std::string& text, RunConfig& c) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::optional<int> schema;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string val = detail::trim(line.substr(eq + 1));
    if (key == "schema") {
      schema = detail::to_int(val, "schema");
    } else if (key == "model") {
      c.model = val;
    } else if (key == "t") {
      c.t_values = parse_t_list(val);
    } else if (key == "i_range" || key == "i-range") {
      c.exponents = parse_i_range(val);
    } else if (key == "xl") {
      c.x_l = detail::to_double(val, key);
    } else if (key == "xu") {
      c.x_u = detail::to_double(val, key);
    } else if (key == "d") {
      c.d = detail::to_double(val, key);
    } else if (key == "b") {
      c.b = detail::to_double(val, key);
    } else if (key == "eps") {
      c.epsilon = detail::to_double(val, key);
    } else if (key == "out") {
      c.output_dir = val;
    } else if (key == "reps") {
      c.reps = detail::to_int(val, key);
    } else {
      throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (!schema) throw ConfigError("config: missing 'schema = " + std::to_string(kConfigSchema) + "'");
  if (*schema != kConfigSchema) {
    throw ConfigError("config: unsupported schema " + std::to_string(*schema));
  }
}

inline void apply_config_file(const std::string& path, RunConfig& c) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  apply_config_text(buf.str(), c);
}

}  // namespace levyfft::cli
