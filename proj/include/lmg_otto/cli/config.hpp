#pragma once

// Run configuration from command-line flags and key=value files. Flags
// override file entries; unknown keys are rejected by name.

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lmg_otto/errors.hpp"
#include "lmg_otto/protocols.hpp"
#include "lmg_otto/sweep.hpp"

namespace lmg_otto::cli {

inline constexpr std::array<std::string_view, 15> known_keys = {
    "case", "J", "J1", "J2", "h", "h1", "h2", "gamma", "r",
    "T1",   "T2", "axis", "range", "steps", "out"};

inline bool is_known_key(std::string_view key) {
  return std::find(known_keys.begin(), known_keys.end(), key) != known_keys.end();
}

class RunConfig {
 public:
  void set(const std::string& key, const std::string& value) {
    if (!is_known_key(key)) throw Error(ErrorKind::usage, "unknown key '" + key + "'");
    values_[key] = value;
  }

  // Entries already present win, so load files after applying flags.
  void merge_defaults_from(const RunConfig& other) {
    for (const auto& [k, v] : other.values_) values_.try_emplace(k, v);
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::optional<std::string> get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  double number(const std::string& key) const {
    auto v = get(key);
    if (!v) throw Error(ErrorKind::usage, "missing required key '" + key + "'");
    return parse_number(key, *v);
  }

  double number_or(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }

  static double parse_number(const std::string& key, const std::string& text) {
    double out = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) {
      throw Error(ErrorKind::usage, "key '" + key + "': cannot parse number '" + text + "'");
    }
    return out;
  }

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

inline RunConfig parse_config_text(std::istream& in, const std::string& origin) {
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::usage,
                  origin + ":" + std::to_string(lineno) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    try {
      cfg.set(key, trim(line.substr(eq + 1)));
    } catch (const Error& e) {
      throw Error(e.kind(), origin + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cfg;
}

inline RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open config file '" + path + "'");
  return parse_config_text(in, path);
}

// "min:max"; a leading '(' marks an open lower bound, e.g. "(0:3".
inline Interval parse_range(const std::string& text) {
  std::string body = text;
  bool open = false;
  if (!body.empty() && body.front() == '(') {
    open = true;
    body.erase(0, 1);
  } else if (!body.empty() && body.front() == '[') {
    body.erase(0, 1);
  }
  if (!body.empty() && body.back() == ']') body.pop_back();
  const auto colon = body.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorKind::usage, "key 'range': expected min:max, got '" + text + "'");
  }
  Interval iv;
  iv.lo = RunConfig::parse_number("range", body.substr(0, colon));
  iv.hi = RunConfig::parse_number("range", body.substr(colon + 1));
  iv.lower_open = open;
  if (!(iv.lo < iv.hi)) {
    throw Error(ErrorKind::usage, "key 'range': min must be below max in '" + text + "'");
  }
  return iv;
}

inline std::optional<Axis> config_axis(const RunConfig& cfg) {
  auto name = cfg.get("axis");
  if (!name) return std::nullopt;
  auto axis = parse_axis(*name);
  if (!axis) throw Error(ErrorKind::usage, "key 'axis': unknown axis '" + *name + "'");
  return axis;
}

// Parameters that the sweep axis will overwrite may be omitted.
inline AdiabaticProtocol protocol_from_config(const RunConfig& cfg) {
  const auto axis = config_axis(cfg);
  auto value = [&](const std::string& key, std::optional<Axis> self) {
    if (axis && self && *axis == *self && !cfg.has(key)) return 0.0;
    return cfg.number(key);
  };
  const double gamma = cfg.number_or("gamma", 0.0);
  const auto c = cfg.get("case");
  if (!c) throw Error(ErrorKind::usage, "missing required key 'case'");
  if (*c == "i") {
    return FieldSweep{value("J", Axis::J), gamma, value("h1", Axis::h1), value("h2", Axis::h2)};
  }
  if (*c == "ii") {
    return CouplingSweep{value("h", Axis::h), gamma, value("J1", Axis::J1),
                         value("J2", Axis::J2)};
  }
  if (*c == "iii") {
    return Proportional{value("r", Axis::r), gamma, value("h1", Axis::h1),
                        value("h2", Axis::h2)};
  }
  throw Error(ErrorKind::usage, "key 'case': expected i, ii or iii, got '" + *c + "'");
}

inline BathPair baths_from_config(const RunConfig& cfg) {
  BathPair b{cfg.number("T1"), cfg.number("T2")};
  validate(b);
  return b;
}

inline int steps_from_config(const RunConfig& cfg, int fallback) {
  auto s = cfg.get("steps");
  if (!s) return fallback;
  int out = 0;
  auto [ptr, ec] = std::from_chars(s->data(), s->data() + s->size(), out);
  if (ec != std::errc{} || ptr != s->data() + s->size() || out < 2) {
    throw Error(ErrorKind::usage, "key 'steps': expected an integer >= 2, got '" + *s + "'");
  }
  return out;
}

}  // namespace lmg_otto::cli
