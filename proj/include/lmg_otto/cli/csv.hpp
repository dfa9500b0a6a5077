#pragma once

// Fixed CSV layouts. Numbers use 12 significant digits; eta is left empty for
// rows that are not engines.

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lmg_otto/spectrum.hpp"
#include "lmg_otto/sweep.hpp"

namespace lmg_otto::cli {

inline std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string format_optional(const std::optional<double>& x) {
  return x ? format_number(*x) : std::string{};
}

inline constexpr const char* cycle_header = "x,W,Q1,Q2,eta,eta_carnot,regime";
inline constexpr const char* profile_header = "gamma,W_m,eta_m";

inline std::string cycle_fields(const SweepRow& row) {
  if (!row.result) return format_number(row.x) + ",,,,,,error";
  const CycleResult& r = *row.result;
  return format_number(row.x) + "," + format_number(r.work) + "," + format_number(r.q_hot) +
         "," + format_number(r.q_cold) + "," + format_optional(r.efficiency) + "," +
         format_number(r.carnot) + "," + std::string(to_string(r.regime));
}

inline void write_cycle_csv(std::ostream& os, const SweepResult& result) {
  os << cycle_header << '\n';
  for (const auto& row : result.rows) os << cycle_fields(row) << '\n';
}

// Same as the cycle layout with a trailing W/w_q column.
inline void write_work_ratio_csv(std::ostream& os, const SweepResult& result, double w_q) {
  os << cycle_header << ",W_over_wq\n";
  for (const auto& row : result.rows) {
    os << cycle_fields(row) << ',';
    if (row.result) os << format_number(row.result->work / w_q);
    os << '\n';
  }
}

struct LevelRow {
  double x = 0.0;
  Vec4 energies{};
};

// First column is named after the varied axis: "h" or "J".
inline void write_levels_csv(std::ostream& os, const std::string& axis_name,
                             const std::vector<LevelRow>& rows) {
  os << axis_name << ",E1,E2,E3,E4\n";
  for (const auto& row : rows) {
    os << format_number(row.x);
    for (double e : row.energies) os << ',' << format_number(e);
    os << '\n';
  }
}

inline std::optional<double> profile_value(const std::optional<MaxReport>& m) {
  return m ? std::optional<double>(m->value) : std::nullopt;
}

inline void write_profile_csv(std::ostream& os, const std::vector<GammaProfileRow>& rows,
                              std::optional<double> w_q = std::nullopt) {
  os << profile_header;
  if (w_q) os << ",W_m_over_wq";
  os << '\n';
  for (const auto& row : rows) {
    os << format_number(row.gamma) << ',' << format_optional(profile_value(row.work)) << ','
       << format_optional(profile_value(row.efficiency));
    if (w_q) {
      os << ',';
      if (row.work) os << format_number(row.work->value / *w_q);
    }
    os << '\n';
  }
}

}  // namespace lmg_otto::cli
