#pragma once

// gnuplot script that renders a preset's CSV files to PNG images. Files are
// referenced relative to the script's directory.

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "lmg_otto/cli/presets.hpp"
#include "lmg_otto/errors.hpp"

namespace lmg_otto::cli {

namespace detail {

inline std::vector<const ManifestEntry*> entries_of(const Manifest& m, const std::string& kind) {
  std::vector<const ManifestEntry*> out;
  for (const auto& e : m.entries) {
    if (e.kind == kind) out.push_back(&e);
  }
  return out;
}

inline void plot_block(std::ostream& os, const std::string& image, const std::string& xlabel,
                       const std::string& ylabel,
                       const std::vector<std::pair<std::string, std::string>>& series) {
  os << "set output '" << image << "'\n"
     << "set xlabel '" << xlabel << "'\n"
     << "set ylabel '" << ylabel << "'\n"
     << "plot ";
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (i) os << ", \\\n     ";
    os << series[i].first << " with lines title '" << series[i].second << "'";
  }
  os << "\n\n";
}

inline std::string source(const std::string& file, int column) {
  return "'" + file + "' using 1:" + std::to_string(column);
}

}  // namespace detail

// Returns the number of plot blocks (panels plus insets) written.
inline int emit_plot_script(const Manifest& m, const std::filesystem::path& script) {
  if (m.entries.empty()) {
    throw Error(ErrorKind::usage, "cannot emit a plot script for an empty manifest");
  }
  std::ofstream os(script, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(ErrorKind::io, "cannot write '" + script.string() + "'");

  os << "# gnuplot script for preset " << m.preset << "\n"
     << "set terminal pngcairo size 800,600\n"
     << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set key top right\n\n";

  int blocks = 0;
  using Series = std::vector<std::pair<std::string, std::string>>;

  for (const auto* e : detail::entries_of(m, "levels")) {
    Series s;
    for (int c = 2; c <= 5; ++c) s.emplace_back(detail::source(e->file, c), "E" + std::to_string(c - 1));
    detail::plot_block(os, m.preset + "_" + e->panel + ".png", m.x_label, "E_n (" + e->label + ")", s);
    ++blocks;
  }

  const auto curves = detail::entries_of(m, "curve");
  if (!curves.empty()) {
    auto panel = [&](const std::string& suffix, const std::string& ylabel, int column) {
      Series s;
      for (const auto* e : curves) s.emplace_back(detail::source(e->file, column), e->label);
      detail::plot_block(os, m.preset + "_" + suffix + ".png", m.x_label, ylabel, s);
      ++blocks;
    };
    if (m.work_ratio) {
      panel("ratio", "W/w_q", 8);
    } else {
      panel("a", "W", 2);
      panel("b", "eta", 5);
    }
  }

  for (const auto* e : detail::entries_of(m, "inset")) {
    int column = e->panel == "a" ? 2 : 3;
    std::string ylabel = e->label;
    if (m.work_ratio && e->panel == "a") {
      column = 4;
      ylabel = "W_m/w_q";
    }
    detail::plot_block(os, m.preset + "_inset_" + e->panel + ".png", "gamma", ylabel,
                       {{detail::source(e->file, column), ylabel}});
    ++blocks;
  }

  os.flush();
  if (!os) throw Error(ErrorKind::io, "write failed for '" + script.string() + "'");
  return blocks;
}

}  // namespace lmg_otto::cli
