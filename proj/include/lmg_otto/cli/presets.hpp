#pragma once

// Figure presets. Each preset regenerates one published figure as CSV files
// and returns a manifest describing what was written.
//
//   fig1  case (i):  W, eta vs J          (T1=1, T2=0.5, h1=0.5, h2=0.25)
//   fig2  levels vs h                     (J=2, gamma=0 and 0.4)
//   fig3  case (i):  W, eta vs h2 > h1    (T1=0.15, T2=0.1, h1=0.1, J=2)
//   fig4  case (ii): W, eta vs h          (T1=1, T2=0.5, J1=2, J2=1)
//   fig5  case (ii): W, eta vs J2 > J1    (T1=0.15, T2=0.1, h=1, J1=1)
//   fig6  levels vs J                     (gamma=0.4, h=0 and 1)
//   fig7  case (iii): W/w_q vs r          (T1=1, T2=0.5, h1=0.5, h2=0.3)
//
// Axis extents are not printed with the figures; the ranges below contain
// every visible maximum and are recorded in the manifest.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lmg_otto/cli/csv.hpp"
#include "lmg_otto/crossing.hpp"
#include "lmg_otto/errors.hpp"
#include "lmg_otto/protocols.hpp"
#include "lmg_otto/sweep.hpp"

namespace lmg_otto::cli {

inline constexpr int default_steps = 401;
inline constexpr int inset_gamma_steps = 81;

struct CurveSet {
  AdiabaticProtocol base;
  Axis axis = Axis::J;
  Interval range;
  std::vector<double> gammas;
  bool work_ratio = false;  // add a W/w_q column (proportional protocol)
};

struct LevelPanel {
  std::string label;
  LmgParams base;
  CrossingAxis axis = CrossingAxis::field;
  Interval range;
};

struct InsetSpec {
  Axis axis = Axis::J;
  Interval range;
};

struct FigurePreset {
  std::string name;
  BathPair baths;
  std::optional<CurveSet> curves;
  std::vector<LevelPanel> levels;
  std::optional<InsetSpec> inset;
};

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig1", "fig2", "fig3", "fig4",
                                                 "fig5", "fig6", "fig7"};
  return names;
}

inline FigurePreset figure_preset(const std::string& name) {
  FigurePreset p;
  p.name = name;
  if (name == "fig1") {
    p.baths = {1.0, 0.5};
    p.curves = CurveSet{FieldSweep{0.0, 0.0, 0.5, 0.25}, Axis::J, {0.0, 5.0},
                        {-1.0, -0.5, -0.25, 0.0, 0.25}};
    p.inset = InsetSpec{Axis::J, {0.0, 5.0}};
  } else if (name == "fig2") {
    p.levels = {{"a", {2.0, 0.0, 0.0}, CrossingAxis::field, {0.0, 2.0}},
                {"b", {2.0, 0.4, 0.0}, CrossingAxis::field, {0.0, 2.0}}};
  } else if (name == "fig3") {
    p.baths = {0.15, 0.1};
    p.curves = CurveSet{FieldSweep{2.0, 0.0, 0.1, 0.0}, Axis::h2, {0.0, 1.0, true},
                        {0.2, 0.4, 0.6, 0.8, 1.0}};
    p.inset = InsetSpec{Axis::h2, {0.1, 2.0, true}};
  } else if (name == "fig4") {
    p.baths = {1.0, 0.5};
    p.curves = CurveSet{CouplingSweep{0.0, 0.0, 2.0, 1.0}, Axis::h, {0.0, 3.0},
                        {-1.0, -0.5, -0.25, 0.0, 0.25}};
    p.inset = InsetSpec{Axis::h, {0.0, 3.0, true}};
  } else if (name == "fig5") {
    p.baths = {0.15, 0.1};
    p.curves = CurveSet{CouplingSweep{1.0, 0.0, 1.0, 0.0}, Axis::J2, {0.0, 4.0},
                        {0.0, 0.25, 0.5, 0.75, 1.0}};
    p.inset = InsetSpec{Axis::J2, {1.0, 4.0, true}};
  } else if (name == "fig6") {
    p.levels = {{"a", {0.0, 0.4, 0.0}, CrossingAxis::coupling, {0.0, 4.0}},
                {"b", {0.0, 0.4, 1.0}, CrossingAxis::coupling, {0.0, 4.0}}};
  } else if (name == "fig7") {
    p.baths = {1.0, 0.5};
    p.curves = CurveSet{Proportional{0.0, 0.0, 0.5, 0.3}, Axis::r, {0.0, 10.0},
                        {-1.0, -0.5, 0.0, 0.5, 1.0}, true};
    p.inset = InsetSpec{Axis::r, {0.0, 10.0}};
  } else {
    throw Error(ErrorKind::unknown_preset, "unknown figure preset '" + name + "'");
  }
  return p;
}

inline std::string describe(const Interval& iv) {
  return (iv.lower_open ? "(" : "[") + format_number(iv.lo) + ":" + format_number(iv.hi) + "]";
}

struct ManifestEntry {
  std::string kind;   // curve, inset, levels
  std::string panel;  // a, b (or empty)
  std::string file;   // relative to the output directory
  std::string label;
};

struct Manifest {
  std::string preset;
  std::string x_label;
  bool work_ratio = false;
  std::vector<std::string> notes;
  std::vector<ManifestEntry> entries;
};

inline std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot write '" + path.string() + "'");
  return out;
}

inline void finish_output(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorKind::io, "write failed for '" + path.string() + "'");
}

inline std::vector<LevelRow> level_rows(const LevelPanel& panel, int steps) {
  std::vector<LevelRow> rows;
  for (double x : grid_points(panel.range, steps)) {
    rows.push_back({x, lmg_spectrum(with_axis_value(panel.base, panel.axis, x)).energies});
  }
  return rows;
}

inline void write_manifest(const Manifest& m, const std::filesystem::path& dir) {
  const auto path = dir / (m.preset + "_manifest.txt");
  auto out = open_output(path);
  out << "# preset " << m.preset << '\n';
  for (const auto& n : m.notes) out << "# " << n << '\n';
  for (const auto& e : m.entries) {
    out << e.kind << '\t' << (e.panel.empty() ? "-" : e.panel) << '\t' << e.file << '\t'
        << e.label << '\n';
  }
  finish_output(out, path);
}

inline Manifest run_figure_preset(const std::string& name, const std::filesystem::path& dir,
                                  Execution exec = Execution::parallel) {
  const FigurePreset preset = figure_preset(name);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::io, "cannot create '" + dir.string() + "': " + ec.message());

  Manifest m;
  m.preset = name;

  for (const auto& panel : preset.levels) {
    const std::string axis_name = panel.axis == CrossingAxis::field ? "h" : "J";
    m.x_label = axis_name;
    const std::string file = name + "_levels_" + panel.label + ".csv";
    auto out = open_output(dir / file);
    write_levels_csv(out, axis_name, level_rows(panel, default_steps));
    finish_output(out, dir / file);
    std::ostringstream label;
    label << "J=" << format_number(panel.base.J) << " gamma=" << format_number(panel.base.gamma)
          << " h=" << format_number(panel.base.h);
    m.entries.push_back({"levels", panel.label, file, label.str()});
    m.notes.push_back("levels " + panel.label + ": " + label.str() + " " + axis_name + "=" +
                      describe(panel.range) + " steps=" + std::to_string(default_steps));
  }

  if (preset.curves) {
    const CurveSet& cs = *preset.curves;
    m.x_label = std::string(to_string(cs.axis));
    m.work_ratio = cs.work_ratio;
    m.notes.push_back("T1=" + format_number(preset.baths.t_hot) +
                      " T2=" + format_number(preset.baths.t_cold));
    m.notes.push_back("curves axis=" + m.x_label + " range=" + describe(cs.range) +
                      " steps=" + std::to_string(default_steps));
    std::optional<double> w_q;
    if (cs.work_ratio) {
      const auto& p = std::get<Proportional>(cs.base);
      w_q = kieu_qubit_cycle(p.h1, p.h2, preset.baths.t_hot, preset.baths.t_cold).work;
      m.notes.push_back("w_q=" + format_number(*w_q));
    }
    for (double g : cs.gammas) {
      SweepSpec spec{with_axis(cs.base, Axis::gamma, g), cs.axis, cs.range, default_steps,
                     preset.baths};
      const SweepResult result = sweep1d(spec, exec);
      const std::string file = name + "_curve_gamma_" + format_number(g) + ".csv";
      auto out = open_output(dir / file);
      if (w_q) {
        write_work_ratio_csv(out, result, *w_q);
      } else {
        write_cycle_csv(out, result);
      }
      finish_output(out, dir / file);
      m.entries.push_back({"curve", "", file, "gamma=" + format_number(g)});
    }

    if (preset.inset) {
      const InsetSpec& in = *preset.inset;
      SweepSpec inner{cs.base, in.axis, in.range, default_steps, preset.baths};
      const Interval gammas{-1.0, 1.0};
      MaximizeOptions opts;
      opts.execution = exec;
      const auto profile = gamma_profile(inner, gammas, inset_gamma_steps, opts);
      m.notes.push_back("inset inner axis=" + std::string(to_string(in.axis)) +
                        " range=" + describe(in.range) + " steps=" +
                        std::to_string(default_steps) + " gamma=" + describe(gammas) +
                        " gamma_steps=" + std::to_string(inset_gamma_steps));
      for (const char* panel : {"a", "b"}) {
        const std::string file = name + "_inset_" + panel + ".csv";
        auto out = open_output(dir / file);
        write_profile_csv(out, profile, w_q);
        finish_output(out, dir / file);
        m.entries.push_back({"inset", panel, file,
                             std::string(panel) == "a" ? "W_m" : "eta_m"});
      }
    }
  }

  write_manifest(m, dir);
  return m;
}

}  // namespace lmg_otto::cli
