// Command-line front end: spectra, single cycles, sweeps, figure presets and a
// self-check. Exit codes: 0 ok, 2 usage/validation, 3 numeric, 4 I/O.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lmg_otto/cli/config.hpp"
#include "lmg_otto/cli/csv.hpp"
#include "lmg_otto/cli/plot_script.hpp"
#include "lmg_otto/cli/presets.hpp"
#include "lmg_otto/cli/selftest.hpp"
#include "lmg_otto/lmg_otto.hpp"

namespace {

using namespace lmg_otto;
using namespace lmg_otto::cli;

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_numeric = 3;
constexpr int exit_io = 4;

struct FlagValues {
  std::map<std::string, std::string> values;
  std::string config_path;
};

void add_parameter_flags(CLI::App* cmd, FlagValues& flags) {
  for (std::string_view key : known_keys) {
    const std::string k(key);
    cmd->add_option_function<std::string>(
        "--" + k, [&flags, k](const std::string& v) { flags.values[k] = v; },
        "value for '" + k + "'");
  }
  cmd->add_option("--config", flags.config_path, "key=value file; flags take precedence");
}

RunConfig build_config(const FlagValues& flags) {
  RunConfig cfg;
  for (const auto& [k, v] : flags.values) cfg.set(k, v);
  if (!flags.config_path.empty()) cfg.merge_defaults_from(load_config_file(flags.config_path));
  return cfg;
}

// Writes to --out when given, stdout otherwise.
template <class Fn>
void with_output(const RunConfig& cfg, Fn&& write) {
  if (auto out = cfg.get("out")) {
    std::ofstream os(*out, std::ios::binary | std::ios::trunc);
    if (!os) throw Error(ErrorKind::io, "cannot write '" + *out + "'");
    write(os);
    os.flush();
    if (!os) throw Error(ErrorKind::io, "write failed for '" + *out + "'");
  } else {
    write(std::cout);
  }
}

int cmd_spectrum(const RunConfig& cfg) {
  const auto axis = config_axis(cfg);
  if (axis) {
    if (*axis != Axis::h && *axis != Axis::J) {
      throw Error(ErrorKind::usage, "key 'axis': spectrum sweeps take 'h' or 'J'");
    }
    const auto range_text = cfg.get("range");
    if (!range_text) throw Error(ErrorKind::usage, "missing required key 'range'");
    LevelPanel panel;
    panel.axis = *axis == Axis::h ? CrossingAxis::field : CrossingAxis::coupling;
    panel.base = {*axis == Axis::J ? 0.0 : cfg.number("J"), cfg.number_or("gamma", 0.0),
                  *axis == Axis::h ? 0.0 : cfg.number("h")};
    panel.range = parse_range(*range_text);
    const auto rows = level_rows(panel, steps_from_config(cfg, default_steps));
    with_output(cfg, [&](std::ostream& os) {
      write_levels_csv(os, std::string(to_string(*axis)), rows);
    });
    return exit_ok;
  }
  const LmgParams p{cfg.number("J"), cfg.number_or("gamma", 0.0), cfg.number("h")};
  const Spectrum s = lmg_spectrum(p);
  with_output(cfg, [&](std::ostream& os) {
    os << "kappa=" << format_number(s.kappa) << '\n';
    for (int n = 1; n <= 4; ++n) {
      const Vec4& v = s.vector(n);
      os << "E" << n << '=' << format_number(s.energy(n)) << " psi" << n << "=("
         << format_number(v[0]) << ',' << format_number(v[1]) << ',' << format_number(v[2])
         << ',' << format_number(v[3]) << ")\n";
    }
  });
  return exit_ok;
}

int cmd_cycle(const RunConfig& cfg) {
  const AdiabaticProtocol protocol = protocol_from_config(cfg);
  const CycleResult r = run_protocol(protocol, baths_from_config(cfg));
  with_output(cfg, [&](std::ostream& os) {
    os << "W=" << format_number(r.work) << " Q1=" << format_number(r.q_hot)
       << " Q2=" << format_number(r.q_cold)
       << " eta=" << (r.efficiency ? format_number(*r.efficiency) : std::string("n/a"))
       << " eta_c=" << format_number(r.carnot) << " regime=" << to_string(r.regime) << '\n';
  });
  return exit_ok;
}

int cmd_sweep(const RunConfig& cfg) {
  const auto axis = config_axis(cfg);
  if (!axis) throw Error(ErrorKind::usage, "missing required key 'axis'");
  const auto range_text = cfg.get("range");
  if (!range_text) throw Error(ErrorKind::usage, "missing required key 'range'");
  SweepSpec spec{protocol_from_config(cfg), *axis, parse_range(*range_text),
                 steps_from_config(cfg, default_steps), baths_from_config(cfg)};
  const SweepResult result = sweep1d(spec, Execution::parallel);
  with_output(cfg, [&](std::ostream& os) { write_cycle_csv(os, result); });
  return exit_ok;
}

int cmd_figure(const std::string& name, const RunConfig& cfg) {
  const std::filesystem::path dir = cfg.get("out").value_or(".");
  const Manifest m = run_figure_preset(name, dir);
  const auto script = dir / (name + ".gp");
  emit_plot_script(m, script);
  for (const auto& e : m.entries) std::cout << (dir / e.file).string() << '\n';
  std::cout << (dir / (name + "_manifest.txt")).string() << '\n' << script.string() << '\n';
  return exit_ok;
}

int exit_code_for(const Error& e) {
  switch (category(e.kind())) {
    case ErrorCategory::usage: return exit_usage;
    case ErrorCategory::io: return exit_io;
    case ErrorCategory::numeric: return exit_numeric;
  }
  return exit_numeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-spin LMG quantum Otto engine simulator"};
  app.require_subcommand(1);
  // -h would collide with the field flag --h
  app.set_help_flag("--help", "print this help message and exit");

  FlagValues flags;
  auto* spectrum = app.add_subcommand("spectrum", "closed-form levels at one point or along h/J");
  auto* cycle = app.add_subcommand("cycle", "one Otto cycle for --case i|ii|iii");
  auto* sweep = app.add_subcommand("sweep", "cycle sweep along --axis over --range (CSV)");
  auto* figure = app.add_subcommand("figure", "regenerate a figure preset (fig1..fig7)");
  auto* selftest = app.add_subcommand("selftest", "oracle-equivalence and identity checks");
  for (auto* cmd : {spectrum, cycle, sweep, figure}) add_parameter_flags(cmd, flags);
  std::string preset;
  figure->add_option("name", preset, "preset name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (selftest->parsed()) {
      const SelftestReport r = run_selftest(std::cout);
      std::cout << r.passed << " passed, " << r.failed << " failed\n";
      return r.failed == 0 ? exit_ok : exit_numeric;
    }
    const RunConfig cfg = build_config(flags);
    if (spectrum->parsed()) return cmd_spectrum(cfg);
    if (cycle->parsed()) return cmd_cycle(cfg);
    if (sweep->parsed()) return cmd_sweep(cfg);
    if (figure->parsed()) return cmd_figure(preset, cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_numeric;
  }
  return exit_usage;
}
