#pragma once

// One-dimensional scans over a single protocol parameter: raw sweeps, maxima
// of work or efficiency, gamma profiles of those maxima, and engine windows.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "lmg_otto/errors.hpp"
#include "lmg_otto/protocols.hpp"
#include "lmg_otto/thermo.hpp"

namespace lmg_otto {

enum class Axis { J, J1, J2, h, h1, h2, r, gamma };

inline std::string_view to_string(Axis a) {
  switch (a) {
    case Axis::J: return "J";
    case Axis::J1: return "J1";
    case Axis::J2: return "J2";
    case Axis::h: return "h";
    case Axis::h1: return "h1";
    case Axis::h2: return "h2";
    case Axis::r: return "r";
    case Axis::gamma: return "gamma";
  }
  return "?";
}

inline std::optional<Axis> parse_axis(std::string_view name) {
  for (Axis a : {Axis::J, Axis::J1, Axis::J2, Axis::h, Axis::h1, Axis::h2, Axis::r,
                 Axis::gamma}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

inline AdiabaticProtocol with_axis(AdiabaticProtocol protocol, Axis axis, double value) {
  auto mismatch = [axis]() {
    return Error(ErrorKind::variant_mismatch,
                 "axis '" + std::string(to_string(axis)) + "' does not apply to this protocol");
  };
  std::visit(overloaded{
                 [&](FieldSweep& p) {
                   switch (axis) {
                     case Axis::J: p.J = value; break;
                     case Axis::h1: p.h1 = value; break;
                     case Axis::h2: p.h2 = value; break;
                     case Axis::gamma: p.gamma = value; break;
                     default: throw mismatch();
                   }
                 },
                 [&](CouplingSweep& p) {
                   switch (axis) {
                     case Axis::h: p.h = value; break;
                     case Axis::J1: p.J1 = value; break;
                     case Axis::J2: p.J2 = value; break;
                     case Axis::gamma: p.gamma = value; break;
                     default: throw mismatch();
                   }
                 },
                 [&](Proportional& p) {
                   switch (axis) {
                     case Axis::r: p.r = value; break;
                     case Axis::h1: p.h1 = value; break;
                     case Axis::h2: p.h2 = value; break;
                     case Axis::gamma: p.gamma = value; break;
                     default: throw mismatch();
                   }
                 },
             },
             protocol);
  return protocol;
}

// [lo, hi], or (lo, hi] when lower_open. A half-open interval of n points
// drops lo and keeps the spacing (hi - lo) / n.
struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  bool lower_open = false;
};

inline std::vector<double> grid_points(const Interval& range, int steps) {
  if (steps < 2) {
    throw Error(ErrorKind::invalid_parameter, "sweep needs at least 2 steps");
  }
  if (!(range.lo < range.hi) || !std::isfinite(range.lo) || !std::isfinite(range.hi)) {
    throw Error(ErrorKind::invalid_parameter, "sweep range must satisfy min < max");
  }
  std::vector<double> xs(static_cast<std::size_t>(steps));
  const double width = range.hi - range.lo;
  const double denom = range.lower_open ? steps : steps - 1;
  const int offset = range.lower_open ? 1 : 0;
  for (int k = 0; k < steps; ++k) {
    xs[static_cast<std::size_t>(k)] =
        (k == steps - 1) ? range.hi : range.lo + width * (k + offset) / denom;
  }
  return xs;
}

struct SweepSpec {
  AdiabaticProtocol protocol;
  Axis axis = Axis::J;
  Interval range;
  int steps = 401;
  BathPair baths;
};

struct SweepRow {
  double x = 0.0;
  std::optional<CycleResult> result;
  std::string error;  // set when the point could not be evaluated
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

enum class Execution { sequential, parallel };

inline SweepRow evaluate_point(const SweepSpec& spec, double x) {
  SweepRow row;
  row.x = x;
  try {
    row.result = run_protocol(with_axis(spec.protocol, spec.axis, x), spec.baths);
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

inline SweepResult sweep1d(const SweepSpec& spec, Execution exec = Execution::sequential) {
  validate(spec.baths);
  // Throws early if the axis does not belong to the protocol.
  (void)with_axis(spec.protocol, spec.axis, spec.range.hi);
  const std::vector<double> xs = grid_points(spec.range, spec.steps);

  SweepResult out;
  out.rows.resize(xs.size());
  if (exec == Execution::sequential) {
    for (std::size_t i = 0; i < xs.size(); ++i) out.rows[i] = evaluate_point(spec, xs[i]);
    return out;
  }

  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, xs.size());
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < xs.size(); i += workers) {
          out.rows[i] = evaluate_point(spec, xs[i]);
        }
      });
    }
  }
  return out;
}

enum class Objective { work, efficiency };

inline std::string_view to_string(Objective o) {
  return o == Objective::work ? "work" : "efficiency";
}

// Objective value, or -inf for anything that is not an engine.
inline double objective_value(const SweepRow& row, Objective objective) {
  if (!row.result || row.result->regime != Regime::engine) {
    return -std::numeric_limits<double>::infinity();
  }
  return objective == Objective::work ? row.result->work : *row.result->efficiency;
}

struct MaxReport {
  Objective objective = Objective::work;
  double arg = 0.0;
  double value = 0.0;
  bool refined = false;
  bool on_range_boundary = false;  // best coarse point is the first or last grid point
};

struct MaximizeOptions {
  double width_tolerance = 1e-8;
  Execution execution = Execution::sequential;
};

inline MaxReport maximize(const SweepSpec& spec, Objective objective,
                          const MaximizeOptions& opts = {}) {
  const SweepResult coarse = sweep1d(spec, opts.execution);
  const auto& rows = coarse.rows;

  std::optional<std::size_t> best;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double v = objective_value(rows[i], objective);
    if (v > best_value) {  // strict: ties keep the smaller axis value
      best_value = v;
      best = i;
    }
  }
  if (!best) {
    throw Error(ErrorKind::no_engine_point,
                "no grid point operates as an engine; " + std::string(to_string(objective)) +
                    " maximum is undefined");
  }

  MaxReport report;
  report.objective = objective;
  report.arg = rows[*best].x;
  report.value = best_value;
  report.on_range_boundary = (*best == 0 || *best + 1 == rows.size());

  // Golden-section search on the bracketing triple around the best grid point.
  double a = (*best == 0) ? spec.range.lo : rows[*best - 1].x;
  double b = (*best + 1 == rows.size()) ? rows[*best].x : rows[*best + 1].x;
  if (b - a > opts.width_tolerance) {
    auto f = [&](double x) { return objective_value(evaluate_point(spec, x), objective); };
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > opts.width_tolerance) {
      if (fc >= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - inv_phi * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + inv_phi * (b - a);
        fd = f(d);
      }
    }
    const double x_star = fc >= fd ? c : d;
    const double f_star = std::max(fc, fd);
    if (f_star > report.value) {
      report.value = f_star;
      report.arg = x_star;
    }
    report.refined = true;
  }
  return report;
}

struct GammaProfileRow {
  double gamma = 0.0;
  std::optional<MaxReport> work;
  std::optional<MaxReport> efficiency;
};

// `inner` fixes the maximization axis and range; gamma is overwritten per row.
inline std::vector<GammaProfileRow> gamma_profile(const SweepSpec& inner,
                                                  const Interval& gamma_range,
                                                  int gamma_steps,
                                                  const MaximizeOptions& opts = {}) {
  if (inner.axis == Axis::gamma) {
    throw Error(ErrorKind::invalid_parameter, "gamma_profile inner axis cannot be gamma");
  }
  std::vector<GammaProfileRow> rows;
  for (double g : grid_points(gamma_range, gamma_steps)) {
    SweepSpec spec = inner;
    spec.protocol = with_axis(inner.protocol, Axis::gamma, g);
    GammaProfileRow row;
    row.gamma = g;
    for (Objective o : {Objective::work, Objective::efficiency}) {
      try {
        auto& slot = (o == Objective::work) ? row.work : row.efficiency;
        slot = maximize(spec, o, opts);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::no_engine_point) throw;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

// Midpoint between the last gamma with an engine point and the following
// gamma, when every gamma after it has none.
inline std::optional<double> engine_cutoff(const std::vector<GammaProfileRow>& profile) {
  for (std::size_t i = profile.size(); i-- > 0;) {
    if (profile[i].work) {
      if (i + 1 == profile.size()) return std::nullopt;
      return 0.5 * (profile[i].gamma + profile[i + 1].gamma);
    }
  }
  return std::nullopt;
}

struct WindowInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_clipped = false;  // lo is the range end, not a located transition
  bool hi_clipped = false;
};

struct Window {
  std::vector<WindowInterval> intervals;
  bool empty() const { return intervals.empty(); }
};

struct WindowOptions {
  double resolution = 1e-8;
};

inline Window operating_window(const SweepSpec& spec, const WindowOptions& opts = {}) {
  auto is_engine = [&](double x) {
    const SweepRow row = evaluate_point(spec, x);
    return row.result && row.result->regime == Regime::engine;
  };
  // Bisect between a point with state `left` and one with the opposite state.
  auto locate = [&](double a, double b, bool left) {
    while (b - a > opts.resolution) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (is_engine(mid) == left) {
        a = mid;
      } else {
        b = mid;
      }
    }
    return 0.5 * (a + b);
  };

  const SweepResult coarse = sweep1d(spec);
  std::vector<std::pair<double, bool>> samples;
  samples.reserve(coarse.rows.size() + 1);
  // The excluded lower bound still brackets a transition into the first point.
  if (spec.range.lower_open) samples.emplace_back(spec.range.lo, is_engine(spec.range.lo));
  for (const auto& row : coarse.rows) {
    samples.emplace_back(row.x, row.result && row.result->regime == Regime::engine);
  }

  Window w;
  std::optional<WindowInterval> open;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto [x, engine] = samples[i];
    if (engine && !open) {
      WindowInterval iv;
      if (i == 0) {
        iv.lo = x;
        iv.lo_clipped = true;
      } else {
        iv.lo = locate(samples[i - 1].first, x, false);
      }
      open = iv;
    } else if (!engine && open) {
      open->hi = locate(samples[i - 1].first, x, true);
      w.intervals.push_back(*open);
      open.reset();
    }
  }
  if (open) {
    open->hi = samples.back().first;
    open->hi_clipped = true;
    w.intervals.push_back(*open);
  }
  return w;
}

}  // namespace lmg_otto
