#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "lmg_otto/errors.hpp"
#include "lmg_otto/spectrum.hpp"

namespace lmg_otto {

enum class CrossingAxis { field, coupling };

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct CrossingReport {
  std::pair<int, int> pair;
  double location = 0.0;
  Bracket bracket;
  double residual = 0.0;  // E_m - E_n at location
};

struct CrossingOptions {
  int prescan_points = 200;
  double tolerance = 1e-10;
};

inline LmgParams with_axis_value(LmgParams p, CrossingAxis axis, double value) {
  if (axis == CrossingAxis::field) {
    p.h = value;
  } else {
    p.J = value;
  }
  return p;
}

// First sign change of E_m - E_n along the chosen axis, refined by bisection.
inline std::optional<CrossingReport> find_level_crossing(const LmgParams& base,
                                                         CrossingAxis axis,
                                                         std::pair<int, int> pair,
                                                         Bracket bracket,
                                                         const CrossingOptions& opts = {}) {
  const std::size_t m = label_index(pair.first);
  const std::size_t n = label_index(pair.second);
  if (m == n) {
    throw Error(ErrorKind::invalid_parameter, "crossing pair labels must differ");
  }
  if (!(bracket.lo < bracket.hi)) {
    throw Error(ErrorKind::invalid_bracket, "crossing bracket must satisfy lo < hi");
  }
  const LmgParams lo_params = with_axis_value(base, axis, bracket.lo);
  const LmgParams hi_params = with_axis_value(base, axis, bracket.hi);
  if (!is_valid(lo_params) || !is_valid(hi_params)) {
    throw Error(ErrorKind::invalid_bracket,
                "crossing bracket endpoint is not a valid parameter set: " +
                    describe(lo_params) + " .. " + describe(hi_params));
  }

  auto gap = [&](double x) {
    const Spectrum s = lmg_spectrum(with_axis_value(base, axis, x));
    return s.energies[m] - s.energies[n];
  };

  // Exact zeros are skipped so that a touch without a sign change (such as
  // the gamma = 0 degeneracy at h = 0) is not reported.
  const int points = std::max(opts.prescan_points, 2);
  const double width = bracket.hi - bracket.lo;
  std::optional<std::pair<double, double>> last;  // last sample with nonzero gap
  for (int k = 0; k < points; ++k) {
    const double x = (k == points - 1) ? bracket.hi
                                       : bracket.lo + width * static_cast<double>(k) /
                                                          static_cast<double>(points - 1);
    const double f = gap(x);
    if (f == 0.0) continue;
    if (last && (last->second < 0.0) != (f < 0.0)) {
      double a = last->first;
      double b = x;
      const bool a_negative = last->second < 0.0;
      while (b - a > opts.tolerance) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        const double fm = gap(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if ((fm < 0.0) == a_negative) {
          a = mid;
        } else {
          b = mid;
        }
      }
      const double loc = 0.5 * (a + b);
      return CrossingReport{pair, loc, bracket, gap(loc)};
    }
    last = std::pair{x, f};
  }
  return std::nullopt;
}

}  // namespace lmg_otto
