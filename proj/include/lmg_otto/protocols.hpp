#pragma once

// The three adiabatic-stroke protocols: field sweep at fixed coupling,
// coupling sweep at fixed field, and a proportional sweep with J/h fixed.
// The first endpoint (h1, J1) always thermalizes with the hot bath.

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <variant>

#include "lmg_otto/errors.hpp"
#include "lmg_otto/spectrum.hpp"
#include "lmg_otto/thermo.hpp"

namespace lmg_otto {

struct FieldSweep {
  double J = 0.0;
  double gamma = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
};

struct CouplingSweep {
  double h = 0.0;
  double gamma = 0.0;
  double J1 = 0.0;
  double J2 = 0.0;
};

struct Proportional {
  double r = 0.0;
  double gamma = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
};

using AdiabaticProtocol = std::variant<FieldSweep, CouplingSweep, Proportional>;

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

struct Endpoints {
  LmgParams hot;
  LmgParams cold;
};

inline Endpoints endpoints(const AdiabaticProtocol& protocol) {
  const Endpoints e = std::visit(
      overloaded{
          [](const FieldSweep& p) {
            return Endpoints{{p.J, p.gamma, p.h1}, {p.J, p.gamma, p.h2}};
          },
          [](const CouplingSweep& p) {
            return Endpoints{{p.J1, p.gamma, p.h}, {p.J2, p.gamma, p.h}};
          },
          [](const Proportional& p) {
            return Endpoints{{p.r * p.h1, p.gamma, p.h1}, {p.r * p.h2, p.gamma, p.h2}};
          },
      },
      protocol);
  validate(e.hot);
  validate(e.cold);
  return e;
}

inline CycleResult run_protocol(const AdiabaticProtocol& protocol, const BathPair& baths) {
  validate(baths);
  const Endpoints e = endpoints(protocol);
  return otto_cycle(lmg_spectrum(e.hot), baths.t_hot, lmg_spectrum(e.cold), baths.t_cold);
}

// Only where a closed form is known: uncoupled field sweep, zero-field coupling
// sweep, and every proportional sweep.
inline std::optional<double> closed_form_efficiency(const AdiabaticProtocol& protocol) {
  return std::visit(
      overloaded{
          [](const FieldSweep& p) -> std::optional<double> {
            if (p.J == 0.0 && p.h1 > p.h2 && p.h2 > 0.0) return 1.0 - p.h2 / p.h1;
            return std::nullopt;
          },
          [](const CouplingSweep& p) -> std::optional<double> {
            const double ratio = p.J2 / p.J1;
            if (p.h == 0.0 && p.J1 != 0.0 && ratio > 0.0 && ratio < 1.0) return 1.0 - ratio;
            return std::nullopt;
          },
          [](const Proportional& p) -> std::optional<double> {
            if (p.h1 > p.h2 && p.h2 > 0.0) return 1.0 - p.h2 / p.h1;
            return std::nullopt;
          },
      },
      protocol);
}

struct GapRatio {
  double alpha = 1.0;
  double max_deviation = 0.0;
};

// All six pairwise gaps E_m - E_n at the hot endpoint against alpha times the
// cold-endpoint gaps. alpha is estimated from the widest gap; deviations are
// relative to the largest hot-endpoint energy scale.
inline GapRatio gap_ratio(const AdiabaticProtocol& protocol) {
  const auto* p = std::get_if<Proportional>(&protocol);
  if (p == nullptr) {
    throw Error(ErrorKind::variant_mismatch, "gap_ratio requires a proportional protocol");
  }
  if (!(p->h1 > 0.0) || !(p->h2 > 0.0)) {
    throw Error(ErrorKind::invalid_parameter, "gap_ratio requires h1 > 0 and h2 > 0");
  }
  const Endpoints e = endpoints(protocol);
  const Vec4 hot = lmg_spectrum(e.hot).energies;
  const Vec4 cold = lmg_spectrum(e.cold).energies;

  double widest_hot = 0.0;
  double widest_cold = 0.0;
  double scale = 0.0;
  for (std::size_t m = 0; m < 4; ++m) {
    scale = std::max(scale, std::abs(hot[m]));
    for (std::size_t n = m + 1; n < 4; ++n) {
      if (std::abs(hot[m] - hot[n]) > std::abs(widest_hot)) {
        widest_hot = hot[m] - hot[n];
        widest_cold = cold[m] - cold[n];
      }
    }
  }
  GapRatio g;
  g.alpha = widest_hot / widest_cold;
  for (std::size_t m = 0; m < 4; ++m) {
    for (std::size_t n = m + 1; n < 4; ++n) {
      const double dev = std::abs((hot[m] - hot[n]) - g.alpha * (cold[m] - cold[n])) / scale;
      g.max_deviation = std::max(g.max_deviation, dev);
    }
  }
  return g;
}

// W / w_q, with w_q the work of a single qubit driven between the same fields.
inline double work_ratio(const AdiabaticProtocol& protocol, const BathPair& baths) {
  const auto* p = std::get_if<Proportional>(&protocol);
  if (p == nullptr) {
    throw Error(ErrorKind::variant_mismatch, "work_ratio requires a proportional protocol");
  }
  const double w_q = kieu_qubit_cycle(p->h1, p->h2, baths.t_hot, baths.t_cold).work;
  if (w_q <= tol_zero) {
    throw Error(ErrorKind::baseline_zero,
                "single-qubit work is not positive; W/w_q is undefined");
  }
  return run_protocol(protocol, baths).work / w_q;
}

}  // namespace lmg_otto
