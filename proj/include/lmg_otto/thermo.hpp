#pragma once

// Gibbs states and quasi-static Otto cycle energetics for an n-level working
// substance. Populations are carried across the adiabatic strokes by level
// label, so energies must be passed in the same structural order at both ends.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "lmg_otto/errors.hpp"
#include "lmg_otto/spectrum.hpp"

namespace lmg_otto {

inline constexpr double tol_zero = 1e-12;

template <std::size_t N>
struct ThermalState {
  std::array<double, N> populations{};
  double partition = 1.0;  // sum of exp(-(E - shift) / T)
  double shift = 0.0;      // minimum energy
  double temperature = 1.0;

  double log_partition() const { return std::log(partition) - shift / temperature; }
};

inline void validate_temperature(double t) {
  if (!std::isfinite(t) || t <= 0.0) {
    throw Error(ErrorKind::invalid_temperature,
                "temperature must be finite and positive, got " + std::to_string(t));
  }
}

template <std::size_t N>
ThermalState<N> gibbs(const std::array<double, N>& energies, double temperature) {
  static_assert(N > 0);
  validate_temperature(temperature);
  for (double e : energies) {
    if (!std::isfinite(e)) {
      throw Error(ErrorKind::invalid_parameter, "gibbs: non-finite energy");
    }
  }
  ThermalState<N> state;
  state.temperature = temperature;
  state.shift = *std::min_element(energies.begin(), energies.end());
  double z = 0.0;
  for (std::size_t n = 0; n < N; ++n) {
    state.populations[n] = std::exp(-(energies[n] - state.shift) / temperature);
    z += state.populations[n];
  }
  for (double& p : state.populations) p /= z;
  state.partition = z;
  return state;
}

inline double internal_energy(std::span<const double> energies,
                              std::span<const double> populations) {
  if (energies.size() != populations.size()) {
    throw Error(ErrorKind::label_mismatch,
                "internal_energy: " + std::to_string(energies.size()) +
                    " energies vs " + std::to_string(populations.size()) +
                    " populations");
  }
  double u = 0.0;
  for (std::size_t n = 0; n < energies.size(); ++n) u += energies[n] * populations[n];
  return u;
}

struct BathPair {
  double t_hot = 1.0;
  double t_cold = 0.5;
};

inline void validate(const BathPair& b) {
  validate_temperature(b.t_hot);
  validate_temperature(b.t_cold);
  if (!(b.t_hot > b.t_cold)) {
    throw Error(ErrorKind::bath_order, "hot bath must be hotter than the cold bath, got T1=" +
                                           std::to_string(b.t_hot) +
                                           " T2=" + std::to_string(b.t_cold));
  }
}

inline double carnot_efficiency(double t_hot, double t_cold) {
  validate(BathPair{t_hot, t_cold});
  return 1.0 - t_cold / t_hot;
}

enum class Regime { engine, null, non_engine };

inline std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::engine:
      return "engine";
    case Regime::null:
      return "null";
    case Regime::non_engine:
      return "non-engine";
  }
  return "?";
}

inline Regime classify(double q_hot, double q_cold, double work) {
  if (work > tol_zero && q_hot > -q_cold && -q_cold > 0.0) return Regime::engine;
  if (std::abs(work) <= tol_zero) return Regime::null;
  return Regime::non_engine;
}

struct CycleResult {
  double q_hot = 0.0;
  double q_cold = 0.0;
  double work = 0.0;
  std::optional<double> efficiency;  // only for Regime::engine
  double carnot = 0.0;
  Regime regime = Regime::null;
};

// Q1 = sum E_n (p_n - p'_n), Q2 = sum E'_n (p'_n - p_n),
// W  = sum (E_n - E'_n)(p_n - p'_n).
template <std::size_t N>
CycleResult otto_cycle(const std::array<double, N>& hot_energies, double t_hot,
                       const std::array<double, N>& cold_energies, double t_cold) {
  const BathPair baths{t_hot, t_cold};
  validate(baths);
  const auto hot = gibbs(hot_energies, t_hot);
  const auto cold = gibbs(cold_energies, t_cold);

  // Work relative to the most populated label k. Its population change is
  // recovered from normalization, so a ground state near p = 1 at low
  // temperature does not swamp the small differences of the other labels.
  std::size_t k = 0;
  for (std::size_t n = 1; n < N; ++n) {
    if (hot.populations[n] + cold.populations[n] > hot.populations[k] + cold.populations[k]) k = n;
  }
  CycleResult r;
  for (std::size_t n = 0; n < N; ++n) {
    if (n == k) continue;
    const double dp = hot.populations[n] - cold.populations[n];
    const double gap_hot = hot_energies[n] - hot_energies[k];
    const double gap_cold = cold_energies[n] - cold_energies[k];
    r.q_hot += gap_hot * dp;
    r.q_cold -= gap_cold * dp;
    r.work += (gap_hot - gap_cold) * dp;
  }
  r.carnot = 1.0 - t_cold / t_hot;
  r.regime = classify(r.q_hot, r.q_cold, r.work);
  if (r.regime == Regime::engine) r.efficiency = r.work / r.q_hot;
  return r;
}

inline CycleResult otto_cycle(const Spectrum& hot, double t_hot, const Spectrum& cold,
                              double t_cold) {
  return otto_cycle(hot.energies, t_hot, cold.energies, t_cold);
}

inline CycleResult kieu_qubit_cycle(double h_hot, double h_cold, double t_hot,
                                    double t_cold) {
  if (!(h_hot > 0.0) || !(h_cold > 0.0) || !std::isfinite(h_hot) ||
      !std::isfinite(h_cold)) {
    throw Error(ErrorKind::invalid_parameter,
                "qubit cycle fields must be finite and positive, got h1=" +
                    std::to_string(h_hot) + " h2=" + std::to_string(h_cold));
  }
  return otto_cycle(qubit_spectrum(h_hot).energies(), t_hot,
                    qubit_spectrum(h_cold).energies(), t_cold);
}

// T1 > (h1/h2) T2, strictly.
inline bool kieu_pwc(double h_hot, double h_cold, double t_hot, double t_cold) {
  if (!(h_cold > 0.0) || !(h_hot >= 0.0) || !std::isfinite(h_hot) ||
      !std::isfinite(h_cold)) {
    throw Error(ErrorKind::invalid_parameter,
                "kieu_pwc requires h2 > 0 and h1 >= 0, got h1=" + std::to_string(h_hot) +
                    " h2=" + std::to_string(h_cold));
  }
  validate_temperature(t_hot);
  validate_temperature(t_cold);
  return t_hot > (h_hot / h_cold) * t_cold;
}

}  // namespace lmg_otto
