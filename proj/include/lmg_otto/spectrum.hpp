#pragma once

// Two-spin Lipkin-Meshkov-Glick Hamiltonian and its closed-form eigensystem.
//
// Basis ordering is {|11>, |10>, |01>, |00>} with |1> the sigma_z = +1 state,
// so the field term -h S_z favours |11> at low energy.

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>

#include "lmg_otto/errors.hpp"

namespace lmg_otto {

using Vec4 = std::array<double, 4>;

namespace basis {
inline constexpr std::size_t up_up = 0;      // |11>
inline constexpr std::size_t up_down = 1;    // |10>
inline constexpr std::size_t down_up = 2;    // |01>
inline constexpr std::size_t down_down = 3;  // |00>
}  // namespace basis

struct LmgParams {
  double J = 0.0;
  double gamma = 0.0;
  double h = 0.0;

  friend bool operator==(const LmgParams&, const LmgParams&) = default;
};

inline std::string describe(const LmgParams& p) {
  std::ostringstream os;
  os << "(J=" << p.J << ", gamma=" << p.gamma << ", h=" << p.h << ")";
  return os.str();
}

inline void validate(const LmgParams& p) {
  if (!std::isfinite(p.J) || !std::isfinite(p.gamma) || !std::isfinite(p.h)) {
    throw Error(ErrorKind::invalid_parameter,
                "non-finite LMG parameter " + describe(p));
  }
  if (p.gamma < -1.0 || p.gamma > 1.0) {
    throw Error(ErrorKind::invalid_parameter,
                "anisotropy gamma must lie in [-1, 1], got " + describe(p));
  }
  if (p.h < 0.0) {
    throw Error(ErrorKind::invalid_parameter,
                "field h must be non-negative, got " + describe(p));
  }
}

inline bool is_valid(const LmgParams& p) noexcept {
  try {
    validate(p);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// Real symmetric 4x4 matrix, row-major.
struct SymMatrix4 {
  std::array<Vec4, 4> entries{};

  double operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }

  void set_symmetric(std::size_t i, std::size_t j, double value) {
    entries[i][j] = value;
    entries[j][i] = value;
  }

  double trace() const {
    return entries[0][0] + entries[1][1] + entries[2][2] + entries[3][3];
  }

  Vec4 apply(const Vec4& v) const {
    Vec4 out{};
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) out[i] += entries[i][j] * v[j];
    }
    return out;
  }
};

inline SymMatrix4 lmg_hamiltonian(const LmgParams& p) {
  validate(p);
  const double c = p.J * (1.0 + p.gamma) / 4.0;
  SymMatrix4 m;
  m.entries[basis::up_up][basis::up_up] = -p.h - c;
  m.entries[basis::up_down][basis::up_down] = -c;
  m.entries[basis::down_up][basis::down_up] = -c;
  m.entries[basis::down_down][basis::down_down] = p.h - c;
  m.set_symmetric(basis::up_down, basis::down_up, -p.J * (1.0 + p.gamma) / 4.0);
  m.set_symmetric(basis::up_up, basis::down_down, -p.J * (1.0 - p.gamma) / 4.0);
  return m;
}

// Levels carry structural labels, not energy order:
//   1 singlet, 2 symmetric triplet-0, 3/4 the lower/upper mixtures of |11>, |00>.
inline constexpr std::size_t level_count = 4;

inline std::size_t label_index(int label) {
  if (label < 1 || label > 4) {
    throw Error(ErrorKind::invalid_parameter,
                "level label must be in 1..4, got " + std::to_string(label));
  }
  return static_cast<std::size_t>(label - 1);
}

struct Spectrum {
  Vec4 energies{};
  std::array<Vec4, 4> vectors{};  // vectors[n] is psi_{n+1}
  double kappa = 0.0;
  // Block-mixing amplitudes; absent when J(gamma - 1) == 0.
  std::optional<double> a_minus;
  std::optional<double> a_plus;

  double energy(int label) const { return energies[label_index(label)]; }
  const Vec4& vector(int label) const { return vectors[label_index(label)]; }
};

inline Spectrum lmg_spectrum(const LmgParams& p) {
  validate(p);
  const double sum = p.J * (1.0 + p.gamma);
  // J(1 - gamma): the |11>,|00> block coupling times -4.
  const double mixing = p.J * (1.0 - p.gamma);
  const double kappa = std::sqrt(16.0 * p.h * p.h + mixing * mixing);

  Spectrum s;
  s.kappa = kappa;
  s.energies = {0.0, -0.5 * sum, -0.25 * (sum + kappa), -0.25 * (sum - kappa)};

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  s.vectors[0] = {0.0, inv_sqrt2, -inv_sqrt2, 0.0};
  s.vectors[1] = {0.0, inv_sqrt2, inv_sqrt2, 0.0};

  if (mixing == 0.0) {
    s.vectors[2] = {1.0, 0.0, 0.0, 0.0};
    s.vectors[3] = {0.0, 0.0, 0.0, 1.0};
    return s;
  }

  // A- = (4h + kappa) / J(1-gamma) and A+ = -J(1-gamma) / (kappa + 4h); both
  // are written without the kappa - 4h cancellation.
  s.a_minus = (4.0 * p.h + kappa) / mixing;
  s.a_plus = -mixing / (kappa + 4.0 * p.h);

  // psi_3 ~ (A-, 1) ~ sign(mixing) * (4h + kappa, mixing)
  {
    const double a = std::copysign(4.0 * p.h + kappa, mixing);
    const double b = std::abs(mixing);
    const double norm = std::hypot(a, b);
    s.vectors[2] = {a / norm, 0.0, 0.0, b / norm};
  }
  // psi_4 ~ (A+, 1) ~ (-mixing, kappa + 4h)
  {
    const double a = -mixing;
    const double b = kappa + 4.0 * p.h;
    const double norm = std::hypot(a, b);
    s.vectors[3] = {a / norm, 0.0, 0.0, b / norm};
  }
  return s;
}

struct QubitSpectrum {
  double ground = 0.0;
  double excited = 0.0;

  double gap() const { return excited - ground; }
  std::array<double, 2> energies() const { return {ground, excited}; }
};

// H_q = -(h/2) sigma_z.
inline QubitSpectrum qubit_spectrum(double h) {
  if (!std::isfinite(h) || h < 0.0) {
    throw Error(ErrorKind::invalid_parameter,
                "qubit field must be finite and non-negative, got " +
                    std::to_string(h));
  }
  return {-0.5 * h, 0.5 * h};
}

}  // namespace lmg_otto
