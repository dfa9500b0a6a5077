#pragma once

// Quick self-check: closed form against the Jacobi oracle, plus the trace,
// orthonormality, first-law and Carnot identities on random parameters.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>

#include "lmg_otto/jacobi.hpp"
#include "lmg_otto/protocols.hpp"
#include "lmg_otto/spectrum.hpp"
#include "lmg_otto/thermo.hpp"

namespace lmg_otto::cli {

struct SelftestReport {
  int passed = 0;
  int failed = 0;
};

inline SelftestReport run_selftest(std::ostream& log, int samples = 2000,
                                   std::uint64_t seed = 20151) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coupling(-5.0, 5.0);
  std::uniform_real_distribution<double> anisotropy(-1.0, 1.0);
  std::uniform_real_distribution<double> field(0.0, 3.0);
  std::uniform_real_distribution<double> temp(0.05, 3.0);

  double oracle_err = 0.0, residual = 0.0, trace_err = 0.0, ortho_err = 0.0;
  double first_law = 0.0, carnot_excess = -1.0;
  for (int i = 0; i < samples; ++i) {
    const LmgParams p{coupling(rng), anisotropy(rng), field(rng)};
    const Spectrum s = lmg_spectrum(p);
    const SymMatrix4 m = lmg_hamiltonian(p);
    const auto oracle = diagonalize_oracle(m);
    Vec4 sorted = s.energies;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < 4; ++k) {
      oracle_err = std::max(oracle_err, std::abs(sorted[k] - oracle.values[k]));
      const Vec4 hv = m.apply(s.vectors[k]);
      for (std::size_t r = 0; r < 4; ++r) {
        residual = std::max(residual, std::abs(hv[r] - s.energies[k] * s.vectors[k][r]));
      }
      for (std::size_t l = 0; l < 4; ++l) {
        double dot = 0.0;
        for (std::size_t r = 0; r < 4; ++r) dot += s.vectors[k][r] * s.vectors[l][r];
        ortho_err = std::max(ortho_err, std::abs(dot - (k == l ? 1.0 : 0.0)));
      }
    }
    const double sum = s.energies[0] + s.energies[1] + s.energies[2] + s.energies[3];
    trace_err = std::max(trace_err, std::abs(sum + p.J * (1.0 + p.gamma)));

    double t1 = temp(rng), t2 = temp(rng);
    if (t1 == t2) continue;
    if (t1 < t2) std::swap(t1, t2);
    const LmgParams q{coupling(rng), p.gamma, field(rng)};
    const CycleResult c = otto_cycle(s, t1, lmg_spectrum(q), t2);
    first_law = std::max(first_law, std::abs(c.work - (c.q_hot + c.q_cold)));
    if (c.efficiency) carnot_excess = std::max(carnot_excess, *c.efficiency - c.carnot);
  }

  SelftestReport report;
  auto check = [&](const std::string& name, bool ok, double value) {
    log << (ok ? "PASS " : "FAIL ") << name << " (" << value << ")\n";
    (ok ? report.passed : report.failed) += 1;
  };
  check("closed form vs jacobi oracle <= 1e-10", oracle_err <= 1e-10, oracle_err);
  check("eigen-residual <= 1e-10", residual <= 1e-10, residual);
  check("trace identity <= 1e-12", trace_err <= 1e-12, trace_err);
  check("orthonormality <= 1e-12", ortho_err <= 1e-12, ortho_err);
  check("first law W = Q1 + Q2 <= 1e-12", first_law <= 1e-12, first_law);
  check("carnot bound eta <= eta_c + 1e-9", carnot_excess <= 1e-9, carnot_excess);

  const double w_q = kieu_qubit_cycle(0.5, 0.3, 1.0, 0.5).work;
  check("qubit baseline w_q = 4.6e-3 +- 5e-5", std::abs(w_q - 4.6e-3) <= 5e-5, w_q);
  return report;
}

}  // namespace lmg_otto::cli
