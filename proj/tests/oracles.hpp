#pragma once

// Independent reference computations for the tests. Nothing here calls the
// closed-form spectrum or the library's Gibbs and cycle code.

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "lmg_otto/jacobi.hpp"

namespace oracle {

using M4 = lmg_otto::Matrix<4>;

inline M4 kron(const std::array<std::array<double, 2>, 2>& a,
               const std::array<std::array<double, 2>, 2>& b) {
  M4 out{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
  return out;
}

// H = -J/4 (sx sx + gamma sy sy) - h/2 (sz 1 + 1 sz) - J(1+gamma)/4, basis
// |11>,|10>,|01>,|00> with |1> the sz = +1 state. sy sy is real.
inline M4 pauli_hamiltonian(double J, double gamma, double h) {
  const std::array<std::array<double, 2>, 2> sx{{{0, 1}, {1, 0}}};
  const std::array<std::array<double, 2>, 2> sz{{{1, 0}, {0, -1}}};
  const std::array<std::array<double, 2>, 2> id{{{1, 0}, {0, 1}}};
  // sy = [[0,-i],[i,0]]; sy (x) sy = -(i sy) (x) (i sy) with i sy = [[0,1],[-1,0]].
  const std::array<std::array<double, 2>, 2> isy{{{0, 1}, {-1, 0}}};
  const M4 xx = kron(sx, sx), yy = kron(isy, isy), z1 = kron(sz, id), z2 = kron(id, sz);
  M4 H{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      H[i][j] = -J / 4.0 * (xx[i][j] - gamma * yy[i][j]) - h / 2.0 * (z1[i][j] + z2[i][j]);
    }
    H[i][i] -= J * (1.0 + gamma) / 4.0;
  }
  return H;
}

template <std::size_t N>
std::array<long double, N> gibbs_direct(const std::array<double, N>& e, long double t) {
  std::array<long double, N> p{};
  long double z = 0;
  for (std::size_t n = 0; n < N; ++n) {
    p[n] = std::exp(-static_cast<long double>(e[n]) / t);
    z += p[n];
  }
  for (auto& x : p) x /= z;
  return p;
}

inline double trace_product(const M4& a, const M4& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) s += a[i][j] * b[j][i];
  return s;
}

inline M4 mixture(const std::array<std::array<double, 4>, 4>& vecs,
                  const std::array<long double, 4>& p) {
  M4 rho{};
  for (std::size_t n = 0; n < 4; ++n)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        rho[i][j] += static_cast<double>(p[n]) * vecs[n][i] * vecs[n][j];
  return rho;
}

struct BruteCycle {
  double q_hot = 0.0;
  double q_cold = 0.0;
  double work = 0.0;
};

// Full density-matrix Otto cycle. Eigenvectors are followed along the straight
// path between endpoints by maximum overlap, which realizes the adiabatic
// population transfer without any structural labels.
inline BruteCycle otto_density_matrix(std::array<double, 3> hot, std::array<double, 3> cold,
                                      double t_hot, double t_cold, int path_steps = 400) {
  const M4 H1 = pauli_hamiltonian(hot[0], hot[1], hot[2]);
  const auto start = lmg_otto::jacobi_eigensystem<4>(H1);
  auto vecs = start.vectors;
  std::array<double, 4> cold_energies{};
  for (int s = 1; s <= path_steps; ++s) {
    const double f = static_cast<double>(s) / path_steps;
    const M4 H = pauli_hamiltonian(hot[0] + f * (cold[0] - hot[0]), hot[1],
                                   hot[2] + f * (cold[2] - hot[2]));
    const auto es = lmg_otto::jacobi_eigensystem<4>(H);
    std::array<bool, 4> taken{};
    std::array<std::array<double, 4>, 4> next{};
    for (std::size_t n = 0; n < 4; ++n) {
      std::size_t best = 0;
      double best_overlap = -1.0;
      for (std::size_t k = 0; k < 4; ++k) {
        if (taken[k]) continue;
        double dot = 0.0;
        for (std::size_t i = 0; i < 4; ++i) dot += vecs[n][i] * es.vectors[k][i];
        if (std::abs(dot) > best_overlap) {
          best_overlap = std::abs(dot);
          best = k;
        }
      }
      taken[best] = true;
      double dot = 0.0;
      for (std::size_t i = 0; i < 4; ++i) dot += vecs[n][i] * es.vectors[best][i];
      for (std::size_t i = 0; i < 4; ++i) next[n][i] = (dot < 0 ? -1.0 : 1.0) * es.vectors[best][i];
      cold_energies[n] = es.values[best];
    }
    vecs = next;
  }
  const auto p_hot = gibbs_direct(start.values, t_hot);
  const auto p_cold = gibbs_direct(cold_energies, t_cold);
  const M4 H2 = pauli_hamiltonian(cold[0], cold[1], cold[2]);

  const M4 rho1 = mixture(start.vectors, p_hot);   // after hot isochore
  const M4 rho1p = mixture(vecs, p_hot);           // after first adiabat
  const M4 rho2 = mixture(vecs, p_cold);           // after cold isochore
  const M4 rho2p = mixture(start.vectors, p_cold); // after second adiabat

  BruteCycle c;
  c.q_hot = trace_product(H1, rho1) - trace_product(H1, rho2p);
  c.q_cold = trace_product(H2, rho2) - trace_product(H2, rho1p);
  c.work = c.q_hot + c.q_cold;
  return c;
}

}  // namespace oracle
