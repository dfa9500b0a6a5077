#pragma once

// Cyclic Jacobi eigensolver for small dense real symmetric matrices.
//
// Used as an independent check on the closed-form spectrum, so it shares no
// code with it beyond the matrix type.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>

#include "lmg_otto/errors.hpp"
#include "lmg_otto/spectrum.hpp"

namespace lmg_otto {

template <std::size_t N>
using Matrix = std::array<std::array<double, N>, N>;

template <std::size_t N>
struct EigenSystem {
  std::array<double, N> values{};               // ascending
  std::array<std::array<double, N>, N> vectors{};  // vectors[k] pairs with values[k]
  int sweeps = 0;
};

struct JacobiOptions {
  double off_tolerance = 1e-13;  // scaled by max(1, ||A||_F)
  int max_sweeps = 64;
};

namespace detail {

template <std::size_t N>
double off_diagonal_norm(const Matrix<N>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      if (i != j) s += a[i][j] * a[i][j];
    }
  }
  return std::sqrt(s);
}

template <std::size_t N>
double frobenius_norm(const Matrix<N>& a) {
  double s = 0.0;
  for (const auto& row : a) {
    for (double x : row) s += x * x;
  }
  return std::sqrt(s);
}

}  // namespace detail

template <std::size_t N>
EigenSystem<N> jacobi_eigensystem(Matrix<N> a, const JacobiOptions& opts = {}) {
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      if (!std::isfinite(a[i][j])) {
        throw Error(ErrorKind::invalid_parameter,
                    "jacobi: matrix has a non-finite entry");
      }
      if (a[i][j] != a[j][i]) {
        throw Error(ErrorKind::invalid_parameter, "jacobi: matrix is not symmetric");
      }
    }
  }

  // v accumulates rotations; column k of v is the k-th eigenvector.
  Matrix<N> v{};
  for (std::size_t i = 0; i < N; ++i) v[i][i] = 1.0;

  const double threshold = opts.off_tolerance * std::max(1.0, detail::frobenius_norm(a));
  int sweep = 0;
  while (detail::off_diagonal_norm(a) > threshold) {
    if (sweep == opts.max_sweeps) {
      throw Error(ErrorKind::non_convergence,
                  "jacobi: off-diagonal norm did not converge within " +
                      std::to_string(opts.max_sweeps) + " sweeps");
    }
    ++sweep;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        // Rutishauser's formulation: t = sgn(theta) / (|theta| + sqrt(theta^2 + 1)).
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[p][p] -= t * apq;
        a[q][q] += t * apq;
        a[p][q] = 0.0;
        a[q][p] = 0.0;
        for (std::size_t r = 0; r < N; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r][p];
          const double arq = a[r][q];
          a[r][p] = arp - s * (arq + tau * arp);
          a[r][q] = arq + s * (arp - tau * arq);
          a[p][r] = a[r][p];
          a[q][r] = a[r][q];
        }
        for (std::size_t r = 0; r < N; ++r) {
          const double vrp = v[r][p];
          const double vrq = v[r][q];
          v[r][p] = vrp - s * (vrq + tau * vrp);
          v[r][q] = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  std::array<std::size_t, N> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x][x] < a[y][y]; });

  EigenSystem<N> out;
  out.sweeps = sweep;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a[order[k]][order[k]];
    for (std::size_t r = 0; r < N; ++r) out.vectors[k][r] = v[r][order[k]];
  }
  return out;
}

inline EigenSystem<4> diagonalize_oracle(const SymMatrix4& m) {
  return jacobi_eigensystem<4>(m.entries);
}

}  // namespace lmg_otto
