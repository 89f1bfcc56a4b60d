#ifndef JOINTINV_SYMPLECTIC_HPP
#define JOINTINV_SYMPLECTIC_HPP

#include <cstdint>
#include <random>
#include <span>

#include "jointinv/errors.hpp"
#include "jointinv/matrix.hpp"
#include "jointinv/rational.hpp"

namespace jointinv {

// Coordinates on R^{2n} are ordered (x^1, ..., x^n, y^1, ..., y^n) everywhere.

/// omega(u, v) = sum_k u_x^k v_y^k - v_x^k u_y^k.
inline Rat symp(std::span<const Rat> u, std::span<const Rat> v) {
  if (u.size() != v.size() || u.size() % 2 != 0)
    throw InputError("symp: vectors must have equal even length");
  const std::size_t n = u.size() / 2;
  Rat s = 0;
  for (std::size_t k = 0; k < n; ++k) s += u[k] * v[n + k] - v[k] * u[n + k];
  return s;
}

/// Matrix of omega: omega(u, v) = u^T J v, J = [[0, I], [-I, 0]].
inline Matrix standard_j(std::size_t n) {
  Matrix j(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    j(k, n + k) = 1;
    j(n + k, k) = -1;
  }
  return j;
}

inline bool is_symplectic(const Matrix& m) {
  if (!m.square() || m.rows() % 2 != 0) return false;
  const Matrix j = standard_j(m.rows() / 2);
  return m.transpose() * j * m == j;
}

/// Product of `steps` transvections x -> x + lambda * omega(x, v) * v with
/// lambda in [-3, 3] \ {0} and v a nonzero integer vector with entries in
/// [-3, 3]. Deterministic in `seed`.
inline Matrix random_symplectic(std::size_t n, std::size_t steps, std::uint64_t seed) {
  if (n == 0) throw InputError("random_symplectic: n must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-3, 3);
  const Matrix j = standard_j(n);
  Matrix m = Matrix::identity(2 * n);
  for (std::size_t s = 0; s < steps; ++s) {
    int lambda = 0;
    while (lambda == 0) lambda = small(rng);
    Vector v(2 * n);
    bool nonzero = false;
    while (!nonzero) {
      for (auto& x : v) {
        x = small(rng);
        nonzero = nonzero || x != 0;
      }
    }
    const Vector jv = j * v;
    Matrix t = Matrix::identity(2 * n);
    for (std::size_t r = 0; r < 2 * n; ++r)
      for (std::size_t c = 0; c < 2 * n; ++c) t(r, c) += lambda * v[r] * jv[c];
    m = t * m;
  }
  return m;
}

}  // namespace jointinv

#endif  // JOINTINV_SYMPLECTIC_HPP
