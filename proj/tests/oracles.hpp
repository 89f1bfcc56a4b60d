// Independent reference computations used only by the tests. None of these
// call the library routine they are checking.
#ifndef JOINTINV_TESTS_ORACLES_HPP
#define JOINTINV_TESTS_ORACLES_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "jointinv/invariants.hpp"
#include "jointinv/matrix.hpp"
#include "jointinv/pfaffian.hpp"
#include "jointinv/rational.hpp"

namespace oracle {

using jointinv::Matrix;
using jointinv::Rat;
using jointinv::Vector;

/// Laplace expansion along the first row.
inline Rat cofactor_det(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Rat total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c) == 0) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = a(r, k);
    const Rat term = a(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Rat(-term);
  }
  return total;
}

namespace detail {

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

inline void matchings(std::vector<std::size_t>& left, std::vector<std::size_t>& acc,
                      const jointinv::SkewMatrix& s, Rat& total) {
  if (left.empty()) {
    Rat prod = 1;
    for (std::size_t k = 0; k < acc.size(); k += 2) prod *= s(acc[k], acc[k + 1]);
    total += permutation_sign(acc) * prod;
    return;
  }
  const std::size_t first = left.front();
  for (std::size_t k = 1; k < left.size(); ++k) {
    const std::size_t partner = left[k];
    std::vector<std::size_t> rest;
    for (std::size_t q = 1; q < left.size(); ++q)
      if (q != k) rest.push_back(left[q]);
    acc.push_back(first);
    acc.push_back(partner);
    matchings(rest, acc, s, total);
    acc.pop_back();
    acc.pop_back();
  }
}

}  // namespace detail

/// Pfaffian as a signed sum over perfect matchings, each sign taken from
/// the parity of the flattened permutation (i1 j1 i2 j2 ...).
inline Rat matching_pfaffian(const jointinv::SkewMatrix& s) {
  if (s.dim() % 2 == 1) return 0;
  std::vector<std::size_t> left(s.dim());
  std::iota(left.begin(), left.end(), 0);
  std::vector<std::size_t> acc;
  Rat total = 0;
  detail::matchings(left, acc, s, total);
  return total;
}

/// x_i . y_j - x_j . y_i directly from coordinates.
inline Rat pair_value(const Vector& a, const Vector& b) {
  const std::size_t n = a.size() / 2;
  Rat s = 0;
  for (std::size_t k = 0; k < n; ++k) s += a[k] * b[n + k] - b[k] * a[n + k];
  return s;
}

inline Rat small_rat(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 4);
  return jointinv::make_rat(num(rng), den(rng));
}

inline Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

inline jointinv::SkewMatrix random_skew(std::size_t dim, std::mt19937_64& rng) {
  jointinv::SkewMatrix s(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) s.set(i, j, small_rat(rng));
  return s;
}

/// A table with independent random entries (not from points).
inline jointinv::GramTable random_table(std::size_t m, std::mt19937_64& rng) {
  jointinv::GramTable g(m);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j) g.set(i, j, small_rat(rng));
  return g;
}

inline jointinv::PointConfig random_points(std::size_t m, std::size_t n, std::mt19937_64& rng, int bound = 9) {
  std::vector<Vector> pts(m, Vector(2 * n));
  for (auto& p : pts)
    for (auto& x : p) x = small_rat(rng, bound);
  return {n, std::move(pts)};
}

}  // namespace oracle

#endif  // JOINTINV_TESTS_ORACLES_HPP
