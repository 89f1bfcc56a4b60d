#ifndef JOINTINV_FIELD_GENERATORS_HPP
#define JOINTINV_FIELD_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "jointinv/errors.hpp"
#include "jointinv/invariants.hpp"
#include "jointinv/matrix.hpp"
#include "jointinv/poly.hpp"
#include "jointinv/signature.hpp"

namespace jointinv {

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Transcendence degree of the field of Sp(2n)-invariants on m points.
inline std::size_t dim_d(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw InputError("dim_d needs m >= 1 and n >= 1");
  if (m >= 2 * n) return 2 * n * m - n * (2 * n + 1);
  return binomial(m, 2);
}

using PairList = std::vector<std::pair<std::size_t, std::size_t>>;

/// Pairs (i, j) with i <= 2n and i < j <= m, in lexicographic order.
struct BasicSet {
  std::size_t m = 0;
  std::size_t n = 0;
  PairList pairs;
};

inline BasicSet basic_set(std::size_t m, std::size_t n) {
  BasicSet b{m, n, {}};
  for (std::size_t i = 1; i <= std::min(m, 2 * n); ++i)
    for (std::size_t j = i + 1; j <= m; ++j) b.pairs.emplace_back(i, j);
  return b;
}

/// The value of a_kl (2n < k < l) forced by b_{1..2n,k,l} = 0. The syzygy is
/// affine in a_kl with slope +-b_{1..2n}; the table's current a_kl is ignored.
inline Rat eliminate_entry(const GramTable& partial, std::size_t n, std::size_t k, std::size_t l) {
  if (!(2 * n < k && k < l && l <= partial.m())) throw InputError("eliminate_entry needs 2n < k < l <= m");
  IndexTuple idx(2 * n);
  std::iota(idx.begin(), idx.end(), 1);
  idx.push_back(k);
  idx.push_back(l);
  GramTable t = partial;
  t.set(k, l, 0);
  const Rat at_zero = pfaffian(t.restrict_to(idx));
  t.set(k, l, 1);
  const Rat slope = pfaffian(t.restrict_to(idx)) - at_zero;
  if (slope == 0) throw GenericityError(n == 1 ? "a12 = 0" : chain_predicate_name(n));
  return -at_zero / slope;
}

/// Fills every a_kl with 2n < k < l from the basic-set entries, in
/// lexicographic order of (k, l).
inline GramTable reconstruct_table(const GramTable& partial, std::size_t n) {
  GramTable t = partial;
  for (std::size_t k = 2 * n + 1; k <= t.m(); ++k)
    for (std::size_t l = k + 1; l <= t.m(); ++l) t.set(k, l, eliminate_entry(t, n, k, l));
  return t;
}

/// Dimension of the common stabilizer {S in sp(2n) : S A_i = 0}. sp(2n) is
/// parametrized as S = J H with H symmetric, so S A = 0 iff H A = 0.
inline std::size_t stabilizer_dim(const std::vector<Vector>& points, std::size_t n) {
  const std::size_t dim = 2 * n;
  std::vector<std::pair<std::size_t, std::size_t>> params;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = r; c < dim; ++c) params.emplace_back(r, c);
  Matrix sys(points.size() * dim, params.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (points[p].size() != dim) throw InputError("stabilizer_dim: point dimension mismatch");
    for (std::size_t q = 0; q < params.size(); ++q) {
      const auto [r, c] = params[q];
      // H e_rc + H e_cr contributes A_c to row r and A_r to row c.
      sys(p * dim + r, q) += points[p][c];
      if (r != c) sys(p * dim + c, q) += points[p][r];
    }
  }
  return params.size() - rank(sys);
}

/// Gradient rows of every a_ij (i < j, lexicographic) with respect to the
/// point coordinates, columns ordered point by point.
inline Matrix gram_jacobian(const PointConfig& c) {
  const std::size_t n = c.n();
  const std::size_t dim = 2 * n;
  Matrix jac(binomial(c.m(), 2), c.m() * dim);
  std::size_t row = 0;
  for (std::size_t i = 1; i <= c.m(); ++i)
    for (std::size_t j = i + 1; j <= c.m(); ++j, ++row) {
      const Vector& a = c.point(i);
      const Vector& b = c.point(j);
      for (std::size_t k = 0; k < n; ++k) {
        jac(row, (i - 1) * dim + k) = b[n + k];
        jac(row, (i - 1) * dim + n + k) = -b[k];
        jac(row, (j - 1) * dim + k) = -a[n + k];
        jac(row, (j - 1) * dim + n + k) = a[k];
      }
    }
  return jac;
}

/// Exact rank of d(a_ij)/d(coordinates) at the configuration.
inline std::size_t jacobian_rank(const PointConfig& c) { return rank(gram_jacobian(c)); }

/// Jacobian of polynomials in the a_ij with respect to point coordinates at
/// `c`, by the chain rule through gram_jacobian.
inline Matrix polynomial_jacobian(const std::vector<MultiPoly>& polys, const PointConfig& c) {
  const Matrix inner = gram_jacobian(c);
  const GramTable g = gram(c);
  Matrix jac(polys.size(), inner.cols());
  for (std::size_t p = 0; p < polys.size(); ++p) {
    std::size_t row = 0;
    for (std::size_t i = 1; i <= c.m(); ++i)
      for (std::size_t j = i + 1; j <= c.m(); ++j, ++row) {
        const MultiPoly partial = polys[p].derivative(VarId::pairwise(static_cast<std::uint32_t>(i),
                                                                      static_cast<std::uint32_t>(j)));
        if (partial.is_zero()) continue;
        const Rat w = evaluate(partial, g);
        if (w == 0) continue;
        for (std::size_t col = 0; col < inner.cols(); ++col) jac(p, col) += w * inner(row, col);
      }
  }
  return jac;
}

/// Random configuration with integer coordinates in [-bound, bound].
inline PointConfig random_config(std::size_t m, std::size_t n, std::mt19937_64& rng, int bound = 20) {
  std::uniform_int_distribution<int> coord(-bound, bound);
  std::vector<Vector> pts(m, Vector(2 * n));
  for (auto& p : pts)
    for (auto& x : p) x = coord(rng);
  return {n, std::move(pts)};
}

/// Maximum Jacobian rank over three random small-integer configurations.
inline std::size_t generic_jacobian_rank(std::size_t m, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t best = 0;
  for (int s = 0; s < 3; ++s) best = std::max(best, jacobian_rank(random_config(m, n, rng, 9)));
  return best;
}

}  // namespace jointinv

#endif  // JOINTINV_FIELD_GENERATORS_HPP
