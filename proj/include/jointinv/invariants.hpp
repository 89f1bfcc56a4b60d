#ifndef JOINTINV_INVARIANTS_HPP
#define JOINTINV_INVARIANTS_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jointinv/errors.hpp"
#include "jointinv/matrix.hpp"
#include "jointinv/pfaffian.hpp"
#include "jointinv/rational.hpp"
#include "jointinv/symplectic.hpp"

namespace jointinv {

/// Ordered m-tuple of points in R^{2n}. Point indices are 1-based in every
/// public accessor, matching the a_ij notation.
class PointConfig {
 public:
  PointConfig() = default;
  PointConfig(std::size_t n, std::vector<Vector> points) : n_(n), points_(std::move(points)) {
    if (n_ == 0) throw InputError("half-dimension n must be positive");
    if (points_.empty()) throw InputError("configuration needs at least one point");
    for (const auto& p : points_)
      if (p.size() != 2 * n_)
        throw InputError("point of length " + std::to_string(p.size()) + ", expected " +
                         std::to_string(2 * n_));
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return points_.size(); }
  const Vector& point(std::size_t i) const { return points_.at(i - 1); }
  const std::vector<Vector>& points() const noexcept { return points_; }

  friend bool operator==(const PointConfig&, const PointConfig&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Vector> points_;
};

/// M * A_i for every point.
inline PointConfig transform(const Matrix& m, const PointConfig& c) {
  if (m.rows() != 2 * c.n() || m.cols() != 2 * c.n()) throw InputError("transform dimension mismatch");
  std::vector<Vector> pts;
  pts.reserve(c.m());
  for (const auto& p : c.points()) pts.push_back(m * p);
  return {c.n(), std::move(pts)};
}

inline PointConfig translate(const PointConfig& c, const Vector& t) {
  if (t.size() != 2 * c.n()) throw InputError("translation dimension mismatch");
  std::vector<Vector> pts = c.points();
  for (auto& p : pts)
    for (std::size_t k = 0; k < p.size(); ++k) p[k] += t[k];
  return {c.n(), std::move(pts)};
}

inline PointConfig scale(const PointConfig& c, const Rat& t) {
  std::vector<Vector> pts = c.points();
  for (auto& p : pts)
    for (auto& x : p) x *= t;
  return {c.n(), std::move(pts)};
}

/// New configuration whose i-th point is old point perm[i-1] (1-based values).
inline PointConfig permute(const PointConfig& c, const std::vector<std::size_t>& perm) {
  if (perm.size() != c.m()) throw InputError("permutation length mismatch");
  std::vector<Vector> pts;
  pts.reserve(c.m());
  for (auto i : perm) pts.push_back(c.point(i));
  return {c.n(), std::move(pts)};
}

/// Skew table of pairwise invariants. Only i < j is stored; a_ji = -a_ij and
/// a_ii = 0 are produced on access.
class GramTable {
 public:
  GramTable() = default;
  explicit GramTable(std::size_t m) : m_(m), upper_(m * (m > 0 ? m - 1 : 0) / 2) {}

  std::size_t m() const noexcept { return m_; }

  Rat at(std::size_t i, std::size_t j) const {
    check(i, j);
    if (i == j) return 0;
    return i < j ? upper_[slot(i, j)] : Rat(-upper_[slot(j, i)]);
  }

  void set(std::size_t i, std::size_t j, const Rat& v) {
    check(i, j);
    if (i == j) throw InputError("a_ii is identically zero");
    if (i < j)
      upper_[slot(i, j)] = v;
    else
      upper_[slot(j, i)] = -v;
  }

  /// Skew matrix on the listed (1-based) indices, in the given order.
  SkewMatrix restrict_to(const std::vector<std::size_t>& idx) const {
    SkewMatrix s(idx.size());
    for (std::size_t p = 0; p < idx.size(); ++p)
      for (std::size_t q = p + 1; q < idx.size(); ++q) s.set(p, q, at(idx[p], idx[q]));
    return s;
  }

  friend bool operator==(const GramTable&, const GramTable&) = default;

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i < 1 || j < 1 || i > m_ || j > m_)
      throw InputError("index (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1.." +
                       std::to_string(m_));
  }
  // Row-major position of (i, j), i < j, in the strict upper triangle.
  std::size_t slot(std::size_t i, std::size_t j) const {
    return (i - 1) * (2 * m_ - i) / 2 + (j - i - 1);
  }

  std::size_t m_ = 0;
  std::vector<Rat> upper_;
};

inline GramTable gram(const PointConfig& c) {
  GramTable g(c.m());
  for (std::size_t i = 1; i <= c.m(); ++i)
    for (std::size_t j = i + 1; j <= c.m(); ++j) g.set(i, j, symp(c.point(i), c.point(j)));
  return g;
}

using IndexTuple = std::vector<std::size_t>;

namespace detail {

inline void check_ascending(const IndexTuple& idx, std::size_t m) {
  for (std::size_t p = 0; p < idx.size(); ++p) {
    if (idx[p] < 1 || idx[p] > m) throw InputError("index out of range 1.." + std::to_string(m));
    if (p > 0 && idx[p] <= idx[p - 1]) throw InputError("index tuple must be strictly ascending");
  }
}

}  // namespace detail

/// Pfaffian of the sub-table on the given ascending indices (the syzygy b_idx).
inline Rat syzygy_value(const GramTable& g, const IndexTuple& idx) {
  if (idx.size() < 4 || idx.size() % 2 != 0)
    throw InputError("syzygy index tuple must have even length >= 4");
  detail::check_ascending(idx, g.m());
  return pfaffian(g.restrict_to(idx));
}

/// Calls f(tuple) for every ascending k-subset of 1..m in lexicographic order.
template <class F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
  if (k > m) return;
  IndexTuple idx(k);
  for (std::size_t p = 0; p < k; ++p) idx[p] = p + 1;
  while (true) {
    f(static_cast<const IndexTuple&>(idx));
    std::size_t p = k;
    while (p > 0 && idx[p - 1] == m - k + p) --p;
    if (p == 0) return;
    ++idx[p - 1];
    for (std::size_t q = p; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

/// All minimal syzygies b over ascending (2n+2)-tuples; empty when m < 2n+2.
inline std::vector<std::pair<IndexTuple, Rat>> all_min_syzygies(const GramTable& g, std::size_t n) {
  std::vector<std::pair<IndexTuple, Rat>> out;
  for_each_subset(g.m(), 2 * n + 2, [&](const IndexTuple& idx) { out.emplace_back(idx, syzygy_value(g, idx)); });
  return out;
}

inline std::vector<std::pair<IndexTuple, Rat>> all_min_syzygies(const PointConfig& c) {
  return all_min_syzygies(gram(c), c.n());
}

/// q_{i_1..i_{4n+2}} = det(a_{i_s, i_{t+2n+1}})_{s,t=1..2n+1}.
inline Rat q_value(const GramTable& g, const IndexTuple& idx) {
  if (idx.size() < 6 || (idx.size() - 2) % 4 != 0)
    throw InputError("q index tuple must have length 4n+2");
  detail::check_ascending(idx, g.m());
  const std::size_t half = idx.size() / 2;
  Matrix a(half, half);
  for (std::size_t s = 0; s < half; ++s)
    for (std::size_t t = 0; t < half; ++t) a(s, t) = g.at(idx[s], idx[t + half]);
  return det(a);
}

}  // namespace jointinv

#endif  // JOINTINV_INVARIANTS_HPP
