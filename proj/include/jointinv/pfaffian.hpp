#ifndef JOINTINV_PFAFFIAN_HPP
#define JOINTINV_PFAFFIAN_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <utility>

#include "jointinv/errors.hpp"
#include "jointinv/matrix.hpp"
#include "jointinv/rational.hpp"

namespace jointinv {

/// Pfaffian of the skew matrix with upper entries `entry(i, j)`, i < j,
/// 0-based, by expansion along the first remaining row:
///
///   Pf(S) = sum_{j > 0} (-1)^{j+1} s_{0j} Pf(S without rows/cols 0, j).
///
/// Sub-Pfaffians are memoized on the bitmask of surviving indices. Works for
/// any commutative ring `R` constructible from an int (rationals, polynomials).
/// Odd dimension gives zero.
template <class R, class Entry>
R pfaffian_expand(std::size_t dim, Entry&& entry) {
  if (dim > 62) throw CostGuardError("Pfaffian dimension too large");
  if (dim % 2 == 1) return R(0);
  std::unordered_map<std::uint64_t, R> memo;
  std::function<R(std::uint64_t)> pf = [&](std::uint64_t mask) -> R {
    if (mask == 0) return R(1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const auto first = static_cast<std::size_t>(std::countr_zero(mask));
    const std::uint64_t rest = mask & ~(std::uint64_t{1} << first);
    R total(0);
    bool positive = true;
    for (std::uint64_t scan = rest; scan != 0; scan &= scan - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(scan));
      R term = entry(first, j);
      term = term * pf(rest & ~(std::uint64_t{1} << j));
      if (positive)
        total = total + term;
      else
        total = total - term;
      positive = !positive;
    }
    memo.emplace(mask, total);
    return total;
  };
  const std::uint64_t all = dim == 0 ? 0 : (std::uint64_t{1} << dim) - 1;
  return pf(all);
}

/// Skew-symmetric exact matrix: entries(i, j) = -entries(j, i), zero diagonal.
class SkewMatrix {
 public:
  explicit SkewMatrix(std::size_t dim = 0) : m_(dim, dim) {}

  /// Builds from a full matrix, checking skew-symmetry.
  explicit SkewMatrix(const Matrix& m) : m_(m) {
    if (!m.square()) throw InputError("skew matrix must be square");
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = i; j < m.rows(); ++j)
        if (m(i, j) != -m(j, i)) throw InputError("matrix is not skew-symmetric");
  }

  std::size_t dim() const noexcept { return m_.rows(); }
  const Rat& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  void set(std::size_t i, std::size_t j, const Rat& v) {
    if (i == j) {
      if (v != 0) throw InputError("skew matrix diagonal must vanish");
      return;
    }
    m_(i, j) = v;
    m_(j, i) = -v;
  }

  const Matrix& matrix() const noexcept { return m_; }

 private:
  Matrix m_;
};

inline Rat pfaffian(const SkewMatrix& s) {
  return pfaffian_expand<Rat>(s.dim(), [&](std::size_t i, std::size_t j) { return s(i, j); });
}

}  // namespace jointinv

#endif  // JOINTINV_PFAFFIAN_HPP
