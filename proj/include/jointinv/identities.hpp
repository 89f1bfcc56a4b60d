#ifndef JOINTINV_IDENTITIES_HPP
#define JOINTINV_IDENTITIES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "jointinv/errors.hpp"
#include "jointinv/invariants.hpp"
#include "jointinv/pfaffian.hpp"
#include "jointinv/poly.hpp"

namespace jointinv {

/// Symbolic Pfaffian of (a_{i_p i_q}) on the given indices, in the given
/// order. Any even length; alternating in the indices.
inline MultiPoly pfaffian_poly(const IndexTuple& idx) {
  if (idx.size() % 2 != 0) throw InputError("Pfaffian index tuple must have even length");
  return pfaffian_expand<MultiPoly>(idx.size(),
                                    [&](std::size_t p, std::size_t q) { return pair_var(idx[p], idx[q]); });
}

/// The syzygy b_idx for tuples of length 2n+2.
inline MultiPoly pfaffian_poly(const IndexTuple& idx, std::size_t n) {
  if (idx.size() != 2 * n + 2) throw InputError("expected an index tuple of length 2n+2");
  if (idx.front() < 1) throw InputError("indices are 1-based");
  for (std::size_t p = 1; p < idx.size(); ++p)
    if (idx[p] <= idx[p - 1]) throw InputError("index tuple must be strictly ascending");
  return pfaffian_poly(idx);
}

/// Symbolic determinant by Leibniz expansion (small sizes only).
inline MultiPoly det_poly(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t k = m.size();
  if (k > 7) throw CostGuardError("symbolic determinant larger than 7x7");
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly total;
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) inversions += perm[a] > perm[b];
    MultiPoly t(1);
    for (std::size_t r = 0; r < k && !t.is_zero(); ++r) t = t * m[r][perm[r]];
    if (inversions % 2 == 0)
      total += t;
    else
      total -= t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Symbolic q_{i_1..i_{4n+2}} = det(a_{i_s, i_{t+2n+1}}).
inline MultiPoly q_poly(const IndexTuple& idx) {
  if (idx.size() < 6 || (idx.size() - 2) % 4 != 0) throw InputError("q index tuple must have length 4n+2");
  const std::size_t half = idx.size() / 2;
  std::vector<std::vector<MultiPoly>> m(half, std::vector<MultiPoly>(half));
  for (std::size_t s = 0; s < half; ++s)
    for (std::size_t t = 0; t < half; ++t) m[s][t] = pair_var(idx[s], idx[t + half]);
  return det_poly(m);
}

namespace detail {

inline std::size_t factorial(std::size_t k) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace detail

/// Unnormalized minor-expansion sum
///   sum_{sigma in S_{2n+1}} sgn(sigma) a_{1 sigma(2)} Pf(a_{sigma(3) .. sigma(2n+2)})
/// over permutations of positions 2..2n+2 of (1, ..., 2n+2).
inline MultiPoly pfaffian_expansion_sum(std::size_t n) {
  if (n < 1 || n > 2) throw CostGuardError("Pfaffian expansion identity checked for n in {1, 2} only");
  const std::size_t len = 2 * n + 2;
  std::vector<std::size_t> rest(len - 1);
  std::iota(rest.begin(), rest.end(), 2);
  MultiPoly sum;
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < rest.size(); ++a)
      for (std::size_t b = a + 1; b < rest.size(); ++b) inversions += rest[a] > rest[b];
    IndexTuple tail(rest.begin() + 1, rest.end());
    MultiPoly pf = pfaffian_poly(tail);
    MultiPoly term = pair_var(1, rest[0]) * pf;
    if (inversions % 2 == 0)
      sum += term;
    else
      sum -= term;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return sum;
}

/// b_{1..2n+2} equals the expansion sum divided by (2n)!, exactly.
inline bool verify_pfaffian_expansion(std::size_t n) {
  IndexTuple idx(2 * n + 2);
  std::iota(idx.begin(), idx.end(), 1);
  const MultiPoly lhs = pfaffian_poly(idx, n);
  const Rat norm(1, static_cast<unsigned long>(detail::factorial(2 * n)));
  return lhs == pfaffian_expansion_sum(n) * norm;
}

/// Right-hand side sum_{j=2..8} (-1)^j a_{1j} b_{2..j^..8}; `flip` negates the
/// term with the given j (0 for none).
inline MultiPoly weyl_reduction_rhs(std::size_t flip = 0) {
  MultiPoly rhs;
  for (std::size_t j = 2; j <= 8; ++j) {
    IndexTuple rest;
    for (std::size_t k = 2; k <= 8; ++k)
      if (k != j) rest.push_back(k);
    MultiPoly term = pair_var(1, j) * pfaffian_poly(rest, 2);
    const bool plus = (j % 2 == 0) != (j == flip);
    if (plus)
      rhs += term;
    else
      rhs -= term;
  }
  return rhs;
}

/// The 8-index Pfaffian for n = 2 reduces to the 6-index syzygies.
inline bool verify_weyl_reduction() {
  return pfaffian_poly({1, 2, 3, 4, 5, 6, 7, 8}) == weyl_reduction_rhs();
}

/// a12 b3456 - a34 b1256 + a35 b1246 - a36 b1245; `drop_last` omits the final term.
inline MultiPoly q_reduction_rhs(bool drop_last = false) {
  MultiPoly rhs = pair_var(1, 2) * pfaffian_poly({3, 4, 5, 6}, 1) - pair_var(3, 4) * pfaffian_poly({1, 2, 5, 6}, 1) +
                  pair_var(3, 5) * pfaffian_poly({1, 2, 4, 6}, 1);
  if (!drop_last) rhs -= pair_var(3, 6) * pfaffian_poly({1, 2, 4, 5}, 1);
  return rhs;
}

inline bool verify_q_reduction() { return q_poly({1, 2, 3, 4, 5, 6}) == q_reduction_rhs(); }

/// Second syzygy c_i = sum_{j=1..5} (-1)^j a_ij b_{1..j^..5} for n = 1, m = 5,
/// as an element of the free module on the Pluecker generators b_ijkl.
inline FreeModuleElt second_syzygy(std::size_t i) {
  if (i < 1 || i > 5) throw InputError("second syzygy index must be in 1..5");
  FreeModuleElt c;
  for (std::size_t j = 1; j <= 5; ++j) {
    IndexTuple omit;
    for (std::size_t k = 1; k <= 5; ++k)
      if (k != j) omit.push_back(k);
    MultiPoly coeff = pair_var(i, j);
    c.add(omit, j % 2 == 0 ? coeff : MultiPoly(-coeff));
  }
  return c;
}

/// Coefficients of c_1..c_5 in the third syzygy d.
inline std::array<MultiPoly, 5> third_syzygy_coefficients() {
  auto a = [](std::size_t i, std::size_t j) { return pair_var(i, j); };
  return {a(2, 3) * a(4, 5) - a(2, 4) * a(3, 5) + a(2, 5) * a(3, 4),
          -(a(1, 3) * a(4, 5)) + a(1, 4) * a(3, 5) - a(1, 5) * a(3, 4),
          a(1, 2) * a(4, 5) - a(1, 4) * a(2, 5) + a(1, 5) * a(2, 4),
          -(a(1, 2) * a(3, 5)) + a(1, 3) * a(2, 5) - a(1, 5) * a(2, 3),
          a(1, 2) * a(3, 4) - a(1, 3) * a(2, 4) + a(1, 4) * a(2, 3)};
}

/// d = sum_i coeffs[i] c_i, expanded in the b-basis of F_1.
inline FreeModuleElt third_syzygy(const std::array<MultiPoly, 5>& coeffs = third_syzygy_coefficients()) {
  FreeModuleElt d;
  for (std::size_t i = 1; i <= 5; ++i) d += coeffs[i - 1] * second_syzygy(i);
  return d;
}

struct TowerReport {
  std::size_t m = 0;
  bool first_syzygies_vanish = false;      // every b_ijkl is 0 on point-generated tables
  std::vector<bool> second_syzygies_zero;  // phi_1(c_i) == 0, m = 5 only
  bool third_syzygy_zero = false;          // d == 0 component-wise, m = 5 only
  std::vector<IndexTuple> nonzero_components;

  bool ok() const {
    return first_syzygies_vanish &&
           std::all_of(second_syzygies_zero.begin(), second_syzygies_zero.end(), [](bool b) { return b; }) &&
           (m != 5 || third_syzygy_zero);
  }
};

namespace detail {

inline bool pluecker_vanish_on_points(std::size_t m, std::uint64_t seed, std::size_t samples = 20) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-20, 20);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Vector> pts(m, Vector(2));
    for (auto& p : pts)
      for (auto& x : p) x = coord(rng);
    const GramTable g = gram(PointConfig(1, pts));
    bool ok = true;
    for_each_subset(m, 4, [&](const IndexTuple& idx) { ok = ok && evaluate(pfaffian_poly(idx, 1), g) == 0; });
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

/// Checks the n = 1 minimal free resolution for m = 4 (first syzygy) or
/// m = 5 (first, second and third syzygies).
inline TowerReport verify_resolution_tower(std::size_t m,
                                           const std::array<MultiPoly, 5>& d_coeffs = third_syzygy_coefficients(),
                                           std::uint64_t seed = 1) {
  if (m != 4 && m != 5) throw InputError("resolution towers are available for m = 4 and m = 5");
  TowerReport r;
  r.m = m;
  r.first_syzygies_vanish = detail::pluecker_vanish_on_points(m, seed);
  if (m == 5) {
    auto b = [](const IndexTuple& idx) { return pfaffian_poly(idx, 1); };
    for (std::size_t i = 1; i <= 5; ++i) r.second_syzygies_zero.push_back(second_syzygy(i).expand(b).is_zero());
    const FreeModuleElt d = third_syzygy(d_coeffs);
    r.third_syzygy_zero = d.is_zero();
    for (const auto& [idx, c] : d.components()) r.nonzero_components.push_back(idx);
  }
  return r;
}

struct IdentityResult {
  std::string name;
  bool holds = false;
};

/// The full identity suite exposed by `syzygy-check --identities`.
inline std::vector<IdentityResult> identity_suite(std::uint64_t seed = 1) {
  return {
      {"pfaffian-expansion-n1", verify_pfaffian_expansion(1)},
      {"pfaffian-expansion-n2", verify_pfaffian_expansion(2)},
      {"weyl-reduction", verify_weyl_reduction()},
      {"q-reduction", verify_q_reduction()},
      {"resolution-tower-m4", verify_resolution_tower(4, third_syzygy_coefficients(), seed).ok()},
      {"resolution-tower-m5", verify_resolution_tower(5, third_syzygy_coefficients(), seed).ok()},
  };
}

}  // namespace jointinv

#endif  // JOINTINV_IDENTITIES_HPP
