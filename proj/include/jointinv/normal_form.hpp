#ifndef JOINTINV_NORMAL_FORM_HPP
#define JOINTINV_NORMAL_FORM_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "jointinv/errors.hpp"
#include "jointinv/field_generators.hpp"
#include "jointinv/invariants.hpp"
#include "jointinv/matrix.hpp"
#include "jointinv/signature.hpp"
#include "jointinv/symplectic.hpp"
#include "jointinv/variants.hpp"

namespace jointinv {

/// Chain of leading Pfaffians a12, b1234, ..., b_{1..2k} (2k <= min(m, 2n)).
inline GenericityReport genericity(const PointConfig& c) { return table_genericity(gram(c), c.n()); }

namespace detail {

/// Coordinate index of the symplectic basis vector e_p (1-based): e_{2k-1} = x^k, e_{2k} = y^k.
inline std::size_t basis_coord(std::size_t p, std::size_t n) {
  return p % 2 == 1 ? (p - 1) / 2 : n + p / 2 - 1;
}

}  // namespace detail

/// Symplectic Gram-Schmidt normal form: the 2n x m matrix whose columns C_j
/// satisfy omega(C_i, C_j) = a_ij with
///   C_1 = e_1, C_2 = a12 e_2,
///   C_{2k-1} in span(e_1..e_{2k-1}) with unit e_{2k-1} coefficient,
///   C_{2k}   in span(e_1..e_{2k}) with zero e_{2k-1} coefficient,
/// and columns beyond 2n fully determined by the first 2n. Rows are in the
/// global (x^1..x^n, y^1..y^n) coordinate order.
inline Matrix canonical(const PointConfig& c) {
  if (c.m() < 2) throw InputError("canonical form needs at least two points");
  require_generic(genericity(c));
  const std::size_t n = c.n();
  const std::size_t dim = 2 * n;
  const GramTable g = gram(c);
  const Matrix j = standard_j(n);
  std::vector<Vector> cols;

  for (std::size_t col = 1; col <= c.m(); ++col) {
    std::vector<std::size_t> unknowns;  // coordinate positions solved for
    const std::size_t span = std::min(col, dim);
    for (std::size_t p = 1; p <= span; ++p) unknowns.push_back(detail::basis_coord(p, n));
    const std::size_t constraints = std::min(col - 1, dim);
    const bool normalized = col <= dim;
    Matrix sys(constraints + (normalized ? 1 : 0), unknowns.size());
    Vector rhs(sys.rows());
    for (std::size_t i = 1; i <= constraints; ++i) {
      const Vector wi = j.transpose() * cols[i - 1];  // omega(C_i, v) = (J^T C_i) . v
      for (std::size_t u = 0; u < unknowns.size(); ++u) sys(i - 1, u) = wi[unknowns[u]];
      rhs[i - 1] = g.at(i, col);
    }
    if (normalized) {
      // odd column: e_col coefficient 1; even column: e_{col-1} coefficient 0
      const std::size_t fixed = col % 2 == 1 ? col : col - 1;
      sys(constraints, fixed - 1) = 1;
      rhs[constraints] = col % 2 == 1 ? 1 : 0;
    }
    auto sol = solve_unique(sys, rhs);
    if (!sol) throw GenericityError("singular normalization system at column " + std::to_string(col));
    Vector v(dim);
    for (std::size_t u = 0; u < unknowns.size(); ++u) v[unknowns[u]] = (*sol)[u];
    cols.push_back(std::move(v));
  }

  Matrix out = Matrix::from_columns(cols);
  if (!(gram(PointConfig(n, cols)) == g)) throw std::logic_error("canonical form does not reproduce the Gram table");
  return out;
}

/// Columns of a 2n x m matrix as a configuration.
inline PointConfig columns_as_config(const Matrix& m) {
  std::vector<Vector> pts;
  for (std::size_t c = 0; c < m.cols(); ++c) pts.push_back(m.column(c));
  return {m.rows() / 2, std::move(pts)};
}

namespace detail {

inline std::vector<std::size_t> identity_order(std::size_t m) {
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

/// Moves (i, j) to the front, keeping the remaining points in order.
inline std::vector<std::size_t> pair_first_order(std::size_t m, std::size_t i, std::size_t j) {
  std::vector<std::size_t> p{i, j};
  for (std::size_t k = 1; k <= m; ++k)
    if (k != i && k != j) p.push_back(k);
  return p;
}

/// Identity if generic; otherwise the single fallback reordering that puts
/// the first pair with a_ij != 0 at positions 1, 2. Throws if neither works.
inline std::vector<std::size_t> generic_order(const PointConfig& c) {
  const auto report = genericity(c);
  if (report.generic) return identity_order(c.m());
  const GramTable g = gram(c);
  for (std::size_t i = 1; i <= c.m(); ++i)
    for (std::size_t j = i + 1; j <= c.m(); ++j)
      if (g.at(i, j) != 0) {
        auto order = pair_first_order(c.m(), i, j);
        if (genericity(permute(c, order)).generic) return order;
        require_generic(report);
      }
  require_generic(report);
  return {};
}

/// Linear map sending A_i to the normal-form column C_i (first 2n points).
inline Matrix normalizing_map(const PointConfig& c) {
  const std::size_t dim = 2 * c.n();
  const Matrix canon = canonical(c);
  Matrix target(dim, dim);
  Matrix source(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t r = 0; r < dim; ++r) {
      target(r, i) = canon(r, i);
      source(r, i) = c.point(i + 1)[r];
    }
  return target * inverse(source);
}

}  // namespace detail

/// Symplectic M with M A_i = B_i for every i, composed from the two
/// normalizing maps. Checked exactly before it is returned.
inline Matrix recover_transform(const PointConfig& a, const PointConfig& b) {
  if (a.n() != b.n() || a.m() != b.m()) throw InputError("configurations differ in (n, m)");
  if (a.m() < 2 * a.n()) throw UnderdeterminedError("underdetermined: fewer than 2n points leave a positive-dimensional stabilizer");
  if (!(gram(a) == gram(b))) throw NotEquivalentError("not equivalent: Gram tables differ");
  const auto order = detail::generic_order(a);
  const PointConfig pa = permute(a, order);
  const PointConfig pb = permute(b, order);
  const Matrix m = inverse(detail::normalizing_map(pb)) * detail::normalizing_map(pa);
  if (!is_symplectic(m)) throw std::logic_error("recovered transform is not symplectic");
  if (!(transform(m, a) == b)) throw std::logic_error("recovered transform does not map A onto B");
  return m;
}

/// Sp: basic-set values a_ij; CSp: sign(a12) and ratios a_ij/a12; ASp: the
/// Sp signature of (A_i - A_1), listed as triangle values over (1, i+1, j+1).
inline Signature signature(const PointConfig& c, Group group) {
  switch (group) {
    case Group::Sp: {
      require_generic(genericity(c));
      const GramTable g = gram(c);
      Signature s{Group::Sp, {}};
      for (const auto& [i, j] : basic_set(c.m(), c.n()).pairs) s.values.push_back(g.at(i, j));
      return s;
    }
    case Group::CSp:
      require_generic(genericity(c));
      return csp_signature(gram(c), c.n());
    case Group::ASp: {
      const PointConfig t = translated_to_first(c);
      require_generic(genericity(t));
      const GramTable g = gram(t);
      Signature s{Group::ASp, {}};
      for (const auto& [i, j] : basic_set(t.m(), t.n()).pairs) s.values.push_back(g.at(i, j));
      return s;
    }
    case Group::Contact:
      throw InputError("contact signatures are computed from a ContactConfig");
  }
  return {};
}

inline Signature signature(const ContactConfig& c) { return contact_absolute(c); }

namespace detail {

/// Fallback ordering for the group's genericity predicate, shared by both
/// configurations so that the decision is unchanged.
inline std::vector<std::size_t> equivalence_order(const PointConfig& a, Group group) {
  if (group != Group::ASp) return generic_order(a);
  const PointConfig t = translated_to_first(a);
  const auto report = genericity(t);
  if (report.generic) return identity_order(a.m());
  const GramTable g = gram(t);
  for (std::size_t i = 1; i <= t.m(); ++i)
    for (std::size_t j = i + 1; j <= t.m(); ++j)
      if (g.at(i, j) != 0) {
        auto order = pair_first_order(a.m(), i + 1, j + 1);
        order.erase(std::find(order.begin(), order.end(), 1));
        order.insert(order.begin(), 1);
        if (genericity(translated_to_first(permute(a, order))).generic) return order;
        require_generic(report);
      }
  require_generic(report);
  return {};
}

}  // namespace detail

inline bool equivalent(const PointConfig& a, const PointConfig& b, Group group) {
  if (group == Group::Contact) throw InputError("use contact_equivalent for contact configurations");
  if (a.n() != b.n() || a.m() != b.m()) throw InputError("configurations differ in (n, m)");
  const auto order = detail::equivalence_order(a, group);
  return signature(permute(a, order), group) == signature(permute(b, order), group);
}

inline bool equivalent(const ContactConfig& a, const ContactConfig& b) { return contact_equivalent(a, b); }

}  // namespace jointinv

#endif  // JOINTINV_NORMAL_FORM_HPP
