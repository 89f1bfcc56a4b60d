#ifndef JOINTINV_VARIANTS_HPP
#define JOINTINV_VARIANTS_HPP

#include <string>
#include <utility>
#include <vector>

#include "jointinv/errors.hpp"
#include "jointinv/field_generators.hpp"
#include "jointinv/invariants.hpp"
#include "jointinv/matrix.hpp"
#include "jointinv/signature.hpp"

namespace jointinv {

// ---------------------------------------------------------------------------
// Conformal symplectic group CSp(2n) = Sp(2n) x R_+

/// sign(a12) followed by a_ij / a12 over the basic set without (1, 2).
inline Signature csp_signature(const GramTable& g, std::size_t n) {
  if (g.m() < 2) throw InputError("CSp signature needs at least two points");
  const Rat a12 = g.at(1, 2);
  if (a12 == 0) throw GenericityError("a12 = 0");
  Signature s{Group::CSp, {Rat(sign(a12))}};
  for (const auto& [i, j] : basic_set(g.m(), n).pairs)
    if (!(i == 1 && j == 2)) s.values.push_back(g.at(i, j) / a12);
  return s;
}

// ---------------------------------------------------------------------------
// Affine symplectic group ASp(2n) = Sp(2n) x| R^{2n}

/// Triples (1, j, k), 2 <= j < k <= m, in lexicographic order.
inline std::vector<IndexTuple> asp_triples(std::size_t m) {
  std::vector<IndexTuple> t;
  for (std::size_t j = 2; j <= m; ++j)
    for (std::size_t k = j + 1; k <= m; ++k) t.push_back({1, j, k});
  return t;
}

/// Doubled symplectic areas a_1j + a_jk + a_k1 of the triangles A_1 A_j A_k.
inline std::vector<Rat> asp_invariants(const PointConfig& c) {
  if (c.m() < 3) throw InputError("affine invariants need at least three points");
  const GramTable g = gram(c);
  std::vector<Rat> out;
  for (const auto& t : asp_triples(c.m())) out.push_back(g.at(t[0], t[1]) + g.at(t[1], t[2]) + g.at(t[2], t[0]));
  return out;
}

/// Points A_2 - A_1, ..., A_m - A_1 (A_1 moved to the origin).
inline PointConfig translated_to_first(const PointConfig& c) {
  if (c.m() < 2) throw InputError("affine normalization needs at least two points");
  std::vector<Vector> pts;
  for (std::size_t i = 2; i <= c.m(); ++i) {
    Vector p = c.point(i);
    for (std::size_t k = 0; k < p.size(); ++k) p[k] -= c.point(1)[k];
    pts.push_back(std::move(p));
  }
  return {c.n(), std::move(pts)};
}

// ---------------------------------------------------------------------------
// Contact space R^{2n+1}(x, y, u)

struct ContactPoint {
  Vector x;
  Vector y;
  Rat u;

  friend bool operator==(const ContactPoint&, const ContactPoint&) = default;
};

class ContactConfig {
 public:
  ContactConfig() = default;
  ContactConfig(std::size_t n, std::vector<ContactPoint> points) : n_(n), points_(std::move(points)) {
    if (n_ == 0) throw InputError("half-dimension n must be positive");
    if (points_.empty()) throw InputError("contact configuration needs at least one point");
    for (const auto& p : points_)
      if (p.x.size() != n_ || p.y.size() != n_) throw InputError("contact point x/y must have length n");
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return points_.size(); }
  const ContactPoint& point(std::size_t i) const { return points_.at(i - 1); }
  const std::vector<ContactPoint>& points() const noexcept { return points_; }

  friend bool operator==(const ContactConfig&, const ContactConfig&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ContactPoint> points_;
};

/// GL(2) acting on R^3(x, y, u):
///   (x, y, u) -> (ax + by, cx + dy, det(g)(u - xy/2) + (ax + by)(cx + dy)/2).
inline ContactPoint contact_apply(const Matrix& g, const ContactPoint& p) {
  if (g.rows() != 2 || g.cols() != 2) throw InputError("contact action needs a 2x2 matrix");
  if (p.x.size() != 1) throw InputError("explicit contact action is defined for n = 1");
  const Rat d = det(g);
  if (d == 0) throw InputError("contact action needs an invertible matrix");
  const Rat& x = p.x[0];
  const Rat& y = p.y[0];
  const Rat nx = g(0, 0) * x + g(0, 1) * y;
  const Rat ny = g(1, 0) * x + g(1, 1) * y;
  const Rat nu = d * (p.u - x * y / 2) + nx * ny / 2;
  return {{nx}, {ny}, nu};
}

inline ContactConfig contact_apply(const Matrix& g, const ContactConfig& c) {
  std::vector<ContactPoint> pts;
  for (const auto& p : c.points()) pts.push_back(contact_apply(g, p));
  return {c.n(), std::move(pts)};
}

/// Symplectic M and scaling t > 0 acting on (x, y) as t M, with u chosen so
/// that R = x.y - 2u is multiplied by t^2. For n = 1 and t = 1 this agrees
/// with contact_apply restricted to SL(2).
inline ContactPoint contact_apply_conformal(const Matrix& m, const Rat& t, const ContactPoint& p) {
  const std::size_t n = p.x.size();
  if (m.rows() != 2 * n || m.cols() != 2 * n) throw InputError("contact action dimension mismatch");
  Vector xy(p.x);
  xy.insert(xy.end(), p.y.begin(), p.y.end());
  const Vector img = m * xy;
  ContactPoint q{Vector(img.begin(), img.begin() + static_cast<std::ptrdiff_t>(n)),
                 Vector(img.begin() + static_cast<std::ptrdiff_t>(n), img.end()), 0};
  Rat r = -2 * p.u;
  for (std::size_t k = 0; k < n; ++k) r += p.x[k] * p.y[k];
  Rat dot = 0;
  for (std::size_t k = 0; k < n; ++k) {
    q.x[k] *= t;
    q.y[k] *= t;
    dot += q.x[k] * q.y[k];
  }
  q.u = (dot - t * t * r) / 2;
  return q;
}

inline ContactConfig contact_apply_conformal(const Matrix& m, const Rat& t, const ContactConfig& c) {
  std::vector<ContactPoint> pts;
  for (const auto& p : c.points()) pts.push_back(contact_apply_conformal(m, t, p));
  return {c.n(), std::move(pts)};
}

/// Relative invariants of a common weight.
struct ContactRelative {
  std::vector<Rat> point;  // R_k = x_k.y_k - 2u_k, k = 1..m (stored 0-based)
  GramTable pair;          // R_ij = x_i.y_j - x_j.y_i
};

inline ContactRelative contact_relative(const ContactConfig& c) {
  ContactRelative r{{}, GramTable(c.m())};
  const std::size_t n = c.n();
  for (const auto& p : c.points()) {
    Rat v = -2 * p.u;
    for (std::size_t k = 0; k < n; ++k) v += p.x[k] * p.y[k];
    r.point.push_back(v);
  }
  for (std::size_t i = 1; i <= c.m(); ++i)
    for (std::size_t j = i + 1; j <= c.m(); ++j) {
      Rat v = 0;
      for (std::size_t k = 0; k < n; ++k) v += c.point(i).x[k] * c.point(j).y[k] - c.point(j).x[k] * c.point(i).y[k];
      r.pair.set(i, j, v);
    }
  return r;
}

/// Absolute invariants T_ij = R_ij / R_m as a table; requires R_m != 0.
inline GramTable contact_ratio_table(const ContactConfig& c) {
  const ContactRelative r = contact_relative(c);
  const Rat rm = r.point.back();
  if (rm == 0) throw GenericityError("R_m = 0");
  GramTable t(c.m());
  for (std::size_t i = 1; i <= c.m(); ++i)
    for (std::size_t j = i + 1; j <= c.m(); ++j) t.set(i, j, r.pair.at(i, j) / rm);
  return t;
}

/// n = 1 elimination T_kl = (T_1k T_2l - T_1l T_2k) / T_12.
inline Rat eliminated_contact_ratio(const GramTable& t, std::size_t k, std::size_t l) {
  const Rat t12 = t.at(1, 2);
  if (t12 == 0) throw GenericityError("T12 = 0");
  return (t.at(1, k) * t.at(2, l) - t.at(1, l) * t.at(2, k)) / t12;
}

/// Contact transcendence degree.
inline std::size_t dim_contact(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw InputError("dim_contact needs m >= 1 and n >= 1");
  if (m >= 2 * n) return (2 * n + 1) * m - n * (2 * n + 1) - 1;
  return binomial(m + 1, 2) - 1;
}

/// Reduced generating set {T_k (k < m)} followed by {T_ij : (i, j) in the basic set}.
inline Signature contact_absolute(const ContactConfig& c) {
  const GramTable t = contact_ratio_table(c);
  const ContactRelative r = contact_relative(c);
  auto report = table_genericity(t, c.n());
  if (!report.generic) {
    auto name = report.failed_predicates.front();
    if (name == "a12 = 0") name = "T12 = 0";
    throw GenericityError(name);
  }
  Signature s{Group::Contact, {}};
  for (std::size_t k = 0; k + 1 < c.m(); ++k) s.values.push_back(r.point[k] / r.point.back());
  for (const auto& [i, j] : basic_set(c.m(), c.n()).pairs) s.values.push_back(t.at(i, j));
  return s;
}

namespace detail {

inline ContactConfig rotate_left(const ContactConfig& c) {
  std::vector<ContactPoint> pts(c.points().begin() + 1, c.points().end());
  pts.push_back(c.points().front());
  return {c.n(), std::move(pts)};
}

}  // namespace detail

/// Signature comparison. If R_m vanishes on A, both configurations are
/// rotated once (the first point becomes the last) before giving up.
inline bool contact_equivalent(const ContactConfig& a, const ContactConfig& b) {
  if (a.n() != b.n() || a.m() != b.m()) throw InputError("configurations differ in (n, m)");
  if (contact_relative(a).point.back() == 0 && a.m() > 1)
    return contact_absolute(detail::rotate_left(a)) == contact_absolute(detail::rotate_left(b));
  return contact_absolute(a) == contact_absolute(b);
}

}  // namespace jointinv

#endif  // JOINTINV_VARIANTS_HPP
