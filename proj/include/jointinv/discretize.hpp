#ifndef JOINTINV_DISCRETIZE_HPP
#define JOINTINV_DISCRETIZE_HPP

// Limits from joint invariants to differential invariants, in double
// precision. Every estimator is a function of sampled points only, so the
// sample-level helpers can be fed transformed points directly.

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jointinv/errors.hpp"

namespace jointinv::discrete {

using Vec = std::vector<double>;

// ---------------------------------------------------------------------------
// Test curves and surfaces (closed-form jets)

struct PlanarCurve {
  std::string name;
  std::function<double(double)> y, dy, d2y;
};

/// t -> u(t) in R^{2n}, global order (x^1..x^n, y^1..y^n) with x^1 = t.
struct SpaceCurve {
  std::string name;
  std::size_t n = 1;
  std::function<Vec(double)> point, d1, d2;
};

/// x -> (x, y(x), u(x)) in contact 3-space.
struct ContactCurve {
  std::string name;
  std::function<double(double)> y, dy, d2y, u, du;
};

struct Surface {
  std::string name;
  std::function<double(double, double)> u, ux, uy, uxx, uxy, uyy;
};

inline PlanarCurve planar_curve(const std::string& name) {
  if (name == "parabola")
    return {name, [](double x) { return x * x; }, [](double x) { return 2 * x; }, [](double) { return 2.0; }};
  if (name == "cubic")
    return {name, [](double x) { return x * x * x; }, [](double x) { return 3 * x * x; },
            [](double x) { return 6 * x; }};
  if (name == "trig")  // x^3 + sin x
    return {name, [](double x) { return x * x * x + std::sin(x); }, [](double x) { return 3 * x * x + std::cos(x); },
            [](double x) { return 6 * x - std::sin(x); }};
  if (name == "line") return {name, [](double x) { return x; }, [](double) { return 1.0; }, [](double) { return 0.0; }};
  throw InputError("unknown planar curve '" + name + "' (parabola|cubic|trig|line)");
}

inline SpaceCurve embed(const PlanarCurve& c) {
  return {c.name, 1, [c](double t) { return Vec{t, c.y(t)}; }, [c](double t) { return Vec{1.0, c.dy(t)}; },
          [c](double t) { return Vec{0.0, c.d2y(t)}; }};
}

inline SpaceCurve space_curve(const std::string& name) {
  if (name == "quartic")  // (t, x, y, z) = (t, t^2, t^3, t^4)
    return {name, 2, [](double t) { return Vec{t, t * t, t * t * t, t * t * t * t}; },
            [](double t) { return Vec{1.0, 2 * t, 3 * t * t, 4 * t * t * t}; },
            [](double t) { return Vec{0.0, 2.0, 6 * t, 12 * t * t}; }};
  if (name == "helix")  // (t, cos t, t^2, sin t)
    return {name, 2, [](double t) { return Vec{t, std::cos(t), t * t, std::sin(t)}; },
            [](double t) { return Vec{1.0, -std::sin(t), 2 * t, std::cos(t)}; },
            [](double t) { return Vec{0.0, -std::cos(t), 2.0, -std::sin(t)}; }};
  return embed(planar_curve(name));
}

inline ContactCurve contact_curve(const std::string& name) {
  if (name == "cubic")
    return {name,
            [](double x) { return x * x; },
            [](double x) { return 2 * x; },
            [](double) { return 2.0; },
            [](double x) { return x * x * x; },
            [](double x) { return 3 * x * x; }};
  if (name == "trig")  // y = x^3 + sin x, u = cos x
    return {name,
            [](double x) { return x * x * x + std::sin(x); },
            [](double x) { return 3 * x * x + std::cos(x); },
            [](double x) { return 6 * x - std::sin(x); },
            [](double x) { return std::cos(x); },
            [](double x) { return -std::sin(x); }};
  if (name == "line")  // y = x makes x y' - y vanish
    return {name,
            [](double x) { return x; },
            [](double) { return 1.0; },
            [](double) { return 0.0; },
            [](double x) { return x * x; },
            [](double x) { return 2 * x; }};
  throw InputError("unknown contact curve '" + name + "' (cubic|trig|line)");
}

inline Surface surface(const std::string& name) {
  auto zero = [](double, double) { return 0.0; };
  if (name == "saddle")
    return {name, [](double x, double y) { return x * y; }, [](double, double y) { return y; },
            [](double x, double) { return x; }, zero, [](double, double) { return 1.0; }, zero};
  if (name == "radial")
    return {name, [](double x, double y) { return x * x + y * y; }, [](double x, double) { return 2 * x; },
            [](double, double y) { return 2 * y; }, [](double, double) { return 2.0; }, zero,
            [](double, double) { return 2.0; }};
  if (name == "const") return {name, [](double, double) { return 1.0; }, zero, zero, zero, zero, zero};
  if (name == "wave")  // sin x + x y^2
    return {name,
            [](double x, double y) { return std::sin(x) + x * y * y; },
            [](double x, double y) { return std::cos(x) + y * y; },
            [](double x, double y) { return 2 * x * y; },
            [](double x, double) { return -std::sin(x); },
            [](double, double y) { return 2 * y; },
            [](double x, double) { return 2 * x; }};
  throw InputError("unknown surface '" + name + "' (saddle|radial|const|wave)");
}

// ---------------------------------------------------------------------------
// Sample-level formulas

inline double omega(const Vec& a, const Vec& b) {
  const std::size_t n = a.size() / 2;
  double s = 0;
  for (std::size_t k = 0; k < n; ++k) s += a[k] * b[n + k] - b[k] * a[n + k];
  return s;
}

namespace detail {

inline double nonzero(double v, const char* what) {
  if (v == 0 || !std::isfinite(v)) throw DegenerateError(std::string("degenerate denominator: ") + what);
  return v;
}

inline double finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DegenerateError(std::string("non-finite estimate: ") + what);
  return v;
}

}  // namespace detail

/// (a01 - a02 + a12) / (a01 a02 a12) for three points.
inline double chord_ratio(const Vec& a0, const Vec& a1, const Vec& a2) {
  const double a01 = detail::nonzero(omega(a0, a1), "a01");
  const double a02 = detail::nonzero(omega(a0, a2), "a02");
  const double a12 = detail::nonzero(omega(a1, a2), "a12");
  return detail::finite((a01 - a02 + a12) / (a01 * a02 * a12), "chord ratio");
}

/// Area(A0 A1 A2) / (Area(O A0 A1) Area(O A0 A2) Area(O A1 A2)), with
/// Area(O A B) = omega(A, B) / 2.
inline double area_ratio(const Vec& a0, const Vec& a1, const Vec& a2) { return 4 * chord_ratio(a0, a1, a2); }

/// (A1 - A0) / Area(O A0 A1).
inline Vec chord_over_area(const Vec& a0, const Vec& a1) {
  const double area = detail::nonzero(omega(a0, a1) / 2, "Area(O A0 A1)");
  Vec v(a0.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = (a1[k] - a0[k]) / area;
  return v;
}

/// Contact point (x, y, u) with n = 1.
struct CPoint {
  double x, y, u;
};

inline double contact_r(const CPoint& p) { return p.x * p.y - 2 * p.u; }
inline double contact_r(const CPoint& p, const CPoint& q) { return p.x * q.y - q.x * p.y; }

struct ContactEstimate {
  double i1 = 0;
  double i2 = 0;
  Vec grad;  // (x, y, u) components
};

/// I1 = (R0 - R1)/(2 R01) + 1/2; I2 = 2 R1^2 (R01 + R12 - R02)/(R01 R02 R12);
/// grad = (R1 / R01) (A1 - A0).
inline ContactEstimate contact_from_samples(const CPoint& p0, const CPoint& p1, const CPoint& p2) {
  const double r0 = contact_r(p0);
  const double r1 = contact_r(p1);
  const double r01 = detail::nonzero(contact_r(p0, p1), "R01");
  const double r02 = detail::nonzero(contact_r(p0, p2), "R02");
  const double r12 = detail::nonzero(contact_r(p1, p2), "R12");
  ContactEstimate e;
  e.i1 = detail::finite((r0 - r1) / (2 * r01) + 0.5, "contact I1");
  e.i2 = detail::finite(2 * r1 * r1 * (r01 + r12 - r02) / (r01 * r02 * r12), "contact I2");
  const double s = r1 / r01;
  e.grad = {s * (p1.x - p0.x), s * (p1.y - p0.y), s * (p1.u - p0.u)};
  return e;
}

// ---------------------------------------------------------------------------
// Curve-level estimators and closed-form targets

/// Samples at x - delta, x, x + eps; converges to y'' / (2 (x y' - y)^3).
inline double planar_I2_estimate(const PlanarCurve& c, double x, double delta, double eps) {
  auto pt = [&](double s) { return Vec{s, c.y(s)}; };
  return chord_ratio(pt(x - delta), pt(x), pt(x + eps));
}

inline double planar_I2_target(const PlanarCurve& c, double x) {
  const double w = detail::nonzero(x * c.dy(x) - c.y(x), "x y' - y");
  return c.d2y(x) / (2 * w * w * w);
}

/// t y_t - y + x.z_t - x_t.z, i.e. omega(u, u_t).
inline double space_weight(const SpaceCurve& c, double t) { return omega(c.point(t), c.d1(t)); }

/// Converges to 2 I2.
inline double general_I2_estimate(const SpaceCurve& c, double t, double delta, double eps) {
  return area_ratio(c.point(t - delta), c.point(t), c.point(t + eps));
}

/// 2 I2 = 2 omega(u_t, u_tt) / omega(u, u_t)^3.
inline double general_I2_target(const SpaceCurve& c, double t) {
  const double w = detail::nonzero(space_weight(c, t), "t y_t - y + x z_t - x_t z");
  return 2 * omega(c.d1(t), c.d2(t)) / (w * w * w);
}

/// Converges to 2 u_t / omega(u, u_t), the coordinate form of 2 nabla.
inline Vec derivation_estimate(const SpaceCurve& c, double t, double delta) {
  return chord_over_area(c.point(t - delta), c.point(t));
}

inline Vec derivation_target(const SpaceCurve& c, double t) {
  const double w = detail::nonzero(space_weight(c, t), "t y_t - y + x z_t - x_t z");
  Vec v = c.d1(t);
  for (auto& x : v) x *= 2 / w;
  return v;
}

inline ContactEstimate contact_estimates(const ContactCurve& c, double x, double delta, double eps) {
  auto pt = [&](double s) { return CPoint{s, c.y(s), c.u(s)}; };
  return contact_from_samples(pt(x - delta), pt(x), pt(x + eps));
}

inline ContactEstimate contact_targets(const ContactCurve& c, double x) {
  const double w = detail::nonzero(x * c.dy(x) - c.y(x), "x y_x - y");
  const double r = x * c.y(x) - 2 * c.u(x);
  return {(c.du(x) - c.y(x)) / w, r * r * c.d2y(x) / (w * w * w), {r / w, r / w * c.dy(x), r / w * c.du(x)}};
}

struct FunctionEstimate {
  double i1 = 0;
  Vec grad1;  // x D_x + y D_y as (D_x, D_y) components
  Vec grad2;  // u_x D_y - u_y D_x as (D_x, D_y) components
  double i2c = 0;
};

/// Sample directions for A0 = A1 + delta p and A2 = A1 + eps q.
inline constexpr double kFunctionP[2] = {-1.0, -0.375};
inline constexpr double kFunctionQ[2] = {0.25, 1.0};

inline FunctionEstimate function_estimates(const Surface& s, double x, double y, double delta, double eps) {
  const Vec a1{x, y};
  const Vec a0{x + delta * kFunctionP[0], y + delta * kFunctionP[1]};
  const Vec a2{x + eps * kFunctionQ[0], y + eps * kFunctionQ[1]};
  const double u0 = s.u(a0[0], a0[1]);
  const double u1 = s.u(x, y);
  const double u2 = s.u(a2[0], a2[1]);
  const double a01 = detail::nonzero(omega(a0, a1), "a01");
  const double a02 = omega(a0, a2);
  const double a12 = omega(a1, a2);
  FunctionEstimate e;
  e.i1 = detail::finite((a01 * (u1 - u2) + a12 * (u1 - u0)) / detail::nonzero(a01 - a02 + a12, "a01 - a02 + a12"),
                        "function I1");
  e.grad1 = a1;
  e.grad2 = {e.i1 / a01 * (a1[0] - a0[0]) - (u1 - u0) / a01 * x, e.i1 / a01 * (a1[1] - a0[1]) - (u1 - u0) / a01 * y};

  // Constrained sample along nabla_2 with the closed-form gradient.
  const double ux = s.ux(x, y);
  const double uy = s.uy(x, y);
  if (ux == 0 && uy == 0) {
    e.i2c = 0;
    return e;
  }
  const Vec c0{x + eps * uy, y - eps * ux};
  const double c01 = detail::nonzero(omega(c0, a1), "a01 along nabla_2");
  const double i1 = detail::nonzero(c01 / eps, "I1");
  e.i2c = detail::finite(2 * i1 * i1 * (s.u(c0[0], c0[1]) - u1) / (c01 * c01), "I2c");
  return e;
}

inline FunctionEstimate function_targets(const Surface& s, double x, double y) {
  const double ux = s.ux(x, y);
  const double uy = s.uy(x, y);
  return {x * ux + y * uy, {x, y}, {-uy, ux},
          ux * ux * s.uyy(x, y) - 2 * ux * uy * s.uxy(x, y) + uy * uy * s.uxx(x, y)};
}

// ---------------------------------------------------------------------------
// Convergence

inline std::vector<double> default_steps() { return {1e-1, 5e-2, 2.5e-2, 1.25e-2, 6.25e-3}; }

struct ConvergenceReport {
  std::vector<double> steps;
  std::vector<Vec> estimates;
  Vec target;
  std::vector<double> errors;  // max-norm deviation from the target
  std::optional<double> order; // empty when every error is at rounding level
  bool exact = false;
  double final_relative_error = 0;

  bool pass(double min_order = 0.9) const { return exact || (order && *order >= min_order); }
};

inline void validate_steps(const std::vector<double>& steps) {
  if (steps.size() < 4) throw InputError("convergence needs at least 4 step sizes");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!(steps[i] > 0) || !std::isfinite(steps[i])) throw InputError("step sizes must be positive");
    if (i > 0 && steps[i - 1] / steps[i] < 2 - 1e-12) throw InputError("consecutive step ratio must be at least 2");
  }
}

/// Least-squares slope of log(error) against log(h).
inline ConvergenceReport convergence_order(const std::function<Vec(double)>& estimator, const Vec& target,
                                           const std::vector<double>& steps = default_steps()) {
  validate_steps(steps);
  ConvergenceReport r;
  r.steps = steps;
  r.target = target;
  double scale = 1;
  for (double t : target) scale = std::max(scale, std::abs(t));
  for (double h : steps) {
    Vec est = estimator(h);
    if (est.size() != target.size()) throw InputError("estimate and target differ in length");
    double err = 0;
    for (std::size_t k = 0; k < est.size(); ++k) {
      if (!std::isfinite(est[k])) throw DegenerateError("non-finite estimate at h = " + std::to_string(h));
      err = std::max(err, std::abs(est[k] - target[k]));
    }
    r.estimates.push_back(std::move(est));
    r.errors.push_back(err);
  }
  double tnorm = 0;
  for (double t : target) tnorm = std::max(tnorm, std::abs(t));
  r.final_relative_error = tnorm > 0 ? r.errors.back() / tnorm : r.errors.back();

  const double noise = 1e-9 * scale;  // cancellation in difference quotients
  if (std::all_of(r.errors.begin(), r.errors.end(), [&](double e) { return e <= noise; })) {
    r.exact = true;
    return r;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t cnt = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (r.errors[i] <= noise) continue;
    const double lx = std::log(steps[i]);
    const double ly = std::log(r.errors[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++cnt;
  }
  if (cnt >= 2) r.order = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  return r;
}

inline ConvergenceReport convergence_order(const std::function<double(double)>& estimator, double target,
                                           const std::vector<double>& steps = default_steps()) {
  return convergence_order([&](double h) { return Vec{estimator(h)}; }, Vec{target}, steps);
}

}  // namespace jointinv::discrete

#endif  // JOINTINV_DISCRETIZE_HPP
