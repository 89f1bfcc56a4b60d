// Acceptance run: one PASS/FAIL line per criterion. Each check is exact
// unless it is a floating-point convergence fit; time limits are wall clock.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "jointinv/discretize.hpp"
#include "jointinv/field_generators.hpp"
#include "jointinv/identities.hpp"
#include "jointinv/normal_form.hpp"
#include "jointinv/symmetric.hpp"
#include "jointinv/symplectic.hpp"
#include "jointinv/variants.hpp"
#include "oracles.hpp"

using namespace jointinv;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

PointConfig generic_config(std::size_t m, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    PointConfig c = oracle::random_points(m, n, rng);
    if (genericity(c).generic) return c;
  }
}

ContactConfig random_contact(std::size_t m, std::size_t n, std::mt19937_64& rng) {
  std::vector<ContactPoint> pts;
  for (std::size_t i = 0; i < m; ++i) {
    ContactPoint p{Vector(n), Vector(n), oracle::small_rat(rng)};
    for (auto& v : p.x) v = oracle::small_rat(rng);
    for (auto& v : p.y) v = oracle::small_rat(rng);
    pts.push_back(p);
  }
  return {n, pts};
}

ContactConfig generic_contact(std::size_t m, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    ContactConfig c = random_contact(m, n, rng);
    try {
      contact_absolute(c);
      return c;
    } catch (const GenericityError&) {
    }
  }
}

Matrix invertible_2x2(std::mt19937_64& rng) {
  while (true) {
    Matrix g = oracle::random_matrix(2, 2, rng, 5);
    if (det(g) != 0) return g;
  }
}

PointConfig bump(const PointConfig& c) {
  std::vector<Vector> pts = c.points();
  pts.back()[0] += 1;
  return {c.n(), pts};
}

// 1. Pfaffian kernel
Outcome pfaffian_kernel() {
  Outcome o;
  std::mt19937_64 rng(1001);
  int count = 0;
  for (std::size_t dim = 2; dim <= 8; dim += 2)
    for (int t = 0; t < 15; ++t, ++count) {
      const SkewMatrix s = oracle::random_skew(dim, rng);
      const Rat pf = pfaffian(s);
      o.require(pf * pf == det(s.matrix()), "Pf^2 != det at dim " + std::to_string(dim));
      const Matrix tm = oracle::random_matrix(dim, dim, rng, 3);
      const SkewMatrix tst(tm * s.matrix() * tm.transpose());
      o.require(pfaffian(tst) == det(tm) * pf, "congruence rule fails at dim " + std::to_string(dim));
    }
  if (o.ok) o.detail = std::to_string(count) + " matrices";
  return o;
}

// 2. Invariance
Outcome invariance() {
  Outcome o;
  std::mt19937_64 rng(1002);
  int count = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 1; m <= 7; ++m)
      for (int t = 0; t < 5; ++t, ++count) {
        const PointConfig c = oracle::random_points(m, n, rng);
        const Matrix sm = random_symplectic(n, 4, rng());
        o.require(is_symplectic(sm), "generated map is not symplectic");
        o.require(gram(transform(sm, c)) == gram(c), "gram changed under a symplectic map");
      }
  if (o.ok) o.detail = std::to_string(count) + " pairs";
  return o;
}

// 3. Syzygy vanishing
Outcome syzygy_vanishing() {
  Outcome o;
  std::mt19937_64 rng(1003);
  std::size_t checked = 0;
  const std::pair<std::size_t, std::size_t> cases[] = {{1, 4}, {1, 5}, {1, 6}, {2, 6}, {2, 7}};
  for (const auto& [n, m] : cases)
    for (int t = 0; t < 3; ++t)
      for (const auto& [idx, v] : all_min_syzygies(oracle::random_points(m, n, rng))) {
        ++checked;
        o.require(v == 0, "nonzero b on points, n=" + std::to_string(n) + " m=" + std::to_string(m));
      }
  for (std::size_t n = 1; n <= 2; ++n) {
    const std::size_t m = 4 * n + 2;
    for (int t = 0; t < 3; ++t) {
      const GramTable g = gram(oracle::random_points(m, n, rng));
      for_each_subset(m, 4 * n + 2, [&](const IndexTuple& idx) {
        ++checked;
        o.require(q_value(g, idx) == 0, "nonzero q on points, n=" + std::to_string(n));
      });
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " values";
  return o;
}

// 4. Symbolic identities
Outcome symbolic_identities() {
  Outcome o;
  for (const auto& r : identity_suite()) o.require(r.holds, r.name + " fails");
  if (o.ok) o.detail = "6 identities";
  return o;
}

// 5. Dimensions
Outcome dimensions() {
  Outcome o;
  o.require(dim_d(4, 1) == 5 && dim_d(5, 1) == 7, "d(4,1) or d(5,1)");
  for (std::size_t m = 2; m <= 8; ++m) o.require(dim_d(m, 1) == 2 * m - 3, "d(m,1) != 2m-3");
  for (std::size_t n = 1; n <= 4; ++n)
    o.require(2 * n * 2 * n - n * (2 * n + 1) == binomial(2 * n, 2), "boundary m = 2n inconsistent");
  for (std::size_t n = 1; n <= 2; ++n)
    for (std::size_t m = 1; m <= 6; ++m)
      o.require(generic_jacobian_rank(m, n, 50 + m) == dim_d(m, n),
                "jacobian rank != d at m=" + std::to_string(m) + " n=" + std::to_string(n));
  std::mt19937_64 rng(1005);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t k = 1; k <= 2 * n; ++k)
      o.require(stabilizer_dim(oracle::random_points(k, n, rng).points(), n) == binomial(2 * n - k + 1, 2),
                "stabilizer dimension at n=" + std::to_string(n) + " k=" + std::to_string(k));
  for (std::size_t n = 1; n <= 3; ++n)
    o.require(stabilizer_dim({}, n) == binomial(2 * n + 1, 2), "stabilizer of the empty tuple");
  return o;
}

// 6. Elimination
Outcome elimination() {
  Outcome o;
  std::mt19937_64 rng(1006);
  for (int t = 0; t < 20; ++t) {
    const GramTable f = oracle::random_table(4, rng);
    if (f.at(1, 2) == 0) continue;
    o.require(eliminate_entry(f, 1, 3, 4) == (f.at(1, 3) * f.at(2, 4) - f.at(1, 4) * f.at(2, 3)) / f.at(1, 2),
              "a34 closed form");
    const GramTable g1 = gram(generic_config(4, 1, rng));
    o.require(eliminate_entry(g1, 1, 3, 4) == g1.at(3, 4), "a34 disagrees with gram");

    const GramTable g = gram(generic_config(6, 2, rng));
    auto a = [&](std::size_t i, std::size_t j) { return g.at(i, j); };
    const Rat num = a(1, 2) * a(3, 5) * a(4, 6) - a(1, 2) * a(3, 6) * a(4, 5) - a(1, 3) * a(2, 5) * a(4, 6) +
                    a(1, 3) * a(2, 6) * a(4, 5) + a(1, 4) * a(2, 5) * a(3, 6) - a(1, 4) * a(2, 6) * a(3, 5) +
                    a(1, 5) * a(2, 3) * a(4, 6) - a(1, 5) * a(2, 4) * a(3, 6) + a(1, 5) * a(2, 6) * a(3, 4) -
                    a(1, 6) * a(2, 3) * a(4, 5) + a(1, 6) * a(2, 4) * a(3, 5) - a(1, 6) * a(2, 5) * a(3, 4);
    const Rat den = a(1, 2) * a(3, 4) - a(1, 3) * a(2, 4) + a(1, 4) * a(2, 3);
    o.require(eliminate_entry(g, 2, 5, 6) == num / den, "a56 closed form");
    o.require(eliminate_entry(g, 2, 5, 6) == g.at(5, 6), "a56 disagrees with gram");
  }
  return o;
}

// 7. Equivalence round-trips
Outcome equivalence() {
  Outcome o;
  std::mt19937_64 rng(1007);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + t % 2;
    const std::size_t m = 2 * n + 1 + t % 3;
    const PointConfig a = generic_config(m, n, rng);
    const Matrix sm = random_symplectic(n, 4, rng());
    const PointConfig b = transform(sm, a);
    o.require(equivalent(a, b, Group::Sp), "Sp rejects an image");
    o.require(!equivalent(a, bump(b), Group::Sp), "Sp accepts a perturbation");
    const Matrix w = recover_transform(a, b);
    o.require(is_symplectic(w) && transform(w, a) == b, "Sp witness does not verify");

    const PointConfig bc = scale(b, Rat(static_cast<long>(1 + t % 4), 3));
    o.require(equivalent(a, bc, Group::CSp), "CSp rejects an image");
    o.require(!equivalent(a, bump(bc), Group::CSp), "CSp accepts a perturbation");

    Vector shift(2 * n);
    for (auto& x : shift) x = oracle::small_rat(rng);
    const PointConfig ba = translate(b, shift);
    o.require(equivalent(a, ba, Group::ASp), "ASp rejects an image");
    o.require(!equivalent(a, bump(ba), Group::ASp), "ASp accepts a perturbation");

    const ContactConfig ca = generic_contact(3 + t % 3, 1, rng);
    const ContactConfig cb = contact_apply(invertible_2x2(rng), ca);
    o.require(contact_equivalent(ca, cb), "contact rejects an image");
    std::vector<ContactPoint> pts = cb.points();
    pts.back().u += 1;
    o.require(!contact_equivalent(ca, ContactConfig(1, pts)), "contact accepts a perturbation");
  }
  if (o.ok) o.detail = "50 round-trips per group";
  return o;
}

// 8. Symmetric algebra
Outcome symmetric_algebra() {
  Outcome o;
  const std::vector<long> expect{1, 0, 2, 1, 4, 2, 7, 4, 10};
  o.require(poincare_coeffs(8) == expect, "Poincare coefficients");
  for (unsigned k = 0; k <= 8; ++k)
    o.require(graded_dim(3, 1, k) == static_cast<std::size_t>(expect[k]), "graded_dim at k=" + std::to_string(k));
  o.require(verify_R8(), "R8 does not vanish");
  const auto res = generator_search(3, 1, 8);
  std::vector<unsigned> degrees;
  for (const auto& g : res.kept) degrees.push_back(g.degree);
  o.require(degrees == std::vector<unsigned>{2, 2, 3, 4}, "generator degrees");
  o.require(q_sequence(3, 1).jacobian_rank == dim_d(3, 1), "q_sequence rank (3,1)");
  o.require(q_sequence(4, 1).jacobian_rank == dim_d(4, 1), "q_sequence rank (4,1)");
  return o;
}

// 9. Contact action
Outcome contact_action() {
  Outcome o;
  std::mt19937_64 rng(1009);
  for (int t = 0; t < 50; ++t) {
    const ContactConfig c = random_contact(4, 1, rng);
    const Matrix g = invertible_2x2(rng);
    const Matrix h = invertible_2x2(rng);
    o.require(contact_apply(g, contact_apply(h, c)) == contact_apply(g * h, c), "group law");
    o.require(contact_apply(Matrix::identity(2), c) == c, "identity acts trivially");
    const ContactRelative r0 = contact_relative(c);
    const ContactRelative r1 = contact_relative(contact_apply(g, c));
    const Rat d = det(g);
    for (std::size_t k = 0; k < 4; ++k) o.require(r1.point[k] == d * r0.point[k], "R_k weight");
    for (std::size_t i = 1; i <= 4; ++i)
      for (std::size_t j = i + 1; j <= 4; ++j) o.require(r1.pair.at(i, j) == d * r0.pair.at(i, j), "R_ij weight");
  }
  for (std::size_t m = 2; m <= 6; ++m)
    o.require(contact_absolute(generic_contact(m, 1, rng)).values.size() == 3 * m - 4,
              "cardinality at m=" + std::to_string(m));
  o.require(contact_absolute(generic_contact(5, 2, rng)).values.size() == 5 * 5 - 2 * 5 - 1, "cardinality (5,2)");
  return o;
}

// 10. Discretization
Outcome discretization() {
  using namespace discrete;
  Outcome o;
  std::string orders;
  auto check = [&](const std::string& name, const ConvergenceReport& r) {
    o.require(r.pass(0.9), name + " order below 0.9");
    orders += name + "=" + (r.exact ? std::string("exact") : r.order ? std::to_string(*r.order).substr(0, 4) : "?") +
              " ";
  };
  const PlanarCurve p = planar_curve("parabola");
  const auto planar = convergence_order([&](double h) { return planar_I2_estimate(p, 1, h, h); }, 1.0);
  check("planar", planar);
  o.require(planar_I2_target(p, 1) == 1.0, "planar target is not 1");
  o.require(planar.steps.back() == 6.25e-3 && planar.final_relative_error <= 1e-3, "planar final relative error");

  const SpaceCurve q = space_curve("quartic");
  check("general", convergence_order([&](double h) { return general_I2_estimate(q, 1, h, h); },
                                     general_I2_target(q, 1)));
  check("derivation",
        convergence_order([&](double h) { return derivation_estimate(q, 1, h); }, derivation_target(q, 1)));

  const ContactCurve cc = contact_curve("cubic");
  const ContactEstimate ct = contact_targets(cc, 1);
  check("contact-I1", convergence_order([&](double h) { return contact_estimates(cc, 1, h, h).i1; }, ct.i1));
  check("contact-I2", convergence_order([&](double h) { return contact_estimates(cc, 1, h, h).i2; }, ct.i2));
  check("contact-grad", convergence_order([&](double h) { return contact_estimates(cc, 1, h, h).grad; }, ct.grad));

  const Surface w = surface("wave");
  const FunctionEstimate ft = function_targets(w, 1, 2);
  check("function-I1", convergence_order([&](double h) { return function_estimates(w, 1, 2, h, h).i1; }, ft.i1));
  check("function-grad2",
        convergence_order([&](double h) { return function_estimates(w, 1, 2, h, h).grad2; }, ft.grad2));
  check("function-I2c", convergence_order([&](double h) { return function_estimates(w, 1, 2, h, h).i2c; }, ft.i2c));
  if (o.ok) o.detail = orders;
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "pfaffian kernel", 10, pfaffian_kernel},
      {2, "invariance", 10, invariance},
      {3, "syzygy vanishing", 0, syzygy_vanishing},
      {4, "symbolic identities", 60, symbolic_identities},
      {5, "dimensions", 0, dimensions},
      {6, "elimination", 0, elimination},
      {7, "equivalence", 30, equivalence},
      {8, "symmetric algebra", 120, symmetric_algebra},
      {9, "contact action", 0, contact_action},
      {10, "discretization", 5, discretization},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_s == 0 || secs < c.limit_s;
    if (!in_time && o.ok) o.detail = "time limit exceeded";
    const bool pass = o.ok && in_time;
    failures += !pass;
    std::printf("%s  %2d %-20s %7.2fs", pass ? "PASS" : "FAIL", c.id, c.name, secs);
    if (c.limit_s > 0) std::printf(" (limit %.0fs)", c.limit_s);
    if (!o.detail.empty()) std::printf("  %s", o.detail.c_str());
    std::printf("\n");
  }
  return failures == 0 ? 0 : 1;
}
