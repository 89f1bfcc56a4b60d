#ifndef JOINTINV_SYMMETRIC_HPP
#define JOINTINV_SYMMETRIC_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "jointinv/errors.hpp"
#include "jointinv/field_generators.hpp"
#include "jointinv/invariants.hpp"
#include "jointinv/matrix.hpp"
#include "jointinv/poly.hpp"

namespace jointinv {

/// Pairwise variables a_ij, 1 <= i < j <= m, in increasing VarId order.
inline std::vector<VarId> pairwise_vars(std::size_t m) {
  std::vector<VarId> vars;
  for (std::uint32_t i = 1; i <= m; ++i)
    for (std::uint32_t j = i + 1; j <= m; ++j) vars.push_back(VarId::pairwise(i, j));
  return vars;
}

/// All permutations of 1..m (perm[i-1] = sigma(i)).
inline std::vector<std::vector<std::size_t>> all_permutations(std::size_t m) {
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// sigma . mono with sigma . a_ij = a_{sigma(i) sigma(j)}, renormalized to
/// ascending indices. Returns the accumulated sign and the new monomial.
inline std::pair<int, Monomial> act(const std::vector<std::size_t>& sigma, const Monomial& mono) {
  int sgn = 1;
  Monomial out;
  for (const auto& [v, e] : mono) {
    if (v.kind != VarId::Kind::Pairwise) {
      out.emplace_back(v, e);
      continue;
    }
    if (v.j > sigma.size()) throw InputError("variable " + v.str() + " outside S_m index range");
    auto i = static_cast<std::uint32_t>(sigma[v.i - 1]);
    auto j = static_cast<std::uint32_t>(sigma[v.j - 1]);
    if (i > j) {
      std::swap(i, j);
      if (e % 2 == 1) sgn = -sgn;
    }
    out.emplace_back(VarId::pairwise(i, j), e);
  }
  std::sort(out.begin(), out.end());
  return {sgn, out};
}

inline MultiPoly act(const std::vector<std::size_t>& sigma, const MultiPoly& p) {
  MultiPoly out;
  for (const auto& [mono, c] : p.terms()) {
    auto [s, image] = act(sigma, mono);
    out.add_term(image, s > 0 ? c : Rat(-c));
  }
  return out;
}

/// Reynolds operator of S_m: pi(f) = (1/m!) sum_sigma sigma . f.
inline MultiPoly reynolds(const MultiPoly& p, std::size_t m) {
  if (m > 8) throw CostGuardError("reynolds: m > 8");
  const auto perms = all_permutations(m);
  MultiPoly out;
  for (const auto& sigma : perms) out += act(sigma, p);
  return out * Rat(1, static_cast<unsigned long>(perms.size()));
}

/// Monomials of total degree k in `vars`, in decreasing lex order.
inline std::vector<Monomial> monomials_of_degree(const std::vector<VarId>& vars, unsigned k) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned left) {
    if (v == vars.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      if (e > 0) cur.emplace_back(vars[v], e);
      rec(v + 1, left - e);
      if (e > 0) cur.pop_back();
    }
  };
  rec(0, k);
  return out;
}

/// A symmetrized monomial pi(a^sigma), stored with content 1.
struct SymmetrizedMonomial {
  Monomial monomial;  // lex-largest representative of its S_m orbit
  MultiPoly poly;
  unsigned degree = 0;
};

/// Nonzero pi(a^sigma) of degree k, one per S_m orbit, in decreasing lex
/// order of the orbit representative.
inline std::vector<SymmetrizedMonomial> symmetrized_monomials(std::size_t m, unsigned k) {
  const auto perms = all_permutations(m);
  std::set<Monomial> seen;
  std::vector<SymmetrizedMonomial> out;
  for (const auto& mono : monomials_of_degree(pairwise_vars(m), k)) {
    if (seen.count(mono)) continue;
    MultiPoly sum;
    for (const auto& sigma : perms) {
      auto [s, image] = act(sigma, mono);
      seen.insert(image);
      sum.add_term(image, Rat(s));
    }
    if (!sum.is_zero()) out.push_back({mono, primitive_part(sum), k});
  }
  return out;
}

namespace detail {

/// Random configurations in R^{2n} with integer coordinates in [-20, 20].
inline std::vector<GramTable> sample_tables(std::size_t count, std::size_t m, std::size_t n, std::mt19937_64& rng) {
  std::vector<GramTable> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) out.push_back(gram(random_config(m, n, rng, 20)));
  return out;
}

inline Matrix evaluation_matrix(const std::vector<MultiPoly>& polys, const std::vector<GramTable>& samples) {
  Matrix e(samples.size(), polys.size());
  for (std::size_t s = 0; s < samples.size(); ++s)
    for (std::size_t p = 0; p < polys.size(); ++p) e(s, p) = evaluate(polys[p], samples[s]);
  return e;
}

}  // namespace detail

/// Dimension of the degree-k piece of pi(A^m) over R^{2n}: exact rank of the
/// evaluation matrix of all symmetrized degree-k monomials at random
/// configurations (max over three independent sample sets).
inline std::size_t graded_dim(std::size_t m, std::size_t n, unsigned k, std::uint64_t seed = 1) {
  if (m > 4 || k > 10) throw CostGuardError("graded_dim supports m <= 4 and k <= 10");
  if (m < 1 || n < 1) throw InputError("graded_dim needs m >= 1 and n >= 1");
  if (k == 0) return 1;
  const auto cands = symmetrized_monomials(m, k);
  if (cands.empty()) return 0;
  std::vector<MultiPoly> polys;
  for (const auto& c : cands) polys.push_back(c.poly);
  std::mt19937_64 rng(seed);
  std::size_t best = 0;
  for (int set = 0; set < 3; ++set) {
    const auto samples = detail::sample_tables(polys.size() + 5, m, n, rng);
    best = std::max(best, rank(detail::evaluation_matrix(polys, samples)));
    if (best == polys.size()) break;
  }
  return best;
}

/// Taylor coefficients of (1 + z^4) / ((1 - z^2)^2 (1 - z^3)).
inline std::vector<long> poincare_coeffs(std::size_t maxdeg) {
  std::vector<long> c(maxdeg + 1, 0);
  c[0] = 1;
  if (maxdeg >= 4) c[4] = 1;
  auto divide = [&](std::size_t step) {  // multiply by 1/(1 - z^step)
    for (std::size_t i = step; i <= maxdeg; ++i) c[i] += c[i - step];
  };
  divide(2);
  divide(2);
  divide(3);
  return c;
}

struct NamedGenerators {
  MultiPoly i2a;
  MultiPoly i2b;
  MultiPoly i3;
  MultiPoly i4;
};

/// Generators of the S_3-symmetric invariants (m = 3).
inline NamedGenerators named_generators() {
  const MultiPoly a12 = pair_var(1, 2);
  const MultiPoly a13 = pair_var(1, 3);
  const MultiPoly a23 = pair_var(2, 3);
  return {
      a12 * a12 + a13 * a13 + a23 * a23,
      a12 * a13 - a12 * a23 + a13 * a23,
      a12 * a12 * (a13 + a23) - a23 * a23 * (a12 + a13) + a13 * a13 * (a12 - a23),
      a12 * a12 * a13 * a13 + a12 * a12 * a23 * a23 + a13 * a13 * a23 * a23,
  };
}

/// R8 with the I4^2 coefficient as a parameter (27 gives the true syzygy).
inline MultiPoly r8_polynomial(long i4_square_coeff = 27) {
  const auto [a, b, c, d] = named_generators();
  const Rat k(i4_square_coeff);
  return (Rat(4) * a * a + Rat(4) * a * b + Rat(3) * b * b) * b * b -
         (Rat(8) * a * a + Rat(4) * a * b + Rat(14) * b * b) * d + Rat(4) * (a - Rat(2) * b) * c * c +
         k * d * d;
}

inline bool verify_R8() { return r8_polynomial().is_zero(); }

struct QSequenceReport {
  std::vector<MultiPoly> q;  // q_k = pi(prod_{l <= k} a_l^2), content 1
  std::size_t d = 0;
  std::size_t jacobian_rank = 0;
};

/// q_1..q_d over the basic-set ordering of pairs, with the exact Jacobian
/// rank at random configurations (max of three).
inline QSequenceReport q_sequence(std::size_t m, std::size_t n, std::uint64_t seed = 1) {
  if (m > 5 || n > 2) throw CostGuardError("q_sequence supports m <= 5 and n <= 2");
  if (m < 2 || n < 1) throw InputError("q_sequence needs m >= 2 and n >= 1");
  QSequenceReport r;
  r.d = dim_d(m, n);
  MultiPoly prod(1);
  const auto pairs = basic_set(m, n).pairs;
  for (std::size_t k = 0; k < r.d; ++k) {
    const auto [i, j] = pairs[k];
    prod = prod * pair_var(i, j).pow(2);
    r.q.push_back(primitive_part(reynolds(prod, m)));
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < 3; ++s)
    r.jacobian_rank = std::max(r.jacobian_rank, rank(polynomial_jacobian(r.q, random_config(m, n, rng, 9))));
  return r;
}

struct GeneratorSearchResult {
  std::vector<SymmetrizedMonomial> kept;
  std::vector<std::size_t> graded_dims;   // span of all symmetrized monomials, degree 0..maxdeg
  std::vector<std::size_t> product_dims;  // span of products of the final kept generators, degree 0..maxdeg
  bool saturated() const { return graded_dims == product_dims; }
};

namespace detail {

/// Every multiset of generators (by index) whose degrees sum to `k`.
inline void products_of_degree(const std::vector<SymmetrizedMonomial>& gens, unsigned k, std::size_t from,
                               std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t g = from; g < gens.size(); ++g) {
    if (gens[g].degree > k) continue;
    cur.push_back(g);
    products_of_degree(gens, k - gens[g].degree, g, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Degree-truncated generator search: scans pi(a^sigma) by increasing degree
/// (decreasing lex within a degree) and keeps those outside the linear span
/// of products of the generators kept so far. Spans are decided by exact
/// evaluation rank over three independent sample sets.
inline GeneratorSearchResult generator_search(std::size_t m, std::size_t n, unsigned maxdeg, std::uint64_t seed = 1) {
  if (m > 3 || maxdeg > 8) throw CostGuardError("generator_search supports m <= 3 and maxdeg <= 8");
  if (m < 2 || n < 1) throw InputError("generator_search needs m >= 2 and n >= 1");
  GeneratorSearchResult res;
  res.graded_dims.push_back(1);
  res.product_dims.push_back(1);
  std::mt19937_64 rng(seed);

  for (unsigned k = 1; k <= maxdeg; ++k) {
    const auto cands = symmetrized_monomials(m, k);
    const std::size_t nsamples = monomials_of_degree(pairwise_vars(m), k).size() + 5;
    std::vector<std::vector<GramTable>> sets;
    for (int s = 0; s < 3; ++s) sets.push_back(detail::sample_tables(nsamples, m, n, rng));

    // Columns: values of the current spanning family at every sample of every set.
    std::vector<Matrix> span(3, Matrix(nsamples, 0));
    auto append = [](const Matrix& a, const Vector& col) {
      Matrix out(a.rows(), a.cols() + 1);
      for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
        out(r, a.cols()) = col[r];
      }
      return out;
    };
    auto values = [&](const MultiPoly& p, int s) {
      Vector v;
      for (const auto& g : sets[s]) v.push_back(evaluate(p, g));
      return v;
    };

    std::vector<std::vector<std::size_t>> prods;
    std::vector<std::size_t> cur;
    detail::products_of_degree(res.kept, k, 0, cur, prods);
    std::vector<Vector> gen_vals[3];
    for (int s = 0; s < 3; ++s)
      for (const auto& g : res.kept) gen_vals[s].push_back(values(g.poly, s));
    for (const auto& prod : prods)
      for (int s = 0; s < 3; ++s) {
        Vector v(nsamples, Rat(1));
        for (auto g : prod)
          for (std::size_t r = 0; r < nsamples; ++r) v[r] *= gen_vals[s][g][r];
        span[s] = append(span[s], v);
      }
    std::size_t current = 0;
    for (int s = 0; s < 3; ++s) current = std::max(current, rank(span[s]));

    for (const auto& cand : cands) {
      std::vector<Matrix> trial(3);
      std::size_t best = 0;
      for (int s = 0; s < 3; ++s) {
        trial[s] = append(span[s], values(cand.poly, s));
        best = std::max(best, rank(trial[s]));
      }
      if (best > current) {
        res.kept.push_back(cand);
        span = std::move(trial);
        current = best;
      }
    }
    res.product_dims.push_back(current);

    std::size_t full = 0;
    for (int s = 0; s < 3; ++s) {
      Matrix all(nsamples, 0);
      for (const auto& cand : cands) all = append(all, values(cand.poly, s));
      full = std::max(full, rank(all));
    }
    res.graded_dims.push_back(full);
  }
  return res;
}

}  // namespace jointinv

#endif  // JOINTINV_SYMMETRIC_HPP
