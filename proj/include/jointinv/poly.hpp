#ifndef JOINTINV_POLY_HPP
#define JOINTINV_POLY_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "jointinv/errors.hpp"
#include "jointinv/invariants.hpp"
#include "jointinv/rational.hpp"

namespace jointinv {

/// Polynomial variable. Ordered lexicographically on (kind, i, j, name), so
/// a12 < a13 < a14 < a23 < ... and the lex monomial order treats the
/// smallest id as the largest variable (a12 > a13 > a23).
struct VarId {
  enum class Kind : std::uint8_t { Pairwise, ContactPoint, Auxiliary };

  Kind kind = Kind::Pairwise;
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::string name;

  static VarId pairwise(std::uint32_t i, std::uint32_t j) {
    if (i >= j) throw InputError("pairwise variable needs i < j");
    return {Kind::Pairwise, i, j, {}};
  }
  static VarId contact_point(std::uint32_t k) { return {Kind::ContactPoint, k, 0, {}}; }
  static VarId auxiliary(std::string name) { return {Kind::Auxiliary, 0, 0, std::move(name)}; }

  auto operator<=>(const VarId&) const = default;
  bool operator==(const VarId&) const = default;

  std::string str() const {
    switch (kind) {
      case Kind::Pairwise:
        return "a" + std::to_string(i) + (i > 9 || j > 9 ? "_" : "") + std::to_string(j);
      case Kind::ContactPoint:
        return "R" + std::to_string(i);
      case Kind::Auxiliary:
        return name;
    }
    return {};
  }
};

/// Sorted (variable, exponent) list with positive exponents.
using Monomial = std::vector<std::pair<VarId, unsigned>>;

inline unsigned total_degree(const Monomial& mono) {
  unsigned d = 0;
  for (const auto& [v, e] : mono) d += e;
  return d;
}

inline Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      out.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

/// Lexicographic monomial order: compares exponents variable by variable,
/// starting from the largest variable (smallest VarId).
inline bool lex_greater(const Monomial& a, const Monomial& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return ia != a.end();
}

/// Sparse multivariate polynomial with exact rational coefficients. No zero
/// coefficient is ever stored, so structural equality is polynomial equality.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rat>;

  MultiPoly() = default;
  MultiPoly(int c) : MultiPoly(Rat(c)) {}  // NOLINT: ring literal
  MultiPoly(const Rat& c) {                // NOLINT
    if (c != 0) terms_.emplace(Monomial{}, c);
  }
  MultiPoly(const VarId& v) { terms_.emplace(Monomial{{v, 1u}}, Rat(1)); }  // NOLINT

  static MultiPoly term(const Monomial& mono, const Rat& c) {
    MultiPoly p;
    if (c != 0) p.terms_.emplace(mono, c);
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rat coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const Monomial& mono, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, total_degree(mono));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = total_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return total_degree(t.first) == d; });
  }

  /// Leading monomial in the lex order; requires a nonzero polynomial.
  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw InputError("zero polynomial has no leading monomial");
    const Monomial* best = &terms_.begin()->first;
    for (const auto& [mono, c] : terms_)
      if (lex_greater(mono, *best)) best = &mono;
    return *best;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
  }
  MultiPoly& operator*=(const Rat& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [mono, c] : terms_) c *= s;
    }
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) {
    for (auto& [mono, c] : a.terms_) c = -c;
    return a;
  }
  friend MultiPoly operator*(MultiPoly a, const Rat& s) { return a *= s; }
  friend MultiPoly operator*(const Rat& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly p;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) p.add_term(multiply(ma, mb), ca * cb);
    return p;
  }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly pow(unsigned e) const {
    MultiPoly result(1);
    MultiPoly base = *this;
    while (e > 0) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e > 0) base = base * base;
    }
    return result;
  }

  /// Ring homomorphism determined by the image of each variable.
  template <class F>
  MultiPoly substitute(F&& image) const {
    MultiPoly out;
    std::map<std::pair<VarId, unsigned>, MultiPoly> cache;
    for (const auto& [mono, c] : terms_) {
      MultiPoly t(c);
      for (const auto& [v, e] : mono) {
        auto key = std::make_pair(v, e);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, MultiPoly(image(v)).pow(e)).first;
        t = t * it->second;
      }
      out += t;
    }
    return out;
  }

  /// Exact value under the assignment `value(VarId) -> Rat`.
  template <class F>
  Rat evaluate_with(F&& value) const {
    Rat total = 0;
    std::map<VarId, Rat> cache;
    for (const auto& [mono, c] : terms_) {
      Rat t = c;
      for (const auto& [v, e] : mono) {
        auto it = cache.find(v);
        if (it == cache.end()) it = cache.emplace(v, value(v)).first;
        Rat pw;
        mpz_pow_ui(pw.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
        mpz_pow_ui(pw.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
        t *= pw;
      }
      total += t;
    }
    return total;
  }

  MultiPoly derivative(const VarId& v) const {
    MultiPoly out;
    for (const auto& [mono, c] : terms_) {
      auto it = std::find_if(mono.begin(), mono.end(), [&](const auto& p) { return p.first == v; });
      if (it == mono.end()) continue;
      Monomial reduced = mono;
      auto& slot = reduced[static_cast<std::size_t>(it - mono.begin())];
      const unsigned e = slot.second;
      if (--slot.second == 0) reduced.erase(reduced.begin() + (it - mono.begin()));
      out.add_term(reduced, c * e);
    }
    return out;
  }

  std::vector<VarId> variables() const {
    std::vector<VarId> vars;
    for (const auto& [mono, c] : terms_)
      for (const auto& [v, e] : mono) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
  }

  /// Human-readable form, terms in decreasing lex order, e.g. "a12*a34 - a13*a24".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const auto* x, const auto* y) { return lex_greater(x->first, y->first); });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
      Rat c = t->second;
      const bool neg = c < 0;
      if (neg) c = -c;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      const bool unit = c == 1 && !t->first.empty();
      if (!unit) os << c.get_str();
      bool sep = !unit;
      for (const auto& [v, e] : t->first) {
        os << (sep ? "*" : "") << v.str();
        if (e > 1) os << '^' << e;
        sep = true;
      }
    }
    return os.str();
  }

 private:
  Terms terms_;
};

/// a_ij as a polynomial with the skew convention: a_ji = -a_ij, a_ii = 0.
inline MultiPoly pair_var(std::size_t i, std::size_t j) {
  if (i == j) return {};
  if (i < j) return MultiPoly(VarId::pairwise(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)));
  return -MultiPoly(VarId::pairwise(static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(i)));
}

/// Rescales to coprime integer coefficients with a positive leading coefficient.
inline MultiPoly primitive_part(const MultiPoly& p) {
  if (p.is_zero()) return p;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& [mono, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rat factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (p.coefficient(p.leading_monomial()) < 0) factor = -factor;
  return p * factor;
}

/// Substitution of a Gram table into a polynomial in pairwise variables.
inline Rat evaluate(const MultiPoly& p, const GramTable& g) {
  return p.evaluate_with([&](const VarId& v) -> Rat {
    if (v.kind != VarId::Kind::Pairwise) throw InputError("cannot evaluate non-pairwise variable " + v.str());
    if (v.j > g.m()) throw InputError("variable " + v.str() + " outside table of size " + std::to_string(g.m()));
    return g.at(v.i, v.j);
  });
}

/// Element of a free module over the polynomial ring, with basis elements
/// indexed by index tuples (e.g. the b_ijkl generators).
class FreeModuleElt {
 public:
  using Components = std::map<IndexTuple, MultiPoly>;

  FreeModuleElt() = default;
  static FreeModuleElt basis(const IndexTuple& idx) {
    FreeModuleElt e;
    e.components_[idx] = MultiPoly(1);
    return e;
  }

  const Components& components() const noexcept { return components_; }

  void add(const IndexTuple& idx, const MultiPoly& coeff) {
    if (coeff.is_zero()) return;
    auto& slot = components_[idx];
    slot += coeff;
    if (slot.is_zero()) components_.erase(idx);
  }

  bool is_zero() const noexcept { return components_.empty(); }

  FreeModuleElt& operator+=(const FreeModuleElt& o) {
    for (const auto& [idx, c] : o.components_) add(idx, c);
    return *this;
  }
  friend FreeModuleElt operator+(FreeModuleElt a, const FreeModuleElt& b) { return a += b; }
  friend FreeModuleElt operator*(const MultiPoly& s, const FreeModuleElt& e) {
    FreeModuleElt out;
    for (const auto& [idx, c] : e.components_) out.add(idx, s * c);
    return out;
  }

  /// Image under the module map sending basis element idx to `image(idx)`.
  template <class F>
  MultiPoly expand(F&& image) const {
    MultiPoly out;
    for (const auto& [idx, c] : components_) out += c * image(idx);
    return out;
  }

 private:
  Components components_;
};

}  // namespace jointinv

#endif  // JOINTINV_POLY_HPP
