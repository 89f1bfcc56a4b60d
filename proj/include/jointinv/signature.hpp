#ifndef JOINTINV_SIGNATURE_HPP
#define JOINTINV_SIGNATURE_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "jointinv/errors.hpp"
#include "jointinv/invariants.hpp"
#include "jointinv/rational.hpp"

namespace jointinv {

enum class Group { Sp, CSp, ASp, Contact };

inline std::string to_string(Group g) {
  switch (g) {
    case Group::Sp: return "sp";
    case Group::CSp: return "csp";
    case Group::ASp: return "asp";
    case Group::Contact: return "contact";
  }
  return {};
}

inline Group parse_group(const std::string& s) {
  if (s == "sp") return Group::Sp;
  if (s == "csp") return Group::CSp;
  if (s == "asp") return Group::ASp;
  if (s == "contact") return Group::Contact;
  throw InputError("unknown group '" + s + "' (expected sp, csp, asp or contact)");
}

/// Ordered values of a generating set of invariants; two generic
/// configurations are equivalent iff their signatures are equal.
struct Signature {
  Group group = Group::Sp;
  std::vector<Rat> values;

  friend bool operator==(const Signature&, const Signature&) = default;
};

struct GenericityReport {
  bool generic = true;
  std::vector<std::string> failed_predicates;
};

inline std::string chain_predicate_name(std::size_t k) {
  if (k == 1) return "a12 = 0";
  if (k == 2) return "b1234 = 0";
  return "chain Pfaffian b_{1.." + std::to_string(2 * k) + "} = 0";
}

/// Non-vanishing of the leading chain Pfaffians Pf(a_{pq})_{p,q <= 2k} for
/// every k <= n with 2k <= m.
inline GenericityReport table_genericity(const GramTable& g, std::size_t n) {
  GenericityReport r;
  for (std::size_t k = 1; k <= n && 2 * k <= g.m(); ++k) {
    IndexTuple idx(2 * k);
    std::iota(idx.begin(), idx.end(), 1);
    if (pfaffian(g.restrict_to(idx)) == 0) r.failed_predicates.push_back(chain_predicate_name(k));
  }
  r.generic = r.failed_predicates.empty();
  return r;
}

inline void require_generic(const GenericityReport& r) {
  if (!r.generic) throw GenericityError(r.failed_predicates.front());
}

}  // namespace jointinv

#endif  // JOINTINV_SIGNATURE_HPP
