#ifndef JOINTINV_RATIONAL_HPP
#define JOINTINV_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "jointinv/errors.hpp"

namespace jointinv {

/// Exact rational scalar. GMP keeps it in lowest terms with a positive
/// denominator after every arithmetic operation.
using Rat = mpq_class;
using Vector = std::vector<Rat>;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw InputError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "12", "-3/4" or a decimal such as "0.125" / "-2.5e-3" exactly.
inline Rat parse_rat(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InputError("empty rational literal");

  auto parse_int = [&](const std::string& digits) {
    mpz_class z;
    if (digits.empty() || z.set_str(digits, 10) != 0)
      throw InputError("invalid rational literal '" + std::string(text) + "'");
    return z;
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpz_class num = parse_int(s.substr(0, slash));
    mpz_class den = parse_int(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

  std::string mantissa = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    mantissa = s.substr(0, e);
    try {
      exponent = std::stol(s.substr(e + 1));
    } catch (const std::exception&) {
      throw InputError("invalid exponent in '" + std::string(text) + "'");
    }
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    mantissa.erase(0, 1);
  }
  std::string digits = mantissa;
  if (auto dot = mantissa.find('.'); dot != std::string::npos) {
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
    if (digits.empty()) throw InputError("invalid rational literal '" + std::string(text) + "'");
  }
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InputError("invalid rational literal '" + std::string(text) + "'");

  mpz_class num = parse_int(digits);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rat r = exponent < 0 ? Rat(num, scale) : Rat(num * scale);
  r.canonicalize();
  return negative ? Rat(-r) : r;
}

/// Always "p/q", including q = 1, so that serialized values are uniform.
inline std::string to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline int sign(const Rat& r) { return sgn(r); }

}  // namespace jointinv

#endif  // JOINTINV_RATIONAL_HPP
