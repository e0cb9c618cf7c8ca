#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <stdexcept>
#include <string>

#include "ordval/errors.hpp"

namespace ordval {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// floor(r * n) as an exact integer.
inline Int floor_scaled(const Rational& r, const Int& n) {
  Int num = numerator(r) * n;
  Int den = denominator(r);
  Int q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

/// ceil(r) as an exact integer.
inline Int ceil_rational(const Rational& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  Int q = num / den;
  if (num > 0 && q * den != num) ++q;
  return q;
}

/// Parses "p/q" or "p"; rejects zero denominators and junk.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
      throw ParseError("bad rational literal: " + s);
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator: " + s);
  return Rational(num, den);
}

/// Canonical "p/q" (or "p" when integral) in lowest terms.
inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace ordval
