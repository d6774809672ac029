#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <string>

#include "gonbound/errors.hpp"

namespace gonbound {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(long long num, long long den = 1) {
  if (den == 0) throw validation_error("rational with zero denominator");
  return Rat(Int(num), Int(den));
}

/// Strict parser for "p", "-p" or "p/q" with decimal digits only.
inline Rat parse_rat(const std::string& text) {
  auto fail = [&] { throw validation_error("not a rational: '" + text + "'"); };
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = (text[i] == '-');
    ++i;
  }
  auto digits = [&](Int& out) {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail();
    out = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      out = out * 10 + (text[i] - '0');
      ++i;
    }
  };
  Int num, den = 1;
  digits(num);
  if (i < text.size() && text[i] == '/') {
    ++i;
    digits(den);
    if (den == 0) fail();
  }
  if (i != text.size()) fail();
  Rat r(num, den);
  return neg ? Rat(-r) : r;
}

inline std::string format_rat(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r); // always > 0, canonical
  Int q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline long to_long(const Int& i) { return i.convert_to<long>(); }

} // namespace gonbound
