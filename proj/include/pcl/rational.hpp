#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace pcl {

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw error("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q".
inline Rational parse_rational(const std::string& s) {
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw error("cannot parse rational: '" + s + "'");
  }
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace pcl
